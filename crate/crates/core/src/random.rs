//! Seeded generators for test inputs.
//!
//! Coefficients are rationals `n/d` with `n ∈ [−9, 9]`, `d ∈ [1, 9]`. A
//! random polynomial first draws its degree uniformly from `0..=max_degree`,
//! then a handful of monomials of at most that degree.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coeff::{rational, Rational};
use crate::poly::{Monomial, Polynomial};

/// Maximum number of monomials drawn for one random polynomial.
pub const MAX_TERMS: usize = 8;

pub type SeededRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    rational(rng.random_range(-9..=9), rng.random_range(1..=9))
}

pub fn random_nonzero_rational<R: Rng>(rng: &mut R) -> Rational {
    loop {
        let x = random_rational(rng);
        if x != rational(0, 1) {
            return x;
        }
    }
}

/// A nonzero integer with `1 ≤ |u| ≤ bound`.
pub fn random_nonzero_int<R: Rng>(rng: &mut R, bound: i64) -> i64 {
    let u = rng.random_range(1..=bound);
    if rng.random_bool(0.5) {
        u
    } else {
        -u
    }
}

pub fn random_polynomial<R: Rng>(rng: &mut R, max_degree: u32) -> Polynomial<Rational> {
    let degree = rng.random_range(0..=max_degree);
    let count = rng.random_range(1..=MAX_TERMS);
    let mut p = Polynomial::zero();
    for _ in 0..count {
        let total = rng.random_range(0..=degree);
        let k = rng.random_range(0..=total);
        p.add_term(Monomial::new(k, total - k), random_rational(rng));
    }
    p
}
