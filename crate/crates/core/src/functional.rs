//! The circular integral functional.
//!
//! `ψ` is the unique linear functional on `Q[α₁, α₂]` that sends `1` to `1`,
//! kills the ideal of the unit circle and is invariant under `SO(2, Q)`.
//! Its values on monomials are derived here from those three properties
//! alone: invariance forces `ψ(α₁^(2m−1)α₂) = 0` and the first-order
//! recurrence `2m·ψ(α₁^(2m)) = (2m−1)·ψ(α₁^(2m−2))`, and locality then
//! rewrites `α₂^(2n)` as `(1 − α₁²)^n`. The result equals `Ω(m, n)`, which
//! [`crate::supercat`] computes from factorials instead.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::coeff::{int, Rational};
use crate::poly::{Polynomial, Rotation};
use crate::random::{random_nonzero_int, random_polynomial, seeded};
use crate::reduce::canonicalize;
use crate::supercat::binomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FunctionalError {
    #[error("circle radius must be nonzero")]
    ZeroRadius,
}

/// The circle `(x − a)² + (y − b)² = r²` with `r ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircleSpec {
    center_a: Rational,
    center_b: Rational,
    radius: Rational,
}

impl CircleSpec {
    pub fn new(
        radius: Rational,
        center_a: Rational,
        center_b: Rational,
    ) -> Result<Self, FunctionalError> {
        if radius.is_zero() {
            return Err(FunctionalError::ZeroRadius);
        }
        Ok(Self {
            center_a,
            center_b,
            radius,
        })
    }

    pub fn unit() -> Self {
        Self {
            center_a: int(0),
            center_b: int(0),
            radius: int(1),
        }
    }

    pub fn centered(radius: Rational) -> Result<Self, FunctionalError> {
        Self::new(radius, int(0), int(0))
    }

    pub fn center(&self) -> (&Rational, &Rational) {
        (&self.center_a, &self.center_b)
    }

    pub fn radius(&self) -> &Rational {
        &self.radius
    }

    /// `(α₁ − a)² + (α₂ − b)² − r²`, which generates the circle's ideal.
    pub fn generator(&self) -> Polynomial<Rational> {
        let x = Polynomial::alpha1().sub(&Polynomial::constant(self.center_a.clone()));
        let y = Polynomial::alpha2().sub(&Polynomial::constant(self.center_b.clone()));
        x.mul(&x)
            .add(&y.mul(&y))
            .sub(&Polynomial::constant(&self.radius * &self.radius))
    }
}

/// Values `ψ(α₁^(2j))` for `j = 0..=max_half_degree`, from the recurrence.
#[derive(Debug, Clone)]
pub struct MomentTable {
    even_powers: Vec<Rational>,
}

impl MomentTable {
    pub fn new(max_half_degree: u32) -> Self {
        let mut even_powers = Vec::with_capacity(max_half_degree as usize + 1);
        even_powers.push(Rational::one());
        for m in 1..=max_half_degree as i64 {
            let prev = even_powers.last().expect("nonempty").clone();
            even_powers.push(prev * Rational::new(BigInt::from(2 * m - 1), BigInt::from(2 * m)));
        }
        Self { even_powers }
    }

    /// Table large enough for every monomial of `p`.
    pub fn for_polynomial(p: &Polynomial<Rational>) -> Self {
        Self::new(p.degree().unwrap_or(0) / 2)
    }

    fn ensure(&mut self, half: u32) {
        if self.even_powers.len() <= half as usize {
            *self = Self::new(half.max(2 * self.even_powers.len() as u32));
        }
    }

    /// `ψ(α₁^k α₂^l)`.
    pub fn value(&mut self, k: u32, l: u32) -> Rational {
        if k % 2 == 1 || l % 2 == 1 {
            return Rational::zero();
        }
        let (m, n) = (k / 2, l / 2);
        self.ensure(m + n);
        // ψ(α₁^(2m) α₂^(2n)) = Σ_s (−1)^s C(n, s) ψ(α₁^(2m+2s))
        let mut acc = Rational::zero();
        for s in 0..=n {
            let term = &self.even_powers[(m + s) as usize] * Rational::from_integer(binomial(n, s));
            if s % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }
}

/// `ψ(α₁^k α₂^l)`: `Ω(k/2, l/2)` when both exponents are even, else `0`.
pub fn psi_monomial(k: u32, l: u32) -> Rational {
    MomentTable::new((k + l) / 2).value(k, l)
}

/// `ψ` on the unit circle, extended linearly.
pub fn psi(p: &Polynomial<Rational>) -> Rational {
    let mut table = MomentTable::for_polynomial(p);
    p.terms()
        .map(|(m, c)| c * table.value(m.k, m.l))
        .fold(Rational::zero(), |acc, x| acc + x)
}

/// `ψ` through the canonical form: `ψ(ρ + α₂ω) = ψ(ρ)`.
pub fn psi_via_canonical(p: &Polynomial<Rational>) -> Rational {
    psi(&canonicalize(p).rho)
}

/// `ψ_{r,[a,b]}(α₁^k α₂^l) = r·ψ((a + rα₁)^k (b + rα₂)^l)`, extended linearly.
pub fn psi_general(circle: &CircleSpec, p: &Polynomial<Rational>) -> Rational {
    let (a, b) = circle.center();
    let r = circle.radius();
    let mut table = MomentTable::for_polynomial(p);
    let mut total = Rational::zero();
    for (mono, c) in p.terms() {
        let first = shifted_power(a, r, mono.k);
        let second = shifted_power(b, r, mono.l);
        let mut inner = Rational::zero();
        for (i, x) in first.iter().enumerate().step_by(2) {
            for (j, y) in second.iter().enumerate().step_by(2) {
                inner += x * y * table.value(i as u32, j as u32);
            }
        }
        total += c * inner;
    }
    total * r
}

/// Coefficients of `(center + radius·α)^n` indexed by the power of `α`.
fn shifted_power(center: &Rational, radius: &Rational, n: u32) -> Vec<Rational> {
    (0..=n)
        .map(|i| {
            Rational::from_integer(binomial(n, i))
                * num_traits::pow(center.clone(), (n - i) as usize)
                * num_traits::pow(radius.clone(), i as usize)
        })
        .collect()
}

/// Pass/fail tally for one axiom.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CheckTally {
    pub trials: usize,
    pub failures: Vec<String>,
}

impl CheckTally {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn merge(&mut self, other: CheckTally) {
        self.trials += other.trials;
        self.failures.extend(other.failures);
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub seed: u64,
    pub max_degree: u32,
    pub normalization: CheckTally,
    pub locality: CheckTally,
    pub invariance: CheckTally,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.normalization.passed() && self.locality.passed() && self.invariance.passed()
    }
}

/// Checks Normalization once, Locality on `trials` products
/// `(α₁² + α₂² − 1)·q`, and Invariance on `trials` pairs `(h_u, p)` plus
/// `−I` on each `p`. Inputs come from a seeded generator; the checks run
/// on worker threads and the report is identical for a given seed.
pub fn verify_axioms(trials: usize, max_degree: u32, seed: u64) -> AxiomReport {
    let mut rng = seeded(seed);
    let locality_inputs: Vec<_> = (0..trials)
        .map(|_| random_polynomial(&mut rng, max_degree))
        .collect();
    let invariance_inputs: Vec<_> = (0..trials)
        .map(|_| {
            (
                random_nonzero_int(&mut rng, 100),
                random_polynomial(&mut rng, max_degree),
            )
        })
        .collect();

    let mut normalization = CheckTally {
        trials: 1,
        failures: vec![],
    };
    let one = psi(&Polynomial::one());
    if one != int(1) {
        normalization.failures.push(format!("psi(1) = {one}"));
    }

    let generator = Polynomial::circle_generator();
    let locality = run_parallel(&locality_inputs, |q| {
        let value = psi(&generator.mul(q));
        (!value.is_zero()).then(|| {
            format!(
                "psi(circle * q) = {value} for q with {} terms",
                q.num_terms()
            )
        })
    });

    let minus = Rotation::minus_identity(&int(1));
    let invariance = run_parallel(&invariance_inputs, |(u, p)| {
        let h = Rotation::param(int(*u)).expect("1 + u^2 > 0 over Q");
        let before = psi(p);
        let rotated = psi(&p.act(&h));
        let flipped = psi(&p.act(&minus));
        if rotated != before {
            Some(format!("u = {u}: psi(h.p) = {rotated}, psi(p) = {before}"))
        } else if flipped != before {
            Some(format!("-I: psi(h.p) = {flipped}, psi(p) = {before}"))
        } else {
            None
        }
    });

    AxiomReport {
        seed,
        max_degree,
        normalization,
        locality,
        invariance,
    }
}

/// Applies `check` to every input across scoped threads; chunk results are
/// joined in input order.
fn run_parallel<T: Sync, C>(inputs: &[T], check: C) -> CheckTally
where
    C: Fn(&T) -> Option<String> + Sync,
{
    let workers = std::thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(8);
    let chunk = inputs.len().div_ceil(workers).max(1);
    let check = &check;
    let partials: Vec<CheckTally> = std::thread::scope(|scope| {
        let handles: Vec<_> = inputs
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || CheckTally {
                    trials: part.len(),
                    failures: part.iter().filter_map(check).collect(),
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("axiom worker panicked"))
            .collect()
    });
    let mut total = CheckTally::default();
    for part in partials {
        total.merge(part);
    }
    total
}
