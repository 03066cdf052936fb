//! Reduction modulo the circle ideal `⟨α₁² + α₂² − 1⟩`.
//!
//! Every polynomial is congruent to exactly one `ρ(α₁) + α₂·ω(α₁)`. The
//! rewrite is closed-form: `α₂^l = α₂^(l mod 2)·(1 − α₁²)^⌊l/2⌋` modulo the
//! ideal, expanded binomially.

use num_bigint::BigInt;

use crate::coeff::{int, Field, Rational};
use crate::poly::{AffinePoint, Monomial, Polynomial};

/// The remainder `ρ(α₁) + α₂·ω(α₁)`; both parts only involve `α₁`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm<F> {
    pub rho: Polynomial<F>,
    pub omega: Polynomial<F>,
}

impl<F: Field> CanonicalForm<F> {
    pub fn is_zero(&self) -> bool {
        self.rho.is_zero() && self.omega.is_zero()
    }

    /// The bivariate polynomial `ρ + α₂·ω`.
    pub fn embed(&self) -> Polynomial<F> {
        let mut out = self.rho.clone();
        for (m, c) in self.omega.terms() {
            out.add_term(Monomial::new(m.k, m.l + 1), c.clone());
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            rho: self.rho.add(&other.rho),
            omega: self.omega.add(&other.omega),
        }
    }
}

pub fn canonicalize<F: Field>(p: &Polynomial<F>) -> CanonicalForm<F> {
    let mut rho = Polynomial::zero();
    let mut omega = Polynomial::zero();
    for (m, c) in p.terms() {
        let half = m.l / 2;
        let target = if m.l % 2 == 0 { &mut rho } else { &mut omega };
        // (1 − α₁²)^half = Σ_j (−1)^j C(half, j) α₁^(2j)
        let mut binom = BigInt::from(1);
        for j in 0..=half {
            let mut term = c.clone() * c.embed_bigint(&binom);
            if j % 2 == 1 {
                term = -term;
            }
            target.add_term(Monomial::new(m.k + 2 * j, 0), term);
            binom = binom * BigInt::from(half - j) / BigInt::from(j + 1);
        }
    }
    CanonicalForm { rho, omega }
}

/// Whether `p` lies in `⟨α₁² + α₂² − 1⟩`.
pub fn is_ideal_member<F: Field>(p: &Polynomial<F>) -> bool {
    canonicalize(p).is_zero()
}

/// The rational point `[(1−u²)/(1+u²), 2u/(1+u²)]` on the unit circle.
pub fn circle_point(u: &Rational) -> AffinePoint<Rational> {
    let one = int(1);
    let u2 = u * u;
    let denom = (&one + &u2).recip();
    AffinePoint::new((&one - &u2) * &denom, int(2) * u * &denom)
}

/// Sample points of the unit circle: `u = 1..=count` and `[−1, 0]`.
pub fn sample_points(count: u32) -> Vec<AffinePoint<Rational>> {
    let mut pts: Vec<_> = (1..=count as i64).map(|u| circle_point(&int(u))).collect();
    pts.push(AffinePoint::new(int(-1), int(0)));
    pts
}

/// Whether `p` vanishes at every point of [`sample_points`]`(count)`.
pub fn vanishes_on_sample(p: &Polynomial<Rational>, count: u32) -> bool {
    sample_points(count)
        .iter()
        .all(|pt| p.evaluate(pt).is_zero_elem())
}
