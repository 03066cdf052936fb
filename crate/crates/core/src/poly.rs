//! Sparse polynomials in two variables `α₁, α₂`, the evaluation map, and
//! the substitution action of 2×2 matrices and rotations.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::coeff::{Field, Rational};

/// Exponent pair `α₁^k α₂^l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub k: u32,
    pub l: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { k: 0, l: 0 };

    pub fn new(k: u32, l: u32) -> Self {
        Self { k, l }
    }

    pub fn degree(&self) -> u32 {
        self.k + self.l
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::new(self.k + other.k, self.l + other.l)
    }

    /// `Some(self / other)` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        Some(Monomial::new(
            self.k.checked_sub(other.k)?,
            self.l.checked_sub(other.l)?,
        ))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a1^{}*a2^{}", self.k, self.l)
    }
}

/// A polynomial as a map from exponent pairs to nonzero coefficients.
///
/// The zero polynomial has no terms. Equality is structural, which is
/// exact because zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial<F> {
    terms: BTreeMap<Monomial, F>,
}

impl<F> Default for Polynomial<F> {
    fn default() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }
}

impl<F: Field> Polynomial<F> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(Monomial::ONE, c)
    }

    pub fn monomial(m: Monomial, c: F) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, F)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// `α₁² + α₂² − 1` over the field of `unit`.
    pub fn circle_generator_in(unit: &F) -> Self {
        let one = unit.one_like();
        Self::from_terms([
            (Monomial::new(2, 0), one.clone()),
            (Monomial::new(0, 2), one.clone()),
            (Monomial::ONE, -one),
        ])
    }

    /// Adds `c·m` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero_elem() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero_elem() {
                    self.terms.insert(m, sum);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending `(k, l)` order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, F)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, m: Monomial) -> Option<&F> {
        self.terms.get(&m)
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Highest power of `α₂` present, `None` for the zero polynomial.
    pub fn degree_in_alpha2(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.l).max()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero_elem() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (*m, x.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: Monomial, c: &F) -> Self {
        if c.is_zero_elem() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(mm, x)| (mm.mul(&m), x.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32, unit: &F) -> Self {
        let mut acc = Self::constant(unit.one_like());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// The evaluation map: value of the polynomial at `pt`.
    pub fn evaluate(&self, pt: &AffinePoint<F>) -> F {
        let mut acc = pt.x.zero_like();
        for (m, c) in &self.terms {
            acc = acc + c.clone() * pt.x.pow(m.k as u64) * pt.y.pow(m.l as u64);
        }
        acc
    }

    /// Substitutes `α₁ ↦ m₁₁α₁ + m₂₁α₂`, `α₂ ↦ m₁₂α₁ + m₂₂α₂`.
    ///
    /// Each monomial is expanded with binomial coefficients, so every output
    /// term coming from `α₁^k α₂^l` has total degree `k + l`.
    pub fn act_matrix(&self, h: &Matrix2<F>) -> Self {
        let [[h11, h12], [h21, h22]] = &h.m;
        let mut out = Self::zero();
        for (mono, c) in &self.terms {
            let first = linear_form_power(h11, h21, mono.k);
            let second = linear_form_power(h12, h22, mono.l);
            for (i, a) in first.iter().enumerate() {
                if a.is_zero_elem() {
                    continue;
                }
                for (j, b) in second.iter().enumerate() {
                    if b.is_zero_elem() {
                        continue;
                    }
                    let m = Monomial::new(i as u32 + j as u32, mono.degree() - i as u32 - j as u32);
                    out.add_term(m, c.clone() * a.clone() * b.clone());
                }
            }
        }
        out
    }

    /// Left action of a rotation on polynomials.
    pub fn act(&self, h: &Rotation<F>) -> Self {
        match &h.kind {
            RotationKind::MinusIdentity { .. } => Self {
                terms: self
                    .terms
                    .iter()
                    .map(|(m, c)| {
                        let c = if m.degree() % 2 == 1 {
                            -c.clone()
                        } else {
                            c.clone()
                        };
                        (*m, c)
                    })
                    .collect(),
            },
            RotationKind::Param { .. } => self.act_matrix(&h.matrix()),
        }
    }

    /// Multivariate division by a single divisor under the lexicographic
    /// order with `α₁ > α₂`. Returns `(quotient, remainder)` with
    /// `self = quotient·divisor + remainder` and no term of the remainder
    /// divisible by the leading monomial of the divisor.
    pub fn div_rem_lex(&self, divisor: &Self) -> Result<(Self, Self), PolyError> {
        let (lead_m, lead_c) = divisor
            .terms
            .iter()
            .next_back()
            .map(|(m, c)| (*m, c.clone()))
            .ok_or(PolyError::DivisionByZeroPolynomial)?;
        let lead_inv = lead_c.inverse().expect("nonzero leading coefficient");
        let mut quotient = Self::zero();
        let mut remainder = Self::zero();
        let mut work = self.clone();
        // BTreeMap order on (k, l) is exactly lex with α₁ > α₂.
        while let Some((m, c)) = work.terms.iter().next_back().map(|(m, c)| (*m, c.clone())) {
            match m.checked_div(&lead_m) {
                Some(shift) => {
                    let factor = c * lead_inv.clone();
                    work = work.sub(&divisor.mul_monomial(shift, &factor));
                    quotient.add_term(shift, factor);
                }
                None => {
                    work.terms.remove(&m);
                    remainder.add_term(m, c);
                }
            }
        }
        Ok((quotient, remainder))
    }
}

/// Coefficients of `(a·α₁ + b·α₂)^n`, indexed by the power of `α₁`.
fn linear_form_power<F: Field>(a: &F, b: &F, n: u32) -> Vec<F> {
    let n = n as usize;
    let mut out = Vec::with_capacity(n + 1);
    let mut binom = BigInt::from(1);
    for i in 0..=n {
        // α₁^i α₂^(n-i) has coefficient C(n, i) a^i b^(n-i).
        let c = a.embed_bigint(&binom) * a.pow(i as u64) * b.pow((n - i) as u64);
        out.push(c);
        binom = binom * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    out
}

impl Polynomial<Rational> {
    pub fn one() -> Self {
        Self::constant(Rational::from_integer(1.into()))
    }

    pub fn alpha1() -> Self {
        Self::monomial(Monomial::new(1, 0), Rational::from_integer(1.into()))
    }

    pub fn alpha2() -> Self {
        Self::monomial(Monomial::new(0, 1), Rational::from_integer(1.into()))
    }

    /// `α₁² + α₂² − 1`.
    pub fn circle_generator() -> Self {
        Self::circle_generator_in(&Rational::from_integer(1.into()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("rotation parameter u = {0} has 1 + u^2 = 0")]
    DegenerateRotation(String),
    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,
}

/// A point `[x, y]` of the affine plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffinePoint<F> {
    pub x: F,
    pub y: F,
}

impl<F: Field> AffinePoint<F> {
    pub fn new(x: F, y: F) -> Self {
        Self { x, y }
    }

    /// The quadratic form `x² + y²`.
    pub fn norm_squared(&self) -> F {
        self.x.clone() * self.x.clone() + self.y.clone() * self.y.clone()
    }

    /// Right action `[x₁, x₂]·h = [h₁₁x₁ + h₂₁x₂, h₁₂x₁ + h₂₂x₂]`.
    pub fn act_matrix(&self, h: &Matrix2<F>) -> Self {
        let [[h11, h12], [h21, h22]] = &h.m;
        Self {
            x: h11.clone() * self.x.clone() + h21.clone() * self.y.clone(),
            y: h12.clone() * self.x.clone() + h22.clone() * self.y.clone(),
        }
    }

    pub fn act(&self, h: &Rotation<F>) -> Self {
        self.act_matrix(&h.matrix())
    }
}

/// A 2×2 matrix, row-major: `m[i][j]` is the entry `h_{i+1, j+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix2<F> {
    pub m: [[F; 2]; 2],
}

impl<F: Field> Matrix2<F> {
    pub fn new(h11: F, h12: F, h21: F, h22: F) -> Self {
        Self {
            m: [[h11, h12], [h21, h22]],
        }
    }

    pub fn identity(unit: &F) -> Self {
        let (o, z) = (unit.one_like(), unit.zero_like());
        Self::new(o.clone(), z.clone(), z, o)
    }

    pub fn transpose(&self) -> Self {
        let [[a, b], [c, d]] = self.m.clone();
        Self::new(a, c, b, d)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let a = &self.m;
        let b = &rhs.m;
        let e = |i: usize, j: usize| {
            a[i][0].clone() * b[0][j].clone() + a[i][1].clone() * b[1][j].clone()
        };
        Self::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }

    pub fn det(&self) -> F {
        let [[a, b], [c, d]] = &self.m;
        a.clone() * d.clone() - b.clone() * c.clone()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(&self.m[0][0])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum RotationKind<F> {
    MinusIdentity { unit: F },
    Param { u: F },
}

/// An element of `SO(2, F)`: either `h_u` for `1 + u² ≠ 0` or `−I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rotation<F> {
    kind: RotationKind<F>,
}

impl<F: Field> Rotation<F> {
    /// `h_u = (1/(1+u²))·[[1−u², −2u], [2u, 1−u²]]`.
    pub fn param(u: F) -> Result<Self, PolyError> {
        let denom = u.one_like() + u.clone() * u.clone();
        if denom.is_zero_elem() {
            return Err(PolyError::DegenerateRotation(u.to_string()));
        }
        Ok(Self {
            kind: RotationKind::Param { u },
        })
    }

    /// `−I` over the field containing `unit`.
    pub fn minus_identity(unit: &F) -> Self {
        Self {
            kind: RotationKind::MinusIdentity {
                unit: unit.one_like(),
            },
        }
    }

    pub fn identity(unit: &F) -> Self {
        Self {
            kind: RotationKind::Param {
                u: unit.zero_like(),
            },
        }
    }

    /// The parameter `u`, or `None` for `−I`.
    pub fn parameter(&self) -> Option<&F> {
        match &self.kind {
            RotationKind::Param { u } => Some(u),
            RotationKind::MinusIdentity { .. } => None,
        }
    }

    pub fn is_minus_identity(&self) -> bool {
        matches!(self.kind, RotationKind::MinusIdentity { .. })
    }

    pub fn matrix(&self) -> Matrix2<F> {
        match &self.kind {
            RotationKind::MinusIdentity { unit } => {
                let z = unit.zero_like();
                Matrix2::new(-unit.clone(), z.clone(), z, -unit.clone())
            }
            RotationKind::Param { u } => {
                let one = u.one_like();
                let two = u.embed_i64(2);
                let inv = (one.clone() + u.clone() * u.clone())
                    .inverse()
                    .expect("1 + u^2 checked at construction");
                let diag = (one - u.clone() * u.clone()) * inv.clone();
                let off = two * u.clone() * inv;
                Matrix2::new(diag.clone(), -off.clone(), off, diag)
            }
        }
    }

    /// The rotation `self·other`. Half-angle tangents add as
    /// `(u + v)/(1 − uv)`; `uv = 1` lands on `−I`.
    pub fn compose(&self, other: &Self) -> Self {
        match (&self.kind, &other.kind) {
            (RotationKind::MinusIdentity { unit }, RotationKind::MinusIdentity { .. }) => {
                Self::identity(unit)
            }
            (RotationKind::MinusIdentity { .. }, RotationKind::Param { u })
            | (RotationKind::Param { u }, RotationKind::MinusIdentity { .. }) => {
                if u.is_zero_elem() {
                    Self::minus_identity(u)
                } else {
                    let w = -u.inverse().expect("nonzero");
                    Self::param(w).expect("rotation group is closed")
                }
            }
            (RotationKind::Param { u }, RotationKind::Param { u: v }) => {
                let denom = u.one_like() - u.clone() * v.clone();
                if denom.is_zero_elem() {
                    Self::minus_identity(u)
                } else {
                    let w = (u.clone() + v.clone()) * denom.inverse().expect("nonzero");
                    Self::param(w).expect("rotation group is closed")
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::{int, rational, PrimeField};
    use proptest::prelude::*;

    fn x() -> Polynomial<Rational> {
        Polynomial::alpha1()
    }

    fn y() -> Polynomial<Rational> {
        Polynomial::alpha2()
    }

    fn mono(k: u32, l: u32) -> Polynomial<Rational> {
        Polynomial::monomial(Monomial::new(k, l), int(1))
    }

    #[test]
    fn difference_of_squares() {
        let one = Polynomial::one();
        let p = x().add(&one).mul(&x().sub(&one));
        assert_eq!(p, mono(2, 0).sub(&one));
        assert_eq!(p.add(&Polynomial::zero()), p);
    }

    #[test]
    fn zero_polynomial_has_no_degree() {
        let z = Polynomial::<Rational>::zero();
        assert_eq!(z.degree(), None);
        assert!(x().sub(&x()).is_zero());
        assert_eq!(x().scale(&int(0)), z);
        assert_eq!(mono(3, 4).degree(), Some(7));
    }

    #[test]
    fn evaluation_examples() {
        let pt = AffinePoint::new(rational(3, 5), rational(4, 5));
        assert_eq!(mono(2, 0).add(&mono(0, 2)).evaluate(&pt), int(1));
        assert_eq!(Polynomial::one().evaluate(&pt), int(1));
        assert_eq!(
            mono(1, 1).evaluate(&AffinePoint::new(int(0), int(1))),
            int(0)
        );
    }

    #[test]
    fn rotation_matrix_examples() {
        let unit = int(1);
        assert!(Rotation::identity(&unit).matrix().is_identity());
        assert!(Rotation::param(int(0)).unwrap().matrix().is_identity());
        assert_eq!(
            Rotation::param(int(1)).unwrap().matrix(),
            Matrix2::new(int(0), int(-1), int(1), int(0))
        );
        assert_eq!(
            Rotation::minus_identity(&unit).matrix(),
            Matrix2::new(int(-1), int(0), int(0), int(-1))
        );
    }

    #[test]
    fn degenerate_rotation_rejected_mod_p() {
        // 2² = 4 ≡ −1 (mod 5)
        let f5 = PrimeField::new(5).unwrap();
        assert!(matches!(
            Rotation::param(f5.element(2)),
            Err(PolyError::DegenerateRotation(_))
        ));
        assert!(Rotation::param(f5.element(1)).is_ok());
    }

    #[test]
    fn act_examples() {
        let quarter = Rotation::param(int(1)).unwrap();
        assert_eq!(x().act(&quarter), y());
        assert_eq!(Polynomial::one().act(&quarter), Polynomial::one());
        let minus = Rotation::minus_identity(&int(1));
        for (k, l) in [(0, 0), (1, 0), (2, 1), (3, 3), (0, 5)] {
            let sign = if (k + l) % 2 == 0 { 1 } else { -1 };
            assert_eq!(mono(k, l).act(&minus), mono(k, l).scale(&int(sign)));
            assert_eq!(
                mono(k, l).act_matrix(&minus.matrix()),
                mono(k, l).act(&minus)
            );
        }
    }

    #[test]
    fn act_point_examples() {
        let quarter = Rotation::param(int(1)).unwrap();
        // [x₁, x₂]·h = [h₁₁x₁ + h₂₁x₂, h₁₂x₁ + h₂₂x₂] with h₁₂ = −1
        let p = AffinePoint::new(int(1), int(0));
        assert_eq!(p.act(&quarter), AffinePoint::new(int(0), int(-1)));
        assert_eq!(
            AffinePoint::new(int(0), int(1)).act(&quarter),
            AffinePoint::new(int(1), int(0))
        );
        let q = AffinePoint::new(rational(2, 3), int(-5));
        assert_eq!(
            q.act(&Rotation::minus_identity(&int(1))),
            AffinePoint::new(rational(-2, 3), int(5))
        );
    }

    #[test]
    fn division_by_circle_generator() {
        let g = Polynomial::circle_generator();
        let q = mono(5, 0).sub(&y().scale(&int(3)));
        let (quot, rem) = g.mul(&q).div_rem_lex(&g).unwrap();
        assert!(rem.is_zero());
        assert_eq!(quot, q);
        let (_, rem) = x().div_rem_lex(&g).unwrap();
        assert_eq!(rem, x());
        assert_eq!(
            x().div_rem_lex(&Polynomial::zero()),
            Err(PolyError::DivisionByZeroPolynomial)
        );
    }

    pub(crate) fn arb_poly(max_deg: u32) -> impl Strategy<Value = Polynomial<Rational>> {
        prop::collection::vec((0..=max_deg, 0..=max_deg, -9i64..=9, 1i64..=9), 0..6).prop_map(
            move |ts| {
                Polynomial::from_terms(
                    ts.into_iter()
                        .filter(|(k, l, _, _)| k + l <= max_deg)
                        .map(|(k, l, n, d)| (Monomial::new(k, l), rational(n, d))),
                )
            },
        )
    }

    fn arb_u() -> impl Strategy<Value = Rational> {
        (-20i64..=20, 1i64..=7).prop_map(|(n, d)| rational(n, d))
    }

    fn arb_rotation() -> impl Strategy<Value = Rotation<Rational>> {
        prop_oneof![
            4 => arb_u().prop_map(|u| Rotation::param(u).unwrap()),
            1 => Just(Rotation::minus_identity(&int(1))),
        ]
    }

    fn arb_point() -> impl Strategy<Value = AffinePoint<Rational>> {
        (arb_u(), arb_u()).prop_map(|(a, b)| AffinePoint::new(a, b))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(5), b in arb_poly(5), c in arb_poly(5)) {
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert!(a.sub(&a).is_zero());
            prop_assert_eq!(a.add(&a.neg()), Polynomial::zero());
        }

        #[test]
        fn evaluation_is_a_ring_homomorphism(a in arb_poly(5), b in arb_poly(5), pt in arb_point()) {
            prop_assert_eq!(a.mul(&b).evaluate(&pt), a.evaluate(&pt) * b.evaluate(&pt));
            prop_assert_eq!(a.add(&b).evaluate(&pt), a.evaluate(&pt) + b.evaluate(&pt));
        }

        #[test]
        fn rotation_matrices_are_orthogonal(h in arb_rotation()) {
            let m = h.matrix();
            prop_assert!(m.transpose().mul(&m).is_identity());
            prop_assert_eq!(m.det(), int(1));
        }

        #[test]
        fn action_respects_evaluation(h in arb_rotation(), p in arb_poly(6), pt in arb_point()) {
            prop_assert_eq!(p.act(&h).evaluate(&pt), p.evaluate(&pt.act(&h)));
        }

        #[test]
        fn act_point_preserves_quadratic_form(h in arb_rotation(), pt in arb_point()) {
            prop_assert_eq!(pt.act(&h).norm_squared(), pt.norm_squared());
        }

        #[test]
        fn action_is_a_left_group_action(h1 in arb_rotation(), h2 in arb_rotation(), p in arb_poly(5)) {
            let composed = h1.compose(&h2);
            prop_assert_eq!(composed.matrix(), h1.matrix().mul(&h2.matrix()));
            prop_assert_eq!(p.act(&h2).act(&h1), p.act(&composed));
            prop_assert_eq!(p.act(&Rotation::identity(&int(1))), p);
        }

        #[test]
        fn action_preserves_degree_of_monomials(h in arb_rotation(), k in 0u32..10, l in 0u32..10) {
            for (m, _) in mono(k, l).act(&h).terms() {
                prop_assert_eq!(m.degree(), k + l);
            }
        }

        #[test]
        fn action_respects_evaluation_mod_p(
            u in 0i64..101, coeffs in prop::collection::vec((0u32..5, 0u32..5, 0i64..101), 0..6),
            px in 0i64..101, py in 0i64..101,
        ) {
            let f = PrimeField::new(101).unwrap();
            let h = Rotation::param(f.element(u));
            // 101 ≡ 1 (mod 4) so some u are degenerate.
            prop_assume!(h.is_ok());
            let h = h.unwrap();
            let p = Polynomial::from_terms(coeffs.into_iter().map(|(k, l, c)| (Monomial::new(k, l), f.element(c))));
            let pt = AffinePoint::new(f.element(px), f.element(py));
            prop_assert_eq!(p.act(&h).evaluate(&pt), p.evaluate(&pt.act(&h)));
            let m = h.matrix();
            prop_assert!(m.transpose().mul(&m).is_identity());
            prop_assert!(m.det().is_one_elem());
        }

        #[test]
        fn division_identity_holds(p in arb_poly(8), q in arb_poly(3)) {
            prop_assume!(!q.is_zero());
            let (quot, rem) = p.div_rem_lex(&q).unwrap();
            prop_assert_eq!(quot.mul(&q).add(&rem), p);
        }
    }
}
