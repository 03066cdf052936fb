//! The unit circle over `F_p` and its character-sum functional.
//!
//! For an odd prime `p` and `k + l < p − 1`,
//! `−(−1/p)·Σ_{x²+y²=1} x^k y^l` equals `Ω(k/2, l/2) mod p` when both
//! exponents are even and `0` otherwise. This module enumerates the circle
//! by brute force and compares that sum with the rational functional.

use serde::Serialize;
use thiserror::Error;

use crate::coeff::{rational_mod_p, Field, FieldError, Fp, PrimeField};
use crate::functional::MomentTable;

/// Largest prime accepted by [`enumerate_circle`] (exclusive).
pub const ENUMERATION_BUDGET: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FiniteCircleError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("prime {0} exceeds the enumeration budget 2^20")]
    BudgetExceeded(u64),
    #[error("k + l = {sum} must be below p - 1 = {bound}")]
    OutOfRange { sum: u64, bound: u64 },
}

/// Legendre symbol `(a/p)` by Euler's criterion.
pub fn legendre(a: i64, field: &PrimeField) -> i32 {
    let x = field.element(a);
    if x.is_zero_elem() {
        return 0;
    }
    let e = x.pow((field.modulus() - 1) / 2);
    if e.is_one_elem() {
        1
    } else {
        -1
    }
}

/// All points of `x² + y² = 1` over `F_p`, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteCircle {
    field: PrimeField,
    points: Vec<(Fp, Fp)>,
}

impl FiniteCircle {
    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn points(&self) -> &[(Fp, Fp)] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `Σ x^k y^l` over the circle.
    pub fn power_sum(&self, k: u32, l: u32) -> Fp {
        self.points.iter().fold(self.field.zero(), |acc, (x, y)| {
            acc + x.pow(k as u64) * y.pow(l as u64)
        })
    }
}

/// Scans every `x` and looks up the square roots of `1 − x²` in a table of
/// squares.
pub fn enumerate_circle(field: &PrimeField) -> Result<FiniteCircle, FiniteCircleError> {
    let p = field.modulus();
    if p >= ENUMERATION_BUDGET {
        return Err(FiniteCircleError::BudgetExceeded(p));
    }
    let mut roots: Vec<Vec<u32>> = vec![Vec::new(); p as usize];
    for y in 0..p {
        roots[(y * y % p) as usize].push(y as u32);
    }
    let mut points = Vec::new();
    for x in field.elements() {
        let rhs = field.one() - x * x;
        for &y in &roots[rhs.value() as usize] {
            points.push((x, field.element(y as i64)));
        }
    }
    points.sort();
    Ok(FiniteCircle {
        field: *field,
        points,
    })
}

/// Circle points from `u ↦ [(1−u²)/(1+u²), 2u/(1+u²)]` over all `u` with
/// `1 + u² ≠ 0`, plus `[−1, 0]`; sorted.
pub fn parametrized_points(field: &PrimeField) -> Vec<(Fp, Fp)> {
    let one = field.one();
    let two = field.element(2);
    let mut points: Vec<_> = field
        .elements()
        .filter_map(|u| {
            let inv = (one + u * u).inverse().ok()?;
            Some(((one - u * u) * inv, two * u * inv))
        })
        .collect();
    points.push((-one, field.zero()));
    points.sort();
    points.dedup();
    points
}

/// `−(−1/p)·Σ x^k y^l`, defined for `k + l < p − 1`.
pub fn psi_finite(circle: &FiniteCircle, k: u32, l: u32) -> Result<Fp, FiniteCircleError> {
    let field = circle.field();
    let bound = field.modulus() - 1;
    let sum = k as u64 + l as u64;
    if sum >= bound {
        return Err(FiniteCircleError::OutOfRange { sum, bound });
    }
    let sign = field.element(-(legendre(-1, &field) as i64));
    Ok(sign * circle.power_sum(k, l))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub k: u32,
    pub l: u32,
    /// Character sum reduced mod `p`, as `v`.
    pub finite: u64,
    /// `ψ(α₁^k α₂^l)` reduced mod `p`, as `v`.
    pub expected: u64,
    pub agrees: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossCheckReport {
    pub prime: u64,
    pub circle_size: usize,
    pub comparisons: Vec<Comparison>,
}

impl CrossCheckReport {
    pub fn passed(&self) -> bool {
        self.comparisons.iter().all(|c| c.agrees)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &Comparison> {
        self.comparisons.iter().filter(|c| !c.agrees)
    }
}

/// Compares the character sum with `ψ mod p` for every `k + l < p − 1`.
pub fn cross_check(p: u64) -> Result<CrossCheckReport, FiniteCircleError> {
    let field = PrimeField::new(p)?;
    let circle = enumerate_circle(&field)?;
    let bound = (p - 1) as u32;
    let mut table = MomentTable::new(bound / 2);
    let mut comparisons = Vec::new();
    for total in 0..bound {
        for k in 0..=total {
            let l = total - k;
            let finite = psi_finite(&circle, k, l)?;
            let expected = rational_mod_p(&table.value(k, l), &field)?;
            comparisons.push(Comparison {
                k,
                l,
                finite: finite.value(),
                expected: expected.value(),
                agrees: finite == expected,
            });
        }
    }
    Ok(CrossCheckReport {
        prime: p,
        circle_size: circle.len(),
        comparisons,
    })
}

/// Odd primes `3 ≤ p ≤ n`.
pub fn odd_primes_up_to(n: u64) -> Vec<u64> {
    (3..=n).filter(|&p| crate::coeff::is_prime(p)).collect()
}
