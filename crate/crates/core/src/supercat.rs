//! Super Catalan numbers `S(m, n) = (2m)!(2n)! / (m! n! (m+n)!)` and the
//! circular variant `Ω(m, n) = S(m, n) / 4^(m+n)`, computed from factorials.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::coeff::Rational;
use crate::functional::{psi_general, CircleSpec};
use crate::poly::{Monomial, Polynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct SuperCatalanIndex {
    pub m: u32,
    pub n: u32,
}

fn factorial_cache() -> &'static Mutex<Vec<BigInt>> {
    static CACHE: OnceLock<Mutex<Vec<BigInt>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(vec![BigInt::one()]))
}

/// `n!`, memoized across calls.
pub fn factorial(n: u32) -> BigInt {
    let mut table = factorial_cache().lock().expect("factorial cache poisoned");
    while table.len() <= n as usize {
        let next = table.last().expect("cache starts at 0!") * BigInt::from(table.len());
        table.push(next);
    }
    table[n as usize].clone()
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// `S(m, n)`. Panics if the factorial quotient is not exact, which would
/// contradict integrality.
pub fn super_catalan(m: u32, n: u32) -> BigInt {
    let (num, den) = super_catalan_parts(m, n);
    let (q, r) = num.div_rem(&den);
    assert!(r.is_zero(), "S({m},{n}) is not an integer");
    q
}

/// Numerator `(2m)!(2n)!` and denominator `m! n! (m+n)!` of `S(m, n)`.
pub fn super_catalan_parts(m: u32, n: u32) -> (BigInt, BigInt) {
    (
        factorial(2 * m) * factorial(2 * n),
        factorial(m) * factorial(n) * factorial(m + n),
    )
}

/// `Ω(m, n) = S(m, n) / 4^(m+n)`.
pub fn omega(m: u32, n: u32) -> Rational {
    Rational::new(super_catalan(m, n), BigInt::from(4).pow(m + n))
}

/// Catalan number `c_n = C(2n, n) / (n + 1)`.
pub fn catalan(n: u32) -> BigInt {
    let (q, r) = binomial(2 * n, n).div_rem(&BigInt::from(n + 1));
    debug_assert!(r.is_zero());
    q
}

/// Outcome of [`check_identities`]; `failures` names each broken identity.
#[derive(Debug, Clone, Default, Serialize)]
pub struct IdentityReport {
    pub max_m: u32,
    pub max_n: u32,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks integrality, `4S(m,n) = S(m+1,n) + S(m,n+1)`, the Pascal-like
/// `Ω(m,n) = Ω(m+1,n) + Ω(m,n+1)` and `S(1,n) = 2c_n` on `0..=max_m × 0..=max_n`.
pub fn check_identities(max_m: u32, max_n: u32) -> IdentityReport {
    let mut report = IdentityReport {
        max_m,
        max_n,
        ..Default::default()
    };
    for m in 0..=max_m {
        for n in 0..=max_n {
            let (num, den) = super_catalan_parts(m, n);
            if !num.is_multiple_of(&den) {
                report.failures.push(format!("S({m},{n}) not integral"));
                continue;
            }
            let s = &num / &den;
            if BigInt::from(4) * &s != super_catalan(m + 1, n) + super_catalan(m, n + 1) {
                report.failures.push(format!(
                    "4S({m},{n}) != S({},{n}) + S({m},{})",
                    m + 1,
                    n + 1
                ));
            }
            if omega(m, n) != omega(m + 1, n) + omega(m, n + 1) {
                report
                    .failures
                    .push(format!("Omega({m},{n}) not Pascal-like"));
            }
            report.checked += 3;
        }
    }
    for n in 0..=max_n {
        if super_catalan(1, n) != BigInt::from(2) * catalan(n) {
            report.failures.push(format!("S(1,{n}) != 2c_{n}"));
        }
        report.checked += 1;
    }
    report
}

/// Both sides of `ψ_{2,[0,0]}(α₁^(2m) α₂^(2n)) = 2S(m, n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interpretation {
    pub index: SuperCatalanIndex,
    /// Value of the radius-2 functional on `α₁^(2m) α₂^(2n)`.
    pub via_functional: Rational,
    /// `2S(m, n)` from factorials.
    pub via_factorials: BigInt,
}

impl Interpretation {
    pub fn holds(&self) -> bool {
        self.via_functional.is_integer()
            && self.via_functional.numer().is_even()
            && *self.via_functional.numer() == self.via_factorials
    }
}

pub fn interpret(m: u32, n: u32) -> Interpretation {
    let circle =
        CircleSpec::centered(Rational::from_integer(2.into())).expect("radius 2 is nonzero");
    let monomial = Polynomial::monomial(Monomial::new(2 * m, 2 * n), Rational::one());
    Interpretation {
        index: SuperCatalanIndex { m, n },
        via_functional: psi_general(&circle, &monomial),
        via_factorials: BigInt::from(2) * super_catalan(m, n),
    }
}
