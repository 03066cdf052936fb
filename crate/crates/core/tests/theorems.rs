//! Cross-module checks: the functional, the factorial formula and the
//! finite-field character sums must agree with each other.

use circint_core::coeff::{int, rational};
use circint_core::ffcircle::{odd_primes_up_to, parametrized_points};
use circint_core::random::{random_nonzero_int, random_polynomial, seeded};
use circint_core::{
    canonicalize, cross_check, enumerate_circle, interpret, legendre, omega, psi, psi_general,
    psi_monomial, psi_via_canonical, rational_mod_p, verify_axioms, CircleSpec, Monomial,
    Polynomial, PrimeField, Rotation,
};

#[test]
fn finite_field_bridge_for_primes_below_60() {
    for p in odd_primes_up_to(60) {
        let report = cross_check(p).unwrap();
        assert!(
            report.passed(),
            "p = {p}: {:?}",
            report.mismatches().collect::<Vec<_>>()
        );
    }
}

#[test]
fn reduced_omega_matches_character_sum() {
    // Ω(1,1) = 1/8 ≡ 1 (mod 7)
    let f7 = PrimeField::new(7).unwrap();
    assert_eq!(rational_mod_p(&omega(1, 1), &f7).unwrap().value(), 1);
    let f11 = PrimeField::new(11).unwrap();
    // 8⁻¹ ≡ 7 (mod 11), so 3/8 ≡ 21 ≡ 10
    assert_eq!(rational_mod_p(&omega(2, 0), &f11).unwrap().value(), 10);
    let c11 = enumerate_circle(&f11).unwrap();
    assert_eq!(circint_core::psi_finite(&c11, 4, 0).unwrap().value(), 10);
}

#[test]
fn point_count_and_parametrization() {
    for p in odd_primes_up_to(400) {
        let f = PrimeField::new(p).unwrap();
        let circle = enumerate_circle(&f).unwrap();
        assert_eq!(circle.len() as i64, p as i64 - legendre(-1, &f) as i64);
        assert_eq!(parametrized_points(&f), circle.points());
    }
}

#[test]
fn three_routes_to_psi_agree() {
    let mut rng = seeded(11);
    for _ in 0..300 {
        let p = random_polynomial(&mut rng, 14);
        let direct = psi(&p);
        assert_eq!(psi_via_canonical(&p), direct);
        assert_eq!(psi_general(&CircleSpec::unit(), &p), direct);
        let expanded: circint_core::Rational = p
            .terms()
            .map(|(m, c)| {
                if m.k % 2 == 0 && m.l % 2 == 0 {
                    c * omega(m.k / 2, m.l / 2)
                } else {
                    int(0)
                }
            })
            .sum();
        assert_eq!(expanded, direct);
    }
}

#[test]
fn rotating_then_reducing_preserves_psi() {
    let mut rng = seeded(3);
    for _ in 0..100 {
        let u = random_nonzero_int(&mut rng, 30);
        let p = random_polynomial(&mut rng, 10);
        let h = Rotation::param(rational(u, 3)).unwrap();
        let rotated = p.act(&h);
        assert_eq!(psi(&canonicalize(&rotated).embed()), psi(&p));
    }
}

#[test]
fn scaled_circle_scales_even_moments() {
    // ψ_{r,[0,0]}(α₁^(2m)α₂^(2n)) = r^(2m+2n+1) Ω(m,n)
    for r in [rational(1, 2), int(3), int(-2)] {
        let circle = CircleSpec::centered(r.clone()).unwrap();
        for m in 0..5u32 {
            for n in 0..5u32 {
                let p = Polynomial::monomial(Monomial::new(2 * m, 2 * n), int(1));
                let want = num_traits::pow(r.clone(), (2 * m + 2 * n + 1) as usize) * omega(m, n);
                assert_eq!(psi_general(&circle, &p), want);
            }
        }
    }
}

#[test]
fn headline_theorem_beyond_acceptance_range() {
    for (m, n) in [(15, 3), (20, 20), (0, 25)] {
        assert!(interpret(m, n).holds());
        assert_eq!(psi_monomial(2 * m, 2 * n), omega(m, n));
    }
}

#[test]
fn axioms_at_higher_degree() {
    let report = verify_axioms(200, 16, 99);
    assert!(report.passed(), "{report:?}");
}
