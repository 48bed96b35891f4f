use hypvol_core::bernoulli::{kronecker_character, DirichletCharacter};
use hypvol_core::exact::consts::pi;
use hypvol_core::lfunctions::{
    dedekind_zeta_neg_quad, dirichlet_l_neg, dirichlet_l_numeric, factor_degrees_mod_p, poly_discriminant,
    zeta_numeric, IntPoly,
};
use hypvol_core::{Ball, Rational};
use num_bigint::BigInt;

const PREC: u32 = 256;

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::from(1), |a, k| a * k)
}

/// `2 (-1)^floor(n/2) (n-1)! f^(n-1/2) / (2 pi)^n * L(n, chi)`, the value of
/// `L(1-n, chi)` predicted by the functional equation for primitive real
/// `chi` of the same parity as `n`.
fn reflected(chi: &DirichletCharacter, n: u32) -> Ball {
    let f = chi.modulus() as i64;
    let sqrt_f = Ball::from_int(f, PREC).sqrt().unwrap();
    let f_pow = Ball::from_int(BigInt::from(f).pow(n), PREC)
        .checked_div(&sqrt_f)
        .unwrap();
    let two_pi_n = pi(PREC).mul_2exp(1).powi(n as i64).unwrap();
    let sign = if (n / 2).is_multiple_of(2) { 2 } else { -2 };
    dirichlet_l_numeric(chi, n, PREC)
        .unwrap()
        .mul(&f_pow)
        .mul_int(factorial(n - 1) * sign)
        .checked_div(&two_pi_n)
        .unwrap()
}

#[test]
fn even_character_functional_equation() {
    let chi5 = kronecker_character(5).unwrap();
    for n in [2u32, 4, 6] {
        let exact = dirichlet_l_neg(n, &chi5).unwrap();
        assert!(reflected(&chi5, n).contains_rational(&exact), "n = {n}");
        let trivial = dirichlet_l_neg(n, &DirichletCharacter::trivial()).unwrap();
        assert!(
            reflected(&DirichletCharacter::trivial(), n).contains_rational(&trivial),
            "n = {n}"
        );
    }
}

#[test]
fn odd_character_functional_equation() {
    // chi_-3 is odd, so L(1-n) vanishes for even n and is matched at odd n
    let chi = kronecker_character(-3).unwrap();
    for n in [2u32, 4, 6] {
        assert!(dirichlet_l_neg(n, &chi).unwrap().is_zero());
    }
    for n in [3u32, 5, 7] {
        let exact = dirichlet_l_neg(n, &chi).unwrap();
        assert!(!exact.is_zero());
        assert!(reflected(&chi, n).contains_rational(&exact), "n = {n}");
    }
}

#[test]
fn golden_field_functional_equation() {
    // zeta_k(2j) = |zeta_k(1-2j)| (2 pi)^(4j) / (4 ((2j-1)!)^2 5^(2j-1/2))
    let chi5 = kronecker_character(5).unwrap();
    let sqrt5 = Ball::from_int(5, PREC).sqrt().unwrap();
    for j in 1..=5u32 {
        let series = zeta_numeric(2 * j, PREC)
            .unwrap()
            .mul(&dirichlet_l_numeric(&chi5, 2 * j, PREC).unwrap());
        let exact = dedekind_zeta_neg_quad(j).unwrap();
        let den = factorial(2 * j - 1).pow(2) * 4 * BigInt::from(5).pow(2 * j);
        let predicted = pi(PREC)
            .mul_2exp(1)
            .powi(4 * j as i64)
            .unwrap()
            .mul_rational(&(exact.abs() / Rational::from_integer(den)))
            .mul(&sqrt5);
        assert!(series.overlaps(&predicted), "j = {j}");
    }
}

#[test]
fn golden_field_values_are_small_and_positive() {
    assert_eq!(dedekind_zeta_neg_quad(1).unwrap(), Rational::frac(1, 30));
    assert_eq!(dedekind_zeta_neg_quad(2).unwrap(), Rational::frac(1, 60));
}

#[test]
fn factorization_examples() {
    assert_eq!(factor_degrees_mod_p(&[10, 10, 1], 11).unwrap(), vec![(1, 1), (1, 1)]);
    assert_eq!(factor_degrees_mod_p(&[1, 1, 1], 2).unwrap(), vec![(2, 1)]);
    assert_eq!(factor_degrees_mod_p(&[4, 4, 1], 5).unwrap(), vec![(1, 2)]);
}

#[test]
fn discriminant_examples() {
    assert_eq!(
        poly_discriminant(&IntPoly::from_i64(&[-1, -1, 1])).unwrap(),
        BigInt::from(5)
    );
    assert_eq!(
        poly_discriminant(&IntPoly::from_i64(&[-1, -1, 0, 1])).unwrap(),
        BigInt::from(-23)
    );
    let quartic = poly_discriminant(&IntPoly::from_i64(&[-1, 2, 0, -1, 1])).unwrap();
    assert_eq!(quartic.magnitude(), &275u32.into());
}
