use hypvol_core::bernoulli::bernoulli;
use hypvol_core::formulas::{
    euler_char_noncompact_even, lambda, parahoric_index, sphere_volume, vol_noncompact, LambdaKind, ParahoricForm,
};
use hypvol_core::lfunctions::zeta_numeric;
use hypvol_core::{BallOrdering, Rational};
use proptest::prelude::*;

const PREC: u32 = 256;

#[test]
fn principal_covolume_times_indices() {
    // lambda'_2(r) zeta(r) prod |B_2j|/(8j), times the local indices at 2 and 3
    for r in [3u32, 5, 7] {
        let lam = lambda(LambdaKind::Prime, 2, r).unwrap();
        let product: Rational = (1..r)
            .map(|j| bernoulli(2 * j as usize).abs() / Rational::from(8 * j as i64))
            .product();
        let index2 = Rational::from_integer(parahoric_index(ParahoricForm::DrOddCombined, 2, r).unwrap()) / lam.clone();
        let index3 = Rational::from_integer(parahoric_index(ParahoricForm::DrOddCombined, 3, r).unwrap());
        let covolume = zeta_numeric(r, PREC).unwrap().mul_rational(&(lam * product));
        let via_indices = covolume.mul_rational(&(index2 * index3));
        let direct = vol_noncompact(2 * r - 1, PREC).unwrap();
        assert!(via_indices.overlaps(&direct), "r = {r}");
    }
}

#[test]
fn gauss_bonnet() {
    for n in (4..=20).step_by(2) {
        let chi = euler_char_noncompact_even(n / 2).unwrap();
        let expected = sphere_volume(n)
            .unwrap()
            .mul_rational(&(chi / Rational::from(2)))
            .eval(PREC);
        assert!(vol_noncompact(n, PREC).unwrap().overlaps(&expected), "n = {n}");
    }
}

#[test]
fn volumes_increase_on_tabulated_range() {
    let vols: Vec<_> = (4..=20).map(|n| vol_noncompact(n, PREC).unwrap()).collect();
    for (i, w) in vols.windows(2).enumerate() {
        assert_eq!(w[0].compare(&w[1]), BallOrdering::Less, "n = {}", i + 4);
    }
}

#[test]
fn odd_dimensions_have_no_euler_characteristic_formula() {
    assert!(euler_char_noncompact_even(1).is_err());
    assert!(vol_noncompact(3, PREC).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn noncompact_euler_characteristic_is_even(r in 2u32..=24) {
        let chi = euler_char_noncompact_even(r).unwrap();
        prop_assert!(chi.is_integer());
        prop_assert!((chi.numer() % 2u32) == 0u32.into());
    }

    #[test]
    fn lambda_bar_is_half_odd_or_one(q in 2u64..50, r in 1u32..20) {
        let v = lambda(LambdaKind::Bar, q, r).unwrap();
        if r % 2 == 0 {
            prop_assert_eq!(v, Rational::one());
        } else {
            prop_assert_eq!(v * Rational::from(2), Rational::from_integer(num_bigint::BigInt::from(q).pow(r) - 1));
        }
    }

    #[test]
    fn indices_are_positive_and_nested(q in 2u64..30, r in 2u32..12) {
        let full = parahoric_index(ParahoricForm::BrHyperspecial, q, r).unwrap();
        let minus = parahoric_index(ParahoricForm::BrMinus1, q, r).unwrap();
        prop_assert_eq!(full.clone() % &minus, 0u32.into());
        prop_assert_eq!(full / minus, num_bigint::BigInt::from(q).pow(2 * r) - 1);
    }
}
