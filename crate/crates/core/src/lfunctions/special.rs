//! Exact special values at nonpositive and positive even integers.

use num_bigint::BigInt;
use num_traits::One;

use crate::bernoulli::{bernoulli, generalized_bernoulli, kronecker_character, DirichletCharacter};
use crate::error::{Error, Result};
use crate::exact::{PiScaled, Rational};

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn require_positive(j: u32) -> Result<()> {
    if j == 0 {
        return Err(Error::invalid("index must be at least 1"));
    }
    Ok(())
}

/// `zeta(1 - 2j) = -B_{2j} / (2j)`.
pub fn zeta_neg(j: u32) -> Result<Rational> {
    require_positive(j)?;
    let two_j = 2 * j as i64;
    Ok(-bernoulli(2 * j as usize) / Rational::from(two_j))
}

/// `zeta(2j) = (-1)^(j+1) B_{2j} (2 pi)^(2j) / (2 (2j)!)`, exactly.
pub fn zeta_even_exact(j: u32) -> Result<PiScaled> {
    require_positive(j)?;
    let b = bernoulli(2 * j as usize);
    let sign = if j % 2 == 1 { 1 } else { -1 };
    let two_pow = BigInt::one() << (2 * j as usize);
    let coeff = b * Rational::from(sign) * Rational::from_integer(two_pow)
        / Rational::from_integer(factorial(2 * j as u64) * 2);
    Ok(PiScaled::new(coeff, 2 * j as i64))
}

/// `L(1 - n, chi) = -B_{n,chi} / n`.
pub fn dirichlet_l_neg(n: u32, chi: &DirichletCharacter) -> Result<Rational> {
    require_positive(n)?;
    let b = generalized_bernoulli(n as usize, chi)?;
    Ok(-b / Rational::from(n as i64))
}

/// `zeta_k(1 - 2j)` for `k = Q(sqrt 5)`, as `zeta(1 - 2j) L(1 - 2j, chi_5)`.
pub fn dedekind_zeta_neg_quad(j: u32) -> Result<Rational> {
    require_positive(j)?;
    let chi5 = kronecker_character(5)?;
    Ok(zeta_neg(j)? * dirichlet_l_neg(2 * j, &chi5)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zeta_negative_values() {
        // from B_2 = 1/6, B_4 = -1/30, B_12 = -691/2730
        assert_eq!(zeta_neg(1).unwrap(), Rational::frac(-1, 12));
        assert_eq!(zeta_neg(2).unwrap(), Rational::frac(1, 120));
        assert_eq!(zeta_neg(6).unwrap(), Rational::frac(691, 32760));
        assert!(zeta_neg(0).is_err());
    }

    #[test]
    fn zeta_even_values() {
        assert_eq!(zeta_even_exact(1).unwrap(), PiScaled::new(Rational::frac(1, 6), 2));
        assert_eq!(zeta_even_exact(2).unwrap(), PiScaled::new(Rational::frac(1, 90), 4));
        for j in 1..=20 {
            let z = zeta_even_exact(j).unwrap();
            assert_eq!(z.pi_exponent(), 2 * j as i64);
            assert!(z.coefficient().is_positive());
        }
    }

    #[test]
    fn dirichlet_negative_values() {
        let chi5 = kronecker_character(5).unwrap();
        assert_eq!(dirichlet_l_neg(2, &chi5).unwrap(), Rational::frac(-2, 5));
        assert!(dirichlet_l_neg(3, &chi5).unwrap().is_zero());
        assert_eq!(
            dirichlet_l_neg(2, &DirichletCharacter::trivial()).unwrap(),
            Rational::frac(-1, 12)
        );
    }

    #[test]
    fn dedekind_negative_values() {
        assert_eq!(dedekind_zeta_neg_quad(1).unwrap(), Rational::frac(1, 30));
        assert_eq!(dedekind_zeta_neg_quad(2).unwrap(), Rational::frac(1, 60));
        for j in 1..=32 {
            assert!(dedekind_zeta_neg_quad(j).unwrap().is_positive(), "j = {j}");
        }
    }
}
