use std::fmt;
use std::ops::{Div, Mul};

use super::{consts, Ball, Rational};

/// Exact value `coefficient * pi^exponent`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiScaled {
    coefficient: Rational,
    pi_exponent: i64,
}

impl PiScaled {
    pub fn new(coefficient: Rational, pi_exponent: i64) -> Self {
        let pi_exponent = if coefficient.is_zero() { 0 } else { pi_exponent };
        PiScaled {
            coefficient,
            pi_exponent,
        }
    }

    pub fn rational(q: Rational) -> Self {
        PiScaled::new(q, 0)
    }

    pub fn coefficient(&self) -> &Rational {
        &self.coefficient
    }

    pub fn pi_exponent(&self) -> i64 {
        self.pi_exponent
    }

    pub fn mul_rational(&self, q: &Rational) -> Self {
        PiScaled::new(&self.coefficient * q, self.pi_exponent)
    }

    pub fn powi(&self, n: u32) -> Self {
        let c = self.coefficient.pow(n as i32).expect("nonnegative power");
        PiScaled::new(c, self.pi_exponent * n as i64)
    }

    /// Ball enclosure with radius at most `2^(3-prec) |midpoint|`.
    pub fn eval(&self, prec: u32) -> Ball {
        if self.pi_exponent == 0 {
            return Ball::from_rational(&self.coefficient, prec);
        }
        let guard = 16 + 2 * (64 - self.pi_exponent.unsigned_abs().leading_zeros());
        let work = prec + guard;
        let pi_pow = consts::pi(work)
            .powi(self.pi_exponent)
            .expect("pi is bounded away from zero");
        pi_pow
            .mul(&Ball::from_rational(&self.coefficient, work))
            .with_precision(prec)
    }
}

impl Mul<&PiScaled> for &PiScaled {
    type Output = PiScaled;
    fn mul(self, rhs: &PiScaled) -> PiScaled {
        PiScaled::new(&self.coefficient * &rhs.coefficient, self.pi_exponent + rhs.pi_exponent)
    }
}

impl Mul for PiScaled {
    type Output = PiScaled;
    fn mul(self, rhs: PiScaled) -> PiScaled {
        &self * &rhs
    }
}

/// Panics on a zero divisor.
impl Div<&PiScaled> for &PiScaled {
    type Output = PiScaled;
    fn div(self, rhs: &PiScaled) -> PiScaled {
        PiScaled::new(&self.coefficient / &rhs.coefficient, self.pi_exponent - rhs.pi_exponent)
    }
}

impl fmt::Display for PiScaled {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.pi_exponent {
            0 => write!(f, "{}", self.coefficient),
            1 => write!(f, "({})*pi", self.coefficient),
            e => write!(f, "({})*pi^{}", self.coefficient, e),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::decimal::{to_scientific, Rounding};
    use num_bigint::BigInt;

    fn rel_bound(b: &Ball) -> bool {
        // radius <= 2^(3-prec) |mid|
        let m = b.midpoint().log2_floor().unwrap();
        b.radius().log2_floor().is_none_or(|r| r < 3 - b.precision() as i64 + m)
    }

    #[test]
    fn zeta_two() {
        let z2 = PiScaled::new(Rational::frac(1, 6), 2).eval(256);
        assert_eq!(to_scientific(&z2.mid_rational(), 7, Rounding::HalfEven), "1.644934e0");
        assert!(rel_bound(&z2));
    }

    #[test]
    fn four_pi() {
        let b = PiScaled::new(Rational::from(4), 1).eval(128);
        assert_eq!(to_scientific(&b.mid_rational(), 7, Rounding::HalfEven), "1.256637e1");
        assert!(rel_bound(&b));
    }

    #[test]
    fn rational_embedding() {
        let q = Rational::frac(22, 7);
        let b = PiScaled::rational(q.clone()).eval(64);
        assert!(b.contains_rational(&q));
        assert!(rel_bound(&b));
    }

    #[test]
    fn zero_coefficient_has_zero_exponent() {
        assert_eq!(PiScaled::new(Rational::zero(), 5).pi_exponent(), 0);
    }

    #[test]
    fn product_is_exact_and_enclosed() {
        let x = PiScaled::new(Rational::frac(3, 32), -6);
        let y = PiScaled::new(Rational::from_integer(BigInt::from(7)), 4);
        let xy = &x * &y;
        assert_eq!(xy.pi_exponent(), -2);
        assert_eq!(xy.coefficient(), &Rational::frac(21, 32));
        let prod_balls = x.eval(200).mul(&y.eval(200));
        assert!(prod_balls.contains(&xy.eval(200)) || prod_balls.overlaps(&xy.eval(200)));
        assert!(rel_bound(&xy.eval(200)));
        for e in [-90i64, -7, 1, 45, 120] {
            assert!(rel_bound(&PiScaled::new(Rational::frac(5, 3), e).eval(96)));
        }
    }
}
