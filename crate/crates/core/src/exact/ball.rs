//! Midpoint-radius real arithmetic.
//!
//! Every operation returns a ball that contains every exact result obtainable
//! from points of the operand balls. Midpoints are kept to `precision` bits;
//! rounding error is folded into the radius.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_traits::One;

use super::dyadic::{Dyadic, Mag};
use super::Rational;
use crate::error::{Error, Result};

/// Outcome of comparing two balls.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BallOrdering {
    Less,
    Greater,
    Undecided,
}

#[derive(Clone, Debug)]
pub struct Ball {
    mid: Dyadic,
    rad: Mag,
    prec: u32,
}

impl Ball {
    /// Rounds `mid` to `prec` bits, widening `rad` by the rounding error.
    pub fn new(mid: Dyadic, rad: Mag, prec: u32) -> Ball {
        let (m, ulp) = mid.truncate(prec);
        let rad = match ulp {
            None => rad,
            Some(e) => rad.add(&Mag::pow2(e)),
        };
        Ball { mid: m, rad, prec }
    }

    pub fn zero(prec: u32) -> Ball {
        Ball::new(Dyadic::zero(), Mag::zero(), prec)
    }

    pub fn one(prec: u32) -> Ball {
        Ball::from_int(1, prec)
    }

    pub fn from_int(n: impl Into<BigInt>, prec: u32) -> Ball {
        Ball::new(Dyadic::from_int(n), Mag::zero(), prec)
    }

    pub fn from_rational(q: &Rational, prec: u32) -> Ball {
        let (mid, ulp) = Dyadic::from_rational_trunc(q, prec);
        let rad = ulp.map_or(Mag::zero(), Mag::pow2);
        Ball::new(mid, rad, prec)
    }

    /// Smallest ball (up to rounding) containing `[lo, hi]`.
    pub fn from_endpoints(lo: &Dyadic, hi: &Dyadic, prec: u32) -> Ball {
        debug_assert!(lo <= hi);
        let mid = lo.add(hi).mul_2exp(-1);
        let half_width = hi.sub(lo).mul_2exp(-1);
        Ball::new(mid, Mag::upper(&half_width), prec)
    }

    /// The interval `[0, bound]`-style enclosure `mid ± rad` from a rational
    /// center and a magnitude.
    pub fn with_radius(q: &Rational, rad: Mag, prec: u32) -> Ball {
        Ball::from_rational(q, prec).add_error(rad)
    }

    pub fn midpoint(&self) -> &Dyadic {
        &self.mid
    }

    pub fn radius(&self) -> Mag {
        self.rad
    }

    pub fn precision(&self) -> u32 {
        self.prec
    }

    pub fn lower(&self) -> Dyadic {
        self.mid.sub(&self.rad.to_dyadic())
    }

    pub fn upper(&self) -> Dyadic {
        self.mid.add(&self.rad.to_dyadic())
    }

    pub fn is_exact(&self) -> bool {
        self.rad.is_zero()
    }

    /// Widens the radius by `err`.
    pub fn add_error(mut self, err: Mag) -> Ball {
        self.rad = self.rad.add(&err);
        self
    }

    pub fn with_precision(&self, prec: u32) -> Ball {
        Ball::new(self.mid.clone(), self.rad, prec)
    }

    pub fn neg(&self) -> Ball {
        Ball {
            mid: self.mid.neg(),
            rad: self.rad,
            prec: self.prec,
        }
    }

    pub fn add(&self, other: &Ball) -> Ball {
        let prec = self.prec.max(other.prec);
        Ball::new(self.mid.add(&other.mid), self.rad.add(&other.rad), prec)
    }

    pub fn sub(&self, other: &Ball) -> Ball {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Ball) -> Ball {
        let prec = self.prec.max(other.prec);
        let ma = Mag::upper(&self.mid);
        let mb = Mag::upper(&other.mid);
        let rad = ma
            .mul(&other.rad)
            .add(&mb.mul(&self.rad))
            .add(&self.rad.mul(&other.rad));
        Ball::new(self.mid.mul(&other.mid), rad, prec)
    }

    pub fn mul_rational(&self, q: &Rational) -> Ball {
        self.mul(&Ball::from_rational(q, self.prec))
    }

    pub fn mul_int(&self, n: impl Into<BigInt>) -> Ball {
        self.mul(&Ball::from_int(n, self.prec))
    }

    pub fn mul_2exp(&self, k: i64) -> Ball {
        Ball {
            mid: self.mid.mul_2exp(k),
            rad: self.rad.mul_2exp(k),
            prec: self.prec,
        }
    }

    /// Fails when the divisor ball contains zero.
    pub fn checked_div(&self, other: &Ball) -> Result<Ball> {
        let prec = self.prec.max(other.prec);
        let den_abs = other.mid.abs();
        let den_low = den_abs.sub(&other.rad.to_dyadic());
        if !den_low.is_positive() {
            return Err(if other.is_exact() {
                Error::DivisionByZero
            } else {
                Error::precision("divisor ball contains zero", prec)
            });
        }
        let (q, trunc_err) = self.mid.div_trunc(&other.mid, prec);
        // |x/y - a/b| <= (ra + |a/b| rb) / (|b| - rb)
        let rad = if self.rad.is_zero() && other.rad.is_zero() {
            Mag::zero()
        } else {
            let ratio = Mag::upper(&self.mid).div(&Mag::lower(&other.mid));
            self.rad.add(&ratio.mul(&other.rad)).div(&Mag::lower(&den_low))
        };
        Ok(Ball::new(q, rad.add(&trunc_err), prec))
    }

    pub fn recip(&self) -> Result<Ball> {
        Ball::one(self.prec).checked_div(self)
    }

    /// Integer power by repeated squaring; negative powers need a ball away from zero.
    pub fn powi(&self, n: i64) -> Result<Ball> {
        if n < 0 {
            return self.powi(-n)?.recip();
        }
        let mut result = Ball::one(self.prec);
        let mut base = self.clone();
        let mut e = n as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(result)
    }

    /// Square root; the ball must be nonnegative.
    pub fn sqrt(&self) -> Result<Ball> {
        let lo = self.lower();
        if lo.is_negative() {
            return Err(if self.mid.is_negative() {
                Error::invalid("square root of a negative ball")
            } else {
                Error::precision("square root of a ball straddling zero", self.prec)
            });
        }
        let guard = self.prec + 8;
        let lo_s = lo.sqrt_round(guard, false);
        let hi_s = self.upper().sqrt_round(guard, true);
        Ok(Ball::from_endpoints(&lo_s, &hi_s, self.prec))
    }

    /// Ball containing both `self` and `other`.
    pub fn union(&self, other: &Ball) -> Ball {
        let lo = self.lower().min(other.lower());
        let hi = self.upper().max(other.upper());
        Ball::from_endpoints(&lo, &hi, self.prec.max(other.prec))
    }

    pub fn contains_rational(&self, q: &Rational) -> bool {
        let lo = self.lower().to_rational();
        let hi = self.upper().to_rational();
        &lo <= q && q <= &hi
    }

    pub fn contains(&self, other: &Ball) -> bool {
        self.lower() <= other.lower() && other.upper() <= self.upper()
    }

    pub fn overlaps(&self, other: &Ball) -> bool {
        self.lower() <= other.upper() && other.lower() <= self.upper()
    }

    /// Strict comparison: decided only when the enclosures are disjoint.
    pub fn compare(&self, other: &Ball) -> BallOrdering {
        if self.lower() > other.upper() {
            BallOrdering::Greater
        } else if self.upper() < other.lower() {
            BallOrdering::Less
        } else {
            BallOrdering::Undecided
        }
    }

    /// Like [`compare`](Self::compare) but additionally requires the midpoint
    /// gap to exceed `factor` times the combined radius.
    pub fn compare_with_margin(&self, other: &Ball, factor: u64) -> BallOrdering {
        let gap = self.mid.sub(&other.mid);
        let slack = self.rad.add(&other.rad).mul(&Mag::from_u64(factor)).to_dyadic();
        if gap.abs() <= slack {
            return BallOrdering::Undecided;
        }
        self.compare(other)
    }

    pub fn is_positive(&self) -> bool {
        self.lower().is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.upper().is_negative()
    }

    /// True when `radius <= eps * |x|` holds for every `x` in the ball.
    pub fn relative_radius_at_most(&self, eps: &Rational) -> bool {
        let abs_low = if self.mid.sign() == Sign::Minus {
            self.upper().neg()
        } else {
            self.lower()
        };
        if !abs_low.is_positive() {
            return self.rad.is_zero() && self.mid.is_zero();
        }
        self.rad.to_dyadic().to_rational() <= eps * &abs_low.to_rational()
    }

    /// Enforces an absolute radius cap.
    pub fn require_radius(self, log2_max: i64, what: &str) -> Result<Ball> {
        match self.rad.log2_floor() {
            Some(l) if l >= log2_max => Err(Error::precision(
                format!("{what}: radius 2^{l} exceeds 2^{log2_max}"),
                self.prec,
            )),
            _ => Ok(self),
        }
    }

    /// Enforces a relative radius cap.
    pub fn require_relative_radius(self, eps: &Rational, what: &str) -> Result<Ball> {
        if self.relative_radius_at_most(eps) {
            Ok(self)
        } else {
            Err(Error::precision(
                format!("{what}: relative radius above {eps}"),
                self.prec,
            ))
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.mid.to_f64()
    }

    pub fn mid_rational(&self) -> Rational {
        self.mid.to_rational()
    }

    /// `2^k` exactly.
    pub fn pow2(k: i64, prec: u32) -> Ball {
        Ball::new(Dyadic::new(BigInt::one(), k), Mag::zero(), prec)
    }
}

impl fmt::Display for Ball {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(20);
        let mid = super::decimal::to_scientific(&self.mid.to_rational(), digits, super::decimal::Rounding::HalfEven);
        let rad = super::decimal::mag_to_scientific(&self.rad);
        write!(f, "[{mid} +/- {rad}]")
    }
}
