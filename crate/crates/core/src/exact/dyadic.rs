//! Exact binary floating values and upper-bound magnitudes.
//!
//! [`Dyadic`] is an exact `mantissa * 2^exponent`; [`Mag`] is a small
//! nonnegative magnitude used for ball radii, always rounded upward.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dyadic {
    man: BigInt,
    exp: i64,
}

impl Dyadic {
    pub fn new(man: BigInt, exp: i64) -> Self {
        Dyadic { man, exp }.normalized()
    }

    pub fn zero() -> Self {
        Dyadic {
            man: BigInt::zero(),
            exp: 0,
        }
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Dyadic::new(n.into(), 0)
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.man
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.man.is_zero()
    }

    pub fn sign(&self) -> Sign {
        self.man.sign()
    }

    /// Bit length of the mantissa magnitude.
    pub fn bits(&self) -> u64 {
        self.man.bits()
    }

    /// `floor(log2 |x|)`; `None` for zero.
    pub fn log2_floor(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.bits() as i64 - 1 + self.exp)
        }
    }

    fn normalized(mut self) -> Self {
        if self.man.is_zero() {
            self.exp = 0;
            return self;
        }
        let tz = self.man.trailing_zeros().unwrap_or(0);
        if tz > 0 {
            self.man >>= tz;
            self.exp += tz as i64;
        }
        self
    }

    pub fn neg(&self) -> Self {
        Dyadic {
            man: -&self.man,
            exp: self.exp,
        }
    }

    pub fn abs(&self) -> Self {
        Dyadic {
            man: self.man.abs(),
            exp: self.exp,
        }
    }

    pub fn add(&self, other: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let exp = self.exp.min(other.exp);
        let a = &self.man << (self.exp - exp) as usize;
        let b = &other.man << (other.exp - exp) as usize;
        Dyadic::new(a + b, exp)
    }

    pub fn sub(&self, other: &Dyadic) -> Dyadic {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Dyadic) -> Dyadic {
        Dyadic::new(&self.man * &other.man, self.exp + other.exp)
    }

    pub fn mul_2exp(&self, k: i64) -> Dyadic {
        if self.is_zero() {
            return Dyadic::zero();
        }
        Dyadic {
            man: self.man.clone(),
            exp: self.exp + k,
        }
    }

    /// Truncates toward zero to at most `prec` mantissa bits; returns the
    /// truncated value and, when inexact, the exponent of its last kept bit
    /// (the error is below `2^ulp_exp`).
    pub fn truncate(&self, prec: u32) -> (Dyadic, Option<i64>) {
        let bits = self.bits();
        if bits <= prec as u64 {
            return (self.clone(), None);
        }
        let shift = bits - prec as u64;
        let (sign, mag) = (self.man.sign(), self.man.magnitude());
        let kept = mag >> shift as usize;
        let exact = mag.trailing_zeros().is_none_or(|tz| tz >= shift);
        let ulp_exp = self.exp + shift as i64;
        let man = BigInt::from_biguint(sign, kept);
        (Dyadic::new(man, ulp_exp), (!exact).then_some(ulp_exp))
    }

    /// Rounds to `prec` bits in the given direction.
    pub fn round(&self, prec: u32, up: bool) -> Dyadic {
        let (t, ulp_exp) = self.truncate(prec);
        let Some(ulp_exp) = ulp_exp else {
            return t;
        };
        // truncation moved toward zero
        let toward_up = self.sign() == Sign::Minus;
        if toward_up == up {
            t
        } else {
            let ulp = Dyadic::new(BigInt::one(), ulp_exp);
            if up {
                t.add(&ulp)
            } else {
                t.sub(&ulp)
            }
        }
    }

    /// Exact quotient `self / other` truncated toward zero to at least `prec`
    /// bits, plus an upper bound on the truncation error.
    pub fn div_trunc(&self, other: &Dyadic, prec: u32) -> (Dyadic, Mag) {
        assert!(!other.is_zero(), "dyadic division by zero");
        if self.is_zero() {
            return (Dyadic::zero(), Mag::zero());
        }
        let shift = (prec as i64 + 2 + other.bits() as i64 - self.bits() as i64).max(0);
        let num = &self.man << shift as usize;
        let (q, r) = num.div_rem(&other.man);
        let exp = self.exp - other.exp - shift;
        let err = if r.is_zero() { Mag::zero() } else { Mag::pow2(exp) };
        (Dyadic::new(q, exp), err)
    }

    /// `floor(sqrt(x))` or `ceil(sqrt(x))` to about `prec` bits; `x >= 0`.
    pub fn sqrt_round(&self, prec: u32, up: bool) -> Dyadic {
        assert!(!self.is_negative(), "sqrt of negative dyadic");
        if self.is_zero() {
            return Dyadic::zero();
        }
        // scale so the integer has about 2*prec+4 bits and an even exponent
        let mut shift = (2 * prec as i64 + 4 - self.bits() as i64).max(0);
        if (self.exp - shift).rem_euclid(2) != 0 {
            shift += 1;
        }
        let n: BigUint = self.man.magnitude() << shift as usize;
        let mut s = n.sqrt();
        if up && &s * &s != n {
            s += 1u32;
        }
        Dyadic::new(BigInt::from(s), (self.exp - shift) / 2)
    }

    pub fn is_negative(&self) -> bool {
        self.man.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.man.is_positive()
    }

    pub fn to_rational(&self) -> Rational {
        if self.exp >= 0 {
            Rational::from_integer(&self.man << self.exp as usize)
        } else {
            Rational::new(self.man.clone(), BigInt::one() << (-self.exp) as usize).expect("power of two is nonzero")
        }
    }

    /// Truncation of `q` toward zero with at least `prec` significant bits;
    /// when inexact also returns the exponent bounding the error.
    pub fn from_rational_trunc(q: &Rational, prec: u32) -> (Dyadic, Option<i64>) {
        if q.is_zero() {
            return (Dyadic::zero(), None);
        }
        let (n, d) = (q.numer(), q.denom());
        let shift = prec as i64 + 2 - n.bits() as i64 + d.bits() as i64;
        let (num, den) = if shift >= 0 {
            (n << shift as usize, d.clone())
        } else {
            (n.clone(), d << (-shift) as usize)
        };
        let (quot, rem) = num.div_rem(&den);
        (Dyadic::new(quot, -shift), (!rem.is_zero()).then_some(-shift))
    }

    pub fn to_f64(&self) -> f64 {
        let (t, _) = self.truncate(60);
        let m = i64::try_from(&t.man).unwrap_or(0) as f64;
        m * 2f64.powi(t.exp.clamp(-2000, 2000) as i32)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.sub(other).sign() {
            Sign::Minus => Ordering::Less,
            Sign::NoSign => Ordering::Equal,
            Sign::Plus => Ordering::Greater,
        }
    }
}

const MAG_BITS: u32 = 30;

/// Upper bound `man * 2^exp` with a mantissa of at most 31 bits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Mag {
    man: u64,
    exp: i64,
}

impl Mag {
    pub const fn zero() -> Self {
        Mag { man: 0, exp: 0 }
    }

    pub fn pow2(exp: i64) -> Self {
        Mag { man: 1, exp }
    }

    pub fn is_zero(&self) -> bool {
        self.man == 0
    }

    /// Normalizes a wide mantissa, rounding up (or down when `up` is false).
    fn from_u128(v: u128, exp: i64, up: bool) -> Self {
        if v == 0 {
            return Mag::zero();
        }
        let bits = 128 - v.leading_zeros();
        if bits <= MAG_BITS {
            return Mag { man: v as u64, exp };
        }
        let shift = bits - MAG_BITS;
        let mut man = (v >> shift) as u64;
        if up && (v & ((1u128 << shift) - 1)) != 0 {
            man += 1;
        }
        Mag {
            man,
            exp: exp + shift as i64,
        }
    }

    fn from_biguint(v: &BigUint, exp: i64, up: bool) -> Self {
        let bits = v.bits();
        if bits <= 64 {
            let small = v.iter_u64_digits().next().unwrap_or(0);
            return Mag::from_u128(small as u128, exp, up);
        }
        let shift = bits - 64;
        let top = (v >> shift as usize).iter_u64_digits().next().unwrap_or(0);
        let lost = v.trailing_zeros().is_some_and(|tz| tz < shift);
        let m = Mag::from_u128(top as u128, exp + shift as i64, up);
        if up && lost {
            m.add(&Mag::pow2(exp + shift as i64))
        } else {
            m
        }
    }

    /// Smallest representable upper bound of `|d|`.
    pub fn upper(d: &Dyadic) -> Self {
        Mag::from_biguint(d.mantissa().magnitude(), d.exponent(), true)
    }

    /// A lower bound of `|d|`.
    pub fn lower(d: &Dyadic) -> Self {
        Mag::from_biguint(d.mantissa().magnitude(), d.exponent(), false)
    }

    pub fn from_u64(v: u64) -> Self {
        Mag::from_u128(v as u128, 0, true)
    }

    pub fn to_dyadic(&self) -> Dyadic {
        Dyadic::new(BigInt::from(self.man), self.exp)
    }

    pub fn add(&self, other: &Mag) -> Mag {
        if self.is_zero() {
            return *other;
        }
        if other.is_zero() {
            return *self;
        }
        let (hi, lo) = if self.top() >= other.top() {
            (self, other)
        } else {
            (other, self)
        };
        let shift = hi.exp - lo.exp;
        if shift >= 64 {
            // lo < 2^(lo.top) <= 2^(hi.exp); one ulp of hi covers it
            return Mag::from_u128(hi.man as u128 + 1, hi.exp, true);
        }
        if shift >= 0 {
            let v = ((hi.man as u128) << shift) + lo.man as u128;
            Mag::from_u128(v, lo.exp, true)
        } else {
            let v = hi.man as u128 + ((lo.man as u128) << (-shift));
            Mag::from_u128(v, hi.exp, true)
        }
    }

    fn top(&self) -> i64 {
        self.exp + 64 - self.man.leading_zeros() as i64
    }

    pub fn mul(&self, other: &Mag) -> Mag {
        Mag::from_u128(self.man as u128 * other.man as u128, self.exp + other.exp, true)
    }

    pub fn mul_2exp(&self, k: i64) -> Mag {
        if self.is_zero() {
            return *self;
        }
        Mag {
            man: self.man,
            exp: self.exp + k,
        }
    }

    /// Upper bound of `self / den`, where `den` must be a lower bound of the
    /// true divisor and nonzero.
    pub fn div(&self, den: &Mag) -> Mag {
        assert!(!den.is_zero(), "magnitude division by zero");
        if self.is_zero() {
            return Mag::zero();
        }
        let num = (self.man as u128) << 64;
        let q = num / den.man as u128;
        let q = if !num.is_multiple_of(den.man as u128) { q + 1 } else { q };
        Mag::from_u128(q, self.exp - den.exp - 64, true)
    }

    pub fn to_f64(&self) -> f64 {
        self.man as f64 * 2f64.powi(self.exp.clamp(-2000, 2000) as i32)
    }

    /// `floor(log2(self))`, for zero `None`.
    pub fn log2_floor(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.top() - 1)
        }
    }
}

impl PartialOrd for Mag {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.to_dyadic().cmp(&other.to_dyadic()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn d(n: i64, e: i64) -> Dyadic {
        Dyadic::new(BigInt::from(n), e)
    }

    #[test]
    fn normalization_strips_trailing_zeros() {
        let x = d(12, 0);
        assert_eq!(x.mantissa(), &BigInt::from(3));
        assert_eq!(x.exponent(), 2);
        assert_eq!(d(0, 17), Dyadic::zero());
    }

    #[test]
    fn rounding_directions() {
        // 0b1011 = 11 rounded to 2 bits
        assert_eq!(d(11, 0).round(2, false), d(8, 0));
        assert_eq!(d(11, 0).round(2, true), d(12, 0));
        assert_eq!(d(-11, 0).round(2, false), d(-12, 0));
        assert_eq!(d(-11, 0).round(2, true), d(-8, 0));
    }

    #[test]
    fn sqrt_brackets() {
        let two = d(2, 0);
        let lo = two.sqrt_round(64, false);
        let hi = two.sqrt_round(64, true);
        assert!(lo.mul(&lo) <= two);
        assert!(hi.mul(&hi) >= two);
        assert!(lo < hi);
    }

    #[test]
    fn mag_add_far_apart_still_bounds() {
        let big = Mag::pow2(100);
        let tiny = Mag::pow2(-100);
        let s = big.add(&tiny);
        assert!(s.to_dyadic() > big.to_dyadic().add(&tiny.to_dyadic()).sub(&d(1, -101)));
        assert!(s.to_dyadic() >= big.to_dyadic().add(&tiny.to_dyadic()));
    }

    proptest! {
        #[test]
        fn mag_upper_bounds(m in any::<i64>(), e in -200i64..200) {
            let x = d(m, e);
            prop_assert!(Mag::upper(&x).to_dyadic() >= x.abs());
            prop_assert!(Mag::lower(&x).to_dyadic() <= x.abs());
        }

        #[test]
        fn mag_ops_round_up(a in 1u64..u64::MAX, b in 1u64..u64::MAX, ea in -90i64..90, eb in -90i64..90) {
            let (ma, mb) = (Mag::upper(&d(a as i64 >> 1, ea)), Mag::upper(&d(b as i64 >> 1, eb)));
            prop_assume!(!ma.is_zero() && !mb.is_zero());
            let (da, db) = (ma.to_dyadic(), mb.to_dyadic());
            prop_assert!(ma.add(&mb).to_dyadic() >= da.add(&db));
            prop_assert!(ma.mul(&mb).to_dyadic() >= da.mul(&db));
            // quotient bound: q * b >= a
            prop_assert!(ma.div(&mb).to_dyadic().mul(&db) >= da);
        }

        #[test]
        fn div_trunc_error_bound(a in any::<i64>(), b in 1i64..i64::MAX, prec in 8u32..128) {
            let (x, y) = (d(a, 0), d(b, 3));
            let (q, err) = x.div_trunc(&y, prec);
            // |x - q*y| <= err * |y|
            let resid = x.sub(&q.mul(&y)).abs();
            prop_assert!(resid <= err.to_dyadic().mul(&y));
        }
    }
}
