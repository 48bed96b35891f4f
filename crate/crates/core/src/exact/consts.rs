//! Enclosures of pi and e computed with fixed-point integer series.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::dyadic::{Dyadic, Mag};
use super::Ball;

const GUARD_BITS: u32 = 64;

/// `atan(1/x) * 2^w` as a fixed-point sum, with an error bound in units of `2^-w`.
fn atan_recip_fixed(x: u32, w: u32) -> (BigInt, u64) {
    let x2 = BigInt::from(x) * x;
    // power_k = floor(2^w / x^(2k+1)); nested floors compose exactly
    let mut power = (BigInt::one() << w as usize) / x;
    let mut sum = BigInt::zero();
    let mut k: u64 = 0;
    while !power.is_zero() {
        let term = &power / (2 * k + 1);
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &x2;
        k += 1;
    }
    // one unit per truncated term plus the alternating tail (< 1 unit)
    (sum, k + 1)
}

fn cache() -> &'static Mutex<HashMap<(u8, u32), Ball>> {
    static CACHE: OnceLock<Mutex<HashMap<(u8, u32), Ball>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn cached(key: (u8, u32), compute: impl FnOnce() -> Ball) -> Ball {
    if let Some(b) = cache().lock().expect("constant cache poisoned").get(&key) {
        return b.clone();
    }
    let b = compute();
    cache().lock().expect("constant cache poisoned").insert(key, b.clone());
    b
}

/// Ball containing pi, via Machin's formula `16 atan(1/5) - 4 atan(1/239)`.
pub fn pi(prec: u32) -> Ball {
    cached((0, prec), || {
        let w = prec + GUARD_BITS;
        let (a5, e5) = atan_recip_fixed(5, w);
        let (a239, e239) = atan_recip_fixed(239, w);
        let sum = a5 * 16 - a239 * 4;
        let err = 16 * e5 + 4 * e239;
        let mid = Dyadic::new(sum, -(w as i64));
        Ball::new(mid, Mag::from_u64(err).mul_2exp(-(w as i64)), prec)
    })
}

/// Ball containing Euler's number.
pub fn e(prec: u32) -> Ball {
    cached((1, prec), || {
        let w = prec + GUARD_BITS;
        // term_k = floor(2^w / k!)
        let mut term = BigInt::one() << w as usize;
        let mut sum = BigInt::zero();
        let mut k: u64 = 0;
        while !term.is_zero() {
            sum += &term;
            k += 1;
            term /= k;
        }
        // k truncations plus a tail below 2 units
        let mid = Dyadic::new(sum, -(w as i64));
        Ball::new(mid, Mag::from_u64(k + 2).mul_2exp(-(w as i64)), prec)
    })
}
