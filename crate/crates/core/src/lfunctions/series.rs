//! Rigorous evaluation of `zeta(s)` and `L(s, chi)` for integers `s >= 2`.
//!
//! Both reduce to Hurwitz zeta values `zeta(s, a/f)`, summed directly up to
//! `N` and completed with Euler-Maclaurin. The remainder after the `M`-th
//! correction term is bounded by the magnitude of that term, since
//! `|B_{2M}({x})| <= |B_{2M}|` and every derivative of `x^-s` has constant sign.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::One;

use crate::bernoulli::{bernoulli, DirichletCharacter};
use crate::error::{Error, Result};
use crate::exact::{Ball, Rational};

const GUARD: u32 = 32;

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// log2 of `2/(2 pi)^(2k) * (s)_(2k-1) * x^(1-s-2k)`, an estimate of the
/// k-th correction term used only to choose `M`.
fn log2_term_estimate(s: u32, k: u32, x: f64) -> f64 {
    let two_pi = std::f64::consts::TAU.log2();
    let poch: f64 = (0..2 * k - 1).map(|i| (s as f64 + i as f64).log2()).sum();
    1.0 - 2.0 * k as f64 * two_pi + poch + (1.0 - s as f64 - 2.0 * k as f64) * x.log2()
}

/// `zeta(s, a/f)` for `1 <= a <= f`, `s >= 2`, at working precision `prec`.
pub fn hurwitz_zeta(s: u32, a: u64, f: u64, prec: u32) -> Result<Ball> {
    if s < 2 {
        return Err(Error::invalid("series evaluation needs s >= 2"));
    }
    if a == 0 || a > f {
        return Err(Error::invalid("Hurwitz parameter must lie in (0, 1]"));
    }
    let target = prec as f64 + 8.0;
    let n_terms = (prec as u64).max(2 * s as u64) + 16;
    let x_f64 = n_terms as f64;
    let mut m = 1u32;
    while log2_term_estimate(s, m, x_f64) > -target {
        m += 1;
        if m as f64 > std::f64::consts::PI * x_f64 {
            return Err(Error::precision("Euler-Maclaurin terms stop decreasing", prec));
        }
    }

    let fs = BigInt::from(f).pow(s);
    let f_ball = Ball::from_int(fs.clone(), prec);
    let mut sum = Ball::zero(prec);
    for n in 0..n_terms {
        let base = BigInt::from(n * f + a).pow(s);
        sum = sum.add(&f_ball.checked_div(&Ball::from_int(base, prec))?);
    }

    // x = N + a/f
    let x = Rational::new(BigInt::from(n_terms * f + a), BigInt::from(f))?;
    let inv_x = Ball::from_rational(&x.recip()?, prec);
    let inv_x2 = inv_x.mul(&inv_x);
    let x_pow = inv_x.powi(s as i64 - 1)?; // x^(1-s)

    sum = sum.add(&x_pow.mul_rational(&Rational::frac(1, s as i64 - 1)));
    sum = sum.add(&x_pow.mul(&inv_x).mul_2exp(-1));

    // power = x^(1-s-2k), poch = (s)_(2k-1)
    let mut power = x_pow.mul(&inv_x2);
    let mut poch = BigInt::from(s);
    let mut last = Ball::zero(prec);
    for k in 1..=m {
        let coeff = bernoulli(2 * k as usize) * Rational::from_integer(poch.clone())
            / Rational::from_integer(factorial(2 * k as u64));
        last = power.mul_rational(&coeff);
        sum = sum.add(&last);
        power = power.mul(&inv_x2);
        poch = poch * (s + 2 * k - 1) * (s + 2 * k);
    }
    let remainder = crate::exact::Mag::upper(&last.midpoint().abs()).add(&last.radius());
    Ok(sum.add_error(remainder))
}

/// Keyed by `(s, character values, precision)`.
type LCache = Mutex<HashMap<(u32, Vec<i8>, u32), Ball>>;

fn cache() -> &'static LCache {
    static CACHE: OnceLock<LCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `L(s, chi) = f^-s sum_a chi(a) zeta(s, a/f)`, radius at most `2^(16-prec)`.
pub fn dirichlet_l_numeric(chi: &DirichletCharacter, s: u32, prec: u32) -> Result<Ball> {
    crate::exact::check_precision(prec)?;
    let key = (s, chi.values_from_one(), prec);
    if let Some(b) = cache().lock().expect("series cache poisoned").get(&key) {
        return Ok(b.clone());
    }
    let work = prec + GUARD;
    let f = chi.modulus();
    let mut sum = Ball::zero(work);
    for a in 1..=f {
        let v = chi.value(a as i64);
        if v == 0 {
            continue;
        }
        let h = hurwitz_zeta(s, a, f, work)?;
        sum = if v > 0 { sum.add(&h) } else { sum.sub(&h) };
    }
    let scale = Rational::new(1, BigInt::from(f).pow(s))?;
    let value = sum
        .mul_rational(&scale)
        .with_precision(prec)
        .require_radius(16 - prec as i64, "L-series")?;
    cache()
        .lock()
        .expect("series cache poisoned")
        .insert(key, value.clone());
    Ok(value)
}

/// `zeta(s)` for integer `s >= 2`.
pub fn zeta_numeric(s: u32, prec: u32) -> Result<Ball> {
    dirichlet_l_numeric(&DirichletCharacter::trivial(), s, prec)
}
