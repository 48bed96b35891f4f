//! Decimal rendering of exact rationals and balls.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::dyadic::Mag;
use super::{Ball, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rounding {
    /// Toward zero; matches the `1.555…` style of truncated decimal tables.
    Truncate,
    HalfEven,
    /// Away from zero; used for printing upper bounds of radii.
    Up,
}

fn pow10(k: u32) -> BigInt {
    BigInt::from(10u32).pow(k)
}

/// Rounds the nonnegative rational `n/d` to an integer.
fn round_ratio(n: &BigInt, d: &BigInt, mode: Rounding) -> BigInt {
    let (q, r) = n.div_rem(d);
    if r.is_zero() {
        return q;
    }
    match mode {
        Rounding::Truncate => q,
        Rounding::Up => q + 1,
        Rounding::HalfEven => {
            let twice = &r * 2u32;
            match twice.cmp(d) {
                std::cmp::Ordering::Less => q,
                std::cmp::Ordering::Greater => q + 1,
                std::cmp::Ordering::Equal => {
                    if q.is_even() {
                        q
                    } else {
                        q + 1
                    }
                }
            }
        }
    }
}

/// Decimal exponent `e` with `10^e <= |q| < 10^(e+1)`; `q` nonzero.
pub fn decimal_exponent(q: &Rational) -> i64 {
    let n = q.numer().abs();
    let d = q.denom().clone();
    let mut e = n.to_string().len() as i64 - d.to_string().len() as i64;
    // normalize so 10^e <= n/d
    loop {
        let ge = if e >= 0 {
            n >= &d * pow10(e as u32)
        } else {
            &n * pow10((-e) as u32) >= d
        };
        if ge {
            let next = e + 1;
            let ge_next = if next >= 0 {
                n >= &d * pow10(next as u32)
            } else {
                &n * pow10((-next) as u32) >= d
            };
            if ge_next {
                e = next;
                continue;
            }
            return e;
        }
        e -= 1;
    }
}

/// `d.ddd…e±x` with `digits` significant digits.
pub fn to_scientific(q: &Rational, digits: usize, mode: Rounding) -> String {
    let (mantissa, exp) = scientific_parts(q, digits, mode);
    format!("{mantissa}e{exp}")
}

/// Mantissa string (with sign and point) and decimal exponent.
pub fn scientific_parts(q: &Rational, digits: usize, mode: Rounding) -> (String, i64) {
    let digits = digits.max(1);
    if q.is_zero() {
        let frac = if digits > 1 {
            format!(".{}", "0".repeat(digits - 1))
        } else {
            String::new()
        };
        return (format!("0{frac}"), 0);
    }
    let mut e = decimal_exponent(q);
    let scaled = |e: i64| {
        let shift = digits as i64 - 1 - e;
        let (n, d) = (q.numer().abs(), q.denom().clone());
        if shift >= 0 {
            round_ratio(&(n * pow10(shift as u32)), &d, mode)
        } else {
            round_ratio(&n, &(d * pow10((-shift) as u32)), mode)
        }
    };
    let mut m = scaled(e);
    if m >= pow10(digits as u32) {
        e += 1;
        m = scaled(e);
    }
    let s = m.to_string();
    let sign = if q.is_negative() { "-" } else { "" };
    let body = if digits > 1 {
        format!("{}.{}", &s[..1], &s[1..])
    } else {
        s
    };
    (format!("{sign}{body}"), e)
}

/// Fixed-point with `decimals` digits after the point.
pub fn to_fixed(q: &Rational, decimals: usize, mode: Rounding) -> String {
    let scale = pow10(decimals as u32);
    let m = round_ratio(&(q.numer().abs() * &scale), q.denom(), mode);
    let (int, frac) = m.div_rem(&scale);
    let sign = if q.is_negative() && !m.is_zero() { "-" } else { "" };
    if decimals == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{:0>width$}", frac.to_string(), width = decimals)
    }
}

/// Upper bound of a magnitude in 3-digit scientific notation.
pub fn mag_to_scientific(m: &Mag) -> String {
    if m.is_zero() {
        return "0".to_string();
    }
    to_scientific(&m.to_dyadic().to_rational(), 3, Rounding::Up)
}

/// Formats a ball with a formatter that must agree on both endpoints, so the
/// printed digits are certified.
pub fn certified<F>(b: &Ball, format: F) -> Result<String>
where
    F: Fn(&Rational) -> String,
{
    let lo = format(&b.lower().to_rational());
    let hi = format(&b.upper().to_rational());
    if lo == hi {
        Ok(lo)
    } else {
        Err(Error::precision(
            format!("printed digits not certified ({lo} vs {hi})"),
            b.precision(),
        ))
    }
}

/// Integer power of ten as a rational, e.g. for paper-style thresholds `m·10^e`.
pub fn sci(mantissa: &str, exp10: i32) -> Rational {
    let m: Rational = parse_decimal(mantissa).expect("valid decimal literal");
    let p = Rational::from_integer(BigInt::from(10u32))
        .pow(exp10)
        .expect("nonzero base");
    m * p
}

/// Parses `123.456` (or `-0.5`) exactly.
pub fn parse_decimal(s: &str) -> Result<Rational> {
    let s = s.trim();
    let (int, frac) = s.split_once('.').unwrap_or((s, ""));
    let digits = format!("{int}{frac}");
    let n: BigInt = digits
        .parse()
        .map_err(|_| Error::invalid(format!("not a decimal: {s:?}")))?;
    Rational::new(n, pow10(frac.len() as u32))
}

/// Checks that `q` agrees with `mantissa·10^exp` on the digits given.
pub fn matches_truncated(q: &Rational, mantissa: &str, exp: i64) -> bool {
    let digits = mantissa.chars().filter(|c| c.is_ascii_digit()).count();
    let (m, e) = scientific_parts(q, digits, Rounding::Truncate);
    m == mantissa && e == exp
}
