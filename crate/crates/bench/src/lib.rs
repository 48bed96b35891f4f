//! Benchmark workloads, shared by the criterion benches so they can also be
//! smoke-tested.
//!
//! Several engine layers memoize (Bernoulli numbers, L-values, Euler
//! products), so repeated iterations measure the warm path; the finite-field
//! and Hurwitz-series workloads are uncached.

use hypvol_core::formulas::{euler_char_compact_even, euler_char_noncompact_even, vol_noncompact};
use hypvol_core::lfunctions::{factor_degrees_mod_p, hurwitz_zeta, primes_up_to, NumberField};
use hypvol_core::{verify_dimension, Config, Rational, Result};

/// Exact `|chi(M^(2r))|` and `|chi(O^(2r))|`.
pub fn euler_characteristics(r: u32) -> Result<(Rational, Rational)> {
    Ok((euler_char_noncompact_even(r)?, euler_char_compact_even(r, None)?))
}

/// Splitting pattern of the quartic field at every prime up to `bound`;
/// returns the number of primes where it splits completely.
pub fn quartic_splitting(bound: u64) -> Result<usize> {
    let f = NumberField::ell0();
    let mut split = 0;
    for p in primes_up_to(bound) {
        let pattern = factor_degrees_mod_p(&f.polynomial().reduce_mod(p), p)?;
        split += usize::from(pattern.len() == 4 && pattern.iter().all(|&(d, m)| d == 1 && m == 1));
    }
    Ok(split)
}

/// `zeta(s, 1/3)` by Euler-Maclaurin, uncached.
pub fn hurwitz(s: u32, prec: u32) -> Result<f64> {
    Ok(hurwitz_zeta(s, 1, 3, prec)?.to_f64())
}

pub fn volume(n: u32, prec: u32) -> Result<f64> {
    Ok(vol_noncompact(n, prec)?.to_f64())
}

pub fn verify(n: u32) -> Result<bool> {
    Ok(verify_dimension(n, &Config::default())?.verdict == hypvol_core::Verdict::Verified)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn workloads_run() {
        let (m, o) = euler_characteristics(16).unwrap();
        assert!(o < m);
        // x^4 - x^3 + 2x - 1 splits completely at a positive density of primes
        assert!(quartic_splitting(2000).unwrap() > 0);
        // direct sum with the integral tail as oracle
        let n = 100_000;
        let oracle: f64 =
            (0..n).map(|k| (k as f64 + 1.0 / 3.0).powi(-2)).sum::<f64>() + 1.0 / (n as f64 + 1.0 / 3.0 - 0.5);
        assert!((hurwitz(2, 128).unwrap() - oracle).abs() < 1e-9);
        assert!(volume(20, 256).unwrap() > 1e70);
        assert!(verify(40).unwrap());
    }
}
