//! Dedekind zeta functions by truncated Euler products with a rigorous tail.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use super::ffield::factor_degrees_mod_p;
use super::poly::{poly_discriminant, IntPoly};
use crate::error::{Error, Result};
use crate::exact::{Ball, Dyadic, Mag, Rational};

pub const DEFAULT_PRIME_CUTOFF: u64 = 100_000;

const GUARD: u32 = 32;

/// Smallest absolute discriminant of a number field of each degree.
const MIN_ABS_DISCRIMINANT: [u64; 5] = [1, 1, 3, 23, 117];

/// A number field given by a monic defining polynomial whose root generates
/// the full ring of integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberField {
    label: String,
    polynomial: IntPoly,
    discriminant: BigInt,
    contains_field: Option<String>,
}

impl NumberField {
    pub fn new(
        label: impl Into<String>,
        ascending: &[i64],
        discriminant: i64,
        contains_field: Option<&str>,
    ) -> Result<Self> {
        let polynomial = IntPoly::from_i64(ascending);
        if polynomial.degree().unwrap_or(0) == 0 || !polynomial.leading().is_some_and(One::is_one) {
            return Err(Error::invalid("defining polynomial must be monic of positive degree"));
        }
        Ok(NumberField {
            label: label.into(),
            polynomial,
            discriminant: BigInt::from(discriminant),
            contains_field: contains_field.map(str::to_string),
        })
    }

    pub fn rationals() -> Self {
        Self::new("Q", &[0, 1], 1, None).expect("valid field")
    }

    /// `k = Q(sqrt 5)`, generated by the golden ratio.
    pub fn q_sqrt5() -> Self {
        Self::new("Q(sqrt5)", &[-1, -1, 1], 5, None).expect("valid field")
    }

    pub fn q_sqrt_minus3() -> Self {
        Self::new("Q(sqrt-3)", &[1, 1, 1], -3, None).expect("valid field")
    }

    /// The quartic field of discriminant -275, a quadratic extension of `k`
    /// with one complex place.
    pub fn ell0() -> Self {
        Self::new("l0", &[-1, 2, 0, -1, 1], -275, Some("Q(sqrt5)")).expect("valid field")
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn polynomial(&self) -> &IntPoly {
        &self.polynomial
    }

    pub fn degree(&self) -> usize {
        self.polynomial.degree().expect("nonzero polynomial")
    }

    pub fn discriminant(&self) -> &BigInt {
        &self.discriminant
    }

    pub fn contains_field(&self) -> Option<&str> {
        self.contains_field.as_deref()
    }

    /// Checks that `Z[x]/(f)` is the maximal order.
    ///
    /// `disc(f) = m^2 d_K`; every candidate `m > 1` is ruled out by requiring
    /// `|disc(f)| / m^2` to fall below the smallest discriminant possible in
    /// this degree, and the result must equal the recorded discriminant.
    pub fn verify_maximal_order(&self) -> Result<()> {
        let disc = poly_discriminant(&self.polynomial)?;
        let fail = || Error::EquationOrderNotMaximal {
            label: self.label.clone(),
            discriminant: disc.to_string(),
        };
        if disc != self.discriminant {
            return Err(fail());
        }
        let n = self.degree();
        let min = *MIN_ABS_DISCRIMINANT.get(n).ok_or_else(fail)?;
        let abs = disc.abs();
        for m in square_divisors(&abs) {
            if m > BigInt::one() && &abs / (&m * &m) >= BigInt::from(min) {
                return Err(fail());
            }
        }
        Ok(())
    }
}

/// All `m >= 1` with `m^2 | n`, for `n` small enough for trial division.
fn square_divisors(n: &BigInt) -> Vec<BigInt> {
    let mut rest = n.to_u64().expect("discriminant fits in u64");
    let mut exps = Vec::new();
    let mut p = 2u64;
    while p * p <= rest {
        let mut e = 0;
        while rest.is_multiple_of(p) {
            rest /= p;
            e += 1;
        }
        if e >= 2 {
            exps.push((p, e / 2));
        }
        p += 1;
    }
    let mut out = vec![BigInt::one()];
    for (p, k) in exps {
        let mut next = Vec::new();
        for m in &out {
            let mut pk = BigInt::one();
            for _ in 0..=k {
                next.push(m * &pk);
                pk *= p;
            }
        }
        out = next;
    }
    out
}

pub fn primes_up_to(n: u64) -> Vec<u64> {
    let n = n as usize;
    let mut sieve = vec![true; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if sieve[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
    }
    out
}

/// Residue degrees of the primes above each `p <= cutoff`.
type Splitting = Vec<(u64, Vec<u32>)>;

type Cache<K, V> = OnceLock<Mutex<HashMap<K, V>>>;

fn splitting_data(field: &NumberField, cutoff: u64) -> Result<Arc<Splitting>> {
    static CACHE: Cache<(IntPoly, u64), Arc<Splitting>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (field.polynomial.clone(), cutoff);
    if let Some(s) = cache.lock().expect("splitting cache poisoned").get(&key) {
        return Ok(s.clone());
    }
    let mut data = Vec::new();
    for p in primes_up_to(cutoff) {
        let pattern = factor_degrees_mod_p(&field.polynomial.reduce_mod(p), p)?;
        data.push((p, pattern.into_iter().map(|(d, _)| d).collect()));
    }
    let data = Arc::new(data);
    cache
        .lock()
        .expect("splitting cache poisoned")
        .insert(key, data.clone());
    Ok(data)
}

/// Residue field sizes `p^f` of the primes of `field` above `p <= cutoff`,
/// in increasing order.
pub fn residue_field_sizes(field: &NumberField, cutoff: u64) -> Result<Vec<u64>> {
    field.verify_maximal_order()?;
    let data = splitting_data(field, cutoff)?;
    let mut out: Vec<u64> = data
        .iter()
        .flat_map(|(p, degrees)| degrees.iter().map(move |&d| p.pow(d)))
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// `zeta_K(s)` for integer `s >= 2`.
///
/// The omitted factors satisfy `log prod_{p > P} <= t` with
/// `t = deg P^(1-s) / ((s-1)(1-2^-s))`, so the full product lies in
/// `partial * [1, 1/(1-t)]`.
pub fn dedekind_zeta_numeric(field: &NumberField, s: u32, prec: u32, cutoff: u64) -> Result<Ball> {
    crate::exact::check_precision(prec)?;
    if s < 2 {
        return Err(Error::invalid("Euler product needs s >= 2"));
    }
    if cutoff < 2 {
        return Err(Error::invalid("prime cutoff must be at least 2"));
    }
    static RESULTS: Cache<(String, IntPoly, u32, u32, u64), Ball> = OnceLock::new();
    let results = RESULTS.get_or_init(Default::default);
    let key = (field.label.clone(), field.polynomial.clone(), s, prec, cutoff);
    if let Some(b) = results.lock().expect("zeta cache poisoned").get(&key) {
        return Ok(b.clone());
    }
    field.verify_maximal_order()?;

    let work = prec + GUARD;
    let data = splitting_data(field, cutoff)?;
    let mut product = Ball::one(work);
    let mut negligible = Mag::zero();
    for (p, degrees) in data.iter() {
        for &d in degrees {
            let q = BigInt::from(*p).pow(s * d);
            let bits = q.bits();
            if bits > work as u64 + 2 {
                // q/(q-1) = 1 + 1/(q-1) with 1/(q-1) <= 2^(2-bits)
                negligible = negligible.add(&Mag::pow2(2 - bits as i64));
                continue;
            }
            let factor = Ball::from_int(q.clone(), work).checked_div(&Ball::from_int(q - 1, work))?;
            product = product.mul(&factor);
        }
    }
    if !negligible.is_zero() {
        let one_plus = Ball::from_endpoints(
            &Dyadic::from_int(1),
            &Dyadic::from_int(1).add(&negligible.to_dyadic()),
            work,
        );
        product = product.mul(&one_plus);
    }

    let degree = field.degree() as i64;
    let two_s = Rational::from_integer(BigInt::one() << s as usize);
    let t = Rational::from(degree) * Rational::new(1, BigInt::from(cutoff).pow(s - 1))?
        / (Rational::from(s as i64 - 1) * (Rational::one() - two_s.recip()?));
    if t >= Rational::one() {
        return Err(Error::TailBound { s, cutoff });
    }
    let upper = (Rational::one() - t).recip()?;
    let (hi, ulp) = Dyadic::from_rational_trunc(&upper, work);
    let hi = match ulp {
        Some(e) => hi.add(&Dyadic::new(BigInt::one(), e)),
        None => hi,
    };
    let tail = Ball::from_endpoints(&Dyadic::from_int(1), &hi, work);
    let value = product.mul(&tail).with_precision(prec);
    results.lock().expect("zeta cache poisoned").insert(key, value.clone());
    Ok(value)
}

/// How `L_{l0|k}(s) = zeta_{l0}(s) / zeta_k(s)` enters the volume of `O^n`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum LMode {
    /// Rigorous enclosure of the quotient of Euler products.
    #[default]
    Exact,
    /// The constant 0.973, valid only as a lower bound for `s >= 3`.
    LowerBound,
}

/// The constant lower bound `L_{l0|k}(s) > 0.973` for `s >= 3`.
pub fn l_rel_lower_bound() -> Rational {
    Rational::frac(973, 1000)
}

pub fn l_rel_numeric(s: u32, prec: u32, mode: LMode, cutoff: u64) -> Result<Ball> {
    if s < 3 {
        return Err(Error::invalid("relative L-value needs s >= 3"));
    }
    match mode {
        LMode::LowerBound => Ok(Ball::from_rational(&l_rel_lower_bound(), prec)),
        LMode::Exact => {
            let big = dedekind_zeta_numeric(&NumberField::ell0(), s, prec, cutoff)?;
            let small = dedekind_zeta_numeric(&NumberField::q_sqrt5(), s, prec, cutoff)?;
            big.checked_div(&small)
        }
    }
}

/// Primes dividing the discriminant.
pub fn ramified_primes(field: &NumberField) -> Vec<u64> {
    let d = field.discriminant.abs().to_u64().expect("small discriminant");
    primes_up_to(d).into_iter().filter(|p| d.is_multiple_of(*p)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bernoulli::kronecker_character;
    use crate::exact::decimal::parse_decimal;
    use crate::lfunctions::series::{dirichlet_l_numeric, zeta_numeric};

    #[test]
    fn maximal_orders() {
        for f in [
            NumberField::rationals(),
            NumberField::q_sqrt5(),
            NumberField::q_sqrt_minus3(),
            NumberField::ell0(),
        ] {
            f.verify_maximal_order().unwrap();
        }
        assert_eq!(ramified_primes(&NumberField::ell0()), vec![5, 11]);
    }

    #[test]
    fn non_maximal_order_is_rejected() {
        // Z[sqrt 5] has index 2 in the ring of integers of Q(sqrt 5)
        let f = NumberField::new("Z[sqrt5]", &[-5, 0, 1], 5, None).unwrap();
        assert!(matches!(
            f.verify_maximal_order(),
            Err(Error::EquationOrderNotMaximal { .. })
        ));
        let g = NumberField::new("Z[sqrt5]", &[-5, 0, 1], 20, None).unwrap();
        assert!(matches!(
            g.verify_maximal_order(),
            Err(Error::EquationOrderNotMaximal { .. })
        ));
    }

    #[test]
    fn residue_fields_of_golden_field() {
        let q = residue_field_sizes(&NumberField::q_sqrt5(), 50).unwrap();
        assert_eq!(&q[..12], &[4, 5, 9, 11, 11, 19, 19, 29, 29, 31, 31, 41]);
        assert!(q.contains(&49));
    }

    #[test]
    fn rationals_agree_with_series() {
        for s in [2u32, 3, 5] {
            let euler = dedekind_zeta_numeric(&NumberField::rationals(), s, 128, 20_000).unwrap();
            let series = zeta_numeric(s, 128).unwrap();
            assert!(euler.overlaps(&series), "s = {s}");
        }
    }

    #[test]
    fn golden_field_factorizes() {
        let chi5 = kronecker_character(5).unwrap();
        for s in [2u32, 3, 4, 16] {
            let euler = dedekind_zeta_numeric(&NumberField::q_sqrt5(), s, 256, DEFAULT_PRIME_CUTOFF).unwrap();
            let series = zeta_numeric(s, 256)
                .unwrap()
                .mul(&dirichlet_l_numeric(&chi5, s, 256).unwrap());
            assert!(euler.overlaps(&series), "s = {s}");
        }
    }

    #[test]
    fn tail_too_large() {
        assert!(matches!(
            dedekind_zeta_numeric(&NumberField::ell0(), 2, 128, 3),
            Err(Error::TailBound { .. })
        ));
    }

    #[test]
    fn relative_l_values() {
        let l3 = l_rel_numeric(3, 256, LMode::Exact, DEFAULT_PRIME_CUTOFF).unwrap();
        let zk3 = dedekind_zeta_numeric(&NumberField::q_sqrt5(), 3, 256, DEFAULT_PRIME_CUTOFF).unwrap();
        assert!(l3.lower().to_rational() > l_rel_lower_bound());
        assert!(l3.upper() < zk3.lower());
        let l16 = l_rel_numeric(16, 256, LMode::Exact, DEFAULT_PRIME_CUTOFF).unwrap();
        assert!(l16.lower().to_rational() > parse_decimal("0.9999").unwrap());
        assert!(l16.upper().to_rational() < parse_decimal("1.0001").unwrap());
        let lb = l_rel_numeric(7, 256, LMode::LowerBound, DEFAULT_PRIME_CUTOFF).unwrap();
        assert!(lb.contains_rational(&l_rel_lower_bound()));
    }
}
