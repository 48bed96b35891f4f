//! Bernoulli numbers, Bernoulli polynomials, the two quadratic characters we
//! need, and generalized Bernoulli numbers `B_{n,chi}`.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::Rational;

struct BernoulliCache {
    values: Vec<Rational>,
    /// lcm of the denominators of `values`
    lcm: BigInt,
}

fn cache() -> &'static RwLock<BernoulliCache> {
    static CACHE: OnceLock<RwLock<BernoulliCache>> = OnceLock::new();
    CACHE.get_or_init(|| {
        RwLock::new(BernoulliCache {
            values: vec![Rational::one(), Rational::frac(-1, 2)],
            lcm: BigInt::from(2),
        })
    })
}

/// `B_n` with `B_1 = -1/2`, memoized.
///
/// Computed from `sum_{k=0}^{n} C(n+1, k) B_k = 0`. The sum is carried out in
/// integers scaled by the lcm of the earlier denominators, so each step is a
/// single reduction.
pub fn bernoulli(n: usize) -> Rational {
    if n >= 3 && n % 2 == 1 {
        return Rational::zero();
    }
    if let Some(b) = cache().read().expect("bernoulli cache poisoned").values.get(n) {
        return b.clone();
    }
    let mut guard = cache().write().expect("bernoulli cache poisoned");
    while guard.values.len() <= n {
        let m = guard.values.len();
        let next = if m % 2 == 1 {
            Rational::zero()
        } else {
            next_bernoulli(&guard.values, &guard.lcm)
        };
        guard.lcm = guard.lcm.lcm(next.denom());
        guard.values.push(next);
    }
    guard.values[n].clone()
}

fn next_bernoulli(prev: &[Rational], lcm: &BigInt) -> Rational {
    let m = prev.len();
    // sum_{k<m} C(m+1, k) * B_k * lcm, all integers
    let mut binom = BigInt::one();
    let mut acc = BigInt::zero();
    for (k, b) in prev.iter().enumerate() {
        if !b.is_zero() {
            let scale = lcm / b.denom();
            acc += &binom * b.numer() * scale;
        }
        binom = binom * (m + 1 - k) / (k + 1);
    }
    Rational::new(-acc, lcm * BigInt::from(m + 1)).expect("nonzero denominator")
}

/// Coefficients of `B_n(x)` in ascending powers of `x`.
pub fn bernoulli_polynomial(n: usize) -> Vec<Rational> {
    let mut coeffs = vec![Rational::zero(); n + 1];
    let mut binom = BigInt::one();
    for k in 0..=n {
        // term C(n,k) B_k x^(n-k)
        coeffs[n - k] = Rational::from_integer(binom.clone()) * bernoulli(k);
        binom = binom * (n - k) / (k + 1);
    }
    coeffs
}

/// Horner evaluation of an ascending coefficient list.
pub fn eval_polynomial(coeffs: &[Rational], x: &Rational) -> Rational {
    coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

/// A Dirichlet character with values in `{-1, 0, 1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirichletCharacter {
    modulus: u64,
    /// `values[a mod modulus]`
    values: Vec<i8>,
}

impl DirichletCharacter {
    /// Builds a character from `chi(1), ..., chi(f)` after checking it is a
    /// real character: zero exactly off the units and multiplicative on them.
    pub fn from_values(values_from_one: &[i8]) -> Result<Self> {
        let f = values_from_one.len() as u64;
        if f == 0 {
            return Err(Error::invalid("character table is empty"));
        }
        let mut values = vec![0i8; f as usize];
        for (i, &v) in values_from_one.iter().enumerate() {
            values[((i as u64 + 1) % f) as usize] = v;
        }
        let chi = DirichletCharacter { modulus: f, values };
        for a in 0..f {
            let unit = a.gcd(&f) == 1;
            let v = chi.value(a as i64);
            if unit != (v != 0) || v.abs() > 1 {
                return Err(Error::invalid(format!("bad character value at {a} mod {f}")));
            }
            for b in 0..f {
                if unit && b.gcd(&f) == 1 && chi.value((a * b) as i64) != v * chi.value(b as i64) {
                    return Err(Error::invalid(format!("character not multiplicative mod {f}")));
                }
            }
        }
        Ok(chi)
    }

    pub fn trivial() -> Self {
        DirichletCharacter {
            modulus: 1,
            values: vec![1],
        }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn value(&self, a: i64) -> i8 {
        self.values[a.rem_euclid(self.modulus as i64) as usize]
    }

    /// `chi(1), ..., chi(f)`.
    pub fn values_from_one(&self) -> Vec<i8> {
        (1..=self.modulus as i64).map(|a| self.value(a)).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.modulus == 1
    }

    /// `chi(-1) = 1`.
    pub fn is_even(&self) -> bool {
        self.value(-1) == 1
    }
}

/// The quadratic character of discriminant `d`, for `d` in `{5, -3}`.
pub fn kronecker_character(d: i64) -> Result<DirichletCharacter> {
    match d {
        5 => DirichletCharacter::from_values(&[1, -1, -1, 1, 0]),
        -3 => DirichletCharacter::from_values(&[1, -1, 0]),
        other => Err(Error::UnsupportedDiscriminant(other)),
    }
}

/// `B_{n,chi} = f^(n-1) sum_{a=1}^{f} chi(a) B_n(a/f)`.
pub fn generalized_bernoulli(n: usize, chi: &DirichletCharacter) -> Result<Rational> {
    if n == 0 {
        return Err(Error::invalid("generalized Bernoulli numbers need n >= 1"));
    }
    let f = chi.modulus();
    let poly = bernoulli_polynomial(n);
    let sum: Rational = (1..=f)
        .filter(|&a| chi.value(a as i64) != 0)
        .map(|a| {
            let x = Rational::frac(a as i64, f as i64);
            eval_polynomial(&poly, &x) * Rational::from(chi.value(a as i64) as i64)
        })
        .sum();
    let scale = Rational::from_integer(BigInt::from(f).pow(n as u32 - 1));
    Ok(sum * scale)
}
