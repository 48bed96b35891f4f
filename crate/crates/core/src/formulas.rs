//! Closed forms for sphere volumes, the constant `C(r)`, lambda factors,
//! parahoric indices, and the Euler characteristics and volumes of `M^n`,
//! `O^n` and the suborbifold `O_1^30`.

use std::collections::HashSet;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::bernoulli::{bernoulli, kronecker_character};
use crate::error::{Error, Result};
use crate::exact::consts::pi;
use crate::exact::{decimal, Ball, PiScaled, Rational};
use crate::lfunctions::{dedekind_zeta_neg_quad, dirichlet_l_numeric, l_rel_numeric, zeta_numeric, LMode};

const GUARD: u32 = 32;

/// Precision of the runtime check of the compact Euler characteristic.
const VALIDATION_PRECISION: u32 = 384;

fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

fn pow(q: i64, e: u32) -> BigInt {
    BigInt::from(q).pow(e)
}

fn require(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::invalid(msg))
    }
}

/// `b^(half/2)` for a positive integer `b`.
fn pow_half(b: i64, half: i64, prec: u32) -> Result<Ball> {
    let base = Rational::from(b);
    let whole = base.pow(half.div_euclid(2) as i32)?;
    let ball = Ball::from_rational(&whole, prec);
    if half.rem_euclid(2) == 0 {
        Ok(ball)
    } else {
        Ok(ball.mul(&Ball::from_int(b, prec).sqrt()?))
    }
}

/// `vol(S^n) = 2 pi^((n+1)/2) / Gamma((n+1)/2)`, exactly.
pub fn sphere_volume(n: u32) -> Result<PiScaled> {
    require(n >= 2, "sphere volume needs n >= 2")?;
    let m = n.div_ceil(2) as u64;
    if n % 2 == 1 {
        Ok(PiScaled::new(Rational::new(2, factorial(m - 1))?, m as i64))
    } else {
        // Gamma(m + 1/2) = (2m)! sqrt(pi) / (4^m m!)
        let m = (n / 2) as u64;
        let coeff = Rational::new((BigInt::one() << (2 * m as usize + 1)) * factorial(m), factorial(2 * m))?;
        Ok(PiScaled::new(coeff, m as i64))
    }
}

/// `C(r) = prod_{j=1}^{r} (2j-1)! / (2 pi)^(2j)`.
pub fn c_constant(r: u32) -> Result<PiScaled> {
    require(r >= 1, "C(r) needs r >= 1")?;
    let mut coeff = Rational::one();
    for j in 1..=r as u64 {
        coeff = coeff * Rational::new(factorial(2 * j - 1), BigInt::one() << (2 * j as usize))?;
    }
    Ok(PiScaled::new(coeff, -((r * (r + 1)) as i64)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LambdaKind {
    /// `lambda_q(r) = 1` if `r = 0, 1 (mod 4)`, else `q^r - 1`.
    Plain,
    /// `lambda'_q(r) = (q^r - 1)(q^(r-1) - 1)/(q + 1)` for `q = 2`, `r = 3 (mod 4)`, else 1.
    Prime,
    /// `lambda-bar_q(r) = 1` for even `r`, else `(q^r - 1)/2`.
    Bar,
}

pub fn lambda(kind: LambdaKind, q: u64, r: u32) -> Result<Rational> {
    require(q >= 2 && r >= 1, "lambda needs q >= 2 and r >= 1")?;
    let qr = || BigInt::from(q).pow(r) - 1;
    Ok(match kind {
        LambdaKind::Plain if r % 4 <= 1 => Rational::one(),
        LambdaKind::Plain => Rational::from_integer(qr()),
        LambdaKind::Prime if q == 2 && r % 4 == 3 => Rational::new(qr() * (BigInt::from(q).pow(r - 1) - 1), q + 1)?,
        LambdaKind::Prime => Rational::one(),
        LambdaKind::Bar if r.is_multiple_of(2) => Rational::one(),
        LambdaKind::Bar => Rational::new(qr(), 2)?,
    })
}

/// Index products `[P_v : P_v^*]` for the local types that occur.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParahoricForm {
    /// Split `B_r`: `prod_{j<=r} (q^(2j) - 1)`.
    BrHyperspecial,
    /// `lambda_2(r) [P_2 : P_2^*]` for type `B_r` at 2, same product.
    BrCombined,
    /// `lambda'_q(r) [P_v : P_v^*]` for odd `r`: `(q^r - 1) prod_{j<r} (q^(2j) - 1)`.
    DrOddCombined,
    /// Quasi-split `2D_r`: `(q^r + 1) prod_{j<r} (q^(2j) - 1)`.
    TwoDr,
    /// Reduction of type `B_(r-1)`: `prod_{j<r} (q^(2j) - 1)`.
    BrMinus1,
}

pub fn parahoric_index(form: ParahoricForm, q: u64, r: u32) -> Result<BigInt> {
    require(q >= 2 && r >= 2, "parahoric index needs q >= 2 and r >= 2")?;
    let q = BigInt::from(q);
    let prod = |upto: u32| (1..=upto).fold(BigInt::one(), |acc, j| acc * (q.pow(2 * j) - 1));
    Ok(match form {
        ParahoricForm::BrHyperspecial | ParahoricForm::BrCombined => prod(r),
        ParahoricForm::DrOddCombined => (q.pow(r) - 1) * prod(r - 1),
        ParahoricForm::TwoDr => (q.pow(r) + 1) * prod(r - 1),
        ParahoricForm::BrMinus1 => prod(r - 1),
    })
}

/// `|chi(M^(2r))| = 2 prod_{j=1}^{r} (4^j - 1)(9^j - 1) |B_2j| / (4j)`.
pub fn euler_char_noncompact_even(r: u32) -> Result<Rational> {
    require(r >= 2, "noncompact Euler characteristic needs r >= 2")?;
    let mut v = Rational::from(2);
    for j in 1..=r {
        let num = (pow(4, j) - 1) * (pow(9, j) - 1);
        v = v * bernoulli(2 * j as usize).abs() * Rational::new(num, 4 * j as i64)?;
    }
    let two = BigInt::from(2);
    if !v.is_integer() || !v.is_positive() || !(v.numer() % &two).is_zero() {
        return Err(Error::Consistency(format!(
            "|chi(M^{})| = {v} is not a positive even integer",
            2 * r
        )));
    }
    Ok(v)
}

/// `prod_{j=1}^{r-1} (4^j - 1)(9^j - 1) |B_2j| / (8j)`.
fn odd_manifold_product(r: u32) -> Rational {
    (1..r)
        .map(|j| {
            let num = (pow(4, j) - 1) * (pow(9, j) - 1);
            bernoulli(2 * j as usize).abs() * Rational::new(num, 8 * j as i64).expect("nonzero")
        })
        .product()
}

/// `vol(M^n)`, with relative radius at most `10^-30`.
pub fn vol_noncompact(n: u32, prec: u32) -> Result<Ball> {
    require(n >= 4, "vol(M^n) needs n >= 4")?;
    crate::exact::check_precision(prec)?;
    let work = prec + GUARD;
    let value = if n.is_multiple_of(2) {
        let chi = euler_char_noncompact_even(n / 2)?;
        sphere_volume(n)?.mul_rational(&(chi / Rational::from(2))).eval(work)
    } else {
        let r = n.div_ceil(2);
        let product = odd_manifold_product(r);
        if r % 2 == 1 {
            let factor = Rational::from_integer((pow(2, r) - 1) * (pow(3, r) - 1)) * product;
            zeta_numeric(r, work)?.mul_rational(&factor)
        } else {
            // zeta_l(r)/zeta(r) = L(r, chi_-3), and 3^(r - 1/2)
            let chi = kronecker_character(-3)?;
            let factor = Rational::from_integer(pow(2, r) + 1) * product;
            dirichlet_l_numeric(&chi, r, work)?
                .mul_rational(&factor)
                .mul(&pow_half(3, 2 * r as i64 - 1, work)?)
        }
    };
    value
        .with_precision(prec)
        .require_relative_radius(&decimal::sci("1", -30), "vol(M^n)")
}

/// `zeta_k(s) = zeta(s) L(s, chi_5)` for `k = Q(sqrt 5)`, by series.
fn zeta_k_numeric(s: u32, prec: u32) -> Result<Ball> {
    let chi5 = kronecker_character(5)?;
    Ok(zeta_numeric(s, prec)?.mul(&dirichlet_l_numeric(&chi5, s, prec)?))
}

/// `4 lambda 5^(r^2 + r/2) C(r)^2 prod_{j=1}^{r} zeta_k(2j)`, evaluated as
/// written with `zeta_k(2j)` summed numerically.
pub fn euler_char_compact_even_direct(r: u32, lambda: &Rational, prec: u32) -> Result<Ball> {
    require(r >= 2, "compact Euler characteristic needs r >= 2")?;
    let work = prec + GUARD;
    let mut v = c_constant(r)?
        .powi(2)
        .mul_rational(&(lambda * &Rational::from(4)))
        .eval(work);
    v = v.mul(&pow_half(5, (2 * r * r + r) as i64, work)?);
    for j in 1..=r {
        v = v.mul(&zeta_k_numeric(2 * j, work)?);
    }
    Ok(v.with_precision(prec))
}

/// Confirms, once per `r`, that the reflected form agrees with the direct
/// evaluation to 25 significant digits.
fn validate_compact_form(r: u32, reflected: &Rational, lambda: &Rational) -> Result<()> {
    static VALIDATED: OnceLock<Mutex<HashSet<u32>>> = OnceLock::new();
    let validated = VALIDATED.get_or_init(Default::default);
    if validated.lock().expect("validation cache poisoned").contains(&r) {
        return Ok(());
    }
    let direct = euler_char_compact_even_direct(r, lambda, VALIDATION_PRECISION)?;
    let diff = direct.sub(&Ball::from_rational(reflected, VALIDATION_PRECISION));
    let worst = diff.lower().abs().max(diff.upper().abs()).to_rational();
    let tolerance = reflected.abs() * decimal::sci("1", -25);
    if worst > tolerance {
        return Err(Error::Consistency(format!(
            "reflected |chi(O^{})| differs from the direct formula beyond 25 digits",
            2 * r
        )));
    }
    validated.lock().expect("validation cache poisoned").insert(r);
    Ok(())
}

/// `|chi(O^(2r))| = 4 lambda 4^-r prod_{j=1}^{r} |zeta_k(1 - 2j)|`, exactly,
/// with `lambda = lambda-bar_4(r)` unless overridden.
///
/// This is the functional-equation transform of the direct formula: the
/// powers of 5 and pi cancel. Each `r` is cross-checked against
/// [`euler_char_compact_even_direct`] before a value is returned.
pub fn euler_char_compact_even(r: u32, lambda_override: Option<&Rational>) -> Result<Rational> {
    require(r >= 2, "compact Euler characteristic needs r >= 2")?;
    let product: Rational = (1..=r)
        .map(|j| dedekind_zeta_neg_quad(j).map(|z| z.abs()))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .product();
    let prefactor = Rational::new(4, pow(4, r))?;
    let default = lambda(LambdaKind::Bar, 4, r)?;
    validate_compact_form(r, &(&prefactor * &default * &product), &default)?;
    let lambda = lambda_override.cloned().unwrap_or(default);
    Ok(prefactor * lambda * product)
}

/// `vol(O^(2r-1)) = 5^(r^2 - r/2) 11^(r - 1/2) (r-1)! / (2^(2r-1) pi^r)
/// * L_{l0|k}(r) C(r-1)^2 prod_{j=1}^{r-1} zeta_k(2j)`.
///
/// In [`LMode::LowerBound`] the result is a rigorous lower bound only.
pub fn vol_compact_odd(n: u32, prec: u32, l_mode: LMode, prime_cutoff: u64) -> Result<Ball> {
    require(n >= 5 && n % 2 == 1, "vol(O^n) needs odd n >= 5")?;
    crate::exact::check_precision(prec)?;
    let work = prec + GUARD;
    let r = n.div_ceil(2);
    let head = PiScaled::new(
        Rational::new(factorial(r as u64 - 1), BigInt::one() << (2 * r as usize - 1))?,
        -(r as i64),
    );
    let mut ball = (c_constant(r - 1)?.powi(2) * head).eval(work);
    let r = r as i64;
    ball = ball
        .mul(&pow_half(5, 2 * r * r - r, work)?)
        .mul(&pow_half(11, 2 * r - 1, work)?)
        .mul(&l_rel_numeric(r as u32, work, l_mode, prime_cutoff)?);
    for j in 1..r as u32 {
        ball = ball.mul(&zeta_k_numeric(2 * j, work)?);
    }
    Ok(ball.with_precision(prec))
}

/// `|chi(O_1^30)| = ((4^15 - 1)/2)((11^15 + 1)/2) 4^-14 prod_{i=1}^{15} |zeta_k(1 - 2i)|`.
pub fn euler_char_suborbifold_30() -> Result<Rational> {
    let mut v = Rational::new((pow(4, 15) - 1) * (pow(11, 15) + 1), pow(4, 14) * 4)?;
    for i in 1..=15 {
        v = v * dedekind_zeta_neg_quad(i)?.abs();
    }
    Ok(v)
}

/// Stirling lower bound for `C(r)`:
/// `prod_{j=1}^{r} (2j-1)^(2j-1) / (2 pi (2 pi e)^(2j-1))`.
pub fn c_constant_stirling_bound(r: u32, prec: u32) -> Result<Ball> {
    let two_pi = pi(prec).mul_2exp(1);
    let two_pi_e = two_pi.mul(&crate::exact::consts::e(prec));
    let mut v = Ball::one(prec);
    for j in 1..=r as i64 {
        let k = 2 * j - 1;
        let num = Ball::from_int(BigInt::from(k).pow(k as u32), prec);
        v = v.mul(&num).checked_div(&two_pi.mul(&two_pi_e.powi(k)?))?;
    }
    Ok(v)
}
