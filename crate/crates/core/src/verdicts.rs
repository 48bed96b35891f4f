//! Per-dimension comparison of the smallest compact orbifold `O^n` with the
//! small noncompact manifold `M^n`.
//!
//! A dimension is verified when every manifold cover of `O^n`, and of every
//! other candidate orbifold of smaller volume than `M^n`, is shown to be
//! larger than `M^n`. Large dimensions follow from the volume ratio alone;
//! `n = 30, 32` use the denominator of the Euler characteristic; `n = 31`
//! uses the denominator of a totally geodesic suborbifold.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use rayon::prelude::*;

use crate::bernoulli::kronecker_character;
use crate::error::{Error, Result};
use crate::exact::decimal::sci;
use crate::exact::{Ball, BallOrdering, PrecisionPolicy, Rational};
use crate::formulas::{
    c_constant, euler_char_compact_even, euler_char_noncompact_even, euler_char_suborbifold_30, sphere_volume,
    vol_compact_odd, vol_noncompact,
};
use crate::lfunctions::{
    dirichlet_l_numeric, residue_field_sizes, zeta_numeric, LMode, NumberField, DEFAULT_PRIME_CUTOFF,
};

/// A comparison is decided only when the midpoint gap exceeds this multiple
/// of the combined radius.
pub const VERDICT_MARGIN: u64 = 10_000_000_000;

pub const MIN_DIMENSION: u32 = 30;

/// Residue fields of `Q(sqrt 5)` considered by the lambda scans.
const LAMBDA_SCAN_CUTOFF: u64 = 1000;

/// Published lower bounds for `|chi|` of the smallest orbifolds defined over
/// `Q(sqrt 2)`. Their inputs are not recomputed here.
pub fn q_sqrt2_chi_bound(n: u32) -> Option<Rational> {
    match n {
        30 => Some(sci("3.116", 235)),
        32 => Some(sci("9.071", 271)),
        _ => None,
    }
}

/// How the cover degree is read off an orbifold Euler characteristic.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum ParityRule {
    /// The degree is divisible by the reduced denominator.
    #[default]
    DenominatorOnly,
    /// The cover's Euler characteristic must also be even.
    ForceEven,
}

pub fn min_cover_degree(chi: &Rational, rule: ParityRule) -> Result<BigInt> {
    if chi.is_zero() {
        return Err(Error::invalid("cover degree needs a nonzero Euler characteristic"));
    }
    let d = chi.denom().clone();
    Ok(match rule {
        ParityRule::ForceEven if chi.numer().is_odd() => d * 2,
        _ => d,
    })
}

/// `|chi(O^(2r))| / |chi(M^(2r))|` from the exact values.
pub fn ratio_even(r: u32, prec: u32) -> Result<Ball> {
    let q = euler_char_compact_even(r, None)? / euler_char_noncompact_even(r)?;
    Ok(Ball::from_rational(&q, prec))
}

/// `5^(r^2 + r/2) C(r) / prod_{j=1}^{r} (4^j - 1)(9^j - 1)`, a lower bound
/// for [`ratio_even`].
pub fn ratio_even_lower_bound(r: u32, prec: u32) -> Result<Ball> {
    if r < 2 {
        return Err(Error::invalid("ratio needs r >= 2"));
    }
    let den: BigInt = (1..=r)
        .map(|j| (BigInt::from(4).pow(j) - 1) * (BigInt::from(9).pow(j) - 1))
        .product();
    let c = c_constant(r)?.mul_rational(&Rational::new(BigInt::from(5).pow(r * r + r / 2), den)?);
    let mut v = c.eval(prec);
    if r % 2 == 1 {
        v = v.mul(&Ball::from_int(5, prec).sqrt()?);
    }
    Ok(v)
}

/// Smallest `r` in `2..=limit` with `ratio_even_lower_bound(r) > 1`.
pub fn lower_bound_threshold(prec: u32, limit: u32) -> Result<Option<u32>> {
    let one = Ball::one(prec);
    for r in 2..=limit {
        match ratio_even_lower_bound(r, prec)?.compare_with_margin(&one, VERDICT_MARGIN) {
            BallOrdering::Greater => return Ok(Some(r)),
            BallOrdering::Less => {}
            BallOrdering::Undecided => return Err(Error::precision(format!("lower bound at r = {r}"), prec)),
        }
    }
    Ok(None)
}

/// `A(r) = zeta(r)(2^r - 1)(3^r - 1)` for odd `r`, and
/// `3^(r - 1/2)(2^r + 1) L(r, chi_-3)` for even `r`.
pub fn a_factor(r: u32, prec: u32) -> Result<Ball> {
    if r < 3 {
        return Err(Error::invalid("A(r) needs r >= 3"));
    }
    if r % 2 == 1 {
        let f = (BigInt::from(2).pow(r) - 1) * (BigInt::from(3).pow(r) - 1);
        Ok(zeta_numeric(r, prec)?.mul_int(f))
    } else {
        let chi = kronecker_character(-3)?;
        let three = Ball::from_int(BigInt::from(3).pow(r), prec).checked_div(&Ball::from_int(3, prec).sqrt()?)?;
        Ok(dirichlet_l_numeric(&chi, r, prec)?
            .mul_int(BigInt::from(2).pow(r) + 1)
            .mul(&three))
    }
}

/// `vol(O^(2r-1)) / vol(M^(2r-1))`.
pub fn ratio_odd(r: u32, prec: u32, l_mode: LMode, prime_cutoff: u64) -> Result<Ball> {
    let n = 2 * r - 1;
    vol_compact_odd(n, prec, l_mode, prime_cutoff)?.checked_div(&vol_noncompact(n, prec)?)
}

/// An orbifold over `Q(sqrt 5)` whose principal subgroup carries a lambda
/// factor at a place with residue field of size `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaRow {
    pub q: u64,
    pub lambda: Rational,
    pub chi: Rational,
    /// `|chi| < |chi(M^(2r))|`, so the row needs a cover-degree argument.
    pub below_noncompact: bool,
}

impl LambdaRow {
    pub fn denominator(&self) -> &BigInt {
        self.chi.denom()
    }
}

/// Lambda factor at a place of residue size `q`: `(q^r - 1)/2` for odd `r`,
/// `(q^r + 1)/2` for even `r`.
pub fn alternative_lambda(q: u64, r: u32) -> Rational {
    let qr = BigInt::from(q).pow(r);
    let num = if r % 2 == 1 { qr - 1 } else { qr + 1 };
    Rational::new(num, 2).expect("nonzero")
}

/// Rows for increasing residue sizes, up to and including the first whose
/// `|chi|` reaches `|chi(M^(2r))|`. For odd `r` the dyadic place already
/// carries `lambda-bar_4(r)` in `O^(2r)` and is skipped.
pub fn lambda_scan(r: u32) -> Result<Vec<LambdaRow>> {
    let bound = euler_char_noncompact_even(r)?;
    let mut sizes = residue_field_sizes(&NumberField::q_sqrt5(), LAMBDA_SCAN_CUTOFF)?;
    sizes.dedup();
    let mut rows = Vec::new();
    for q in sizes {
        if r % 2 == 1 && q == 4 {
            continue;
        }
        let lambda = alternative_lambda(q, r);
        let chi = euler_char_compact_even(r, Some(&lambda))?;
        let below = chi < bound;
        rows.push(LambdaRow {
            q,
            lambda,
            chi,
            below_noncompact: below,
        });
        if !below {
            return Ok(rows);
        }
    }
    Err(Error::Consistency(format!("lambda scan for r = {r} did not terminate")))
}

/// The lambda rows for `n = 30` whose `|chi|` lies below `|chi(M^30)|`.
pub fn lambda_scan_30() -> Result<Vec<LambdaRow>> {
    Ok(lambda_scan(15)?
        .into_iter()
        .filter(|row| row.below_noncompact)
        .collect())
}

/// Factors by which the volume of any other candidate 31-orbifold exceeds
/// `vol(O^31)`: a different field of definition, a different quadratic
/// extension `l`, or a nontrivial lambda factor.
pub fn exclusion_checks_31(prec: u32) -> Result<Vec<(String, Ball)>> {
    let r: u32 = 16;
    // (8/5)^(r^2 - r/2) (1/11)^(r - 1/2)
    let field = Ball::from_rational(
        &Rational::new(
            BigInt::from(8).pow(r * r - r / 2),
            BigInt::from(5).pow(r * r - r / 2) * BigInt::from(11).pow(r),
        )?,
        prec,
    )
    .mul(&Ball::from_int(11, prec).sqrt()?);
    // (400/275)^(31/2) = (16/11)^(31/2)
    let splitting = Ball::from_rational(
        &Rational::new(BigInt::from(16).pow(15), BigInt::from(11).pow(16))?,
        prec,
    )
    .mul(&Ball::from_int(4 * 4 * 11, prec).sqrt()?);
    // min over prime powers q >= 4 of (2/3)(3q/4)^r_v, r_v = 15 at q = 11
    let mut lambda_min: Option<Rational> = None;
    for q in (4..=64u64).filter(|&q| is_prime_power(q)) {
        let rv = if q == 11 { 15 } else { 16 };
        let v = Rational::frac(2, 3) * Rational::frac(3 * q as i64, 4).pow(rv)?;
        if lambda_min.as_ref().is_none_or(|m| v < *m) {
            lambda_min = Some(v);
        }
    }
    let lambda_min = lambda_min.expect("nonempty range");
    Ok(vec![
        ("field_discriminant".into(), field),
        ("splitting_field".into(), splitting),
        ("lambda_factor".into(), Ball::from_rational(&lambda_min, prec)),
    ])
}

fn is_prime_power(q: u64) -> bool {
    let p = (2..=q).find(|p| q.is_multiple_of(*p)).expect("q >= 2");
    let mut m = q;
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Ratio,
    Denominator,
    Suborbifold,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Ratio => "RATIO",
            Method::Denominator => "DENOMINATOR",
            Method::Suborbifold => "SUBORBIFOLD",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Verified,
    Undecided,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Verified => "VERIFIED",
            Verdict::Undecided => "UNDECIDED",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Greater,
    Less,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Greater => ">",
            Relation::Less => "<",
        })
    }
}

/// One decided ball comparison `lhs relation rhs`.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub lhs: Ball,
    pub relation: Relation,
    pub rhs: Ball,
    pub holds: bool,
    /// Informational checks describe the situation but do not enter the verdict.
    pub required: bool,
}

impl Check {
    /// Fails with a precision error when the comparison is not decided with
    /// [`VERDICT_MARGIN`].
    pub fn decide(name: impl Into<String>, lhs: Ball, relation: Relation, rhs: Ball, required: bool) -> Result<Self> {
        let name = name.into();
        let holds = match (lhs.compare_with_margin(&rhs, VERDICT_MARGIN), relation) {
            (BallOrdering::Undecided, _) => {
                return Err(Error::precision(
                    format!("comparison undecided: {name}"),
                    lhs.precision(),
                ));
            }
            (ord, Relation::Greater) => ord == BallOrdering::Greater,
            (ord, Relation::Less) => ord == BallOrdering::Less,
        };
        Ok(Check {
            name,
            lhs,
            relation,
            rhs,
            holds,
            required,
        })
    }
}

/// A published constant used without recomputation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assumption {
    pub name: String,
    pub value: Rational,
    pub source: String,
}

#[derive(Clone, Debug)]
pub enum CompactQuantity {
    /// `|chi(O^n)|` for even `n`.
    EulerCharacteristic(Rational),
    /// `vol(O^n)` for odd `n`.
    Volume(Ball),
}

#[derive(Clone, Debug)]
pub struct DimensionReport {
    pub dimension: u32,
    pub chi_noncompact: Option<Rational>,
    pub vol_noncompact: Ball,
    pub compact_quantity: CompactQuantity,
    pub method: Method,
    pub min_cover_degree: Option<BigInt>,
    pub exclusion_factors: Vec<(String, Ball)>,
    pub lambda_rows: Vec<LambdaRow>,
    pub checks: Vec<Check>,
    pub assumptions: Vec<Assumption>,
    pub verdict: Verdict,
    /// Working precision at which every comparison was decided.
    pub precision: u32,
}

impl DimensionReport {
    pub fn is_even(&self) -> bool {
        self.dimension.is_multiple_of(2)
    }

    /// The first required check that does not hold.
    pub fn failing_check(&self) -> Option<&Check> {
        self.checks.iter().find(|c| c.required && !c.holds)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    pub policy: PrecisionPolicy,
    pub prime_cutoff: u64,
    pub l_mode: LMode,
    pub parity_rule: ParityRule,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            policy: PrecisionPolicy::default(),
            prime_cutoff: DEFAULT_PRIME_CUTOFF,
            l_mode: LMode::Exact,
            parity_rule: ParityRule::DenominatorOnly,
        }
    }
}

struct Builder {
    prec: u32,
    checks: Vec<Check>,
}

impl Builder {
    fn check(
        &mut self,
        name: impl Into<String>,
        lhs: Ball,
        relation: Relation,
        rhs: Ball,
        required: bool,
    ) -> Result<()> {
        self.checks.push(Check::decide(name, lhs, relation, rhs, required)?);
        Ok(())
    }

    fn point(&self, q: &Rational) -> Ball {
        Ball::from_rational(q, self.prec)
    }
}

/// Volume of an even-dimensional orbifold of Euler characteristic `chi`.
fn even_volume(n: u32, chi: &Rational, prec: u32) -> Result<Ball> {
    Ok(sphere_volume(n)?.mul_rational(&(chi / &Rational::from(2))).eval(prec))
}

fn verify_even(n: u32, prec: u32, config: &Config) -> Result<DimensionReport> {
    let r = n / 2;
    let chi_m = euler_char_noncompact_even(r)?;
    let chi_o = euler_char_compact_even(r, None)?;
    let vol_m = vol_noncompact(n, prec)?;
    let mut b = Builder {
        prec,
        checks: Vec::new(),
    };
    let one = Ball::one(prec);
    let ratio = ratio_even(r, prec)?;

    if n >= 34 {
        b.check("|chi(O)| / |chi(M)|", ratio, Relation::Greater, one, true)?;
        return Ok(finish(
            n,
            Some(chi_m),
            vol_m,
            CompactQuantity::EulerCharacteristic(chi_o),
            Method::Ratio,
            None,
            vec![],
            vec![],
            b,
            vec![],
        ));
    }

    b.check("|chi(O)| / |chi(M)|", ratio, Relation::Less, one, false)?;
    let degree = min_cover_degree(&chi_o, config.parity_rule)?;
    let cover = even_volume(n, &(&chi_o * &Rational::from_integer(degree.clone())), prec)?;
    b.check(
        "vol(O) * min cover degree",
        cover,
        Relation::Greater,
        vol_m.clone(),
        true,
    )?;

    let mut assumptions = Vec::new();
    if let Some(bound) = q_sqrt2_chi_bound(n) {
        b.check(
            "|chi| bound over Q(sqrt2)",
            b.point(&bound),
            Relation::Greater,
            b.point(&chi_m),
            true,
        )?;
        assumptions.push(Assumption {
            name: "|chi| lower bound for orbifolds over Q(sqrt2)".into(),
            value: bound,
            source: "published constant, not recomputed".into(),
        });
    }

    let rows = lambda_scan(r)?;
    for row in &rows {
        let label = format!("lambda at q = {}", row.q);
        if row.below_noncompact {
            let d = min_cover_degree(&row.chi, config.parity_rule)?;
            let cover = &row.chi * &Rational::from_integer(d);
            b.check(
                format!("{label}: |chi| * min cover degree"),
                b.point(&cover),
                Relation::Greater,
                b.point(&chi_m),
                true,
            )?;
        } else {
            b.check(
                format!("{label}: |chi|"),
                b.point(&row.chi),
                Relation::Greater,
                b.point(&chi_m),
                true,
            )?;
        }
    }
    Ok(finish(
        n,
        Some(chi_m),
        vol_m,
        CompactQuantity::EulerCharacteristic(chi_o),
        Method::Denominator,
        Some(degree),
        vec![],
        rows,
        b,
        assumptions,
    ))
}

fn verify_odd(n: u32, prec: u32, config: &Config) -> Result<DimensionReport> {
    let vol_m = vol_noncompact(n, prec)?;
    let vol_o = vol_compact_odd(n, prec, config.l_mode, config.prime_cutoff)?;
    let ratio = vol_o.checked_div(&vol_m)?;
    let mut b = Builder {
        prec,
        checks: Vec::new(),
    };
    let one = Ball::one(prec);

    if n >= 33 {
        b.check("vol(O) / vol(M)", ratio, Relation::Greater, one, true)?;
        return Ok(finish(
            n,
            None,
            vol_m,
            CompactQuantity::Volume(vol_o),
            Method::Ratio,
            None,
            vec![],
            vec![],
            b,
            vec![],
        ));
    }
    if n != 31 {
        return Err(Error::invalid(format!("no argument available for n = {n}")));
    }

    b.check("vol(O) / vol(M)", ratio.clone(), Relation::Less, one.clone(), false)?;
    b.check(
        "vol(O) / vol(M)",
        ratio.clone(),
        Relation::Greater,
        b.point(&sci("0.007", 0)),
        true,
    )?;
    let chi_sub = euler_char_suborbifold_30()?;
    let degree = min_cover_degree(&chi_sub, config.parity_rule)?;
    let cover = vol_o.mul_int(degree.clone());
    b.check(
        "vol(O) * min cover degree",
        cover.clone(),
        Relation::Greater,
        vol_m.clone(),
        true,
    )?;
    b.check(
        "vol(O) * min cover degree",
        cover,
        Relation::Greater,
        b.point(&sci("7.019", 247)),
        true,
    )?;

    let factors = exclusion_checks_31(prec)?;
    let field_bound = b.point(&sci("3.021", 34));
    b.check(
        "field_discriminant factor",
        factors[0].1.clone(),
        Relation::Greater,
        field_bound,
        true,
    )?;
    for (name, factor) in &factors {
        b.check(
            format!("{name} * vol(O) / vol(M)"),
            factor.mul(&ratio),
            Relation::Greater,
            one.clone(),
            true,
        )?;
    }
    Ok(finish(
        n,
        None,
        vol_m,
        CompactQuantity::Volume(vol_o),
        Method::Suborbifold,
        Some(degree),
        factors,
        vec![],
        b,
        vec![],
    ))
}

#[allow(clippy::too_many_arguments)]
fn finish(
    n: u32,
    chi_noncompact: Option<Rational>,
    vol_noncompact: Ball,
    compact_quantity: CompactQuantity,
    method: Method,
    min_cover_degree: Option<BigInt>,
    exclusion_factors: Vec<(String, Ball)>,
    lambda_rows: Vec<LambdaRow>,
    b: Builder,
    assumptions: Vec<Assumption>,
) -> DimensionReport {
    let verdict = if b.checks.iter().all(|c| c.holds || !c.required) {
        Verdict::Verified
    } else {
        Verdict::Undecided
    };
    DimensionReport {
        dimension: n,
        chi_noncompact,
        vol_noncompact,
        compact_quantity,
        method,
        min_cover_degree,
        exclusion_factors,
        lambda_rows,
        checks: b.checks,
        assumptions,
        verdict,
        precision: b.prec,
    }
}

/// Runs the argument for dimension `n`, doubling precision while any
/// comparison is undecided.
pub fn verify_dimension(n: u32, config: &Config) -> Result<DimensionReport> {
    if n < MIN_DIMENSION {
        return Err(Error::invalid(format!("dimension {n} is below {MIN_DIMENSION}")));
    }
    config.policy.run(|prec| {
        crate::exact::check_precision(prec)?;
        if n.is_multiple_of(2) {
            verify_even(n, prec, config)
        } else {
            verify_odd(n, prec, config)
        }
    })
}

/// [`verify_dimension`] over several dimensions in parallel; results are in
/// the order given.
pub fn verify_dimensions(dims: &[u32], config: &Config) -> Vec<Result<DimensionReport>> {
    dims.par_iter().map(|&n| verify_dimension(n, config)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::decimal::matches_truncated;
    use num_traits::One;

    const PREC: u32 = 256;

    fn integral_multiple(chi: &Rational, d: &BigInt) -> bool {
        (chi * &Rational::from_integer(d.clone())).is_integer()
    }

    #[test]
    fn cover_degree_rules() {
        assert_eq!(
            min_cover_degree(&Rational::from(6), ParityRule::DenominatorOnly).unwrap(),
            BigInt::one()
        );
        assert_eq!(
            min_cover_degree(&Rational::frac(3, 10), ParityRule::DenominatorOnly).unwrap(),
            BigInt::from(10)
        );
        assert_eq!(
            min_cover_degree(&Rational::frac(3, 10), ParityRule::ForceEven).unwrap(),
            BigInt::from(20)
        );
        assert_eq!(
            min_cover_degree(&Rational::frac(4, 5), ParityRule::ForceEven).unwrap(),
            BigInt::from(5)
        );
        assert!(min_cover_degree(&Rational::zero(), ParityRule::DenominatorOnly).is_err());
    }

    #[test]
    fn even_ratio_signs() {
        let one = Ball::one(PREC);
        assert_eq!(ratio_even(15, PREC).unwrap().compare(&one), BallOrdering::Less);
        assert_eq!(ratio_even(16, PREC).unwrap().compare(&one), BallOrdering::Less);
        assert_eq!(ratio_even(17, PREC).unwrap().compare(&one), BallOrdering::Greater);
    }

    #[test]
    fn lower_bound_is_below_ratio() {
        for r in [10, 15, 20] {
            let lb = ratio_even_lower_bound(r, PREC).unwrap();
            let ratio = ratio_even(r, PREC).unwrap();
            assert_eq!(lb.compare(&ratio), BallOrdering::Less, "r = {r}");
        }
        assert_eq!(lower_bound_threshold(PREC, 40).unwrap(), Some(18));
    }

    #[test]
    fn a_factor_bound() {
        for r in 3..=40 {
            let bound = Ball::from_int(BigInt::from(6).pow(r) * 2, PREC);
            assert_eq!(
                a_factor(r, PREC).unwrap().compare(&bound),
                BallOrdering::Less,
                "r = {r}"
            );
        }
    }

    #[test]
    fn scan_for_thirty() {
        let rows = lambda_scan(15).unwrap();
        let qs: Vec<u64> = rows.iter().map(|r| r.q).collect();
        assert_eq!(qs, vec![5, 9, 11, 19]);
        assert!(rows[..3].iter().all(|r| r.below_noncompact));
        assert!(!rows[3].below_noncompact);
        assert_eq!(lambda_scan_30().unwrap().len(), 3);
    }

    #[test]
    fn scan_for_thirty_two() {
        let rows = lambda_scan(16).unwrap();
        assert_eq!(rows.len(), 2);
        assert_eq!(rows[0].q, 4);
        assert!(rows[0].below_noncompact);
        assert!(matches_truncated(&rows[0].chi, "1.884", 227));
        let d = euler_char_compact_even(16, None).unwrap().denom().clone();
        assert_eq!(rows[0].denominator(), &(d * 2));
        assert_eq!(rows[1].q, 5);
        assert!(!rows[1].below_noncompact);
    }

    #[test]
    fn exclusion_factors() {
        let f = exclusion_checks_31(PREC).unwrap();
        assert!(f[0].1.lower().to_rational() > sci("3.021", 34));
        assert!(matches_truncated(&f[1].1.mid_rational(), "3.32868", 2));
        assert!(f[2].1.contains_rational(&Rational::from(28697814)));
    }

    #[test]
    fn divisibility_of_cover_degrees() {
        let chi = euler_char_compact_even(16, None).unwrap();
        let d = chi.denom().clone();
        assert!(integral_multiple(&chi, &d));
        for k in 1..20u32 {
            let candidate = &d * k;
            assert!(integral_multiple(&chi, &candidate));
        }
        // any d making d * chi an (even) integer is a multiple of the denominator
        for p in [2u32, 3, 5, 7] {
            if (&d % p) == BigInt::from(0) {
                assert!(!integral_multiple(&chi, &(&d / p)));
            }
        }
        for m in 1..200u32 {
            let candidate = BigInt::from(m) * &d / 7u32;
            let v = &chi * &Rational::from_integer(candidate.clone());
            if v.is_integer() && v.numer().is_even() {
                assert_eq!(&candidate % &d, BigInt::from(0));
            }
        }
    }

    #[test]
    fn below_range_is_rejected() {
        assert!(verify_dimension(29, &Config::default()).is_err());
    }
}
