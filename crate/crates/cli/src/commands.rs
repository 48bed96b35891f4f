use std::ops::RangeInclusive;

use hypvol_core::bernoulli::bernoulli;
use hypvol_core::exact::decimal::{certified, scientific_parts, to_fixed, Rounding};
use hypvol_core::formulas::{
    c_constant, euler_char_compact_even, euler_char_noncompact_even, euler_char_suborbifold_30, lambda,
    parahoric_index, vol_compact_odd, vol_noncompact, LambdaKind, ParahoricForm,
};
use hypvol_core::lfunctions::{dedekind_zeta_neg_quad, zeta_neg};
use hypvol_core::verdicts::{alternative_lambda, CompactQuantity, MIN_DIMENSION};
use hypvol_core::{
    verify_dimensions, Config, DimensionReport, Error, LMode, ParityRule, PrecisionPolicy, Rational, Verdict,
};
use rayon::prelude::*;

use crate::args::{
    FormArg, GlobalOpts, LModeArg, LambdaKindArg, ParityArg, Quantity, RoundingArg, TableKind, ValueArgs,
};
use crate::output::{Layout, Row, Style};

/// Largest dimension covered by `verify --all`.
pub const MAX_DIMENSION: u32 = 60;

/// Process exit status, ordered by severity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Exit {
    Ok = 0,
    Undecided = 1,
    Precision = 2,
    Usage = 64,
    Internal = 70,
}

impl Exit {
    pub fn of(err: &Error) -> Exit {
        match err {
            Error::PrecisionInsufficient { .. } | Error::TailBound { .. } => Exit::Precision,
            Error::InvalidArgument(_) | Error::UnsupportedDiscriminant(_) => Exit::Usage,
            Error::DivisionByZero | Error::EquationOrderNotMaximal { .. } | Error::Consistency(_) => Exit::Internal,
        }
    }
}

/// Rows to print plus the worst status encountered. Errors are reported on
/// stderr by the caller; rows that did succeed are still printed.
pub struct Outcome {
    pub rows: Vec<Row>,
    pub layout: Layout,
    pub exit: Exit,
    pub errors: Vec<String>,
}

impl Outcome {
    fn new(layout: Layout) -> Self {
        Outcome {
            rows: Vec::new(),
            layout,
            exit: Exit::Ok,
            errors: Vec::new(),
        }
    }

    fn fail(&mut self, context: impl std::fmt::Display, err: &Error) {
        self.exit = self.exit.max(Exit::of(err));
        self.errors.push(format!("{context}: {err}"));
    }
}

pub struct Context {
    pub config: Config,
    pub style: Style,
    /// Rounding of certified table digits.
    pub rounding: Rounding,
}

impl Context {
    pub fn from_opts(opts: &GlobalOpts) -> Context {
        let policy = match opts.precision {
            Some(bits) => PrecisionPolicy::fixed(bits),
            None => {
                let defaults = PrecisionPolicy::default();
                PrecisionPolicy {
                    start: defaults.start.min(opts.max_precision),
                    max: opts.max_precision,
                }
            }
        };
        Context {
            config: Config {
                policy,
                prime_cutoff: opts.prime_cutoff,
                l_mode: match opts.l_mode {
                    LModeArg::Exact => LMode::Exact,
                    LModeArg::LowerBound => LMode::LowerBound,
                },
                parity_rule: match opts.parity_rule {
                    ParityArg::DenominatorOnly => ParityRule::DenominatorOnly,
                    ParityArg::ForceEven => ParityRule::ForceEven,
                },
            },
            style: Style {
                digits: opts.digits as usize,
            },
            rounding: match opts.rounding {
                RoundingArg::Truncate => Rounding::Truncate,
                RoundingArg::HalfEven => Rounding::HalfEven,
            },
        }
    }
}

pub fn table(ctx: &Context, kind: TableKind, range: RangeInclusive<u32>) -> Outcome {
    match kind {
        TableKind::Euler => {
            let mut out = Outcome::new(Layout::Table { header: "|chi(M^n)|" });
            for n in range.filter(|n| n % 2 == 0) {
                match euler_char_noncompact_even(n / 2) {
                    Ok(chi) => out.rows.push(Row::exact(Some(n), "chi_noncompact", &chi, ctx.style)),
                    Err(e) => out.fail(format!("n={n}"), &e),
                }
            }
            out
        }
        TableKind::Volume => {
            let mut out = Outcome::new(Layout::Table { header: "vol(M^n)" });
            let dims: Vec<u32> = range.collect();
            let results: Vec<_> = dims.par_iter().map(|&n| volume_row(ctx, n)).collect();
            for (n, res) in dims.into_iter().zip(results) {
                match res {
                    Ok(row) => out.rows.push(row),
                    Err(e) => out.fail(format!("n={n}"), &e),
                }
            }
            out
        }
    }
}

/// Fixed three decimals up to dimension 13, then four significant digits in
/// `1.555 E29` style; the printed digits are certified against the ball.
fn volume_row(ctx: &Context, n: u32) -> Result<Row, Error> {
    let mode = ctx.rounding;
    ctx.config.policy.run(|bits| {
        let ball = vol_noncompact(n, bits)?;
        let display = if n <= 13 {
            certified(&ball, |q| to_fixed(q, 3, mode))?
        } else {
            certified(&ball, |q| {
                let (m, e) = scientific_parts(q, 4, mode);
                format!("{m} E{e}")
            })?
        };
        Ok(Row::ball(Some(n), "vol_noncompact", &ball, ctx.style).with_display(display))
    })
}

pub fn verify(ctx: &Context, n: Option<u32>, all: bool) -> Outcome {
    let dims: Vec<u32> = if all {
        (MIN_DIMENSION..=MAX_DIMENSION).collect()
    } else {
        n.into_iter().collect()
    };
    let mut out = Outcome::new(Layout::List);
    for (n, res) in dims.iter().zip(verify_dimensions(&dims, &ctx.config)) {
        match res {
            Ok(report) => {
                if report.verdict != Verdict::Verified {
                    out.exit = out.exit.max(Exit::Undecided);
                }
                out.rows.extend(report_rows(&report, ctx.style));
            }
            Err(e) => out.fail(format!("n={n}"), &e),
        }
    }
    out
}

fn report_rows(report: &DimensionReport, style: Style) -> Vec<Row> {
    let n = Some(report.dimension);
    let mut rows = Vec::new();
    if let Some(chi) = &report.chi_noncompact {
        rows.push(Row::exact(n, "chi_noncompact", chi, style));
    }
    rows.push(Row::ball(n, "vol_noncompact", &report.vol_noncompact, style));
    match &report.compact_quantity {
        CompactQuantity::EulerCharacteristic(chi) => rows.push(Row::exact(n, "chi_compact", chi, style)),
        CompactQuantity::Volume(vol) => rows.push(Row::ball(n, "vol_compact", vol, style)),
    }
    rows.push(Row::note(n, "method", report.method.to_string()));
    if let Some(d) = &report.min_cover_degree {
        rows.push(Row::exact(n, "min_cover_degree", &Rational::from(d.clone()), style));
    }
    for row in &report.lambda_rows {
        let tag = if row.below_noncompact { "below" } else { "excluded" };
        rows.push(Row::exact(n, format!("lambda_q{}_chi_compact", row.q), &row.chi, style).with_verdict(tag));
    }
    for (name, factor) in &report.exclusion_factors {
        rows.push(Row::ball(n, format!("exclusion: {name}"), factor, style));
    }
    for a in &report.assumptions {
        let row = Row::exact(n, format!("assumption: {}", a.name), &a.value, style);
        let display = format!("{} ({})", row.display, a.source);
        rows.push(row.with_display(display));
    }
    for check in &report.checks {
        let status = match (check.holds, check.required) {
            (true, true) => "PASS",
            (false, true) => "FAIL",
            (true, false) => "INFO-TRUE",
            (false, false) => "INFO-FALSE",
        };
        let lhs = Row::ball(n, format!("check: {}", check.name), &check.lhs, style);
        let rhs = Row::ball(n, "", &check.rhs, style);
        let display = format!(
            "{} {} {}",
            lhs.midpoint.as_deref().unwrap_or_default(),
            check.relation,
            rhs.midpoint.as_deref().unwrap_or_default()
        );
        rows.push(lhs.with_display(display).with_verdict(status));
    }
    rows.push(
        Row::note(n, "verdict", format!("{} at {} bits", report.verdict, report.precision))
            .with_verdict(report.verdict.to_string()),
    );
    rows
}

fn need<T: Copy>(value: Option<T>, flag: &str, quantity: &str) -> Result<T, Error> {
    value.ok_or_else(|| Error::InvalidArgument(format!("{quantity} needs --{flag}")))
}

fn even_half(n: u32) -> Result<u32, Error> {
    if n.is_multiple_of(2) {
        Ok(n / 2)
    } else {
        Err(Error::InvalidArgument(format!("n = {n} must be even")))
    }
}

pub fn value(ctx: &Context, args: &ValueArgs) -> Outcome {
    let mut out = Outcome::new(Layout::List);
    match value_row(ctx, args) {
        Ok(row) => out.rows.push(row),
        Err(e) => out.fail("value", &e),
    }
    out
}

fn value_row(ctx: &Context, args: &ValueArgs) -> Result<Row, Error> {
    let style = ctx.style;
    let policy = ctx.config.policy;
    let name = |s: &str| s.to_string();
    Ok(match args.quantity {
        Quantity::Bernoulli => {
            let n = need(args.n, "n", "bernoulli")?;
            Row::exact(Some(n), name("bernoulli"), &bernoulli(n as usize), style)
        }
        Quantity::ZetaNeg => {
            let j = need(args.j, "j", "zeta-neg")?;
            Row::exact(None, format!("zeta(1-2*{j})"), &zeta_neg(j)?, style)
        }
        Quantity::ZetaKNeg => {
            let j = need(args.j, "j", "zeta-k-neg")?;
            Row::exact(None, format!("zeta_k(1-2*{j})"), &dedekind_zeta_neg_quad(j)?, style)
        }
        Quantity::ChiNoncompact => {
            let n = need(args.n, "n", "chi-noncompact")?;
            Row::exact(
                Some(n),
                name("chi_noncompact"),
                &euler_char_noncompact_even(even_half(n)?)?,
                style,
            )
        }
        Quantity::ChiCompact => {
            let n = need(args.n, "n", "chi-compact")?;
            let r = even_half(n)?;
            let lambda = args.lambda_q.map(|q| alternative_lambda(q, r));
            Row::exact(
                Some(n),
                name("chi_compact"),
                &euler_char_compact_even(r, lambda.as_ref())?,
                style,
            )
        }
        Quantity::VolNoncompact => {
            let n = need(args.n, "n", "vol-noncompact")?;
            let ball = policy.run(|bits| vol_noncompact(n, bits))?;
            Row::ball(Some(n), name("vol_noncompact"), &ball, style)
        }
        Quantity::VolCompact => {
            let n = need(args.n, "n", "vol-compact")?;
            let cfg = &ctx.config;
            let ball = policy.run(|bits| vol_compact_odd(n, bits, cfg.l_mode, cfg.prime_cutoff))?;
            Row::ball(Some(n), name("vol_compact"), &ball, style)
        }
        Quantity::CConstant => {
            let r = need(args.r, "r", "c-constant")?;
            Row::pi_scaled(None, format!("C({r})"), &c_constant(r)?, policy.start, style)
        }
        Quantity::Lambda => {
            let (q, r) = (need(args.q, "q", "lambda")?, need(args.r, "r", "lambda")?);
            let kind = match args.kind.unwrap_or(LambdaKindArg::Plain) {
                LambdaKindArg::Plain => LambdaKind::Plain,
                LambdaKindArg::Prime => LambdaKind::Prime,
                LambdaKindArg::Bar => LambdaKind::Bar,
            };
            Row::exact(None, format!("lambda_{q}({r})"), &lambda(kind, q, r)?, style)
        }
        Quantity::Index => {
            let (q, r) = (need(args.q, "q", "index")?, need(args.r, "r", "index")?);
            let form = match need(args.form, "form", "index")? {
                FormArg::BrHyperspecial => ParahoricForm::BrHyperspecial,
                FormArg::BrCombined => ParahoricForm::BrCombined,
                FormArg::DrOddCombined => ParahoricForm::DrOddCombined,
                FormArg::TwoDr => ParahoricForm::TwoDr,
                FormArg::BrMinus1 => ParahoricForm::BrMinus1,
            };
            let index = Rational::from(parahoric_index(form, q, r)?);
            Row::exact(None, format!("index_{q}({r})"), &index, style)
        }
        Quantity::SuborbifoldChi => Row::exact(Some(30), name("chi_suborbifold"), &euler_char_suborbifold_30()?, style),
    })
}
