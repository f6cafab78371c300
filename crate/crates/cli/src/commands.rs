use std::collections::BTreeMap;

use chrono::{SecondsFormat, Utc};
use wallislab::exact::{truncate_decimal, TRUNCATION_POLICY};
use wallislab::inequalities::{pi_enclosure_wallis, run_suite, Enclosure, Suite, SuiteConfig, Verdict};
use wallislab::ode_probe::probability_integral_via_f_with;
use wallislab::quadrature::{gauss_truncated_with, QuadConfig, QuadResult, MIN_TOL};
use wallislab::scalar::{rational_to_f64, Scalar};
use wallislab::sequences::{sequence_table, variation_term, SequenceName, VariationId};
use num_traits::Signed;
use wallislab::{pi_enclosure, BigRational, Interval, Working};

use crate::cli::{ErfArgs, ErfMethod, PiArgs, PiMethod, TableArgs, VerifyArgs};
use crate::error::{usage, CliResult, EXIT_FAILS, EXIT_OK, EXIT_UNDECIDED};
use crate::report::*;

/// Environment variable capping integrand evaluations per quadrature call.
pub const MAX_EVALS_ENV: &str = "WALLISLAB_MAX_EVALS";

#[derive(Debug, Clone, Default)]
pub struct Context {
    pub max_evals: Option<usize>,
}

impl Context {
    pub fn from_env() -> CliResult<Self> {
        match std::env::var(MAX_EVALS_ENV) {
            Ok(v) => {
                let n = v
                    .trim()
                    .parse::<usize>()
                    .ok()
                    .filter(|&n| n > 0)
                    .ok_or_else(|| usage(format!("{MAX_EVALS_ENV} must be a positive integer, got `{v}`")))?;
                Ok(Self { max_evals: Some(n) })
            }
            Err(_) => Ok(Self::default()),
        }
    }

    fn quad(&self) -> QuadConfig {
        let mut q = QuadConfig::default();
        if let Some(n) = self.max_evals {
            q.max_evals = n;
        }
        q
    }

    fn echo(&self, params: &mut BTreeMap<String, String>) {
        if let Some(n) = self.max_evals {
            params.insert("max_evals".into(), n.to_string());
        }
    }
}

fn envelope(command: &str, parameters: BTreeMap<String, String>, results: Payload) -> ReportEnvelope {
    ReportEnvelope {
        command: command.to_string(),
        parameters,
        generated_at: Utc::now().to_rfc3339_opts(SecondsFormat::Secs, true),
        artifact_version: ARTIFACT_VERSION.to_string(),
        truncation_policy: TRUNCATION_POLICY.to_string(),
        results,
    }
}

fn params(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn sci(r: &BigRational) -> String {
    format!("{:.6e}", rational_to_f64(r))
}

fn enclosure_dto(
    target: &str,
    method: &str,
    kind: &str,
    n: Option<u64>,
    iv: &Interval<BigRational>,
    digits: u32,
) -> EnclosureDto {
    let width = iv.width();
    EnclosureDto {
        target: target.to_string(),
        method: method.to_string(),
        kind: kind.to_string(),
        n,
        lo_exact: iv.lo().to_string(),
        hi_exact: iv.hi().to_string(),
        width_exact: width.to_string(),
        lo: truncate_decimal(iv.lo(), digits),
        hi: truncate_decimal(iv.hi(), digits),
        width: sci(&width),
        contains_reference: None,
        abs_error: None,
    }
}

pub(crate) fn library_enclosure(e: &Enclosure, method: &str, digits: u32) -> EnclosureDto {
    enclosure_dto(e.target.as_str(), method, "enclosure", Some(e.n), &e.interval(), digits)
}

pub fn cmd_pi(args: &PiArgs, ctx: &Context) -> CliResult<ReportEnvelope> {
    let mut p = params(&[
        ("method", args.method.as_str().into()),
        ("digits", args.digits.to_string()),
        ("format", args.output.format.as_str().into()),
    ]);
    if args.method != PiMethod::Machin {
        p.insert("terms".into(), args.terms.to_string());
    }
    ctx.echo(&mut p);
    let reference = pi_enclosure((args.digits + 10).min(1000))?;
    let dto = match args.method {
        PiMethod::Machin => {
            let e = pi_enclosure(args.digits)?;
            let mut d = enclosure_dto("PI", "machin", "enclosure", None, e.interval(), args.digits);
            d.contains_reference = Some(true);
            d
        }
        PiMethod::Wallis => {
            let e = pi_enclosure_wallis(args.terms)?;
            let mut d = library_enclosure(&e, "wallis", args.digits);
            d.contains_reference = Some(reference.interval().is_subset_of(&e.interval()));
            d
        }
        PiMethod::Variation4 => {
            // 2/π = Π (1 − 1/(4k²)), inverted
            let v4 = variation_term(VariationId::V4, args.terms)?;
            let estimate = BigRational::from_integer(2.into()) / v4.rational;
            let point = Interval::point(estimate.clone());
            let mut d = enclosure_dto("PI", "variation4", "estimate", Some(args.terms), &point, args.digits);
            let r = reference.interval();
            let err = (&estimate - r.lo()).abs().max((&estimate - r.hi()).abs());
            d.abs_error = Some(sci(&err));
            d
        }
    };
    Ok(envelope("pi", p, Payload::Enclosures(EnclosureList { enclosures: vec![dto] })))
}

pub fn cmd_table(args: &TableArgs, ctx: &Context) -> CliResult<ReportEnvelope> {
    let seq: SequenceName = args
        .sequence
        .parse()
        .map_err(|_| usage(format!("unknown sequence `{}`", args.sequence)))?;
    let mut p = params(&[
        ("sequence", seq.as_str().into()),
        ("max_n", args.max_n.to_string()),
        ("step", args.step.to_string()),
        ("digits", args.digits.to_string()),
        ("format", args.output.format.as_str().into()),
    ]);
    ctx.echo(&mut p);
    let t = sequence_table(seq, args.max_n, args.step, args.digits)?;
    let dto = TableDto {
        name: t.name,
        digits: t.digits,
        rows: t
            .rows
            .into_iter()
            .map(|r| RowDto {
                n: r.n,
                exact: r.exact,
                decimal: r.decimal,
                target: r.target,
                abs_error: r.abs_error,
            })
            .collect(),
    };
    Ok(envelope("table", p, Payload::SeqTable(dto)))
}

fn check_tol(tol: f64) -> CliResult<()> {
    if tol.is_finite() && tol >= MIN_TOL {
        Ok(())
    } else {
        Err(usage(format!("--tol must be finite and at least {MIN_TOL:e}")))
    }
}

fn dd_string(x: Working) -> String {
    x.to_string()
}

fn err_string(x: Working) -> String {
    format!("{:.3e}", x.to_float())
}

/// Runs a suite; the exit code is 0 when everything holds, 1 on any failure,
/// 3 when the only shortfalls are undecided checks.
pub fn cmd_verify(args: &VerifyArgs, ctx: &Context) -> CliResult<(ReportEnvelope, i32)> {
    let suite: Suite = args
        .suite
        .parse()
        .map_err(|_| usage(format!("unknown suite `{}`", args.suite)))?;
    check_tol(args.tol)?;
    let mut p = params(&[
        ("suite", suite.as_str().into()),
        ("max_n", args.max_n.to_string()),
        ("tol", format!("{:e}", args.tol)),
        ("format", args.output.format.as_str().into()),
    ]);
    ctx.echo(&mut p);
    let cfg = SuiteConfig {
        max_n: args.max_n,
        tol: args.tol,
        quad: ctx.quad(),
        ..SuiteConfig::default()
    };
    let rep = run_suite(suite, &cfg)?;
    let counts = rep.counts();
    let code = if counts.fails > 0 {
        EXIT_FAILS
    } else if counts.undecided > 0 {
        EXIT_UNDECIDED
    } else {
        EXIT_OK
    };
    let dto = VerificationDto {
        suite: suite.as_str().to_string(),
        outcomes: rep
            .outcomes
            .iter()
            .map(|o| OutcomeDto {
                name: o.name.clone(),
                n: o.n,
                grade: o.grade.as_str().into(),
                verdict: o.verdict.as_str().into(),
                witness: o.witness.clone(),
            })
            .collect(),
        conservation: rep
            .conservation
            .iter()
            .map(|c| ConservationDto {
                t: format!("{}", c.t.to_float()),
                f: dd_string(c.f.value),
                f_uncertainty: err_string(c.f.total_uncertainty()),
                f_evaluations: c.f.evaluations as u64,
                g: dd_string(c.g.value),
                g_uncertainty: err_string(c.g.total_uncertainty()),
                g_evaluations: c.g.evaluations as u64,
                sum_deviation: err_string(c.sum_deviation),
                allowed: err_string(c.allowed),
                pi_quarter_ref: c.pi_quarter_ref.clone(),
                consistent: c.consistent,
            })
            .collect(),
        enclosures: rep.enclosures.iter().map(|e| library_enclosure(e, "squeeze", 15)).collect(),
        summary: SummaryDto {
            holds: counts.holds as u64,
            fails: counts.fails as u64,
            undecided: counts.undecided as u64,
            total: counts.total() as u64,
        },
    };
    debug_assert!(rep.outcomes.iter().all(|o| o.verdict == Verdict::Holds) == (code == EXIT_OK));
    Ok((envelope("verify", p, Payload::Verification(dto)), code))
}

fn parse_t(s: &str) -> CliResult<Working> {
    let t = match s.trim().to_ascii_lowercase().as_str() {
        "inf" | "infinity" | "+inf" => return Ok(Working::infinity()),
        other => other
            .parse::<f64>()
            .map_err(|_| usage(format!("--t must be a nonnegative number or `inf`, got `{s}`")))?,
    };
    if !(t >= 0.0) || !t.is_finite() {
        return Err(usage(format!("--t must be a nonnegative number or `inf`, got `{s}`")));
    }
    Ok(Working::from(t))
}

pub fn cmd_erf(args: &ErfArgs, ctx: &Context) -> CliResult<ReportEnvelope> {
    let t = parse_t(&args.t)?;
    check_tol(args.tol)?;
    if args.method == ErfMethod::Borwein && t.is_infinite() {
        return Err(usage("the borwein method needs a finite t"));
    }
    let mut p = params(&[
        ("t", args.t.trim().to_string()),
        ("tol", format!("{:e}", args.tol)),
        ("method", args.method.as_str().into()),
        ("format", args.output.format.as_str().into()),
    ]);
    ctx.echo(&mut p);
    let tol = Working::from(args.tol);
    let q: QuadResult<Working> = match args.method {
        ErfMethod::Direct => gauss_truncated_with(t, tol, &ctx.quad())?,
        ErfMethod::Borwein => probability_integral_via_f_with(t, tol, &ctx.quad())?,
    };
    let reference = if t.is_infinite() {
        let enc = pi_enclosure(40)?;
        let half = enc.sqrt_pi().midpoint() / BigRational::from_integer(2.into());
        Some(truncate_decimal(&half, 30))
    } else {
        None
    };
    let dto = IntegralDto {
        t: if t.is_infinite() { "inf".into() } else { format!("{}", t.to_float()) },
        method: args.method.as_str().into(),
        value: dd_string(q.value),
        uncertainty: err_string(q.total_uncertainty()),
        discretization_error: err_string(q.discretization_error),
        tail_bound: err_string(q.tail_bound),
        evaluations: q.evaluations as u64,
        reference,
    };
    Ok(envelope("erf", p, Payload::Integral(dto)))
}
