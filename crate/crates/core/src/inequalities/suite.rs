use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use super::certified::*;
use super::enclosures::*;
use super::numeric::*;
use super::{CheckOutcome, Escalation, Grade, Verdict};
use crate::error::{invalid, Error, Result};
use crate::exact::{pi_enclosure, PiEnclosure, MAX_PI_DIGITS};
use crate::ode_probe::{check_conservation_with, conservation_grid, probability_integral_via_f_with, ConservationReport};
use crate::quadrature::{gauss_truncated_with, QuadConfig};
use crate::scalar::Scalar;
use crate::Working;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Stieltjes,
    Squeeze,
    Wallis,
    Disguise,
    Sandwich,
    Conservation,
    All,
}

impl Suite {
    pub const PARTS: [Suite; 6] = [
        Self::Stieltjes,
        Self::Squeeze,
        Self::Wallis,
        Self::Disguise,
        Self::Sandwich,
        Self::Conservation,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Stieltjes => "stieltjes",
            Self::Squeeze => "squeeze",
            Self::Wallis => "wallis",
            Self::Disguise => "disguise",
            Self::Sandwich => "sandwich",
            Self::Conservation => "conservation",
            Self::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::PARTS
            .into_iter()
            .chain([Self::All])
            .find(|p| p.as_str() == s)
            .ok_or_else(|| invalid(format!("unknown suite `{s}`")))
    }
}

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub max_n: u64,
    pub tol: f64,
    pub quad: QuadConfig,
    /// Starting digits of the π enclosure for certified checks.
    pub enc_digits: u32,
    pub escalation: Escalation,
    /// Largest n for quadrature-based checks.
    pub numeric_cap: u64,
    pub threads: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            max_n: 200,
            tol: 1e-9,
            quad: QuadConfig::default(),
            enc_digits: 20,
            escalation: Escalation::default(),
            numeric_cap: 30,
            threads: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VerdictCounts {
    pub holds: usize,
    pub fails: usize,
    pub undecided: usize,
}

impl VerdictCounts {
    pub fn total(&self) -> usize {
        self.holds + self.fails + self.undecided
    }
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub suite: Suite,
    pub outcomes: Vec<CheckOutcome>,
    pub conservation: Vec<ConservationReport<Working>>,
    pub enclosures: Vec<Enclosure>,
}

impl SuiteReport {
    pub fn counts(&self) -> VerdictCounts {
        let mut c = VerdictCounts::default();
        for o in &self.outcomes {
            match o.verdict {
                Verdict::Holds => c.holds += 1,
                Verdict::Fails => c.fails += 1,
                Verdict::Undecided => c.undecided += 1,
            }
        }
        c
    }
}

/// Maps `f` over `items` on up to `threads` workers; results keep input order.
fn par_map<T: Sync, R: Send>(items: &[T], threads: usize, f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let threads = threads.clamp(1, items.len().max(1));
    if threads == 1 {
        return items.iter().map(f).collect();
    }
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<R>>> = Mutex::new((0..items.len()).map(|_| None).collect());
    std::thread::scope(|s| {
        for _ in 0..threads {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= items.len() {
                    break;
                }
                let r = f(&items[i]);
                slots.lock().expect("worker panicked")[i] = Some(r);
            });
        }
    });
    slots
        .into_inner()
        .expect("worker panicked")
        .into_iter()
        .map(|r| r.expect("every slot filled"))
        .collect()
}

fn per_n<F>(ns: Vec<u64>, cfg: &SuiteConfig, f: F) -> Result<Vec<CheckOutcome>>
where
    F: Fn(u64) -> Result<Vec<CheckOutcome>> + Sync,
{
    let parts = par_map(&ns, cfg.threads, |&n| f(n));
    let mut out = Vec::new();
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}

/// Machin enclosure inside the Wallis enclosure of π.
fn wallis_contains_machin(n: u64, enc: &PiEnclosure, policy: Escalation) -> Result<CheckOutcome> {
    let w = pi_enclosure_wallis(n)?.interval();
    let mut machin = enc.clone();
    let mut tries = 0;
    loop {
        let m = machin.interval();
        let verdict = if m.is_subset_of(&w) {
            Verdict::Holds
        } else if !m.overlaps(&w) {
            Verdict::Fails
        } else {
            Verdict::Undecided
        };
        if verdict != Verdict::Undecided || tries >= policy.retries || machin.digits() >= MAX_PI_DIGITS {
            let witness = format!(
                "[{}, {}] ⊇ π ∈ [{}, {}]",
                crate::exact::truncate_decimal(w.lo(), 12),
                crate::exact::truncate_decimal(w.hi(), 12),
                crate::exact::truncate_decimal(m.lo(), 12),
                crate::exact::truncate_decimal(m.hi(), 12),
            );
            return Ok(CheckOutcome::new("wallis_pi_enclosure", n, Grade::Certified, verdict, witness));
        }
        machin = machin.refined(machin.digits() * 2)?;
        tries += 1;
    }
}

fn conservation_point(t: f64, cfg: &SuiteConfig) -> Result<(Vec<CheckOutcome>, Option<ConservationReport<Working>>)> {
    let tol = Working::from(cfg.tol.min(1e-6).max(crate::quadrature::MIN_TOL));
    let tw = Working::from(t);
    let index = 0;
    let report = match check_conservation_with(tw, tol, &cfg.quad) {
        Ok(r) => r,
        Err(Error::BoundViolation(msg)) => {
            let o = CheckOutcome::new("decay_bound", index, Grade::Numeric, Verdict::Fails, format!("t = {t}: {msg}"));
            return Ok((vec![o], None));
        }
        Err(e) => return Err(e),
    };
    let mut out = Vec::new();
    let verdict = if report.consistent { Verdict::Holds } else { Verdict::Fails };
    out.push(CheckOutcome::new(
        "conservation",
        index,
        Grade::Numeric,
        verdict,
        format!(
            "t = {t}: |F + G − π/4| = {:.3e} ≤ {:.3e}",
            report.sum_deviation.to_float(),
            report.allowed.to_float()
        ),
    ));
    let cap = (-(tw * tw)).exp() * Working::PI / Working::from(4.0);
    out.push(CheckOutcome::new(
        "decay_bound",
        index,
        Grade::Numeric,
        Verdict::Holds,
        format!("t = {t}: F = {:.6e} ≤ e^(−t²)·π/4 = {:.6e}", report.f.value.to_float(), cap.to_float()),
    ));
    let via = probability_integral_via_f_with(tw, tol, &cfg.quad);
    let direct = gauss_truncated_with(tw, tol, &cfg.quad)?;
    let o = match via {
        Ok(v) => {
            let diff = (v.value - direct.value).abs();
            let allowed = v.total_uncertainty() + direct.total_uncertainty();
            CheckOutcome::new(
                "probability_integral_via_f",
                index,
                Grade::Numeric,
                if diff <= allowed { Verdict::Holds } else { Verdict::Fails },
                format!(
                    "t = {t}: √(π/4 − F) = {:.12} vs direct {:.12}, |diff| = {:.2e} ≤ {:.2e}",
                    v.value.to_float(),
                    direct.value.to_float(),
                    diff.to_float(),
                    allowed.to_float()
                ),
            )
        }
        Err(Error::NegativeRadicand { radicand, uncertainty }) => CheckOutcome::new(
            "probability_integral_via_f",
            index,
            Grade::Numeric,
            Verdict::Fails,
            format!("t = {t}: radicand {radicand:e} below −{uncertainty:e}"),
        ),
        Err(e) => return Err(e),
    };
    out.push(o);
    Ok((out, Some(report)))
}

fn run_part(suite: Suite, cfg: &SuiteConfig, enc: &PiEnclosure, report: &mut SuiteReport) -> Result<()> {
    let max_n = cfg.max_n;
    let cap = max_n.min(cfg.numeric_cap);
    let policy = cfg.escalation;
    let out = match suite {
        Suite::Stieltjes => per_n((1..=max_n).collect(), cfg, |n| Ok(vec![check_stieltjes_with(n, enc, policy)?]))?,
        Suite::Squeeze => {
            report.enclosures.push(pi_enclosure_wallis(max_n)?);
            report.enclosures.push(pi_enclosure_moments(max_n)?);
            report.enclosures.push(sqrtpi_enclosure_moments(max_n)?);
            per_n((1..=max_n).collect(), cfg, |n| {
                Ok(vec![check_moment_squeeze_with(n, enc, policy)?, wallis_contains_machin(n, enc, policy)?])
            })?
        }
        Suite::Wallis => per_n((1..=max_n).collect(), cfg, |n| {
            Ok(vec![
                check_wallis_monotone_with(n - 1, enc, policy)?,
                check_product_identity(n)?,
                check_sqrt_limit_bounds_with(n, enc, policy)?,
            ])
        })?,
        Suite::Disguise => per_n((1..=cap).collect(), cfg, |n| {
            let mut v = vec![
                check_disguise_reciprocal(n, cfg.tol, enc, &cfg.quad)?,
                check_disguise_poly(n, cfg.tol, enc, &cfg.quad)?,
                check_quadrature_wallis(n, cfg.tol, enc, &cfg.quad)?,
                check_quadrature_moment(n, cfg.tol, enc, &cfg.quad)?,
            ];
            if n == 1 {
                v.insert(2, check_quadrature_wallis(0, cfg.tol, enc, &cfg.quad)?);
                v.insert(3, check_quadrature_moment(0, cfg.tol, enc, &cfg.quad)?);
            }
            Ok(v)
        })?,
        Suite::Sandwich => {
            if cap >= 2 {
                let e = probability_integral_enclosure(cap)?;
                report.enclosures.push(e.truncated);
                report.enclosures.push(e.full);
            }
            per_n((1..=cap).collect(), cfg, |n| {
                let mut v = vec![check_spivak_sandwich_with(n, cfg.tol, &cfg.quad)?];
                if n >= 2 {
                    v.push(check_truncated_containment(n, cfg.tol, &cfg.quad)?);
                }
                Ok(v)
            })?
        }
        Suite::Conservation => {
            let grid = conservation_grid();
            let parts = par_map(&grid, cfg.threads, |&t| conservation_point(t, cfg));
            let mut out = Vec::new();
            for (i, p) in parts.into_iter().enumerate() {
                let (outcomes, rep) = p?;
                out.extend(outcomes.into_iter().map(|mut o| {
                    o.n = i as u64;
                    o
                }));
                report.conservation.extend(rep);
            }
            out
        }
        Suite::All => {
            for part in Suite::PARTS {
                run_part(part, cfg, enc, report)?;
            }
            return Ok(());
        }
    };
    report.outcomes.extend(out);
    Ok(())
}

/// Runs a suite. Outcomes are ordered by part, then by index.
pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Result<SuiteReport> {
    if cfg.max_n == 0 {
        return Err(invalid("max_n must be at least 1"));
    }
    if !(cfg.tol >= crate::quadrature::MIN_TOL) || !cfg.tol.is_finite() {
        return Err(invalid(format!("tol must be finite and at least {:e}", crate::quadrature::MIN_TOL)));
    }
    let enc = pi_enclosure(cfg.enc_digits)?;
    let mut report = SuiteReport {
        suite,
        outcomes: Vec::new(),
        conservation: Vec::new(),
        enclosures: Vec::new(),
    };
    run_part(suite, cfg, &enc, &mut report)?;
    Ok(report)
}
