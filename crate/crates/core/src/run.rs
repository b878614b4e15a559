//! Running a [`ProblemFile`] end to end and reporting statistics.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{AlgoError, RunError};
use crate::poly::{Poly, PolyRing};
use crate::problem::ProblemFile;
use crate::ring::{dispatch, Ring, RingVisitor};
use crate::sig::format_signature;
use crate::sigmoeller::{sig_moeller, Criteria, SigConfig};
use crate::weak::{check_weak_gb, moeller_weak, reduces_to_zero, Pivots, RunStats, WeakConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Moeller,
    SigMoeller,
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "moeller" => Ok(Self::Moeller),
            "sigmoeller" => Ok(Self::SigMoeller),
            other => Err(format!("unknown algorithm `{other}` (expected moeller or sigmoeller)")),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Moeller => "moeller",
            Self::SigMoeller => "sigmoeller",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunOptions {
    pub algorithm: Algorithm,
    pub criteria: Criteria,
    pub verify: bool,
    pub trace: bool,
    pub experimental_ufd: bool,
    pub max_iterations: u64,
    pub time_limit: Option<Duration>,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self {
            algorithm: Algorithm::SigMoeller,
            criteria: Criteria::none(),
            verify: false,
            trace: false,
            experimental_ufd: false,
            max_iterations: 100_000,
            time_limit: None,
        }
    }
}

/// One basis element as printed in reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisEntry {
    pub poly: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub signature: Option<String>,
}

/// Everything a run reports; serialized as the `--stats-json` document.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StatsReport {
    pub algorithm: Algorithm,
    pub criteria: Criteria,
    pub ring: String,
    pub order: String,
    pub stats: RunStats,
    pub wall_time_ms: f64,
    pub basis: Vec<BasisEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verified: Option<bool>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub trace: Vec<String>,
}

struct Job<'a> {
    problem: &'a ProblemFile,
    opts: &'a RunOptions,
}

/// Both algorithms' outputs generate the same ideal, the primary output is
/// a weak Gröbner basis and contains the inputs in its ideal.
fn verify<R: Ring>(
    ctx: &PolyRing<R>,
    inputs: &[Poly<R::Elem>],
    primary: &[Poly<R::Elem>],
    companion: &[Poly<R::Elem>],
) -> Result<bool, AlgoError> {
    Ok(check_weak_gb(ctx, primary, Pivots::Newest, None)?
        && reduces_to_zero(ctx, inputs, primary)?
        && reduces_to_zero(ctx, primary, companion)?
        && reduces_to_zero(ctx, companion, primary)?)
}

impl RingVisitor for Job<'_> {
    type Output = Result<StatsReport, RunError>;

    fn visit<R: Ring + 'static>(self, ring: R) -> Self::Output {
        let Job { problem, opts } = self;
        let ctx = PolyRing::new(ring, problem.vars.iter().cloned(), problem.order);
        let inputs: Vec<Poly<R::Elem>> = problem
            .generators
            .iter()
            .map(|g| ctx.parse(g).expect("validated problem"))
            .collect();
        let start = Instant::now();
        let mut trace: Vec<String> = Vec::new();
        let (stats, basis, values) = match opts.algorithm {
            Algorithm::SigMoeller => {
                let config = SigConfig { criteria: opts.criteria, max_iterations: opts.max_iterations, time_limit: opts.time_limit };
                let observer = if opts.trace { Some(&mut trace as &mut dyn crate::sigmoeller::Observer) } else { None };
                let out = sig_moeller(&ctx, &inputs, &config, observer)?;
                let entries = out
                    .basis
                    .iter()
                    .map(|g| BasisEntry { poly: ctx.format(&g.value), signature: Some(format_signature(&ctx, &g.sig)) })
                    .collect();
                (out.stats, entries, out.values())
            }
            Algorithm::Moeller => {
                let out = moeller_weak(&ctx, &inputs, &WeakConfig { max_iterations: opts.max_iterations, time_limit: opts.time_limit })?;
                let entries =
                    out.basis.iter().map(|g| BasisEntry { poly: ctx.format(g), signature: None }).collect();
                (out.stats, entries, out.basis)
            }
        };
        let wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
        let verified = if opts.verify {
            // A weak Gröbner basis of the same ideal from a different run; SigMöller
            // with all criteria is by far the cheapest, so it is the default.
            let criteria = match opts.algorithm {
                Algorithm::SigMoeller if opts.criteria == Criteria::all() => Criteria { f5: true, ..Criteria::none() },
                _ => Criteria::all(),
            };
            let config = SigConfig { criteria, max_iterations: opts.max_iterations, time_limit: opts.time_limit };
            let companion = sig_moeller(&ctx, &inputs, &config, None)?.values();
            Some(verify(&ctx, &inputs, &values, &companion)?)
        } else {
            None
        };
        Ok(StatsReport {
            algorithm: opts.algorithm,
            criteria: opts.criteria,
            ring: problem.ring.to_string(),
            order: problem.order.name().to_string(),
            stats,
            wall_time_ms,
            basis,
            verified,
            trace,
        })
    }
}

/// Runs the selected algorithm on `problem`.
pub fn run(problem: &ProblemFile, opts: &RunOptions) -> Result<StatsReport, RunError> {
    if problem.ring.is_experimental() && !opts.experimental_ufd {
        return Err(RunError::Experimental(problem.ring.to_string()));
    }
    dispatch(&problem.ring, Job { problem, opts })
}
