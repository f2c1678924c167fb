//! Exhaustive three-way agreement check between the classifier, the linear
//! feasibility system, and synthesized circuits.

use std::collections::{HashMap, HashSet};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::boolfn::{TruthTable, MAX_ENUM_VARS};
use crate::characterize::{classify, verify_family, Classification};
use crate::constraints::{build_system, lp_feasible, ConstraintSystem};
use crate::error::{Error, Result};

/// Largest `n` accepted by sampling mode.
pub const MAX_SAMPLE_VARS: usize = 8;

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Mismatch {
    pub table: String,
    pub classification: serde_json::Value,
    pub lp_feasible: bool,
    /// `None` when synthesis was not attempted (sampling mode).
    pub circuit_verified: Option<bool>,
    pub dependent_count: usize,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub mode: &'static str,
    pub total_functions: u64,
    pub constants: u64,
    pub exact_one_query: u64,
    pub dictator_count: u64,
    pub parity_count: u64,
    pub lp_feasible_count: u64,
    pub mismatches: Vec<Mismatch>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Excluded from JSON so repeated runs serialize identically.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// `2n + n(n-1)`: negated and plain dictators plus negated and plain parity pairs.
pub fn expected_exact_one_query(n: usize) -> u64 {
    (2 * n + n * (n - 1)) as u64
}

struct Verdict {
    classification: Classification,
    lp_feasible: Option<bool>,
    mismatch: Option<Mismatch>,
}

/// Per-function data gathered before the LP pass.
struct Prepared {
    table: TruthTable,
    classification: Classification,
    system: Option<ConstraintSystem>,
}

fn prepare(table: TruthTable) -> Result<Prepared> {
    let classification = classify(&table)?;
    let system = match classification {
        Classification::Constant(_) => None,
        _ => Some(build_system(&table)?),
    };
    Ok(Prepared {
        table,
        classification,
        system,
    })
}

fn judge(p: Prepared, feasible: Option<bool>, synthesize: bool) -> Result<Verdict> {
    let Some(feasible) = feasible else {
        return Ok(Verdict {
            classification: p.classification,
            lp_feasible: None,
            mismatch: None,
        });
    };
    let f = &p.table;
    let cl = p.classification;
    let circuit_verified = if synthesize {
        Some(verify_family(f)?)
    } else {
        None
    };
    let deps = f.dependent_set()?.len();
    let expected = cl.is_exact_one_query();
    let agrees = feasible == expected
        && circuit_verified.is_none_or(|c| c == expected)
        && (!feasible || deps <= 2);
    Ok(Verdict {
        classification: cl,
        lp_feasible: Some(feasible),
        mismatch: (!agrees).then(|| Mismatch {
            table: f.to_string(),
            classification: cl.to_json(),
            lp_feasible: feasible,
            circuit_verified,
            dependent_count: deps,
        }),
    })
}

/// Many functions share a constraint system, so each distinct system is
/// solved once.
fn check_all(tables: Vec<TruthTable>, synthesize: bool) -> Result<Vec<Verdict>> {
    let prepared = tables
        .into_par_iter()
        .map(prepare)
        .collect::<Result<Vec<_>>>()?;
    let distinct: HashSet<&ConstraintSystem> =
        prepared.iter().filter_map(|p| p.system.as_ref()).collect();
    let solved: HashMap<&ConstraintSystem, bool> = distinct
        .into_iter()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|cs| (cs, lp_feasible(cs).is_feasible()))
        .collect();
    let feasibility: Vec<Option<bool>> = prepared
        .iter()
        .map(|p| p.system.as_ref().map(|cs| solved[cs]))
        .collect();
    prepared
        .into_par_iter()
        .zip(feasibility)
        .map(|(p, feasible)| judge(p, feasible, synthesize))
        .collect()
}

fn pool(jobs: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool")
}

fn assemble(
    n: usize,
    mode: &'static str,
    seed: Option<u64>,
    verdicts: Vec<Verdict>,
    start: Instant,
) -> VerificationReport {
    let mut r = VerificationReport {
        n,
        mode,
        total_functions: verdicts.len() as u64,
        constants: 0,
        exact_one_query: 0,
        dictator_count: 0,
        parity_count: 0,
        lp_feasible_count: 0,
        mismatches: Vec::new(),
        seed,
        wall_time: Duration::ZERO,
    };
    for v in verdicts {
        match v.classification {
            Classification::Constant(_) => r.constants += 1,
            Classification::Dictator { .. } => r.dictator_count += 1,
            Classification::ParityPair { .. } => r.parity_count += 1,
            Classification::NotExactOneQuery(_) => {}
        }
        if v.lp_feasible == Some(true) {
            r.lp_feasible_count += 1;
        }
        r.mismatches.extend(v.mismatch);
    }
    r.exact_one_query = r.dictator_count + r.parity_count;
    r.wall_time = start.elapsed();
    r
}

/// Checks every total function on `n <= 4` variables. `jobs = 0` uses all cores;
/// the report does not depend on `jobs`.
pub fn verify_theorem(n: usize, jobs: usize) -> Result<VerificationReport> {
    if n == 0 || n > MAX_ENUM_VARS {
        return Err(Error::TooManyVariables {
            n,
            max: MAX_ENUM_VARS,
        });
    }
    let start = Instant::now();
    let count = 1u64 << (1 << n);
    let verdicts = pool(jobs).install(|| {
        let tables = (0..count)
            .into_par_iter()
            .map(|p| TruthTable::from_packed(n, p))
            .collect::<Result<Vec<_>>>()?;
        check_all(tables, true)
    })?;
    Ok(assemble(n, "exhaustive", None, verdicts, start))
}

/// Classifier/LP agreement on `samples` uniformly random functions (no synthesis).
pub fn verify_sample(n: usize, samples: u64, seed: u64, jobs: usize) -> Result<VerificationReport> {
    if n == 0 || n > MAX_SAMPLE_VARS {
        return Err(Error::TooManyVariables {
            n,
            max: MAX_SAMPLE_VARS,
        });
    }
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let tables: Vec<TruthTable> = (0..samples)
        .map(|_| TruthTable::from_fn(n, |_| rng.gen()))
        .collect::<Result<_>>()?;
    let verdicts = pool(jobs).install(|| check_all(tables, false))?;
    Ok(assemble(n, "sample", Some(seed), verdicts, start))
}
