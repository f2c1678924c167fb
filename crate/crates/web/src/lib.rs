//! Browser bindings for the exact1q demo page.
//!
//! Every exported function takes plain strings or numbers and returns a JSON
//! string. Failures come back as `{"error": "..."}` so the page never has to
//! catch exceptions, and the same functions are callable from native tests.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use exact1q::boolfn::{format_input, TruthTable};
use exact1q::characterize::{classify, synthesize};
use exact1q::constraints::{build_system, distinguishing_sets, lp_feasible, LpOutcome};
use exact1q::dtree::{build_optimal_tree, decision_tree_depth};
use exact1q::field::{rational_json, QSqrt2, Real};
use exact1q::qsim::{is_exact, Circuit};
use exact1q::{QComplex, Result};

/// Largest table the page accepts; keeps the exact simulation interactive.
pub const MAX_DEMO_VARS: usize = 4;

fn parse(table: &str) -> Result<TruthTable> {
    let f: TruthTable = table.trim().parse()?;
    if f.n() > MAX_DEMO_VARS {
        return Err(exact1q::Error::TooManyVariables {
            n: f.n(),
            max: MAX_DEMO_VARS,
        });
    }
    Ok(f)
}

fn render(r: Result<Value>) -> String {
    r.unwrap_or_else(|e| json!({ "error": e.to_string() }))
        .to_string()
}

fn probability(p: &QSqrt2) -> Value {
    json!({ "exact": p.to_string(), "value": p.to_f64() })
}

fn per_input(c: &Circuit<QComplex>, f: &TruthTable) -> Result<Vec<Value>> {
    f.domain_iter()
        .map(|x| {
            let (_, p1) = c.outcome_probabilities(x)?;
            Ok(json!({
                "x": format_input(f.n(), x),
                "f": f.value(x) as u8,
                "p1": probability(&p1),
            }))
        })
        .collect()
}

/// Classification, dependent variables, D(f) with an optimal tree, and the
/// feasibility verdict of the pairwise amplitude constraints.
pub fn analyze_json(table: &str) -> Result<Value> {
    let f = parse(table)?;
    let mut v = json!({
        "table": f.to_string(),
        "n": f.n(),
        "total": f.is_total(),
    });
    if f.is_total() {
        v["classification"] = classify(&f)?.to_json();
        v["dependent_set"] = json!(f.dependent_set()?);
    }
    v["depth"] = json!(decision_tree_depth(&f)?);
    v["tree"] = serde_json::to_value(build_optimal_tree(&f)?)?;
    if f.constant_value().is_some() {
        v["feasibility"] = Value::Null;
        return Ok(v);
    }
    let cs = build_system(&f)?;
    let sets: Vec<Vec<usize>> = distinguishing_sets(&f).iter().map(|s| s.vars()).collect();
    let outcome = lp_feasible(&cs);
    let mut fe = json!({ "sets": sets, "feasible": outcome.is_feasible() });
    match outcome {
        LpOutcome::Feasible { witness } => {
            fe["witness"] = json!(witness.iter().map(|b| b.to_string()).collect::<Vec<_>>());
        }
        LpOutcome::Infeasible { certificate } => {
            fe["certificate"] = json!({
                "set_multipliers": certificate.set_multipliers.iter().map(rational_json).collect::<Result<Vec<_>>>()?,
                "cap_multiplier": rational_json(&certificate.cap_multiplier)?,
            });
        }
    }
    v["feasibility"] = fe;
    Ok(v)
}

/// Synthesizes the one-query circuit for a total table and reports the exact
/// probability of outcome 1 on every input.
pub fn simulate_json(table: &str) -> Result<Value> {
    let f = parse(table)?;
    let cl = classify(&f)?;
    if !cl.is_exact_one_query() {
        return Ok(json!({
            "table": f.to_string(),
            "classification": cl.to_json(),
            "circuit": false,
        }));
    }
    let c = synthesize(&cl, f.n())?;
    Ok(json!({
        "table": f.to_string(),
        "classification": cl.to_json(),
        "circuit": true,
        "dimension": c.dims().dim(),
        "queries": c.queries(),
        "inputs": per_input(&c, &f)?,
        "is_exact": is_exact(&c, &f)?,
    }))
}

/// The constant-versus-balanced promise problem for `n` in {2, 4}.
pub fn deutsch_jozsa_json(n: usize) -> Result<Value> {
    let (f, c) = exact1q::deutsch_jozsa(n)?;
    Ok(json!({
        "table": f.to_string(),
        "n": n,
        "dimension": c.dims().dim(),
        "queries": c.queries(),
        "inputs": per_input(&c, &f)?,
        "is_exact": is_exact(&c, &f)?,
    }))
}

#[wasm_bindgen]
pub fn analyze(table: &str) -> String {
    render(analyze_json(table))
}

#[wasm_bindgen]
pub fn simulate(table: &str) -> String {
    render(simulate_json(table))
}

#[wasm_bindgen]
pub fn deutsch_jozsa(n: usize) -> String {
    render(deutsch_jozsa_json(n))
}
