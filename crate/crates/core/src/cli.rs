//! Command-line front end. [`run`] is the whole program minus process exit.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::boolfn::{format_input, parse_input, TruthTable};
use crate::characterize::{classify, deutsch_jozsa, synthesize, Classification};
use crate::constraints::{
    build_system, dependency_shortcut, distinguishing_sets, lp_feasible, DistinguishingSet,
    LpOutcome,
};
use crate::corpus;
use crate::dtree::{build_optimal_tree, decision_tree_depth};
use crate::error::{Error, Result};
use crate::field::{rational_json, Real, Scalar};
use crate::harness::{verify_sample, verify_theorem, VerificationReport};
use crate::qsim::{
    is_exact, lemma1_sum, max_error, phi_closed_form, phi_inner_product, AnyCircuit, Circuit,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "exact1q",
    version,
    about = "Exact one-query quantum algorithms for Boolean functions"
)]
struct Cli {
    /// Emit machine-readable JSON
    #[arg(long, global = true)]
    json: bool,
    /// Seed for all randomness
    #[arg(long, global = true, env = "EXACT1Q_SEED", default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify a total function (exit 1 if not exactly one-query computable)
    Classify { table: String },
    /// Classical decision tree complexity D(f)
    Dtree {
        table: String,
        /// Also print an optimal tree
        #[arg(long)]
        tree: bool,
    },
    /// Decide the pairwise amplitude constraint system (exit 1 if infeasible)
    Feasibility {
        table: String,
        /// Print the witness or infeasibility certificate
        #[arg(long)]
        witness: bool,
    },
    /// Synthesize an exact one-query circuit
    Synth {
        table: String,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// Run a circuit on every domain input of a table
    Simulate { circuit: PathBuf, table: String },
    /// Evaluate the pairwise amplitude identity on inputs x, y (bit strings)
    Lemma1 {
        circuit: PathBuf,
        x: String,
        y: String,
    },
    /// Check classifier, constraint system and circuits agree on every function
    VerifyTheorem {
        #[arg(short = 'n')]
        n: usize,
        /// Worker threads (0 = all cores)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Check this many random functions instead (classifier vs. constraints only)
        #[arg(long)]
        sample: Option<u64>,
    },
    /// Deutsch-Jozsa promise demo
    Dj {
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
    },
    /// List the bundled named tables
    Corpus,
}

/// A truth table in `{0,1,*}` text or a corpus name.
fn table_arg(s: &str) -> Result<TruthTable> {
    corpus::lookup(s).map_or_else(|| s.parse(), Ok)
}

fn read_circuit(path: &PathBuf) -> Result<AnyCircuit> {
    let text =
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    AnyCircuit::from_json_str(&text)
}

fn write_file(path: &PathBuf, v: &Value) -> Result<()> {
    let text = serde_json::to_string_pretty(v)? + "\n";
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

struct Output<'a> {
    json: bool,
    out: &'a mut dyn Write,
}

impl Output<'_> {
    fn emit(&mut self, v: &Value, text: impl FnOnce() -> String) -> Result<()> {
        let s = if self.json {
            serde_json::to_string(v)?
        } else {
            text()
        };
        writeln!(self.out, "{s}").map_err(|e| Error::Io(e.to_string()))
    }
}

fn describe(cl: &Classification) -> String {
    match *cl {
        Classification::Constant(v) => format!("constant {}", v as u8),
        Classification::Dictator { i, negated: false } => format!("dictator x{i}"),
        Classification::Dictator { i, negated: true } => format!("negated dictator NOT x{i}"),
        Classification::ParityPair {
            i,
            j,
            negated: false,
        } => format!("parity pair x{i} XOR x{j}"),
        Classification::ParityPair {
            i,
            j,
            negated: true,
        } => {
            format!("negated parity pair NOT (x{i} XOR x{j})")
        }
        Classification::NotExactOneQuery(r) => format!("not exactly one-query computable ({r:?})"),
    }
}

fn cmd_classify(o: &mut Output, table: &str) -> Result<i32> {
    let f = table_arg(table)?;
    let cl = classify(&f)?;
    o.emit(&cl.to_json(), || describe(&cl))?;
    Ok(match cl {
        Classification::NotExactOneQuery(_) => EXIT_FALSE,
        _ => EXIT_OK,
    })
}

fn cmd_dtree(o: &mut Output, table: &str, tree: bool) -> Result<i32> {
    let f = table_arg(table)?;
    let depth = decision_tree_depth(&f)?;
    let t = tree.then(|| build_optimal_tree(&f)).transpose()?;
    let mut v = json!({ "table": f.to_string(), "depth": depth });
    if let Some(t) = &t {
        v["tree"] = serde_json::to_value(t)?;
    }
    o.emit(&v, || match &t {
        Some(t) => format!(
            "D(f) = {depth}\n{}",
            serde_json::to_string(t).unwrap_or_default()
        ),
        None => format!("D(f) = {depth}"),
    })?;
    Ok(EXIT_OK)
}

fn cmd_feasibility(o: &mut Output, table: &str, witness: bool) -> Result<i32> {
    let f = table_arg(table)?;
    let cs = build_system(&f)?;
    let outcome = lp_feasible(&cs);
    let partial = !f.is_total();
    let mut v = json!({
        "table": f.to_string(),
        "system": cs.to_json(),
        "feasible": outcome.is_feasible(),
        "verified": outcome.verify(&cs),
    });
    if partial {
        v["note"] = json!("necessary condition only");
    } else {
        v["dependency_shortcut"] = json!(dependency_shortcut(&f)?);
    }
    match &outcome {
        LpOutcome::Feasible { witness: beta } if witness => {
            v["witness"] = json!(beta.iter().map(rational_json).collect::<Result<Vec<_>>>()?);
        }
        LpOutcome::Infeasible { certificate } if witness => {
            v["certificate"] = certificate.to_json()?;
        }
        _ => {}
    }
    o.emit(&v, || {
        let mut s = String::from(if outcome.is_feasible() {
            "feasible"
        } else {
            "infeasible"
        });
        if partial {
            s.push_str(" (necessary condition only)");
        }
        if witness {
            match &outcome {
                LpOutcome::Feasible { witness } => {
                    let w: Vec<String> = witness.iter().map(|b| b.to_string()).collect();
                    s.push_str(&format!("\nbeta = ({})", w.join(", ")));
                }
                LpOutcome::Infeasible { certificate } => {
                    let sets: Vec<String> = cs
                        .sets
                        .iter()
                        .zip(&certificate.set_multipliers)
                        .filter(|(_, y)| !num_traits::Zero::is_zero(*y))
                        .map(|(set, y)| format!("{y} * {:?}", set.vars()))
                        .collect();
                    s.push_str(&format!(
                        "\ncertificate: {} ; cap multiplier {}",
                        sets.join(" + "),
                        certificate.cap_multiplier
                    ));
                }
            }
        }
        s
    })?;
    Ok(if outcome.is_feasible() {
        EXIT_OK
    } else {
        EXIT_FALSE
    })
}

fn cmd_synth(o: &mut Output, table: &str, output: Option<&PathBuf>) -> Result<i32> {
    let f = table_arg(table)?;
    let cl = classify(&f)?;
    if !cl.is_exact_one_query() {
        o.emit(
            &json!({ "table": f.to_string(), "classification": cl.to_json(), "circuit": null }),
            || format!("no one-query circuit: {}", describe(&cl)),
        )?;
        return Ok(EXIT_FALSE);
    }
    let c = synthesize(&cl, f.n())?;
    let exact = is_exact(&c, &f)?;
    let cj = c.to_json()?;
    match output {
        Some(path) => {
            write_file(path, &cj)?;
            o.emit(
                &json!({ "table": f.to_string(), "classification": cl.to_json(), "is_exact": exact, "output": path.display().to_string() }),
                || format!("{} -> {} (exact: {exact})", describe(&cl), path.display()),
            )?;
        }
        None => o.emit(&cj, || {
            serde_json::to_string_pretty(&cj).unwrap_or_default()
        })?,
    }
    Ok(if exact { EXIT_OK } else { EXIT_FALSE })
}

fn simulate_report<S: Scalar>(c: &Circuit<S>, f: &TruthTable) -> Result<(Value, String, bool)> {
    if c.n() != f.n() {
        return Err(Error::Dimension(format!(
            "circuit has n = {}, table has n = {}",
            c.n(),
            f.n()
        )));
    }
    let exact_field = matches!(S::KIND, crate::field::FieldKind::QSqrt2);
    let mut rows = Vec::new();
    let mut text = Vec::new();
    for x in f.domain_iter() {
        let (p0, p1) = c.outcome_probabilities(x)?;
        let fx = f.value(x);
        let correct = if fx { &p1 } else { &p0 };
        let mut row = json!({
            "x": format_input(f.n(), x),
            "f": fx as u8,
            "p0": p0.to_f64(),
            "p1": p1.to_f64(),
            "p_correct": correct.to_f64(),
        });
        if exact_field {
            row["p1_exact"] = json!(p1.to_string());
        }
        text.push(format!(
            "x = {}  f = {}  P[1] = {}  P[correct] = {}",
            format_input(f.n(), x),
            fx as u8,
            p1,
            correct
        ));
        rows.push(row);
    }
    let err = max_error(c, f)?;
    let exact = is_exact(c, f)?;
    let v = json!({
        "field": S::KIND.tag(),
        "n": c.n(),
        "T": c.queries(),
        "inputs": rows,
        "max_error": err.to_f64(),
        "is_exact": exact,
    });
    text.push(format!("max_error = {err}"));
    text.push(format!("is_exact = {exact}"));
    Ok((v, text.join("\n"), exact))
}

fn cmd_simulate(o: &mut Output, circuit: &PathBuf, table: &str) -> Result<i32> {
    let c = read_circuit(circuit)?;
    let f = table_arg(table)?;
    let (v, text, exact) = match &c {
        AnyCircuit::Float(c) => simulate_report(c, &f)?,
        AnyCircuit::Exact(c) => simulate_report(c, &f)?,
    };
    o.emit(&v, || text)?;
    Ok(if exact { EXIT_OK } else { EXIT_FALSE })
}

fn lemma1_report<S: Scalar>(c: &Circuit<S>, x: usize, y: usize) -> Result<(Value, String)> {
    let n = c.n();
    let sum = lemma1_sum(c, x, y)?;
    let direct = phi_inner_product(c, x, y)?;
    let closed = phi_closed_form(c, x, y)?;
    let s = DistinguishingSet::from_input_diff(n, x ^ y).vars();
    let v = json!({
        "x": format_input(n, x),
        "y": format_input(n, y),
        "S": s,
        "lemma1_sum": sum.to_f64(),
        "lemma1_sum_exact": sum.to_string(),
        "phi_inner_product": [direct.re().to_f64(), direct.im().to_f64()],
        "closed_form": closed.to_f64(),
        "closed_form_matches": direct.approx_eq(&S::from_real(closed.clone())),
    });
    let text = format!(
        "S = {s:?}\nsum_(i in S) sum_k |a_i0k - a_i1k|^2 = {sum}\n<phi_x|phi_y> = {direct:?}\nclosed form = {closed}"
    );
    Ok((v, text))
}

fn cmd_lemma1(o: &mut Output, circuit: &PathBuf, x: &str, y: &str) -> Result<i32> {
    let c = read_circuit(circuit)?;
    let n = c.n();
    let (x, y) = (parse_input(n, x)?, parse_input(n, y)?);
    let (v, text) = match &c {
        AnyCircuit::Float(c) => lemma1_report::<Complex64>(c, x, y)?,
        AnyCircuit::Exact(c) => lemma1_report(c, x, y)?,
    };
    o.emit(&v, || text)?;
    Ok(EXIT_OK)
}

fn report_text(r: &VerificationReport) -> String {
    let mut lines = vec![
        format!("n = {} ({})", r.n, r.mode),
        format!("functions checked: {}", r.total_functions),
        format!("constants: {}", r.constants),
        format!(
            "exact one-query: {} ({} dictators, {} parity pairs)",
            r.exact_one_query, r.dictator_count, r.parity_count
        ),
        format!("constraint system feasible: {}", r.lp_feasible_count),
        format!("mismatches: {}", r.mismatches.len()),
    ];
    lines.extend(
        r.mismatches
            .iter()
            .map(|m| format!("  mismatch: {}", m.table)),
    );
    lines.join("\n")
}

fn cmd_verify(
    o: &mut Output,
    err: &mut dyn Write,
    n: usize,
    jobs: usize,
    sample: Option<u64>,
    seed: u64,
) -> Result<i32> {
    let r = match sample {
        Some(m) => verify_sample(n, m, seed, jobs)?,
        None => verify_theorem(n, jobs)?,
    };
    o.emit(&serde_json::to_value(&r)?, || report_text(&r))?;
    let _ = writeln!(err, "wall time: {:.3}s", r.wall_time.as_secs_f64());
    Ok(if r.ok() { EXIT_OK } else { EXIT_FALSE })
}

fn cmd_dj(o: &mut Output, n: usize, output: Option<&PathBuf>) -> Result<i32> {
    let (f, c) = deutsch_jozsa(n)?;
    if let Some(path) = output {
        write_file(path, &c.to_json()?)?;
    }
    let (mut v, text, exact) = simulate_report(&c, &f)?;
    v["table"] = json!(f.to_string());
    o.emit(&v, || format!("promise table {f}\n{text}"))?;
    Ok(if exact { EXIT_OK } else { EXIT_FALSE })
}

fn cmd_corpus(o: &mut Output) -> Result<i32> {
    let entries = corpus::golden_corpus();
    let v = Value::Array(
        entries
            .iter()
            .map(|e| json!({ "name": e.name, "table": e.table, "description": e.description }))
            .collect(),
    );
    o.emit(&v, || {
        entries
            .iter()
            .map(|e| format!("{:<16} {:<18} {}", e.name, e.table, e.description))
            .collect::<Vec<_>>()
            .join("\n")
    })?;
    Ok(EXIT_OK)
}

/// Parses `args` (including the program name) and runs one subcommand.
/// Returns the process exit code: 0 success/true, 1 false/infeasible/mismatch,
/// 2 usage or input error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{e}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{e}");
                EXIT_OK
            };
            return code;
        }
    };
    let mut o = Output {
        json: cli.json,
        out,
    };
    let result = match &cli.command {
        Command::Classify { table } => cmd_classify(&mut o, table),
        Command::Dtree { table, tree } => cmd_dtree(&mut o, table, *tree),
        Command::Feasibility { table, witness } => cmd_feasibility(&mut o, table, *witness),
        Command::Synth { table, output } => cmd_synth(&mut o, table, output.as_ref()),
        Command::Simulate { circuit, table } => cmd_simulate(&mut o, circuit, table),
        Command::Lemma1 { circuit, x, y } => cmd_lemma1(&mut o, circuit, x, y),
        Command::VerifyTheorem { n, jobs, sample } => {
            cmd_verify(&mut o, err, *n, *jobs, *sample, cli.seed)
        }
        Command::Dj { n, output } => cmd_dj(&mut o, *n, output.as_ref()),
        Command::Corpus => cmd_corpus(&mut o),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Distinguishing sets as sorted variable lists, for display.
pub fn distinguishing_set_lists(f: &TruthTable) -> Vec<Vec<usize>> {
    distinguishing_sets(f)
        .iter()
        .map(DistinguishingSet::vars)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("exact1q").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn classify_json() {
        let (code, out, _) = run_str(&["classify", "0110", "--json"]);
        assert_eq!(code, 0);
        assert_eq!(
            out.trim(),
            r#"{"kind":"parity_pair","i":1,"j":2,"negated":0}"#
        );
        let (code, _, _) = run_str(&["classify", "and2"]);
        assert_eq!(code, 1);
    }

    #[test]
    fn feasibility_and2() {
        let (code, out, _) = run_str(&["feasibility", "0001"]);
        assert_eq!(code, 1);
        assert_eq!(out.trim(), "infeasible");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_str(&["classify", "011"]).0, 2);
        assert_eq!(run_str(&["bogus"]).0, 2);
        assert_eq!(run_str(&["verify-theorem", "-n", "9"]).0, 2);
        assert_eq!(run_str(&["simulate", "/nonexistent.json", "01"]).0, 2);
        assert_eq!(run_str(&["--help"]).0, 0);
    }

    #[test]
    fn dtree_with_tree() {
        let (code, out, _) = run_str(&["dtree", "and_or3", "--tree", "--json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["depth"], 3);
        assert!(v["tree"].is_object());
    }

    #[test]
    fn set_lists() {
        assert_eq!(
            distinguishing_set_lists(&"0001".parse().unwrap()),
            vec![vec![1], vec![2], vec![1, 2]]
        );
    }
}
