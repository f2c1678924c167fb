//! Exact phase-1 simplex (Bland's rule) over the constraint system, producing
//! either a witness `β` or a Farkas certificate of infeasibility.

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use super::ConstraintSystem;
use crate::error::Result;
use crate::field::{rational, rational_json, Rational};

/// Farkas multipliers: `y_S` (any sign) for each equality and `λ >= 0` for
/// the cap written as `2 - Σβ >= 0`.
///
/// Valid when, for every variable `i`, `Σ_{S∋i} y_S - λ <= 0`, while
/// `Σ_S y_S - 2λ > 0`. Any `β >= 0` meeting the equalities would give
/// `Σ_S y_S - λ Σβ = Σ_i β_i (Σ_{S∋i} y_S - λ) <= 0`, contradicting
/// `Σβ <= 2`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InfeasibilityCertificate {
    pub set_multipliers: Vec<Rational>,
    pub cap_multiplier: Rational,
}

impl InfeasibilityCertificate {
    pub fn verify(&self, cs: &ConstraintSystem) -> bool {
        if self.set_multipliers.len() != cs.sets.len() || self.cap_multiplier.is_negative() {
            return false;
        }
        let coeffs_ok = (1..=cs.n).all(|i| {
            let c = cs
                .sets
                .iter()
                .zip(&self.set_multipliers)
                .filter(|(s, _)| s.contains(i))
                .fold(Rational::zero(), |acc, (_, y)| acc + y)
                - &self.cap_multiplier;
            !c.is_positive()
        });
        let rhs = self
            .set_multipliers
            .iter()
            .fold(Rational::zero(), |acc, y| acc + y)
            - &self.cap_multiplier * rational(cs.cap, 1);
        coeffs_ok && rhs.is_positive()
    }

    pub fn to_json(&self) -> Result<Value> {
        Ok(json!({
            "set_multipliers": self.set_multipliers.iter().map(rational_json).collect::<Result<Vec<_>>>()?,
            "cap_multiplier": rational_json(&self.cap_multiplier)?,
        }))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LpOutcome {
    Feasible {
        witness: Vec<Rational>,
    },
    Infeasible {
        certificate: InfeasibilityCertificate,
    },
}

impl LpOutcome {
    pub fn is_feasible(&self) -> bool {
        matches!(self, LpOutcome::Feasible { .. })
    }

    /// Re-substitutes the witness, or re-checks the certificate.
    pub fn verify(&self, cs: &ConstraintSystem) -> bool {
        match self {
            LpOutcome::Feasible { witness } => witness_satisfies(cs, witness),
            LpOutcome::Infeasible { certificate } => certificate.verify(cs),
        }
    }
}

/// `β >= 0`, every equality exact, and the cap.
pub fn witness_satisfies(cs: &ConstraintSystem, beta: &[Rational]) -> bool {
    if beta.len() != cs.n || beta.iter().any(Signed::is_negative) {
        return false;
    }
    let eqs = cs.sets.iter().all(|s| {
        s.vars()
            .iter()
            .fold(Rational::zero(), |acc, &i| acc + &beta[i - 1])
            .is_one()
    });
    let total = beta.iter().fold(Rational::zero(), |acc, b| acc + b);
    eqs && total <= rational(cs.cap, 1)
}

struct Tableau {
    /// rows of `[coefficients..., rhs]`
    rows: Vec<Vec<Rational>>,
    /// reduced costs `d_j`, last entry is `-w`
    obj: Vec<Rational>,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for v in self.rows[r].iter_mut() {
            *v *= &inv;
        }
        let prow = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, p) in row.iter_mut().zip(&prow) {
                *v -= &f * p;
            }
        }
        if !self.obj[c].is_zero() {
            let f = self.obj[c].clone();
            for (v, p) in self.obj.iter_mut().zip(&prow) {
                *v -= &f * p;
            }
        }
        self.basis[r] = c;
    }

    /// Bland's rule: smallest improving column, ties in the ratio test broken
    /// by smallest basic index.
    fn run(&mut self) {
        let rhs = self.obj.len() - 1;
        while let Some(c) = (0..rhs).find(|&j| self.obj[j].is_negative()) {
            let mut best: Option<(Rational, usize, usize)> = None;
            for (r, row) in self.rows.iter().enumerate() {
                if !row[c].is_positive() {
                    continue;
                }
                let ratio = &row[rhs] / &row[c];
                let better = match &best {
                    None => true,
                    Some((b, _, bv)) => ratio < *b || (ratio == *b && self.basis[r] < *bv),
                };
                if better {
                    best = Some((ratio, r, self.basis[r]));
                }
            }
            // phase 1 is bounded below by 0, so some row always qualifies
            let (_, r, _) = best.expect("phase-1 objective is bounded");
            self.pivot(r, c);
        }
    }
}

/// Decides the system exactly. Columns: `β_1..β_n`, the cap slack, then one
/// artificial per equality.
pub fn lp_feasible(cs: &ConstraintSystem) -> LpOutcome {
    let n = cs.n;
    let m = cs.sets.len();
    let slack = n;
    let art = n + 1;
    let width = n + 1 + m + 1;
    let rhs = width - 1;

    let mut rows = Vec::with_capacity(m + 1);
    for (r, s) in cs.sets.iter().enumerate() {
        let mut row = vec![Rational::zero(); width];
        for i in s.vars() {
            row[i - 1] = Rational::one();
        }
        row[art + r] = Rational::one();
        row[rhs] = Rational::one();
        rows.push(row);
    }
    let mut cap_row = vec![Rational::zero(); width];
    for v in cap_row.iter_mut().take(n) {
        *v = Rational::one();
    }
    cap_row[slack] = Rational::one();
    cap_row[rhs] = rational(cs.cap, 1);
    rows.push(cap_row);

    // d_j = c_j - Σ_{equality rows} A_rj, objective entry -w
    let mut obj = vec![Rational::zero(); width];
    for r in 0..m {
        obj[art + r] = Rational::one();
    }
    for row in &rows[..m] {
        for (o, v) in obj.iter_mut().zip(row) {
            *o -= v;
        }
    }
    let basis = (0..m).map(|r| art + r).chain([slack]).collect();
    let mut t = Tableau { rows, obj, basis };
    t.run();

    let w = -t.obj[rhs].clone();
    let outcome = if w.is_zero() {
        let mut witness = vec![Rational::zero(); n];
        for (r, &b) in t.basis.iter().enumerate() {
            if b < n {
                witness[b] = t.rows[r][rhs].clone();
            }
        }
        LpOutcome::Feasible { witness }
    } else {
        // y_r = c_{a_r} - d_{a_r}, y_cap = -d_slack
        let set_multipliers = (0..m).map(|r| Rational::one() - &t.obj[art + r]).collect();
        LpOutcome::Infeasible {
            certificate: InfeasibilityCertificate {
                set_multipliers,
                cap_multiplier: t.obj[slack].clone(),
            },
        }
    };
    assert!(
        outcome.verify(cs),
        "simplex produced an unverifiable result for {cs:?}"
    );
    outcome
}
