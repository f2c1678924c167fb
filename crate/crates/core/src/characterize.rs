//! Classification of total functions by exact one-query computability, and
//! explicit one-query circuits for the computable families.
//!
//! A total `f` is computed exactly with one query iff it is a (possibly
//! negated) dictator `x_i` or parity pair `x_i ⊕ x_j`; constants need no query.

use serde::Serialize;

use crate::boolfn::{input_bit, var_mask, TruthTable};
use crate::error::{Error, Result};
use crate::field::{QComplex, QSqrt2, Scalar};
use crate::matrix::{complete_orthonormal, Matrix};
use crate::qsim::{is_exact, Circuit, Dims, Measurement};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NotExactReason {
    /// Depends on this many (at least 3) variables.
    DependsOnTooMany(usize),
    /// Depends on two variables but is AND-like (isomorphic to `AND_2`).
    AndTypeOnTwo,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Classification {
    Constant(bool),
    Dictator {
        i: usize,
        negated: bool,
    },
    /// `x_i ⊕ x_j ⊕ negated` with `i < j`.
    ParityPair {
        i: usize,
        j: usize,
        negated: bool,
    },
    NotExactOneQuery(NotExactReason),
}

impl Classification {
    /// Dictator or parity pair.
    pub fn is_exact_one_query(&self) -> bool {
        matches!(
            self,
            Classification::Dictator { .. } | Classification::ParityPair { .. }
        )
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Classification::Constant(_) => "constant",
            Classification::Dictator { .. } => "dictator",
            Classification::ParityPair { .. } => "parity_pair",
            Classification::NotExactOneQuery(_) => "not_exact_one_query",
        }
    }

    /// The total function this classification describes (not for `NotExactOneQuery`).
    pub fn table(&self, n: usize) -> Result<TruthTable> {
        match *self {
            Classification::Constant(v) => TruthTable::constant(n, v),
            Classification::Dictator { i, negated } => {
                TruthTable::from_fn(n, |x| input_bit(n, x, i) ^ negated)
            }
            Classification::ParityPair { i, j, negated } => {
                TruthTable::from_fn(n, |x| input_bit(n, x, i) ^ input_bit(n, x, j) ^ negated)
            }
            Classification::NotExactOneQuery(_) => Err(Error::NotSynthesizable(self.kind().into())),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ClassificationJson::from(*self)).expect("plain data")
    }
}

#[derive(Serialize)]
struct ClassificationJson {
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    i: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    j: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    negated: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dependent_count: Option<usize>,
}

impl From<Classification> for ClassificationJson {
    fn from(c: Classification) -> Self {
        let mut out = ClassificationJson {
            kind: c.kind(),
            value: None,
            i: None,
            j: None,
            negated: None,
            reason: None,
            dependent_count: None,
        };
        match c {
            Classification::Constant(v) => out.value = Some(v as u8),
            Classification::Dictator { i, negated } => {
                out.i = Some(i);
                out.negated = Some(negated as u8);
            }
            Classification::ParityPair { i, j, negated } => {
                out.i = Some(i);
                out.j = Some(j);
                out.negated = Some(negated as u8);
            }
            Classification::NotExactOneQuery(NotExactReason::AndTypeOnTwo) => {
                out.reason = Some("and_type_on_two");
            }
            Classification::NotExactOneQuery(NotExactReason::DependsOnTooMany(t)) => {
                out.reason = Some("depends_on_too_many");
                out.dependent_count = Some(t);
            }
        }
        out
    }
}

/// Decides which family a total function belongs to.
pub fn classify(f: &TruthTable) -> Result<Classification> {
    let deps = f.dependent_set()?;
    let n = f.n();
    let at0 = f.value(0);
    Ok(match deps[..] {
        [] => Classification::Constant(at0),
        [i] => Classification::Dictator { i, negated: at0 },
        [i, j] => {
            // f ignores the other variables, so read the 2-bit restriction at 0
            let (mi, mj) = (var_mask(n, i), var_mask(n, j));
            let restricted = [f.value(0), f.value(mj), f.value(mi), f.value(mi | mj)];
            match restricted {
                [false, true, true, false] => Classification::ParityPair {
                    i,
                    j,
                    negated: false,
                },
                [true, false, false, true] => Classification::ParityPair {
                    i,
                    j,
                    negated: true,
                },
                _ => Classification::NotExactOneQuery(NotExactReason::AndTypeOnTwo),
            }
        }
        _ => Classification::NotExactOneQuery(NotExactReason::DependsOnTooMany(deps.len())),
    })
}

fn basis_vector(d: usize, idx: usize) -> Vec<QComplex> {
    let mut v = vec![QComplex::zero(); d];
    v[idx] = QComplex::one();
    v
}

fn half(sign: i64) -> QComplex {
    QComplex::real(QSqrt2::ratio(sign, 2))
}

/// An exact one-query circuit (`K = 1`, field `Q(√2)`) for a dictator or parity pair.
///
/// Dictator `x_i`: `U_0` swaps `|ψ_0>` with `|i,0>`, `U_1 = I`, and `E_1`
/// projects onto `b = 1`.
///
/// Parity pair `x_i ⊕ x_j` (the Deutsch algorithm): `U_0 = W` and `U_1 = W†`,
/// where `W` has first columns `v± = ½(|i0> - |i1> ± (|j0> - |j1>))`, completed by
/// Gram-Schmidt over the standard basis. After the query the state is
/// `±v+` or `±v-` according to the parity, which `U_1` sends to `|e_0>` or
/// `|e_1>`; `E_1 = |e_1><e_1|`.
///
/// Negated variants swap the measurement labels.
pub fn synthesize(cl: &Classification, n: usize) -> Result<Circuit<QComplex>> {
    let dims = Dims::new(n, 1)?;
    let d = dims.dim();
    let (unitaries, e1, negated) = match *cl {
        Classification::Dictator { i, negated } => {
            crate::boolfn::check_var(n, i)?;
            let target = dims.index(i, 0, 0);
            let mut perm: Vec<usize> = (0..d).collect();
            perm.swap(0, target);
            let u0 = Matrix::permutation(&perm);
            let e1 = Matrix::diagonal_projector(d, |idx| dims.split(idx).1 == 1);
            (vec![u0, Matrix::identity(d)], e1, negated)
        }
        Classification::ParityPair { i, j, negated } => {
            crate::boolfn::check_var(n, i)?;
            crate::boolfn::check_var(n, j)?;
            if i >= j {
                return Err(Error::NotSynthesizable(format!(
                    "parity pair needs i < j, got ({i}, {j})"
                )));
            }
            let mut plus = vec![QComplex::zero(); d];
            let mut minus = vec![QComplex::zero(); d];
            for (idx, s) in [
                (dims.index(i, 0, 0), 1),
                (dims.index(i, 1, 0), -1),
                (dims.index(j, 0, 0), 1),
                (dims.index(j, 1, 0), -1),
            ] {
                plus[idx] = half(s);
            }
            for (idx, s) in [
                (dims.index(i, 0, 0), 1),
                (dims.index(i, 1, 0), -1),
                (dims.index(j, 0, 0), -1),
                (dims.index(j, 1, 0), 1),
            ] {
                minus[idx] = half(s);
            }
            let cols = complete_orthonormal(&[plus, minus], d)?;
            let w = Matrix::from_columns(&cols)?;
            let e1 = Matrix::outer(&basis_vector(d, 1));
            (vec![w.clone(), w.adjoint()], e1, negated)
        }
        other => return Err(Error::NotSynthesizable(other.kind().into())),
    };
    let m = Measurement::projective(e1);
    let m = if negated { m.swapped() } else { m };
    Circuit::new(n, 1, unitaries, m)
}

/// Classifies `f`, synthesizes a circuit, and checks it computes `f` exactly
/// over `Q(√2)`.
pub fn verify_family(f: &TruthTable) -> Result<bool> {
    let cl = classify(f)?;
    if !cl.is_exact_one_query() {
        return Ok(false);
    }
    let c = synthesize(&cl, f.n())?;
    is_exact(&c, f)
}

/// The constant-vs-balanced promise on the oracle string `x ∈ {0,1}^n` and a
/// one-query circuit deciding it exactly (`f = 0` constant, `f = 1` balanced).
///
/// `U_0 = H_n ⊗ (H X)` prepares `n^{-1/2} Σ_i |i> ⊗ (|0> - |1>)/√2`, where
/// `H_n` is the normalized Sylvester-Hadamard matrix. `U_1 = U_0†`, so the
/// uniform component returns to `|e_0>`; `E_1 = I - |e_0><e_0|`.
pub fn deutsch_jozsa(n: usize) -> Result<(TruthTable, Circuit<QComplex>)> {
    if !matches!(n, 2 | 4) {
        return Err(Error::BadDeutschJozsaSize(n));
    }
    let f = TruthTable::from_partial_fn(n, |x| {
        let w = x.count_ones() as usize;
        if w == 0 || w == n {
            Some(false)
        } else if 2 * w == n {
            Some(true)
        } else {
            None
        }
    })?;
    let dims = Dims::new(n, 1)?;
    let d = dims.dim();
    // 1/sqrt(n) for n ∈ {2, 4}, times 1/sqrt(2) for the answer qubit
    let scale = match n {
        2 => QSqrt2::ratio(1, 2),
        _ => QSqrt2::sqrt2_ratio(1, 4),
    };
    let mut u0 = Matrix::<QComplex>::zeros(d);
    for idx in 0..d {
        let (i, b, _) = dims.split(idx);
        for col in 0..d {
            let (ci, cb, _) = dims.split(col);
            let sylvester = ((i - 1) & (ci - 1)).count_ones() % 2 == 1;
            // H X: column 0 -> (|0> - |1>)/√2, column 1 -> (|0> + |1>)/√2
            let hx = cb == 0 && b == 1;
            let entry = QComplex::real(scale.clone());
            u0.set(idx, col, if sylvester ^ hx { -entry } else { entry });
        }
    }
    let e1 = Matrix::identity(d).sub(&Matrix::outer(&basis_vector(d, 0)));
    let c = Circuit::new(
        n,
        1,
        vec![u0.clone(), u0.adjoint()],
        Measurement::projective(e1),
    )?;
    Ok((f, c))
}
