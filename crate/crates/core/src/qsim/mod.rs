//! State-vector simulation of `T`-query algorithms
//! `|ψ_x> = U_T O_x ... O_x U_0 |ψ_0>` followed by a two-outcome measurement.
//!
//! Basis ordering: `index(i, b, k) = ((i - 1) * 2 + b) * K + k` for query
//! register `i ∈ 1..=n`, answer bit `b`, ancilla `k ∈ 0..K`. The start state
//! `|ψ_0>` is basis state 0.

mod amplitude;
mod json;
pub mod random;

pub use amplitude::{
    beta_vector, lemma1_sum, phi_closed_form, phi_inner_product, phi_state, AmplitudeTable,
};
pub use json::AnyCircuit;

use crate::boolfn::{input_bit, TruthTable};
use crate::error::{Error, Result};
use crate::field::{Real, Scalar};
use crate::matrix::Matrix;

/// Register sizes of a query algorithm.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Dims {
    pub n: usize,
    pub k: usize,
}

impl Dims {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(Error::Dimension(format!(
                "need n >= 1 and K >= 1, got n = {n}, K = {k}"
            )));
        }
        Ok(Dims { n, k })
    }

    /// `d = 2 n K`.
    pub fn dim(&self) -> usize {
        2 * self.n * self.k
    }

    /// State index of `|i, b, k>` with 1-based `i`.
    #[inline]
    pub fn index(&self, i: usize, b: usize, k: usize) -> usize {
        ((i - 1) * 2 + b) * self.k + k
    }

    /// Inverse of [`Dims::index`].
    #[inline]
    pub fn split(&self, idx: usize) -> (usize, usize, usize) {
        let k = idx % self.k;
        let ib = idx / self.k;
        (ib / 2 + 1, ib % 2, k)
    }
}

/// The permutation `index(i, b, k) -> index(i, b ⊕ x_i, k)` implementing `O_x`.
pub fn oracle_permutation(n: usize, k: usize, x: usize) -> Result<Vec<usize>> {
    let dims = Dims::new(n, k)?;
    check_input(n, x)?;
    Ok((0..dims.dim())
        .map(|idx| {
            let (i, b, kk) = dims.split(idx);
            dims.index(i, b ^ input_bit(n, x, i) as usize, kk)
        })
        .collect())
}

fn check_input(n: usize, x: usize) -> Result<()> {
    if x >> n != 0 {
        Err(Error::InputOutOfRange { x, n })
    } else {
        Ok(())
    }
}

fn apply_permutation<S: Scalar>(perm: &[usize], state: &[S]) -> Vec<S> {
    let mut out = vec![S::zero(); state.len()];
    for (src, &dst) in perm.iter().enumerate() {
        out[dst] = state[src].clone();
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MeasurementKind {
    Projective,
    Povm,
}

/// Two-outcome POVM `(E_0, E_1)` with `E_0 = I - E_1`.
#[derive(Clone, PartialEq, Debug)]
pub struct Measurement<S> {
    pub kind: MeasurementKind,
    pub e1: Matrix<S>,
}

impl<S: Scalar> Measurement<S> {
    pub fn projective(e1: Matrix<S>) -> Self {
        Measurement {
            kind: MeasurementKind::Projective,
            e1,
        }
    }

    pub fn e0(&self) -> Matrix<S> {
        Matrix::identity(self.e1.dim()).sub(&self.e1)
    }

    pub fn effect(&self, outcome: bool) -> Matrix<S> {
        if outcome {
            self.e1.clone()
        } else {
            self.e0()
        }
    }

    /// Exchanges the outcome labels.
    pub fn swapped(&self) -> Self {
        Measurement {
            kind: self.kind,
            e1: self.e0(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        let e1 = &self.e1;
        if !e1.is_hermitian() {
            return Err(Error::BadMeasurement("E1 is not Hermitian".into()));
        }
        match self.kind {
            MeasurementKind::Projective => {
                if !e1.mul(e1).approx_eq(e1) {
                    return Err(Error::BadMeasurement("E1 is not a projector".into()));
                }
            }
            MeasurementKind::Povm => {
                if !e1.is_psd() {
                    return Err(Error::BadMeasurement(
                        "E1 is not positive semidefinite".into(),
                    ));
                }
                if !self.e0().is_psd() {
                    return Err(Error::BadMeasurement(
                        "I - E1 is not positive semidefinite".into(),
                    ));
                }
            }
        }
        Ok(())
    }
}

/// A `T`-query algorithm: `T + 1` unitaries and a two-outcome measurement.
#[derive(Clone, PartialEq, Debug)]
pub struct Circuit<S> {
    dims: Dims,
    unitaries: Vec<Matrix<S>>,
    measurement: Measurement<S>,
}

impl<S: Scalar> Circuit<S> {
    /// Validates dimensions, unitarity and the measurement.
    pub fn new(
        n: usize,
        k: usize,
        unitaries: Vec<Matrix<S>>,
        measurement: Measurement<S>,
    ) -> Result<Self> {
        let dims = Dims::new(n, k)?;
        let d = dims.dim();
        if unitaries.is_empty() {
            return Err(Error::Dimension("a circuit needs at least U_0".into()));
        }
        for (t, u) in unitaries.iter().enumerate() {
            if u.dim() != d {
                return Err(Error::Dimension(format!(
                    "U_{t} has dimension {}, expected 2nK = {d}",
                    u.dim()
                )));
            }
            if !u.is_unitary() {
                return Err(Error::NotUnitary(t));
            }
        }
        if measurement.e1.dim() != d {
            return Err(Error::Dimension(format!(
                "E1 has dimension {}, expected {d}",
                measurement.e1.dim()
            )));
        }
        measurement.validate()?;
        Ok(Circuit {
            dims,
            unitaries,
            measurement,
        })
    }

    pub fn n(&self) -> usize {
        self.dims.n
    }

    pub fn k(&self) -> usize {
        self.dims.k
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    /// Number of queries `T`.
    pub fn queries(&self) -> usize {
        self.unitaries.len() - 1
    }

    pub fn unitaries(&self) -> &[Matrix<S>] {
        &self.unitaries
    }

    pub fn measurement(&self) -> &Measurement<S> {
        &self.measurement
    }

    pub fn with_measurement(&self, measurement: Measurement<S>) -> Result<Self> {
        Self::new(self.n(), self.k(), self.unitaries.clone(), measurement)
    }

    pub fn start_state(&self) -> Vec<S> {
        let mut v = vec![S::zero(); self.dims.dim()];
        v[0] = S::one();
        v
    }

    /// `U_0 |ψ_0>`.
    pub fn prepared_state(&self) -> Vec<S> {
        self.unitaries[0].mul_vec(&self.start_state())
    }

    /// Final state `|ψ_x>`.
    pub fn run(&self, x: usize) -> Result<Vec<S>> {
        check_input(self.n(), x)?;
        let oracle = oracle_permutation(self.n(), self.k(), x)?;
        let mut state = self.prepared_state();
        for u in &self.unitaries[1..] {
            state = u.mul_vec(&apply_permutation(&oracle, &state));
        }
        Ok(state)
    }

    /// `(P[0], P[1])` for input `x`.
    pub fn outcome_probabilities(&self, x: usize) -> Result<(S::Real, S::Real)> {
        let psi = self.run(x)?;
        Ok((
            outcome_probability(&psi, &self.measurement, false)?,
            outcome_probability(&psi, &self.measurement, true)?,
        ))
    }

    fn check_table(&self, f: &TruthTable) -> Result<()> {
        if f.n() != self.n() {
            return Err(Error::Dimension(format!(
                "circuit has n = {}, table has n = {}",
                self.n(),
                f.n()
            )));
        }
        Ok(())
    }

    /// `P[r(x) = f(x)]` for every `x` in the domain of `f`.
    pub fn success_probabilities(&self, f: &TruthTable) -> Result<Vec<(usize, S::Real)>> {
        self.check_table(f)?;
        f.domain_iter()
            .map(|x| {
                let psi = self.run(x)?;
                Ok((x, outcome_probability(&psi, &self.measurement, f.value(x))?))
            })
            .collect()
    }
}

/// `<ψ|E_outcome|ψ>`.
pub fn outcome_probability<S: Scalar>(
    state: &[S],
    measurement: &Measurement<S>,
    outcome: bool,
) -> Result<S::Real> {
    if state.len() != measurement.e1.dim() {
        return Err(Error::Dimension(format!(
            "state has length {}, measurement acts on {}",
            state.len(),
            measurement.e1.dim()
        )));
    }
    let e1v = measurement.e1.mul_vec(state);
    let p1 = crate::matrix::inner(state, &e1v).re();
    Ok(if outcome {
        p1
    } else {
        crate::matrix::norm_sqr(state) - p1
    })
}

/// Every domain input is answered correctly with probability 1 (exactly, or
/// within tolerance for float circuits).
pub fn is_exact<S: Scalar>(c: &Circuit<S>, f: &TruthTable) -> Result<bool> {
    let one = S::Real::one();
    Ok(c.success_probabilities(f)?
        .iter()
        .all(|(_, p)| p.approx_eq(&one)))
}

/// Largest error probability `1 - P[correct]` over the domain.
pub fn max_error<S: Scalar>(c: &Circuit<S>, f: &TruthTable) -> Result<S::Real> {
    let one = S::Real::one();
    Ok(c.success_probabilities(f)?
        .into_iter()
        .map(|(_, p)| one.clone() - p)
        .fold(S::Real::zero(), |a, b| if b > a { b } else { a }))
}
