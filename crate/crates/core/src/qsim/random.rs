//! Random float circuits for property tests and sampling.

use num_complex::Complex64;
use rand::Rng;

use super::{Circuit, Measurement, MeasurementKind};
use crate::matrix::{inner, Matrix};

fn random_vector<R: Rng + ?Sized>(d: usize, rng: &mut R) -> Vec<Complex64> {
    (0..d)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect()
}

fn normalize(v: &mut [Complex64]) {
    let n = v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    v.iter_mut().for_each(|a| *a /= n);
}

pub fn random_state<R: Rng + ?Sized>(d: usize, rng: &mut R) -> Vec<Complex64> {
    let mut v = random_vector(d, rng);
    normalize(&mut v);
    v
}

/// Unitary from Gram-Schmidt on random columns (not Haar distributed).
pub fn random_unitary<R: Rng + ?Sized>(d: usize, rng: &mut R) -> Matrix<Complex64> {
    let mut cols: Vec<Vec<Complex64>> = Vec::with_capacity(d);
    while cols.len() < d {
        let mut v = random_vector(d, rng);
        for b in &cols {
            let c = inner(b, &v);
            v.iter_mut().zip(b).for_each(|(vi, bi)| *vi -= c * bi);
        }
        if v.iter().map(|a| a.norm_sqr()).sum::<f64>() < 1e-6 {
            continue;
        }
        normalize(&mut v);
        cols.push(v);
    }
    Matrix::from_columns(&cols).expect("square")
}

/// `E_1 = V diag(p) V†` with random eigenvalues `p ∈ [0, 1]`.
pub fn random_povm<R: Rng + ?Sized>(d: usize, rng: &mut R) -> Measurement<Complex64> {
    let v = random_unitary(d, rng);
    let mut diag = Matrix::zeros(d);
    for i in 0..d {
        diag.set(i, i, Complex64::new(rng.gen_range(0.0..1.0), 0.0));
    }
    let mut e1 = v.mul(&diag).mul(&v.adjoint());
    // symmetrize rounding noise
    let adj = e1.adjoint();
    for r in 0..d {
        for c in 0..d {
            let s = (*e1.get(r, c) + *adj.get(r, c)) * 0.5;
            e1.set(r, c, s);
        }
    }
    Measurement {
        kind: MeasurementKind::Povm,
        e1,
    }
}

pub fn random_circuit<R: Rng + ?Sized>(
    n: usize,
    k: usize,
    queries: usize,
    rng: &mut R,
) -> Circuit<Complex64> {
    let d = 2 * n * k;
    let unitaries = (0..=queries).map(|_| random_unitary(d, rng)).collect();
    Circuit::new(n, k, unitaries, random_povm(d, rng)).expect("random circuit is valid")
}
