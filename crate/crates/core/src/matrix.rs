//! Small dense square matrices over a [`Scalar`] field.

use serde_json::Value;

use crate::error::{Error, Result};
use crate::field::{FieldKind, Real, Scalar, FLOAT_TOL};

#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<S> {
    dim: usize,
    data: Vec<S>,
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(dim: usize) -> Self {
        Matrix {
            dim,
            data: vec![S::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, S::one());
        }
        m
    }

    /// Matrix whose column `c` is `cols[c]`.
    pub fn from_columns(cols: &[Vec<S>]) -> Result<Self> {
        let dim = cols.len();
        let mut m = Self::zeros(dim);
        for (c, col) in cols.iter().enumerate() {
            if col.len() != dim {
                return Err(Error::Dimension(format!(
                    "column {c} has length {}, expected {dim}",
                    col.len()
                )));
            }
            for (r, v) in col.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        Ok(m)
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let dim = rows.len();
        let mut data = Vec::with_capacity(dim * dim);
        for (r, row) in rows.into_iter().enumerate() {
            if row.len() != dim {
                return Err(Error::Dimension(format!(
                    "row {r} has length {}, expected {dim}",
                    row.len()
                )));
            }
            data.extend(row);
        }
        Ok(Matrix { dim, data })
    }

    /// Permutation matrix sending basis state `j` to `perm[j]`.
    pub fn permutation(perm: &[usize]) -> Self {
        let mut m = Self::zeros(perm.len());
        for (j, &p) in perm.iter().enumerate() {
            m.set(p, j, S::one());
        }
        m
    }

    /// `|v><v|`.
    pub fn outer(v: &[S]) -> Self {
        let dim = v.len();
        let mut m = Self::zeros(dim);
        for r in 0..dim {
            for c in 0..dim {
                m.set(r, c, v[r].clone() * v[c].conj());
            }
        }
        m
    }

    /// Diagonal projector onto the basis states selected by `keep`.
    pub fn diagonal_projector(dim: usize, keep: impl Fn(usize) -> bool) -> Self {
        let mut m = Self::zeros(dim);
        for i in (0..dim).filter(|&i| keep(i)) {
            m.set(i, i, S::one());
        }
        m
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.dim + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: S) {
        self.data[r * self.dim + c] = v;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[S]> {
        self.data.chunks(self.dim.max(1))
    }

    pub fn column(&self, c: usize) -> Vec<S> {
        (0..self.dim).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn adjoint(&self) -> Self {
        let mut m = Self::zeros(self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                m.set(c, r, self.get(r, c).conj());
            }
        }
        m
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        debug_assert_eq!(v.len(), self.dim);
        self.rows()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let d = self.dim;
        let mut m = Self::zeros(d);
        for r in 0..d {
            for c in 0..d {
                let mut acc = S::zero();
                for k in 0..d {
                    acc = acc + self.get(r, k).clone() * other.get(k, c).clone();
                }
                m.set(r, c, acc);
            }
        }
        m
    }

    pub fn sub(&self, other: &Self) -> Self {
        Matrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }

    /// Squared Frobenius norm.
    pub fn frobenius_sqr(&self) -> S::Real {
        self.data
            .iter()
            .fold(S::Real::zero(), |acc, v| acc + v.norm_sqr())
    }

    /// Exact equality over exact fields; Frobenius distance within tolerance over floats.
    pub fn approx_eq(&self, other: &Self) -> bool {
        if self.dim != other.dim {
            return false;
        }
        let diff = self.sub(other).frobenius_sqr();
        match S::KIND {
            FieldKind::QSqrt2 => diff.is_exact_zero(),
            FieldKind::Float => diff.to_f64().sqrt() <= FLOAT_TOL,
        }
    }

    pub fn is_unitary(&self) -> bool {
        self.adjoint()
            .mul(self)
            .approx_eq(&Self::identity(self.dim))
    }

    pub fn is_hermitian(&self) -> bool {
        self.approx_eq(&self.adjoint())
    }

    /// Hermitian positive semidefiniteness by symmetric Gaussian elimination
    /// with diagonal pivoting. Assumes `self` is Hermitian.
    pub fn is_psd(&self) -> bool {
        let mut a = self.clone();
        let mut active: Vec<usize> = (0..self.dim).collect();
        while !active.is_empty() {
            // a negative diagonal entry rules out PSD
            if active.iter().any(|&i| !a.get(i, i).re().is_nonneg()) {
                return false;
            }
            let pivot = active
                .iter()
                .copied()
                .find(|&i| a.get(i, i).re().is_positive());
            let Some(p) = pivot else {
                // all remaining diagonal entries vanish: PSD iff the block is zero
                return active
                    .iter()
                    .all(|&r| active.iter().all(|&c| a.get(r, c).approx_eq(&S::zero())));
            };
            active.retain(|&i| i != p);
            let inv = a.get(p, p).recip();
            for &r in &active {
                let f = a.get(r, p).clone() * inv.clone();
                for &c in &active {
                    let v = a.get(r, c).clone() - f.clone() * a.get(p, c).clone();
                    a.set(r, c, v);
                }
            }
        }
        true
    }

    pub fn to_json(&self) -> Result<Value> {
        let rows = self
            .rows()
            .map(|row| row.iter().map(|v| v.to_json()).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Ok(Value::Array(rows.into_iter().map(Value::Array).collect()))
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let rows = v
            .as_array()
            .ok_or_else(|| Error::Json("matrix must be a list of rows".into()))?;
        let rows = rows
            .iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| Error::Json("matrix row must be a list".into()))?
                    .iter()
                    .map(S::from_json)
                    .collect::<Result<Vec<S>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }
}

/// `<u|v>`.
pub fn inner<S: Scalar>(u: &[S], v: &[S]) -> S {
    u.iter()
        .zip(v)
        .fold(S::zero(), |acc, (a, b)| acc + a.conj() * b.clone())
}

pub fn norm_sqr<S: Scalar>(v: &[S]) -> S::Real {
    v.iter().fold(S::Real::zero(), |acc, a| acc + a.norm_sqr())
}

/// Extends orthonormal `cols` to an orthonormal basis by Gram-Schmidt over the
/// standard basis vectors in index order. Fails when a normalization would
/// leave the field.
pub fn complete_orthonormal<S: Scalar>(cols: &[Vec<S>], dim: usize) -> Result<Vec<Vec<S>>> {
    let mut basis: Vec<Vec<S>> = cols.to_vec();
    for seed in 0..dim {
        if basis.len() == dim {
            break;
        }
        let mut v: Vec<S> = (0..dim)
            .map(|i| if i == seed { S::one() } else { S::zero() })
            .collect();
        for b in &basis {
            let c = inner(b, &v);
            for (vi, bi) in v.iter_mut().zip(b) {
                *vi = vi.clone() - c.clone() * bi.clone();
            }
        }
        let n2 = norm_sqr(&v);
        if !n2.is_positive() {
            continue;
        }
        let n = S::sqrt_real(&n2)
            .ok_or_else(|| Error::Inexact(format!("norm sqrt({n2}) is not in the field")))?;
        let inv = n.recip();
        basis.push(v.iter().map(|x| x.scale(&inv)).collect());
    }
    if basis.len() != dim {
        return Err(Error::Dimension(
            "columns are not linearly independent".into(),
        ));
    }
    Ok(basis)
}
