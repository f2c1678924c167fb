//! Amplitudes `α_{ijk}` of `U_0|ψ_0>` and the pairwise identities of
//! one-query algorithms built from them.

use super::{apply_permutation, check_input, oracle_permutation, Circuit, Dims};
use crate::boolfn::input_bit;
use crate::error::{Error, Result};
use crate::field::{Real, Scalar};
use crate::matrix::inner;

/// `U_0|ψ_0> = Σ α_{ijk} |i>|j>|k>`.
#[derive(Clone, PartialEq, Debug)]
pub struct AmplitudeTable<S> {
    dims: Dims,
    alpha: Vec<S>,
}

impl<S: Scalar> AmplitudeTable<S> {
    pub fn from_circuit(c: &Circuit<S>) -> Self {
        AmplitudeTable {
            dims: c.dims(),
            alpha: c.prepared_state(),
        }
    }

    /// Wraps a raw amplitude vector laid out in the circuit basis order.
    pub fn from_vec(n: usize, k: usize, alpha: Vec<S>) -> Result<Self> {
        let dims = Dims::new(n, k)?;
        if alpha.len() != dims.dim() {
            return Err(Error::Dimension(format!(
                "{} amplitudes for dimension {}",
                alpha.len(),
                dims.dim()
            )));
        }
        Ok(AmplitudeTable { dims, alpha })
    }

    pub fn dims(&self) -> Dims {
        self.dims
    }

    /// `α_{ijk}` with 1-based `i`, `j ∈ {0,1}`.
    pub fn get(&self, i: usize, j: usize, k: usize) -> &S {
        &self.alpha[self.dims.index(i, j, k)]
    }

    pub fn as_slice(&self) -> &[S] {
        &self.alpha
    }

    pub fn norm_sqr(&self) -> S::Real {
        crate::matrix::norm_sqr(&self.alpha)
    }

    /// `Σ_k |α_{i0k} - α_{i1k}|²`.
    pub fn beta(&self, i: usize) -> S::Real {
        (0..self.dims.k).fold(S::Real::zero(), |acc, k| {
            acc + (self.get(i, 0, k).clone() - self.get(i, 1, k).clone()).norm_sqr()
        })
    }

    /// `Σ_k (|α_{i0k}|² + |α_{i1k}|²)`, the probability mass on query register `i`.
    pub fn mass(&self, i: usize) -> S::Real {
        (0..self.dims.k).fold(S::Real::zero(), |acc, k| {
            acc + self.get(i, 0, k).norm_sqr() + self.get(i, 1, k).norm_sqr()
        })
    }

    /// `Σ_k (α*_{i0k} α_{i1k} + α*_{i1k} α_{i0k})`.
    pub fn cross(&self, i: usize) -> S::Real {
        (0..self.dims.k).fold(S::Real::zero(), |acc, k| {
            let (a, b) = (self.get(i, 0, k), self.get(i, 1, k));
            acc + (a.conj() * b.clone() + b.conj() * a.clone()).re()
        })
    }

    fn differing(&self, x: usize, y: usize) -> impl Iterator<Item = bool> + '_ {
        let n = self.dims.n;
        (1..=n).map(move |i| input_bit(n, x, i) != input_bit(n, y, i))
    }

    /// `Σ_{i∈S} β_i` with `S = {i : x_i != y_i}`.
    pub fn distinguishing_sum(&self, x: usize, y: usize) -> S::Real {
        self.differing(x, y)
            .enumerate()
            .filter(|&(_, d)| d)
            .fold(S::Real::zero(), |acc, (i, _)| acc + self.beta(i + 1))
    }

    /// `Σ_{i∉S} mass_i + Σ_{i∈S} cross_i`, the expanded form of `<φ_x|φ_y>`.
    pub fn inner_product_closed_form(&self, x: usize, y: usize) -> S::Real {
        self.differing(x, y)
            .enumerate()
            .fold(S::Real::zero(), |acc, (i, d)| {
                acc + if d {
                    self.cross(i + 1)
                } else {
                    self.mass(i + 1)
                }
            })
    }
}

fn require_one_query<S: Scalar>(c: &Circuit<S>) -> Result<()> {
    match c.queries() {
        1 => Ok(()),
        t => Err(Error::NotOneQuery(t)),
    }
}

/// `β_i = Σ_k |α_{i0k} - α_{i1k}|²` for `i = 1..=n`.
pub fn beta_vector<S: Scalar>(c: &Circuit<S>) -> Vec<S::Real> {
    let a = AmplitudeTable::from_circuit(c);
    (1..=c.n()).map(|i| a.beta(i)).collect()
}

/// `Σ_{i∈S} Σ_k |α_{i0k} - α_{i1k}|²` where `S` is the set of bits on which
/// `x` and `y` differ. Equals 1 for every pair an exact circuit must separate.
pub fn lemma1_sum<S: Scalar>(c: &Circuit<S>, x: usize, y: usize) -> Result<S::Real> {
    require_one_query(c)?;
    check_input(c.n(), x)?;
    check_input(c.n(), y)?;
    Ok(AmplitudeTable::from_circuit(c).distinguishing_sum(x, y))
}

/// `|φ_x> = O_x U_0 |ψ_0>`.
pub fn phi_state<S: Scalar>(c: &Circuit<S>, x: usize) -> Result<Vec<S>> {
    let perm = oracle_permutation(c.n(), c.k(), x)?;
    Ok(apply_permutation(&perm, &c.prepared_state()))
}

/// `<φ_x|φ_y>` computed from the state vectors.
pub fn phi_inner_product<S: Scalar>(c: &Circuit<S>, x: usize, y: usize) -> Result<S> {
    require_one_query(c)?;
    Ok(inner(&phi_state(c, x)?, &phi_state(c, y)?))
}

/// The amplitude expansion of `<φ_x|φ_y>`.
pub fn phi_closed_form<S: Scalar>(c: &Circuit<S>, x: usize, y: usize) -> Result<S::Real> {
    require_one_query(c)?;
    check_input(c.n(), x)?;
    check_input(c.n(), y)?;
    Ok(AmplitudeTable::from_circuit(c).inner_product_closed_form(x, y))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qsim::random::{random_circuit, random_state};
    use num_complex::Complex64;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn identity_prep_concentrates_on_zero() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let c = random_circuit(2, 1, 1, &mut rng);
        let id = Circuit::new(
            2,
            1,
            vec![crate::matrix::Matrix::identity(4), c.unitaries()[1].clone()],
            c.measurement().clone(),
        )
        .unwrap();
        let a = AmplitudeTable::from_circuit(&id);
        assert_eq!(*a.get(1, 0, 0), Complex64::new(1.0, 0.0));
        assert!(a.as_slice()[1..]
            .iter()
            .all(|z| *z == Complex64::new(0.0, 0.0)));
    }

    #[test]
    fn lemma1_sum_is_zero_on_equal_inputs() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let c = random_circuit(3, 2, 1, &mut rng);
        for x in 0..8 {
            assert_eq!(lemma1_sum(&c, x, x).unwrap(), 0.0);
            assert!(phi_inner_product(&c, x, x)
                .unwrap()
                .approx_eq(&Complex64::new(1.0, 0.0)));
        }
    }

    #[test]
    fn equal_amplitude_pairs_give_zero_sum() {
        let alpha = vec![Complex64::new(0.5, 0.0); 4];
        let a = AmplitudeTable::from_vec(2, 1, alpha).unwrap();
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(a.distinguishing_sum(x, y), 0.0);
            }
        }
    }

    #[test]
    fn one_query_required() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let c = random_circuit(2, 1, 2, &mut rng);
        assert_eq!(lemma1_sum(&c, 0, 1).unwrap_err(), Error::NotOneQuery(2));
        assert_eq!(
            phi_inner_product(&c, 0, 1).unwrap_err(),
            Error::NotOneQuery(2)
        );
    }

    #[test]
    fn closed_form_matches_direct_inner_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let n = rng.gen_range(1..=4);
            let k = rng.gen_range(1..=2);
            let c = random_circuit(n, k, 1, &mut rng);
            let x = rng.gen_range(0..1 << n);
            let y = rng.gen_range(0..1 << n);
            let direct = phi_inner_product(&c, x, y).unwrap();
            let closed = phi_closed_form(&c, x, y).unwrap();
            assert!(
                direct.approx_eq(&Complex64::new(closed, 0.0)),
                "{direct} vs {closed}"
            );
        }
    }

    fn arb_c64() -> impl Strategy<Value = Complex64> {
        (-2.0f64..2.0, -2.0f64..2.0).prop_map(|(re, im)| Complex64::new(re, im))
    }

    proptest! {
        /// mass - cross = |a - b|² per coordinate.
        #[test]
        fn subtraction_identity(a in arb_c64(), b in arb_c64()) {
            let mass = a.norm_sqr() + b.norm_sqr();
            let cross = (a.conj() * b + b.conj() * a).re;
            prop_assert!((mass - cross - (a - b).norm_sqr()).abs() < 1e-9);
        }

        /// |a - b|² <= 2 (|a|² + |b|²), summed over the ancilla.
        #[test]
        fn pairwise_bound(seed in any::<u64>(), n in 1usize..=4, k in 1usize..=3) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let alpha = random_state(2 * n * k, &mut rng);
            let a = AmplitudeTable::from_vec(n, k, alpha).unwrap();
            for i in 1..=n {
                prop_assert!(a.beta(i) <= 2.0 * a.mass(i) + 1e-12);
            }
            let total: f64 = (1..=n).map(|i| a.beta(i)).sum();
            prop_assert!(total <= 2.0 + 1e-9);
        }
    }
}
