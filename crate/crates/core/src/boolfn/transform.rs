use serde::{Deserialize, Serialize};

use super::{input_bit, var_mask, TruthTable};
use crate::error::{Error, Result};

/// An NPN transform: input negation, input permutation, output negation.
///
/// Applying `t` to `f` yields `g(x) = f(z) ⊕ output_neg`, where
/// `y = x ⊕ input_neg` and `z` places `y_v` at position `perm[v]`.
/// Negation acts first, then the permutation, then output negation.
///
/// Variables are 0-based here: `perm[v]` is the destination of variable `v + 1`,
/// and `input_neg[v]` negates variable `v + 1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Transform {
    pub perm: Vec<usize>,
    pub input_neg: Vec<bool>,
    pub output_neg: bool,
}

impl Transform {
    pub fn identity(n: usize) -> Self {
        Transform {
            perm: (0..n).collect(),
            input_neg: vec![false; n],
            output_neg: false,
        }
    }

    pub fn output_negation(n: usize) -> Self {
        Transform {
            output_neg: true,
            ..Self::identity(n)
        }
    }

    /// Swaps variables `i` and `j` (1-based).
    pub fn swap(n: usize, i: usize, j: usize) -> Self {
        let mut t = Self::identity(n);
        t.perm.swap(i - 1, j - 1);
        t
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.perm.len();
        if self.input_neg.len() != n {
            return Err(Error::BadTransform(format!(
                "input_neg has length {}, perm has {n}",
                self.input_neg.len()
            )));
        }
        let mut seen = vec![false; n];
        for &p in &self.perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::BadTransform(format!(
                    "{:?} is not a permutation",
                    self.perm
                )));
            }
        }
        Ok(())
    }

    /// The transform `u` with `apply(apply(f, self), u) == f`.
    pub fn inverse(&self) -> Self {
        let n = self.perm.len();
        let mut perm = vec![0; n];
        let mut input_neg = vec![false; n];
        for (v, &p) in self.perm.iter().enumerate() {
            perm[p] = v;
            input_neg[p] = self.input_neg[v];
        }
        Transform {
            perm,
            input_neg,
            output_neg: self.output_neg,
        }
    }

    /// Image of input index `x` under negate-then-permute.
    pub fn map_input(&self, x: usize) -> usize {
        let n = self.perm.len();
        let mut z = 0;
        for v in 0..n {
            if input_bit(n, x, v + 1) ^ self.input_neg[v] {
                z |= var_mask(n, self.perm[v] + 1);
            }
        }
        z
    }

    /// Variable of `g = apply(f, self)` that plays the role of variable `i` of `f`
    /// (both 1-based).
    pub fn source_of(&self, i: usize) -> usize {
        self.perm
            .iter()
            .position(|&p| p == i - 1)
            .expect("perm is a bijection")
            + 1
    }
}

/// `g(x) = f(perm(x ⊕ input_neg)) ⊕ output_neg`; total tables only.
pub fn apply_transform(f: &TruthTable, t: &Transform) -> Result<TruthTable> {
    f.require_total()?;
    t.validate()?;
    if t.n() != f.n() {
        return Err(Error::BadTransform(format!(
            "transform on {} variables applied to a function of {}",
            t.n(),
            f.n()
        )));
    }
    TruthTable::from_fn(f.n(), |x| f.value(t.map_input(x)) ^ t.output_neg)
}

impl TruthTable {
    pub fn apply(&self, t: &Transform) -> Result<TruthTable> {
        apply_transform(self, t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn tt(s: &str) -> TruthTable {
        s.parse().unwrap()
    }

    #[test]
    fn output_negation_flips_every_bit() {
        let g = tt("0011").apply(&Transform::output_negation(2)).unwrap();
        assert_eq!(g.to_string(), "1100");
    }

    #[test]
    fn swap_moves_dictator() {
        let g = tt("0011").apply(&Transform::swap(2, 1, 2)).unwrap();
        assert_eq!(g.to_string(), "0101");
    }

    #[test]
    fn identity_is_identity() {
        for s in ["0110", "0001", "00010111", "01"] {
            let f = tt(s);
            assert_eq!(f.apply(&Transform::identity(f.n())).unwrap(), f);
        }
    }

    #[test]
    fn rejects_partial_and_bad_perm() {
        assert_eq!(
            tt("0**1").apply(&Transform::identity(2)),
            Err(Error::PartialTable)
        );
        let bad = Transform {
            perm: vec![0, 0],
            input_neg: vec![false; 2],
            output_neg: false,
        };
        assert!(matches!(
            tt("0110").apply(&bad),
            Err(Error::BadTransform(_))
        ));
        assert!(tt("0110").apply(&Transform::identity(3)).is_err());
    }

    #[test]
    fn source_of_tracks_dictator_variable() {
        let t = Transform {
            perm: vec![2, 0, 1],
            input_neg: vec![true, false, false],
            output_neg: false,
        };
        let f = TruthTable::dictator(3, 1).unwrap();
        let g = f.apply(&t).unwrap();
        assert_eq!(g.dependent_set().unwrap(), vec![t.source_of(1)]);
    }

    fn arb_transform(n: usize) -> impl Strategy<Value = Transform> {
        (
            Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
            proptest::collection::vec(any::<bool>(), n),
            any::<bool>(),
        )
            .prop_map(|(perm, input_neg, output_neg)| Transform {
                perm,
                input_neg,
                output_neg,
            })
    }

    fn arb_case() -> impl Strategy<Value = (TruthTable, Transform)> {
        (1usize..=6).prop_flat_map(|n| {
            let len = 1u32 << n;
            let mask = if len == 64 {
                u64::MAX
            } else {
                (1u64 << len) - 1
            };
            (any::<u64>(), arb_transform(n))
                .prop_map(move |(p, t)| (TruthTable::from_packed(n, p & mask).unwrap(), t))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn inverse_round_trips((f, t) in arb_case()) {
            let g = f.apply(&t).unwrap();
            prop_assert_eq!(g.apply(&t.inverse()).unwrap(), f);
        }

        #[test]
        fn output_negation_preserves_dependency((f, _t) in arb_case()) {
            let g = f.apply(&Transform::output_negation(f.n())).unwrap();
            prop_assert_eq!(f.dependent_set().unwrap(), g.dependent_set().unwrap());
        }
    }
}
