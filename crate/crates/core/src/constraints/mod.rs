//! Linear feasibility system over `β_i = Σ_k |α_{i0k} - α_{i1k}|²` that any
//! exact one-query algorithm must satisfy:
//!
//! * `Σ_{i∈S} β_i = 1` for every distinguishing set `S = {i : x_i != y_i}`
//!   of a pair with `f(x) != f(y)`;
//! * `Σ_i β_i <= 2`, since `β_i <= 2 · mass_i` and the masses sum to 1;
//! * `β >= 0`.

mod simplex;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use simplex::{lp_feasible, witness_satisfies, InfeasibilityCertificate, LpOutcome};

use crate::boolfn::{var_mask, TruthTable};
use crate::error::{Error, Result};

/// Right-hand side of the global cap `Σ β_i <= CAP`.
pub const CAP: i64 = 2;

/// Nonempty set of 1-based variables, packed with bit `i - 1` for variable `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct DistinguishingSet(u32);

impl DistinguishingSet {
    pub fn from_vars(vars: &[usize]) -> Self {
        DistinguishingSet(vars.iter().fold(0, |m, &i| m | 1 << (i - 1)))
    }

    /// Variables where inputs `x` and `x ⊕ diff` differ.
    pub fn from_input_diff(n: usize, diff: usize) -> Self {
        DistinguishingSet(
            (1..=n)
                .filter(|&i| diff & var_mask(n, i) != 0)
                .fold(0, |m, i| m | 1 << (i - 1)),
        )
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0 >> (i - 1) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn vars(&self) -> Vec<usize> {
        (1..=32).filter(|&i| self.contains(i)).collect()
    }
}

impl Ord for DistinguishingSet {
    /// Smaller sets first, then lexicographic on the sorted variables.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.vars().cmp(&other.vars()))
    }
}

impl PartialOrd for DistinguishingSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for DistinguishingSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.vars())
    }
}

impl Serialize for DistinguishingSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.vars().serialize(s)
    }
}

impl<'de> Deserialize<'de> for DistinguishingSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let vars = Vec::<usize>::deserialize(d)?;
        if vars.is_empty() || vars.iter().any(|&i| i == 0 || i > 32) {
            return Err(serde::de::Error::custom(
                "set must hold variables in 1..=32",
            ));
        }
        Ok(DistinguishingSet::from_vars(&vars))
    }
}

/// Fast Walsh-Hadamard transform in place (unnormalized).
fn walsh_hadamard(v: &mut [i64]) {
    let mut h = 1;
    while h < v.len() {
        for block in v.chunks_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        h *= 2;
    }
}

/// `{ S(x, y) : x, y ∈ D, f(x) != f(y) }`, deduplicated and sorted.
///
/// The set of differences `x ⊕ y` between the ones and zeros of `f` is the
/// support of their XOR-correlation, computed with two Walsh-Hadamard transforms.
pub fn distinguishing_sets(f: &TruthTable) -> Vec<DistinguishingSet> {
    let len = f.len();
    let mut ones = vec![0i64; len];
    let mut zeros = vec![0i64; len];
    for x in f.domain_iter() {
        if f.value(x) {
            ones[x] = 1;
        } else {
            zeros[x] = 1;
        }
    }
    walsh_hadamard(&mut ones);
    walsh_hadamard(&mut zeros);
    let mut corr: Vec<i64> = ones.iter().zip(&zeros).map(|(a, b)| a * b).collect();
    walsh_hadamard(&mut corr);
    let sets: BTreeSet<DistinguishingSet> = corr
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c != 0)
        .map(|(d, _)| DistinguishingSet::from_input_diff(f.n(), d))
        .collect();
    sets.into_iter().collect()
}

/// Equalities `Σ_{i∈S} β_i = 1`, the cap `Σ β_i <= 2`, and `β >= 0`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct ConstraintSystem {
    pub n: usize,
    pub sets: Vec<DistinguishingSet>,
    pub cap: i64,
}

impl ConstraintSystem {
    pub fn new(n: usize, sets: Vec<DistinguishingSet>) -> Self {
        ConstraintSystem { n, sets, cap: CAP }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain data")
    }
}

/// One equality per distinguishing set of `f`, plus the cap.
///
/// Partial tables are accepted; for them the system is a necessary condition only.
pub fn build_system(f: &TruthTable) -> Result<ConstraintSystem> {
    if f.domain_iter().next().is_none() {
        return Err(Error::EmptyDomain);
    }
    if f.constant_value().is_some() {
        return Err(Error::ConstantFunction);
    }
    Ok(ConstraintSystem::new(f.n(), distinguishing_sets(f)))
}

/// `false` when `f` depends on more than two variables (then the system is
/// certainly infeasible); `true` means undetermined.
pub fn dependency_shortcut(f: &TruthTable) -> Result<bool> {
    Ok(f.dependent_set()?.len() <= 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(s: &str) -> Vec<Vec<usize>> {
        distinguishing_sets(&s.parse().unwrap())
            .iter()
            .map(DistinguishingSet::vars)
            .collect()
    }

    /// Direct enumeration of all pairs.
    fn brute_sets(f: &TruthTable) -> Vec<DistinguishingSet> {
        let mut out = BTreeSet::new();
        for x in f.domain_iter() {
            for y in f.domain_iter() {
                if f.value(x) != f.value(y) {
                    out.insert(DistinguishingSet::from_input_diff(f.n(), x ^ y));
                }
            }
        }
        out.into_iter().collect()
    }

    #[test]
    fn examples() {
        assert_eq!(sets("0001"), vec![vec![1], vec![2], vec![1, 2]]);
        assert_eq!(sets("01"), vec![vec![1]]);
        assert_eq!(sets("0110"), vec![vec![1], vec![2]]);
        assert_eq!(sets("0011"), vec![vec![1], vec![1, 2]]);
        assert!(sets("0000").is_empty());
    }

    #[test]
    fn matches_brute_force_for_all_small_functions() {
        for n in 1..=3 {
            for f in crate::boolfn::enumerate_all(n).unwrap() {
                assert_eq!(distinguishing_sets(&f), brute_sets(&f), "{f}");
            }
        }
    }

    #[test]
    fn matches_brute_force_on_partial_tables() {
        for s in ["0**1", "0*1*", "*01*10**", "1**0*01*"] {
            let f: TruthTable = s.parse().unwrap();
            assert_eq!(distinguishing_sets(&f), brute_sets(&f), "{s}");
        }
    }

    #[test]
    fn build_system_examples() {
        let cs = build_system(&"0001".parse().unwrap()).unwrap();
        assert_eq!(cs.n, 2);
        assert_eq!(cs.cap, 2);
        assert_eq!(
            serde_json::to_string(&cs).unwrap(),
            r#"{"n":2,"sets":[[1],[2],[1,2]],"cap":2}"#
        );
        assert_eq!(
            build_system(&"0000".parse().unwrap()).unwrap_err(),
            Error::ConstantFunction
        );
        assert_eq!(
            build_system(&"1**1".parse().unwrap()).unwrap_err(),
            Error::ConstantFunction
        );
        let back: ConstraintSystem = serde_json::from_value(cs.to_json()).unwrap();
        assert_eq!(back, cs);
    }

    #[test]
    fn every_dependent_variable_gives_a_singleton() {
        for f in crate::boolfn::enumerate_all(3).unwrap() {
            if f.constant_value().is_some() {
                continue;
            }
            let cs = build_system(&f).unwrap();
            for i in f.dependent_set().unwrap() {
                assert!(cs.sets.contains(&DistinguishingSet::from_vars(&[i])));
            }
        }
    }

    #[test]
    fn shortcut_examples() {
        assert!(!dependency_shortcut(&"00010111".parse().unwrap()).unwrap());
        assert!(dependency_shortcut(&"0110".parse().unwrap()).unwrap());
        assert!(dependency_shortcut(&"0011".parse().unwrap()).unwrap());
    }

    #[test]
    fn output_negation_keeps_the_system() {
        for f in crate::boolfn::enumerate_all(3).unwrap() {
            if f.constant_value().is_some() {
                continue;
            }
            assert_eq!(
                build_system(&f).unwrap(),
                build_system(&f.negated()).unwrap()
            );
        }
    }
}
