//! Deterministic decision trees and the exact classical query complexity `D(f)`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::boolfn::{input_bit, Bits, TruthTable};
use crate::error::{Error, Result};

/// Decision tree over 1-based variables. Serialized as `{"leaf": b}` or
/// `{"var": i, "lo": ..., "hi": ...}`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DecisionTree {
    Leaf {
        #[serde(with = "bit")]
        leaf: bool,
    },
    Node {
        var: usize,
        lo: Box<DecisionTree>,
        hi: Box<DecisionTree>,
    },
}

mod bit {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(b: &bool, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u8(*b as u8)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<bool, D::Error> {
        match u8::deserialize(d)? {
            0 => Ok(false),
            1 => Ok(true),
            v => Err(serde::de::Error::custom(format!(
                "leaf must be 0 or 1, got {v}"
            ))),
        }
    }
}

impl DecisionTree {
    pub fn leaf(b: bool) -> Self {
        DecisionTree::Leaf { leaf: b }
    }

    pub fn node(var: usize, lo: DecisionTree, hi: DecisionTree) -> Self {
        DecisionTree::Node {
            var,
            lo: Box::new(lo),
            hi: Box::new(hi),
        }
    }

    /// Follows the bits of input `x` (on `n` variables) down to a leaf.
    pub fn evaluate(&self, n: usize, x: usize) -> Result<bool> {
        let mut t = self;
        loop {
            match t {
                DecisionTree::Leaf { leaf } => return Ok(*leaf),
                DecisionTree::Node { var, lo, hi } => {
                    if *var == 0 || *var > n {
                        return Err(Error::VariableOutOfRange { index: *var, n });
                    }
                    t = if input_bit(n, x, *var) { hi } else { lo };
                }
            }
        }
    }

    /// Longest root-to-leaf path.
    pub fn depth(&self) -> usize {
        match self {
            DecisionTree::Leaf { .. } => 0,
            DecisionTree::Node { lo, hi, .. } => 1 + lo.depth().max(hi.depth()),
        }
    }

    /// True when no variable repeats along any root-to-leaf path.
    pub fn is_read_once_per_path(&self) -> bool {
        fn go(t: &DecisionTree, path: &mut Vec<usize>) -> bool {
            match t {
                DecisionTree::Leaf { .. } => true,
                DecisionTree::Node { var, lo, hi } => {
                    if path.contains(var) {
                        return false;
                    }
                    path.push(*var);
                    let ok = go(lo, path) && go(hi, path);
                    path.pop();
                    ok
                }
            }
        }
        go(self, &mut Vec::new())
    }
}

pub fn evaluate_tree(t: &DecisionTree, n: usize, x: usize) -> Result<bool> {
    t.evaluate(n, x)
}

pub fn tree_depth(t: &DecisionTree) -> usize {
    t.depth()
}

/// A depth-3 tree for `x_1 ∧ (x_2 ∨ x_3)`: query `x_1`, then `x_2`, then `x_3`.
pub fn and_or_tree() -> DecisionTree {
    use DecisionTree as T;
    T::node(
        1,
        T::leaf(false),
        T::node(2, T::node(3, T::leaf(false), T::leaf(true)), T::leaf(true)),
    )
}

/// A restriction of the original function to the subcube where the variables
/// not in `free` are fixed. Stored in the free variables' own index order, so
/// two restrictions with the same contents share a memo entry.
#[derive(Clone, PartialEq, Eq, Hash)]
struct Sub {
    values: Bits,
    domain: Bits,
}

impl Sub {
    fn vars(&self) -> usize {
        self.values.len().trailing_zeros() as usize
    }

    fn constant_value(&self) -> Option<Option<bool>> {
        let mut it = self.domain.iter_ones().map(|x| self.values.get(x));
        match it.next() {
            None => Some(None),
            Some(first) => it.all(|v| v == first).then_some(Some(first)),
        }
    }

    /// Fixes the local variable `pos` (0 = most significant) to `b`.
    fn restrict(&self, pos: usize, b: bool) -> Sub {
        let m = self.vars();
        let shift = m - 1 - pos;
        let low = (1usize << shift) - 1;
        let len = 1usize << (m - 1);
        let mut values = Bits::zeros(len);
        let mut domain = Bits::zeros(len);
        for y in 0..len {
            let x = ((y & !low) << 1) | ((b as usize) << shift) | (y & low);
            values.set(y, self.values.get(x));
            domain.set(y, self.domain.get(x));
        }
        Sub { values, domain }
    }
}

#[derive(Default)]
struct Solver {
    memo: HashMap<Sub, usize>,
}

impl Solver {
    fn depth(&mut self, s: &Sub) -> usize {
        if s.constant_value().is_some() {
            return 0;
        }
        if let Some(&d) = self.memo.get(s) {
            return d;
        }
        let m = s.vars();
        let mut best = usize::MAX;
        for pos in 0..m {
            let d0 = self.depth(&s.restrict(pos, false));
            if d0 + 1 >= best {
                continue;
            }
            let d1 = self.depth(&s.restrict(pos, true));
            best = best.min(1 + d0.max(d1));
        }
        self.memo.insert(s.clone(), best);
        best
    }

    /// `vars` maps local positions to original 1-based variable numbers.
    fn tree(&mut self, s: &Sub, vars: &[usize]) -> DecisionTree {
        if let Some(c) = s.constant_value() {
            // off-domain leaves hold 0
            return DecisionTree::leaf(c.unwrap_or(false));
        }
        let target = self.depth(s);
        for pos in 0..vars.len() {
            let lo = s.restrict(pos, false);
            let hi = s.restrict(pos, true);
            if 1 + self.depth(&lo).max(self.depth(&hi)) == target {
                let rest: Vec<usize> = vars
                    .iter()
                    .enumerate()
                    .filter(|&(p, _)| p != pos)
                    .map(|(_, &v)| v)
                    .collect();
                return DecisionTree::node(vars[pos], self.tree(&lo, &rest), self.tree(&hi, &rest));
            }
        }
        unreachable!("some variable attains the optimal depth")
    }
}

fn root(f: &TruthTable) -> Result<Sub> {
    if f.domain_iter().next().is_none() {
        return Err(Error::EmptyDomain);
    }
    Ok(Sub {
        values: f.values().clone(),
        domain: f.domain().clone(),
    })
}

/// `D(f)`: minimum depth of a decision tree correct on the domain of `f`.
pub fn decision_tree_depth(f: &TruthTable) -> Result<usize> {
    Ok(Solver::default().depth(&root(f)?))
}

/// An optimal tree, choosing the smallest variable index among optimal splits.
pub fn build_optimal_tree(f: &TruthTable) -> Result<DecisionTree> {
    let s = root(f)?;
    let vars: Vec<usize> = (1..=f.n()).collect();
    Ok(Solver::default().tree(&s, &vars))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tt(s: &str) -> TruthTable {
        s.parse().unwrap()
    }

    #[test]
    fn and_or_tree_examples() {
        let t = and_or_tree();
        assert!(!t.evaluate(3, 0b000).unwrap());
        assert!(t.evaluate(3, 0b110).unwrap());
        assert_eq!(t.depth(), 3);
        assert!(t.is_read_once_per_path());
        let f = tt("00000111");
        for x in 0..8 {
            assert_eq!(t.evaluate(3, x).unwrap(), f.value(x));
        }
    }

    #[test]
    fn leaf_and_single_node() {
        assert!(DecisionTree::leaf(true).evaluate(3, 5).unwrap());
        assert_eq!(DecisionTree::leaf(false).depth(), 0);
        let t = DecisionTree::node(1, DecisionTree::leaf(false), DecisionTree::leaf(true));
        assert_eq!(t.depth(), 1);
        assert!(!t.evaluate(2, 0).unwrap());
        let bad = DecisionTree::node(4, DecisionTree::leaf(false), DecisionTree::leaf(true));
        assert!(bad.evaluate(2, 0).is_err());
    }

    #[test]
    fn depths() {
        assert_eq!(decision_tree_depth(&tt("0011")).unwrap(), 1);
        assert_eq!(decision_tree_depth(&tt("00001111")).unwrap(), 1);
        assert_eq!(decision_tree_depth(&tt("0110")).unwrap(), 2);
        assert_eq!(decision_tree_depth(&tt("00000111")).unwrap(), 3);
        assert_eq!(decision_tree_depth(&tt("0000")).unwrap(), 0);
        assert_eq!(decision_tree_depth(&tt("01101001")).unwrap(), 3);
    }

    #[test]
    fn optimal_trees() {
        assert_eq!(
            build_optimal_tree(&tt("0011")).unwrap(),
            DecisionTree::node(1, DecisionTree::leaf(false), DecisionTree::leaf(true))
        );
        assert_eq!(
            build_optimal_tree(&tt("0000")).unwrap(),
            DecisionTree::leaf(false)
        );
        let f = tt("0110");
        let t = build_optimal_tree(&f).unwrap();
        assert_eq!(t.depth(), 2);
        for x in 0..4 {
            assert_eq!(t.evaluate(2, x).unwrap(), f.value(x));
        }
    }

    #[test]
    fn partial_functions() {
        // promise {00, 11}: one query decides
        let f = tt("0**1");
        assert_eq!(decision_tree_depth(&f).unwrap(), 1);
        let t = build_optimal_tree(&f).unwrap();
        for x in f.domain_iter() {
            assert_eq!(t.evaluate(2, x).unwrap(), f.value(x));
        }
        assert_eq!(decision_tree_depth(&tt("1***")).unwrap(), 0);
        assert_eq!(decision_tree_depth(&tt("****")), Err(Error::EmptyDomain));
    }

    #[test]
    fn json_shape() {
        let t = and_or_tree();
        let s = serde_json::to_string(&t).unwrap();
        assert!(s.starts_with(r#"{"var":1,"lo":{"leaf":0},"hi":{"var":2"#));
        let back: DecisionTree = serde_json::from_str(&s).unwrap();
        assert_eq!(back, t);
    }
}
