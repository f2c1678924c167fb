use std::cmp::Ordering;

use super::{Transform, TruthTable, MAX_ENUM_VARS};
use crate::error::{Error, Result};

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    out
}

/// Every NPN transform on `n` variables: `n! * 2^n * 2` of them.
pub fn all_transforms(n: usize) -> Vec<Transform> {
    let perms = permutations(n);
    let mut out = Vec::with_capacity(perms.len() << (n + 1));
    for perm in &perms {
        for mask in 0..(1usize << n) {
            for output_neg in [false, true] {
                out.push(Transform {
                    perm: perm.clone(),
                    input_neg: (0..n).map(|v| mask >> v & 1 == 1).collect(),
                    output_neg,
                });
            }
        }
    }
    out
}

/// Lexicographically smallest table in the NPN orbit of `f`, with a transform
/// reaching it. Exhaustive, so restricted to `n <= 4`.
pub fn npn_canonical(f: &TruthTable) -> Result<(TruthTable, Transform)> {
    f.require_total()?;
    if f.n() > MAX_ENUM_VARS {
        return Err(Error::TooManyVariables {
            n: f.n(),
            max: MAX_ENUM_VARS,
        });
    }
    let mut best: Option<(TruthTable, Transform)> = None;
    for t in all_transforms(f.n()) {
        let g = f.apply(&t)?;
        let better = match &best {
            None => true,
            Some((b, _)) => g.values().lex_cmp(b.values()) == Ordering::Less,
        };
        if better {
            best = Some((g, t));
        }
    }
    Ok(best.expect("at least the identity transform"))
}
