//! Independent oracles for the feasibility decision, classification and D(f).

use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use exact1q::boolfn::{all_transforms, Transform, TruthTable};
use exact1q::characterize::{classify, synthesize};
use exact1q::constraints::{
    build_system, distinguishing_sets, lp_feasible, witness_satisfies, ConstraintSystem,
    DistinguishingSet, LpOutcome,
};
use exact1q::dtree::decision_tree_depth;
use exact1q::field::{rational, Rational};
use exact1q::qsim::{beta_vector, lemma1_sum, phi_closed_form, phi_inner_product};

/// `coeffs · β <= rhs`
#[derive(Clone, Debug)]
struct Ineq {
    coeffs: Vec<Rational>,
    rhs: Rational,
}

/// Fourier-Motzkin elimination: feasible iff no `0 <= negative` survives.
fn fm_feasible(cs: &ConstraintSystem) -> bool {
    let n = cs.n;
    let row = |coeffs: Vec<Rational>, rhs: Rational| Ineq { coeffs, rhs };
    let mut sys = Vec::new();
    for s in &cs.sets {
        let c: Vec<Rational> = (1..=n)
            .map(|i| {
                if s.contains(i) {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        sys.push(row(c.iter().map(|v| -v).collect(), -Rational::one()));
        sys.push(row(c, Rational::one()));
    }
    for i in 0..n {
        let mut c = vec![Rational::zero(); n];
        c[i] = -Rational::one();
        sys.push(row(c, Rational::zero()));
    }
    sys.push(row(vec![Rational::one(); n], rational(cs.cap, 1)));

    for v in 0..n {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for q in sys {
            if q.coeffs[v].is_positive() {
                pos.push(q);
            } else if q.coeffs[v].is_negative() {
                neg.push(q);
            } else {
                rest.push(q);
            }
        }
        for p in &pos {
            for q in &neg {
                let (a, b) = (p.coeffs[v].clone(), -q.coeffs[v].clone());
                let coeffs = p
                    .coeffs
                    .iter()
                    .zip(&q.coeffs)
                    .map(|(x, y)| x * &b + y * &a)
                    .collect();
                rest.push(row(coeffs, &p.rhs * &b + &q.rhs * &a));
            }
        }
        sys = rest;
    }
    sys.iter().all(|q| !q.rhs.is_negative())
}

/// Distinguishing sets straight from the definition.
fn brute_sets(f: &TruthTable) -> Vec<DistinguishingSet> {
    let mut sets: Vec<DistinguishingSet> = f
        .domain_iter()
        .flat_map(|x| f.domain_iter().map(move |y| (x, y)))
        .filter(|&(x, y)| f.value(x) != f.value(y))
        .map(|(x, y)| DistinguishingSet::from_input_diff(f.n(), x ^ y))
        .collect();
    sets.sort();
    sets.dedup();
    sets
}

fn total_tables(max_n: usize) -> impl Iterator<Item = TruthTable> {
    (1..=max_n)
        .flat_map(|n| (0..1u64 << (1 << n)).map(move |p| TruthTable::from_packed(n, p).unwrap()))
}

#[test]
fn simplex_agrees_with_fourier_motzkin() {
    for f in total_tables(3) {
        if f.constant_value().is_some() {
            continue;
        }
        let cs = build_system(&f).unwrap();
        let outcome = lp_feasible(&cs);
        assert!(outcome.verify(&cs), "{f}");
        assert_eq!(outcome.is_feasible(), fm_feasible(&cs), "{f}");
    }
}

#[test]
fn distinguishing_sets_match_definition() {
    for f in total_tables(3) {
        assert_eq!(distinguishing_sets(&f), brute_sets(&f), "{f}");
    }
}

#[test]
fn partial_tables_match_definition() {
    for text in ["0**1", "01*1", "0*1*0*1*", "*0011**0", "0**1*11**11*1**0"] {
        let f: TruthTable = text.parse().unwrap();
        assert_eq!(distinguishing_sets(&f), brute_sets(&f), "{f}");
        let cs = build_system(&f).unwrap();
        assert_eq!(lp_feasible(&cs).is_feasible(), fm_feasible(&cs), "{f}");
    }
}

#[test]
fn classification_is_transform_invariant() {
    for f in total_tables(3) {
        let cl = classify(&f).unwrap();
        let deps = f.dependent_set().unwrap().len();
        for t in all_transforms(f.n()) {
            let g = f.apply(&t).unwrap();
            let gl = classify(&g).unwrap();
            assert_eq!(cl.kind(), gl.kind(), "{f} -> {g}");
            assert_eq!(g.dependent_set().unwrap().len(), deps);
        }
    }
}

#[test]
fn depth_is_transform_invariant_exhaustively() {
    for f in total_tables(2) {
        let d = decision_tree_depth(&f).unwrap();
        for t in all_transforms(f.n()) {
            assert_eq!(
                decision_tree_depth(&f.apply(&t).unwrap()).unwrap(),
                d,
                "{f}"
            );
        }
    }
}

#[test]
fn synthesized_beta_is_a_witness() {
    for f in total_tables(4) {
        let cl = classify(&f).unwrap();
        if !cl.is_exact_one_query() {
            continue;
        }
        let c = synthesize(&cl, f.n()).unwrap();
        let beta: Vec<Rational> = beta_vector(&c)
            .into_iter()
            .map(|b| {
                assert!(b.b.is_zero(), "irrational beta for {f}");
                b.a
            })
            .collect();
        let cs = build_system(&f).unwrap();
        assert!(witness_satisfies(&cs, &beta), "{f}: {beta:?}");
        match lp_feasible(&cs) {
            LpOutcome::Feasible { witness } => assert!(witness_satisfies(&cs, &witness)),
            o => panic!("{f}: {o:?}"),
        }
    }
}

#[test]
fn synthesized_inner_products_follow_closed_form() {
    for f in total_tables(3) {
        let cl = classify(&f).unwrap();
        if !cl.is_exact_one_query() {
            continue;
        }
        let c = synthesize(&cl, f.n()).unwrap();
        for x in 0..f.len() {
            for y in 0..f.len() {
                let direct = phi_inner_product(&c, x, y).unwrap();
                let closed = phi_closed_form(&c, x, y).unwrap();
                assert!(direct.im.a.is_zero() && direct.im.b.is_zero());
                assert_eq!(direct.re, closed, "{f} {x} {y}");
                if f.value(x) != f.value(y) {
                    assert!(closed.a.is_zero() && closed.b.is_zero());
                    assert!(lemma1_sum(&c, x, y).unwrap().a.is_one());
                }
            }
        }
    }
}

fn arb_table(max_n: usize) -> impl Strategy<Value = TruthTable> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), 1 << n)
            .prop_map(move |v| TruthTable::from_fn(n, |x| v[x]).unwrap())
    })
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

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn depth_invariant_under_random_transforms(
        (f, t) in arb_table(4).prop_flat_map(|f| { let n = f.n(); (Just(f), arb_transform(n)) })
    ) {
        let g = f.apply(&t).unwrap();
        prop_assert_eq!(decision_tree_depth(&g).unwrap(), decision_tree_depth(&f).unwrap());
        prop_assert_eq!(classify(&g).unwrap().kind(), classify(&f).unwrap().kind());
    }

    #[test]
    fn feasible_iff_classified_exact(f in arb_table(4)) {
        prop_assume!(f.constant_value().is_none());
        let cs = build_system(&f).unwrap();
        prop_assert_eq!(lp_feasible(&cs).is_feasible(), classify(&f).unwrap().is_exact_one_query());
    }

    #[test]
    fn depth_bounded_by_dependent_count(f in arb_table(4)) {
        let d = decision_tree_depth(&f).unwrap();
        let deps = f.dependent_set().unwrap();
        prop_assert!(d <= deps.len());
        prop_assert_eq!(d == 0, deps.is_empty());
    }
}
