//! Exact one-query quantum algorithms for Boolean functions.
//!
//! The crate provides truth tables and NPN transforms ([`boolfn`]), classical
//! decision trees ([`dtree`]), a small quantum query simulator over floats or
//! exact `Q(sqrt 2)` arithmetic ([`qsim`]), the pairwise amplitude constraint
//! system with an exact LP decision procedure ([`constraints`]), the
//! classifier and circuit synthesizer ([`characterize`]), and an exhaustive
//! verification harness ([`harness`]).

pub mod boolfn;
pub mod characterize;
pub mod cli;
pub mod constraints;
pub mod corpus;
pub mod dtree;
pub mod error;
pub mod field;
pub mod harness;
pub mod matrix;
pub mod qsim;

pub use boolfn::{npn_canonical, parse_truth_table, Transform, TruthTable};
pub use characterize::{classify, deutsch_jozsa, synthesize, Classification};
pub use constraints::{build_system, lp_feasible, ConstraintSystem, LpOutcome};
pub use dtree::{decision_tree_depth, DecisionTree};
pub use error::{Error, Result};
pub use field::{FieldKind, QComplex, QSqrt2};
pub use harness::{verify_sample, verify_theorem, VerificationReport};
pub use matrix::Matrix;
pub use qsim::{AnyCircuit, Circuit, Measurement};
