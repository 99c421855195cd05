//! Crystal graphs in the classical and ladder models, exhaustive theorem
//! suites, and Graphviz export. The `ladder` binary is a thin shell over
//! this library.

pub mod dot;
pub mod graph;
pub mod report;
pub mod suites;

pub use dot::export_dot;
pub use graph::{build_crystal, regular_partition_counts, string_through, CrystalGraph, Edge};
pub use report::{Failure, VerificationReport};
pub use suites::{
    crystal_suite, equivalence_suite, golden_suite, mullineux_suite, regularization_suite,
    theorem_suite, verify_isomorphism,
};
