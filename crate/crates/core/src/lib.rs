//! Exact-arithmetic Grothendieck group computations for Leavitt path
//! algebras of finite directed graphs.
//!
//! The crate computes, with no floating point anywhere:
//!
//! * the plain Grothendieck group K0 as an integer matrix cokernel
//!   ([`k0::k0_nongraded`]) and, independently, as the group completion of
//!   the graph monoid ([`monoid::k0_from_monoid`]);
//! * the graded Grothendieck group of polycephaly graphs (disjoint unions
//!   of acyclic parts flowing into sinks, exit-free cycles, and exit-free
//!   roses) in closed form ([`gradedk0::k0_graded_polycephaly`]), with a
//!   decision procedure for graded isomorphism ([`iso::decide_graded_iso`]);
//! * the graded Grothendieck group of any sink-free graph as a direct
//!   limit with decidable element equality ([`colimit`]);
//! * the graph monoid with bounded word-problem search ([`monoid`]).
//!
//! The crate is `no_std` (with `alloc`); parsing text formats lives here,
//! while file IO and the command-line interface live in the companion
//! binary crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod colimit;
pub mod gradedk0;
pub mod graph;
pub mod iso;
pub mod k0;
pub mod matrix;
pub mod monoid;
pub mod polycephaly;

pub use colimit::{
    bratteli, colimit_equal, colimit_presentation, exactness_check, is_strongly_graded,
    x_action_vector, BratteliLevel, ColimitElement, ColimitError, ColimitPresentation,
};
pub use gradedk0::{
    canonical_head_form, homogeneous_dim, k0_graded_polycephaly, x_act, x_act_pow,
    CanonicalHeadForm, GradedK0Module, HeadComponent, HomogeneousDim, LaurentPoly, ModuleElement,
    NAdicFraction, ResidueVector,
};
pub use graph::{
    hereditary_saturated_sets, parse_graph, Edge, EdgeId, Graph, GraphError, ParseError, Path,
    VertexId, VertexSet,
};
pub use iso::{
    abrams_factorization, decide_free_module_iso, decide_graded_iso, decide_matrix_leavitt_iso,
    HeadMatch, IsoError, IsoVerdict, MatrixIsoVerdict, ShiftVector, Verdict,
};
pub use k0::k0_nongraded;
pub use matrix::{
    adjacency, cokernel, k0_presentation_matrix, smith_normal_form, stable_kernel, FinAbGroup,
    IntMatrix, SmithDecomposition, StableKernel,
};
pub use monoid::{
    ideal_vertex_support, k0_from_monoid, monoid_equal, rewrite_step, Direction, IdealSupport,
    MonoidElement, MonoidEq, RewriteError, SupportError, DEFAULT_BUDGET,
};
pub use polycephaly::{
    classify, decomposition_report, Coefficient, Head, HeadAlgebra, HeadKind,
    PolycephalyDecomposition, RejectReason,
};
