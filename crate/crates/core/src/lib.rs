//! Exact enumeration of the critical points of the linear entanglement
//! entropy of `L`-qubit pure states, explicit critical states for each
//! point, and numerical verification of those states.
//!
//! Basis convention: qubit 1 is the most significant bit of a basis index,
//! and bit 1 on qubit `k` corresponds to weight coordinate `+1/2`.

pub mod enumerator;
pub mod exact;
pub mod hypercube;
pub mod io;
pub mod search;
pub mod state_builder;
pub mod tolerance;
pub mod verify;

pub use enumerator::{
    accept, build_kkt, entropy_value, enumerate, extend_iteratively, find_witness, solve_subset,
    CriticalPoint, EnumerateError, EnumerateOptions, Enumeration, MinimalCombination, Rejection,
    SearchStats,
};
pub use exact::{rank, solve_linear, LinalgError, Rational, RationalMatrix};
pub use hypercube::{
    canonicalize, subsets, vertices, CanonicalBeta, HypercubeError, Independence, Symmetry,
    WeightVertex,
};
pub use state_builder::{
    boundary_state, construct_state, interior_state, solve_polygon_phases, support_vertices,
    ConstructionError, PolygonProblem, Route, StateVector,
};
pub use tolerance::Tolerances;
pub use verify::{
    criticality_residual, linear_entropy, marginals, momentum_abelian, polytope_membership,
    shifted_spectra, total_variance, verify_state, MarginalSet, VerificationReport,
};
