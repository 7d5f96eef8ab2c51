//! Geodesic convexity on graphs and complementary prisms.
//!
//! The crate builds complementary prisms, computes geodesic intervals and
//! convex hulls on word-sized vertex sets, finds convexity numbers exactly,
//! enumerates trees up to isomorphism and evaluates the closed-form
//! convexity numbers of complementary prisms of trees.

pub mod canon;
pub mod convexity;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod io;
pub mod metric;
pub mod oracle;
pub mod solver;
pub mod tree;
pub mod vertex_set;

pub use canon::{canonical_code, canonical_form, enumerate_free_trees, CanonicalTree};
pub use convexity::IntervalTable;
pub use error::{Error, Result};
pub use graph::{DegreeStats, Graph, GraphKind};
pub use metric::DistanceMatrix;
pub use oracle::{
    predict_disconnected_prism, predict_prism_convexity, CaseTag, FormulaVerdict, Term, TermSource,
};
pub use solver::{
    convexity_number, convexity_number_bnb, convexity_number_exhaustive, ConvexityResult, SolverKind,
    MAX_SOLVER_ORDER,
};
pub use tree::{named_family, prufer_decode, DiamClass, TreeClass, TreeFamily, TreeSpec};
pub use vertex_set::VertexSet;
