//! Max-point-tolerance graphs at desk scale.
//!
//! * [`graph`] - graphs, vertex orderings, augmented adjacency matrices.
//! * [`orderings`] - checkers for every ordering condition, with witnesses.
//! * [`recognition`] - backtracking search for orderings, AT-freeness,
//!   brute-force perfection.
//! * [`builder`] - precedence of right endpoints, canonical sequence,
//!   integer and unit-length representations, distinct points.
//! * [`verify`] - induced graphs and certification, exact arithmetic.
//! * [`families`] - explicit constructions and worked examples.
//! * [`svg`] - diagrams.
//!
//! ```
//! use mptg::graph::make_cycle;
//! use mptg::recognition::find_proper_mptg_ordering;
//!
//! assert!(find_proper_mptg_ordering(&make_cycle(4).unwrap()).unwrap().is_member());
//! assert!(!find_proper_mptg_ordering(&make_cycle(5).unwrap()).unwrap().is_member());
//! ```

pub mod builder;
pub mod error;
pub mod exec;
pub mod families;
pub mod graph;
pub mod orderings;
pub mod recognition;
pub mod repr;
pub mod svg;
pub mod sweep;
pub mod verify;

pub use error::{BuildError, FamilyError, GraphError, RecognitionError, ReprError};
pub use exec::Execution;
pub use graph::{AugmentedMatrix, Graph, VertexOrdering};
pub use repr::{AnyRep, IntervalPointRep, Rational, ToleranceRep};
