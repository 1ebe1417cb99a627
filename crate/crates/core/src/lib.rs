//! Counting and enumerating the isotemporal classes of temporal n-gons.
//!
//! Two temporal networks are in the same isotemporal class when some vertex
//! bijection preserves their edges and carries every time-respecting path of
//! one onto a time-respecting path of the other. For n-gons a class is fixed
//! by the ±-form of the cycle (which edges are local time maxima, which are
//! local minima) up to rotation and reflection.
//!
//! - [`network`]: temporal networks, temporal paths, reachability and
//!   isomorphism search.
//! - [`forms`]: line-graph orientations, ±-forms, footprints, witnesses.
//! - [`symmetry`]: the four symmetry kinds of a ±-form.
//! - [`counting`]: closed-form counts over exact integers.
//! - [`enumeration`]: exhaustive censuses and the verification report.

pub mod counting;
pub mod enumeration;
pub mod forms;
pub mod network;
pub mod symmetry;

pub use counting::{isotemporal_class_count, CountError, ExactCount};
pub use enumeration::{enumerate_pm_classes, ClassCensus, EnumerationError};
pub use forms::{line_graph_orientation, CycleOrientation, Footprint, FormError, PmForm, Sign};
pub use network::{NGon, NetworkError, TemporalNetwork};
pub use symmetry::{detect_symmetries, SymmetryProfile, SymmetrySignature};
