//! Exact verification of SU(3)-structures and connections with totally
//! skew-symmetric torsion on six-dimensional Lie algebras.
//!
//! The crate builds every invariant tensor of a left-invariant almost
//! Hermitian structure (torsion, connections, curvature, Ricci forms) in
//! exact rational arithmetic and evaluates a registry of identities and
//! conditions on them. See [`report::run_pipeline`] for the entry point.

pub mod check;
pub mod curvature;
pub mod error;
pub mod form;
pub mod input;
pub mod lie;
pub mod linalg;
pub mod metric;
pub mod random;
pub mod registry;
pub mod report;
pub mod samples;
pub mod scalar;
pub mod soliton;
pub mod su3;
pub mod tensor;
pub mod torsion;

pub use error::{Error, Result};
pub use form::AltForm;
pub use metric::{hodge_star, Metric, Orientation};
pub use scalar::{Arithmetic, Rational, Scalar, Tolerance};
pub use tensor::Tensor;
