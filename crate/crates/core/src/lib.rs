//! Numerical Clifford algebra over ℝ¹..ℝ⁴ with elementary functions of a
//! multivector variable.
//!
//! The crate works with dense multivectors in Euclidean Clifford algebras of
//! dimensions 1 through 4. Dimensions 1-3 get the full function library
//! (exponential, logarithm, roots, powers, trigonometric and hyperbolic
//! functions and their inverses), built on the amplitude `|M| = sqrt(M conj M)`
//! and the split `M = Z + F` into a commuting part and a direction part.
//! Dimension 4 gets the involution-based operations: products, conjugations,
//! the grade-(1,3,4) flip, the quartic amplitude, and the inverse.
//!
//! Independent verification lives in [`oracle`] (2x2 matrix representations
//! and raw power series) and [`relations`] (a registry of randomized
//! identity checks).

pub mod algebra;
pub mod center;
pub mod context;
pub mod elem;
pub mod error;
pub mod linear;
pub mod multivector;
pub mod oracle;
pub mod relations;
pub mod trig;

pub use center::{Amplitude, CenterComplex, SplitScalar};
pub use context::Context;
pub use elem::{BranchIndex, FSplit, PolarForm, PowerSide, RootSign};
pub use elem::{log_base, log_two_vectors, root_minus_one_3d, scalar_roots};
pub use error::{GaError, Result};
pub use multivector::{GradePart, Multivector};
pub use relations::{
    mv_as_quat_pair, name_matches, quat_as_pairs, quat_pair_product, relation_names,
    rosetta_stone, run_matching, run_relation, RelationReport, RelationStatus, Witness,
};
