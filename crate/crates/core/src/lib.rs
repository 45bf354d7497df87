//! Exact tangent-space computations for nested punctual Quot schemes of
//! affine space, and a decision procedure for their smoothness.
//!
//! Points are presented as commuting matrices with framing vectors
//! ([`quot::QuotPoint`]), chains of such points ([`quot::NestedQuotPoint`]),
//! and all dimensions are computed with exact rational linear algebra.

pub mod bounds;
pub mod classify;
pub mod cli;
pub mod error;
pub mod jet;
pub mod linalg;
pub mod module;
pub mod ncquot;
pub mod point_file;
pub mod quot;

pub use error::{Error, Result};
