//! Framed points of punctual Quot schemes of `A^m` and their tangent spaces.

pub mod kernel;
pub mod point;
pub mod tangent;

pub use kernel::{hom_from_kernel, hom_from_kernel_dim, hom_from_kernel_dim_with, KernelHoms, KernelPresentation};
pub use point::{direct_sum_points, NestedQuotPoint, QuotPoint};
pub use tangent::{
    chain_order, delta_matrix, expdim, local_delta, nested_tangent_dim, nested_tangent_dim_bounded, nested_tangent_dim_with,
    tangent_dim,
    LocalDelta, TangentReport, Verdict,
};
