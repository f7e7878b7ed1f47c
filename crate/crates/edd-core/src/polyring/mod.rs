//! Polynomial and truncated-series kernels: univariate gcd machinery over
//! Q(i), binary and ternary homogeneous forms, and truncated multigraded
//! series over Q.

mod forms;
mod series;
mod upoly;

pub use forms::{binary_distinct_roots, ternary_substitute_param, BinaryForm, TernaryForm};
pub use series::{
    eval_univariate, ts_coefficient, ts_inverse, ts_mul, TruncatedMultiSeries,
};
pub use upoly::{squarefree_part, upoly_gcd, UnivariatePoly};
