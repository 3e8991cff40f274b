//! Operators attached to a cyclic rotation group acting on the line: spectral
//! projections onto coefficient classes mod m, a first-order
//! differential-difference operator built from weighted rotation averages, the
//! m-th order factorized operator it generates, hyper-trigonometric and
//! hyper-Bessel series, the fractional transform connecting the plain
//! derivative picture to the weighted one, and the kernel functions joint to
//! both.
//!
//! Everything that carries mathematical content is checked twice: once
//! through coefficient algebra on truncated power series and once through an
//! independent numeric route (pointwise sampling, quadrature). The `verify`
//! module packages those checks as named suites with structured reports.

pub mod error;
pub mod gamma;
pub mod group;
pub mod ops;
pub mod quadrature;
pub mod report;
pub mod series;
pub mod special;
pub mod tolerances;
pub mod verify;

pub use error::{Error, Result};
pub use group::{GroupConfig, MultiIndex, WeightVector};
pub use ops::{DiagonalOperator, OperatorContext};
pub use quadrature::{JacobiRule, QuadScheme, QuadratureConfig};
pub use report::VerificationReport;
pub use series::{Tolerance, TruncatedSeries};
pub use special::{EvalResult, KernelEval, KernelForm, SumControl};
pub use verify::{expected_identities, run_suite, Suite, VerifyParams};
