//! Default tolerances for the verification suites.
//!
//! Three regimes set the levels. Pure coefficient algebra (projections,
//! diagonal operators) only accumulates a handful of roundings, so 1e-13 to
//! 1e-14 is attainable. Chains of operator applications over dozens of
//! coefficients (intertwining on degree-20 random polynomials) lose a few
//! more digits. Anything passing through quadrature or finite differences is
//! limited by those schemes, not by f64.

/// Projection idempotence, orthogonality, resolution of identity.
pub const PROJECTION_ALGEBRA: f64 = 1e-14;
/// Coefficient-mask projection against the rotation-average form, pointwise.
pub const PROJECTION_POINTWISE: f64 = 1e-12;
/// exp splits into its m hyper-trigonometric components.
pub const HYPER_TRIG_DECOMPOSITION: f64 = 1e-13;
/// Coefficient-route deformed derivative against the rotation-sum form.
pub const DUNKL_POINTWISE: f64 = 1e-12;
/// Deformed derivative moves class j to class j-1.
pub const CLASS_SHIFT: f64 = 1e-14;
/// T_k V f = V f' on random polynomials.
pub const INTERTWINING: f64 = 1e-10;
/// The intertwiner is diagonal on monomials.
pub const INTERTWINER_DIAGONAL: f64 = 1e-14;
/// T_k phi = mu phi coefficient-wise for the eigenfunction recurrence.
pub const EIGEN_RESIDUAL: f64 = 1e-14;
/// V(exp(mu x)) reproduces the eigenfunction series.
pub const EIGEN_INTERTWINER: f64 = 1e-12;
/// Kernel value at x = 0 is exactly 1.
pub const KERNEL_NORMALIZATION: f64 = 1e-14;
/// Kernel closed form against class-wise projections of the eigenfunction.
pub const KERNEL_CLOSED_FORM: f64 = 1e-12;
/// The alternate kernel reading must differ by at least this much to count
/// as detectably distinct.
pub const KERNEL_DISCREPANCY_FLOOR: f64 = 1e-6;
/// Pointwise eigen-equation on the kernel via central differences.
pub const KERNEL_POINTWISE_FD: f64 = 1e-8;
/// Index-shift recurrences between neighbouring hyper-Bessel functions.
pub const RECURRENCE: f64 = 1e-13;
/// m-th order differential equation satisfied by the hyper-Bessel series.
pub const BESSEL_ODE: f64 = 1e-12;
/// Operator factorization collapses to the plain m-th derivative at the
/// boundary index.
pub const FACTORIZATION: f64 = 1e-14;
/// m = 2 reduction to sin(x)/x.
pub const CLASSICAL_BESSEL: f64 = 1e-12;
/// The fractional integral intertwines the m-th derivative with the
/// hyper-Bessel operator, coefficient-wise.
pub const RL_INTERTWINES: f64 = 1e-12;
/// Quadrature fractional integral on monomials against the gamma-ratio value.
pub const EK_MONOMIAL: f64 = 1e-10;
/// Quadrature route against the diagonal coefficient route.
pub const RL_QUAD_VS_DIAGONAL: f64 = 1e-8;
/// Quadrature fractional integral maps the invariant hyper-cosine to the
/// hyper-Bessel function.
pub const RL_MAPS_COSM: f64 = 1e-8;
/// m = 2 quadrature route against the classical half-line form.
pub const RL_CLASSICAL: f64 = 1e-9;
/// Diagonal inverse undoes the diagonal, coefficient-wise.
pub const RL_INVERSE: f64 = 1e-14;
/// Ceiling on |value shift after doubling terms| / error_estimate. The bound
/// itself holds term-wise for alternating decreasing tails; the extra 5%
/// absorbs summation rounding, which at the loose probe tolerance can reach a
/// few 1e-5 of the estimate.
pub const ERROR_ESTIMATE_SOUNDNESS: f64 = 1.05;
