use thiserror::Error;

/// Errors shared by the series, operator, special-function, and quadrature layers.
///
/// Every fallible entry point in the crate returns [`Result`]; numerical
/// breakdowns (gamma poles, vanishing recursion denominators, non-convergent
/// sums) are reported as values, never panics.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A caller-supplied parameter is outside the documented domain.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// A gamma function was requested at a nonpositive integer.
    #[error("gamma pole: Gamma({arg}) is undefined (nonpositive integer argument)")]
    GammaPole { arg: f64 },

    /// A diagonal operator met a nonzero coefficient at an exponent where it
    /// has no eigenvalue (mass outside the class-m domain).
    #[error("diagonal operator undefined at exponent {exponent}: nonzero coefficient outside the operator's domain class")]
    OutsideDomainClass { exponent: usize },

    /// The eigenfunction recursion denominator n + k_(n mod m) vanished.
    #[error("vanishing denominator at n = {n}: n + k_(n mod m) = 0 with weight k = {weight}")]
    VanishingDenominator { n: usize, weight: f64 },

    /// A 1/x term landed on a series with a nonzero constant coefficient.
    #[error("negative exponent produced while applying {context}: input has a nonzero constant term")]
    NegativeExponent { context: &'static str },

    /// A term-recurrence sum did not satisfy its stopping rule within the cap.
    #[error("series evaluation did not converge within {max_terms} terms (last term magnitude {last_term:e})")]
    NonConvergence { max_terms: usize, last_term: f64 },

    /// Adaptive quadrature exhausted its subdivision budget.
    #[error("quadrature did not converge: {0}")]
    QuadratureNonConvergence(String),

    /// A sampled integrand or point evaluation returned NaN or infinity.
    #[error("non-finite sample value at {at}")]
    NonFiniteSample { at: String },
}

pub type Result<T> = std::result::Result<T, Error>;
