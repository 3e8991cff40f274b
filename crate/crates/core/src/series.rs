//! Truncated power series over the complex numbers.
//!
//! A `TruncatedSeries` stores coefficients a_0..a_N of sum a_n x^n. All
//! operator algebra in this crate happens coefficient-wise on this type;
//! pointwise evaluation is only used to cross-check the coefficient routes.

use num_complex::Complex64;

use crate::group::GroupConfig;

/// Comparison thresholds for coefficient-wise checks.
///
/// A pair of coefficients counts as matching when
/// |a - b| <= relative * max(|a|, |b|, absolute_floor); the floor keeps
/// exact-zero pairs from dividing by zero without masking genuine mismatches.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    pub relative: f64,
    pub absolute_floor: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            relative: 1e-12,
            absolute_floor: 1e-300,
        }
    }
}

impl Tolerance {
    pub fn relative(relative: f64) -> Self {
        Self {
            relative,
            ..Self::default()
        }
    }
}

fn rel_residual(a: Complex64, b: Complex64, floor: f64) -> f64 {
    if a == b {
        return 0.0;
    }
    (a - b).norm() / a.norm().max(b.norm()).max(floor)
}

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<Complex64>,
}

impl TruncatedSeries {
    pub fn from_coefficients(coeffs: Vec<Complex64>) -> Self {
        debug_assert!(!coeffs.is_empty(), "a series carries at least a_0");
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Complex64::ZERO; order + 1],
        }
    }

    /// x^n as a series of order exactly n.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![Complex64::ZERO; n + 1];
        coeffs[n] = Complex64::ONE;
        Self { coeffs }
    }

    /// exp(mu x) truncated at the given order.
    pub fn exp(mu: Complex64, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut c = Complex64::ONE;
        coeffs.push(c);
        for n in 0..order {
            c *= mu / (n as f64 + 1.0);
            coeffs.push(c);
        }
        Self { coeffs }
    }

    pub fn truncation_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// a_n, with zero returned beyond the truncation order.
    pub fn coefficient(&self, n: usize) -> Complex64 {
        self.coeffs.get(n).copied().unwrap_or(Complex64::ZERO)
    }

    pub fn coefficients(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Horner evaluation at x.
    pub fn evaluate(&self, x: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::ZERO, |acc, &c| acc * x + c)
    }

    /// Coefficient-wise derivative; order drops by one (a constant stays a
    /// constant zero series).
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Self::zero(0);
        }
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, &c)| c * n as f64)
                .collect(),
        }
    }

    /// Antiderivative vanishing at zero; order grows by one.
    pub fn antiderivative(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(Complex64::ZERO);
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, &c)| c / (n as f64 + 1.0)),
        );
        Self { coeffs }
    }

    /// Spectral projection onto the class of exponents congruent to j mod m:
    /// keeps a_n with n = j (mod m), zeroes the rest. j is reduced mod m, so
    /// class m means the invariant class 0.
    pub fn project(&self, j: usize, group: &GroupConfig) -> Self {
        let m = group.order();
        let j = j % m;
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(n, &c)| if n % m == j { c } else { Complex64::ZERO })
                .collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.truncation_order().max(other.truncation_order());
        Self {
            coeffs: (0..=order)
                .map(|n| self.coefficient(n) + other.coefficient(n))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.truncation_order().max(other.truncation_order());
        Self {
            coeffs: (0..=order)
                .map(|n| self.coefficient(n) - other.coefficient(n))
                .collect(),
        }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|&c| c * s).collect(),
        }
    }

    /// Cauchy product. Both factors are truncations, so only coefficients up
    /// to the shorter order are reliable; the result is cut there.
    pub fn multiply(&self, other: &Self) -> Self {
        let order = self.truncation_order().min(other.truncation_order());
        Self {
            coeffs: (0..=order)
                .map(|n| {
                    (0..=n)
                        .map(|k| self.coefficient(k) * other.coefficient(n - k))
                        .sum()
                })
                .collect(),
        }
    }

    /// Multiplication by x^k; order grows by k.
    pub fn shift(&self, k: usize) -> Self {
        let mut coeffs = vec![Complex64::ZERO; k];
        coeffs.extend_from_slice(&self.coeffs);
        Self { coeffs }
    }

    /// Cut (or zero-pad) to the given order.
    pub fn truncate(&self, order: usize) -> Self {
        Self {
            coeffs: (0..=order).map(|n| self.coefficient(n)).collect(),
        }
    }

    /// Largest coefficient-wise relative mismatch against `other`, compared
    /// over the longer of the two orders with missing coefficients read as
    /// zero. Equal coefficients (including exact zero pairs) contribute 0.
    pub fn max_relative_residual(&self, other: &Self) -> f64 {
        let order = self.truncation_order().max(other.truncation_order());
        (0..=order)
            .map(|n| rel_residual(self.coefficient(n), other.coefficient(n), 1e-300))
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Self, tol: &Tolerance) -> bool {
        let order = self.truncation_order().max(other.truncation_order());
        (0..=order).all(|n| {
            rel_residual(self.coefficient(n), other.coefficient(n), tol.absolute_floor)
                <= tol.relative
        })
    }

    /// Largest |a_n| over exponents n outside the class j mod m; zero means
    /// the series is supported entirely in that class.
    pub fn max_outside_class(&self, j: usize, m: usize) -> f64 {
        let j = j % m;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(n, _)| n % m != j)
            .map(|(_, c)| c.norm())
            .fold(0.0, f64::max)
    }
}
