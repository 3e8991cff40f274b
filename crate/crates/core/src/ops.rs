//! The deformed derivative attached to the rotation group, its spectral
//! building blocks, the m-th order factorized operator, the diagonal
//! fractional-integral action, and the intertwining operator between the
//! deformed and the plain derivative.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gamma::ln_gamma;
use crate::group::{GroupConfig, MultiIndex, WeightVector};
use crate::report::VerificationReport;
use crate::series::TruncatedSeries;

/// Group order, multi-index and the derived rotation weights bundled for the
/// operator routines.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorContext {
    group: GroupConfig,
    nu: MultiIndex,
    weights: WeightVector,
}

impl OperatorContext {
    pub fn new(group: GroupConfig, nu: MultiIndex) -> Result<Self> {
        let weights = WeightVector::from_multi_index(group.order(), &nu)?;
        Ok(Self { group, nu, weights })
    }

    pub fn from_parts(m: usize, nu: &[f64]) -> Result<Self> {
        Self::new(GroupConfig::new(m)?, MultiIndex::new(nu.to_vec()))
    }

    /// Weight-space constructor. The index-space route rounds k_j = m nu_j +
    /// m - j, which cannot express exact weights like the all-zero boundary;
    /// here the weights are taken verbatim and the index is derived.
    pub fn from_weights(m: usize, weights: &[f64]) -> Result<Self> {
        let group = GroupConfig::new(m)?;
        let weights = WeightVector::from_weights(m, weights.to_vec())?;
        let nu = weights.multi_index();
        Ok(Self { group, nu, weights })
    }

    pub fn group(&self) -> &GroupConfig {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn nu(&self) -> &MultiIndex {
        &self.nu
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    /// Spectral parameter of the exponential eigenfunction with eigenvalue
    /// data lambda: mu = kappa * lambda, kappa the half-step root.
    pub fn mu_from_lambda(&self, lambda: Complex64) -> Complex64 {
        self.group.kappa() * lambda
    }

    /// The deformed derivative, coefficient-wise:
    /// x^n maps to (n + k_{n mod m}) x^{n-1}, with weight zero on the
    /// invariant class. Order drops by one.
    pub fn dunkl_apply(&self, f: &TruncatedSeries) -> TruncatedSeries {
        let m = self.order();
        if f.truncation_order() == 0 {
            return TruncatedSeries::zero(0);
        }
        TruncatedSeries::from_coefficients(
            (1..=f.truncation_order())
                .map(|n| f.coefficient(n) * (n as f64 + self.weights.by_residue(n % m)))
                .collect(),
        )
    }

    /// Difference part of the deformed derivative at a point, straight from
    /// the weighted rotation averages:
    /// sum_j k_j p_j(f)(x), each p_j sampled on the rotated orbit of x.
    pub fn omega_apply<F>(&self, sample: F, x: Complex64) -> Result<Complex64>
    where
        F: Fn(Complex64) -> Complex64,
    {
        let m = self.order();
        let mut acc = Complex64::ZERO;
        for c in 0..m {
            let point = self.group.root_of_unity(c as i64) * x;
            let v = sample(point);
            if !v.re.is_finite() || !v.im.is_finite() {
                return Err(Error::NonFiniteSample {
                    at: format!("{point}"),
                });
            }
            // sum over classes j of k_j eps^{-jc}, then one division by m
            let row: Complex64 = (1..m)
                .map(|j| self.group.fourier_entry(j, c).scale(self.weights.weight(j)))
                .sum();
            acc += row * v;
        }
        Ok(acc / m as f64)
    }

    /// Factorized m-th order operator: the plain derivative first, then the
    /// first-order factors d/dx + k_j / x from j = m-1 down to 1. Order
    /// drops by m.
    pub fn hyper_bessel_op_apply(&self, f: &TruncatedSeries) -> Result<TruncatedSeries> {
        let m = self.order();
        if f.truncation_order() < m {
            return Err(Error::Parameter(format!(
                "series of order {} is shorter than the operator order {m}",
                f.truncation_order()
            )));
        }
        let mut g = f.derivative();
        for j in (1..m).rev() {
            g = first_order_factor(&g, self.weights.weight(j), "factorized operator")?;
        }
        Ok(g)
    }

    /// Diagonal action of the fractional integral on the invariant class,
    /// truncated at `order`: the exponent m t carries the eigenvalue
    /// Gamma(m t + 1) prod_k Gamma(nu_k + 1)
    /// / (m^{m t} Gamma(t + 1) prod_k Gamma(nu_k + t + 1)),
    /// assembled in log space so large t stays in range. Exponents outside
    /// the invariant class are outside the operator's domain.
    pub fn rl_diagonal(&self, order: usize) -> Result<DiagonalOperator> {
        let m = self.order();
        // gate in weight space: k_j >= 0 is the cone condition as the other
        // operators measure it, and it stays exact for weight-space-built
        // contexts where the index view can sit an ulp off the boundary
        if !self.weights.all_nonnegative() {
            return Err(Error::Parameter(format!(
                "multi-index {:?} leaves the admissible cone for order {m}",
                self.nu.components()
            )));
        }
        let ln_m = (m as f64).ln();
        let mut eigenvalues = vec![None; order + 1];
        for t in 0..=(order / m) {
            let tf = t as f64;
            let mut ln = ln_gamma(m as f64 * tf + 1.0) - ln_gamma(tf + 1.0) - m as f64 * tf * ln_m;
            for k in 1..m {
                let nu_k = self.nu.component(k);
                ln += ln_gamma(nu_k + 1.0) - ln_gamma(nu_k + tf + 1.0);
            }
            eigenvalues[m * t] = Some(Complex64::new(ln.exp(), 0.0));
        }
        Ok(DiagonalOperator::new(eigenvalues))
    }

    /// Inverse of the diagonal fractional integral, truncated at `order`.
    pub fn rl_diagonal_inverse(&self, order: usize) -> Result<DiagonalOperator> {
        self.rl_diagonal(order)?.inverse()
    }

    /// The intertwining operator between the plain and the deformed
    /// derivative, spelled out branch by spectral class:
    ///
    /// V = sum_{j=1..m} A_j R I^{m-j} p_j,
    ///
    /// with I the antiderivative vanishing at 0, R the diagonal fractional
    /// integral, and A_j the partial factor chains (A_m = id, and each
    /// further A_{j-1} prepends the factor d/dx + k_j / x; A_0 is the full
    /// factorized operator). Every branch preserves the input order, so V
    /// maps degree N to degree N and is diagonal on monomials.
    pub fn intertwiner_apply(&self, f: &TruncatedSeries) -> Result<TruncatedSeries> {
        let m = self.order();
        let n = f.truncation_order();
        let diag = self.rl_diagonal(n + m - 1)?;
        let mut result = TruncatedSeries::zero(n);
        for j in 1..=m {
            let mut g = f.project(j, &self.group);
            for _ in 0..(m - j) {
                g = g.antiderivative();
            }
            g = diag.apply(&g)?;
            if j < m {
                g = g.derivative();
                for i in ((j + 1)..m).rev() {
                    g = first_order_factor(&g, self.weights.weight(i), "intertwiner branch")?;
                }
            }
            result = result.add(&g.truncate(n));
        }
        Ok(result)
    }

    /// Power-series eigenfunction of the deformed derivative:
    /// a_0 = 1, a_{n+1} = mu a_n / (n + 1 + k_{(n+1) mod m}).
    ///
    /// A weight that makes some denominator exactly zero leaves no
    /// eigenfunction of this shape; that surfaces as an error rather than an
    /// infinite coefficient.
    pub fn eigen_series(&self, mu: Complex64, order: usize) -> Result<TruncatedSeries> {
        let m = self.order();
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut a = Complex64::ONE;
        coeffs.push(a);
        for n in 0..order {
            let s = n + 1;
            let weight = self.weights.by_residue(s % m);
            let denom = s as f64 + weight;
            if denom == 0.0 {
                return Err(Error::VanishingDenominator { n: s, weight });
            }
            a = a * mu / denom;
            coeffs.push(a);
        }
        Ok(TruncatedSeries::from_coefficients(coeffs))
    }

    /// Verifies T_k (V f) = V (f') coefficient-wise on the given series and
    /// wraps the largest mismatch in a report. Both sides are exact
    /// polynomials of degree one less than f, so no truncation slack is
    /// needed.
    pub fn check_intertwining(
        &self,
        f: &TruncatedSeries,
        tolerance: f64,
    ) -> Result<VerificationReport> {
        let m = self.order();
        let n = f.truncation_order();
        if n < 2 * m {
            return Err(Error::Parameter(format!(
                "intertwining check needs order >= {}, got {n}",
                2 * m
            )));
        }
        let lhs = self.dunkl_apply(&self.intertwiner_apply(f)?);
        let rhs = self.intertwiner_apply(&f.derivative())?;
        Ok(VerificationReport::new(
            "intertwining-relation",
            m,
            self.nu.components().to_vec(),
            n,
            lhs.max_relative_residual(&rhs),
            tolerance,
        ))
    }
}

/// Spectral projection at a point, from the rotation average:
/// p_j(f)(x) = (1/m) sum_c eps^{-jc} f(eps^c x).
pub fn pointwise_projection<F>(
    group: &GroupConfig,
    sample: F,
    j: usize,
    x: Complex64,
) -> Result<Complex64>
where
    F: Fn(Complex64) -> Complex64,
{
    let m = group.order();
    let mut acc = Complex64::ZERO;
    for c in 0..m {
        let point = group.root_of_unity(c as i64) * x;
        let v = sample(point);
        if !v.re.is_finite() || !v.im.is_finite() {
            return Err(Error::NonFiniteSample {
                at: format!("{point}"),
            });
        }
        acc += group.fourier_entry(j, c) * v;
    }
    Ok(acc / m as f64)
}

/// One factor d/dx + c/x on a truncated series: x^n maps to (n + c) x^{n-1}.
///
/// A nonzero constant term with c != 0 would produce an x^{-1} term, which
/// has no place in a power series; the spectral-class bookkeeping upstream
/// is supposed to make that impossible, so it is an error, not a panic.
pub fn first_order_factor(
    f: &TruncatedSeries,
    c: f64,
    context: &'static str,
) -> Result<TruncatedSeries> {
    if c != 0.0 && f.coefficient(0) != Complex64::ZERO {
        return Err(Error::NegativeExponent { context });
    }
    if f.truncation_order() == 0 {
        return Ok(TruncatedSeries::zero(0));
    }
    Ok(TruncatedSeries::from_coefficients(
        (1..=f.truncation_order())
            .map(|n| f.coefficient(n) * (n as f64 + c))
            .collect(),
    ))
}

/// An operator acting diagonally on monomials. `None` marks exponents
/// outside the operator's domain class; applying to a series with mass there
/// is an error.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagonalOperator {
    eigenvalues: Vec<Option<Complex64>>,
}

impl DiagonalOperator {
    pub fn new(eigenvalues: Vec<Option<Complex64>>) -> Self {
        debug_assert!(!eigenvalues.is_empty());
        Self { eigenvalues }
    }

    pub fn order(&self) -> usize {
        self.eigenvalues.len() - 1
    }

    pub fn eigenvalue(&self, n: usize) -> Option<Complex64> {
        self.eigenvalues.get(n).copied().flatten()
    }

    pub fn apply(&self, f: &TruncatedSeries) -> Result<TruncatedSeries> {
        let mut coeffs = Vec::with_capacity(f.truncation_order() + 1);
        for n in 0..=f.truncation_order() {
            let c = f.coefficient(n);
            if c == Complex64::ZERO {
                coeffs.push(Complex64::ZERO);
                continue;
            }
            if n > self.order() {
                return Err(Error::Parameter(format!(
                    "diagonal operator truncated at order {}, series reaches exponent {n}",
                    self.order()
                )));
            }
            match self.eigenvalues[n] {
                Some(lambda) => coeffs.push(c * lambda),
                None => return Err(Error::OutsideDomainClass { exponent: n }),
            }
        }
        Ok(TruncatedSeries::from_coefficients(coeffs))
    }

    /// Entrywise product; defined only where both factors are, cut to the
    /// shorter order.
    pub fn compose(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self {
            eigenvalues: (0..=order)
                .map(|n| match (self.eigenvalues[n], other.eigenvalues[n]) {
                    (Some(a), Some(b)) => Some(a * b),
                    _ => None,
                })
                .collect(),
        }
    }

    pub fn inverse(&self) -> Result<Self> {
        let eigenvalues = self
            .eigenvalues
            .iter()
            .map(|e| match e {
                Some(l) if *l == Complex64::ZERO => Err(Error::Parameter(
                    "diagonal operator has a zero eigenvalue, not invertible".into(),
                )),
                Some(l) => Ok(Some(Complex64::ONE / l)),
                None => Ok(None),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { eigenvalues })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::Tolerance;

    fn re(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    fn ctx(m: usize, nu: &[f64]) -> OperatorContext {
        OperatorContext::from_parts(m, nu).unwrap()
    }

    #[test]
    fn deformed_derivative_on_monomials() {
        // m = 2, nu = 1/2: weight 2 on the odd class
        let c = ctx(2, &[0.5]);
        let t = c.dunkl_apply(&TruncatedSeries::monomial(1));
        assert_eq!(t.coefficient(0), re(3.0));
        // even exponents carry no weight: x^2 -> 2x
        let t = c.dunkl_apply(&TruncatedSeries::monomial(2));
        assert_eq!(t.coefficient(1), re(2.0));

        // m = 3, nu = (1/3, 2/3): weights (3, 3); x^2 -> (2 + 3) x
        let c = ctx(3, &[1.0 / 3.0, 2.0 / 3.0]);
        let t = c.dunkl_apply(&TruncatedSeries::monomial(2));
        assert_eq!(t.coefficient(1), re(5.0));
    }

    #[test]
    fn difference_part_matches_reflection_form_for_order_two() {
        let c = ctx(2, &[0.5]);
        // omega on the identity map at x = 1: k_1 (f(1) - f(-1))/2 = 2
        let v = c.omega_apply(|z| z, re(1.0)).unwrap();
        assert!((v - re(2.0)).norm() < 1e-14);

        // general sample: nu + 1/2 times the odd part
        let f = |z: Complex64| z * z * z + re(2.0) * z * z + re(0.25);
        let x = Complex64::new(0.8, 0.3);
        let odd = (f(x) - f(-x)) / 2.0;
        let v = c.omega_apply(f, x).unwrap();
        assert!((v - odd.scale(2.0)).norm() < 1e-13);
    }

    #[test]
    fn non_finite_samples_are_caught() {
        let c = ctx(2, &[0.5]);
        let err = c
            .omega_apply(|_| Complex64::new(f64::NAN, 0.0), re(1.0))
            .unwrap_err();
        assert!(matches!(err, Error::NonFiniteSample { .. }));
    }

    #[test]
    fn deformed_derivative_steps_classes_down() {
        for (m, nu) in [(2usize, vec![0.7]), (4, vec![0.3, 0.9, 1.4])] {
            let c = ctx(m, &nu);
            for j in 0..m {
                let f = TruncatedSeries::from_coefficients(vec![re(1.0); 13]).project(j, c.group());
                let t = c.dunkl_apply(&f);
                assert_eq!(t.max_outside_class((j + m - 1) % m, m), 0.0);
            }
        }
    }

    #[test]
    fn factorized_operator_reference_values() {
        // m = 2, nu = 1/2: B x^2 = (d/dx + 2/x)(2x) = 6
        let c = ctx(2, &[0.5]);
        let b = c
            .hyper_bessel_op_apply(&TruncatedSeries::monomial(2))
            .unwrap();
        assert_eq!(b.coefficient(0), re(6.0));

        // m = 3, nu = (1/3, 2/3): B x^3 = 27 (1 + 1/3)(1 + 2/3) = 60
        let c = ctx(3, &[1.0 / 3.0, 2.0 / 3.0]);
        let b = c
            .hyper_bessel_op_apply(&TruncatedSeries::monomial(3))
            .unwrap();
        assert!((b.coefficient(0) - re(60.0)).norm() < 1e-12);
    }

    #[test]
    fn factor_rejects_constant_terms() {
        let f = TruncatedSeries::from_coefficients(vec![re(1.0), re(1.0)]);
        assert!(matches!(
            first_order_factor(&f, 2.0, "test"),
            Err(Error::NegativeExponent { .. })
        ));
        // weight zero degenerates to the plain derivative, constants die
        let g = first_order_factor(&f, 0.0, "test").unwrap();
        assert_eq!(g.coefficient(0), re(1.0));
    }

    #[test]
    fn diagonal_eigenvalues_of_the_fractional_integral() {
        let c = ctx(2, &[0.5]);
        let d = c.rl_diagonal(6).unwrap();
        assert_eq!(d.eigenvalue(0).unwrap(), re(1.0));
        assert!((d.eigenvalue(2).unwrap() - re(1.0 / 3.0)).norm() < 1e-15);
        assert_eq!(d.eigenvalue(1), None);

        let c = ctx(3, &[1.0 / 3.0, 2.0 / 3.0]);
        let d = c.rl_diagonal(6).unwrap();
        assert!((d.eigenvalue(3).unwrap() - re(0.1)).norm() < 1e-15);
    }

    #[test]
    fn diagonal_domain_and_inverse() {
        let c = ctx(2, &[0.5]);
        let d = c.rl_diagonal(8).unwrap();
        let odd = TruncatedSeries::monomial(3);
        assert!(matches!(
            d.apply(&odd),
            Err(Error::OutsideDomainClass { exponent: 3 })
        ));

        let f = TruncatedSeries::from_coefficients(vec![
            re(1.0),
            Complex64::ZERO,
            re(-2.5),
            Complex64::ZERO,
            re(0.75),
        ]);
        let inv = c.rl_diagonal_inverse(8).unwrap();
        let back = inv.apply(&d.apply(&f).unwrap()).unwrap();
        assert!(back.max_relative_residual(&f) < 1e-15);

        // compose with inverse is the identity diagonal on the even class
        let id = d.compose(&inv);
        assert!((id.eigenvalue(4).unwrap() - re(1.0)).norm() < 1e-15);
    }

    #[test]
    fn fractional_diagonal_intertwines_plain_and_factorized_derivatives() {
        // B (R f) = R (f^(m)) on the invariant class
        for (m, nu) in [(2usize, vec![0.5]), (3, vec![0.4, 1.1])] {
            let c = ctx(m, &nu);
            let order = 3 * m;
            let f = TruncatedSeries::from_coefficients(
                (0..=order)
                    .map(|n| {
                        if n % m == 0 {
                            re(1.0 / (n as f64 + 1.0))
                        } else {
                            Complex64::ZERO
                        }
                    })
                    .collect(),
            );
            let d = c.rl_diagonal(order).unwrap();
            let lhs = c.hyper_bessel_op_apply(&d.apply(&f).unwrap()).unwrap();
            let mut fm = f.clone();
            for _ in 0..m {
                fm = fm.derivative();
            }
            let rhs = c.rl_diagonal(order).unwrap().apply(&fm).unwrap();
            assert!(
                lhs.max_relative_residual(&rhs) < 1e-13,
                "m={m} residual {}",
                lhs.max_relative_residual(&rhs)
            );
        }
    }

    #[test]
    fn intertwiner_normalization_and_first_moment() {
        let c = ctx(2, &[0.5]);
        let v1 = c.intertwiner_apply(&TruncatedSeries::monomial(0)).unwrap();
        assert_eq!(v1.coefficient(0), re(1.0));
        // V x = x / (2 nu + 2) = x / 3
        let vx = c.intertwiner_apply(&TruncatedSeries::monomial(1)).unwrap();
        assert!((vx.coefficient(1) - re(1.0 / 3.0)).norm() < 1e-15);
        assert_eq!(vx.coefficient(0), Complex64::ZERO);
    }

    #[test]
    fn intertwiner_is_diagonal_on_monomials() {
        let c = ctx(3, &[0.4, 1.1]);
        for n in 0..9 {
            let v = c.intertwiner_apply(&TruncatedSeries::monomial(n)).unwrap();
            for i in 0..=n {
                if i != n {
                    assert_eq!(v.coefficient(i), Complex64::ZERO, "n={n} leaked to {i}");
                }
            }
            assert!(v.coefficient(n).norm() > 0.0);
        }
    }

    #[test]
    fn intertwiner_is_identity_at_the_boundary_index() {
        for m in 2..5 {
            let c = OperatorContext::new(
                GroupConfig::new(m).unwrap(),
                crate::group::MultiIndex::boundary(m),
            )
            .unwrap();
            let f = TruncatedSeries::from_coefficients(
                (0..=10).map(|n| re(1.0 / (n as f64 + 1.0))).collect(),
            );
            let v = c.intertwiner_apply(&f).unwrap();
            assert!(
                v.max_relative_residual(&f) < 1e-13,
                "m={m}: {}",
                v.max_relative_residual(&f)
            );
        }
    }

    #[test]
    fn exact_zero_weights_collapse_the_factorization() {
        // the index-space boundary rounds k_j off zero for some m (m = 5
        // being the smallest); the weight-space constructor does not
        for m in 2..7 {
            let c = OperatorContext::from_weights(m, &vec![0.0; m - 1]).unwrap();
            assert!(c.weights().weights().iter().all(|&k| k == 0.0));
            let f = TruncatedSeries::from_coefficients(
                (0..=12).map(|n| re(0.7 - 0.05 * n as f64)).collect(),
            );
            let lhs = c.hyper_bessel_op_apply(&f).unwrap();
            let mut rhs = f;
            for _ in 0..m {
                rhs = rhs.derivative();
            }
            assert_eq!(lhs.max_relative_residual(&rhs), 0.0, "m={m}");
        }
    }

    #[test]
    fn intertwining_relation_on_a_fixed_polynomial() {
        let c = ctx(3, &[0.25, 0.8]);
        let f = TruncatedSeries::from_coefficients(
            (0..=9)
                .map(|n| Complex64::new(0.3 + n as f64 * 0.1, 0.05 * n as f64))
                .collect(),
        );
        let report = c.check_intertwining(&f, 1e-12).unwrap();
        assert!(report.pass, "residual {}", report.max_residual);
    }

    #[test]
    fn eigenfunction_coefficients() {
        let c = ctx(2, &[0.5]);
        let e = c.eigen_series(re(1.0), 3).unwrap();
        assert!((e.coefficient(1) - re(1.0 / 3.0)).norm() < 1e-16);
        assert!((e.coefficient(2) - re(1.0 / 6.0)).norm() < 1e-16);
        assert!((e.coefficient(3) - re(1.0 / 30.0)).norm() < 1e-16);

        let c = ctx(3, &[1.0 / 3.0, 2.0 / 3.0]);
        let e = c.eigen_series(re(1.0), 3).unwrap();
        assert!((e.coefficient(1) - re(0.25)).norm() < 1e-16);
        assert!((e.coefficient(2) - re(0.05)).norm() < 1e-16);
        assert!((e.coefficient(3) - re(1.0 / 60.0)).norm() < 1e-16);
    }

    #[test]
    fn eigenfunction_satisfies_its_equation() {
        let c = ctx(4, &[0.3, 0.6, 2.0]);
        let mu = Complex64::new(0.7, -0.4);
        let e = c.eigen_series(mu, 40).unwrap();
        let lhs = c.dunkl_apply(&e);
        let rhs = e.scale(mu).truncate(39);
        assert!(lhs.max_relative_residual(&rhs) < 1e-14);
    }

    #[test]
    fn vanishing_denominator_is_an_error() {
        // m = 2, nu = -1 gives k_1 = -1, so the n = 1 step divides by zero
        let c = ctx(2, &[-1.0]);
        assert!(matches!(
            c.eigen_series(re(1.0), 5),
            Err(Error::VanishingDenominator { n: 1, .. })
        ));
    }

    #[test]
    fn intertwiner_sends_exponential_to_eigenfunction() {
        let c = ctx(3, &[0.4, 1.1]);
        let mu = Complex64::new(0.9, 0.2);
        let v = c
            .intertwiner_apply(&TruncatedSeries::exp(mu, 36))
            .unwrap();
        let e = c.eigen_series(mu, 36).unwrap();
        assert!(v.approx_eq(&e, &Tolerance::relative(1e-12)));
    }

    #[test]
    fn invalid_index_blocks_the_diagonal() {
        let c = ctx(2, &[-0.75]);
        assert!(matches!(c.rl_diagonal(4), Err(Error::Parameter(_))));
        assert!(c.intertwiner_apply(&TruncatedSeries::monomial(2)).is_err());
    }
}
