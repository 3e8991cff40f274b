//! Named verification suites over the operator identities, producing one
//! structured report per identity.
//!
//! Malformed parameters are the only hard errors here; everything that goes
//! wrong inside an individual check (invalid index for an operator, gamma
//! pole, quadrature breakdown) becomes a failing report carrying the cause,
//! so a suite run always accounts for every identity it covers.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gamma::ln_gamma;
use crate::group::{GroupConfig, MultiIndex};
use crate::ops::{pointwise_projection, OperatorContext};
use crate::quadrature::{
    classical_rl_numeric, ek_integral, rl_transform_numeric, QuadratureConfig,
};
use crate::report::VerificationReport;
use crate::series::TruncatedSeries;
use crate::special::{
    cos_m_eval, dunkl_kernel_eval_with, hyper_bessel_eval, hyper_bessel_eval_with,
    hyper_bessel_series, kernel_closed_form_series, kernel_term_series, recurrence_check,
    sin_ml_eval, sin_ml_eval_with, EvalResult, KernelForm, SumControl,
};
use crate::tolerances as tol;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Projections,
    Intertwining,
    Eigen,
    Recurrences,
    RlCrosscheck,
    Kernel,
}

impl Suite {
    pub fn all() -> [Suite; 6] {
        [
            Suite::Projections,
            Suite::Intertwining,
            Suite::Eigen,
            Suite::Recurrences,
            Suite::RlCrosscheck,
            Suite::Kernel,
        ]
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Projections => "projections",
            Suite::Intertwining => "intertwining",
            Suite::Eigen => "eigen",
            Suite::Recurrences => "recurrences",
            Suite::RlCrosscheck => "rl-crosscheck",
            Suite::Kernel => "kernel",
        }
    }

    pub fn from_name(name: &str) -> Option<Suite> {
        Suite::all().into_iter().find(|s| s.name() == name)
    }
}

/// Parameters shared by all suites.
#[derive(Debug, Clone, PartialEq)]
pub struct VerifyParams {
    pub m: usize,
    pub nu: Vec<f64>,
    pub lambda: Complex64,
    pub truncation: usize,
    /// Overrides every identity's default tolerance when set.
    pub tolerance: Option<f64>,
    pub seed: u64,
    pub quadrature: QuadratureConfig,
}

impl VerifyParams {
    fn validate(&self) -> Result<()> {
        if self.m < 2 {
            return Err(Error::Parameter(format!(
                "group order must be at least 2, got {}",
                self.m
            )));
        }
        if self.nu.len() != self.m - 1 {
            return Err(Error::Parameter(format!(
                "multi-index has {} components, order {} needs {}",
                self.nu.len(),
                self.m,
                self.m - 1
            )));
        }
        if self.truncation < 2 * self.m {
            return Err(Error::Parameter(format!(
                "truncation order must be at least 2m = {}, got {}",
                2 * self.m,
                self.truncation
            )));
        }
        self.quadrature.validate()
    }

    fn tol(&self, default: f64) -> f64 {
        self.tolerance.unwrap_or(default)
    }
}

/// The identities a suite emits, in emission order. `run_suite` produces
/// exactly these names, pass or fail.
pub fn expected_identities(suite: Suite, m: usize) -> Vec<String> {
    match suite {
        Suite::Projections => vec![
            "projection-idempotence-orthogonality".into(),
            "projection-resolution-of-identity".into(),
            "projection-derivative-shift".into(),
            "projection-pointwise-equivalence".into(),
            "exp-hyper-trig-decomposition".into(),
            "cosm-class-projection-of-exp".into(),
        ],
        Suite::Intertwining => vec![
            "dunkl-monomial-pointwise".into(),
            "dunkl-class-shift".into(),
            "intertwining-relation".into(),
            "intertwiner-diagonal".into(),
        ],
        Suite::Eigen => vec![
            "eigen-validity".into(),
            "eigen-residual".into(),
            "eigen-normalization".into(),
        ],
        Suite::Recurrences => {
            let mut ids = vec!["bessel-derivative-recurrence".to_string()];
            ids.extend((1..m).map(|k| format!("bessel-shift-recurrence-k{k}")));
            ids.push("bessel-ode-residual".into());
            ids.push("bessel-factorization-boundary".into());
            ids.push("bessel-classical-sinc".into());
            ids
        }
        Suite::RlCrosscheck => vec![
            "rl-intertwines-bessel".into(),
            "ek-monomial-gamma-ratio".into(),
            "rl-quadrature-vs-diagonal".into(),
            "rl-maps-cosm-to-bessel".into(),
            "rl-classical-m2".into(),
            "rl-inverse-roundtrip".into(),
        ],
        Suite::Kernel => vec![
            "kernel-normalization".into(),
            "kernel-oracle-vs-closed".into(),
            "kernel-alternate-discrepancy".into(),
            "kernel-from-intertwiner".into(),
            "kernel-decomposition-classwise".into(),
            "kernel-pointwise-eigen-fd".into(),
            "eval-error-estimate-soundness".into(),
        ],
    }
}

/// Runs one suite. Errors only on malformed parameters.
pub fn run_suite(suite: Suite, params: &VerifyParams) -> Result<Vec<VerificationReport>> {
    params.validate()?;
    let group = GroupConfig::new(params.m)?;
    let ctx = OperatorContext::from_parts(params.m, &params.nu)?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    Ok(match suite {
        Suite::Projections => projections_suite(params, &group, &mut rng),
        Suite::Intertwining => intertwining_suite(params, &ctx, &mut rng),
        Suite::Eigen => eigen_suite(params, &ctx),
        Suite::Recurrences => recurrences_suite(params, &ctx, &mut rng),
        Suite::RlCrosscheck => rl_crosscheck_suite(params, &ctx, &mut rng),
        Suite::Kernel => kernel_suite(params, &ctx),
    })
}

/// Uniform random coefficients (re and im in [0, 1)) up to `degree`, zero
/// padding up to `order`.
pub fn random_polynomial(rng: &mut impl Rng, degree: usize, order: usize) -> TruncatedSeries {
    let mut coeffs = vec![Complex64::ZERO; order.max(degree) + 1];
    for c in coeffs.iter_mut().take(degree + 1) {
        *c = Complex64::new(rng.gen::<f64>(), rng.gen::<f64>());
    }
    TruncatedSeries::from_coefficients(coeffs)
}

/// A multi-index drawn uniformly from a band strictly inside the admissible
/// cone: nu_j = boundary_j + margin + 2 u, u in [0, 1).
pub fn random_valid_nu(rng: &mut impl Rng, m: usize, margin: f64) -> Vec<f64> {
    (1..m)
        .map(|j| -1.0 + j as f64 / m as f64 + margin + 2.0 * rng.gen::<f64>())
        .collect()
}

/// Relative deviation between two point values, floored at magnitude one so
/// near-zero values compare absolutely.
fn point_residual(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1.0)
}

fn guard<F>(
    identity: &str,
    params: &VerifyParams,
    tolerance: f64,
    body: F,
) -> VerificationReport
where
    F: FnOnce() -> Result<VerificationReport>,
{
    body().unwrap_or_else(|e| {
        VerificationReport::failed(
            identity,
            params.m,
            params.nu.clone(),
            params.truncation,
            tolerance,
            e.to_string(),
        )
    })
}

fn plain_report(identity: &str, params: &VerifyParams, residual: f64, tolerance: f64) -> VerificationReport {
    VerificationReport::new(
        identity,
        params.m,
        params.nu.clone(),
        params.truncation,
        residual,
        tolerance,
    )
}

const REAL_GRID: [f64; 3] = [0.35, 0.9, 1.7];

fn complex_grid() -> [Complex64; 4] {
    [
        Complex64::new(0.35, 0.0),
        Complex64::new(0.9, 0.0),
        Complex64::new(1.7, 0.0),
        Complex64::new(0.5, 0.45),
    ]
}

fn projections_suite(
    params: &VerifyParams,
    group: &GroupConfig,
    rng: &mut ChaCha8Rng,
) -> Vec<VerificationReport> {
    let m = params.m;
    let f = random_polynomial(rng, 16, params.truncation);
    let mut reports = Vec::new();

    let t = params.tol(tol::PROJECTION_ALGEBRA);
    let mut worst = 0.0f64;
    for j in 0..m {
        let pj = f.project(j, group);
        worst = worst.max(pj.project(j, group).max_relative_residual(&pj));
        for i in 0..m {
            if i != j {
                worst = worst.max(
                    pj.project(i, group)
                        .coefficients()
                        .iter()
                        .map(|c| c.norm())
                        .fold(0.0, f64::max),
                );
            }
        }
    }
    reports.push(plain_report(
        "projection-idempotence-orthogonality",
        params,
        worst,
        t,
    ));

    let mut sum = TruncatedSeries::zero(params.truncation);
    for j in 0..m {
        sum = sum.add(&f.project(j, group));
    }
    reports.push(plain_report(
        "projection-resolution-of-identity",
        params,
        sum.max_relative_residual(&f),
        params.tol(tol::PROJECTION_ALGEBRA),
    ));

    // the derivative steps each spectral class down by one
    let mut worst = 0.0f64;
    for j in 0..m {
        let lhs = f.derivative().project(j, group);
        let rhs = f.project((j + 1) % m, group).derivative();
        worst = worst.max(lhs.max_relative_residual(&rhs));
    }
    reports.push(plain_report(
        "projection-derivative-shift",
        params,
        worst,
        params.tol(tol::PROJECTION_ALGEBRA),
    ));

    let t = params.tol(tol::PROJECTION_POINTWISE);
    reports.push(guard("projection-pointwise-equivalence", params, t, || {
        let mut worst = 0.0f64;
        for &x in &complex_grid() {
            for j in 0..m {
                let avg = pointwise_projection(group, |z| f.evaluate(z), j, x)?;
                let masked = f.project(j, group).evaluate(x);
                worst = worst.max(point_residual(avg, masked));
            }
        }
        Ok(plain_report("projection-pointwise-equivalence", params, worst, t))
    }));

    let t = params.tol(tol::HYPER_TRIG_DECOMPOSITION);
    reports.push(guard("exp-hyper-trig-decomposition", params, t, || {
        let mut worst = 0.0f64;
        for &x in &REAL_GRID {
            let z = Complex64::new(x, 0.0);
            let mut rhs = cos_m_eval(m, z)?.value;
            for l in 1..m {
                rhs += group.kappa().powu(l as u32) * sin_ml_eval(m, l, z)?.value;
            }
            let lhs = (group.kappa() * z).exp();
            worst = worst.max(point_residual(lhs, rhs));
        }
        Ok(plain_report("exp-hyper-trig-decomposition", params, worst, t))
    }));

    let t = params.tol(tol::HYPER_TRIG_DECOMPOSITION);
    reports.push(guard("cosm-class-projection-of-exp", params, t, || {
        let mut worst = 0.0f64;
        for &x in &REAL_GRID {
            let z = Complex64::new(x, 0.0);
            let projected =
                pointwise_projection(group, |w| (group.kappa() * w).exp(), 0, z)?;
            let direct = cos_m_eval(m, z)?.value;
            worst = worst.max(point_residual(projected, direct));
        }
        Ok(plain_report("cosm-class-projection-of-exp", params, worst, t))
    }));

    reports
}

fn intertwining_suite(
    params: &VerifyParams,
    ctx: &OperatorContext,
    rng: &mut ChaCha8Rng,
) -> Vec<VerificationReport> {
    let m = params.m;
    let mut reports = Vec::new();

    let t = params.tol(tol::DUNKL_POINTWISE);
    let f = random_polynomial(rng, 14, params.truncation);
    reports.push(guard("dunkl-monomial-pointwise", params, t, || {
        let coeff_route = ctx.dunkl_apply(&f);
        let mut worst = 0.0f64;
        for &x in &complex_grid() {
            let from_series = coeff_route.evaluate(x);
            let direct =
                f.derivative().evaluate(x) + ctx.omega_apply(|z| f.evaluate(z), x)? / x;
            worst = worst.max(point_residual(from_series, direct));
        }
        Ok(plain_report("dunkl-monomial-pointwise", params, worst, t))
    }));

    let t = params.tol(tol::CLASS_SHIFT);
    let g = random_polynomial(rng, params.truncation, params.truncation);
    let mut worst = 0.0f64;
    for j in 0..m {
        let shifted = ctx.dunkl_apply(&g.project(j, ctx.group()));
        worst = worst.max(shifted.max_outside_class((j + m - 1) % m, m));
    }
    reports.push(plain_report("dunkl-class-shift", params, worst, t));

    let t = params.tol(tol::INTERTWINING);
    let degree = (params.truncation / 3).max(2 * m);
    let draws: Vec<TruncatedSeries> = (0..3)
        .map(|_| random_polynomial(rng, degree, params.truncation))
        .collect();
    reports.push(guard("intertwining-relation", params, t, || {
        let mut worst = 0.0f64;
        for f in &draws {
            worst = worst.max(ctx.check_intertwining(f, t)?.max_residual);
        }
        Ok(plain_report("intertwining-relation", params, worst, t))
    }));

    let t = params.tol(tol::INTERTWINER_DIAGONAL);
    reports.push(guard("intertwiner-diagonal", params, t, || {
        let mut worst = 0.0f64;
        for n in 0..=params.truncation.min(12) {
            let v = ctx.intertwiner_apply(&TruncatedSeries::monomial(n))?;
            for i in 0..=v.truncation_order() {
                if i != n {
                    worst = worst.max(v.coefficient(i).norm());
                }
            }
        }
        Ok(plain_report("intertwiner-diagonal", params, worst, t))
    }));

    reports
}

fn eigen_suite(params: &VerifyParams, ctx: &OperatorContext) -> Vec<VerificationReport> {
    let mut reports = Vec::new();
    let weights = ctx.weights();

    // admissibility of the weight vector: k_j >= 0 for every class
    if weights.all_nonnegative() {
        let listed = weights
            .weights()
            .iter()
            .map(|k| format!("{k}"))
            .collect::<Vec<_>>()
            .join(", ");
        reports.push(
            plain_report("eigen-validity", params, 0.0, params.tol(tol::EIGEN_RESIDUAL))
                .with_status(format!("rotation weights [{listed}] all nonnegative")),
        );
    } else {
        let (j, k) = weights
            .weights()
            .iter()
            .enumerate()
            .find(|(_, k)| **k < 0.0)
            .map(|(i, k)| (i + 1, *k))
            .expect("a negative weight exists on this branch");
        reports.push(VerificationReport::failed(
            "eigen-validity",
            params.m,
            params.nu.clone(),
            params.truncation,
            params.tol(tol::EIGEN_RESIDUAL),
            format!(
                "rotation weight k_{j} = {k} is negative; admissibility needs m nu_j + m - j >= 0"
            ),
        ));
    }

    let t = params.tol(tol::EIGEN_RESIDUAL);
    let mu = ctx.mu_from_lambda(params.lambda);
    reports.push(guard("eigen-residual", params, t, || {
        let e = ctx.eigen_series(mu, params.truncation)?;
        let lhs = ctx.dunkl_apply(&e);
        let rhs = e.scale(mu).truncate(params.truncation - 1);
        Ok(plain_report(
            "eigen-residual",
            params,
            lhs.max_relative_residual(&rhs),
            t,
        ))
    }));

    let t = params.tol(tol::EIGEN_RESIDUAL);
    reports.push(guard("eigen-normalization", params, t, || {
        let e = ctx.eigen_series(mu, params.truncation)?;
        Ok(plain_report(
            "eigen-normalization",
            params,
            (e.coefficient(0) - Complex64::ONE).norm(),
            t,
        ))
    }));

    reports
}

fn recurrences_suite(
    params: &VerifyParams,
    ctx: &OperatorContext,
    rng: &mut ChaCha8Rng,
) -> Vec<VerificationReport> {
    let m = params.m;
    let nu = MultiIndex::new(params.nu.clone());
    let mut reports = Vec::new();

    let t = params.tol(tol::RECURRENCE);
    match recurrence_check(&nu, m, params.truncation, t) {
        Ok(mut v) => reports.append(&mut v),
        Err(e) => {
            reports.push(VerificationReport::failed(
                "bessel-derivative-recurrence",
                m,
                params.nu.clone(),
                params.truncation,
                t,
                e.to_string(),
            ));
            for k in 1..m {
                reports.push(VerificationReport::failed(
                    format!("bessel-shift-recurrence-k{k}"),
                    m,
                    params.nu.clone(),
                    params.truncation,
                    t,
                    e.to_string(),
                ));
            }
        }
    }

    let t = params.tol(tol::BESSEL_ODE);
    reports.push(guard("bessel-ode-residual", params, t, || {
        let s = hyper_bessel_series(&nu, m, params.lambda, params.truncation)?;
        let lhs = ctx.hyper_bessel_op_apply(&s)?;
        let rhs = s
            .scale(-params.lambda.powu(m as u32))
            .truncate(params.truncation - m);
        Ok(plain_report(
            "bessel-ode-residual",
            params,
            lhs.max_relative_residual(&rhs),
            t,
        ))
    }));

    // with every rotation weight exactly zero the factorized operator must
    // collapse to the plain m-th derivative
    let t = params.tol(tol::FACTORIZATION);
    let f = random_polynomial(rng, params.truncation, params.truncation);
    let boundary_report = (|| -> Result<VerificationReport> {
        let bctx = OperatorContext::from_weights(m, &vec![0.0; m - 1])?;
        let lhs = bctx.hyper_bessel_op_apply(&f)?;
        let mut rhs = f.clone();
        for _ in 0..m {
            rhs = rhs.derivative();
        }
        Ok(VerificationReport::new(
            "bessel-factorization-boundary",
            m,
            bctx.nu().components().to_vec(),
            params.truncation,
            lhs.max_relative_residual(&rhs),
            t,
        )
        .with_status("checked at the boundary index where all weights vanish"))
    })();
    reports.push(boundary_report.unwrap_or_else(|e| {
        VerificationReport::failed(
            "bessel-factorization-boundary",
            m,
            MultiIndex::boundary(m).components().to_vec(),
            params.truncation,
            t,
            e.to_string(),
        )
    }));

    // fixed order-two row: the half-integer index reduces to sin(x)/x
    let t = params.tol(tol::CLASSICAL_BESSEL);
    let sinc_nu = MultiIndex::new(vec![0.5]);
    let sinc_report = (|| -> Result<VerificationReport> {
        let mut worst = 0.0f64;
        for &x in &[0.5, 1.0, std::f64::consts::FRAC_PI_2, 2.3, 3.0] {
            let j = hyper_bessel_eval(&sinc_nu, 2, Complex64::new(x, 0.0))?;
            let sinc = Complex64::new(x.sin() / x, 0.0);
            worst = worst.max(point_residual(j.value, sinc));
        }
        Ok(VerificationReport::new(
            "bessel-classical-sinc",
            2,
            vec![0.5],
            params.truncation,
            worst,
            t,
        )
        .with_status("fixed order-two row, independent of the requested parameters"))
    })();
    reports.push(sinc_report.unwrap_or_else(|e| {
        VerificationReport::failed("bessel-classical-sinc", 2, vec![0.5], params.truncation, t, e.to_string())
    }));

    reports
}

fn rl_crosscheck_suite(
    params: &VerifyParams,
    ctx: &OperatorContext,
    rng: &mut ChaCha8Rng,
) -> Vec<VerificationReport> {
    let m = params.m;
    let q = &params.quadrature;
    let mut reports = Vec::new();

    let t = params.tol(tol::RL_INTERTWINES);
    let f = random_polynomial(rng, params.truncation, params.truncation).project(0, ctx.group());
    reports.push(guard("rl-intertwines-bessel", params, t, || {
        let diag = ctx.rl_diagonal(params.truncation)?;
        let lhs = ctx.hyper_bessel_op_apply(&diag.apply(&f)?)?;
        let mut fm = f.clone();
        for _ in 0..m {
            fm = fm.derivative();
        }
        let rhs = diag.apply(&fm.truncate(params.truncation - m))?;
        Ok(plain_report(
            "rl-intertwines-bessel",
            params,
            lhs.max_relative_residual(&rhs),
            t,
        ))
    }));

    let t = params.tol(tol::EK_MONOMIAL);
    reports.push(guard("ek-monomial-gamma-ratio", params, t, || {
        let cases: [(f64, f64, f64, u32); 5] = [
            (0.5, -0.5, 2.0, 2),
            (1.0, 0.0, 1.0, 1),
            (1.7, 0.8, 3.0, 4),
            (2.4, -0.9, 5.0, 1),
            (0.25, 1.6, 2.0, 3),
        ];
        let mut worst = 0.0f64;
        for (alpha, beta, gamma, s) in cases {
            let got = ek_integral(
                alpha,
                beta,
                gamma,
                |y| Complex64::new(y.powi(s as i32), 0.0),
                1.0,
                q,
            )?;
            let sg = s as f64 / gamma;
            let exact = (ln_gamma(beta + 1.0 + sg) - ln_gamma(alpha + beta + 1.0 + sg)).exp();
            worst = worst.max((got.re - exact).abs() / exact.abs());
            worst = worst.max(got.im.abs() / exact.abs());
        }
        Ok(plain_report("ek-monomial-gamma-ratio", params, worst, t))
    }));

    let t = params.tol(tol::RL_QUAD_VS_DIAGONAL);
    reports.push(guard("rl-quadrature-vs-diagonal", params, t, || {
        let x = 0.9;
        let diag = ctx.rl_diagonal(5 * m)?;
        let mut worst = 0.0f64;
        for n in 0..=4usize {
            let s = m * n;
            let quadrature = rl_transform_numeric(ctx, |y| Complex64::new(y.powi(s as i32), 0.0), x, q)?;
            let exact = diag.eigenvalue(s).expect("invariant-class exponent") * x.powi(s as i32);
            worst = worst.max(point_residual(quadrature, exact));
        }
        Ok(plain_report("rl-quadrature-vs-diagonal", params, worst, t))
    }));

    let t = params.tol(tol::RL_MAPS_COSM);
    reports.push(guard("rl-maps-cosm-to-bessel", params, t, || {
        let nu = MultiIndex::new(params.nu.clone());
        let mut worst = 0.0f64;
        for &x in &[0.5, 1.0, 2.0] {
            let lhs = rl_transform_numeric(
                ctx,
                |y| {
                    cos_m_eval(m, params.lambda * y)
                        .map(|e| e.value)
                        .unwrap_or(Complex64::new(f64::NAN, f64::NAN))
                },
                x,
                q,
            )?;
            let rhs = hyper_bessel_eval(&nu, m, params.lambda * x)?;
            worst = worst.max(point_residual(lhs, rhs.value));
        }
        Ok(plain_report("rl-maps-cosm-to-bessel", params, worst, t))
    }));

    // fixed order-two row comparing the two genuinely different quadrature
    // routes on an even function
    let t = params.tol(tol::RL_CLASSICAL);
    let fixed_nu = 0.7;
    let classical_report = (|| -> Result<VerificationReport> {
        let ctx2 = OperatorContext::from_parts(2, &[fixed_nu])?;
        let mut worst = 0.0f64;
        for &x in &[0.6, 1.2, 2.4] {
            let product = rl_transform_numeric(&ctx2, |y| Complex64::new(y.cos(), 0.0), x, q)?;
            let classical = classical_rl_numeric(fixed_nu, |y| Complex64::new(y.cos(), 0.0), x, q)?;
            worst = worst.max(point_residual(product, classical));
        }
        Ok(VerificationReport::new(
            "rl-classical-m2",
            2,
            vec![fixed_nu],
            params.truncation,
            worst,
            t,
        )
        .with_status("fixed order-two row, independent of the requested parameters"))
    })();
    reports.push(classical_report.unwrap_or_else(|e| {
        VerificationReport::failed("rl-classical-m2", 2, vec![fixed_nu], params.truncation, t, e.to_string())
    }));

    let t = params.tol(tol::RL_INVERSE);
    let g = random_polynomial(rng, params.truncation, params.truncation).project(0, ctx.group());
    reports.push(guard("rl-inverse-roundtrip", params, t, || {
        let diag = ctx.rl_diagonal(params.truncation)?;
        let inv = ctx.rl_diagonal_inverse(params.truncation)?;
        let back = inv.apply(&diag.apply(&g)?)?;
        Ok(plain_report(
            "rl-inverse-roundtrip",
            params,
            back.max_relative_residual(&g),
            t,
        ))
    }));

    reports
}

fn kernel_suite(params: &VerifyParams, ctx: &OperatorContext) -> Vec<VerificationReport> {
    let m = params.m;
    let mu = ctx.mu_from_lambda(params.lambda);
    let control = SumControl::default();
    let mut reports = Vec::new();

    let t = params.tol(tol::KERNEL_NORMALIZATION);
    reports.push(guard("kernel-normalization", params, t, || {
        let k = dunkl_kernel_eval_with(
            ctx,
            params.lambda,
            Complex64::ZERO,
            KernelForm::Standard,
            &control,
        )?;
        let residual = (k.oracle.value - Complex64::ONE)
            .norm()
            .max((k.closed_form - Complex64::ONE).norm());
        Ok(plain_report("kernel-normalization", params, residual, t))
    }));

    let t = params.tol(tol::KERNEL_CLOSED_FORM);
    reports.push(guard("kernel-oracle-vs-closed", params, t, || {
        let closed =
            kernel_closed_form_series(ctx, params.lambda, params.truncation, KernelForm::Standard)?;
        let oracle = ctx.eigen_series(mu, params.truncation)?;
        Ok(plain_report(
            "kernel-oracle-vs-closed",
            params,
            closed.max_relative_residual(&oracle),
            t,
        ))
    }));

    // diagnostic with inverted sense: the literal reading must measurably
    // disagree with the oracle where the corrected one does not
    let t = params.tol(tol::KERNEL_DISCREPANCY_FLOOR);
    reports.push(guard("kernel-alternate-discrepancy", params, t, || {
        let x = Complex64::new(0.7, 0.0);
        let standard =
            dunkl_kernel_eval_with(ctx, params.lambda, x, KernelForm::Standard, &control)?;
        let alternate =
            dunkl_kernel_eval_with(ctx, params.lambda, x, KernelForm::Alternate, &control)?;
        Ok(VerificationReport {
            identity: "kernel-alternate-discrepancy".into(),
            m,
            nu: params.nu.clone(),
            truncation: params.truncation,
            max_residual: alternate.difference,
            tolerance: t,
            pass: alternate.difference > t,
            status: Some(format!(
                "diagnostic passes when the literal reading differs from the oracle by more than \
                 the tolerance; literal {:.6e}, corrected {:.6e} at x = 0.7",
                alternate.difference, standard.difference
            )),
        })
    }));

    let t = params.tol(tol::EIGEN_INTERTWINER);
    reports.push(guard("kernel-from-intertwiner", params, t, || {
        let v = ctx.intertwiner_apply(&TruncatedSeries::exp(mu, params.truncation))?;
        let e = ctx.eigen_series(mu, params.truncation)?;
        Ok(plain_report(
            "kernel-from-intertwiner",
            params,
            v.max_relative_residual(&e),
            t,
        ))
    }));

    let t = params.tol(tol::KERNEL_CLOSED_FORM);
    reports.push(guard("kernel-decomposition-classwise", params, t, || {
        let eigen = ctx.eigen_series(mu, params.truncation)?;
        let mut worst = 0.0f64;
        for j in 0..m {
            let term = kernel_term_series(ctx, params.lambda, params.truncation, j, KernelForm::Standard)?;
            let projected = eigen.project(j, ctx.group());
            worst = worst.max(term.max_relative_residual(&projected));
        }
        Ok(plain_report(
            "kernel-decomposition-classwise",
            params,
            worst,
            t,
        ))
    }));

    let t = params.tol(tol::KERNEL_POINTWISE_FD);
    reports.push(guard("kernel-pointwise-eigen-fd", params, t, || {
        let sample = |z: Complex64| -> Complex64 {
            dunkl_kernel_eval_with(ctx, params.lambda, z, KernelForm::Standard, &control)
                .map(|k| k.oracle.value)
                .unwrap_or(Complex64::new(f64::NAN, f64::NAN))
        };
        let h = 1e-5;
        let mut worst = 0.0f64;
        for &x in &[0.4, 0.9, 1.3] {
            let z = Complex64::new(x, 0.0);
            let plus = dunkl_kernel_eval_with(ctx, params.lambda, z + h, KernelForm::Standard, &control)?;
            let minus = dunkl_kernel_eval_with(ctx, params.lambda, z - h, KernelForm::Standard, &control)?;
            let derivative = (plus.oracle.value - minus.oracle.value) / (2.0 * h);
            let difference_part = ctx.omega_apply(sample, z)? / z;
            let here = dunkl_kernel_eval_with(ctx, params.lambda, z, KernelForm::Standard, &control)?;
            let lhs = derivative + difference_part;
            let rhs = mu * here.oracle.value;
            worst = worst.max(point_residual(lhs, rhs));
        }
        Ok(plain_report("kernel-pointwise-eigen-fd", params, worst, t))
    }));

    reports.push(soundness_report(params));
    reports
}

/// Doubling the term count must move each value by less than the reported
/// error estimate; checked for the three alternating series families on a
/// real grid where the Leibniz bound applies.
fn soundness_report(params: &VerifyParams) -> VerificationReport {
    let identity = "eval-error-estimate-soundness";
    let tolerance = params.tol(tol::ERROR_ESTIMATE_SOUNDNESS);
    let m = params.m;
    let nu = MultiIndex::new(params.nu.clone());
    let body = || -> Result<VerificationReport> {
        let loose = SumControl {
            tolerance: 1e-10,
            ..SumControl::default()
        };
        let mut worst = 0.0f64;
        let mut probe = |first: EvalResult, second: EvalResult| {
            let moved = (first.value - second.value).norm();
            worst = worst.max(moved / first.error_estimate);
        };
        for &x in &[0.5, 1.5, 3.0] {
            let z = Complex64::new(x, 0.0);
            let c1 = crate::special::cos_m_eval_with(m, z, &loose)?;
            let forced = SumControl {
                min_terms: 2 * c1.terms_used,
                ..SumControl::default()
            };
            probe(c1, crate::special::cos_m_eval_with(m, z, &forced)?);

            let s1 = sin_ml_eval_with(m, 1, z, &loose)?;
            let forced = SumControl {
                min_terms: 2 * s1.terms_used,
                ..SumControl::default()
            };
            probe(s1, sin_ml_eval_with(m, 1, z, &forced)?);

            let j1 = hyper_bessel_eval_with(&nu, m, z, &loose)?;
            let forced = SumControl {
                min_terms: 2 * j1.terms_used,
                ..SumControl::default()
            };
            probe(j1, hyper_bessel_eval_with(&nu, m, z, &forced)?);
        }
        Ok(plain_report(identity, params, worst, tolerance)
            .with_status("max |value shift| / error_estimate after doubling term counts"))
    };
    body().unwrap_or_else(|e| {
        VerificationReport::failed(
            identity,
            params.m,
            params.nu.clone(),
            params.truncation,
            tolerance,
            e.to_string(),
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(m: usize, nu: &[f64]) -> VerifyParams {
        VerifyParams {
            m,
            nu: nu.to_vec(),
            lambda: Complex64::ONE,
            truncation: 36,
            tolerance: None,
            seed: 7,
            quadrature: QuadratureConfig::default(),
        }
    }

    #[test]
    fn emitted_identities_match_the_contract() {
        for (m, nu) in [(2usize, vec![0.5]), (3, vec![0.4, 0.9]), (4, vec![0.3, 0.8, 1.2])] {
            let p = params(m, &nu);
            for suite in Suite::all() {
                let reports = run_suite(suite, &p).unwrap();
                let emitted: Vec<String> =
                    reports.iter().map(|r| r.identity.clone()).collect();
                assert_eq!(
                    emitted,
                    expected_identities(suite, m),
                    "suite {} at m = {m}",
                    suite.name()
                );
            }
        }
    }

    #[test]
    fn every_suite_passes_on_valid_parameters() {
        for (m, nu) in [(2usize, vec![0.5]), (3, vec![1.0 / 3.0, 2.0 / 3.0])] {
            let p = params(m, &nu);
            for suite in Suite::all() {
                for r in run_suite(suite, &p).unwrap() {
                    assert!(
                        r.pass,
                        "suite {} identity {} residual {} (status {:?})",
                        suite.name(),
                        r.identity,
                        r.max_residual,
                        r.status
                    );
                }
            }
        }
    }

    #[test]
    fn invalid_weight_fails_only_the_validity_gate() {
        // nu = -0.75 at order two: k_1 = -0.5 is inadmissible, yet no
        // eigen-series denominator vanishes, so the recursion checks pass
        let p = params(2, &[-0.75]);
        let reports = run_suite(Suite::Eigen, &p).unwrap();
        let by_name = |n: &str| reports.iter().find(|r| r.identity == n).unwrap();
        assert!(!by_name("eigen-validity").pass);
        assert!(by_name("eigen-validity")
            .status
            .as_deref()
            .unwrap()
            .contains("k_1"));
        assert!(by_name("eigen-residual").pass);
        assert!(by_name("eigen-normalization").pass);
        assert!(reports.iter().any(|r| !r.pass));
    }

    #[test]
    fn runs_are_deterministic() {
        let p = params(3, &[0.4, 0.9]);
        for suite in Suite::all() {
            assert_eq!(run_suite(suite, &p).unwrap(), run_suite(suite, &p).unwrap());
        }
    }

    #[test]
    fn malformed_parameters_are_hard_errors() {
        let mut p = params(2, &[0.5]);
        p.truncation = 3;
        assert!(run_suite(Suite::Eigen, &p).is_err());
        let p = params(3, &[0.5]);
        assert!(run_suite(Suite::Eigen, &p).is_err());
        let mut p = params(2, &[0.5]);
        p.quadrature.tolerance = -1.0;
        assert!(run_suite(Suite::RlCrosscheck, &p).is_err());
    }

    #[test]
    fn suite_names_roundtrip() {
        for s in Suite::all() {
            assert_eq!(Suite::from_name(s.name()), Some(s));
        }
        assert_eq!(Suite::from_name("nope"), None);
    }
}
