//! The cyclic symmetry group of order m acting on the complex plane by
//! rotations, its discrete Fourier data, and the reparametrized weight
//! vectors attached to the nontrivial rotations.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// e^{2 pi i num / den}, exact on quarter rotations.
///
/// Angles that land on the real or imaginary axis come out as exact
/// (+-1, 0) / (0, +-1) pairs rather than trig approximations, so powers of
/// low-order roots of unity cycle without drift.
pub fn unit_angle(num: i64, den: i64) -> Complex64 {
    debug_assert!(den > 0, "unit_angle needs a positive denominator");
    let num = num.rem_euclid(den);
    if (4 * num) % den == 0 {
        return match (4 * num) / den {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * num as f64 / den as f64)
}

/// Order of the rotation group together with its primitive root and the
/// Fourier matrix used by the spectral projections.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupConfig {
    m: usize,
    epsilon: Complex64,
    kappa: Complex64,
    /// Row-major m x m table of epsilon^(-r c).
    fourier: Vec<Complex64>,
}

impl GroupConfig {
    pub fn new(m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::Parameter(format!(
                "group order must be at least 2, got {m}"
            )));
        }
        let mi = m as i64;
        let mut fourier = Vec::with_capacity(m * m);
        for r in 0..mi {
            for c in 0..mi {
                fourier.push(unit_angle(-(r * c), mi));
            }
        }
        Ok(Self {
            m,
            epsilon: unit_angle(1, mi),
            kappa: unit_angle(1, 2 * mi),
            fourier,
        })
    }

    pub fn order(&self) -> usize {
        self.m
    }

    /// Primitive m-th root of unity e^{2 pi i / m}.
    pub fn epsilon(&self) -> Complex64 {
        self.epsilon
    }

    /// Half-step root e^{i pi / m}; its m-th power is -1.
    pub fn kappa(&self) -> Complex64 {
        self.kappa
    }

    /// epsilon^j, reduced mod m before exponentiation.
    pub fn root_of_unity(&self, j: i64) -> Complex64 {
        unit_angle(j, self.m as i64)
    }

    /// epsilon^{-r c}: the (r, c) entry of the projection matrix before the
    /// 1/m normalization.
    pub fn fourier_entry(&self, r: usize, c: usize) -> Complex64 {
        self.fourier[(r % self.m) * self.m + (c % self.m)]
    }
}

/// Multi-index nu = (nu_1, ..., nu_{m-1}) labelling a hyper-Bessel family.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiIndex {
    components: Vec<f64>,
}

impl MultiIndex {
    pub fn new(components: Vec<f64>) -> Self {
        Self { components }
    }

    /// The boundary index nu_j = -1 + j/m at which every rotation weight
    /// vanishes and the deformed operators collapse to classical ones.
    pub fn boundary(m: usize) -> Self {
        Self {
            components: (1..m).map(|j| -1.0 + j as f64 / m as f64).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    /// nu_k, 1-based; k must be in 1..=len.
    pub fn component(&self, k: usize) -> f64 {
        self.components[k - 1]
    }

    pub fn components(&self) -> &[f64] {
        &self.components
    }

    /// nu_k >= -1 + k/m for all k: the closure of the admissible cone, where
    /// every rotation weight is nonnegative.
    pub fn is_valid_for(&self, m: usize) -> bool {
        self.len() == m - 1
            && self
                .components
                .iter()
                .enumerate()
                .all(|(i, &nu)| nu >= -1.0 + (i as f64 + 1.0) / m as f64)
    }

    /// Strict interior of the admissible cone; the fractional-integral
    /// kernels need strictly positive exponents there.
    pub fn is_strictly_valid_for(&self, m: usize) -> bool {
        self.len() == m - 1
            && self
                .components
                .iter()
                .enumerate()
                .all(|(i, &nu)| nu > -1.0 + (i as f64 + 1.0) / m as f64)
    }

    /// nu + (1, 1, ..., 1); the index reached by one derivative step.
    pub fn raised_by_one(&self) -> Self {
        Self {
            components: self.components.iter().map(|nu| nu + 1.0).collect(),
        }
    }

    /// nu + e_1 + ... + e_j: first j components raised, the rest untouched.
    pub fn raised_prefix(&self, j: usize) -> Self {
        Self {
            components: self
                .components
                .iter()
                .enumerate()
                .map(|(i, &nu)| if i < j { nu + 1.0 } else { nu })
                .collect(),
        }
    }

    /// nu - e_k, 1-based.
    pub fn lowered_at(&self, k: usize) -> Self {
        let mut components = self.components.clone();
        components[k - 1] -= 1.0;
        Self { components }
    }
}

/// Rotation weights k_1, ..., k_{m-1} in the linear parametrization
/// k_j = m nu_j + m - j. Trivial rotation carries weight zero.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    m: usize,
    weights: Vec<f64>,
}

impl WeightVector {
    pub fn from_multi_index(m: usize, nu: &MultiIndex) -> Result<Self> {
        if nu.len() != m - 1 {
            return Err(Error::Parameter(format!(
                "multi-index has {} components, group of order {m} needs {}",
                nu.len(),
                m - 1
            )));
        }
        Ok(Self {
            m,
            weights: nu
                .components()
                .iter()
                .enumerate()
                .map(|(i, &v)| m as f64 * v + (m - 1 - i) as f64)
                .collect(),
        })
    }

    /// Directly from the weights. The index-space constructor cannot place
    /// weights at exact floating-point values (k_j = m nu_j + m - j rounds),
    /// so callers that need, say, the exactly-zero boundary weights build
    /// from here.
    pub fn from_weights(m: usize, weights: Vec<f64>) -> Result<Self> {
        if m < 2 || weights.len() != m - 1 {
            return Err(Error::Parameter(format!(
                "{} weights supplied, group of order {m} needs {}",
                weights.len(),
                m.saturating_sub(1)
            )));
        }
        Ok(Self { m, weights })
    }

    pub fn order(&self) -> usize {
        self.m
    }

    /// Inverse of the parametrization: nu_j = (k_j - m + j)/m.
    pub fn multi_index(&self) -> MultiIndex {
        MultiIndex::new(
            self.weights
                .iter()
                .enumerate()
                .map(|(i, &k)| (k - (self.m - 1 - i) as f64) / self.m as f64)
                .collect(),
        )
    }

    /// k_j, 1-based; j must be in 1..m.
    pub fn weight(&self, j: usize) -> f64 {
        self.weights[j - 1]
    }

    /// Weight attached to the residue class r mod m; the trivial class
    /// (r = 0) carries weight zero.
    pub fn by_residue(&self, r: usize) -> f64 {
        let r = r % self.m;
        if r == 0 {
            0.0
        } else {
            self.weights[r - 1]
        }
    }

    pub fn all_nonnegative(&self) -> bool {
        self.weights.iter().all(|&k| k >= 0.0)
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }
}
