//! π-periodic singular potentials `v = C + Q'` represented through the
//! exponential Fourier coefficients of `Q`.
//!
//! `Q(x) = Σ_{k ∈ 2ℤ, k≠0} q(k) e^{ikx}` with finite support, so `Q` is a
//! trigonometric polynomial and `v` acts through the coefficients
//! `V(0) = C`, `V(m) = i m q(m)`. All coefficient sequences consumed by the
//! other modules (`V`, the sine coefficients `q̃`, and `Ṽ(k) = k q̃(k)`)
//! are derived here.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PotentialError {
    #[error("Fourier index {0} is odd; Q has only even frequencies")]
    OddIndex(i64),
    #[error("Fourier index 0 supplied; Q is mean-zero by normalization")]
    ZeroIndexPresent,
    #[error("Fourier index {0} appears more than once in the coefficient list")]
    DuplicateIndex(i64),
    #[error("failed to parse potential file: {0}")]
    Parse(String),
    #[error("failed to read potential file: {0}")]
    Io(#[from] std::io::Error),
}

/// The constant `C` plus the finitely supported coefficients `q(k)` of `Q`.
/// Single source of truth for the potential; immutable after construction.
#[derive(Debug, Clone, PartialEq)]
pub struct PotentialFourier {
    c: Complex64,
    q: BTreeMap<i64, Complex64>,
    is_real: bool,
}

impl PotentialFourier {
    /// Validates the coefficient map: every key must be even and nonzero.
    /// `is_real` is derived from the data, never asserted by the caller.
    pub fn new(
        c: Complex64,
        coeffs: BTreeMap<i64, Complex64>,
    ) -> Result<Self, PotentialError> {
        for &k in coeffs.keys() {
            if k == 0 {
                return Err(PotentialError::ZeroIndexPresent);
            }
            if k % 2 != 0 {
                return Err(PotentialError::OddIndex(k));
            }
        }
        let is_real = c.im == 0.0
            && coeffs.iter().all(|(&k, &v)| {
                let mirror = coeffs.get(&-k).copied().unwrap_or(Complex64::ZERO);
                mirror == v.conj()
            });
        Ok(Self { c, q: coeffs, is_real })
    }

    pub fn zero() -> Self {
        Self { c: Complex64::ZERO, q: BTreeMap::new(), is_real: true }
    }

    /// Constant potential `v = C` (empty `q`).
    pub fn constant(c: Complex64) -> Self {
        Self { c, q: BTreeMap::new(), is_real: c.im == 0.0 }
    }

    pub fn c(&self) -> Complex64 {
        self.c
    }

    /// `q(k)`, zero off the stored support.
    pub fn q_coeff(&self, k: i64) -> Complex64 {
        self.q.get(&k).copied().unwrap_or(Complex64::ZERO)
    }

    pub fn support(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        self.q.iter().map(|(&k, &v)| (k, v))
    }

    /// Largest |k| in the support (0 for constant potentials).
    pub fn max_support(&self) -> i64 {
        self.q.keys().map(|k| k.abs()).max().unwrap_or(0)
    }

    pub fn is_real(&self) -> bool {
        self.is_real
    }

    pub fn is_zero(&self) -> bool {
        self.c == Complex64::ZERO && self.q.values().all(|v| *v == Complex64::ZERO)
    }

    /// Potential coefficients: `V(0) = C`, `V(m) = i m q(m)` on the support.
    pub fn v_coefficient(&self, m: i64) -> Complex64 {
        if m == 0 {
            self.c
        } else {
            Complex64::new(0.0, m as f64) * self.q_coeff(m)
        }
    }

    /// The full finite map of potential coefficients, including `V(0) = C`.
    pub fn v_coefficients(&self) -> BTreeMap<i64, Complex64> {
        let mut v: BTreeMap<i64, Complex64> =
            self.q.keys().map(|&k| (k, self.v_coefficient(k))).collect();
        v.insert(0, self.c);
        v
    }

    /// Sine coefficients `q̃(m) = (1/π)∫₀^π Q(x)·√2 sin(mx) dx` for
    /// `m = 1..=big_m`, by closed form:
    ///
    /// * even `m`: `q̃(m) = (i/√2)(q(m) − q(−m))`;
    /// * odd  `m`: `q̃(m) = (2√2 m/π) Σ_k q(k)/(m² − k²)`.
    pub fn sine_coefficients(&self, big_m: usize) -> Vec<Complex64> {
        assert!(big_m >= 1, "sine_coefficients requires M >= 1");
        let sqrt2 = std::f64::consts::SQRT_2;
        (1..=big_m as i64)
            .map(|m| {
                if m % 2 == 0 {
                    Complex64::new(0.0, 1.0 / sqrt2) * (self.q_coeff(m) - self.q_coeff(-m))
                } else {
                    let s: Complex64 = self
                        .q
                        .iter()
                        .map(|(&k, &qk)| qk / ((m * m - k * k) as f64))
                        .sum();
                    s * (2.0 * sqrt2 * m as f64 / PI)
                }
            })
            .collect()
    }

    /// `Ṽ(0) = 0`, `Ṽ(k) = k·q̃(k)` for `k = 1..=big_m`; index `k` directly.
    pub fn v_tilde(&self, big_m: usize) -> Vec<Complex64> {
        let qt = self.sine_coefficients(big_m);
        let mut vt = Vec::with_capacity(big_m + 1);
        vt.push(Complex64::ZERO);
        for (i, q) in qt.into_iter().enumerate() {
            vt.push(q * (i + 1) as f64);
        }
        vt
    }

    /// `‖Q‖_{L²([0,π])}` in the `(1/π)∫₀^π` normalization: `√(Σ |q(m)|²)`.
    pub fn l2_norm(&self) -> f64 {
        self.q.values().map(|v| v.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Same norm through the potential coefficients: `√(Σ_{m≠0} |V(m)|²/m²)`.
    /// Kept as an algebraically independent route; equals [`Self::l2_norm`].
    pub fn l2_norm_from_v(&self) -> f64 {
        self.q
            .keys()
            .map(|&m| self.v_coefficient(m).norm_sqr() / (m * m) as f64)
            .sum::<f64>()
            .sqrt()
    }

    /// All derived coefficient sequences in one bundle.
    pub fn coefficient_sequences(&self, big_m: usize) -> CoefficientSequences {
        CoefficientSequences {
            v: self.v_coefficients(),
            q_tilde: self.sine_coefficients(big_m),
            v_tilde: self.v_tilde(big_m),
        }
    }

    /// Pointwise evaluator for `Q` as a trigonometric polynomial.
    pub fn q_evaluator(&self) -> QEvaluator {
        let j_max = (self.max_support() / 2) as usize;
        let mut c_plus = vec![Complex64::ZERO; j_max + 1];
        let mut c_minus = vec![Complex64::ZERO; j_max + 1];
        for (&k, &v) in &self.q {
            let j = (k.abs() / 2) as usize;
            if k > 0 {
                c_plus[j] = v;
            } else {
                c_minus[j] = v;
            }
        }
        QEvaluator { c_plus, c_minus }
    }

    /// Loads the potential spec file: `{"C_re":…, "C_im":…, "coeffs":[{"k":…, "re":…, "im":…}, …]}`.
    pub fn from_json_str(text: &str) -> Result<Self, PotentialError> {
        let file: PotentialFile =
            serde_json::from_str(text).map_err(|e| PotentialError::Parse(e.to_string()))?;
        let mut q = BTreeMap::new();
        for rec in &file.coeffs {
            if q.insert(rec.k, Complex64::new(rec.re, rec.im)).is_some() {
                return Err(PotentialError::DuplicateIndex(rec.k));
            }
        }
        Self::new(Complex64::new(file.c_re, file.c_im), q)
    }

    pub fn from_path(path: &Path) -> Result<Self, PotentialError> {
        Self::from_json_str(&std::fs::read_to_string(path)?)
    }

    pub fn to_json_string(&self) -> String {
        let file = PotentialFile {
            c_re: self.c.re,
            c_im: self.c.im,
            coeffs: self
                .q
                .iter()
                .map(|(&k, &v)| CoeffRecord { k, re: v.re, im: v.im })
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("potential file serialization")
    }
}

/// Tail energy `E_m(x) = (Σ_{|j| ≥ m} |x(j)|²)^{1/2}`; exact for the finitely
/// supported sequences used here.
pub fn tail_energy(x: &BTreeMap<i64, Complex64>, m: f64) -> f64 {
    x.iter()
        .filter(|(&j, _)| (j.abs() as f64) >= m)
        .map(|(_, v)| v.norm_sqr())
        .sum::<f64>()
        .sqrt()
}

/// Derived coefficient sequences; see [`PotentialFourier::coefficient_sequences`].
#[derive(Debug, Clone)]
pub struct CoefficientSequences {
    /// `V(m) = i m q(m)` for `m ≠ 0`, `V(0) = C`.
    pub v: BTreeMap<i64, Complex64>,
    /// `q̃(m)` for `m = 1..=M` (index `m-1`).
    pub q_tilde: Vec<Complex64>,
    /// `Ṽ(k) = k q̃(k)` for `k = 0..=M` (index `k`); `Ṽ(0) = 0` exactly.
    pub v_tilde: Vec<Complex64>,
}

/// Precomputed evaluator for `Q(x)`; powers of `e^{2ix}` by recurrence.
#[derive(Debug, Clone)]
pub struct QEvaluator {
    c_plus: Vec<Complex64>,
    c_minus: Vec<Complex64>,
}

impl QEvaluator {
    pub fn eval(&self, x: f64) -> Complex64 {
        let w = Complex64::from_polar(1.0, 2.0 * x);
        let mut p = Complex64::ONE;
        let mut acc = Complex64::ZERO;
        for j in 1..self.c_plus.len() {
            p *= w;
            acc += self.c_plus[j] * p + self.c_minus[j] * p.conj();
        }
        acc
    }

    /// Max of |Q| over a uniform grid; crude but adequate for window bounds.
    pub fn sup_norm_estimate(&self) -> f64 {
        let n = 64 * self.c_plus.len().max(4);
        (0..n)
            .map(|i| self.eval(PI * i as f64 / n as f64).norm())
            .fold(0.0, f64::max)
    }
}

#[derive(Serialize, Deserialize)]
struct PotentialFile {
    #[serde(rename = "C_re")]
    c_re: f64,
    #[serde(rename = "C_im", default)]
    c_im: f64,
    coeffs: Vec<CoeffRecord>,
}

#[derive(Serialize, Deserialize)]
struct CoeffRecord {
    k: i64,
    re: f64,
    im: f64,
}

/// `Q = sin 2x`, i.e. `v = 2cos 2x` (Mathieu with q = 1).
pub fn mathieu_cos2x() -> PotentialFourier {
    let mut q = BTreeMap::new();
    q.insert(2, Complex64::new(0.0, -0.5));
    q.insert(-2, Complex64::new(0.0, 0.5));
    PotentialFourier::new(Complex64::ZERO, q).expect("valid coefficients")
}

/// Truncated sawtooth: `q(k) = 1/(ik)` for even `0 < |k| <= 2*harmonics`.
/// With many harmonics `v = Q'` approximates a periodic δ-comb.
pub fn truncated_sawtooth(harmonics: usize) -> PotentialFourier {
    let mut q = BTreeMap::new();
    for j in 1..=harmonics as i64 {
        let k = 2 * j;
        q.insert(k, Complex64::new(0.0, -1.0 / k as f64));
        q.insert(-k, Complex64::new(0.0, 1.0 / k as f64));
    }
    PotentialFourier::new(Complex64::ZERO, q).expect("valid coefficients")
}
