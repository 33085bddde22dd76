//! Spectral gap sequences and their decay. For each `n` the table pairs the
//! two periodic (even `n`) or antiperiodic (odd `n`) eigenvalues nearest
//! `n²` with the nearest Dirichlet eigenvalue `μ_n`, and derives
//! `γ_n = λ_n⁺ − λ_n⁻`, the deviation `μ_n − (λ_n⁺ + λ_n⁻)/2` and
//! `Δ_n = |λ_n⁺ − λ_n⁻| + |λ_n⁺ − μ_n|`. Decay of these sequences in
//! weighted `ℓ²` norms tracks the smoothness of the potential.

use num_complex::Complex64;
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AsymptoticsError {
    #[error("pairing ambiguous at n = {n}: candidates equidistant from n²")]
    PairingAmbiguity { n: u32 },
    #[error("weight is not submultiplicative at (m, n) = ({m}, {n})")]
    NotSubmultiplicative { m: u32, n: u32 },
    #[error("need at least {need} usable rows, have {have}")]
    InsufficientData { need: usize, have: usize },
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct GapRow {
    pub n: u32,
    pub lambda_minus: Complex64,
    pub lambda_plus: Complex64,
    pub mu: Complex64,
    /// `λ_n⁺ − λ_n⁻`.
    pub gamma: Complex64,
    /// `μ_n − (λ_n⁺ + λ_n⁻)/2`.
    pub dev: Complex64,
    /// `|λ_n⁺ − λ_n⁻| + |λ_n⁺ − μ_n|`.
    pub delta: f64,
    /// max over the `λ⁺`/`λ⁻` choice in the second term; equals `delta`
    /// when the choice does not matter.
    pub delta_alt: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct GapTable {
    pub engine: String,
    pub lambda0: Option<Complex64>,
    pub rows: Vec<GapRow>,
}

/// Two entries of `pool` closest to `n²`, erroring when the pair is not
/// uniquely determined.
fn closest_pair(pool: &[Complex64], n: u32) -> Result<(Complex64, Complex64), AsymptoticsError> {
    let center = Complex64::new((n as f64).powi(2), 0.0);
    let mut by_dist: Vec<Complex64> = pool.to_vec();
    by_dist.sort_by(|a, b| {
        let da = (a - center).norm();
        let db = (b - center).norm();
        (da, a.re, a.im).partial_cmp(&(db, b.re, b.im)).unwrap()
    });
    if by_dist.len() < 2 {
        return Err(AsymptoticsError::InsufficientData { need: 2, have: by_dist.len() });
    }
    if by_dist.len() > 2 {
        let d2 = (by_dist[1] - center).norm();
        let d3 = (by_dist[2] - center).norm();
        if (d3 - d2).abs() <= 1e-12 * (1.0 + center.norm()) {
            return Err(AsymptoticsError::PairingAmbiguity { n });
        }
    }
    let (a, b) = (by_dist[0], by_dist[1]);
    // label by real part, ties by imaginary part
    if (a.re, a.im) <= (b.re, b.im) {
        Ok((a, b))
    } else {
        Ok((b, a))
    }
}

/// Builds the table from precomputed spectra: `per_plus` supplies even `n`,
/// `per_minus` odd `n`, `dir` the `μ_n` column. `engine` is provenance only.
pub fn gap_table(
    per_plus: &[Complex64],
    per_minus: &[Complex64],
    dir: &[Complex64],
    n_max: u32,
    engine: &str,
) -> Result<GapTable, AsymptoticsError> {
    assert!(n_max >= 1);
    let lambda0 = per_plus
        .iter()
        .copied()
        .min_by(|a, b| (a.re, a.im).partial_cmp(&(b.re, b.im)).unwrap());
    let mut rows = Vec::new();
    for n in 1..=n_max {
        let pool = if n % 2 == 0 { per_plus } else { per_minus };
        let (lambda_minus, lambda_plus) = closest_pair(pool, n)?;
        let center = Complex64::new((n as f64).powi(2), 0.0);
        let mu = dir
            .iter()
            .copied()
            .min_by(|a, b| {
                ((a - center).norm(), a.re).partial_cmp(&((b - center).norm(), b.re)).unwrap()
            })
            .ok_or(AsymptoticsError::InsufficientData { need: 1, have: 0 })?;
        let gamma = lambda_plus - lambda_minus;
        let dev = mu - (lambda_plus + lambda_minus) * Complex64::new(0.5, 0.0);
        let delta = gamma.norm() + (lambda_plus - mu).norm();
        let delta_alt = delta.max(gamma.norm() + (lambda_minus - mu).norm());
        rows.push(GapRow { n, lambda_minus, lambda_plus, mu, gamma, dev, delta, delta_alt });
    }
    Ok(GapTable { engine: engine.into(), lambda0, rows })
}

impl GapTable {
    /// Strict interlacing for real potentials:
    /// `λ₀ < λ₁⁻ ≤ μ₁ ≤ λ₁⁺ < λ₂⁻ ≤ μ₂ ≤ λ₂⁺ < ...` within `tol`.
    pub fn interlacing_holds(&self, tol: f64) -> bool {
        let mut prev_top = match self.lambda0 {
            Some(l) => l.re,
            None => return false,
        };
        for r in &self.rows {
            if r.lambda_minus.re < prev_top - tol
                || r.lambda_plus.re < r.lambda_minus.re - tol
                || r.mu.re < r.lambda_minus.re - tol
                || r.mu.re > r.lambda_plus.re + tol
            {
                return false;
            }
            prev_top = r.lambda_plus.re;
        }
        true
    }

    pub fn to_csv(&self) -> String {
        use crate::report::fmt_f64 as f;
        let mut out = String::from(
            "n,re_lambda_minus,im_lambda_minus,re_lambda_plus,im_lambda_plus,re_mu,im_mu,gamma,dev,Delta_n\n",
        );
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{},{},{},{},{}\n",
                r.n,
                f(r.lambda_minus.re),
                f(r.lambda_minus.im),
                f(r.lambda_plus.re),
                f(r.lambda_plus.im),
                f(r.mu.re),
                f(r.mu.im),
                f(r.gamma.norm()),
                f(r.dev.norm()),
                f(r.delta)
            ));
        }
        out
    }
}

/// Submultiplicative weight `ω(n) > 0`; the derived `Ω(n) = ω(n)/n` scales
/// the gap sequences.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Weight {
    /// `ω(n) = (1+n)^a`, `a ≥ 0`.
    Power(f64),
    /// `ω(n) = (1+n)^a (1 + log(1+n))^b`, `a, b ≥ 0`.
    LogPower(f64, f64),
    /// `ω(n) = e^{εn}`, `ε > 0`.
    Exponential(f64),
}

impl Weight {
    /// Verifies `ω(m+n) ≤ ω(m) ω(n)` on `m, n ≤ 64`.
    pub fn checked(self) -> Result<Weight, AsymptoticsError> {
        for m in 1..=64u32 {
            for n in m..=64u32 {
                if self.omega(m + n) > self.omega(m) * self.omega(n) * (1.0 + 1e-12) {
                    return Err(AsymptoticsError::NotSubmultiplicative { m, n });
                }
            }
        }
        Ok(self)
    }

    pub fn omega(&self, n: u32) -> f64 {
        let x = 1.0 + n as f64;
        match *self {
            Weight::Power(a) => x.powf(a),
            Weight::LogPower(a, b) => x.powf(a) * (1.0 + x.ln()).powf(b),
            Weight::Exponential(eps) => (eps * n as f64).exp(),
        }
    }

    pub fn capital_omega(&self, n: u32) -> f64 {
        self.omega(n) / n as f64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SumTrend {
    Converging,
    Diverging,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct WeightedNorm {
    /// `sqrt(Σ |seq(n)|² Ω(n)²)` over the available range.
    pub value: f64,
    pub trend: SumTrend,
}

pub(crate) fn weighted_norm_with<F: Fn(u32) -> f64>(
    seq: &BTreeMap<u32, Complex64>,
    omega_over_n: F,
) -> WeightedNorm {
    let terms: Vec<f64> = seq
        .iter()
        .map(|(&n, z)| {
            let w = omega_over_n(n);
            z.norm_sqr() * w * w
        })
        .collect();
    let value = terms.iter().sum::<f64>().sqrt();
    // diverging when the last half of the range still carries at least as
    // much mass as the first half
    let trend = if terms.len() >= 4 {
        let half = terms.len() / 2;
        let head: f64 = terms[..half].iter().sum();
        let tail: f64 = terms[half..].iter().sum();
        if tail >= head && tail > 0.0 {
            SumTrend::Diverging
        } else {
            SumTrend::Converging
        }
    } else {
        SumTrend::Converging
    };
    WeightedNorm { value, trend }
}

/// Weighted `ℓ²(Ω)` norm of a sequence with a partial-sum trend diagnostic.
pub fn weighted_norm(seq: &BTreeMap<u32, Complex64>, w: &Weight) -> WeightedNorm {
    weighted_norm_with(seq, |n| w.capital_omega(n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DecayModel {
    IdenticallyZero,
    Polynomial,
    Exponential,
    NoDecay,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Fit {
    pub slope: f64,
    pub intercept: f64,
    pub r2: f64,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct DecayReport {
    pub preferred: DecayModel,
    /// `log Δ_n` against `log n`.
    pub polynomial: Option<Fit>,
    /// `log Δ_n` against `n`.
    pub exponential: Option<Fit>,
}

fn least_squares(xs: &[f64], ys: &[f64]) -> Fit {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let r2 = if syy == 0.0 { 1.0 } else { sxy * sxy / (sxx * syy) };
    Fit { slope, intercept, r2 }
}

/// Fits `Δ_n` against polynomial and exponential decay models and reports
/// the better one; slopes near zero with poor fits read as no decay.
pub fn decay_profile(table: &GapTable) -> Result<DecayReport, AsymptoticsError> {
    let usable: Vec<&GapRow> = table.rows.iter().collect();
    if usable.len() < 8 {
        return Err(AsymptoticsError::InsufficientData { need: 8, have: usable.len() });
    }
    if usable.iter().all(|r| r.delta == 0.0) {
        return Ok(DecayReport {
            preferred: DecayModel::IdenticallyZero,
            polynomial: None,
            exponential: None,
        });
    }
    let pts: Vec<(f64, f64)> = usable
        .iter()
        .filter(|r| r.delta > 0.0)
        .map(|r| (r.n as f64, r.delta.ln()))
        .collect();
    if pts.len() < 8 {
        return Err(AsymptoticsError::InsufficientData { need: 8, have: pts.len() });
    }
    let xs_log: Vec<f64> = pts.iter().map(|(n, _)| n.ln()).collect();
    let xs_lin: Vec<f64> = pts.iter().map(|(n, _)| *n).collect();
    let ys: Vec<f64> = pts.iter().map(|(_, y)| *y).collect();
    let poly = least_squares(&xs_log, &ys);
    let expo = least_squares(&xs_lin, &ys);
    let preferred = if poly.slope > -0.5 && expo.slope > -0.05 {
        DecayModel::NoDecay
    } else if expo.r2 >= poly.r2 {
        DecayModel::Exponential
    } else {
        DecayModel::Polynomial
    };
    Ok(DecayReport { preferred, polynomial: Some(poly), exponential: Some(expo) })
}
