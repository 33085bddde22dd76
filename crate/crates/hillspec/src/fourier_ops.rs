//! Truncated Fourier (Galerkin) matrices for `L_{Per±}`, `L_θ` and `L_{Dir}`.
//!
//! In the exponential basis the operator acts on coefficients as
//! `h_k = k² y_k + Σ_m V(k−m) y_m + C y_k` over even (`Per+`) or odd (`Per-`)
//! integers; in the sine basis as
//! `h_k = k² y_k + (1/√2) Σ_m (Ṽ(|k−m|) − Ṽ(k+m)) y_m + C y_k` over `ℕ`.
//! Truncation at cutoff `K` gives dense matrices whose low eigenvalues
//! approximate the spectrum; convergence is controlled by doubling `K` until
//! the requested eigenvalues stop moving.

use crate::potential::PotentialFourier;
use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FourierError {
    #[error("cutoff K = {0} too small (need K >= 4)")]
    CutoffTooSmall(usize),
    #[error("dense eigensolver failed to converge (K = {0})")]
    EigensolverFailure(usize),
    #[error("spectrum not converged at K = {k}: movement {movement:e} > {tol:e}")]
    NotConverged { k: usize, movement: f64, tol: f64 },
}

/// Boundary condition selector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum BcSpec {
    PerPlus,
    PerMinus,
    Dir,
    /// `y(π) = e^{iθ} y(0)` on the quasi-derivative pair, `θ ∈ [0, π]`.
    Theta(f64),
}

impl BcSpec {
    pub fn label(&self) -> String {
        match self {
            BcSpec::PerPlus => "per+".into(),
            BcSpec::PerMinus => "per-".into(),
            BcSpec::Dir => "dir".into(),
            BcSpec::Theta(t) => format!("theta={t}"),
        }
    }

    /// The θ value realizing this condition in the Floquet picture
    /// (None for Dirichlet).
    pub fn theta(&self) -> Option<f64> {
        match self {
            BcSpec::PerPlus => Some(0.0),
            BcSpec::PerMinus => Some(std::f64::consts::PI),
            BcSpec::Theta(t) => Some(*t),
            BcSpec::Dir => None,
        }
    }

    /// Basis indices at cutoff `K`, ascending.
    pub fn indices(&self, k_cut: usize) -> Vec<i64> {
        let k = k_cut as i64;
        match self {
            BcSpec::PerPlus | BcSpec::Theta(_) => (-k..=k).filter(|j| j % 2 == 0).collect(),
            BcSpec::PerMinus => (-k..=k).filter(|j| j % 2 != 0).collect(),
            BcSpec::Dir => (1..=k).collect(),
        }
    }

    /// Diagonal frequency of basis index `j` (the θ condition shifts the
    /// even lattice by `θ/π`).
    pub fn frequency(&self, j: i64) -> f64 {
        match self {
            BcSpec::Theta(t) => j as f64 + t / std::f64::consts::PI,
            _ => j as f64,
        }
    }
}

impl std::str::FromStr for BcSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "per+" | "per_plus" | "perplus" => Ok(BcSpec::PerPlus),
            "per-" | "per_minus" | "perminus" => Ok(BcSpec::PerMinus),
            "dir" | "dirichlet" => Ok(BcSpec::Dir),
            other => {
                if let Some(v) = other.strip_prefix("theta=") {
                    let t: f64 = v.parse().map_err(|_| format!("bad theta value: {v}"))?;
                    if !(0.0..=std::f64::consts::PI).contains(&t) {
                        return Err(format!("theta {t} outside [0, pi]"));
                    }
                    Ok(BcSpec::Theta(t))
                } else {
                    Err(format!("unknown boundary condition: {other} (expected per+|per-|dir|theta=<v>)"))
                }
            }
        }
    }
}

/// Dense truncated matrix realization of `L_bc`.
#[derive(Debug, Clone)]
pub struct TruncatedOperator {
    pub bc: BcSpec,
    pub k_cut: usize,
    pub indices: Vec<i64>,
    pub a: DMatrix<Complex64>,
    /// True iff the potential is real; selects the Hermitian eigensolver.
    pub hermitian: bool,
}

/// Builds the truncated matrix at cutoff `K`.
pub fn build_matrix(
    p: &PotentialFourier,
    bc: BcSpec,
    k_cut: usize,
) -> Result<TruncatedOperator, FourierError> {
    if k_cut < 4 {
        return Err(FourierError::CutoffTooSmall(k_cut));
    }
    let indices = bc.indices(k_cut);
    let n = indices.len();
    let c = p.c();
    let mut a = DMatrix::from_element(n, n, Complex64::ZERO);

    match bc {
        BcSpec::Dir => {
            let vt = p.v_tilde(2 * k_cut);
            let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
            for (r, &j) in indices.iter().enumerate() {
                for (s, &m) in indices.iter().enumerate() {
                    let mut entry =
                        (vt[(j - m).unsigned_abs() as usize] - vt[(j + m) as usize]) * inv_sqrt2;
                    if r == s {
                        entry += Complex64::new((j * j) as f64, 0.0) + c;
                    }
                    a[(r, s)] = entry;
                }
            }
        }
        _ => {
            for (r, &j) in indices.iter().enumerate() {
                for (s, &m) in indices.iter().enumerate() {
                    if r == s {
                        let f = bc.frequency(j);
                        a[(r, s)] = Complex64::new(f * f, 0.0) + c;
                    } else {
                        a[(r, s)] = p.v_coefficient(j - m);
                    }
                }
            }
        }
    }

    Ok(TruncatedOperator { bc, k_cut, indices, a, hermitian: p.is_real() })
}

/// All eigenvalues of the truncated matrix, sorted by `(Re, Im)`.
/// Hermitian path for real potentials, complex Schur otherwise.
pub fn eigenvalues(op: &TruncatedOperator) -> Result<Vec<Complex64>, FourierError> {
    let mut ev: Vec<Complex64> = if op.hermitian {
        let se = nalgebra::SymmetricEigen::new(op.a.clone());
        se.eigenvalues.iter().map(|&x| Complex64::new(x, 0.0)).collect()
    } else {
        let schur = nalgebra::Schur::try_new(op.a.clone(), 1e-14, 100_000)
            .ok_or(FourierError::EigensolverFailure(op.k_cut))?;
        let (_, t) = schur.unpack();
        (0..t.nrows()).map(|i| t[(i, i)]).collect()
    };
    ev.sort_by(|x, y| (x.re, x.im).partial_cmp(&(y.re, y.im)).unwrap());
    Ok(ev)
}

/// Spectrum fragment with truncation-control provenance.
#[derive(Debug, Clone, Serialize)]
pub struct ConvergedSpectrum {
    pub bc_label: String,
    /// Lowest `count` eigenvalues, sorted by `(Re, Im)`.
    pub eigenvalues: Vec<Complex64>,
    /// Final cutoff at which the values are reported.
    pub k_final: usize,
    /// Per-eigenvalue movement between the last two cutoffs.
    pub residuals: Vec<f64>,
}

/// Symmetric Hausdorff distance between two finite spectra.
pub fn hausdorff(a: &[Complex64], b: &[Complex64]) -> f64 {
    let one_sided = |xs: &[Complex64], ys: &[Complex64]| {
        xs.iter()
            .map(|x| ys.iter().map(|y| (x - y).norm()).fold(f64::INFINITY, f64::min))
            .fold(0.0, f64::max)
    };
    one_sided(a, b).max(one_sided(b, a))
}

/// Doubles `K` from `max(32, 4·count)` until the lowest `count` eigenvalues
/// move (Hausdorff) by less than `tol`; `K` is capped at 4096.
pub fn converged_spectrum(
    p: &PotentialFourier,
    bc: BcSpec,
    count: usize,
    tol: f64,
) -> Result<ConvergedSpectrum, FourierError> {
    converged_spectrum_from(p, bc, count, tol, 4 * count.max(8))
}

/// As `converged_spectrum` but with an explicit starting cutoff.
pub fn converged_spectrum_from(
    p: &PotentialFourier,
    bc: BcSpec,
    count: usize,
    tol: f64,
    k_start: usize,
) -> Result<ConvergedSpectrum, FourierError> {
    assert!(count >= 1);
    let lowest = |k: usize| -> Result<Vec<Complex64>, FourierError> {
        let ev = eigenvalues(&build_matrix(p, bc, k)?)?;
        Ok(ev.into_iter().take(count).collect())
    };

    let mut k = k_start.max(4);
    let mut prev = lowest(k)?;
    loop {
        let k2 = 2 * k;
        let cur = lowest(k2)?;
        let movement = hausdorff(&prev, &cur);
        if movement < tol {
            let residuals = prev
                .iter()
                .zip(&cur)
                .map(|(a, b)| (a - b).norm())
                .collect();
            return Ok(ConvergedSpectrum {
                bc_label: bc.label(),
                eigenvalues: cur,
                k_final: k2,
                residuals,
            });
        }
        if k2 >= 4096 {
            return Err(FourierError::NotConverged { k: k2, movement, tol });
        }
        prev = cur;
        k = k2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::potential::{mathieu_cos2x, truncated_sawtooth};
    use std::collections::BTreeMap;

    #[test]
    fn cutoff_too_small() {
        assert!(matches!(
            build_matrix(&PotentialFourier::zero(), BcSpec::PerPlus, 3),
            Err(FourierError::CutoffTooSmall(3))
        ));
    }

    #[test]
    fn free_matrices_are_diagonal() {
        let p = PotentialFourier::zero();
        for bc in [BcSpec::PerPlus, BcSpec::PerMinus, BcSpec::Dir] {
            let op = build_matrix(&p, bc, 6).unwrap();
            for (r, &j) in op.indices.iter().enumerate() {
                for (s, _) in op.indices.iter().enumerate() {
                    let expect = if r == s {
                        Complex64::new((j * j) as f64, 0.0)
                    } else {
                        Complex64::ZERO
                    };
                    assert_eq!(op.a[(r, s)], expect);
                }
            }
        }
    }

    #[test]
    fn mathieu_per_plus_k2_matrix() {
        // indices (−2, 0, 2), V(±2) = 1: [[4,1,0],[1,0,1],[0,1,4]]
        let op = build_matrix(&mathieu_cos2x(), BcSpec::PerPlus, 4).unwrap();
        // embed: at K=4 indices are (−4,−2,0,2,4); check the central block
        let idx: Vec<i64> = op.indices.clone();
        let pos = |k: i64| idx.iter().position(|&j| j == k).unwrap();
        let at = |j: i64, m: i64| op.a[(pos(j), pos(m))];
        assert_eq!(at(-2, -2), Complex64::new(4.0, 0.0));
        assert_eq!(at(0, 0), Complex64::ZERO);
        assert!((at(-2, 0) - Complex64::ONE).norm() < 1e-15);
        assert!((at(0, 2) - Complex64::ONE).norm() < 1e-15);
        assert_eq!(at(-2, 2), Complex64::ZERO);
    }

    #[test]
    fn hand_3x3_eigenvalues() {
        // [[4,1,0],[1,0,1],[0,1,4]] has eigenvalues {2−√6, 4, 2+√6}
        let a = DMatrix::from_row_slice(
            3,
            3,
            &[
                Complex64::new(4.0, 0.0),
                Complex64::ONE,
                Complex64::ZERO,
                Complex64::ONE,
                Complex64::ZERO,
                Complex64::ONE,
                Complex64::ZERO,
                Complex64::ONE,
                Complex64::new(4.0, 0.0),
            ],
        );
        let op = TruncatedOperator {
            bc: BcSpec::PerPlus,
            k_cut: 4,
            indices: vec![-2, 0, 2],
            a,
            hermitian: true,
        };
        let ev = eigenvalues(&op).unwrap();
        let sqrt6 = 6f64.sqrt();
        let expect = [2.0 - sqrt6, 4.0, 2.0 + sqrt6];
        for (got, want) in ev.iter().zip(expect) {
            assert!((got.re - want).abs() < 1e-12, "{got} vs {want}");
        }
    }

    #[test]
    fn mathieu_dirichlet_matrix_entries() {
        let p = mathieu_cos2x();
        let op = build_matrix(&p, BcSpec::Dir, 4).unwrap();
        // A[1,1] = 1 + (1/√2)(Ṽ(0) − Ṽ(2)) = 1 − (1/√2)·2·(1/√2) = 0
        assert!(op.a[(0, 0)].norm() < 1e-14, "A[1,1] = {}", op.a[(0, 0)]);
        // A[1,2] = (1/√2)(Ṽ(1) − Ṽ(3)); both odd coefficients vanish for sin 2x
        let vt = p.v_tilde(8);
        let expect = (vt[1] - vt[3]) * std::f64::consts::FRAC_1_SQRT_2;
        assert!((op.a[(0, 1)] - expect).norm() < 1e-14);
    }

    #[test]
    fn free_spectra_exact() {
        let p = PotentialFourier::zero();
        let ev = eigenvalues(&build_matrix(&p, BcSpec::PerPlus, 4).unwrap()).unwrap();
        let expect = [0.0, 4.0, 4.0, 16.0, 16.0];
        for (got, want) in ev.iter().zip(expect) {
            assert!((got.re - want).abs() < 1e-12);
        }
        let ev = eigenvalues(&build_matrix(&p, BcSpec::Dir, 4).unwrap()).unwrap();
        let expect = [1.0, 4.0, 9.0, 16.0];
        for (got, want) in ev.iter().zip(expect) {
            assert!((got.re - want).abs() < 1e-12);
        }
    }

    #[test]
    fn theta_interpolates_per_conditions() {
        let p = mathieu_cos2x();
        let per_plus = eigenvalues(&build_matrix(&p, BcSpec::PerPlus, 32).unwrap()).unwrap();
        let theta0 = eigenvalues(&build_matrix(&p, BcSpec::Theta(0.0), 32).unwrap()).unwrap();
        for (a, b) in per_plus.iter().zip(&theta0).take(8) {
            assert!((a - b).norm() < 1e-12);
        }
        let per_minus = eigenvalues(&build_matrix(&p, BcSpec::PerMinus, 32).unwrap()).unwrap();
        let theta_pi =
            eigenvalues(&build_matrix(&p, BcSpec::Theta(std::f64::consts::PI), 33).unwrap())
                .unwrap();
        for (a, b) in per_minus.iter().zip(&theta_pi).take(8) {
            assert!((a - b).norm() < 1e-10, "{a} vs {b}");
        }
    }

    #[test]
    fn converged_spectrum_free_is_exact() {
        let cs = converged_spectrum(&PotentialFourier::zero(), BcSpec::PerPlus, 10, 1e-10)
            .unwrap();
        let expect = [0.0, 4.0, 4.0, 16.0, 16.0, 36.0, 36.0, 64.0, 64.0, 100.0];
        for (got, want) in cs.eigenvalues.iter().zip(expect) {
            assert!((got.re - want).abs() < 1e-12);
        }
        assert!(cs.residuals.iter().all(|&r| r < 1e-12));
    }

    #[test]
    fn sawtooth_converges_with_decreasing_movement() {
        let p = truncated_sawtooth(20);
        let mut prev = f64::INFINITY;
        let mut k = 64;
        let lowest = |k: usize| {
            eigenvalues(&build_matrix(&p, BcSpec::PerPlus, k).unwrap())
                .unwrap()
                .into_iter()
                .take(10)
                .collect::<Vec<_>>()
        };
        let mut last = lowest(k);
        for _ in 0..3 {
            let next = lowest(2 * k);
            let d = hausdorff(&last, &next);
            // movement shrinks until it bottoms out at rounding level
            assert!(d <= prev || d < 1e-9, "movement should shrink: {d} vs {prev}");
            prev = d;
            last = next;
            k *= 2;
        }
        assert!(prev < 1e-7, "final movement {prev} too large");
    }

    #[test]
    fn constant_shift_covariance() {
        let p0 = mathieu_cos2x();
        let mut q = BTreeMap::new();
        for (k, v) in p0.support() {
            q.insert(k, v);
        }
        let shifted = PotentialFourier::new(Complex64::new(2.5, 0.0), q).unwrap();
        let e0 = eigenvalues(&build_matrix(&p0, BcSpec::Dir, 16).unwrap()).unwrap();
        let e1 = eigenvalues(&build_matrix(&shifted, BcSpec::Dir, 16).unwrap()).unwrap();
        for (a, b) in e0.iter().zip(&e1) {
            assert!((b - a - Complex64::new(2.5, 0.0)).norm() < 1e-10);
        }
    }

    #[test]
    fn determinism() {
        let p = truncated_sawtooth(10);
        let a = converged_spectrum(&p, BcSpec::PerMinus, 8, 1e-8).unwrap();
        let b = converged_spectrum(&p, BcSpec::PerMinus, 8, 1e-8).unwrap();
        assert_eq!(a.eigenvalues, b.eigenvalues);
        assert_eq!(a.k_final, b.k_final);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_potential() -> impl Strategy<Value = PotentialFourier> {
            (
                proptest::collection::vec((1i64..=6, -1.0f64..1.0, -1.0f64..1.0), 1..4),
                proptest::bool::ANY,
            )
                .prop_map(|(entries, make_real)| {
                    let mut q = BTreeMap::new();
                    for (j, re, im) in entries {
                        let k = 2 * j;
                        q.insert(k, Complex64::new(re, im));
                        if make_real {
                            q.insert(-k, Complex64::new(re, -im));
                        } else {
                            q.insert(-k, Complex64::new(re + 0.25, im));
                        }
                    }
                    PotentialFourier::new(Complex64::ZERO, q).unwrap()
                })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(24))]

            #[test]
            fn hermitian_iff_real(p in arb_potential()) {
                let op = build_matrix(&p, BcSpec::PerPlus, 12).unwrap();
                let mut herm = true;
                for r in 0..op.a.nrows() {
                    for s in 0..op.a.ncols() {
                        if (op.a[(r, s)] - op.a[(s, r)].conj()).norm() > 1e-12 {
                            herm = false;
                        }
                    }
                }
                prop_assert_eq!(herm, p.is_real());
            }

            #[test]
            fn real_potential_real_spectrum(p in arb_potential()) {
                if p.is_real() {
                    let ev = eigenvalues(&build_matrix(&p, BcSpec::PerMinus, 12).unwrap()).unwrap();
                    for v in ev {
                        prop_assert!(v.im == 0.0);
                    }
                }
            }
        }
    }
}
