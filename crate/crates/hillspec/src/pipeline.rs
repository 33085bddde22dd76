//! Orchestration: cross-engine spectra and the validation suite.
//!
//! The two engines are independent by construction. The shooting engine
//! integrates the quasi-derivative system and finds roots of the
//! discriminant; the Galerkin engine diagonalizes truncated Fourier
//! matrices. Agreement of their eigenvalues is the main correctness check
//! for both.

use crate::asymptotics::{self, gap_table, GapTable};
use crate::floquet::{self, expand_roots};
use crate::fourier_ops::{converged_spectrum, BcSpec, FourierError};
use crate::localization::{self, DiskRadius};
use crate::potential::PotentialFourier;
use crate::report::SpectrumReport;
use num_complex::Complex64;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("shooting engine: {0}")]
    Floquet(#[from] floquet::FloquetError),
    #[error("matrix engine: {0}")]
    Fourier(#[from] FourierError),
    #[error("gap analysis: {0}")]
    Asymptotics(#[from] asymptotics::AsymptoticsError),
    #[error("engines disagree on the number of eigenvalues: shooting {shooting}, matrix {matrix}")]
    CountMismatch { shooting: usize, matrix: usize },
}

/// Number of eigenvalues the `bc` spectrum contributes up to index `n_max`:
/// one root per even or odd pair for the periodic conditions, one per `n`
/// for Dirichlet.
pub fn eigenvalue_count(bc: BcSpec, n_max: u32) -> usize {
    match bc {
        BcSpec::PerPlus | BcSpec::Theta(_) => 2 * n_max as usize + 1,
        BcSpec::PerMinus => 2 * n_max as usize,
        BcSpec::Dir => n_max as usize,
    }
}

/// Upper window edge for the shooting scan: the midpoint of the first clear
/// gap in the matrix eigenvalue list past `count` entries, so near-degenerate
/// pairs are never cut in half.
fn scan_window(gal: &[Complex64], count: usize) -> (f64, f64) {
    let lo = gal.first().map(|z| z.re).unwrap_or(0.0) - 1.0;
    for i in count..gal.len() {
        if gal[i].re - gal[i - 1].re > 0.5 {
            return (lo, 0.5 * (gal[i].re + gal[i - 1].re));
        }
    }
    let hi = gal.last().map(|z| z.re).unwrap_or(1.0) + 0.25;
    (lo, hi)
}

/// Computes the lowest `count` eigenvalues with both engines and reports
/// the shooting values together with the per-row disagreement.
pub fn cross_engine_spectrum(
    p: &PotentialFourier,
    bc: BcSpec,
    count: usize,
    tol: f64,
) -> Result<SpectrumReport, PipelineError> {
    assert!(count >= 1);
    let gal = converged_spectrum(p, bc, count + 2, tol.min(1e-8))?;
    let gal_ev = &gal.eigenvalues;

    let shoot_tol = 1e-11;
    let roots = if p.is_real() {
        let window = scan_window(gal_ev, count);
        match bc.theta() {
            Some(t) => floquet::theta_eigenvalues(p, t, window, shoot_tol)?,
            None => floquet::dirichlet_eigenvalues(p, window, shoot_tol)?,
        }
    } else {
        let seeds: Vec<Complex64> = gal_ev.iter().take(count).copied().collect();
        floquet::polish_seeded(p, bc.theta(), &seeds, shoot_tol)?
    };
    let flat = expand_roots(&roots);
    if flat.len() < count {
        return Err(PipelineError::CountMismatch { shooting: flat.len(), matrix: count });
    }
    let shoot: Vec<Complex64> = flat.into_iter().take(count).collect();

    let residuals: Vec<f64> = {
        let mut rs = Vec::new();
        for r in &roots {
            for _ in 0..r.multiplicity {
                rs.push(r.residual);
            }
        }
        rs.truncate(count);
        rs
    };
    let agreement: Vec<f64> = shoot
        .iter()
        .zip(gal_ev)
        .map(|(s, g)| (s - g).norm())
        .collect();

    let mut rep =
        SpectrumReport::from_eigenvalues("floquet+galerkin", &bc.label(), &shoot, &residuals);
    rep.cross_agreement = Some(agreement);
    rep.notes.push(format!("matrix cutoff K = {}", gal.k_final));
    Ok(rep)
}

/// Gap table from cross-validated spectra up to index `n_max`.
pub fn cross_engine_gap_table(
    p: &PotentialFourier,
    n_max: u32,
    tol: f64,
) -> Result<GapTable, PipelineError> {
    let pp = cross_engine_spectrum(p, BcSpec::PerPlus, eigenvalue_count(BcSpec::PerPlus, n_max), tol)?;
    let pm =
        cross_engine_spectrum(p, BcSpec::PerMinus, eigenvalue_count(BcSpec::PerMinus, n_max), tol)?;
    let dir = cross_engine_spectrum(p, BcSpec::Dir, eigenvalue_count(BcSpec::Dir, n_max), tol)?;
    Ok(gap_table(
        &pp.eigenvalues(),
        &pm.eigenvalues(),
        &dir.eigenvalues(),
        n_max,
        "floquet+galerkin",
    )?)
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub potential_is_real: bool,
    pub suites: Vec<SuiteResult>,
    pub pass: bool,
}

impl ValidationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization is infallible")
    }
}

fn suite(name: &str, outcome: Result<String, String>) -> SuiteResult {
    match outcome {
        Ok(detail) => SuiteResult { name: name.into(), pass: true, detail },
        Err(detail) => SuiteResult { name: name.into(), pass: false, detail },
    }
}

fn lemma_harmonic_suite() -> Result<String, String> {
    for n in 1..=1000 {
        let hs = localization::harmonic_sums(n);
        if !hs.holds1 || !hs.holds2 {
            return Err(format!("bound violated at n = {n}"));
        }
    }
    Ok("S1/S2 bounds hold for n = 1..=1000".into())
}

fn lemma_shifted_suite() -> Result<String, String> {
    let mut c: f64 = 0.0;
    for n in 0..=50 {
        let mut b = 2.0;
        while b <= 1024.0 {
            let s = localization::shifted_sums(n, b);
            c = c.max(s.c1).max(s.c2);
            b *= 2.0;
        }
    }
    if c <= 100.0 {
        Ok(format!("uniform constant C = {c:.3} <= 100 over the grid"))
    } else {
        Err(format!("uniform constant C = {c:.3} exceeds 100"))
    }
}

fn wronskian_suite(p: &PotentialFourier) -> Result<String, String> {
    let mut worst: f64 = 0.0;
    for i in 0..200 {
        let lam = Complex64::new(-10.0 + 410.0 * i as f64 / 199.0, 0.0);
        let sol = floquet::integrate_fundamental(p, lam, 1e-10)
            .map_err(|e| format!("integration failed at λ = {lam}: {e}"))?;
        worst = worst.max(sol.wronskian_defect);
    }
    if worst < 1e-9 {
        Ok(format!("max |det M − 1| = {worst:.2e} over 200 grid points"))
    } else {
        Err(format!("max |det M − 1| = {worst:.2e} >= 1e-9"))
    }
}

fn hermiticity_suite(p: &PotentialFourier) -> Result<String, String> {
    for bc in [BcSpec::PerPlus, BcSpec::PerMinus, BcSpec::Dir] {
        let op = crate::fourier_ops::build_matrix(p, bc, 16).map_err(|e| e.to_string())?;
        let mut herm = true;
        for r in 0..op.a.nrows() {
            for s in 0..op.a.ncols() {
                if (op.a[(r, s)] - op.a[(s, r)].conj()).norm() > 1e-12 {
                    herm = false;
                }
            }
        }
        if herm != p.is_real() {
            return Err(format!(
                "{}: hermitian = {herm} but potential real = {}",
                bc.label(),
                p.is_real()
            ));
        }
    }
    Ok(format!("hermitian iff real (real = {})", p.is_real()))
}

fn cross_engine_suite(p: &PotentialFourier) -> Result<String, String> {
    let mut worst: f64 = 0.0;
    for bc in [BcSpec::PerPlus, BcSpec::PerMinus, BcSpec::Dir] {
        let rep = cross_engine_spectrum(p, bc, 10, 1e-8).map_err(|e| e.to_string())?;
        for (row, d) in rep.rows.iter().zip(rep.cross_agreement.as_ref().unwrap()) {
            let lam = Complex64::new(row.re, row.im).norm();
            let allowed = 1e-6f64.max(1e-8 * lam);
            if *d > allowed {
                return Err(format!(
                    "{}: eigenvalue {} disagrees by {d:.2e} (allowed {allowed:.2e})",
                    bc.label(),
                    row.index
                ));
            }
            worst = worst.max(*d);
        }
    }
    Ok(format!("10 eigenvalues per bc agree across engines; worst gap {worst:.2e}"))
}

fn interlacing_suite(p: &PotentialFourier) -> Result<String, String> {
    if !p.is_real() {
        return Ok("skipped: potential is not real".into());
    }
    let table = cross_engine_gap_table(p, 10, 1e-8).map_err(|e| e.to_string())?;
    if table.interlacing_holds(1e-9) {
        Ok("interlacing holds through n = 10".into())
    } else {
        Err("interlacing violated".into())
    }
}

fn conjugation_suite(p: &PotentialFourier) -> Result<String, String> {
    if !p.is_real() {
        return Ok("skipped: potential is not real".into());
    }
    for i in 0..20 {
        let lam = Complex64::new(-5.0 + 10.0 * i as f64, 1.5);
        let a = floquet::integrate_fundamental(p, lam, 1e-10).map_err(|e| e.to_string())?;
        let b = floquet::integrate_fundamental(p, lam.conj(), 1e-10).map_err(|e| e.to_string())?;
        if (a.delta.conj() - b.delta).norm() > 1e-8 * (1.0 + a.delta.norm()) {
            return Err(format!("Δ(conj λ) != conj Δ(λ) at λ = {lam}"));
        }
    }
    Ok("Δ commutes with conjugation on 20 sample points".into())
}

fn localization_suite(p: &PotentialFourier) -> Result<String, String> {
    // smallest threshold with all boundary samples below 1, so counts are
    // backed by the norm criterion
    let mut chosen = None;
    for n in [4u32, 8, 16, 32, 64] {
        let mut ok = true;
        for bc in [BcSpec::PerPlus, BcSpec::PerMinus, BcSpec::Dir] {
            for lam in [
                Complex64::new(-(n as f64), 0.0),
                Complex64::new((n as f64).powi(2) + n as f64, 0.0),
                Complex64::new(
                    ((n as f64) + 1.0).powi(2) + ((n as f64) + 1.0) / 4.0,
                    0.0,
                ),
            ] {
                match localization::kvk_hs_norm(p, bc, lam) {
                    Ok(h) => ok &= h.norm < 1.0,
                    Err(_) => ok = false,
                }
            }
        }
        if ok {
            chosen = Some(n);
            break;
        }
    }
    let n = chosen.ok_or_else(|| "no threshold <= 64 brings all HS samples below 1".to_string())?;
    for bc in [BcSpec::PerPlus, BcSpec::PerMinus, BcSpec::Dir] {
        let count = eigenvalue_count(bc, 2 * n + 1);
        let cs = converged_spectrum(p, bc, count, 1e-8).map_err(|e| e.to_string())?;
        let rep =
            localization::certify_localization(p, bc, n, &cs.eigenvalues, DiskRadius::Default);
        if !rep.pass {
            return Err(format!("{}: N = {n}: {:?}", bc.label(), rep.notes));
        }
    }
    if !localization::disks_disjoint(200) {
        return Err("disks with radius n/4 are not pairwise disjoint".into());
    }
    Ok(format!("counts certified at threshold N = {n} for all boundary conditions"))
}

/// Runs every property suite against one potential. Pure and deterministic;
/// the report is the acceptance gate for the `validate` command.
pub fn validate(p: &PotentialFourier) -> ValidationReport {
    let mut suites = vec![
        suite("lemma_harmonic_sums", lemma_harmonic_suite()),
        suite("lemma_shifted_sums", lemma_shifted_suite()),
        suite("hermiticity", hermiticity_suite(p)),
    ];
    if p.is_real() {
        suites.push(suite("wronskian", wronskian_suite(p)));
        suites.push(suite("conjugation", conjugation_suite(p)));
    }
    suites.push(suite("cross_engine", cross_engine_suite(p)));
    suites.push(suite("interlacing", interlacing_suite(p)));
    suites.push(suite("localization", localization_suite(p)));
    let pass = suites.iter().all(|s| s.pass);
    ValidationReport { potential_is_real: p.is_real(), suites, pass }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::potential::{mathieu_cos2x, PotentialFourier};

    #[test]
    fn counts_per_condition() {
        assert_eq!(eigenvalue_count(BcSpec::PerPlus, 5), 11);
        assert_eq!(eigenvalue_count(BcSpec::PerMinus, 5), 10);
        assert_eq!(eigenvalue_count(BcSpec::Dir, 5), 5);
    }

    #[test]
    fn free_cross_engine_exact() {
        let p = PotentialFourier::zero();
        let rep = cross_engine_spectrum(&p, BcSpec::PerPlus, 5, 1e-10).unwrap();
        let expect = [0.0, 4.0, 4.0, 16.0, 16.0];
        for (row, want) in rep.rows.iter().zip(expect) {
            assert!((row.re - want).abs() < 1e-10, "{} vs {want}", row.re);
            assert_eq!(row.im, 0.0);
        }
        for d in rep.cross_agreement.unwrap() {
            assert!(d < 1e-10);
        }
    }

    #[test]
    fn mathieu_cross_engine_band_order() {
        let p = mathieu_cos2x();
        let rep = cross_engine_spectrum(&p, BcSpec::PerPlus, 5, 1e-8).unwrap();
        // a_0, b_2, a_2 then the pair near 16
        assert!((rep.rows[0].re - (-0.45513860410741364)).abs() < 1e-7);
        assert!((rep.rows[1].re - 3.917024772998471).abs() < 1e-7);
        assert!((rep.rows[2].re - 4.371300982735086).abs() < 1e-7);
        for d in rep.cross_agreement.unwrap() {
            assert!(d < 1e-6);
        }
    }

    #[test]
    fn free_validate_passes() {
        let rep = validate(&PotentialFourier::zero());
        assert!(rep.pass, "{}", rep.to_json());
    }

    #[test]
    fn validate_deterministic() {
        let p = mathieu_cos2x();
        let a = validate(&p).to_json();
        let b = validate(&p).to_json();
        assert_eq!(a, b);
    }
}
