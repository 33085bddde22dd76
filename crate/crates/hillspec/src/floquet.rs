//! Quasi-derivative Floquet shooting.
//!
//! The singular equation `-y'' + (C + Q')y = λy` becomes, through the
//! quasi-derivative `u = y' - Qy`, the first-order system
//!
//! ```text
//! y' = Q y + u
//! u' = (-(λ - C) - Q²) y - Q u
//! ```
//!
//! with smooth coefficients (a change of `C` is a shift of λ). The module
//! integrates the fundamental matrix over `[0, π]` with an adaptive 4th-order
//! Magnus method: each accepted step multiplies by the exact exponential of a
//! traceless 2×2 matrix, so the Wronskian `det M ≡ 1` is preserved to
//! rounding and the free equation (constant coefficient matrix) is integrated
//! exactly regardless of λ. Eigenvalues are located by root finding on the
//! Hill discriminant `Δ(λ) - 2cos θ` or on `y₂(π, λ)`.

use crate::potential::{PotentialFourier, QEvaluator};
use num_complex::Complex64;
use thiserror::Error;

type Mat2 = [[Complex64; 2]; 2];

#[derive(Debug, Error)]
pub enum FloquetError {
    #[error("integration tolerance {0:e} outside [1e-13, 1e-6]")]
    BadTolerance(f64),
    #[error("step size underflow at x = {x:.8} (lambda = {lambda})")]
    StepFailure { x: f64, lambda: Complex64 },
    #[error("root polish stalled near lambda = {0}")]
    NoConvergence(Complex64),
    #[error("band-edge interlacing violated near n = {0}")]
    InterlacingViolation(usize),
    #[error("search window [{0}, {1}] too small: found {2} roots, need {3}")]
    WindowTooSmall(f64, f64, usize, usize),
    #[error("grid/seed eigenvalue search requires a real potential; seed complex potentials from the Galerkin matrices")]
    RealPotentialRequired,
}

/// Fundamental solutions at `x = π`: columns `(y₁, u₁)` and `(y₂, u₂)`.
#[derive(Debug, Clone)]
pub struct MonodromySolution {
    pub lambda: Complex64,
    /// `m[0] = [y₁(π), y₂(π)]`, `m[1] = [u₁(π), u₂(π)]`.
    pub m: Mat2,
    /// `Δ = y₁(π) + u₂(π)`, the trace of the monodromy matrix.
    pub delta: Complex64,
    /// `|det M − 1|`.
    pub wronskian_defect: f64,
}

fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut r = [[Complex64::ZERO; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    r
}

fn mat_sub(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut r = [[Complex64::ZERO; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            r[i][j] = a[i][j] - b[i][j];
        }
    }
    r
}

fn mat_det(a: &Mat2) -> Complex64 {
    a[0][0] * a[1][1] - a[0][1] * a[1][0]
}

fn mat_norm(a: &Mat2) -> f64 {
    a.iter()
        .flatten()
        .map(|z| z.norm())
        .fold(0.0, f64::max)
}

/// Coefficient matrix of the quasi-derivative system at `x`.
fn a_matrix(qe: &QEvaluator, lam_eff: Complex64, x: f64) -> Mat2 {
    let q = qe.eval(x);
    [[q, Complex64::ONE], [-lam_eff - q * q, -q]]
}

/// `exp(Ω)` for traceless 2×2 `Ω`: `Ω² = μ² I` with `μ² = Ω₀₀² + Ω₀₁ Ω₁₀`,
/// so `exp(Ω) = cosh(μ) I + sinhc(μ) Ω`.
fn expm_traceless(o: &Mat2) -> Mat2 {
    let mu2 = o[0][0] * o[0][0] + o[0][1] * o[1][0];
    let (ch, shc) = if mu2.norm() < 1e-8 {
        // series in μ²; enough terms for full precision at this size
        let ch = Complex64::ONE + mu2 * 0.5 + mu2 * mu2 / 24.0;
        let shc = Complex64::ONE + mu2 / 6.0 + mu2 * mu2 / 120.0;
        (ch, shc)
    } else {
        let mu = mu2.sqrt();
        (mu.cosh(), mu.sinh() / mu)
    };
    [
        [ch + shc * o[0][0], shc * o[0][1]],
        [shc * o[1][0], ch + shc * o[1][1]],
    ]
}

/// One 4th-order Magnus step of size `h` from `x`: two Gauss points plus the
/// leading commutator term.
fn magnus_step(qe: &QEvaluator, lam_eff: Complex64, x: f64, h: f64) -> Mat2 {
    const C_GAUSS: f64 = 0.288_675_134_594_812_9; // sqrt(3)/6
    let a1 = a_matrix(qe, lam_eff, x + h * (0.5 - C_GAUSS));
    let a2 = a_matrix(qe, lam_eff, x + h * (0.5 + C_GAUSS));
    let comm = mat_sub(&mat_mul(&a2, &a1), &mat_mul(&a1, &a2));
    let c1 = 0.5 * h;
    let c2 = h * h * 3f64.sqrt() / 12.0;
    let mut omega = [[Complex64::ZERO; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            omega[i][j] = (a1[i][j] + a2[i][j]) * c1 + comm[i][j] * c2;
        }
    }
    expm_traceless(&omega)
}

/// Integrates the fundamental system over `[0, π]`; step doubling controls the
/// local error to `tol`.
pub fn integrate_fundamental(
    p: &PotentialFourier,
    lambda: Complex64,
    tol: f64,
) -> Result<MonodromySolution, FloquetError> {
    if !(1e-13..=1e-6).contains(&tol) {
        return Err(FloquetError::BadTolerance(tol));
    }
    let qe = p.q_evaluator();
    let lam_eff = lambda - p.c();
    let pi = std::f64::consts::PI;

    let mut m: Mat2 = [[Complex64::ONE, Complex64::ZERO], [Complex64::ZERO, Complex64::ONE]];
    // det M in factored form, free of the cancellation the grown entries of
    // M would cause; each factor is the determinant of one accepted step
    let mut det = Complex64::ONE;
    let mut x = 0.0_f64;
    // scale resolving both the oscillation (√λ) and the potential variation
    let freq = lam_eff.norm().sqrt() + 2.0 * p.max_support() as f64 + 1.0;
    let mut h = (1.0 / freq).min(pi / 4.0);

    while x < pi {
        if h < 1e-12 {
            return Err(FloquetError::StepFailure { x, lambda });
        }
        if x + h > pi {
            h = pi - x;
        }
        let full = magnus_step(&qe, lam_eff, x, h);
        let half1 = magnus_step(&qe, lam_eff, x, 0.5 * h);
        let half2 = magnus_step(&qe, lam_eff, x + 0.5 * h, 0.5 * h);
        let fine = mat_mul(&half2, &half1);
        let err = mat_norm(&mat_sub(&fine, &full)) / mat_norm(&fine).max(1.0);

        if err <= tol {
            m = mat_mul(&fine, &m);
            det *= mat_det(&half1) * mat_det(&half2);
            x += h;
            let grow = if err > 0.0 {
                (0.9 * (tol / err).powf(0.2)).clamp(0.3, 4.0)
            } else {
                4.0
            };
            h = (h * grow).min(pi);
        } else {
            h *= (0.9 * (tol / err).powf(0.2)).clamp(0.1, 0.9);
        }
    }

    Ok(MonodromySolution {
        lambda,
        delta: m[0][0] + m[1][1],
        wronskian_defect: (det - Complex64::ONE).norm(),
        m,
    })
}

/// Hill discriminant `Δ(λ)`.
pub fn lyapunov(
    p: &PotentialFourier,
    lambda: Complex64,
    tol: f64,
) -> Result<Complex64, FloquetError> {
    Ok(integrate_fundamental(p, lambda, tol)?.delta)
}

/// Floquet multipliers: roots of `ρ² − Δρ + 1 = 0`, with `ρ⁺·ρ⁻ = 1`
/// enforced by deriving the second root as the reciprocal of the first.
pub fn characteristic_roots(sol: &MonodromySolution) -> (Complex64, Complex64) {
    let d = sol.delta;
    let mut s = (d * d - 4.0).sqrt();
    // pick the branch that avoids cancellation in Δ + s
    if d.re * s.re + d.im * s.im < 0.0 {
        s = -s;
    }
    let rho = (d + s) / 2.0;
    (rho, 1.0 / rho)
}

/// An eigenvalue located by the shooting engine.
#[derive(Debug, Clone, Copy)]
pub struct SpectralRoot {
    pub lambda: Complex64,
    pub multiplicity: u32,
    /// `|f|` at the reported point, `f` being the root function.
    pub residual: f64,
    /// False when the polish stalled; the best iterate is still reported.
    pub converged: bool,
}

/// Flattens roots into a multiplicity-expanded sorted list.
pub fn expand_roots(roots: &[SpectralRoot]) -> Vec<Complex64> {
    let mut out = Vec::new();
    for r in roots {
        for _ in 0..r.multiplicity {
            out.push(r.lambda);
        }
    }
    out.sort_by(|a, b| (a.re, a.im).partial_cmp(&(b.re, b.im)).unwrap());
    out
}

fn merge_tolerance(lambda: f64) -> f64 {
    1e-7 * (1.0 + lambda.abs())
}

/// Shooting data at a real λ: the root function value plus the entries used
/// for double-root refinement.
struct Shot {
    f: f64,
    y2: f64,
    u1: f64,
}

struct RealScan<'a> {
    p: &'a PotentialFourier,
    target: f64, // 2cosθ, or NaN for the Dirichlet function
    tol: f64,
}

impl RealScan<'_> {
    fn shoot(&self, lam: f64) -> Result<Shot, FloquetError> {
        let sol = integrate_fundamental(self.p, Complex64::new(lam, 0.0), self.tol)?;
        let f = if self.target.is_nan() {
            sol.m[0][1].re
        } else {
            sol.delta.re - self.target
        };
        Ok(Shot { f, y2: sol.m[0][1].re, u1: sol.m[1][0].re })
    }

    fn f(&self, lam: f64) -> Result<f64, FloquetError> {
        Ok(self.shoot(lam)?.f)
    }

    /// Bisection to a short bracket, then Newton with a central finite
    /// difference; returns the root and its residual.
    fn bisect_newton(&self, mut a: f64, mut b: f64) -> Result<(f64, f64, bool), FloquetError> {
        let mut fa = self.f(a)?;
        let fb = self.f(b)?;
        debug_assert!(fa * fb <= 0.0);
        if fa == 0.0 {
            return Ok((a, 0.0, true));
        }
        if fb == 0.0 {
            return Ok((b, 0.0, true));
        }
        for _ in 0..20 {
            let mid = 0.5 * (a + b);
            let fm = self.f(mid)?;
            if fm == 0.0 {
                return Ok((mid, 0.0, true));
            }
            if fa * fm < 0.0 {
                b = mid;
            } else {
                a = mid;
                fa = fm;
            }
        }
        let mut lam = 0.5 * (a + b);
        let mut best = (lam, f64::INFINITY);
        for _ in 0..30 {
            let fl = self.f(lam)?;
            if fl.abs() < best.1 {
                best = (lam, fl.abs());
            }
            if fl.abs() < 1e-13 {
                return Ok((lam, fl.abs(), true));
            }
            let hd = 1e-6 * (1.0 + lam.abs());
            let d = (self.f(lam + hd)? - self.f(lam - hd)?) / (2.0 * hd);
            if d == 0.0 {
                break;
            }
            let step = fl / d;
            lam -= step;
            if step.abs() < 1e-13 * (1.0 + lam.abs()) {
                let res = self.f(lam)?.abs();
                return Ok((lam, res, true));
            }
        }
        // Newton near a tangency can cycle; the bisected bracket is already
        // tight, so report the best iterate.
        Ok((best.0, best.1, best.1 < 1e-7))
    }

    /// Newton on a simple auxiliary function (y₂ or u₁) from a seed.
    /// Newton with a central finite difference, stagnation aware: iterates
    /// until the residual stops improving (the attainable accuracy is set by
    /// the integration noise, not by a fixed step size) and returns the best
    /// iterate, or None when no near-root was reached.
    fn newton_on<F>(&self, mut lam: f64, pick: F) -> Result<Option<f64>, FloquetError>
    where
        F: Fn(&Shot) -> f64,
    {
        let mut best = (lam, f64::INFINITY);
        let mut stale = 0;
        for _ in 0..30 {
            let fl = pick(&self.shoot(lam)?);
            if fl.abs() < best.1 {
                best = (lam, fl.abs());
                stale = 0;
            } else {
                stale += 1;
                if stale >= 3 {
                    break;
                }
            }
            let hd = 1e-7 * (1.0 + lam.abs());
            let d = (pick(&self.shoot(lam + hd)?) - pick(&self.shoot(lam - hd)?)) / (2.0 * hd);
            if d == 0.0 {
                break;
            }
            let step = fl / d;
            lam -= step;
            if step.abs() < 1e-12 * (1.0 + lam.abs()) {
                let f_final = pick(&self.shoot(lam)?).abs();
                if f_final < best.1 {
                    best = (lam, f_final);
                }
                break;
            }
        }
        Ok(if best.1 < 1e-5 { Some(best.0) } else { None })
    }
}

/// Eigenvalues of `L_θ` for a real potential: all roots of `Δ(λ) − 2cos θ`
/// in the real window, double roots (closed gaps) reported with
/// multiplicity 2.
///
/// Bracketing uses a grid of spacing ≤ 1/4; tangential (double) roots at
/// θ ∈ {0, π} are refined through the simple roots of `y₂(π, ·)` and
/// `u₁(π, ·)`, which both vanish at a closed gap. Roots closer than
/// `1e-7·(1+|λ|)` are merged with multiplicity 2.
pub fn theta_eigenvalues(
    p: &PotentialFourier,
    theta: f64,
    window: (f64, f64),
    tol: f64,
) -> Result<Vec<SpectralRoot>, FloquetError> {
    if !p.is_real() {
        return Err(FloquetError::RealPotentialRequired);
    }
    assert!((0.0..=std::f64::consts::PI).contains(&theta), "theta must lie in [0, pi]");
    let scan = RealScan { p, target: 2.0 * theta.cos(), tol };
    real_root_scan(&scan, window, theta_is_edge(theta))
}

fn theta_is_edge(theta: f64) -> bool {
    theta < 1e-9 || (std::f64::consts::PI - theta) < 1e-9
}

/// Dirichlet eigenvalues for a real potential: roots of `y₂(π, λ)`.
pub fn dirichlet_eigenvalues(
    p: &PotentialFourier,
    window: (f64, f64),
    tol: f64,
) -> Result<Vec<SpectralRoot>, FloquetError> {
    if !p.is_real() {
        return Err(FloquetError::RealPotentialRequired);
    }
    let scan = RealScan { p, target: f64::NAN, tol };
    real_root_scan(&scan, window, false)
}

fn real_root_scan(
    scan: &RealScan,
    window: (f64, f64),
    allow_double: bool,
) -> Result<Vec<SpectralRoot>, FloquetError> {
    let (a, b) = window;
    assert!(b > a, "empty window");
    let n = ((b - a) / 0.25).ceil() as usize + 1;
    let h = (b - a) / n as f64;
    let grid: Vec<f64> = (0..=n).map(|i| a + h * i as f64).collect();
    let vals: Vec<f64> = grid
        .iter()
        .map(|&x| scan.f(x))
        .collect::<Result<_, _>>()?;

    let mut roots: Vec<SpectralRoot> = Vec::new();

    // sign changes -> simple roots
    for i in 0..n {
        if vals[i] == 0.0 {
            add_root(&mut roots, grid[i], 1, 0.0, true);
        } else if vals[i] * vals[i + 1] < 0.0 {
            let (lam, res, ok) = scan.bisect_newton(grid[i], grid[i + 1])?;
            add_root(&mut roots, lam, 1, res, ok);
        }
    }
    if vals[n] == 0.0 {
        add_root(&mut roots, grid[n], 1, 0.0, true);
    }

    // tangency candidates: interior local minima of |f| without a sign change
    if allow_double {
        for i in 1..n {
            let (fl, fm, fr) = (vals[i - 1], vals[i], vals[i + 1]);
            if fm.abs() < 1.0
                && fm.abs() <= fl.abs()
                && fm.abs() <= fr.abs()
                && fl * fm > 0.0
                && fm * fr > 0.0
            {
                refine_tangency(scan, grid[i - 1], grid[i], grid[i + 1], &mut roots)?;
            }
        }
    }

    roots.sort_by(|x, y| x.lambda.re.partial_cmp(&y.lambda.re).unwrap());
    Ok(roots)
}

/// Near a tangency of `Δ ∓ 2` both `y₂(π)` and `u₁(π)` vanish at a closed
/// gap; their simple roots are well conditioned where the double root of the
/// discriminant is not. If the two refined roots separate beyond the merge
/// tolerance the gap is open and the two simple edges are bracketed instead.
fn add_root(roots: &mut Vec<SpectralRoot>, lam: f64, mult: u32, residual: f64, converged: bool) {
    for r in roots.iter_mut() {
        if (r.lambda.re - lam).abs() < merge_tolerance(lam) {
            r.multiplicity = (r.multiplicity + mult).min(2);
            r.residual = r.residual.max(residual);
            r.converged &= converged;
            return;
        }
    }
    roots.push(SpectralRoot {
        lambda: Complex64::new(lam, 0.0),
        multiplicity: mult,
        residual,
        converged,
    });
}

fn refine_tangency(
    scan: &RealScan,
    left: f64,
    mid: f64,
    right: f64,
    roots: &mut Vec<SpectralRoot>,
) -> Result<(), FloquetError> {
    let lam_d = scan.newton_on(mid, |s| s.y2)?;
    let lam_n = scan.newton_on(mid, |s| s.u1)?;
    let (lam_d, lam_n) = match (lam_d, lam_n) {
        (Some(d), Some(nn)) if d > left && d < right && nn > left && nn < right => (d, nn),
        _ => return Ok(()), // spurious candidate (e.g. shallow dip far from a root)
    };
    let center = 0.5 * (lam_d + lam_n);
    if (lam_d - lam_n).abs() < merge_tolerance(center) {
        let res = scan.f(center)?.abs();
        // genuine double root of the discriminant has a tiny residual here
        if res < 1e-6 {
            add_root(roots, center, 2, res, true);
        }
        return Ok(());
    }
    // open sub-grid gap: the two simple edge roots of f lie at or near the
    // y₂ and u₁ roots (exactly at them for even potentials), so Newton on f
    // from those points resolves the pair where no sign change exists
    let insert_simple = |roots: &mut Vec<SpectralRoot>, lam: f64, res: f64| -> bool {
        if roots.iter().any(|r| (r.lambda.re - lam).abs() < merge_tolerance(lam)) {
            return false;
        }
        roots.push(SpectralRoot {
            lambda: Complex64::new(lam, 0.0),
            multiplicity: 1,
            residual: res,
            converged: true,
        });
        true
    };
    let mut added = 0;
    for c in [lam_d, lam_n] {
        if let Some(r) = scan.newton_on(c, |s| s.f)? {
            if r > left && r < right {
                let res = scan.f(r)?.abs();
                if res < 1e-7 * (1.0 + r.abs()) && insert_simple(roots, r, res) {
                    added += 1;
                }
            }
        }
    }
    if added < 2 {
        // fallback: bracket the flanks when a sign change is present
        let lo = lam_d.min(lam_n);
        let hi = lam_d.max(lam_n);
        if scan.f(left)? * scan.f(lo)? < 0.0 {
            let (lam, res, ok) = scan.bisect_newton(left, lo)?;
            add_root(roots, lam, 1, res, ok);
        }
        if scan.f(hi)? * scan.f(right)? < 0.0 {
            let (lam, res, ok) = scan.bisect_newton(hi, right)?;
            add_root(roots, lam, 1, res, ok);
        }
    }
    Ok(())
}

/// Polishes eigenvalue seeds (typically Galerkin matrix eigenvalues of a
/// complex potential) by complex Newton iteration on `Δ(λ) − 2cos θ`
/// (`theta = None` selects the Dirichlet function `y₂(π, λ)` instead).
pub fn polish_seeded(
    p: &PotentialFourier,
    theta: Option<f64>,
    seeds: &[Complex64],
    tol: f64,
) -> Result<Vec<SpectralRoot>, FloquetError> {
    let f = |lam: Complex64| -> Result<Complex64, FloquetError> {
        let sol = integrate_fundamental(p, lam, tol)?;
        Ok(match theta {
            Some(t) => sol.delta - 2.0 * t.cos(),
            None => sol.m[0][1],
        })
    };
    let mut roots: Vec<SpectralRoot> = Vec::new();
    for &seed in seeds {
        let mut lam = seed;
        let mut best = (lam, f64::INFINITY);
        let mut converged = false;
        for _ in 0..40 {
            let fl = f(lam)?;
            if fl.norm() < best.1 {
                best = (lam, fl.norm());
            }
            let hd = 1e-6 * (1.0 + lam.norm());
            let d = (f(lam + hd)? - f(lam - hd)?) / (2.0 * hd);
            if d.norm() == 0.0 {
                break;
            }
            let step = fl / d;
            lam -= step;
            if step.norm() < 1e-12 * (1.0 + lam.norm()) {
                best = (lam, f(lam)?.norm());
                converged = true;
                break;
            }
        }
        let (lam, residual) = best;
        let mut merged = false;
        for r in roots.iter_mut() {
            if (r.lambda - lam).norm() < merge_tolerance(lam.norm()) {
                r.multiplicity += 1;
                merged = true;
                break;
            }
        }
        if !merged {
            roots.push(SpectralRoot { lambda: lam, multiplicity: 1, residual, converged });
        }
    }
    roots.sort_by(|x, y| {
        (x.lambda.re, x.lambda.im)
            .partial_cmp(&(y.lambda.re, y.lambda.im))
            .unwrap()
    });
    Ok(roots)
}

/// Band edges of a real potential: `λ₀` and `(λₙ⁻, λₙ⁺)` for `n = 1..=n_max`,
/// from θ = 0 (even n) and θ = π (odd n) eigenvalues.
#[derive(Debug, Clone)]
pub struct BandEdges {
    pub lambda0: f64,
    /// `(λₙ⁻, λₙ⁺)` indexed by `n-1`.
    pub pairs: Vec<(f64, f64)>,
}

impl BandEdges {
    pub fn gap(&self, n: usize) -> f64 {
        let (lo, hi) = self.pairs[n - 1];
        hi - lo
    }
}

pub fn band_edges(
    p: &PotentialFourier,
    n_max: usize,
    tol: f64,
) -> Result<BandEdges, FloquetError> {
    if !p.is_real() {
        return Err(FloquetError::RealPotentialRequired);
    }
    let qe = p.q_evaluator();
    let qsup = qe.sup_norm_estimate();
    let c = p.c().re;
    // λ₀ ≥ C − sup|Q|² from the quadratic form of the quasi-derivative system
    let lo = c - qsup * qsup - 1.0;
    let hi = (n_max as f64 + 0.5).powi(2) + qsup * qsup + c.abs() + 2.0;

    let even = expand_roots(&theta_eigenvalues(p, 0.0, (lo, hi), tol)?);
    let odd = expand_roots(&theta_eigenvalues(p, std::f64::consts::PI, (lo, hi), tol)?);

    let need_even = n_max / 2;
    let need_odd = n_max.div_ceil(2);
    if even.len() < 1 + 2 * need_even {
        return Err(FloquetError::WindowTooSmall(lo, hi, even.len(), 1 + 2 * need_even));
    }
    if odd.len() < 2 * need_odd {
        return Err(FloquetError::WindowTooSmall(lo, hi, odd.len(), 2 * need_odd));
    }

    let lambda0 = even[0].re;
    let mut pairs = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let (lo_n, hi_n) = if n % 2 == 1 {
            let j = n - 1; // odd list: (λ₁∓, λ₃∓, …)
            (odd[j].re, odd[j + 1].re)
        } else {
            let j = n - 1; // even list: (λ₀, λ₂∓, λ₄∓, …)
            (even[j].re, even[j + 1].re)
        };
        pairs.push((lo_n, hi_n));
    }

    // interlacing λ₀ < λ₁⁻ ≤ λ₁⁺ < λ₂⁻ ≤ …
    let slack = 1e-9;
    let mut prev = lambda0;
    for (n, &(lo_n, hi_n)) in pairs.iter().enumerate() {
        if lo_n < prev - slack || hi_n < lo_n - slack {
            return Err(FloquetError::InterlacingViolation(n + 1));
        }
        prev = hi_n;
    }
    Ok(BandEdges { lambda0, pairs })
}
