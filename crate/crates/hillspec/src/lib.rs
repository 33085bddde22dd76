//! Spectra of Hill–Schrödinger operators `-y'' + v(x) y` on `[0, π]` with
//! singular π-periodic potentials `v = C + Q'`, where `Q` is a mean-zero
//! trigonometric polynomial given by finitely many Fourier coefficients.
//!
//! Two independent engines compute the periodic (`Per+`), antiperiodic
//! (`Per-`), θ-quasiperiodic and Dirichlet spectra:
//!
//! * [`floquet`] — quasi-derivative shooting: an adaptive Magnus integrator
//!   for the first-order system in `(y, u)` with `u = y' - Qy`, followed by
//!   root finding on the Hill discriminant `Δ(λ) - 2cos θ` or on `y₂(π, λ)`.
//! * [`fourier_ops`] — truncated Fourier (Galerkin) matrices in the
//!   exponential basis (`Per±`, θ) or the sine basis (Dirichlet), with
//!   convergence control by cutoff doubling.
//!
//! On top of those, [`localization`] certifies where the spectrum lives
//! (rectangle plus per-index disks) via Hilbert–Schmidt norms of the
//! symmetrized perturbation `K_λ V K_λ`, and [`asymptotics`] tabulates
//! spectral gaps, Dirichlet deviations and their decay profiles.

pub mod asymptotics;
pub mod floquet;
pub mod fourier_ops;
pub mod localization;
pub mod pipeline;
pub mod potential;
pub mod report;

pub use potential::PotentialFourier;

/// Reported in machine-readable outputs so tables are self-describing.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
