//! Numerical model of a Ramsey interferometer whose middle cavity holds a
//! uniformly accelerated two-level atom coupled to a single field mode.
//!
//! The atom is dressed by a classical laser (detuning Δ, light shift
//! δω = 2κ²/Δ) and dragged along a hyperbolic trajectory. First-order
//! perturbation theory gives a photon-emission amplitude `I(a)` expressible
//! through incomplete gamma functions of complex order; the emitted photon
//! decoheres the interferometer arms and shaves the fringe visibility by
//! δV(a) = 1 − V(a).
//!
//! Crate layout:
//! - [`specfun`] — complex log-gamma, digamma, incomplete gamma (plus the
//!   quadrature machinery the amplitude evaluation shares).
//! - [`physics`] — laboratory parameters, dressed-state algebra, Rindler
//!   kinematics, Unruh temperature.
//! - [`amplitude`] — closed-form `I(a)`, an independent oscillatory-quadrature
//!   oracle, thermal/finite-time limit formulas.
//! - [`interferometer`] — the four-stage Ramsey pipeline on the truncated
//!   {|0⟩,|1⟩} ⊗ {|g⟩,|e⟩} basis, reduced density matrix, visibility.
//! - [`sweep`] — deterministic parameter sweeps over acceleration / coupling
//!   grids, parallel when the `parallel` feature is active (default).

pub mod amplitude;
pub mod constants;
pub mod interferometer;
pub mod physics;
pub mod specfun;
pub mod sweep;

pub use num_complex::Complex64;
