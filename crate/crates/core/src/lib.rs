//! Simulator and design toolkit for impedance-matched cavity quantum memories
//! based on atomic frequency combs (AFC).
//!
//! An AFC memory stores a light pulse in an inhomogeneously broadened atomic
//! ensemble whose absorption line has been shaped into a comb of narrow teeth
//! with spacing `Δ`. The comb rephases after `2π/Δ` and re-emits the pulse as
//! an echo. Placing the crystal in an asymmetric one-sided cavity and matching
//! the input-mirror transmission to the round-trip absorption ("impedance
//! matching") absorbs the input completely and boosts the echo efficiency to
//! the dephasing-limited value, even at single-pass depths far below one.
//!
//! The crate is organized around that physics:
//!
//! - [`model`] — parameter types and closed-form relations (matching
//!   condition, cavity finesse, linewidth, averaged depth, dephasing factor).
//! - [`analytic`] — closed-form field and efficiency expressions: the
//!   high-finesse reflection `(κ−Γ)/(κ+Γ)`, the round-trip reflection of the
//!   lossy asymmetric cavity, the single-pass echo bound, and the total
//!   memory efficiency.
//! - [`comb`] — discretized comb spectral density `n(ω)`, its time-domain
//!   kernel `ñ(t)`, and the brute-force dephasing factor.
//! - [`dynamics`] — time-domain integration of the coupled cavity-field /
//!   atomic-polarization equations, coupling calibration, and echo
//!   efficiency extraction.
//! - [`sweep`] — parameter sweeps, matching-point search and loss
//!   sensitivity tables, including the bundled efficiency-vs-R1 figure data.
//!
//! All internal frequencies are angular (rad/s) and all times are seconds;
//! see [`units`] for the conversion conventions.

pub mod analytic;
pub mod comb;
pub mod dynamics;
pub mod error;
pub mod model;
pub mod sweep;
pub mod units;

pub use error::{Error, Result};
pub use model::{CavityParams, CombParams, DerivedCavity, ToothShape};
