//! Closed-form field and efficiency expressions for the cavity memory.
//!
//! Two pictures are covered. The *mode model* treats the cavity as a single
//! mode with field decay rate `κ` and ensemble absorption rate `Γ`; on
//! resonance the reflected amplitude is `(κ-Γ)/(κ+Γ)` and the echo amplitude
//! under rephasing is `-2Γ√η_F/(κ+Γ)`. The *round-trip picture* keeps the
//! mirror reflectivities explicitly and sums all round trips through the
//! absorbing crystal, giving the exact on-resonance reflection and the total
//! memory efficiency of the asymmetric cavity.
//!
//! All efficiencies are defined with respect to intensities; echo amplitudes
//! carry their physical sign (the echo is π out of phase with the input).

use crate::error::{Error, Result};
use crate::model;

/// On-resonance steady-state response of the cavity-ensemble system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SteadyStateResult {
    /// Amplitude reflection coefficient (real on resonance).
    pub reflection_amplitude: f64,
    /// Intensity reflection `|reflection_amplitude|²`.
    pub reflection_intensity: f64,
    /// Everything not reflected: ensemble absorption plus back-mirror loss.
    pub absorbed_fraction: f64,
}

impl SteadyStateResult {
    fn from_amplitude(reflection_amplitude: f64) -> Self {
        let reflection_intensity = reflection_amplitude * reflection_amplitude;
        Self {
            reflection_amplitude,
            reflection_intensity,
            absorbed_fraction: 1.0 - reflection_intensity,
        }
    }
}

/// Total memory efficiency split into its dephasing and cavity factors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EfficiencyBreakdown {
    /// Total intensity efficiency `η`.
    pub eta_total: f64,
    /// Dephasing factor `η_F` from the finite tooth width.
    pub eta_dephasing: f64,
    /// Cavity enhancement/escape factor `η / η_F`.
    pub eta_cavity: f64,
    /// Signed echo amplitude relative to the input, `-√η`.
    pub echo_amplitude_ratio: f64,
}

/// Reflected amplitude of the high-finesse cavity-ensemble system on
/// resonance, `(κ - Γ)/(κ + Γ)`.
///
/// Vanishes at the impedance matching point `κ = Γ`, where absorption per
/// round trip mimics a second identical mirror.
pub fn reflection_high_finesse(gamma_abs: f64, kappa: f64) -> Result<f64> {
    if !(kappa > 0.0) || !kappa.is_finite() {
        return Err(Error::InvalidParameter {
            name: "kappa",
            reason: "cavity decay rate must be positive",
            value: kappa,
        });
    }
    if !(gamma_abs >= 0.0) || !gamma_abs.is_finite() {
        return Err(Error::InvalidParameter {
            name: "gamma_abs",
            reason: "absorption rate must be nonnegative",
            value: gamma_abs,
        });
    }
    Ok((kappa - gamma_abs) / (kappa + gamma_abs))
}

/// Echo amplitude of the high-finesse system relative to the input,
/// `-2Γ√η_F/(κ+Γ)`.
///
/// This is the readout expression of the mode model; at impedance matching
/// it reduces to `-√η_F`, i.e. the echo efficiency is limited only by the
/// comb dephasing.
pub fn echo_amplitude_high_finesse(gamma_abs: f64, kappa: f64, eta_f: f64) -> Result<f64> {
    if !(kappa > 0.0) || !kappa.is_finite() {
        return Err(Error::InvalidParameter {
            name: "kappa",
            reason: "cavity decay rate must be positive",
            value: kappa,
        });
    }
    if !(gamma_abs >= 0.0) || !gamma_abs.is_finite() {
        return Err(Error::InvalidParameter {
            name: "gamma_abs",
            reason: "absorption rate must be nonnegative",
            value: gamma_abs,
        });
    }
    if !(0.0..=1.0).contains(&eta_f) {
        return Err(Error::InvalidParameter {
            name: "eta_f",
            reason: "dephasing factor must lie in [0, 1]",
            value: eta_f,
        });
    }
    Ok(-2.0 * gamma_abs * eta_f.sqrt() / (kappa + gamma_abs))
}

/// Exact on-resonance amplitude reflection of the asymmetric cavity with an
/// absorbing crystal, from the sum over all round trips:
///
/// ```text
/// r = (-sqrt(R1) + sqrt(R2) e^{-d̃}) / (1 - sqrt(R1 R2) e^{-d̃})
/// ```
///
/// `d_tilde` is the period-averaged single-pass *intensity* depth, so the
/// round-trip amplitude attenuation through the crystal is `e^{-d̃}`.
pub fn reflection_exact(r1: f64, r2: f64, d_tilde: f64) -> Result<f64> {
    let round_trip = (r1 * r2).sqrt() * (-d_tilde).exp();
    if round_trip >= 1.0 {
        return Err(Error::UnphysicalGain { round_trip });
    }
    Ok((-r1.sqrt() + r2.sqrt() * (-d_tilde).exp()) / (1.0 - round_trip))
}

/// Full on-resonance steady state of the round-trip picture.
pub fn steady_state_exact(r1: f64, r2: f64, d_tilde: f64) -> Result<SteadyStateResult> {
    Ok(SteadyStateResult::from_amplitude(reflection_exact(r1, r2, d_tilde)?))
}

/// Forward echo efficiency of the bare crystal (no cavity),
/// `η = η_F · d̃² e^{-d̃}`.
///
/// The amplitude `d̃ e^{-d̃/2}` integrates re-emission over all absorption
/// points along the crystal; re-absorption caps the efficiency at
/// `4e^{-2} ≈ 54%` at `d̃ = 2`.
pub fn single_pass_efficiency(d_tilde: f64, eta_f: f64) -> f64 {
    debug_assert!(d_tilde >= 0.0, "negative optical depth");
    debug_assert!((0.0..=1.0).contains(&eta_f), "eta_f out of [0, 1]");
    eta_f * d_tilde * d_tilde * (-d_tilde).exp()
}

/// Total memory efficiency of the asymmetric cavity from the round-trip sum:
///
/// ```text
/// sqrt(η) = 2 d̃ e^{-d̃} T1 sqrt(R2) sqrt(η_F) / (1 - sqrt(R1 R2) e^{-d̃})²
/// ```
///
/// The formula is a perturbative round-trip sum; for extreme parameters it
/// can exceed one, in which case an [`Error::OutOfValidity`] is raised
/// rather than clamping silently.
pub fn total_efficiency(r1: f64, r2: f64, d_tilde: f64, finesse_a: f64) -> Result<EfficiencyBreakdown> {
    if !(finesse_a > 1.0) {
        return Err(Error::InvalidParameter {
            name: "finesse_a",
            reason: "comb finesse must exceed 1",
            value: finesse_a,
        });
    }
    let round_trip = (r1 * r2).sqrt() * (-d_tilde).exp();
    if round_trip >= 1.0 {
        return Err(Error::UnphysicalGain { round_trip });
    }
    let eta_dephasing = model::eta_f(finesse_a);
    let t1 = 1.0 - r1;
    let denom = 1.0 - round_trip;
    let sqrt_eta =
        2.0 * d_tilde * (-d_tilde).exp() * t1 * r2.sqrt() * eta_dephasing.sqrt() / (denom * denom);
    if sqrt_eta > 1.0 {
        return Err(Error::OutOfValidity { sqrt_eta });
    }
    let eta_total = sqrt_eta * sqrt_eta;
    Ok(EfficiencyBreakdown {
        eta_total,
        eta_dephasing,
        eta_cavity: eta_total / eta_dephasing,
        echo_amplitude_ratio: -sqrt_eta,
    })
}

/// Limiting total efficiency for `sqrt(R1) = 1 - ε`, `R2 = 1`, `d̃ ≪ 1`:
/// `η = (2 d̃ √η_F / (ε + d̃))²`, recovering `η = η_F` at matching `ε = d̃`.
pub fn total_efficiency_limit(epsilon: f64, d_tilde: f64, eta_f: f64) -> Result<f64> {
    if epsilon == 0.0 && d_tilde == 0.0 {
        return Err(Error::DegenerateInput);
    }
    if !(epsilon >= 0.0) || !(d_tilde >= 0.0) {
        return Err(Error::InvalidParameter {
            name: "epsilon/d_tilde",
            reason: "must be nonnegative",
            value: epsilon.min(d_tilde),
        });
    }
    let sqrt_eta = 2.0 * d_tilde * eta_f.sqrt() / (epsilon + d_tilde);
    Ok(sqrt_eta * sqrt_eta)
}
