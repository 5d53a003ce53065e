//! Unit conventions and conversions.
//!
//! Internally every frequency-like quantity is an *angular* frequency in
//! rad/s and every time is in seconds. Ordinary (cycle) frequencies in Hz
//! appear only at the boundaries: reported cavity linewidths, free spectral
//! ranges, and user-facing configuration.
//!
//! The one subtle convention is the cavity decay rate. `κ` is the *field*
//! (amplitude) decay rate in rad/s, so the intracavity intensity decays as
//! `e^{-2κt}` and the Lorentzian intensity spectrum has a FWHM of `2κ` in
//! angular units, i.e. `κ/π` in Hz:
//!
//! ```text
//! linewidth_fwhm_hz = kappa / π        kappa = π · linewidth_fwhm_hz
//! ```
//!
//! This is the single place where that conversion is defined.

use std::f64::consts::{PI, TAU};

/// Speed of light in vacuum (m/s).
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Convert an ordinary frequency in Hz to an angular frequency in rad/s.
#[inline]
pub fn hz_to_angular(f_hz: f64) -> f64 {
    TAU * f_hz
}

/// Convert an angular frequency in rad/s to an ordinary frequency in Hz.
#[inline]
pub fn angular_to_hz(omega: f64) -> f64 {
    omega / TAU
}

/// Field decay rate `κ` (rad/s) for a cavity with the given intensity FWHM
/// linewidth in Hz.
#[inline]
pub fn kappa_from_linewidth(linewidth_fwhm_hz: f64) -> f64 {
    PI * linewidth_fwhm_hz
}

/// Intensity FWHM linewidth in Hz for a cavity with field decay rate `κ`
/// (rad/s).
#[inline]
pub fn linewidth_from_kappa(kappa: f64) -> f64 {
    kappa / PI
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn linewidth_kappa_round_trip() {
        let lw = 4.8e8;
        assert_relative_eq!(linewidth_from_kappa(kappa_from_linewidth(lw)), lw, max_relative = 1e-15);
    }

    #[test]
    fn kappa_convention_matches_ring_down() {
        // A field decaying as e^{-κt} has the Lorentzian amplitude spectrum
        // 1/(κ - iω); the intensity FWHM of 1/(κ²+ω²) is 2κ rad/s = κ/π Hz.
        let kappa = 1.0e9;
        let half_max_omega = kappa; // |1/(κ-iω)|² falls to half at ω = κ
        let fwhm_hz = 2.0 * half_max_omega / TAU;
        assert_relative_eq!(linewidth_from_kappa(kappa), fwhm_hz, max_relative = 1e-15);
    }
}
