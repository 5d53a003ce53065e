//! Static parameter types and closed-form parameter relations.
//!
//! Everything here is a pure function of immutable value types: mirror and
//! comb parameters in, derived quantities (finesse, linewidth, matching
//! condition, averaged depth, dephasing factor, cooperativity) out.

use crate::error::{Error, Result};
use crate::units::{self, SPEED_OF_LIGHT};

/// Mirror reflectivities and geometry of the memory cavity.
///
/// `r1` and `r2` are *intensity* reflectivities. The memory operates in the
/// asymmetric regime `r1 < r2 ≈ 1`: the back mirror closes the cavity and
/// the input mirror sets the coupling. `length` is the one-way cavity length
/// in meters.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct CavityParams {
    pub r1: f64,
    pub r2: f64,
    pub length: f64,
}

/// Non-fatal validation findings, reported alongside otherwise valid
/// parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidationWarning {
    pub message: String,
}

impl CavityParams {
    pub fn new(r1: f64, r2: f64, length: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&r1) || !r1.is_finite() {
            return Err(Error::InvalidParameter {
                name: "r1",
                reason: "intensity reflectivity must lie in [0, 1]",
                value: r1,
            });
        }
        if !(0.0..=1.0).contains(&r2) || !r2.is_finite() {
            return Err(Error::InvalidParameter {
                name: "r2",
                reason: "intensity reflectivity must lie in [0, 1]",
                value: r2,
            });
        }
        if !(length > 0.0) || !length.is_finite() {
            return Err(Error::InvalidParameter {
                name: "length",
                reason: "cavity length must be positive",
                value: length,
            });
        }
        Ok(Self { r1, r2, length })
    }

    /// Soft checks: sweeps legitimately cross `r1 = r2`, so the asymmetric
    /// regime is a warning rather than an invariant.
    pub fn warnings(&self) -> Vec<ValidationWarning> {
        let mut w = Vec::new();
        if self.r1 >= self.r2 {
            w.push(ValidationWarning {
                message: format!(
                    "cavity is not in the asymmetric memory regime: r1 = {} >= r2 = {}",
                    self.r1, self.r2
                ),
            });
        }
        w
    }

    /// Transmission of the input coupling mirror, `T1 = 1 - R1`.
    #[inline]
    pub fn t1(&self) -> f64 {
        1.0 - self.r1
    }
}

/// Tooth profile of the atomic frequency comb.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ToothShape {
    /// Gaussian teeth; the dephasing factor follows `e^{-7/F_A²}`.
    Gaussian,
    /// Rectangular teeth of width `γ`; gives the plain `d̃ = d/F_A` bookkeeping.
    Square,
}

impl std::fmt::Display for ToothShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ToothShape::Gaussian => write!(f, "gaussian"),
            ToothShape::Square => write!(f, "square"),
        }
    }
}

/// Atomic frequency comb description.
///
/// The comb has teeth of FWHM `γ = delta / finesse_a` spaced by `delta`
/// (both angular frequencies, rad/s), peak single-pass intensity depth
/// `peak_depth`, and `num_teeth` teeth centered on the carrier. `gamma_h`
/// is the homogeneous linewidth (a rate, rad/s).
///
/// Width convention: `γ` is a full width at half maximum and the comb
/// finesse is `F_A = Δ/γ`. This is the convention under which the
/// Gaussian-tooth dephasing factor takes the form `e^{-7/F_A²}`.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct CombParams {
    pub delta: f64,
    pub finesse_a: f64,
    pub peak_depth: f64,
    pub tooth_shape: ToothShape,
    pub num_teeth: u32,
    pub gamma_h: f64,
}

impl CombParams {
    pub fn new(
        delta: f64,
        finesse_a: f64,
        peak_depth: f64,
        tooth_shape: ToothShape,
        num_teeth: u32,
        gamma_h: f64,
    ) -> Result<Self> {
        if !(delta > 0.0) || !delta.is_finite() {
            return Err(Error::InvalidParameter {
                name: "delta",
                reason: "tooth spacing must be positive",
                value: delta,
            });
        }
        if !(finesse_a > 1.0) || !finesse_a.is_finite() {
            return Err(Error::InvalidParameter {
                name: "finesse_a",
                reason: "comb finesse must exceed 1",
                value: finesse_a,
            });
        }
        if !(peak_depth >= 0.0) || !peak_depth.is_finite() {
            return Err(Error::InvalidParameter {
                name: "peak_depth",
                reason: "peak optical depth must be nonnegative",
                value: peak_depth,
            });
        }
        if num_teeth < 3 || num_teeth % 2 == 0 {
            return Err(Error::InvalidParameter {
                name: "num_teeth",
                reason: "tooth count must be an odd integer >= 3",
                value: num_teeth as f64,
            });
        }
        if !(gamma_h >= 0.0) || !gamma_h.is_finite() {
            return Err(Error::InvalidParameter {
                name: "gamma_h",
                reason: "homogeneous linewidth must be nonnegative",
                value: gamma_h,
            });
        }
        Ok(Self {
            delta,
            finesse_a,
            peak_depth,
            tooth_shape,
            num_teeth,
            gamma_h,
        })
    }

    /// Tooth FWHM `γ = Δ / F_A` (rad/s).
    #[inline]
    pub fn tooth_width(&self) -> f64 {
        self.delta / self.finesse_a
    }

    /// Rephasing (echo) time `2π/Δ` in seconds.
    #[inline]
    pub fn echo_time(&self) -> f64 {
        std::f64::consts::TAU / self.delta
    }

    /// Full comb span `num_teeth · Δ` (rad/s), the effective inhomogeneous
    /// width seen by a pulse.
    #[inline]
    pub fn span(&self) -> f64 {
        self.num_teeth as f64 * self.delta
    }
}

/// Resonator quantities derived from [`CavityParams`].
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct DerivedCavity {
    /// Free spectral range `c / (2L)` (Hz).
    pub free_spectral_range: f64,
    /// Cavity finesse `π (R1 R2)^{1/4} / (1 - sqrt(R1 R2))`.
    pub finesse_c: f64,
    /// Intensity FWHM linewidth `FSR / finesse` (Hz).
    pub linewidth: f64,
    /// Field decay rate `κ = π · linewidth` (rad/s).
    pub kappa: f64,
    /// Round-trip time `2L/c` (s).
    pub round_trip_time: f64,
}

/// Cavity finesse of a two-mirror resonator,
/// `F_C = π (r1 r2)^{1/4} / (1 - sqrt(r1 r2))`.
///
/// Not to be confused with the comb finesse `F_A`.
pub fn cavity_finesse(r1: f64, r2: f64) -> Result<f64> {
    let product = r1 * r2;
    if !(0.0..1.0).contains(&product) {
        if product == 1.0 {
            return Err(Error::DegenerateCavity);
        }
        return Err(Error::InvalidParameter {
            name: "r1*r2",
            reason: "reflectivity product must lie in [0, 1)",
            value: product,
        });
    }
    Ok(std::f64::consts::PI * product.powf(0.25) / (1.0 - product.sqrt()))
}

/// Derive FSR, finesse, linewidth, field decay rate and round-trip time
/// from the mirror parameters.
///
/// In the high-finesse limit (`r1, r2 >= 0.99`) the resulting `kappa`
/// agrees with the mirror-loss rate `(1-r1)·c/(4L) + (1-r2)·c/(4L)` to
/// better than 1%.
pub fn derive_cavity(cavity: &CavityParams) -> Result<DerivedCavity> {
    let finesse_c = cavity_finesse(cavity.r1, cavity.r2)?;
    let free_spectral_range = SPEED_OF_LIGHT / (2.0 * cavity.length);
    let linewidth = free_spectral_range / finesse_c;
    Ok(DerivedCavity {
        free_spectral_range,
        finesse_c,
        linewidth,
        kappa: units::kappa_from_linewidth(linewidth),
        round_trip_time: 2.0 * cavity.length / SPEED_OF_LIGHT,
    })
}

/// Input-mirror reflectivity that impedance-matches a back mirror `r2` and a
/// period-averaged single-pass depth `d_tilde`:
/// `sqrt(R1) = sqrt(R2) e^{-d̃}`, i.e. `R1 = R2 e^{-2d̃}`.
pub fn matched_r1(r2: f64, d_tilde: f64) -> f64 {
    debug_assert!(r2 > 0.0 && r2 <= 1.0, "r2 out of range");
    debug_assert!(d_tilde >= 0.0, "negative optical depth");
    r2 * (-2.0 * d_tilde).exp()
}

/// Single-pass intensity depth averaged over one comb period.
///
/// For square teeth the average is exactly `d / F_A`. For Gaussian teeth of
/// FWHM `γ = Δ/F_A` the spectral average of unit-height Gaussians is larger
/// by `sqrt(π / (4 ln 2)) ≈ 1.0645`; both conventions are exposed because
/// `d̃ = d/F_A` bookkeeping in the literature implicitly assumes square
/// teeth.
pub fn averaged_depth(comb: &CombParams) -> f64 {
    let base = comb.peak_depth / comb.finesse_a;
    match comb.tooth_shape {
        ToothShape::Square => base,
        ToothShape::Gaussian => {
            base * (std::f64::consts::PI / (4.0 * std::f64::consts::LN_2)).sqrt()
        }
    }
}

/// Dephasing factor `η_F ≈ e^{-7/F_A²}` for Gaussian teeth, the echo
/// efficiency limit set by the finite tooth width. Clamped to [0, 1].
pub fn eta_f(finesse_a: f64) -> f64 {
    debug_assert!(finesse_a > 0.0, "comb finesse must be positive");
    (-7.0 / (finesse_a * finesse_a)).exp().clamp(0.0, 1.0)
}

/// Cooperativity `C = Γ/κ` in the high-finesse mirror mapping `C = 2d̃/T1`.
///
/// At impedance matching `T1 ≈ 2d̃` and the cooperativity is one: perfect
/// absorption at an effective optical depth of one.
pub fn cooperativity(d_tilde: f64, t1: f64) -> Result<f64> {
    if !(t1 > 0.0) || !t1.is_finite() {
        return Err(Error::InvalidParameter {
            name: "t1",
            reason: "mirror transmission must be positive",
            value: t1,
        });
    }
    Ok(2.0 * d_tilde / t1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};

    fn comb(shape: ToothShape, d: f64, fa: f64) -> CombParams {
        CombParams::new(1.0e6, fa, d, shape, 21, 0.0).unwrap()
    }

    #[test]
    fn finesse_paper_point() {
        // Matched asymmetric cavity of the worked example.
        assert_abs_diff_eq!(cavity_finesse(0.8187, 0.999).unwrap(), 31.2405559, epsilon = 1e-6);
    }

    #[test]
    fn finesse_no_mirrors_is_zero() {
        assert_eq!(cavity_finesse(0.0, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn finesse_symmetric_point() {
        assert_abs_diff_eq!(cavity_finesse(0.9, 0.9).unwrap(), 29.8037647974, epsilon = 1e-9);
    }

    #[test]
    fn finesse_degenerate_cavity_errors() {
        assert!(matches!(cavity_finesse(1.0, 1.0), Err(Error::DegenerateCavity)));
    }

    #[test]
    fn derived_cavity_matches_linewidth_examples() {
        let matched = matched_r1(0.999, 0.1);
        let cav = CavityParams::new(matched, 0.999, 0.01).unwrap();
        let d = derive_cavity(&cav).unwrap();
        assert_relative_eq!(d.free_spectral_range, 14.9896229e9, max_relative = 1e-12);
        // ~480 MHz cavity width for the 1 cm worked example.
        assert_abs_diff_eq!(d.linewidth, 482.113108e6, epsilon = 1e3);
        assert_relative_eq!(d.round_trip_time, 0.02 / SPEED_OF_LIGHT, max_relative = 1e-15);

        let cav99 = CavityParams::new(0.99, 0.99, 0.01).unwrap();
        let d99 = derive_cavity(&cav99).unwrap();
        assert_abs_diff_eq!(d99.finesse_c, 312.5845223, epsilon = 1e-6);
        assert_abs_diff_eq!(d99.linewidth, 47.9538231e6, epsilon = 1e2);
    }

    #[test]
    fn derived_cavity_self_consistency() {
        let cav = CavityParams::new(0.8179120223249039, 0.999, 0.01).unwrap();
        let d = derive_cavity(&cav).unwrap();
        assert_relative_eq!(d.linewidth * d.finesse_c, d.free_spectral_range, max_relative = 1e-12);
        assert_relative_eq!(d.kappa, std::f64::consts::PI * d.linewidth, max_relative = 1e-15);
    }

    #[test]
    fn kappa_convention_vs_mirror_loss_rate() {
        // High-finesse check of the κ = π·linewidth convention: the mirror
        // loss rate (T1 + T2)·c/(4L) must agree to 1% once both
        // reflectivities reach 0.99.
        for (r1, r2) in [(0.99, 0.99), (0.995, 0.999), (0.999, 0.9995)] {
            let cav = CavityParams::new(r1, r2, 0.01).unwrap();
            let d = derive_cavity(&cav).unwrap();
            let loss_rate = ((1.0 - r1) + (1.0 - r2)) * SPEED_OF_LIGHT / (4.0 * cav.length);
            assert_relative_eq!(loss_rate, d.kappa, max_relative = 0.01);
        }
    }

    #[test]
    fn matched_r1_examples() {
        assert_abs_diff_eq!(matched_r1(0.999, 0.1), 0.8179120223249039, epsilon = 1e-15);
        assert_eq!(matched_r1(1.0, 0.0), 1.0);
        assert_abs_diff_eq!(matched_r1(0.99, 0.1), 0.8105434455472020, epsilon = 1e-15);
    }

    #[test]
    fn averaged_depth_conventions() {
        assert_abs_diff_eq!(averaged_depth(&comb(ToothShape::Square, 1.0, 10.0)), 0.1, epsilon = 1e-15);
        assert_eq!(averaged_depth(&comb(ToothShape::Square, 0.0, 10.0)), 0.0);
        assert_eq!(averaged_depth(&comb(ToothShape::Gaussian, 0.0, 7.0)), 0.0);
        // Gaussian teeth average to d/F_A * sqrt(pi/(4 ln 2)).
        assert_abs_diff_eq!(
            averaged_depth(&comb(ToothShape::Gaussian, 1.0, 10.0)),
            0.10644670194312262,
            epsilon = 1e-15
        );
    }

    #[test]
    fn eta_f_examples() {
        assert_abs_diff_eq!(eta_f(10.0), 0.93239381990594823, epsilon = 1e-15);
        assert_abs_diff_eq!(eta_f(4.0), 0.64564852642789204, epsilon = 1e-15);
        assert_relative_eq!(eta_f(1e12), 1.0, max_relative = 1e-15);
    }

    #[test]
    fn cooperativity_examples() {
        assert_eq!(cooperativity(0.1, 0.2).unwrap(), 1.0);
        assert_eq!(cooperativity(0.0, 0.5).unwrap(), 0.0);
        assert_eq!(cooperativity(0.05, 0.4).unwrap(), 0.25);
        assert!(cooperativity(0.1, 0.0).is_err());
    }

    #[test]
    fn asymmetry_warning() {
        let cav = CavityParams::new(0.999, 0.9, 0.01).unwrap();
        assert_eq!(cav.warnings().len(), 1);
        let ok = CavityParams::new(0.8, 0.999, 0.01).unwrap();
        assert!(ok.warnings().is_empty());
    }

    #[test]
    fn comb_params_validation() {
        assert!(CombParams::new(1e6, 10.0, 1.0, ToothShape::Gaussian, 4, 0.0).is_err());
        assert!(CombParams::new(1e6, 10.0, 1.0, ToothShape::Gaussian, 1, 0.0).is_err());
        assert!(CombParams::new(1e6, 0.9, 1.0, ToothShape::Gaussian, 21, 0.0).is_err());
        assert!(CombParams::new(-1.0, 10.0, 1.0, ToothShape::Gaussian, 21, 0.0).is_err());
        let c = comb(ToothShape::Gaussian, 1.0, 10.0);
        assert_relative_eq!(c.tooth_width(), 1.0e5, max_relative = 1e-15);
    }
}
