//! Error types shared across the crate.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by parameter validation, closed-form evaluation and the
/// time-domain solver.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// A parameter violated a documented precondition.
    #[error("invalid parameter {name}: {reason} (value {value})")]
    InvalidParameter {
        name: &'static str,
        reason: &'static str,
        value: f64,
    },

    /// Both mirrors perfectly reflecting: the finesse diverges.
    #[error("degenerate lossless cavity: r1*r2 = 1, finesse diverges")]
    DegenerateCavity,

    /// The round-trip sum does not converge (round-trip gain >= 1).
    #[error("unphysical gain: round-trip amplitude factor {round_trip} >= 1")]
    UnphysicalGain { round_trip: f64 },

    /// The round-trip efficiency formula left its validity domain
    /// (computed sqrt(eta) > 1).
    #[error("efficiency formula out of validity: sqrt(eta) = {sqrt_eta} > 1")]
    OutOfValidity { sqrt_eta: f64 },

    /// `epsilon = d_tilde = 0`: the limiting efficiency is undefined.
    #[error("degenerate input: epsilon and d_tilde both zero")]
    DegenerateInput,

    /// Spectral grid too coarse for the requested comb.
    #[error("discretization error: {0}")]
    Discretization(String),

    /// Requested kernel time step would alias the comb detunings.
    #[error("aliasing guard: time step {step} >= pi/max|detuning| = {limit}")]
    Aliasing { step: f64, limit: f64 },

    /// Coupling calibration failed to converge.
    #[error("calibration error: {0}")]
    Calibration(String),

    /// The time-domain integrator diverged.
    #[error("integrator blowup at step {step} (t = {time} s): excitation energy {energy} exceeds {limit} x input")]
    IntegratorBlowup {
        step: usize,
        time: f64,
        energy: f64,
        limit: f64,
    },

    /// Mutually inconsistent simulation/extraction settings.
    #[error("configuration error: {0}")]
    Configuration(String),

    /// Closed form and numerical optimization disagreed beyond tolerance.
    #[error("internal consistency error: {0}")]
    InternalConsistency(String),
}
