//! Error types shared by the power-loop toolkit.

use thiserror::Error;

/// Errors produced by modeling, design, and simulation operations.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// An iterative solver exhausted its iteration budget.
    #[error("{context}: no convergence after {iterations} iterations (residual {residual:.3e})")]
    NoConvergence {
        context: &'static str,
        iterations: usize,
        residual: f64,
    },

    /// A parameter failed its construction invariant.
    #[error("invalid {what}: {message}")]
    InvalidParameter { what: &'static str, message: String },

    /// Unit kind string not recognized by the per-unit converter.
    #[error("unknown unit kind `{0}`")]
    UnknownKind(String),

    /// Gramian horizon must be strictly positive.
    #[error("gramian horizon must be positive, got {0}")]
    NonPositiveHorizon(f64),

    /// Time-domain specification cannot be mapped to a valid pole set.
    #[error("infeasible time-domain specification: {0}")]
    InfeasibleSpec(String),

    /// The model's input coupling is rank deficient; no gain matrix can
    /// place the requested eigenvalues.
    #[error("system is not controllable (coupling determinant {determinant:.3e})")]
    Uncontrollable { determinant: f64 },

    /// The linearized power Jacobian is singular; angle-estimator gains
    /// are undefined.
    #[error("degenerate linearization (jacobian determinant {determinant:.3e})")]
    DegenerateLinearization { determinant: f64 },

    /// The per-stage algebraic loop (voltage/angle-estimate fixed point)
    /// failed to converge.
    #[error("algebraic loop diverged at t = {time:.6} s (residual {residual:.3e})")]
    AlgebraicLoopDivergence { time: f64, residual: f64 },

    /// Simulation state blew up.
    #[error("state became non-finite at t = {time:.6} s")]
    NonFinite { time: f64 },

    /// A channel never settled inside the metric band before the record ended.
    #[error("channel `{channel}` does not settle before the end of the record")]
    Unsettled { channel: &'static str },
}

pub type Result<T> = std::result::Result<T, Error>;
