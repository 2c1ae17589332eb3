//! Design and verification toolkit for grid-forming converter power loops.
//!
//! The crate covers the full power-loop design chain for a droop-controlled
//! grid-forming converter behind a complex line impedance:
//!
//! - [`powerflow`] — nonlinear two-bus power model: power transfer equations,
//!   equilibrium solving, small-signal linearization, per-unit helpers.
//! - [`ssmodel`] — the error-based state-space model (A, B), its
//!   controllability Gramian (exact polynomial and closed-form determinant),
//!   and the scalar controllability index.
//! - [`gaindesign`] — mapping time-domain specifications to target
//!   eigenvalues, full-state feedback gain synthesis by characteristic
//!   polynomial matching, angle-estimator gains, and placement verification.
//! - [`simulator`] — nonlinear closed-loop time-domain simulation with
//!   set-point/grid events and step-response metric extraction.
//!
//! All electrical quantities are per-unit except the frequency base `omega_b`
//! (rad/s), which scales the angle dynamics.

pub mod error;
pub mod gaindesign;
pub mod powerflow;
pub mod simulator;
pub mod ssmodel;

pub use error::{Error, Result};
pub use gaindesign::{
    closed_loop_charpoly, estimator_gains, spec_to_poles, synthesize_gains, target_charpoly,
    verify_placement, EstimatorGains, GainMatrix, PlacementReport, PoleSet, SynthesisOptions,
    TimeSpec,
};
pub use powerflow::{
    compute_powers, from_per_unit, linearize, scr, solve_equilibrium, to_per_unit, DroopConfig,
    LinearCoeffs, NetworkParams, OperatingPoint, PerUnitBases, SetPoints, UnitKind,
};
pub use simulator::{
    measure_metrics, solve_algebraic, step, Channel, ControlGains, Event, EventTarget, Scenario,
    SimState, StepMetrics, TimeSeries,
};
pub use ssmodel::{
    build_error_model, controllability_index, gramian, gramian_det_closed, is_controllable,
    ErrorModel, GramianResult,
};
