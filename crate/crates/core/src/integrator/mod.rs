//! Floating-point experiments with the pre-processed implicit midpoint rule.
//!
//! The midpoint rule applied to `F = f + h²/12 (½ tr(f′²) − f′²) f` is a
//! second-order method whose divergence defect is pushed to higher order.
//! This module measures the one-step volume error `|det ∂y₁/∂y₀ − 1|` and the
//! trajectory error over a grid of step sizes and fits log-log slopes.

mod experiment;
mod field;
mod matrix;
mod midpoint;

pub use experiment::{
    fit_slope, global_volume_experiment, noise_floor, step_grid, trajectory_error_experiment,
    volume_error_experiment, volume_errors, ExperimentResult, CSV_HEADER,
};
pub use field::{preprocess_field, NumericField, FIELD_NAMES};
pub use matrix::Matrix;
pub use midpoint::{
    flow_jacobian, midpoint_increment, midpoint_step, rk4_step, DEFAULT_MAX_ITER, DEFAULT_TOL,
};
