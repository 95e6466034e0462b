//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("spatial dimension must be 1 or 2, got {0}")]
    BadDimension(usize),

    #[error("grid spacing is not uniform across axes: {0:?}")]
    NonUniformSpacing(Vec<f64>),

    #[error("grid or shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("declared convexity constants [{declared_lo}, {declared_hi}] not confirmed by sampling: measured quotients in [{measured_lo}, {measured_hi}]")]
    ConstantsMismatch {
        declared_lo: f64,
        declared_hi: f64,
        measured_lo: f64,
        measured_hi: f64,
    },

    #[error("Legendre transform solver did not converge after {iterations} iterations (gradient norm {grad_norm:e})")]
    LegendreNoConvergence { iterations: usize, grad_norm: f64 },

    #[error("potential is not normalized: psi(0)={at_zero:e}, |Dpsi(0)|={grad_at_zero:e}")]
    NotNormalized { at_zero: f64, grad_at_zero: f64 },

    #[error("step {step}: solver hit max iterations with residual {residual:e}")]
    MaxIterations { step: usize, residual: f64 },

    #[error("step {step}: line search failed (directional derivative {slope:e})")]
    LineSearchFailure { step: usize, slope: f64 },

    #[error("invalid scheme configuration: {0}")]
    BadSchemeConfig(String),

    #[error("non-finite value encountered in {0}")]
    NonFinite(&'static str),

    #[error("cutoff does not vanish near t=0 and t=T, which this check requires")]
    CutoffNotTimeCollared,

    #[error("parabolic cylinder (center {center:?}, t={t}, r={r}) not contained in the space-time domain")]
    CylinderOutOfDomain { center: Vec<f64>, t: f64, r: f64 },

    #[error("parabolic cylinder contains no grid samples")]
    EmptyCylinder,

    #[error("degenerate fit: {0}")]
    DegenerateFit(String),

    #[error("need at least {need} {what}, got {got}")]
    TooFew {
        what: &'static str,
        need: usize,
        got: usize,
    },

    #[error("time offset {offset} outside the admissible range (0, {limit})")]
    BadOffset { offset: f64, limit: f64 },

    #[error("covering scale {delta} is below the grid resolution (h={h}, tau={tau})")]
    ScaleBelowResolution { delta: f64, h: f64, tau: f64 },

    #[error("blow-up scale eps={0:e} below machine threshold")]
    EpsTooSmall(f64),

    #[error("unknown preset key: {0}")]
    UnknownPreset(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error in {context}: {message}")]
    Parse { context: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
