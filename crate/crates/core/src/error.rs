use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("recurrence is degenerate: p^2 + 4q = 0 or q = 0")]
    DegenerateRecurrence,

    #[error("characteristic roots are not real (p^2 + 4q = {discriminant})")]
    NonRealRoots { discriminant: f64 },

    #[error("operation requires the canonical initial values W_0 = 0, W_1 = 1")]
    SpecNotCanonical,

    #[error("index constraint violated for {identity}: {reason}")]
    IndexConstraintViolated {
        identity: &'static str,
        reason: String,
    },

    #[error("zero denominator at step {step}")]
    ZeroDenominator { step: i64 },

    #[error("initial condition is forbidden: the orbit is undefined at step {depth}")]
    ForbiddenInitialCondition { depth: usize },

    #[error("initial condition coincides with the repelling equilibrium")]
    InitialAtMinusPhiPlus,

    #[error("operation is only defined for nu = 1 (got nu = {nu})")]
    RequiresLinearExponent { nu: u32 },

    #[error("singularity: denominator vanishes at step {step}")]
    Singularity { step: usize },

    #[error("near singularity: |denominator| below guard at step {step}")]
    NearSingularity { step: usize },

    #[error("operation is not defined on this branch")]
    WrongBranch,

    #[error("no orbit of the requested sign exists for these parameters")]
    EmptyEnvelope,

    #[error("value is not an equilibrium (residual {residual:e})")]
    NotAnEquilibrium { residual: f64 },

    #[error("orbit too short: {len} values, {required} required")]
    OrbitTooShort { len: usize, required: usize },

    #[error("bracket [{lo}, {hi}] does not contain a sign change")]
    NoSignChange { lo: f64, hi: f64 },

    #[error("write failed: {0}")]
    Output(String),

    #[error("output closed")]
    OutputClosed,
}
