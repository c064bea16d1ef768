use thiserror::Error;

/// Every precondition violation or unreachable-precision signal the library
/// can report. Variants carry the offending values so CLI diagnostics can
/// name them.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid endpoints: [{lo}, {hi}] is not a finite, ordered pair")]
    InvalidEndpoints { lo: f64, hi: f64 },
    #[error("division by an interval containing zero: [{lo}, {hi}]")]
    ZeroInDivisor { lo: f64, hi: f64 },
    #[error("square root of an interval with negative lower endpoint {lo}")]
    NegativeArgument { lo: f64 },
    #[error("argument [{lo}, {hi}] leaves the supported domain |x| <= {cap}")]
    DomainExceeded { lo: f64, hi: f64, cap: f64 },
    #[error("cosine enclosure contains zero; tangent undefined on the input")]
    CosineMayVanish,
    #[error("input width {width:e} exceeds the pointwise-check cap {cap:e}")]
    NotPointEnough { width: f64, cap: f64 },
    #[error("no delta >= {floor:e} certifies the requested epsilon")]
    CannotCertify { floor: f64 },
    #[error("epsilon {value:e} outside the supported range [{min:e}, {max:e}]")]
    EpsilonOutOfRange { value: f64, min: f64, max: f64 },
    #[error("doubling index {k} at the double-precision depth floor {floor}")]
    DepthExceeded { k: u32, floor: u32 },
    #[error("target width {value:e} below the double-precision floor {min:e}")]
    TargetWidthTooSmall { value: f64, min: f64 },
    #[error("radius {value} must be strictly positive")]
    NonpositiveRadius { value: f64 },
    #[error("stretch factor {value} must be strictly greater than 1")]
    InvalidStretch { value: f64 },
    #[error("radii R = {outer}, r = {inner} must satisfy R > r >= 0")]
    InvalidRadii { outer: f64, inner: f64 },
    #[error("angle {value} outside [0, {max}]")]
    ThetaOutOfRange { value: f64, max: f64 },
    #[error("too few usable records: {found} (need at least {needed})")]
    InsufficientData { found: usize, needed: usize },
    #[error("extrapolation order {value} must be strictly positive")]
    InvalidOrder { value: f64 },
    #[error("cell count {value} must be at least 1")]
    InvalidCellCount { value: u64 },
    #[error("k_max {value} outside the supported range 0..={max}")]
    KmaxOutOfRange { value: u32, max: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
