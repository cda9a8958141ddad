use thiserror::Error;

/// Domain errors raised by the group, metric and spinor routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum FinslerError {
    #[error("non-finite component in {0}")]
    NonFinite(&'static str),
    #[error("vector is not unit-norm (|v| = {norm})")]
    NotUnit { norm: f64 },
    #[error("cannot normalize a zero vector")]
    ZeroDirection,
    #[error("speed {speed} is not below the speed of light")]
    Superluminal { speed: f64 },
    #[error("spacelike displacement (interval {interval}) with non-integer r = {r}")]
    SpacelikeInput { interval: f64, r: f64 },
    #[error("lightlike displacement off the preferred direction diverges for r = {r} > 1")]
    DegenerateRatio { r: f64 },
    #[error("zero velocity has no boost direction")]
    ZeroVelocity,
    #[error("direction is not orthogonal to nu (n.nu = {dot})")]
    NonOrthogonal { dot: f64 },
    #[error("velocity is off the unit horosphere (level {level})")]
    OffHorosphere { level: f64 },
    #[error("event is not timelike (x0^2 - x^2 = {interval})")]
    NonTimelike { interval: f64 },
    #[error("bispinor scalar density vanishes (|psibar psi| = {density})")]
    NullDensity { density: f64 },
    #[error("bispinor current is orthogonal to nu_n; the invariant diverges for r = {r}")]
    NullCurrent { r: f64 },
    #[error("level {level} is outside the range of the {family} family")]
    OutOfRange { family: &'static str, level: f64 },
    #[error("sampled point misses its level set by {deviation}")]
    SampleVerification { deviation: f64 },
}

pub type Result<T> = std::result::Result<T, FinslerError>;
