use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("curve is singular (discriminant is zero)")]
    SingularCurve,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("point at infinity has no affine coordinates")]
    PointAtInfinity,
    #[error("invalid target: {0}")]
    InvalidTarget(String),
    #[error("g/s is undefined at u = {0} (order-3 torsion point)")]
    Pole(String),
    #[error("torsion point on the infinite component carries no triangle")]
    TorsionPoint,
    #[error("degenerate representation: a factor of the R/r denominator vanishes")]
    DegenerateRepresentation,
    #[error("not a triangle: {0}")]
    NotATriangle(String),
    #[error("curve has a single real component (no egg)")]
    NoEgg,
    #[error("curve coefficients are not integral")]
    NonIntegralCoefficients,
    #[error("quadratic in f has vanishing A and B coefficients")]
    DegenerateQuadratic,
    #[error("invalid range {from}..={to}: need 3 <= from <= to")]
    InvalidRange { from: u64, to: u64 },
    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
