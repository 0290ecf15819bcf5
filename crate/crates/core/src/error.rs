use crate::ro_grade::{ParityError, RODegree};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("expression mixes degrees {0} and {1}")]
    HeterogeneousExpr(RODegree, RODegree),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(RODegree, RODegree),
    #[error("relations are not confluent: {0}")]
    NonConfluentRelations(String),
    #[error("degree {0} lies outside the chart window")]
    OutsideWindow(RODegree),
    #[error("corrupt presentation data: {0}")]
    CorruptData(String),
    #[error("cannot invert torsion class `{0}`")]
    TorsionLocalization(String),
    #[error("cannot invert 0")]
    ZeroInversion,
    #[error("{0} is not inverted in this presentation")]
    NotInverted(i64),
    #[error("element has both torsion and free support in degree {0} of odd total dimension")]
    MixedElement(RODegree),
    #[error("operations live on different presentations ({0} vs {1})")]
    SpectrumMismatch(String, String),
    #[error("target cell {0} has torsion, cancellation is invalid")]
    TorsionTarget(RODegree),
    #[error("auxiliary product vanishes, no information")]
    ZeroProduct,
    #[error("multiplication into {0} is not injective on the source cell")]
    NotInjective(RODegree),
    #[error("`{0}` is not a class of degree {1}")]
    NotAClass(String, RODegree),
    #[error("coefficient {0} is not in the coefficient ring")]
    BadCoefficient(String),
    #[error(transparent)]
    Parity(#[from] ParityError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
