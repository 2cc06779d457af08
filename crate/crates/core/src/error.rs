use thiserror::Error;

use crate::groupoid::Violation;

/// Errors raised by constructions on validated groupoids and functors.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown object {0}")]
    UnknownObject(String),
    #[error("unknown morphism {0}")]
    UnknownMorphism(String),
    #[error("morphisms {g} and {f} are not composable (source of {g} is not the target of {f})")]
    NotComposable { g: String, f: String },
    #[error("construction would hold {actual} morphisms, above the limit of {limit}")]
    SizeLimit { actual: usize, limit: usize },
    #[error("more than {budget} candidate subgroupoids")]
    BudgetExceeded { budget: usize },
    #[error("invalid Cayley table: {0}")]
    InvalidCayleyTable(String),
    #[error("functors do not compose: target of the first is not the source of the second")]
    FunctorMismatch,
    #[error("groupoid failed validation with {} violation(s)", .0.len())]
    Invalid(Vec<Violation>),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
