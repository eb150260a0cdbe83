//! Exact scalars in `Q(v, a, b, ...)` and factored rational functions in `X = q^{-s}`.

mod poly;
mod scalar;
mod split;

pub use poly::{Monomial, Poly, Symbol};
pub use scalar::{scalar_canonicalize, Scalar, ScalarExpr, SQRT_Q};
pub use split::{ideal_generator, HalfInt, IdealGen, SplitRational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a half-integer")]
    NotHalfInteger(String),
    #[error("the unit of a split rational function must be nonzero")]
    ZeroUnit,
    #[error("ideal generator needs at least one input")]
    EmptyIdeal,
}
