//! Expression language, rendering, and the `lfac` command line.

mod eval;
mod run;
mod syntax;
mod value;

pub use eval::{Env, ErrorKind, EvalError};
pub use run::{run, Cli};
pub use syntax::{parse, BinOp, Expr, ExprKind, ParseError, Span};
pub use value::{Format, Value};

/// Parses and evaluates `text`.
pub fn eval_str(env: &Env, text: &str) -> Result<Value, Error> {
    let e = parse(text)?;
    Ok(env.eval(&e)?)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Eval(#[from] EvalError),
}
