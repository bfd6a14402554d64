//! The construction-script language.
//!
//! Scripts declare indeterminates, build points and triangles with the
//! geometry builtins, and check exact identities:
//!
//! ```text
//! vars m, n, M, N;
//! T1 = Te(m, n); T2 = Te(M, N);
//! A = point(0, 0);
//! B = vertex(T1, 3); C = vertex(T2, 3);
//! Bs = isogonal(T2, B); Cs = isogonal(T1, C);
//! assert deSq(Bs, A) == deSq(Cs, A);
//! ```

pub mod ast;
mod interp;
pub mod lexer;
pub mod parser;

pub use interp::{Environment, Outcome, RunReport, ScriptError, Value};
pub use lexer::{tokenize, LexError, Pos, Token, TokenKind};
pub use parser::{parse, parse_expression, ParseError};

use crate::poly::VarTable;
use crate::RatFunc;

pub fn parse_source(source: &str) -> Result<ast::Script, ScriptError> {
    Ok(parse(&tokenize(source)?)?)
}

/// Parses and runs `source` in a fresh environment.
pub fn run_source(source: &str) -> RunReport {
    match parse_source(source) {
        Ok(script) => Environment::new().run(&script),
        Err(e) => RunReport {
            outcomes: Vec::new(),
            error: Some(e),
        },
    }
}

/// Evaluates one expression with `table`'s indeterminates in scope.
pub fn eval_expression(source: &str, table: &VarTable) -> Result<Value, ScriptError> {
    let expr = parse_expression(&tokenize(source)?)?;
    Environment::with_table(table.clone()).eval(&expr)
}

/// Evaluates one scalar-valued expression.
pub fn eval_scalar(source: &str, table: &VarTable) -> Result<RatFunc, ScriptError> {
    match eval_expression(source, table)? {
        Value::Scalar(s) => Ok(s),
        v => Err(ScriptError::Type {
            pos: Pos { line: 1, col: 1 },
            message: format!("expected a scalar, found a {}", v.kind()),
        }),
    }
}
