//! Recursive-descent parser.
//!
//! ```text
//! script  := stmt*
//! stmt    := "vars" ident ("," ident)* ";"
//!          | ident "=" expr ";"
//!          | "assert" expr ("==" | "!=") expr ";"
//!          | "show" expr ";"
//! expr    := term (("+" | "-") term)*
//! term    := unary (("*" | "/") unary)*
//! unary   := "-" unary | power
//! power   := primary ("^" unary)?
//! primary := number | ident | ident "(" args? ")" | "(" expr ("," expr)? ")"
//! ```

use std::fmt;

use super::ast::{BinOp, Expr, ExprKind, Script, Stmt};
use super::lexer::{Pos, Token, TokenKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub expected: String,
    pub found: String,
    pub pos: Pos,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: expected {}, found {}", self.pos, self.expected, self.found)
    }
}

impl std::error::Error for ParseError {}

type PResult<T> = Result<T, ParseError>;

pub fn parse(tokens: &[Token]) -> PResult<Script> {
    let mut p = Parser::new(tokens);
    let mut statements = Vec::new();
    while p.peek().kind != TokenKind::Eof {
        statements.push(p.statement()?);
    }
    Ok(Script { statements })
}

/// Parses a single expression filling the whole token stream.
pub fn parse_expression(tokens: &[Token]) -> PResult<Expr> {
    let mut p = Parser::new(tokens);
    let e = p.expr()?;
    if p.peek().kind != TokenKind::Eof {
        return Err(p.error("end of expression"));
    }
    Ok(e)
}

struct Parser<'a> {
    tokens: &'a [Token],
    at: usize,
}

impl<'a> Parser<'a> {
    fn new(tokens: &'a [Token]) -> Self {
        assert!(
            tokens.last().is_some_and(|t| t.kind == TokenKind::Eof),
            "token stream must end with Eof"
        );
        Parser { tokens, at: 0 }
    }

    fn peek(&self) -> &'a Token {
        &self.tokens[self.at]
    }

    fn bump(&mut self) -> &'a Token {
        let t = &self.tokens[self.at];
        if t.kind != TokenKind::Eof {
            self.at += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> ParseError {
        let t = self.peek();
        ParseError {
            expected: expected.to_string(),
            found: t.describe(),
            pos: t.pos,
        }
    }

    fn expect_punct(&mut self, p: &str) -> PResult<&'a Token> {
        if self.peek().is_punct(p) {
            Ok(self.bump())
        } else {
            Err(self.error(&format!("`{p}`")))
        }
    }

    fn ident(&mut self) -> PResult<&'a Token> {
        if self.peek().kind == TokenKind::Ident {
            Ok(self.bump())
        } else {
            Err(self.error("identifier"))
        }
    }

    fn statement(&mut self) -> PResult<Stmt> {
        let t = self.peek();
        let pos = t.pos;
        if t.is_keyword("vars") {
            self.bump();
            let mut names = Vec::new();
            loop {
                let id = self.ident()?;
                names.push((id.text.clone(), id.pos));
                if self.peek().is_punct(",") {
                    self.bump();
                } else {
                    break;
                }
            }
            self.expect_punct(";")?;
            Ok(Stmt::VarsDecl { names, pos })
        } else if t.is_keyword("assert") {
            self.bump();
            let lhs = self.expr()?;
            let negated = if self.peek().is_punct("==") {
                false
            } else if self.peek().is_punct("!=") {
                true
            } else {
                return Err(self.error("`==` or `!=`"));
            };
            self.bump();
            let rhs = self.expr()?;
            self.expect_punct(";")?;
            Ok(Stmt::Assert { lhs, rhs, negated, pos })
        } else if t.is_keyword("show") {
            self.bump();
            let expr = self.expr()?;
            self.expect_punct(";")?;
            Ok(Stmt::Show { expr, pos })
        } else if t.kind == TokenKind::Ident {
            let name = self.bump().text.clone();
            self.expect_punct("=")?;
            let value = self.expr()?;
            self.expect_punct(";")?;
            Ok(Stmt::Assign { name, value, pos })
        } else {
            Err(self.error("statement"))
        }
    }

    fn expr(&mut self) -> PResult<Expr> {
        let mut lhs = self.term()?;
        loop {
            let op = match self.peek() {
                t if t.is_punct("+") => BinOp::Add,
                t if t.is_punct("-") => BinOp::Sub,
                _ => return Ok(lhs),
            };
            let pos = self.bump().pos;
            let rhs = self.term()?;
            lhs = binary(op, lhs, rhs, pos);
        }
    }

    fn term(&mut self) -> PResult<Expr> {
        let mut lhs = self.unary()?;
        loop {
            let op = match self.peek() {
                t if t.is_punct("*") => BinOp::Mul,
                t if t.is_punct("/") => BinOp::Div,
                _ => return Ok(lhs),
            };
            let pos = self.bump().pos;
            let rhs = self.unary()?;
            lhs = binary(op, lhs, rhs, pos);
        }
    }

    fn unary(&mut self) -> PResult<Expr> {
        if self.peek().is_punct("-") {
            let pos = self.bump().pos;
            let inner = self.unary()?;
            return Ok(Expr {
                kind: ExprKind::Neg(Box::new(inner)),
                pos,
            });
        }
        self.power()
    }

    fn power(&mut self) -> PResult<Expr> {
        let base = self.primary()?;
        if self.peek().is_punct("^") {
            let pos = self.bump().pos;
            let exponent = self.unary()?;
            return Ok(binary(BinOp::Pow, base, exponent, pos));
        }
        Ok(base)
    }

    fn primary(&mut self) -> PResult<Expr> {
        let t = self.peek();
        let pos = t.pos;
        match t.kind {
            TokenKind::Number => {
                self.bump();
                let value = t.text.parse().map_err(|_| ParseError {
                    expected: "number with nonzero denominator".to_string(),
                    found: t.describe(),
                    pos,
                })?;
                Ok(Expr {
                    kind: ExprKind::Number(value),
                    pos,
                })
            }
            TokenKind::Ident => {
                self.bump();
                if !self.peek().is_punct("(") {
                    return Ok(Expr {
                        kind: ExprKind::Ident(t.text.clone()),
                        pos,
                    });
                }
                self.bump();
                let mut args = Vec::new();
                if !self.peek().is_punct(")") {
                    loop {
                        args.push(self.expr()?);
                        if self.peek().is_punct(",") {
                            self.bump();
                        } else {
                            break;
                        }
                    }
                }
                self.expect_punct(")")?;
                Ok(Expr {
                    kind: ExprKind::Call {
                        name: t.text.clone(),
                        args,
                    },
                    pos,
                })
            }
            TokenKind::Punct if t.text == "(" => {
                self.bump();
                let first = self.expr()?;
                if self.peek().is_punct(",") {
                    self.bump();
                    let second = self.expr()?;
                    self.expect_punct(")")?;
                    return Ok(Expr {
                        kind: ExprKind::Tuple(Box::new(first), Box::new(second)),
                        pos,
                    });
                }
                self.expect_punct(")")?;
                Ok(first)
            }
            _ => Err(self.error("expression")),
        }
    }
}

fn binary(op: BinOp, lhs: Expr, rhs: Expr, pos: Pos) -> Expr {
    Expr {
        kind: ExprKind::Binary {
            op,
            lhs: Box::new(lhs),
            rhs: Box::new(rhs),
        },
        pos,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::script::lexer::tokenize;

    fn parse_src(src: &str) -> PResult<Script> {
        parse(&tokenize(src).unwrap())
    }

    #[test]
    fn point_literal_assignment() {
        let script = parse_src("P = (1/2, 2/3);").unwrap();
        match &script.statements[..] {
            [Stmt::Assign { name, value, .. }] => {
                assert_eq!(name, "P");
                assert!(matches!(value.kind, ExprKind::Tuple(..)));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn precedence() {
        let e = parse_expression(&tokenize("-m^2 + 2*n").unwrap()).unwrap();
        let ExprKind::Binary {
            op: BinOp::Add, lhs, ..
        } = e.kind
        else {
            panic!()
        };
        let ExprKind::Neg(inner) = lhs.kind else { panic!() };
        assert!(matches!(inner.kind, ExprKind::Binary { op: BinOp::Pow, .. }));

        // Right associative power.
        let e = parse_expression(&tokenize("a^b^c").unwrap()).unwrap();
        let ExprKind::Binary {
            op: BinOp::Pow, rhs, ..
        } = e.kind
        else {
            panic!()
        };
        assert!(matches!(rhs.kind, ExprKind::Binary { op: BinOp::Pow, .. }));
    }

    #[test]
    fn missing_operand() {
        let err = parse_src("assert deSq(A,B) == ;").unwrap_err();
        assert_eq!(err.pos, Pos { line: 1, col: 21 });
        assert_eq!(err.found, "`;`");
    }

    #[test]
    fn trailing_input_in_expression() {
        let err = parse_expression(&tokenize("m n").unwrap()).unwrap_err();
        assert_eq!(err.pos.col, 3);
    }
}
