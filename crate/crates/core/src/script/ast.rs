use super::lexer::Pos;
use crate::Rational;

#[derive(Clone, Debug, PartialEq)]
pub struct Script {
    pub statements: Vec<Stmt>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Stmt {
    VarsDecl {
        names: Vec<(String, Pos)>,
        pos: Pos,
    },
    Assign {
        name: String,
        value: Expr,
        pos: Pos,
    },
    Assert {
        lhs: Expr,
        rhs: Expr,
        negated: bool,
        pos: Pos,
    },
    Show {
        expr: Expr,
        pos: Pos,
    },
}

impl Stmt {
    pub fn pos(&self) -> Pos {
        match self {
            Stmt::VarsDecl { pos, .. }
            | Stmt::Assign { pos, .. }
            | Stmt::Assert { pos, .. }
            | Stmt::Show { pos, .. } => *pos,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Expr {
    pub kind: ExprKind,
    pub pos: Pos,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ExprKind {
    Ident(String),
    Number(Rational),
    Call { name: String, args: Vec<Expr> },
    Binary { op: BinOp, lhs: Box<Expr>, rhs: Box<Expr> },
    Neg(Box<Expr>),
    Tuple(Box<Expr>, Box<Expr>),
}
