use std::collections::HashMap;
use std::fmt;

use super::ast::{BinOp, Expr, ExprKind, Script, Stmt};
use super::lexer::{LexError, Pos};
use super::parser::ParseError;
use crate::error::Error;
use crate::geom::{self, Point, Triangle};
use crate::poly::VarTable;
use crate::RatFunc;

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Scalar(RatFunc),
    Point(Point<RatFunc>),
    Triangle(Box<Triangle<RatFunc>>),
}

impl Value {
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::Point(_) => "point",
            Value::Triangle(_) => "triangle",
        }
    }

    /// Exact equality; `None` when the kinds differ.
    pub fn same_as(&self, other: &Value) -> Option<bool> {
        match (self, other) {
            (Value::Scalar(a), Value::Scalar(b)) => Some(a.field_eq(b)),
            (Value::Point(a), Value::Point(b)) => Some(a.x.field_eq(&b.x) && a.y.field_eq(&b.y)),
            (Value::Triangle(a), Value::Triangle(b)) => Some(
                a.vertices()
                    .iter()
                    .zip(b.vertices())
                    .all(|(p, q)| p.x.field_eq(&q.x) && p.y.field_eq(&q.y)),
            ),
            _ => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Scalar(s) => write!(f, "{s}"),
            Value::Point(p) => write!(f, "{p}"),
            Value::Triangle(t) => write!(f, "{t}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ScriptError {
    Lex(LexError),
    Parse(ParseError),
    Type { pos: Pos, message: String },
    Name { pos: Pos, message: String },
    Eval { pos: Pos, source: Error },
}

impl ScriptError {
    pub fn pos(&self) -> Pos {
        match self {
            ScriptError::Lex(e) => e.pos,
            ScriptError::Parse(e) => e.pos,
            ScriptError::Type { pos, .. } | ScriptError::Name { pos, .. } | ScriptError::Eval { pos, .. } => *pos,
        }
    }
}

impl fmt::Display for ScriptError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScriptError::Lex(e) => write!(f, "lex error at {e}"),
            ScriptError::Parse(e) => write!(f, "parse error at {e}"),
            ScriptError::Type { pos, message } => write!(f, "type error at {pos}: {message}"),
            ScriptError::Name { pos, message } => write!(f, "name error at {pos}: {message}"),
            ScriptError::Eval { pos, source } => write!(f, "evaluation error at {pos}: {source}"),
        }
    }
}

impl std::error::Error for ScriptError {}

impl From<LexError> for ScriptError {
    fn from(e: LexError) -> Self {
        ScriptError::Lex(e)
    }
}

impl From<ParseError> for ScriptError {
    fn from(e: ParseError) -> Self {
        ScriptError::Parse(e)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Outcome {
    Assert { line: usize, passed: bool },
    Show { line: usize, text: String },
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Assert { line, passed } => {
                write!(f, "ASSERT line {line}: {}", if *passed { "PASS" } else { "FAIL" })
            }
            Outcome::Show { text, .. } => f.write_str(text),
        }
    }
}

/// Result of running a script: everything produced before the run ended,
/// plus the error that ended it early, if any.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct RunReport {
    pub outcomes: Vec<Outcome>,
    pub error: Option<ScriptError>,
}

impl RunReport {
    pub fn passed(&self) -> bool {
        self.error.is_none()
            && self
                .outcomes
                .iter()
                .all(|o| !matches!(o, Outcome::Assert { passed: false, .. }))
    }

    pub fn failed_asserts(&self) -> impl Iterator<Item = usize> + '_ {
        self.outcomes.iter().filter_map(|o| match o {
            Outcome::Assert { line, passed: false } => Some(*line),
            _ => None,
        })
    }
}

/// Indeterminates and bindings visible to a script.
#[derive(Clone, Debug, Default)]
pub struct Environment {
    table: Option<VarTable>,
    bindings: HashMap<String, Value>,
}

type EResult<T> = Result<T, ScriptError>;

impl Environment {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_table(table: VarTable) -> Self {
        Environment {
            table: Some(table),
            bindings: HashMap::new(),
        }
    }

    pub fn table(&self) -> Option<&VarTable> {
        self.table.as_ref()
    }

    pub fn get(&self, name: &str) -> Option<&Value> {
        self.bindings.get(name)
    }

    pub fn bind(&mut self, name: &str, value: Value) -> Result<(), String> {
        if self.is_indeterminate(name) {
            return Err(format!("`{name}` is an indeterminate and cannot be assigned"));
        }
        self.bindings.insert(name.to_string(), value);
        Ok(())
    }

    fn is_indeterminate(&self, name: &str) -> bool {
        self.table.as_ref().is_some_and(|t| t.index_of(name).is_some())
    }

    /// Runs the statements in order, stopping at the first error.
    pub fn run(&mut self, script: &Script) -> RunReport {
        let mut report = RunReport::default();
        for stmt in &script.statements {
            if let Err(e) = self.exec(stmt, &mut report) {
                report.error = Some(e);
                break;
            }
        }
        report
    }

    fn exec(&mut self, stmt: &Stmt, report: &mut RunReport) -> EResult<()> {
        match stmt {
            Stmt::VarsDecl { names, pos } => self.declare(names, *pos),
            Stmt::Assign { name, value, pos } => {
                let v = self.eval(value)?;
                self.bind(name, v)
                    .map_err(|message| ScriptError::Name { pos: *pos, message })
            }
            Stmt::Assert { lhs, rhs, negated, pos } => {
                let l = self.eval(lhs)?;
                let r = self.eval(rhs)?;
                let equal = l.same_as(&r).ok_or_else(|| ScriptError::Type {
                    pos: rhs.pos,
                    message: format!("cannot compare {} with {}", l.kind(), r.kind()),
                })?;
                report.outcomes.push(Outcome::Assert {
                    line: pos.line,
                    passed: equal != *negated,
                });
                Ok(())
            }
            Stmt::Show { expr, pos } => {
                let v = self.eval(expr)?;
                report.outcomes.push(Outcome::Show {
                    line: pos.line,
                    text: v.to_string(),
                });
                Ok(())
            }
        }
    }

    fn declare(&mut self, names: &[(String, Pos)], pos: Pos) -> EResult<()> {
        let list: Vec<&str> = names.iter().map(|(n, _)| n.as_str()).collect();
        if let Some(existing) = &self.table {
            if existing.names().iter().map(String::as_str).eq(list.iter().copied()) {
                return Ok(());
            }
            return Err(ScriptError::Name {
                pos,
                message: "indeterminates are already declared".to_string(),
            });
        }
        for (i, (name, npos)) in names.iter().enumerate() {
            if names[..i].iter().any(|(earlier, _)| earlier == name) {
                return Err(ScriptError::Name {
                    pos: *npos,
                    message: format!("`{name}` is declared twice"),
                });
            }
            if self.bindings.contains_key(name) {
                return Err(ScriptError::Name {
                    pos: *npos,
                    message: format!("`{name}` is already bound"),
                });
            }
        }
        let table = VarTable::new(list).map_err(|e| ScriptError::Name {
            pos,
            message: e.to_string(),
        })?;
        self.table = Some(table);
        Ok(())
    }

    pub fn eval(&self, expr: &Expr) -> EResult<Value> {
        let pos = expr.pos;
        let field = |e: Error| ScriptError::Eval { pos, source: e };
        match &expr.kind {
            ExprKind::Number(q) => Ok(Value::Scalar(RatFunc::constant(q.clone()))),
            ExprKind::Ident(name) => {
                if let Some(table) = &self.table {
                    if let Some(i) = table.index_of(name) {
                        return Ok(Value::Scalar(RatFunc::var_at(table, i)));
                    }
                }
                self.bindings.get(name).cloned().ok_or_else(|| ScriptError::Name {
                    pos,
                    message: format!("`{name}` is not bound"),
                })
            }
            ExprKind::Neg(inner) => match self.eval(inner)? {
                Value::Scalar(s) => Ok(Value::Scalar(-s)),
                Value::Point(p) => Ok(Value::Point(-p)),
                v => Err(type_error(pos, format!("cannot negate a {}", v.kind()))),
            },
            ExprKind::Tuple(a, b) => {
                let x = self.scalar(a)?;
                let y = self.scalar(b)?;
                Ok(Value::Point(Point::new(x, y)))
            }
            ExprKind::Binary { op, lhs, rhs } => {
                let l = self.eval(lhs)?;
                let r = self.eval(rhs)?;
                binary(*op, l, r, pos, rhs.pos).and_then(|r| r.map_err(field))
            }
            ExprKind::Call { name, args } => self.call(name, args, pos),
        }
    }

    fn scalar(&self, e: &Expr) -> EResult<RatFunc> {
        match self.eval(e)? {
            Value::Scalar(s) => Ok(s),
            v => Err(type_error(e.pos, format!("expected a scalar, found a {}", v.kind()))),
        }
    }

    fn point(&self, e: &Expr) -> EResult<Point<RatFunc>> {
        match self.eval(e)? {
            Value::Point(p) => Ok(p),
            v => Err(type_error(e.pos, format!("expected a point, found a {}", v.kind()))),
        }
    }

    fn triangle(&self, e: &Expr) -> EResult<Triangle<RatFunc>> {
        match self.eval(e)? {
            Value::Triangle(t) => Ok(*t),
            v => Err(type_error(e.pos, format!("expected a triangle, found a {}", v.kind()))),
        }
    }

    fn call(&self, name: &str, args: &[Expr], pos: Pos) -> EResult<Value> {
        let field = |e: Error| ScriptError::Eval { pos, source: e };
        let arity = |n: usize| -> EResult<()> {
            if args.len() == n {
                Ok(())
            } else {
                Err(type_error(
                    pos,
                    format!("`{name}` takes {n} arguments, got {}", args.len()),
                ))
            }
        };
        let points = |n: usize| -> EResult<Vec<Point<RatFunc>>> {
            arity(n)?;
            args.iter().map(|a| self.point(a)).collect()
        };
        match name {
            "Te" => {
                arity(2)?;
                let u = self.scalar(&args[0])?;
                let v = self.scalar(&args[1])?;
                geom::te(&u, &v).map(|t| Value::Triangle(Box::new(t))).map_err(field)
            }
            "vertex" => {
                arity(2)?;
                let t = self.triangle(&args[0])?;
                let i = self.scalar(&args[1])?;
                let index = i
                    .as_constant()
                    .and_then(|c| c.to_i64())
                    .filter(|k| (1..=3).contains(k))
                    .ok_or_else(|| type_error(args[1].pos, "vertex index must be 1, 2 or 3".to_string()))?;
                Ok(Value::Point(t.vertex(index as usize).expect("index checked").clone()))
            }
            "point" => {
                arity(2)?;
                Ok(Value::Point(Point::new(self.scalar(&args[0])?, self.scalar(&args[1])?)))
            }
            "triangle" => {
                let p = points(3)?;
                let [a, b, c]: [Point<RatFunc>; 3] = p.try_into().expect("three points");
                Triangle::new(a, b, c)
                    .map(|t| Value::Triangle(Box::new(t)))
                    .map_err(field)
            }
            "isogonal" => {
                let (t, p) = match args.len() {
                    2 => (self.triangle(&args[0])?, self.point(&args[1])?),
                    4 => {
                        let p = points(4)?;
                        let [a, b, c, q]: [Point<RatFunc>; 4] = p.try_into().expect("four points");
                        (Triangle::new(a, b, c).map_err(field)?, q)
                    }
                    n => return Err(type_error(pos, format!("`isogonal` takes 2 or 4 arguments, got {n}"))),
                };
                geom::isogonal_conjugate(&t, &p).map(Value::Point).map_err(field)
            }
            "deSq" => {
                let p = points(2)?;
                Ok(Value::Scalar(geom::de_sq(&p[0], &p[1])))
            }
            "circumcenter" => {
                let p = points(3)?;
                geom::circumcenter(&p[0], &p[1], &p[2]).map(Value::Point).map_err(field)
            }
            "circumradiusSq" => {
                let p = points(3)?;
                geom::circumradius_sq(&p[0], &p[1], &p[2])
                    .map(Value::Scalar)
                    .map_err(field)
            }
            "reflect" => {
                let p = points(3)?;
                geom::reflect_over_line(&p[0], &p[1], &p[2])
                    .map(Value::Point)
                    .map_err(field)
            }
            "collinearDet" => {
                let p = points(3)?;
                Ok(Value::Scalar(geom::collinear_det(&p[0], &p[1], &p[2])))
            }
            "concyclicDet" => {
                let p = points(4)?;
                Ok(Value::Scalar(geom::concyclic_det(&p[0], &p[1], &p[2], &p[3])))
            }
            _ => Err(ScriptError::Name {
                pos,
                message: format!("unknown function `{name}`"),
            }),
        }
    }
}

fn type_error(pos: Pos, message: String) -> ScriptError {
    ScriptError::Type { pos, message }
}

fn binary(op: BinOp, l: Value, r: Value, pos: Pos, rhs_pos: Pos) -> EResult<Result<Value, Error>> {
    use Value::{Point as P, Scalar as S};
    let result = match (op, l, r) {
        (BinOp::Add, S(a), S(b)) => a.checked_add(&b).map(S),
        (BinOp::Sub, S(a), S(b)) => a.checked_sub(&b).map(S),
        (BinOp::Mul, S(a), S(b)) => a.checked_mul(&b).map(S),
        (BinOp::Div, S(a), S(b)) => a.checked_div(&b).map(S),
        (BinOp::Pow, S(a), S(b)) => {
            let exp = b
                .as_constant()
                .and_then(|c| c.to_i64())
                .and_then(|k| i32::try_from(k).ok())
                .ok_or_else(|| type_error(rhs_pos, "exponent must be an integer constant".to_string()))?;
            a.pow(exp).map(S)
        }
        (BinOp::Add, P(a), P(b)) => Ok(P(a + b)),
        (BinOp::Sub, P(a), P(b)) => Ok(P(a - b)),
        (BinOp::Mul, S(k), P(p)) | (BinOp::Mul, P(p), S(k)) => Ok(P(p.scale(&k))),
        (BinOp::Div, P(p), S(k)) => k.recip().map(|inv| P(p.scale(&inv))),
        (op, l, r) => {
            return Err(type_error(
                pos,
                format!("operator {op:?} does not apply to {} and {}", l.kind(), r.kind()),
            ))
        }
    };
    Ok(result)
}
