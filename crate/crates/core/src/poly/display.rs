use std::fmt::{self, Write};

use super::{Monomial, Polynomial, VarTable};
use crate::scalar::Coefficient;

impl<C: Coefficient> Polynomial<C> {
    /// Terms in descending graded-lex order, e.g. `2*m*n + m`, `m^2 - n^2`.
    pub fn canonical_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let magnitude = if negative { -c.clone() } else { c.clone() };
            write_term(&mut out, &magnitude, m, self.table.as_ref());
        }
        out
    }

    /// Like [`canonical_string`](Self::canonical_string) with the rational
    /// content pulled out front: `1/6*(3*m + 2)`.
    pub fn canonical_string_factored(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let (content, primitive) = self.content_and_primitive();
        if primitive.is_constant() {
            return content.to_string();
        }
        if content.is_one() {
            primitive.canonical_string()
        } else if (-content.clone()).is_one() {
            format!("-({})", primitive.canonical_string())
        } else {
            format!("{content}*({})", primitive.canonical_string())
        }
    }
}

fn write_term<C: Coefficient>(out: &mut String, magnitude: &C, m: &Monomial, table: Option<&VarTable>) {
    if m.is_one() {
        let _ = write!(out, "{magnitude}");
        return;
    }
    if !magnitude.is_one() {
        let _ = write!(out, "{magnitude}*");
    }
    let table = table.expect("non-constant monomial needs a table");
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            out.push('*');
        }
        first = false;
        out.push_str(table.name(i));
        if e > 1 {
            let _ = write!(out, "^{e}");
        }
    }
}

impl<C: Coefficient> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}
