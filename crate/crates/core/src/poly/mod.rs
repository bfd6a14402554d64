//! Sparse multivariate polynomials over an exact coefficient field.
//!
//! Terms live in a map keyed by [`Monomial`] under graded lexicographic
//! order: higher total degree first, ties broken lexicographically in the
//! variable order of the [`VarTable`] (earlier variables dominate). No
//! stored coefficient is ever zero, so the zero polynomial is the empty map.

mod display;
mod gcd;

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::scalar::Coefficient;

/// An ordered list of distinct indeterminate names.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VarTable(Arc<[String]>);

impl VarTable {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::InvalidTable("empty indeterminate name".into()));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidTable(format!("duplicate indeterminate `{name}`")));
            }
        }
        Ok(VarTable(names.into()))
    }

    /// The table `m, n, M, N` of the quadrilateral parameters.
    pub fn leversha() -> Self {
        VarTable::new(["m", "n", "M", "N"]).expect("static table is valid")
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn name(&self, index: usize) -> &str {
        &self.0[index]
    }
}

impl fmt::Debug for VarTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

/// Exponent vector. Trailing zero exponents are never stored, so a monomial
/// is meaningful in any table at least as long as its vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[u32; 4]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        let mut v: SmallVec<[u32; 4]> = exps.iter().copied().collect();
        trim(&mut v);
        Monomial(v)
    }

    pub fn var(index: usize) -> Self {
        let mut v: SmallVec<[u32; 4]> = SmallVec::from_elem(0, index + 1);
        v[index] = 1;
        Monomial(v)
    }

    pub fn exponent(&self, index: usize) -> u32 {
        self.0.get(index).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut v = long.0.clone();
        for (e, s) in v.iter_mut().zip(short.0.iter()) {
            *e += s;
        }
        Monomial(v)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.0.len() > self.0.len() {
            return None;
        }
        let mut v = self.0.clone();
        for (e, d) in v.iter_mut().zip(other.0.iter()) {
            *e = e.checked_sub(*d)?;
        }
        trim(&mut v);
        Some(Monomial(v))
    }

    /// Component-wise minimum.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut v: SmallVec<[u32; 4]> = self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.min(b)).collect();
        trim(&mut v);
        Monomial(v)
    }

    fn with_exponent(&self, index: usize, exp: u32) -> Monomial {
        let mut v = self.0.clone();
        if v.len() <= index {
            v.resize(index + 1, 0);
        }
        v[index] = exp;
        trim(&mut v);
        Monomial(v)
    }
}

fn trim(v: &mut SmallVec<[u32; 4]>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree().cmp(&other.total_degree()).then_with(|| {
            let n = self.0.len().max(other.0.len());
            (0..n)
                .map(|i| self.exponent(i).cmp(&other.exponent(i)))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

/// A polynomial over the coefficient field `C`.
///
/// A polynomial built without a table (a bare constant) combines with a
/// polynomial over any table; two polynomials over different tables do not.
#[derive(Clone)]
pub struct Polynomial<C> {
    table: Option<VarTable>,
    terms: BTreeMap<Monomial, C>,
}

fn join_tables(a: &Option<VarTable>, b: &Option<VarTable>) -> Result<Option<VarTable>> {
    match (a, b) {
        (Some(x), Some(y)) if x != y => Err(Error::TableMismatch),
        (Some(x), _) => Ok(Some(x.clone())),
        (None, y) => Ok(y.clone()),
    }
}

impl<C: Coefficient> Polynomial<C> {
    pub fn zero() -> Self {
        Polynomial {
            table: None,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Polynomial { table: None, terms }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    /// The indeterminate `name` of `table`.
    pub fn var(table: &VarTable, name: &str) -> Result<Self> {
        let index = table
            .index_of(name)
            .ok_or_else(|| Error::MissingBinding(name.to_string()))?;
        Ok(Self::var_at(table, index))
    }

    pub fn var_at(table: &VarTable, index: usize) -> Self {
        assert!(index < table.arity(), "variable index out of range");
        Self::from_terms(Some(table.clone()), [(Monomial::var(index), C::one())])
    }

    /// Builds a polynomial from terms, summing repeated monomials.
    pub fn from_terms<I>(table: Option<VarTable>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, C)>,
    {
        let arity = table.as_ref().map_or(0, VarTable::arity);
        let mut map: BTreeMap<Monomial, C> = BTreeMap::new();
        for (m, c) in terms {
            assert!(m.0.len() <= arity, "monomial has more variables than the table");
            accumulate(&mut map, m, c);
        }
        Polynomial { table, terms: map }
    }

    pub fn table(&self) -> Option<&VarTable> {
        self.table.as_ref()
    }

    /// Re-labels a table-free polynomial (a constant) with `table`.
    pub fn with_table(mut self, table: &VarTable) -> Result<Self> {
        self.table = join_tables(&self.table, &Some(table.clone()))?;
        Ok(self)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The value of a constant polynomial.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.last_key_value()
    }

    pub fn leading_coefficient(&self) -> Option<&C> {
        self.leading_term().map(|(_, c)| c)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.total_degree())
    }

    pub fn degree_in(&self, index: usize) -> u32 {
        self.terms.keys().map(|m| m.exponent(index)).max().unwrap_or(0)
    }

    /// Indices of the indeterminates that occur with a positive exponent.
    pub fn occurring_vars(&self) -> Vec<usize> {
        let mut seen: Vec<usize> = Vec::new();
        for m in self.terms.keys() {
            for (i, e) in m.0.iter().enumerate() {
                if *e > 0 && !seen.contains(&i) {
                    seen.push(i);
                }
            }
        }
        seen.sort_unstable();
        seen
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        let table = join_tables(&self.table, &rhs.table)?;
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            accumulate(&mut terms, m.clone(), c.clone());
        }
        Ok(Polynomial { table, terms })
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self> {
        let table = join_tables(&self.table, &rhs.table)?;
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            accumulate(&mut terms, m.clone(), -c.clone());
        }
        Ok(Polynomial { table, terms })
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        let table = join_tables(&self.table, &rhs.table)?;
        if self.is_zero() || rhs.is_zero() {
            return Ok(Polynomial {
                table,
                terms: BTreeMap::new(),
            });
        }
        let mut acc: HashMap<Monomial, C> = HashMap::with_capacity(self.len() * rhs.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let m = ma.mul(mb);
                let c = ca.clone() * cb.clone();
                match acc.get_mut(&m) {
                    Some(slot) => *slot = slot.clone() + c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(Polynomial { table, terms })
    }

    pub fn scale(&self, factor: &C) -> Self {
        if factor.is_zero() {
            return Polynomial {
                table: self.table.clone(),
                terms: BTreeMap::new(),
            };
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.clone() * factor.clone()))
            .collect();
        Polynomial {
            table: self.table.clone(),
            terms,
        }
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut result = Polynomial::one();
        result.table = self.table.clone();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Evaluates at the named bindings; only occurring indeterminates need one.
    pub fn eval(&self, subst: &HashMap<String, C>) -> Result<C> {
        let mut point: Vec<Option<C>> = Vec::new();
        for index in self.occurring_vars() {
            let table = self.table.as_ref().expect("non-constant polynomial has a table");
            let name = table.name(index);
            let value = subst
                .get(name)
                .cloned()
                .ok_or_else(|| Error::MissingBinding(name.to_string()))?;
            if point.len() <= index {
                point.resize(index + 1, None);
            }
            point[index] = Some(value);
        }
        let point: Vec<C> = point.into_iter().map(|v| v.unwrap_or_else(C::zero)).collect();
        Ok(self.eval_at(&point))
    }

    /// Evaluates with `point[i]` substituted for variable `i`.
    pub fn eval_at(&self, point: &[C]) -> C {
        let mut powers: Vec<Vec<C>> = vec![vec![C::one()]; point.len()];
        let mut total = C::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[i];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap().clone() * point[i].clone();
                    cache.push(next);
                }
                term = term * cache[e as usize].clone();
            }
            total = total + term;
        }
        total
    }

    /// Exact quotient `self / divisor`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let table = join_tables(&self.table, &divisor.table)?;
        let (lead_m, lead_c) = divisor.leading_term().ok_or(Error::DivisionByZero)?;
        if let Some(c) = divisor.as_constant() {
            let inv = C::one().try_div(&c)?;
            let mut q = self.scale(&inv);
            q.table = table;
            return Ok(q);
        }
        let mut remainder = self.terms.clone();
        let mut quotient: BTreeMap<Monomial, C> = BTreeMap::new();
        while let Some((rm, rc)) = remainder.last_key_value() {
            let qm = rm.div(lead_m).ok_or(Error::InexactDivision)?;
            let qc = rc.try_div(lead_c)?;
            for (dm, dc) in &divisor.terms {
                accumulate(&mut remainder, dm.mul(&qm), -(dc.clone() * qc.clone()));
            }
            quotient.insert(qm, qc);
        }
        Ok(Polynomial { table, terms: quotient })
    }

    /// A greatest common divisor, primitive with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        let table = join_tables(&self.table, &other.table)?;
        let mut g = gcd::gcd(self, other);
        g.table = table;
        Ok(g)
    }

    /// The unit multiple preferred by the coefficient field (for rationals:
    /// integral, primitive, positive leading coefficient).
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.normalizer())
    }

    fn normalizer(&self) -> C {
        let coeffs: Vec<&C> = self.terms.values().collect();
        C::normalizer(&coeffs)
    }

    /// The unit factor and primitive part: `self = content * primitive`.
    pub fn content_and_primitive(&self) -> (C, Self) {
        if self.is_zero() {
            return (C::one(), self.clone());
        }
        let u = self.normalizer();
        let content = C::one().try_div(&u).expect("normalizer is nonzero");
        (content, self.scale(&u))
    }

    /// `self` with `value` substituted for variable `index`.
    pub fn substitute(&self, index: usize, value: &Self) -> Self {
        let mut out = Polynomial {
            table: self.table.clone(),
            terms: BTreeMap::new(),
        };
        for coeff in gcd::split(self, index).into_iter().rev() {
            out = &(&out * value) + &coeff;
        }
        out
    }
}

fn accumulate<C: Coefficient>(map: &mut BTreeMap<Monomial, C>, m: Monomial, c: C) {
    if c.is_zero() {
        return;
    }
    match map.get_mut(&m) {
        Some(slot) => {
            let sum = slot.clone() + c;
            if sum.is_zero() {
                map.remove(&m);
            } else {
                *slot = sum;
            }
        }
        None => {
            map.insert(m, c);
        }
    }
}

impl<C: Coefficient> PartialEq for Polynomial<C> {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && join_tables(&self.table, &other.table).is_ok()
    }
}

impl<C: Coefficient> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

// Operators panic on mismatched tables; the `checked_*` forms report it.
macro_rules! poly_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a, C: Coefficient> $tr<&'a Polynomial<C>> for &'a Polynomial<C> {
            type Output = Polynomial<C>;
            fn $method(self, rhs: &'a Polynomial<C>) -> Polynomial<C> {
                self.$checked(rhs).expect("polynomials over different tables")
            }
        }
        impl<C: Coefficient> $tr for Polynomial<C> {
            type Output = Polynomial<C>;
            fn $method(self, rhs: Polynomial<C>) -> Polynomial<C> {
                (&self).$method(&rhs)
            }
        }
        impl<'a, C: Coefficient> $tr<&'a Polynomial<C>> for Polynomial<C> {
            type Output = Polynomial<C>;
            fn $method(self, rhs: &'a Polynomial<C>) -> Polynomial<C> {
                (&self).$method(rhs)
            }
        }
        impl<'a, C: Coefficient> $tr<Polynomial<C>> for &'a Polynomial<C> {
            type Output = Polynomial<C>;
            fn $method(self, rhs: Polynomial<C>) -> Polynomial<C> {
                self.$method(&rhs)
            }
        }
    };
}

poly_binop!(Add, add, checked_add);
poly_binop!(Sub, sub, checked_sub);
poly_binop!(Mul, mul, checked_mul);

impl<C: Coefficient> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect();
        Polynomial {
            table: self.table.clone(),
            terms,
        }
    }
}

impl<C: Coefficient> Neg for Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        -&self
    }
}

impl<C: Coefficient> Zero for Polynomial<C> {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Coefficient> One for Polynomial<C> {
    fn one() -> Self {
        Polynomial::one()
    }
}
