//! Multivariate GCD by recursive primitive polynomial remainder sequences.
//!
//! A polynomial is viewed as univariate in its highest occurring variable
//! with coefficients in the remaining ones. Contents are split off
//! recursively and the primitive parts are reduced by a pseudo-remainder
//! sequence whose members are made primitive at every step. Before running
//! the sequence, a univariate image at an integer point bounds the degree
//! of the gcd in the main variable; a zero bound settles the gcd exactly.

use std::collections::BTreeMap;

use super::{Monomial, Polynomial};
use crate::scalar::Coefficient;

pub(super) fn gcd<C: Coefficient>(a: &Polynomial<C>, b: &Polynomial<C>) -> Polynomial<C> {
    if a.is_zero() {
        return b.normalized();
    }
    if b.is_zero() || a == b {
        return a.normalized();
    }
    if a.is_constant() || b.is_constant() {
        return Polynomial::one();
    }
    if a.len() == 1 || b.len() == 1 {
        let m = monomial_content(a).gcd(&monomial_content(b));
        return Polynomial::from_terms(a.table.clone().or_else(|| b.table.clone()), [(m, C::one())]);
    }

    // Peel off monomial content so the recursion sees fewer trivial factors.
    let ma = monomial_content(a);
    let mb = monomial_content(b);
    let shared = ma.gcd(&mb);
    if !ma.is_one() || !mb.is_one() {
        let a1 = strip_monomial(a, &ma);
        let b1 = strip_monomial(b, &mb);
        return times_monomial(&gcd(&a1, &b1), &shared).with_table_of(a);
    }

    let vars_a = a.occurring_vars();
    let vars_b = b.occurring_vars();
    let main = *vars_a.iter().chain(vars_b.iter()).max().expect("non-constant");
    let in_a = vars_a.contains(&main);
    let in_b = vars_b.contains(&main);
    if !in_a {
        return gcd_with_coefficients(a, b, main);
    }
    if !in_b {
        return gcd_with_coefficients(b, a, main);
    }

    let ca = content(a, main);
    let cb = content(b, main);
    let c = gcd(&ca, &cb);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    let g = primitive_gcd(&pa, &pb, main);
    (&c * &g).normalized().with_table_of(a)
}

/// gcd of `free` (not involving `main`) with `other`: it must divide every
/// coefficient of `other` viewed as a polynomial in `main`.
fn gcd_with_coefficients<C: Coefficient>(free: &Polynomial<C>, other: &Polynomial<C>, main: usize) -> Polynomial<C> {
    let mut g = free.clone();
    for coeff in split(other, main).iter().rev() {
        if coeff.is_zero() {
            continue;
        }
        g = gcd(&g, coeff);
        if g.is_constant() {
            return Polynomial::one();
        }
    }
    g.normalized()
}

/// gcd of the coefficients of `p` viewed as a polynomial in `main`.
fn content<C: Coefficient>(p: &Polynomial<C>, main: usize) -> Polynomial<C> {
    let mut coeffs: Vec<Polynomial<C>> = split(p, main).into_iter().filter(|c| !c.is_zero()).collect();
    // Smallest first: the gcd is bounded by it.
    coeffs.sort_by_key(|c| c.len());
    let mut g = Polynomial::zero();
    for coeff in &coeffs {
        g = gcd(&g, coeff);
        if g.is_constant() {
            return Polynomial::one();
        }
    }
    g
}

fn primitive_gcd<C: Coefficient>(a: &Polynomial<C>, b: &Polynomial<C>, main: usize) -> Polynomial<C> {
    let (a, b) = if a.degree_in(main) >= b.degree_in(main) {
        (a, b)
    } else {
        (b, a)
    };
    if let Some(bound) = image_degree_bound(a, b, main) {
        if bound == 0 {
            return Polynomial::one();
        }
        if bound == b.degree_in(main) && a.div_exact(b).is_ok() {
            return b.normalized();
        }
    }

    let mut f = split(a, main);
    let mut g = split(b, main);
    loop {
        let r = pseudo_remainder(&f, &g);
        if r.is_empty() {
            break;
        }
        if r.len() == 1 {
            // Nonzero remainder free of `main`: the primitive parts are coprime.
            return Polynomial::one();
        }
        f = g;
        g = primitive_part(r);
    }
    join(&g, main).normalized()
}

/// Upper bound on `deg_main gcd(a, b)` from a univariate image, or `None` if
/// no admissible evaluation point was found.
fn image_degree_bound<C: Coefficient>(a: &Polynomial<C>, b: &Polynomial<C>, main: usize) -> Option<u32> {
    let arity = a.occurring_vars().into_iter().chain(b.occurring_vars()).max()? + 1;
    const SEEDS: [i64; 12] = [3, -5, 7, 11, -13, 17, 19, -23, 29, 31, -37, 41];
    for attempt in 0..4 {
        let point: Vec<C> = (0..arity)
            .map(|i| C::from_i64(SEEDS[(i + attempt * 5) % SEEDS.len()] + attempt as i64))
            .collect();
        let ia = univariate_image(a, main, &point);
        let ib = univariate_image(b, main, &point);
        // The image degree must not drop, or the bound is invalid.
        if ia.len() as u32 != a.degree_in(main) + 1 || ib.len() as u32 != b.degree_in(main) + 1 {
            continue;
        }
        return Some(univariate_gcd_degree(ia, ib));
    }
    None
}

fn univariate_image<C: Coefficient>(p: &Polynomial<C>, main: usize, point: &[C]) -> Vec<C> {
    let mut out = vec![C::zero(); p.degree_in(main) as usize + 1];
    for (degree, coeff) in split(p, main).iter().enumerate() {
        out[degree] = coeff.eval_at(point);
    }
    while out.last().is_some_and(|c| c.is_zero()) {
        out.pop();
    }
    out
}

fn univariate_gcd_degree<C: Coefficient>(mut a: Vec<C>, mut b: Vec<C>) -> u32 {
    while !b.is_empty() {
        let lead = b.last().unwrap().clone();
        while a.len() >= b.len() {
            let q = a.last().unwrap().try_div(&lead).expect("nonzero leading coefficient");
            let shift = a.len() - b.len();
            for (j, bc) in b.iter().enumerate() {
                a[j + shift] = a[j + shift].clone() - q.clone() * bc.clone();
            }
            a.pop();
            while a.last().is_some_and(|c| c.is_zero()) {
                a.pop();
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len().saturating_sub(1) as u32
}

fn pseudo_remainder<C: Coefficient>(f: &[Polynomial<C>], g: &[Polynomial<C>]) -> Vec<Polynomial<C>> {
    let dg = g.len() - 1;
    let lead = &g[dg];
    let mut r = f.to_vec();
    while r.len() > dg {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - dg;
        for c in r.iter_mut() {
            *c = &*c * lead;
        }
        for (j, gc) in g.iter().enumerate() {
            r[j + shift] = &r[j + shift] - &(&lr * gc);
        }
        while r.last().is_some_and(|c| c.is_zero()) {
            r.pop();
        }
    }
    r
}

fn primitive_part<C: Coefficient>(coeffs: Vec<Polynomial<C>>) -> Vec<Polynomial<C>> {
    let mut sorted: Vec<&Polynomial<C>> = coeffs.iter().filter(|c| !c.is_zero()).collect();
    sorted.sort_by_key(|c| c.len());
    let mut g = Polynomial::zero();
    for c in sorted {
        g = gcd(&g, c);
        if g.is_constant() {
            break;
        }
    }
    let scaled: Vec<Polynomial<C>> = if g.is_constant() {
        coeffs
    } else {
        coeffs
            .iter()
            .map(|c| c.div_exact(&g).expect("content divides"))
            .collect()
    };
    // Keep numeric content in check as well.
    let all: Vec<&C> = scaled.iter().flat_map(|c| c.terms.values()).collect();
    let u = C::normalizer(&all);
    scaled.iter().map(|c| c.scale(&u)).collect()
}

/// Coefficients of `p` as a polynomial in variable `main`, lowest degree first.
pub(super) fn split<C: Coefficient>(p: &Polynomial<C>, main: usize) -> Vec<Polynomial<C>> {
    let degree = p.degree_in(main) as usize;
    let mut parts: Vec<BTreeMap<Monomial, C>> = vec![BTreeMap::new(); degree + 1];
    for (m, c) in &p.terms {
        let e = m.exponent(main) as usize;
        parts[e].insert(m.with_exponent(main, 0), c.clone());
    }
    parts
        .into_iter()
        .map(|terms| Polynomial {
            table: p.table.clone(),
            terms,
        })
        .collect()
}

fn join<C: Coefficient>(coeffs: &[Polynomial<C>], main: usize) -> Polynomial<C> {
    let table = coeffs.iter().find_map(|c| c.table.clone());
    let mut terms = BTreeMap::new();
    for (e, coeff) in coeffs.iter().enumerate() {
        for (m, c) in &coeff.terms {
            terms.insert(m.with_exponent(main, e as u32), c.clone());
        }
    }
    Polynomial { table, terms }
}

fn monomial_content<C>(p: &Polynomial<C>) -> Monomial {
    let mut it = p.terms.keys();
    let first = it.next().cloned().unwrap_or_default();
    it.fold(first, |acc, m| acc.gcd(m))
}

fn strip_monomial<C: Coefficient>(p: &Polynomial<C>, m: &Monomial) -> Polynomial<C> {
    if m.is_one() {
        return p.clone();
    }
    let terms = p
        .terms
        .iter()
        .map(|(k, c)| (k.div(m).expect("monomial content divides"), c.clone()))
        .collect();
    Polynomial {
        table: p.table.clone(),
        terms,
    }
}

fn times_monomial<C: Coefficient>(p: &Polynomial<C>, m: &Monomial) -> Polynomial<C> {
    let terms = p.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect();
    Polynomial {
        table: p.table.clone(),
        terms,
    }
}

impl<C: Coefficient> Polynomial<C> {
    fn with_table_of(mut self, other: &Polynomial<C>) -> Self {
        if self.table.is_none() {
            self.table = other.table.clone();
        }
        self
    }
}
