//! Closed-form coordinates and circumradius, kept as script text.

use crate::geom::Point;
use crate::script::{parse_source, Environment, Value};
use crate::{RatFunc, VarTable};

pub const FORMULAS: &str = include_str!("../../scripts/closed_forms.rg");

#[derive(Clone, Debug)]
pub struct Formulas {
    pub bstar: Point<RatFunc>,
    pub cstar: Point<RatFunc>,
    pub radius: RatFunc,
}

impl Formulas {
    /// Parses [`FORMULAS`] over the table `m, n, M, N`.
    pub fn load() -> Self {
        let script = parse_source(FORMULAS).expect("formula fixture parses");
        let mut env = Environment::with_table(VarTable::leversha());
        let report = env.run(&script);
        assert!(report.error.is_none(), "formula fixture evaluates: {:?}", report.error);
        let point = |name: &str| match env.get(name) {
            Some(Value::Point(p)) => p.clone(),
            other => panic!("fixture `{name}` is not a point: {other:?}"),
        };
        let radius = match env.get("Radius") {
            Some(Value::Scalar(r)) => r.clone(),
            other => panic!("fixture `Radius` is not a scalar: {other:?}"),
        };
        Formulas {
            bstar: point("Bstar"),
            cstar: point("Cstar"),
            radius,
        }
    }
}
