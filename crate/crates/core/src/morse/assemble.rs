use std::collections::BTreeMap;

use serde::Serialize;

use super::ClosedOrbitSeries;
use crate::diagram::{Diagram, EdgeKind};
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, RationalFn};
use crate::rational::q;
use crate::relations::trace::{trace, TracedClass};

/// One factor `f_i(t_i)` of the product form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeFactor {
    pub edge: usize,
    pub variable: String,
    pub series: RationalFn,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssembledF {
    pub factors: Vec<EdgeFactor>,
    pub traced: TracedClass,
}

/// Self-loops take the self-loop series; other non-Wilson edges are looked up
/// in `pairing`.
pub fn edge_series_for(
    shape: &Diagram,
    series: &ClosedOrbitSeries,
    pairing: &BTreeMap<usize, RationalFn>,
) -> Result<BTreeMap<usize, RationalFn>> {
    let mut out = BTreeMap::new();
    for (i, e) in shape.edges().iter().enumerate() {
        match e.kind {
            EdgeKind::Wilson => {}
            EdgeKind::SelfLoop => {
                out.insert(i, series.self_loop_series.clone());
            }
            EdgeKind::Internal => {
                let f = pairing
                    .get(&i)
                    .ok_or_else(|| Error::Argument(format!("no pairing series for edge {i}")))?;
                out.insert(i, f.clone());
            }
        }
    }
    Ok(out)
}

/// Product form of `F_Γ` with one variable per non-Wilson edge, each
/// denominator checked against `(1 - t)^2 Δ(t)`, then traced to one variable.
/// Wilson edges keep their monomial colors.
pub fn assemble_f(
    shape: &Diagram,
    edge_series: &BTreeMap<usize, RationalFn>,
    alexander: &LaurentPoly,
) -> Result<AssembledF> {
    let bound = &LaurentPoly::from_coeffs(0, &[1, -2, 1]) * alexander;
    let mut factors = Vec::new();
    let mut fns = Vec::with_capacity(shape.edges().len());
    for (i, e) in shape.edges().iter().enumerate() {
        if e.kind == EdgeKind::Wilson {
            fns.push(RationalFn::from_poly(LaurentPoly::monomial(q(1), e.color)));
            continue;
        }
        let f = edge_series
            .get(&i)
            .ok_or_else(|| Error::Argument(format!("no series for non-Wilson edge {i}")))?;
        if !f.den().divides_up_to_units(&bound) {
            return Err(Error::InvariantViolation(format!(
                "denominator {} of edge {i} does not divide (1 - t)^2 * ({alexander})",
                f.den()
            )));
        }
        factors.push(EdgeFactor { edge: i, variable: format!("t_{}", factors.len() + 1), series: f.clone() });
        fns.push(f.clone());
    }
    if let Some(extra) = edge_series.keys().find(|&&i| shape.edges().get(i).is_none_or(|e| e.kind == EdgeKind::Wilson))
    {
        return Err(Error::Argument(format!("series given for edge {extra}, which is not a non-Wilson edge")));
    }
    let traced = trace(shape, &fns)?;
    Ok(AssembledF { factors, traced })
}

#[cfg(test)]
mod tests {
    use super::super::{closed_orbit_series, fixtures};
    use super::*;
    use crate::relations::{build_quotient, Conventions, Window};
    use crate::theta::{omega, theta};

    fn geometric() -> RationalFn {
        RationalFn::new(LaurentPoly::t(), LaurentPoly::from_coeffs(0, &[1, -1])).unwrap()
    }

    fn chord_index(d: &Diagram) -> usize {
        d.edges().iter().position(|e| e.kind != EdgeKind::Wilson).unwrap()
    }

    #[test]
    fn omega_shape_traces_to_zero() {
        let m = fixtures::s2_times_s1();
        let s = closed_orbit_series(&m, 4).unwrap();
        let shape = omega(0);
        let leg = shape.edges().iter().position(|e| e.kind == EdgeKind::Internal).unwrap();
        let edge_series = edge_series_for(&shape, &s, &BTreeMap::from([(leg, RationalFn::one())])).unwrap();
        let f = assemble_f(&shape, &edge_series, &LaurentPoly::one()).unwrap();
        assert!(!f.traced.is_zero());
        let qs = build_quotient(Window::nh(1, 2), Conventions::default()).unwrap();
        assert!(f.traced.reduced(&qs).unwrap().is_zero());
    }

    #[test]
    fn zero_series_gives_zero() {
        let shape = theta(0, 0);
        let series = BTreeMap::from([(chord_index(&shape), RationalFn::zero())]);
        assert!(assemble_f(&shape, &series, &LaurentPoly::one()).unwrap().traced.is_zero());
    }

    #[test]
    fn chord_with_geometric_series() {
        let shape = theta(0, 0);
        let series = BTreeMap::from([(chord_index(&shape), geometric())]);
        let f = assemble_f(&shape, &series, &LaurentPoly::one()).unwrap();
        assert_eq!(f.factors.len(), 1);
        assert_eq!(f.traced.denominator, LaurentPoly::from_coeffs(0, &[1, -1]));

        let bad = RationalFn::new(LaurentPoly::one(), LaurentPoly::from_coeffs(0, &[1, 0, 1])).unwrap();
        let series = BTreeMap::from([(chord_index(&shape), bad)]);
        assert!(matches!(assemble_f(&shape, &series, &LaurentPoly::one()), Err(Error::InvariantViolation(_))));
    }
}
