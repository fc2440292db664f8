//! The trace map: substitute every per-edge variable by one variable `t`.

use crate::diagram::{ColoredDiagram, Diagram, DiagramVector};
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, RationalFn};

use super::QuotientSpace;

/// A rational-function colored class written as `numerator / denominator`.
///
/// Edge `i` carries `q_i / p_i` with `p_i(0) = 1`; the numerator is the
/// Linearity expansion of the diagram colored by the `q_i`, and the
/// denominator is the product of the `p_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TracedClass {
    pub edge_denominators: Vec<LaurentPoly>,
    pub denominator: LaurentPoly,
    pub numerator: DiagramVector,
}

impl TracedClass {
    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// The same class with the numerator in normal form.
    pub fn reduced(&self, q: &QuotientSpace) -> Result<Self> {
        Ok(Self { numerator: q.reduce(&self.numerator)?, ..self.clone() })
    }
}

/// Traces `shape` with one rational function per edge (Wilson edges included).
pub fn trace(shape: &Diagram, edge_fns: &[RationalFn]) -> Result<TracedClass> {
    if edge_fns.len() != shape.edges().len() {
        return Err(Error::Argument(format!(
            "{} edge functions for {} edges",
            edge_fns.len(),
            shape.edges().len()
        )));
    }
    let mut denominator = LaurentPoly::one();
    let mut numerators = Vec::with_capacity(edge_fns.len());
    let mut edge_denominators = Vec::with_capacity(edge_fns.len());
    for f in edge_fns {
        denominator = &denominator * f.den();
        edge_denominators.push(f.den().clone());
        numerators.push(f.num().clone());
    }
    let numerator = ColoredDiagram::new(shape.with_colors(&vec![0; shape.edges().len()]), numerators)?.expand();
    Ok(TracedClass { edge_denominators, denominator, numerator })
}

/// Like [`trace`] but from raw numerator/denominator pairs.
pub fn trace_fractions(shape: &Diagram, parts: &[(LaurentPoly, LaurentPoly)]) -> Result<TracedClass> {
    let fns: Result<Vec<RationalFn>> =
        parts.iter().map(|(n, d)| RationalFn::new(n.clone(), d.clone())).collect();
    trace(shape, &fns?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;
    use std::collections::BTreeMap;

    fn chord(p: i64, q: i64) -> Diagram {
        Diagram::build(2, vec![0, 1], &[p, -p], &[(1, 0, q)], BTreeMap::new()).unwrap()
    }

    fn mono(e: i64) -> RationalFn {
        RationalFn::from_poly(LaurentPoly::monomial(q(1), e))
    }

    #[test]
    fn chord_squared() {
        let tr = trace(&chord(0, 0), &[mono(0), mono(0), mono(2)]).unwrap();
        assert!(tr.denominator.is_one());
        assert_eq!(tr.numerator, DiagramVector::from_diagram(&chord(0, 2)).unwrap());
    }

    #[test]
    fn identity_substitution() {
        let d = chord(1, -1);
        let tr = trace(&d, &[mono(0), mono(0), mono(0)]).unwrap();
        assert_eq!(tr.numerator, DiagramVector::from_diagram(&chord(0, 0)).unwrap());
    }

    #[test]
    fn geometric_chord() {
        let f = RationalFn::new(LaurentPoly::t(), LaurentPoly::from_coeffs(0, &[1, -1])).unwrap();
        let tr = trace(&chord(0, 0), &[mono(0), mono(0), f]).unwrap();
        assert_eq!(tr.denominator, LaurentPoly::from_coeffs(0, &[1, -1]));
        assert_eq!(tr.numerator, DiagramVector::from_diagram(&chord(0, 1)).unwrap());
    }

    #[test]
    fn zero_denominator() {
        let parts = vec![(LaurentPoly::one(), LaurentPoly::zero()); 3];
        assert!(matches!(trace_fractions(&chord(0, 0), &parts), Err(Error::Arithmetic(_))));
    }
}
