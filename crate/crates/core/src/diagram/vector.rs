use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::canonical::canonicalize_unchecked;
use super::Diagram;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::rational::{pretty_q, q, Q};

/// A finite rational combination of canonical diagrams.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DiagramVector {
    terms: BTreeMap<Diagram, Q>,
}

impl DiagramVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The class of a single diagram; canonicalizes and applies the AS sign.
    pub fn from_diagram(d: &Diagram) -> Result<Self> {
        d.validate()?;
        let mut v = Self::zero();
        v.add_diagram(d, &Q::one());
        Ok(v)
    }

    /// Adds `coeff * d` where `d` is any valid diagram.
    pub fn add_diagram(&mut self, d: &Diagram, coeff: &Q) {
        let c = canonicalize_unchecked(d);
        if c.sign != 0 {
            self.add_canonical(c.diagram, coeff * q(c.sign as i64));
        }
    }

    /// Adds `coeff * d` where `d` is already canonical.
    pub fn add_canonical(&mut self, d: Diagram, coeff: Q) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(d) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Diagram, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, d: &Diagram) -> Q {
        self.terms.get(d).cloned().unwrap_or_else(Q::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(d, x)| (d.clone(), x * c)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_canonical(d.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&q(-1)))
    }

    pub fn into_terms(self) -> BTreeMap<Diagram, Q> {
        self.terms
    }
}

impl FromIterator<(Diagram, Q)> for DiagramVector {
    fn from_iter<I: IntoIterator<Item = (Diagram, Q)>>(it: I) -> Self {
        let mut v = Self::zero();
        for (d, c) in it {
            v.add_canonical(d, c);
        }
        v
    }
}

impl fmt::Display for DiagramVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*[{}]", pretty_q(c), super::json::short_name(d))?;
        }
        Ok(())
    }
}

/// A diagram whose edges carry arbitrary Laurent polynomials.
///
/// Expanding multilinearly in each edge color gives a [`DiagramVector`] of
/// monomially colored diagrams.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredDiagram {
    shape: Diagram,
    colors: Vec<LaurentPoly>,
}

impl ColoredDiagram {
    pub fn new(shape: Diagram, colors: Vec<LaurentPoly>) -> Result<Self> {
        if colors.len() != shape.edges().len() {
            return Err(Error::Structural(format!(
                "{} colors given for {} edges",
                colors.len(),
                shape.edges().len()
            )));
        }
        shape.validate()?;
        Ok(Self { shape, colors })
    }

    pub fn from_monomial(d: &Diagram) -> Self {
        let colors = d.edges().iter().map(|e| LaurentPoly::monomial(q(1), e.color)).collect();
        Self { shape: d.clone(), colors }
    }

    pub fn shape(&self) -> &Diagram {
        &self.shape
    }

    pub fn colors(&self) -> &[LaurentPoly] {
        &self.colors
    }

    /// The monomial diagram when every color is exactly `t^c`.
    pub fn as_monomial(&self) -> Option<Diagram> {
        let mut exps = Vec::with_capacity(self.colors.len());
        for c in &self.colors {
            match c.as_monomial() {
                Some((k, e)) if k.is_one() => exps.push(e),
                _ => return None,
            }
        }
        Some(self.shape.with_colors(&exps))
    }

    /// Linearity expansion.
    pub fn expand(&self) -> DiagramVector {
        let mut out = DiagramVector::zero();
        let mut exps = vec![0i64; self.colors.len()];
        self.expand_rec(0, Q::one(), &mut exps, &mut out);
        out
    }

    fn expand_rec(&self, i: usize, coeff: Q, exps: &mut Vec<i64>, out: &mut DiagramVector) {
        if i == self.colors.len() {
            out.add_diagram(&self.shape.with_colors(exps), &coeff);
            return;
        }
        for (e, c) in self.colors[i].terms() {
            exps[i] = e;
            self.expand_rec(i + 1, &coeff * c, exps, out);
        }
    }
}

/// Serialized as a list of `{name, coefficient, diagram}` in canonical order.
impl serde::Serialize for DiagramVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        #[derive(serde::Serialize)]
        struct Term {
            name: String,
            coefficient: String,
            diagram: super::json::DiagramJson,
        }
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (d, c) in &self.terms {
            seq.serialize_element(&Term {
                name: super::json::short_name(d),
                coefficient: crate::rational::format_q(c),
                diagram: super::json::DiagramJson::from_diagram(d),
            })?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chord(p: i64, q: i64) -> Diagram {
        Diagram::build(2, vec![0, 1], &[p, -p], &[(1, 0, q)], BTreeMap::new()).unwrap()
    }

    #[test]
    fn linearity_expansion() {
        let shape = chord(0, 0);
        let colors = vec![
            LaurentPoly::one(),
            LaurentPoly::one(),
            LaurentPoly::from_coeffs(1, &[3, 0, -2]),
        ];
        let v = ColoredDiagram::new(shape, colors).unwrap().expand();
        let expect = DiagramVector::from_diagram(&chord(0, 1))
            .unwrap()
            .scale(&q(3))
            .sub(&DiagramVector::from_diagram(&chord(0, 3)).unwrap().scale(&q(2)));
        assert_eq!(v, expect);
    }

    #[test]
    fn cancellation_removes_terms() {
        let a = DiagramVector::from_diagram(&chord(0, 2)).unwrap();
        let b = DiagramVector::from_diagram(&chord(0, -2)).unwrap();
        assert!(a.sub(&b).is_zero());
    }
}
