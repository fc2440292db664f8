//! Degree-one generators `Θ(p,q)`, `Ω(p)` and the maps `W` and `L` between the
//! nullhomologous degree-one quotient and `Q[t]/Q`.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::diagram::{Diagram, DiagramVector, EdgeKind, End, HalfEdge};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::rational::q;
use crate::relations::{build_quotient, Conventions, QuotientSpace, Window};

/// `t^p` on the Wilson arc from 0 to 1, `t^-p` on the arc back, and `t^q` on
/// the chord from 1 to 0.
pub fn theta(p: i64, q: i64) -> Diagram {
    Diagram::build(2, vec![0, 1], &[p, -p], &[(1, 0, q)], BTreeMap::new()).expect("valid theta")
}

/// A leg from the circle to a trivalent vertex carrying a self-loop colored `t^p`.
pub fn omega(p: i64) -> Diagram {
    let o = BTreeMap::from([(
        1,
        [HalfEdge::new(1, End::Head), HalfEdge::new(2, End::Tail), HalfEdge::new(2, End::Head)],
    )]);
    Diagram::build(2, vec![0], &[0], &[(0, 1, 0), (1, 1, p)], o).expect("valid omega")
}

/// An element of `Q[t]/Q`, stored with zero constant term.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct PolyModConstants(LaurentPoly);

impl PolyModConstants {
    pub fn new(p: LaurentPoly) -> Result<Self> {
        if !p.is_polynomial() {
            return Err(Error::Argument(format!("{p} has negative exponents")));
        }
        Ok(Self(LaurentPoly::from_terms(p.terms().filter(|(e, _)| *e != 0).map(|(e, c)| (e, c.clone())))))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn representative(&self) -> &LaurentPoly {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl fmt::Display for PolyModConstants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod Q", self.0)
    }
}

/// Holonomy `s` of a degree-one chord diagram around the loop made of a Wilson
/// arc and the chord. Defined up to sign.
fn chord_holonomy(d: &Diagram) -> i64 {
    let chord = d.edges().iter().find(|e| e.kind == EdgeKind::Internal).expect("chord");
    let w = d.edges().iter().find(|e| e.kind == EdgeKind::Wilson && e.tail == chord.head).expect("arc");
    // along w from chord.head to chord.tail, then along the chord
    w.color + chord.color
}

/// `W(Θ(p,q)) = t^|p+q|` and `W(Ω(p)) = 0`, extended linearly.
pub fn w_map(v: &DiagramVector) -> Result<PolyModConstants> {
    let mut out = LaurentPoly::zero();
    for (d, c) in v.terms() {
        if d.degree() != 1 {
            return Err(Error::Argument(format!("W is defined in degree 1, got degree {}", d.degree())));
        }
        if !d.is_nh() {
            return Err(Error::Argument("W needs nullhomologous diagrams".into()));
        }
        if d.is_chord_diagram() {
            out.add_term(chord_holonomy(d).abs(), c.clone());
        }
    }
    PolyModConstants::new(out)
}

/// `L(t^p) = Θ(0,p)`, extended linearly.
pub fn l_map(f: &PolyModConstants) -> DiagramVector {
    let mut out = DiagramVector::zero();
    for (e, c) in f.representative().terms() {
        out.add_diagram(&theta(0, e), c);
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsomorphismReport {
    pub max_exponent: i64,
    pub window: i64,
    pub checks: Vec<Check>,
    pub rank: usize,
    pub pass: bool,
}

/// Checks `L∘W = id`, `W∘L = id` and independence of `Θ(0,1..K)` inside the
/// nullhomologous degree-one window `K + 2`.
pub fn verify_isomorphism(max_exponent: i64) -> Result<IsomorphismReport> {
    verify_isomorphism_with(max_exponent, Conventions::default())
}

pub fn verify_isomorphism_with(max_exponent: i64, conv: Conventions) -> Result<IsomorphismReport> {
    if max_exponent < 1 {
        return Err(Error::Argument("verify_isomorphism needs K >= 1".into()));
    }
    let k = max_exponent;
    let qs = build_quotient(Window::nh(1, k + 2), conv)?;
    verify_in(&qs, k)
}

/// Same checks against an already built quotient.
pub fn verify_in(qs: &QuotientSpace, k: i64) -> Result<IsomorphismReport> {
    let half = k / 2;
    let mut failures = Vec::new();
    let mut count = 0;
    for p in -half..=half {
        for qq in -half..=half {
            let th = DiagramVector::from_diagram(&theta(p, qq))?;
            let lw = l_map(&w_map(&th)?);
            count += 1;
            if !qs.reduce(&lw.sub(&th))?.is_zero() {
                failures.push(format!("Θ({p},{qq})"));
            }
        }
    }
    let lw = Check {
        name: "L∘W = id".into(),
        pass: failures.is_empty(),
        detail: if failures.is_empty() {
            format!("{count} diagrams Θ(p,q) with |p|,|q| <= {half}")
        } else {
            format!("fails at {}", failures.join(", "))
        },
    };

    let mut failures = Vec::new();
    for p in 1..=k {
        let mono = PolyModConstants::new(LaurentPoly::monomial(q(1), p))?;
        let back = w_map(&qs.reduce(&l_map(&mono))?)?;
        if back != mono {
            failures.push(format!("t^{p} -> {back}"));
        }
    }
    let wl = Check {
        name: "W∘L = id".into(),
        pass: failures.is_empty(),
        detail: if failures.is_empty() { format!("t^1 .. t^{k}") } else { failures.join(", ") },
    };

    let thetas: Vec<DiagramVector> =
        (1..=k).map(|p| DiagramVector::from_diagram(&theta(0, p))).collect::<Result<_>>()?;
    let rank = qs.rank_of(&thetas)?;
    let ind = Check {
        name: "rank Θ(0,1..K)".into(),
        pass: rank == k as usize,
        detail: format!("rank {rank} of {k}"),
    };
    let pass = lw.pass && wl.pass && ind.pass;
    Ok(IsomorphismReport { max_exponent: k, window: qs.window().max_exponent, checks: vec![lw, wl, ind], rank, pass })
}

/// `W` applied after reduction; zero exactly when the class is zero.
pub fn w_of_class(qs: &QuotientSpace, v: &DiagramVector) -> Result<PolyModConstants> {
    w_map(&qs.reduce(v)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relations::generate_relations;

    fn w(d: &Diagram) -> PolyModConstants {
        w_map(&DiagramVector::from_diagram(d).unwrap()).unwrap()
    }

    fn t(p: i64) -> PolyModConstants {
        PolyModConstants::new(LaurentPoly::monomial(q(1), p)).unwrap()
    }

    #[test]
    fn values_on_generators() {
        assert_eq!(w(&theta(1, 2)), t(3));
        assert!(w(&theta(0, 0)).is_zero());
        assert!(w(&omega(5)).is_zero());
        assert_eq!(w(&theta(-1, -2)), t(3));
    }

    #[test]
    fn l_values() {
        assert_eq!(l_map(&t(2)), DiagramVector::from_diagram(&theta(0, 2)).unwrap());
        assert!(l_map(&PolyModConstants::zero()).is_zero());
        let f = PolyModConstants::new(LaurentPoly::from_terms([(1, q(3)), (4, q(-2))])).unwrap();
        let expect = DiagramVector::from_diagram(&theta(0, 1))
            .unwrap()
            .scale(&q(3))
            .sub(&DiagramVector::from_diagram(&theta(0, 4)).unwrap().scale(&q(2)));
        assert_eq!(l_map(&f), expect);
    }

    #[test]
    fn w_rejects_other_degrees() {
        let d = Diagram::build(4, vec![0, 1, 2, 3], &[0; 4], &[(0, 2, 0), (1, 3, 0)], BTreeMap::new()).unwrap();
        assert!(matches!(w_map(&DiagramVector::from_diagram(&d).unwrap()), Err(Error::Argument(_))));
    }

    #[test]
    fn w_kills_every_degree_one_relation() {
        for k in 1..=4 {
            for r in generate_relations(&Window::nh(1, k), Conventions::default()).unwrap() {
                assert!(w_map(&r.vector()).unwrap().is_zero(), "{r:?}");
            }
        }
    }

    #[test]
    fn small_isomorphism_checks() {
        for k in [1, 3] {
            let rep = verify_isomorphism(k).unwrap();
            assert!(rep.pass, "{rep:?}");
        }
        assert_eq!(verify_isomorphism(4).unwrap().rank, 4);
        assert!(verify_isomorphism(0).is_err());
    }
}
