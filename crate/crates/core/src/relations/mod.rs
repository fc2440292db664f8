//! Local relations, their instances inside an exponent window, and the
//! resulting quotient spaces.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagram::{Diagram, DiagramVector, Edge, EdgeKind, End, HalfEdge};
use crate::error::Result;
use crate::rational::q;

mod elimination;
pub mod quotient;
pub mod trace;

pub use quotient::{build_quotient, stabilization_check, QuotientSpace};
pub use trace::{trace, TracedClass};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RelationKind {
    AS,
    IHX,
    STU,
    FI,
    OrientationReversal,
    Linearity,
    Holonomy,
}

/// Where a relation was applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Site {
    Vertex(usize),
    Edge(usize),
    /// A chord together with the Wilson edge closing its small loop.
    ChordArc { chord: usize, arc: usize },
}

/// Sign convention for the three-term relations.
///
/// With `A`, IHX reads `I + H + X = 0` for the three cyclic regroupings and STU
/// reads `S - T + U = 0`. `B` negates the last two terms of each.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SignConvention {
    #[default]
    A,
    B,
}

impl std::str::FromStr for SignConvention {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Self::A),
            "B" | "b" => Ok(Self::B),
            _ => Err(crate::Error::Argument(format!("unknown sign convention {s:?}"))),
        }
    }
}

impl fmt::Display for SignConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", if *self == Self::A { "A" } else { "B" })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Conventions {
    pub ihx: SignConvention,
    pub stu: SignConvention,
}

/// Degree and exponent bound of a truncated computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Window {
    pub degree: usize,
    pub max_exponent: i64,
    pub nh_only: bool,
}

impl Window {
    pub fn new(degree: usize, max_exponent: i64) -> Self {
        Self { degree, max_exponent, nh_only: false }
    }

    pub fn nh(degree: usize, max_exponent: i64) -> Self {
        Self { degree, max_exponent, nh_only: true }
    }

    pub fn contains(&self, d: &Diagram) -> bool {
        d.degree() == self.degree
            && d.max_abs_exponent() <= self.max_exponent
            && (!self.nh_only || d.is_nh())
    }

    pub fn widened(&self, by: i64) -> Self {
        Self { max_exponent: self.max_exponent + by, ..*self }
    }
}

/// One relation: the signed sum of `terms` vanishes in the quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationInstance {
    pub kind: RelationKind,
    pub site: Site,
    pub terms: Vec<(Diagram, i64)>,
}

impl RelationInstance {
    /// The relation as a vector of canonical diagrams.
    pub fn vector(&self) -> DiagramVector {
        let mut v = DiagramVector::zero();
        for (d, c) in &self.terms {
            v.add_diagram(d, &q(*c));
        }
        v
    }
}

/// Every relation instance rooted at `d` whose terms stay in the window.
///
/// Linearity is not listed: it is applied by expanding colors
/// ([`crate::diagram::ColoredDiagram::expand`]) before any reduction.
pub fn relations_at(d: &Diagram, window: &Window, conv: Conventions) -> Vec<RelationInstance> {
    let mut out = Vec::new();
    let edges = d.edges();
    for v in d.trivalent_vertices() {
        let flipped = d.flip_orientation(v).expect("trivalent");
        out.push(RelationInstance { kind: RelationKind::AS, site: Site::Vertex(v), terms: vec![(d.clone(), 1), (flipped, 1)] });
    }
    for (i, e) in edges.iter().enumerate() {
        if e.kind == EdgeKind::Wilson {
            continue;
        }
        let r = d.reverse_edge(i).expect("non-Wilson");
        out.push(RelationInstance {
            kind: RelationKind::OrientationReversal,
            site: Site::Edge(i),
            terms: vec![(d.clone(), 1), (r, -1)],
        });
    }
    for v in 0..d.vertex_count() {
        let s = d.shift_holonomy(v, 1);
        if window.contains(&s) {
            out.push(RelationInstance { kind: RelationKind::Holonomy, site: Site::Vertex(v), terms: vec![(d.clone(), 1), (s, -1)] });
        }
    }
    for (i, e) in edges.iter().enumerate() {
        if e.kind != EdgeKind::Internal || e.color != 0 {
            continue;
        }
        let (tu, hu) = (d.is_univalent(e.tail), d.is_univalent(e.head));
        if tu != hu {
            let (u, v) = if tu { (e.tail, e.head) } else { (e.head, e.tail) };
            if let Some(r) = stu(d, i, u, v, conv.stu) {
                out.push(r);
            }
        } else if !tu {
            out.push(ihx(d, i, conv.ihx));
        }
    }
    out.extend(fi(d));
    out
}

/// Rotates an orientation so that the half-edge of `edge` comes first.
fn rotate_to(o: [HalfEdge; 3], edge: usize) -> [HalfEdge; 3] {
    let k = o.iter().position(|h| h.edge == edge).expect("edge at vertex");
    [o[k], o[(k + 1) % 3], o[(k + 2) % 3]]
}

fn set_end(edges: &mut [Edge], h: HalfEdge, v: usize) {
    let e = &mut edges[h.edge];
    match h.end {
        End::Tail => e.tail = v,
        End::Head => e.head = v,
    }
}

fn fix_kinds(edges: &mut [Edge]) {
    for e in edges.iter_mut() {
        if e.kind != EdgeKind::Wilson {
            e.kind = if e.tail == e.head { EdgeKind::SelfLoop } else { EdgeKind::Internal };
        }
    }
}

/// STU at the edge `e` joining univalent `u` to trivalent `v`.
///
/// With orientation `(e, A, B)` at `v`, the T term attaches `A` to the first of
/// two new Wilson points and `B` to the second; U swaps them.
fn stu(d: &Diagram, e: usize, u: usize, v: usize, sign: SignConvention) -> Option<RelationInstance> {
    let o = rotate_to(d.orientations()[&v], e);
    let (a, b) = (o[1], o[2]);
    let out_edge = d.wilson_edge_from(u)?;
    let pos = d.wilson().iter().position(|&x| x == u)?;
    let mut wilson = d.wilson().to_vec();
    wilson.insert(pos + 1, v);

    let resolve = |first: HalfEdge, second: HalfEdge| {
        let mut edges = d.edges().to_vec();
        edges[out_edge].tail = v;
        edges[e] = Edge::new(u, v, EdgeKind::Wilson, 0);
        set_end(&mut edges, first, u);
        set_end(&mut edges, second, v);
        fix_kinds(&mut edges);
        let mut orientations = d.orientations().clone();
        orientations.remove(&v);
        Diagram::from_raw(d.vertex_count(), wilson.clone(), edges, orientations)
    };
    let t = resolve(a, b);
    let uu = resolve(b, a);
    let s = if sign == SignConvention::A { 1 } else { -1 };
    Some(RelationInstance {
        kind: RelationKind::STU,
        site: Site::Edge(e),
        terms: vec![(d.clone(), 1), (t, -s), (uu, s)],
    })
}

/// IHX at the internal edge `e` between two trivalent vertices.
///
/// With orientations `x: (e, A, B)` and `y: (e, C, D)` the other two terms are
/// `x: (e, B, C), y: (e, A, D)` and `x: (e, C, A), y: (e, B, D)`.
fn ihx(d: &Diagram, e: usize, sign: SignConvention) -> RelationInstance {
    let (x, y) = (d.edges()[e].tail, d.edges()[e].head);
    let ox = rotate_to(d.orientations()[&x], e);
    let oy = rotate_to(d.orientations()[&y], e);
    let (ex, a, b) = (ox[0], ox[1], ox[2]);
    let (ey, c, dd) = (oy[0], oy[1], oy[2]);
    let regroup = |at_x: [HalfEdge; 2], at_y: [HalfEdge; 2]| {
        let mut edges = d.edges().to_vec();
        for h in at_x {
            set_end(&mut edges, h, x);
        }
        for h in at_y {
            set_end(&mut edges, h, y);
        }
        fix_kinds(&mut edges);
        let mut orientations = d.orientations().clone();
        orientations.insert(x, [ex, at_x[0], at_x[1]]);
        orientations.insert(y, [ey, at_y[0], at_y[1]]);
        Diagram::from_raw(d.vertex_count(), d.wilson().to_vec(), edges, orientations)
    };
    let h = regroup([b, c], [a, dd]);
    let xx = regroup([c, a], [b, dd]);
    let s = if sign == SignConvention::A { 1 } else { -1 };
    RelationInstance { kind: RelationKind::IHX, site: Site::Edge(e), terms: vec![(d.clone(), 1), (h, s), (xx, s)] }
}

/// FI for chords whose ends are joined by a single Wilson edge, when the small
/// loop formed by the chord and that edge has trivial holonomy.
fn fi(d: &Diagram) -> Vec<RelationInstance> {
    let mut out = Vec::new();
    for (i, e) in d.edges().iter().enumerate() {
        if e.kind != EdgeKind::Internal || !d.is_univalent(e.tail) || !d.is_univalent(e.head) {
            continue;
        }
        for (j, w) in d.edges().iter().enumerate() {
            if w.kind != EdgeKind::Wilson {
                continue;
            }
            // loop: along w from x to y, then back along the chord
            let holonomy = if (w.tail, w.head) == (e.head, e.tail) {
                w.color + e.color
            } else if (w.tail, w.head) == (e.tail, e.head) {
                w.color - e.color
            } else {
                continue;
            };
            if holonomy == 0 {
                out.push(RelationInstance {
                    kind: RelationKind::FI,
                    site: Site::ChordArc { chord: i, arc: j },
                    terms: vec![(d.clone(), 1)],
                });
            }
        }
    }
    out
}

/// All relation instances rooted at the canonical diagrams of the window.
pub fn generate_relations(window: &Window, conv: Conventions) -> Result<Vec<RelationInstance>> {
    let columns = quotient::window_diagrams(window)?;
    Ok(columns
        .par_iter()
        .flat_map_iter(|d| relations_at(d, window, conv))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{canonicalize, enumerate_diagrams, EnumerateOptions};
    use std::collections::BTreeMap;

    #[test]
    fn every_term_stays_in_window() {
        let w = Window::new(1, 2);
        for r in generate_relations(&w, Conventions::default()).unwrap() {
            for (d, _) in &r.terms {
                d.validate().unwrap();
                assert!(w.contains(d), "{r:?}");
            }
            let n = r.terms.len();
            let expected = match r.kind {
                RelationKind::AS | RelationKind::OrientationReversal | RelationKind::Holonomy => 2,
                RelationKind::IHX | RelationKind::STU => 3,
                RelationKind::FI => 1,
                RelationKind::Linearity => unreachable!(),
            };
            assert_eq!(n, expected);
        }
    }

    #[test]
    fn degree_one_counts_by_site() {
        // recount site by site straight from the enumeration
        for k in 0..=3 {
            let w = Window::new(1, k);
            let rels = generate_relations(&w, Conventions::default()).unwrap();
            let ds: Vec<Diagram> = enumerate_diagrams(1, k, EnumerateOptions::default())
                .unwrap()
                .into_iter()
                .filter(|d| canonicalize(d).unwrap().sign != 0)
                .collect();
            let mut expect = BTreeMap::new();
            for d in &ds {
                let triv = d.trivalent_vertices().len();
                *expect.entry(RelationKind::AS).or_insert(0) += triv;
                *expect.entry(RelationKind::OrientationReversal).or_insert(0) +=
                    d.edges().iter().filter(|e| e.kind != EdgeKind::Wilson).count();
                let hol = (0..d.vertex_count())
                    .filter(|&v| d.shift_holonomy(v, 1).max_abs_exponent() <= k)
                    .count();
                *expect.entry(RelationKind::Holonomy).or_insert(0) += hol;
                if d.is_chord_diagram() {
                    let c = d.edges().iter().find(|e| e.kind == EdgeKind::Internal).unwrap();
                    let fis = d
                        .edges()
                        .iter()
                        .filter(|w| w.kind == EdgeKind::Wilson)
                        .filter(|w| {
                            if w.tail == c.head { w.color + c.color == 0 } else { w.color - c.color == 0 }
                        })
                        .count();
                    *expect.entry(RelationKind::FI).or_insert(0) += fis;
                } else {
                    let leg = d.edges().iter().find(|e| e.kind == EdgeKind::Internal).unwrap();
                    *expect.entry(RelationKind::STU).or_insert(0) += (leg.color == 0) as usize;
                }
            }
            let mut got = BTreeMap::new();
            for r in &rels {
                *got.entry(r.kind).or_insert(0usize) += 1;
            }
            expect.retain(|_, v| *v > 0);
            assert_eq!(got, expect, "window {k}");
        }
    }

    #[test]
    fn as_and_orientation_rows_vanish_identically() {
        let w = Window::new(2, 1);
        for r in generate_relations(&w, Conventions::default()).unwrap() {
            if matches!(r.kind, RelationKind::AS | RelationKind::OrientationReversal) {
                assert!(r.vector().is_zero());
            }
        }
    }

    #[test]
    fn stu_on_tadpole_cancels_chords() {
        let o = BTreeMap::from([(
            1,
            [HalfEdge::new(1, End::Head), HalfEdge::new(2, End::Tail), HalfEdge::new(2, End::Head)],
        )]);
        let omega = Diagram::build(2, vec![0], &[0], &[(0, 1, 0), (1, 1, 2)], o).unwrap();
        let w = Window::new(1, 2);
        let r = relations_at(&omega, &w, Conventions::default())
            .into_iter()
            .find(|r| r.kind == RelationKind::STU)
            .unwrap();
        let v = r.vector();
        assert_eq!(v, DiagramVector::from_diagram(&omega).unwrap());
        // T and U are the two orientations of the same chord
        assert_eq!(canonicalize(&r.terms[1].0).unwrap(), canonicalize(&r.terms[2].0).unwrap());
    }
}
