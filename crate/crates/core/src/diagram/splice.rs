use super::{Diagram, Edge, EdgeKind, HalfEdge};
use crate::error::{Error, Result};

/// Splices the Wilson loops of two diagrams.
///
/// `arc = Some((a1, a2))` cuts Wilson edge `a1` of `g1` (from `x1` to `y1`) and
/// Wilson edge `a2` of `g2` (from `x2` to `y2`) and reconnects them as
/// `x1 -> y2` and `x2 -> y1`, each keeping its old color. Without an explicit
/// arc the first Wilson edge of each diagram is cut; this is only allowed when
/// `g1` is nullhomotopic, since otherwise the result depends on the choice.
pub fn connected_sum(g1: &Diagram, g2: &Diagram, arc: Option<(usize, usize)>) -> Result<Diagram> {
    let (a1, a2) = match arc {
        Some(a) => a,
        None => {
            if !g1.is_nullhomotopic() {
                return Err(Error::Ambiguity(
                    "first summand has nontrivial holonomy; choose the Wilson arcs explicitly".into(),
                ));
            }
            (first_wilson(g1)?, first_wilson(g2)?)
        }
    };
    let (e1, e2) = match (g1.edges().get(a1), g2.edges().get(a2)) {
        (Some(e1), Some(e2)) if e1.kind == EdgeKind::Wilson && e2.kind == EdgeKind::Wilson => (*e1, *e2),
        _ => return Err(Error::Argument("arc selector must name a Wilson edge of each summand".into())),
    };
    let n1 = g1.vertex_count();
    let m1 = g1.edges().len();
    let (x1, y1) = (e1.tail, e1.head);
    let (x2, y2) = (e2.tail + n1, e2.head + n1);

    let mut edges: Vec<Edge> = g1.edges().to_vec();
    edges[a1] = Edge::new(x1, y2, EdgeKind::Wilson, e1.color);
    for (j, e) in g2.edges().iter().enumerate() {
        if j == a2 {
            edges.push(Edge::new(x2, y1, EdgeKind::Wilson, e2.color));
        } else {
            edges.push(Edge::new(e.tail + n1, e.head + n1, e.kind, e.color));
        }
    }
    let mut wilson = rotate_from(g1.wilson(), y1);
    wilson.extend(rotate_from(g2.wilson(), e2.head).into_iter().map(|v| v + n1));
    let mut orientations = g1.orientations().clone();
    for (&v, o) in g2.orientations() {
        orientations.insert(v + n1, o.map(|h| HalfEdge::new(h.edge + m1, h.end)));
    }
    Diagram::new(n1 + g2.vertex_count(), wilson, edges, orientations)
}

fn first_wilson(d: &Diagram) -> Result<usize> {
    d.wilson_edge_from(d.wilson()[0])
        .ok_or_else(|| Error::Structural("diagram has no Wilson edge".into()))
}

fn rotate_from(cycle: &[usize], start: usize) -> Vec<usize> {
    let k = cycle.iter().position(|&v| v == start).unwrap_or(0);
    cycle[k..].iter().chain(&cycle[..k]).copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::enumerate::{enumerate_diagrams, EnumerateOptions};
    use crate::diagram::{canonicalize, holonomy_class_key};
    use std::collections::BTreeMap;

    fn chord(p: i64, q: i64) -> Diagram {
        Diagram::build(2, vec![0, 1], &[p, -p], &[(1, 0, q)], BTreeMap::new()).unwrap()
    }

    #[test]
    fn trivial_chord_plus_theta() {
        let s = connected_sum(&chord(0, 0), &chord(0, 1), None).unwrap();
        assert_eq!(s.degree(), 2);
        // an isolated chord with trivial color: its endpoints are Wilson-adjacent
        let isolated = s.edges().iter().any(|e| {
            e.kind == EdgeKind::Internal
                && e.color == 0
                && s.edges().iter().any(|w| {
                    w.kind == EdgeKind::Wilson
                        && ((w.tail, w.head) == (e.tail, e.head) || (w.tail, w.head) == (e.head, e.tail))
                })
        });
        assert!(isolated);
        let expect = Diagram::build(4, vec![0, 1, 2, 3], &[0, 0, 0, 0], &[(0, 1, 0), (2, 3, 1)], BTreeMap::new())
            .unwrap();
        assert_eq!(canonicalize(&s).unwrap(), canonicalize(&expect).unwrap());
    }

    #[test]
    fn nontrivial_first_summand_needs_an_arc() {
        let err = connected_sum(&chord(0, 1), &chord(0, 0), None).unwrap_err();
        assert!(matches!(err, Error::Ambiguity(_)));
        assert!(connected_sum(&chord(0, 1), &chord(0, 0), Some((1, 0))).is_ok());
    }

    #[test]
    fn degree_adds_and_arcs_agree_up_to_holonomy() {
        let ds = enumerate_diagrams(1, 1, EnumerateOptions::default()).unwrap();
        let mut pairs = 0;
        for g1 in &ds {
            for g2 in &ds {
                let s = connected_sum(g1, g2, Some((0, 0))).unwrap();
                assert_eq!(s.degree(), g1.degree() + g2.degree());
                if g1.is_nullhomotopic() && g2.is_nullhomotopic() {
                    // for nullhomotopic summands every arc choice is gauge-equivalent
                    let arcs = (0..g1.edges().len()).filter(|&i| g1.edges()[i].kind == EdgeKind::Wilson);
                    for a1 in arcs {
                        let t = connected_sum(g1, g2, Some((a1, 0))).unwrap();
                        assert_eq!(holonomy_class_key(&s), holonomy_class_key(&t));
                    }
                }
                pairs += 1;
            }
        }
        assert!(pairs >= 50);
    }
}
