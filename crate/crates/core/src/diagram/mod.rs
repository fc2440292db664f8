//! Colored Jacobi diagrams on an oriented circle.
//!
//! A [`Diagram`] has univalent vertices listed along the Wilson loop, trivalent
//! vertices carrying a cyclic orientation of their three half-edges, and an
//! integer exponent on every edge standing for the monomial color `t^c`.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub mod automorphism;
pub mod canonical;
pub mod enumerate;
pub mod json;
pub mod splice;
pub mod vector;

pub use automorphism::automorphism_group_order;
pub use canonical::{canonicalize, holonomy_class_key, Canonical};
pub use enumerate::{enumerate_diagrams, enumerate_shapes, EnumerateOptions};
pub use splice::connected_sum;
pub use vector::{ColoredDiagram, DiagramVector};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum EdgeKind {
    Wilson,
    Internal,
    SelfLoop,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum End {
    Tail,
    Head,
}

impl End {
    pub fn opposite(self) -> End {
        match self {
            End::Tail => End::Head,
            End::Head => End::Tail,
        }
    }
}

/// One end of an edge. Its integer id is `2 * edge + (0 for tail, 1 for head)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfEdge {
    pub edge: usize,
    pub end: End,
}

impl HalfEdge {
    pub fn new(edge: usize, end: End) -> Self {
        Self { edge, end }
    }

    pub fn id(self) -> usize {
        2 * self.edge + matches!(self.end, End::Head) as usize
    }

    pub fn from_id(id: usize) -> Self {
        Self { edge: id / 2, end: if id.is_multiple_of(2) { End::Tail } else { End::Head } }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub tail: usize,
    pub head: usize,
    pub kind: EdgeKind,
    /// Exponent of the monomial color.
    pub color: i64,
}

impl Edge {
    pub fn new(tail: usize, head: usize, kind: EdgeKind, color: i64) -> Self {
        Self { tail, head, kind, color }
    }

    pub fn endpoint(&self, end: End) -> usize {
        match end {
            End::Tail => self.tail,
            End::Head => self.head,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagram {
    vertex_count: usize,
    wilson: Vec<usize>,
    edges: Vec<Edge>,
    orientations: BTreeMap<usize, [HalfEdge; 3]>,
}

impl Diagram {
    /// Builds and validates a diagram.
    pub fn new(
        vertex_count: usize,
        wilson: Vec<usize>,
        edges: Vec<Edge>,
        orientations: BTreeMap<usize, [HalfEdge; 3]>,
    ) -> Result<Self> {
        let d = Self { vertex_count, wilson, edges, orientations };
        d.validate()?;
        Ok(d)
    }

    pub(crate) fn from_raw(
        vertex_count: usize,
        wilson: Vec<usize>,
        edges: Vec<Edge>,
        orientations: BTreeMap<usize, [HalfEdge; 3]>,
    ) -> Self {
        Self { vertex_count, wilson, edges, orientations }
    }

    /// Builds a diagram from the Wilson order and the non-Wilson edges.
    ///
    /// Wilson edges `wilson[i] -> wilson[i+1]` are created with the given
    /// colors. Each trivalent vertex gets its half-edges in increasing id
    /// order as orientation unless `orientations` overrides it.
    pub fn build(
        vertex_count: usize,
        wilson: Vec<usize>,
        wilson_colors: &[i64],
        non_wilson: &[(usize, usize, i64)],
        orientations: BTreeMap<usize, [HalfEdge; 3]>,
    ) -> Result<Self> {
        if wilson_colors.len() != wilson.len() {
            return Err(Error::Structural("one color per Wilson edge expected".into()));
        }
        let q = wilson.len();
        let mut edges: Vec<Edge> = (0..q)
            .map(|i| Edge::new(wilson[i], wilson[(i + 1) % q], EdgeKind::Wilson, wilson_colors[i]))
            .collect();
        for &(t, h, c) in non_wilson {
            let kind = if t == h { EdgeKind::SelfLoop } else { EdgeKind::Internal };
            edges.push(Edge::new(t, h, kind, c));
        }
        let mut d = Self { vertex_count, wilson, edges, orientations };
        for v in 0..vertex_count {
            if d.is_univalent(v) || d.orientations.contains_key(&v) {
                continue;
            }
            let hs = d.half_edges_at(v);
            if hs.len() == 3 {
                d.orientations.insert(v, [hs[0], hs[1], hs[2]]);
            }
        }
        d.validate()?;
        Ok(d)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn degree(&self) -> usize {
        self.vertex_count / 2
    }

    pub fn wilson(&self) -> &[usize] {
        &self.wilson
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn orientations(&self) -> &BTreeMap<usize, [HalfEdge; 3]> {
        &self.orientations
    }

    pub fn is_univalent(&self, v: usize) -> bool {
        self.wilson.contains(&v)
    }

    pub fn trivalent_vertices(&self) -> Vec<usize> {
        (0..self.vertex_count).filter(|&v| !self.is_univalent(v)).collect()
    }

    pub fn colors(&self) -> Vec<i64> {
        self.edges.iter().map(|e| e.color).collect()
    }

    pub fn with_colors(&self, colors: &[i64]) -> Self {
        let mut d = self.clone();
        for (e, &c) in d.edges.iter_mut().zip(colors) {
            e.color = c;
        }
        d
    }

    /// Non-Wilson half-edges at `v`, in increasing id order.
    pub fn half_edges_at(&self, v: usize) -> Vec<HalfEdge> {
        let mut out = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if e.kind == EdgeKind::Wilson {
                continue;
            }
            if e.tail == v {
                out.push(HalfEdge::new(i, End::Tail));
            }
            if e.head == v {
                out.push(HalfEdge::new(i, End::Head));
            }
        }
        out
    }

    pub fn endpoint(&self, h: HalfEdge) -> usize {
        self.edges[h.edge].endpoint(h.end)
    }

    /// Index of the Wilson edge leaving `wilson[i]`.
    pub fn wilson_edge_from(&self, v: usize) -> Option<usize> {
        self.edges.iter().position(|e| e.kind == EdgeKind::Wilson && e.tail == v)
    }

    pub fn wilson_edge_into(&self, v: usize) -> Option<usize> {
        self.edges.iter().position(|e| e.kind == EdgeKind::Wilson && e.head == v)
    }

    pub fn is_chord_diagram(&self) -> bool {
        self.wilson.len() == self.vertex_count
    }

    pub fn wilson_exponent_sum(&self) -> i64 {
        self.edges.iter().filter(|e| e.kind == EdgeKind::Wilson).map(|e| e.color).sum()
    }

    /// Total Wilson holonomy is trivial.
    pub fn is_nh(&self) -> bool {
        self.wilson_exponent_sum() == 0
    }

    /// Every cycle has trivial total color.
    pub fn is_nullhomotopic(&self) -> bool {
        coboundary_potential(self.vertex_count, &self.edges, |e| e.color).is_some()
    }

    pub fn max_abs_exponent(&self) -> i64 {
        self.edges.iter().map(|e| e.color.abs()).max().unwrap_or(0)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.vertex_count;
        let bad = |m: String| Err(Error::Structural(m));
        if n == 0 || !n.is_multiple_of(2) {
            return bad(format!("vertex count {n} is not a positive even number"));
        }
        let q = self.wilson.len();
        if q == 0 {
            return bad("the Wilson loop carries no univalent vertex".into());
        }
        let mut seen = vec![false; n];
        for &v in &self.wilson {
            if v >= n || seen[v] {
                return bad(format!("Wilson cycle entry {v} is out of range or repeated"));
            }
            seen[v] = true;
        }
        let mut wilson_pairs: Vec<(usize, usize)> =
            (0..q).map(|i| (self.wilson[i], self.wilson[(i + 1) % q])).collect();
        let mut found = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if e.tail >= n || e.head >= n {
                return bad(format!("edge {i} has an endpoint out of range"));
            }
            match e.kind {
                EdgeKind::Wilson => found.push((e.tail, e.head)),
                EdgeKind::SelfLoop if e.tail != e.head => {
                    return bad(format!("edge {i} is marked rho but joins distinct vertices"))
                }
                EdgeKind::Internal if e.tail == e.head => {
                    return bad(format!("edge {i} is marked I but is a loop"))
                }
                _ => {}
            }
        }
        wilson_pairs.sort_unstable();
        found.sort_unstable();
        if wilson_pairs != found {
            return bad("Wilson edges do not match the Wilson cycle".into());
        }
        for v in 0..n {
            let hs = self.half_edges_at(v);
            if self.is_univalent(v) {
                if hs.len() != 1 {
                    return bad(format!("univalent vertex {v} has {} non-Wilson half-edges", hs.len()));
                }
                if self.orientations.contains_key(&v) {
                    return bad(format!("univalent vertex {v} carries an orientation"));
                }
            } else {
                if hs.len() != 3 {
                    return bad(format!("vertex {v} has valence {} instead of 3", hs.len()));
                }
                let Some(o) = self.orientations.get(&v) else {
                    return bad(format!("trivalent vertex {v} has no orientation"));
                };
                let mut o = o.to_vec();
                o.sort_unstable();
                if o != hs {
                    return bad(format!("orientation at {v} does not list its half-edges"));
                }
            }
        }
        if !self.is_connected() {
            return bad("diagram is not connected".into());
        }
        Ok(())
    }

    fn is_connected(&self) -> bool {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for e in &self.edges {
            adj[e.tail].push(e.head);
            adj[e.head].push(e.tail);
        }
        let mut seen = vec![false; self.vertex_count];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Reverses the cyclic order at a trivalent vertex (one AS move).
    pub fn flip_orientation(&self, v: usize) -> Result<Self> {
        let mut d = self.clone();
        let o = d
            .orientations
            .get_mut(&v)
            .ok_or_else(|| Error::Argument(format!("vertex {v} is not trivalent")))?;
        o.swap(1, 2);
        Ok(d)
    }

    /// Reverses a non-Wilson edge and inverts its color.
    pub fn reverse_edge(&self, e: usize) -> Result<Self> {
        let Some(edge) = self.edges.get(e) else {
            return Err(Error::Argument(format!("no edge {e}")));
        };
        if edge.kind == EdgeKind::Wilson {
            return Err(Error::Argument("Wilson edges keep the loop orientation".into()));
        }
        let mut d = self.clone();
        let edge = &mut d.edges[e];
        std::mem::swap(&mut edge.tail, &mut edge.head);
        edge.color = -edge.color;
        for o in d.orientations.values_mut() {
            for h in o.iter_mut() {
                if h.edge == e {
                    h.end = h.end.opposite();
                }
            }
        }
        Ok(d)
    }

    /// Multiplies the colors at `v` by `t^m` on edges pointing toward `v` and
    /// by `t^-m` on edges pointing away. Loops at `v` are unchanged.
    pub fn shift_holonomy(&self, v: usize, m: i64) -> Self {
        let mut d = self.clone();
        for e in &mut d.edges {
            if e.tail == e.head {
                continue;
            }
            if e.head == v {
                e.color += m;
            }
            if e.tail == v {
                e.color -= m;
            }
        }
        d
    }

    /// Applies a relabeling: vertex `v` becomes `vmap[v]` and edge `i` moves to
    /// position `emap[i]`. The Wilson list keeps its cyclic order.
    pub fn relabel(&self, vmap: &[usize], emap: &[usize]) -> Self {
        let mut edges = vec![Edge::new(0, 0, EdgeKind::Wilson, 0); self.edges.len()];
        for (i, e) in self.edges.iter().enumerate() {
            edges[emap[i]] = Edge::new(vmap[e.tail], vmap[e.head], e.kind, e.color);
        }
        let orientations = self
            .orientations
            .iter()
            .map(|(&v, o)| (vmap[v], o.map(|h| HalfEdge::new(emap[h.edge], h.end))))
            .collect();
        Self {
            vertex_count: self.vertex_count,
            wilson: self.wilson.iter().map(|&v| vmap[v]).collect(),
            edges,
            orientations,
        }
    }

    /// Colors with every spanning-tree edge set to zero by Holonomy moves.
    ///
    /// The tree is grown breadth-first from vertex 0, scanning edges in index
    /// order, so the result depends only on the labeled diagram.
    pub fn gauge_fixed_colors(&self) -> Vec<i64> {
        let n = self.vertex_count;
        let mut pot: Vec<Option<i64>> = vec![None; n];
        pot[0] = Some(0);
        let mut queue = VecDeque::from([0usize]);
        while let Some(v) = queue.pop_front() {
            for e in &self.edges {
                if e.tail == e.head {
                    continue;
                }
                if e.tail == v && pot[e.head].is_none() {
                    pot[e.head] = Some(pot[v].unwrap() - e.color);
                    queue.push_back(e.head);
                } else if e.head == v && pot[e.tail].is_none() {
                    pot[e.tail] = Some(pot[v].unwrap() + e.color);
                    queue.push_back(e.tail);
                }
            }
        }
        self.edges
            .iter()
            .map(|e| e.color + pot[e.head].unwrap_or(0) - pot[e.tail].unwrap_or(0))
            .collect()
    }
}

/// Solves `value(e) = m(head) - m(tail)` for a vertex potential `m`.
pub(crate) fn coboundary_potential(
    vertex_count: usize,
    edges: &[Edge],
    value: impl Fn(&Edge) -> i64,
) -> Option<Vec<i64>> {
    let mut pot: Vec<Option<i64>> = vec![None; vertex_count];
    for start in 0..vertex_count {
        if pot[start].is_some() {
            continue;
        }
        pot[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for e in edges {
                let d = value(e);
                if e.tail == v && pot[e.head].is_none() {
                    pot[e.head] = Some(pot[v].unwrap() + d);
                    queue.push_back(e.head);
                } else if e.head == v && pot[e.tail].is_none() {
                    pot[e.tail] = Some(pot[v].unwrap() - d);
                    queue.push_back(e.tail);
                }
            }
        }
    }
    let pot: Vec<i64> = pot.into_iter().map(|p| p.unwrap()).collect();
    edges
        .iter()
        .all(|e| value(e) == pot[e.head] - pot[e.tail])
        .then_some(pot)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn chord(p: i64, q: i64) -> Diagram {
        Diagram::build(2, vec![0, 1], &[p, -p], &[(1, 0, q)], BTreeMap::new()).unwrap()
    }

    #[test]
    fn chord_diagram_is_valid() {
        let d = chord(0, 0);
        assert_eq!(d.degree(), 1);
        assert!(d.is_chord_diagram());
        assert!(d.is_nh());
        assert!(d.is_nullhomotopic());
        assert!(!chord(0, 1).is_nullhomotopic());
    }

    #[test]
    fn wrong_valence_is_structural() {
        let err = Diagram::build(2, vec![0], &[0], &[(0, 1, 0)], BTreeMap::new()).unwrap_err();
        assert!(matches!(err, Error::Structural(_)));
        let odd = Diagram::build(3, vec![0, 1, 2], &[0, 0, 0], &[(0, 1, 0)], BTreeMap::new());
        assert!(matches!(odd, Err(Error::Structural(_))));
    }

    #[test]
    fn holonomy_at_inward_vertex_shifts_all_three() {
        // vertex 1 trivalent with all three edges pointing into it
        let d = Diagram::build(
            4,
            vec![0, 2, 3],
            &[0, 0, 0],
            &[(0, 1, 4), (2, 1, 5), (3, 1, 6)],
            BTreeMap::new(),
        )
        .unwrap();
        let s = d.shift_holonomy(1, 1);
        let nw: Vec<i64> = s.edges().iter().skip(3).map(|e| e.color).collect();
        assert_eq!(nw, vec![5, 6, 7]);
    }

    #[test]
    fn gauge_fixing_kills_tree_edges() {
        let d = chord(3, 2);
        let g = d.gauge_fixed_colors();
        // tree: edge 0 (0->1) and the chord is the only non-tree edge carrying p+q
        assert_eq!(g, vec![0, 0, 5]);
    }
}
