//! Canonical labeling with AS sign bookkeeping.

use std::collections::BTreeMap;

use super::{Diagram, Edge, EdgeKind, End, HalfEdge};
use crate::error::Result;

/// A canonical representative together with the sign relating it to the input:
/// `input = sign * diagram` modulo AS. A sign of 0 means the input equals its
/// own negative and so vanishes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Canonical {
    pub diagram: Diagram,
    pub sign: i8,
}

/// All permutations of `0..m` in lexicographic order.
pub(crate) fn permutations(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..m).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..m).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
        let j = (i..m).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// Vertex maps that keep the Wilson cycle as `0..q` in order.
pub(crate) fn wilson_preserving_maps(d: &Diagram) -> Vec<Vec<usize>> {
    let q = d.wilson().len();
    let triv = d.trivalent_vertices();
    let perms = permutations(triv.len());
    let mut out = Vec::with_capacity(q * perms.len());
    for r in 0..q {
        for p in &perms {
            let mut vmap = vec![0; d.vertex_count()];
            for i in 0..q {
                vmap[d.wilson()[(r + i) % q]] = i;
            }
            for (j, &k) in p.iter().enumerate() {
                vmap[triv[k]] = q + j;
            }
            out.push(vmap);
        }
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Flip {
    No,
    Yes,
    Either,
}

/// Maps every edge under `vmap`, orienting non-Wilson edges into normal form.
fn mapped_edges(d: &Diagram, vmap: &[usize]) -> Vec<(Edge, Flip)> {
    d.edges()
        .iter()
        .map(|e| {
            let (t, h) = (vmap[e.tail], vmap[e.head]);
            match e.kind {
                EdgeKind::Wilson => (Edge::new(t, h, e.kind, e.color), Flip::No),
                EdgeKind::Internal if t > h => (Edge::new(h, t, e.kind, -e.color), Flip::Yes),
                EdgeKind::Internal => (Edge::new(t, h, e.kind, e.color), Flip::No),
                EdgeKind::SelfLoop => match e.color {
                    c if c < 0 => (Edge::new(t, h, e.kind, -c), Flip::Yes),
                    0 => (Edge::new(t, h, e.kind, 0), Flip::Either),
                    c => (Edge::new(t, h, e.kind, c), Flip::No),
                },
            }
        })
        .collect()
}

/// The minimal sorted edge list over all Wilson-preserving relabelings.
pub fn canonical_code(d: &Diagram) -> Vec<Edge> {
    let mut best: Option<Vec<Edge>> = None;
    for vmap in wilson_preserving_maps(d) {
        let mut code: Vec<Edge> = mapped_edges(d, &vmap).into_iter().map(|(e, _)| e).collect();
        code.sort_unstable();
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    }
    best.unwrap_or_default()
}

fn reference_orientations(vertex_count: usize, q: usize, code: &[Edge]) -> BTreeMap<usize, [HalfEdge; 3]> {
    let mut out = BTreeMap::new();
    for v in q..vertex_count {
        let mut hs = Vec::with_capacity(3);
        for (i, e) in code.iter().enumerate() {
            if e.kind == EdgeKind::Wilson {
                continue;
            }
            if e.tail == v {
                hs.push(HalfEdge::new(i, End::Tail));
            }
            if e.head == v {
                hs.push(HalfEdge::new(i, End::Head));
            }
        }
        out.insert(v, [hs[0], hs[1], hs[2]]);
    }
    out
}

/// +1 if `triple` is a cyclic rotation of `reference`, -1 otherwise.
fn cyclic_sign(triple: [HalfEdge; 3], reference: &[HalfEdge; 3]) -> i8 {
    let rotations = [
        [reference[0], reference[1], reference[2]],
        [reference[1], reference[2], reference[0]],
        [reference[2], reference[0], reference[1]],
    ];
    if rotations.contains(&triple) {
        1
    } else {
        -1
    }
}

/// Returns the canonical representative of `d` and the AS sign.
pub fn canonicalize(d: &Diagram) -> Result<Canonical> {
    d.validate()?;
    Ok(canonicalize_unchecked(d))
}

pub(crate) fn canonicalize_unchecked(d: &Diagram) -> Canonical {
    let n = d.vertex_count();
    let q = d.wilson().len();
    let mut best: Option<Vec<Edge>> = None;
    let mut winners: Vec<(Vec<usize>, Vec<(Edge, Flip)>)> = Vec::new();
    for vmap in wilson_preserving_maps(d) {
        let mapped = mapped_edges(d, &vmap);
        let mut code: Vec<Edge> = mapped.iter().map(|(e, _)| *e).collect();
        code.sort_unstable();
        match best.as_ref().map(|b| code.cmp(b)) {
            None | Some(std::cmp::Ordering::Less) => {
                best = Some(code);
                winners.clear();
                winners.push((vmap, mapped));
            }
            Some(std::cmp::Ordering::Equal) => winners.push((vmap, mapped)),
            Some(std::cmp::Ordering::Greater) => {}
        }
    }
    let code = best.unwrap_or_default();
    let reference = reference_orientations(n, q, &code);
    let diagram = Diagram::from_raw(n, (0..q).collect(), code.clone(), reference.clone());
    if reference.is_empty() {
        return Canonical { diagram, sign: 1 };
    }

    let mut sign: Option<i8> = None;
    for (vmap, mapped) in &winners {
        // order[k] = original edge index placed at slot k; ties are permuted below
        let mut order: Vec<usize> = (0..mapped.len()).collect();
        order.sort_by(|&a, &b| mapped[a].0.cmp(&mapped[b].0).then(a.cmp(&b)));
        let groups = tie_groups(&code);
        let either: Vec<usize> =
            (0..mapped.len()).filter(|&i| mapped[i].1 == Flip::Either).collect();
        let mut conflict = false;
        for_each_tie_assignment(&order, &groups, &mut |assign| {
            let mut slot = vec![0; assign.len()];
            for (k, &orig) in assign.iter().enumerate() {
                slot[orig] = k;
            }
            for mask in 0..(1u32 << either.len()) {
                let flipped = |e: usize| match mapped[e].1 {
                    Flip::No => false,
                    Flip::Yes => true,
                    Flip::Either => {
                        let pos = either.iter().position(|&x| x == e).unwrap();
                        mask & (1 << pos) != 0
                    }
                };
                let mut s = 1i8;
                for (&v, o) in d.orientations() {
                    let triple = o.map(|h| {
                        let end = if flipped(h.edge) { h.end.opposite() } else { h.end };
                        HalfEdge::new(slot[h.edge], end)
                    });
                    s *= cyclic_sign(triple, &reference[&vmap[v]]);
                }
                match sign {
                    None => sign = Some(s),
                    Some(prev) if prev != s => {
                        conflict = true;
                        return false;
                    }
                    _ => {}
                }
            }
            true
        });
        if conflict {
            return Canonical { diagram, sign: 0 };
        }
    }
    Canonical { diagram, sign: sign.unwrap_or(1) }
}

/// Maximal runs `[start, end)` of equal edges in a sorted code.
fn tie_groups(code: &[Edge]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..=code.len() {
        if i == code.len() || code[i] != code[start] {
            if i - start > 1 {
                out.push((start, i));
            }
            start = i;
        }
    }
    out
}

/// Calls `f` on every reordering of `order` that permutes within tie groups.
/// Stops early when `f` returns false.
fn for_each_tie_assignment(
    order: &[usize],
    groups: &[(usize, usize)],
    f: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    fn rec(
        cur: &mut Vec<usize>,
        groups: &[(usize, usize)],
        g: usize,
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if g == groups.len() {
            return f(cur);
        }
        let (s, e) = groups[g];
        let base: Vec<usize> = cur[s..e].to_vec();
        for p in permutations(e - s) {
            for (k, &i) in p.iter().enumerate() {
                cur[s + k] = base[i];
            }
            if !rec(cur, groups, g + 1, f) {
                cur[s..e].copy_from_slice(&base);
                return false;
            }
        }
        cur[s..e].copy_from_slice(&base);
        true
    }
    let mut cur = order.to_vec();
    rec(&mut cur, groups, 0, f)
}

/// A key equal for two diagrams exactly when they agree up to relabeling,
/// edge reversal and Holonomy moves. Vertex orientations are ignored.
pub fn holonomy_class_key(d: &Diagram) -> Vec<Edge> {
    let mut best: Option<Vec<Edge>> = None;
    for vmap in wilson_preserving_maps(d) {
        let mut mapped: Vec<Edge> = mapped_edges(d, &vmap).into_iter().map(|(e, _)| e).collect();
        mapped.sort_unstable();
        let relabeled = Diagram::from_raw(d.vertex_count(), Vec::new(), mapped.clone(), BTreeMap::new());
        let fixed = relabeled.gauge_fixed_colors();
        let mut code: Vec<Edge> = mapped
            .iter()
            .zip(fixed)
            .map(|(e, c)| {
                let c = if e.kind == EdgeKind::SelfLoop { c.abs() } else { c };
                Edge::new(e.tail, e.head, e.kind, c)
            })
            .collect();
        code.sort_unstable();
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    }
    best.unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::enumerate::enumerate_shapes;
    use proptest::prelude::*;

    fn chord(p: i64, q: i64) -> Diagram {
        Diagram::build(2, vec![0, 1], &[p, -p], &[(1, 0, q)], BTreeMap::new()).unwrap()
    }

    fn omega(p: i64) -> Diagram {
        let o = BTreeMap::from([(
            1,
            [HalfEdge::new(1, End::Head), HalfEdge::new(2, End::Tail), HalfEdge::new(2, End::Head)],
        )]);
        Diagram::build(2, vec![0], &[0], &[(0, 1, 0), (1, 1, p)], o).unwrap()
    }

    #[test]
    fn permutation_counts() {
        assert_eq!(permutations(0).len(), 1);
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(4)[23], vec![3, 2, 1, 0]);
    }

    #[test]
    fn chord_relabeling_and_reversal() {
        let a = canonicalize(&chord(0, 0)).unwrap();
        let swapped = chord(0, 0).relabel(&[1, 0], &[1, 0, 2]);
        assert_eq!(canonicalize(&swapped).unwrap(), a);
        // reversing the chord and inverting its color is the same class
        let c = chord(2, 3);
        let r = c.reverse_edge(2).unwrap();
        assert_eq!(canonicalize(&c).unwrap(), canonicalize(&r).unwrap());
    }

    #[test]
    fn opposite_rotation_identifies_opposite_chords() {
        assert_eq!(
            canonicalize(&chord(0, 2)).unwrap().diagram,
            canonicalize(&chord(0, -2)).unwrap().diagram
        );
        assert_ne!(
            canonicalize(&chord(0, 2)).unwrap().diagram,
            canonicalize(&chord(0, 1)).unwrap().diagram
        );
    }

    #[test]
    fn self_loop_sign() {
        let a = canonicalize(&omega(1)).unwrap();
        let b = canonicalize(&omega(-1)).unwrap();
        assert_eq!(a.diagram, b.diagram);
        assert_eq!(a.sign * b.sign, -1);
        assert_eq!(canonicalize(&omega(0)).unwrap().sign, 0);
        let flipped = canonicalize(&omega(1).flip_orientation(1).unwrap()).unwrap();
        assert_eq!(flipped.sign, -a.sign);
    }

    #[test]
    fn holonomy_key_merges_gauge_orbits() {
        let a = holonomy_class_key(&chord(1, 2));
        assert_eq!(a, holonomy_class_key(&chord(0, 3)));
        assert_eq!(a, holonomy_class_key(&chord(0, -3)));
        assert_ne!(a, holonomy_class_key(&chord(0, 2)));
    }

    fn random_relabel(d: &Diagram, seed: &[u32]) -> Diagram {
        // vertices: random bijection; edges: random bijection; plus random flips
        let n = d.vertex_count();
        let m = d.edges().len();
        let mut vmap: Vec<usize> = (0..n).collect();
        let mut emap: Vec<usize> = (0..m).collect();
        for i in (1..n).rev() {
            vmap.swap(i, seed[i] as usize % (i + 1));
        }
        for i in (1..m).rev() {
            emap.swap(i, seed[n + i] as usize % (i + 1));
        }
        let mut out = d.relabel(&vmap, &emap);
        for e in 0..m {
            if seed[n + m + e] % 2 == 1 && out.edges()[e].kind != EdgeKind::Wilson {
                out = out.reverse_edge(e).unwrap();
            }
        }
        out
    }

    fn arb_diagram() -> impl Strategy<Value = Diagram> {
        let shapes: Vec<Diagram> =
            (1..=2).flat_map(|n| enumerate_shapes(n).unwrap()).collect();
        (0..shapes.len(), proptest::collection::vec(-3i64..=3, 6), proptest::collection::vec(0u8..2, 4))
            .prop_map(move |(i, colors, flips)| {
                let mut d = shapes[i].with_colors(&colors);
                for (k, v) in d.trivalent_vertices().into_iter().enumerate() {
                    if flips[k] == 1 {
                        d = d.flip_orientation(v).unwrap();
                    }
                }
                d
            })
    }

    proptest! {
        #[test]
        fn invariant_under_relabeling(d in arb_diagram(), seed in proptest::collection::vec(0u32..1000, 32)) {
            let a = canonicalize(&d).unwrap();
            let b = canonicalize(&random_relabel(&d, &seed)).unwrap();
            prop_assert_eq!(a, b);
        }

        #[test]
        fn idempotent(d in arb_diagram()) {
            let a = canonicalize(&d).unwrap();
            let b = canonicalize(&a.diagram).unwrap();
            prop_assert_eq!(&a.diagram, &b.diagram);
            if a.sign != 0 {
                prop_assert_eq!(b.sign, 1);
            }
        }

        #[test]
        fn as_flip_negates(d in arb_diagram()) {
            let a = canonicalize(&d).unwrap();
            for v in d.trivalent_vertices() {
                let f = canonicalize(&d.flip_orientation(v).unwrap()).unwrap();
                prop_assert_eq!(&f.diagram, &a.diagram);
                prop_assert_eq!(f.sign, -a.sign);
            }
        }
    }
}
