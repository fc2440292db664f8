use super::canonical::wilson_preserving_maps;
use super::{coboundary_potential, Diagram, Edge, EdgeKind};
use crate::error::Result;

/// Number of automorphisms of `d`: a vertex bijection keeping the Wilson loop
/// in order, an edge bijection compatible with it, and a reversal choice per
/// non-Wilson edge, such that the transported coloring (reversed edges get the
/// inverse color) differs from the original by Holonomy moves.
///
/// Vertex orientations are not required to match; they only contribute a sign.
pub fn automorphism_group_order(d: &Diagram) -> Result<u64> {
    d.validate()?;
    let mut total = 0;
    for vmap in wilson_preserving_maps(d) {
        let mut used = vec![false; d.edges().len()];
        let mut image = vec![(0usize, 0i64); d.edges().len()];
        count_edge_maps(d, &vmap, 0, &mut used, &mut image, &mut total);
    }
    Ok(total)
}

fn count_edge_maps(
    d: &Diagram,
    vmap: &[usize],
    i: usize,
    used: &mut [bool],
    image: &mut [(usize, i64)],
    total: &mut u64,
) {
    let edges = d.edges();
    if i == edges.len() {
        // image[i] = (target edge, transported color)
        let mut delta = vec![0i64; edges.len()];
        for &(j, c) in image.iter() {
            delta[j] = c - edges[j].color;
        }
        let shifted: Vec<Edge> = edges
            .iter()
            .zip(&delta)
            .map(|(e, &x)| Edge::new(e.tail, e.head, e.kind, x))
            .collect();
        if coboundary_potential(d.vertex_count(), &shifted, |e| e.color).is_some() {
            *total += 1;
        }
        return;
    }
    let e = edges[i];
    let (t, h) = (vmap[e.tail], vmap[e.head]);
    for (j, f) in edges.iter().enumerate() {
        if used[j] || f.kind != e.kind {
            continue;
        }
        let mut options = Vec::with_capacity(2);
        if (f.tail, f.head) == (t, h) {
            options.push(e.color);
        }
        if e.kind != EdgeKind::Wilson && (f.head, f.tail) == (t, h) {
            options.push(-e.color);
        }
        for c in options {
            used[j] = true;
            image[i] = (j, c);
            count_edge_maps(d, vmap, i + 1, used, image, total);
            used[j] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::canonical::permutations;
    use crate::diagram::enumerate::{enumerate_diagrams, enumerate_shapes, EnumerateOptions};
    use std::collections::BTreeMap;

    /// Exhaustive search over all vertex bijections, all edge bijections and all
    /// reversal masks, checking incidence, kinds and the color condition.
    fn brute_force(d: &Diagram) -> u64 {
        let n = d.vertex_count();
        let edges = d.edges();
        let m = edges.len();
        let nw: Vec<usize> = (0..m).filter(|&i| edges[i].kind != EdgeKind::Wilson).collect();
        let mut count = 0;
        for vp in permutations(n) {
            if (0..n).any(|v| d.is_univalent(v) != d.is_univalent(vp[v])) {
                continue;
            }
            for ep in permutations(m) {
                if (0..m).any(|i| edges[i].kind != edges[ep[i]].kind) {
                    continue;
                }
                for mask in 0..(1u32 << nw.len()) {
                    let rev = |i: usize| nw.iter().position(|&x| x == i).is_some_and(|k| mask & (1 << k) != 0);
                    let mut ok = true;
                    let mut delta = vec![0i64; m];
                    for i in 0..m {
                        let e = edges[i];
                        let f = edges[ep[i]];
                        let (t, h) = if rev(i) { (vp[e.head], vp[e.tail]) } else { (vp[e.tail], vp[e.head]) };
                        if (t, h) != (f.tail, f.head) {
                            ok = false;
                            break;
                        }
                        let c = if rev(i) { -e.color } else { e.color };
                        delta[ep[i]] = c - f.color;
                    }
                    if !ok {
                        continue;
                    }
                    // differences must be a coboundary m(head) - m(tail)
                    let mut pot: Vec<Option<i64>> = vec![None; n];
                    pot[0] = Some(0);
                    for _ in 0..n {
                        for (j, f) in edges.iter().enumerate() {
                            match (pot[f.tail], pot[f.head]) {
                                (Some(a), None) => pot[f.head] = Some(a + delta[j]),
                                (None, Some(b)) => pot[f.tail] = Some(b - delta[j]),
                                _ => {}
                            }
                        }
                    }
                    if edges
                        .iter()
                        .enumerate()
                        .all(|(j, f)| pot[f.head].unwrap() - pot[f.tail].unwrap() == delta[j])
                    {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    fn chord(p: i64, q: i64) -> Diagram {
        Diagram::build(2, vec![0, 1], &[p, -p], &[(1, 0, q)], BTreeMap::new()).unwrap()
    }

    #[test]
    fn single_chord() {
        assert_eq!(brute_force(&chord(0, 0)), 2);
        assert_eq!(automorphism_group_order(&chord(0, 0)).unwrap(), 2);
        assert_eq!(brute_force(&chord(0, 1)), 1);
        assert_eq!(automorphism_group_order(&chord(0, 1)).unwrap(), 1);
    }

    #[test]
    fn degree_two_chords() {
        let crossed =
            Diagram::build(4, vec![0, 1, 2, 3], &[0; 4], &[(0, 2, 0), (1, 3, 0)], BTreeMap::new()).unwrap();
        let parallel =
            Diagram::build(4, vec![0, 1, 2, 3], &[0; 4], &[(0, 1, 0), (2, 3, 0)], BTreeMap::new()).unwrap();
        assert_eq!(brute_force(&crossed), 4);
        assert_eq!(automorphism_group_order(&crossed).unwrap(), 4);
        assert_eq!(brute_force(&parallel), 2);
        assert_eq!(automorphism_group_order(&parallel).unwrap(), 2);
    }

    #[test]
    fn matches_brute_force_on_degree_two_shapes() {
        for d in enumerate_shapes(2).unwrap() {
            assert_eq!(automorphism_group_order(&d).unwrap(), brute_force(&d), "{d:?}");
        }
    }

    #[test]
    fn matches_brute_force_on_colored_degree_one() {
        for d in enumerate_diagrams(1, 2, EnumerateOptions::default()).unwrap() {
            assert_eq!(automorphism_group_order(&d).unwrap(), brute_force(&d), "{d:?}");
        }
    }

    #[test]
    fn divides_labeling_group_order() {
        let fact = |k: u64| (1..=k).product::<u64>();
        for d in enumerate_diagrams(2, 1, EnumerateOptions { nh_only: true, chords_only: false }).unwrap() {
            let a = automorphism_group_order(&d).unwrap();
            let nw = d.edges().iter().filter(|e| e.kind != EdgeKind::Wilson).count() as u32;
            let q = d.wilson().len() as u64;
            let bound = 2u64.pow(nw) * fact(q) * fact(d.vertex_count() as u64 - q);
            assert_eq!(bound % a, 0, "{d:?}");
        }
    }
}
