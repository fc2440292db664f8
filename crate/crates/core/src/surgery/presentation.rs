//! The surgery map on diagrams and the constant in `Z_n ∘ psi_n = 2^n`.

use std::collections::HashMap;

use serde::Serialize;

use super::scheme::{Clasper, ClasperTag, ForestScheme};
use crate::diagram::json::short_name;
use crate::diagram::{automorphism_group_order, ColoredDiagram, Diagram, DiagramVector, EdgeKind};
use crate::error::{Error, Result};
use crate::rational::{q, Q};
use crate::relations::{build_quotient, Conventions, QuotientSpace, Window};
use crate::theta::{theta, w_map, PolyModConstants};

/// A connected piece of the diagram with the Wilson loop removed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClasperDatum {
    pub clasper: String,
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
    /// Colors of `edges`, the homology datum of the clasper.
    pub colors: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurgeryPresentation {
    pub source: String,
    pub scheme: ForestScheme,
    pub claspers: Vec<ClasperDatum>,
}

/// Components of the non-Wilson part, each as sorted vertex and edge lists.
pub fn components(d: &Diagram) -> Vec<(Vec<usize>, Vec<usize>)> {
    let n = d.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for e in d.edges().iter().filter(|e| e.kind != EdgeKind::Wilson) {
        let (a, b) = (find(&mut parent, e.tail), find(&mut parent, e.head));
        parent[a.max(b)] = a.min(b);
    }
    let mut groups: std::collections::BTreeMap<usize, (Vec<usize>, Vec<usize>)> = Default::default();
    for v in 0..n {
        let r = find(&mut parent, v);
        groups.entry(r).or_default().0.push(v);
    }
    for (i, e) in d.edges().iter().enumerate() {
        if e.kind != EdgeKind::Wilson {
            let r = find(&mut parent, e.tail);
            groups.get_mut(&r).unwrap().1.push(i);
        }
    }
    groups.into_values().collect()
}

/// One strict tree clasper per component of the non-Wilson part, of degree
/// half its vertex count. Pure bookkeeping.
pub fn psi(c: &ColoredDiagram) -> Result<SurgeryPresentation> {
    let d = c.as_monomial().ok_or_else(|| Error::Argument("psi needs a monomial diagram".into()))?;
    if !d.is_nh() {
        return Err(Error::Argument("psi needs a nullhomologous diagram".into()));
    }
    let mut claspers = Vec::new();
    let mut data = Vec::new();
    for (i, (vertices, edges)) in components(&d).into_iter().enumerate() {
        let name = format!("G{}", i + 1);
        claspers.push(Clasper::new(&name, ClasperTag::Strict, (vertices.len() / 2) as u32));
        let colors = edges.iter().map(|&e| d.edges()[e].color).collect();
        data.push(ClasperDatum { clasper: name, vertices, edges, colors });
    }
    let scheme = ForestScheme::new("K", claspers)?;
    debug_assert_eq!(scheme.degree() as usize, d.degree());
    Ok(SurgeryPresentation { source: short_name(&d), scheme, claspers: data })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabelingCount {
    pub orbits: u64,
    pub automorphisms: u64,
    /// `2^n (2n)! (3n)!`.
    pub group_order: u64,
}

fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

/// Number of distinct labeled, oriented copies of a chord diagram.
///
/// Vertex labelings and chord orientations are enumerated explicitly; colors
/// are compared after gauge fixing along the Wilson path from the smallest
/// label. Each resulting edge multiset is then labeled in
/// `(3n)! / prod(multiplicity!)` distinct ways.
pub fn labeling_orbit_count(d: &Diagram) -> Result<LabelingCount> {
    if !d.is_chord_diagram() {
        return Err(Error::Argument("labeling_orbit_count needs a chord diagram; reduce by STU first".into()));
    }
    d.validate()?;
    let n = d.degree() as u64;
    let v = d.vertex_count();
    let edges = d.edges();
    let chords: Vec<usize> = (0..edges.len()).filter(|&i| edges[i].kind != EdgeKind::Wilson).collect();
    let wilson = d.wilson();

    let mut variants: HashMap<Vec<(usize, usize, bool, i64)>, ()> = HashMap::new();
    for sigma in crate::diagram::canonical::permutations(v) {
        let start = (0..wilson.len()).min_by_key(|&i| sigma[wilson[i]]).unwrap();
        let mut pot = vec![0i64; v];
        for step in 0..wilson.len() - 1 {
            let a = wilson[(start + step) % wilson.len()];
            let b = wilson[(start + step + 1) % wilson.len()];
            let w = d.wilson_edge_from(a).expect("wilson edge");
            pot[b] = pot[a] - edges[w].color;
        }
        for flips in 0u32..(1 << chords.len()) {
            let mut key: Vec<(usize, usize, bool, i64)> = edges
                .iter()
                .enumerate()
                .map(|(i, e)| {
                    let flipped = chords.iter().position(|&c| c == i).is_some_and(|k| flips >> k & 1 == 1);
                    let (t, h, c) = if flipped { (e.head, e.tail, -e.color) } else { (e.tail, e.head, e.color) };
                    (sigma[t], sigma[h], e.kind == EdgeKind::Wilson, c + pot[h] - pot[t])
                })
                .collect();
            key.sort_unstable();
            variants.insert(key, ());
        }
    }
    let mut orbits = 0;
    for key in variants.keys() {
        let mut arrangements = factorial(key.len() as u64);
        let mut run = 1;
        for i in 1..=key.len() {
            if i < key.len() && key[i] == key[i - 1] {
                run += 1;
            } else {
                arrangements /= factorial(run);
                run = 1;
            }
        }
        orbits += arrangements;
    }
    let automorphisms = automorphism_group_order(d)?;
    let group_order = (1u64 << n) * factorial(2 * n) * factorial(3 * n);
    if orbits * automorphisms != group_order {
        return Err(Error::Consistency(format!(
            "{orbits} labelings times {automorphisms} automorphisms differs from {group_order}"
        )));
    }
    Ok(LabelingCount { orbits, automorphisms, group_order })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurgeryValue {
    pub degree: usize,
    pub labelings: LabelingCount,
    /// `labelings * |Aut| / ((2n)! (3n)!)`.
    #[serde(with = "crate::rational::as_string")]
    pub scalar: Q,
    pub class: DiagramVector,
}

/// `Z_n(psi_n(d))` as the scalar from labeling counts times the reduced class.
pub fn z_of_surgery(d: &Diagram, n: usize, qs: &QuotientSpace) -> Result<SurgeryValue> {
    if !(1..=2).contains(&n) || d.degree() != n {
        return Err(Error::Argument(format!("need degree n in 1..=2 matching the diagram, got n = {n}")));
    }
    psi(&ColoredDiagram::from_monomial(d))?;
    let labelings = labeling_orbit_count(d)?;
    let nn = n as u64;
    let scalar = Q::new(
        (labelings.orbits as i64 * labelings.automorphisms as i64).into(),
        ((factorial(2 * nn) * factorial(3 * nn)) as i64).into(),
    );
    let expected = q(1 << n);
    if scalar != expected {
        return Err(Error::Consistency(format!("surgery constant {scalar} differs from {expected}")));
    }
    let class = qs.reduce_diagram(d)?.scale(&scalar);
    Ok(SurgeryValue { degree: n, labelings, scalar, class })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WhiteheadReport {
    pub presentation: SurgeryPresentation,
    pub z_difference: DiagramVector,
    pub z_unknot: DiagramVector,
    pub result: DiagramVector,
    pub w_image: PolyModConstants,
}

/// `Z_1(Wh(K)) - Z_1(O)` for `K = {p} x S^1` in `S^2 x S^1` is `Z_1` of the
/// one-clasper scheme on `Θ(0,1)`; adding `Z_1(O) = 0` gives `Z_1(Wh(K))`.
pub fn whitehead_example() -> Result<WhiteheadReport> {
    let qs = build_quotient(Window::nh(1, 3), Conventions::default())?;
    let th = theta(0, 1);
    let presentation = psi(&ColoredDiagram::from_monomial(&th))?;
    let z_difference = z_of_surgery(&th, 1, &qs)?.class;
    let z_unknot = DiagramVector::zero();
    let result = z_difference.add(&z_unknot);
    let w_image = w_map(&result)?;
    if result.is_zero() || w_image.is_zero() {
        return Err(Error::Consistency("Z_1(Wh(K)) reduced to zero".into()));
    }
    Ok(WhiteheadReport { presentation, z_difference, z_unknot, result, w_image })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::canonical::permutations;
    use crate::laurent::LaurentPoly;
    use std::collections::{BTreeMap, HashSet};

    fn chord2(colors: &[i64; 6], crossed: bool) -> Diagram {
        let chords = if crossed { [(0, 2, colors[4]), (1, 3, colors[5])] } else { [(0, 1, colors[4]), (2, 3, colors[5])] };
        Diagram::build(4, vec![0, 1, 2, 3], &colors[..4], &chords, BTreeMap::new()).unwrap()
    }

    /// Every vertex labeling, edge labeling and chord orientation, compared
    /// after breadth-first gauge fixing.
    fn brute_force(d: &Diagram) -> u64 {
        let m = d.edges().len();
        let chords: Vec<usize> = (0..m).filter(|&i| d.edges()[i].kind != EdgeKind::Wilson).collect();
        let mut seen = HashSet::new();
        for vmap in permutations(d.vertex_count()) {
            for emap in permutations(m) {
                let base = d.relabel(&vmap, &emap);
                for flips in 0u32..(1 << chords.len()) {
                    let mut x = base.clone();
                    for (k, &c) in chords.iter().enumerate() {
                        if flips >> k & 1 == 1 {
                            x = x.reverse_edge(emap[c]).unwrap();
                        }
                    }
                    let colors = x.gauge_fixed_colors();
                    let key: Vec<_> =
                        x.edges().iter().zip(colors).map(|(e, c)| (e.tail, e.head, e.kind, c)).collect();
                    seen.insert(key);
                }
            }
        }
        seen.len() as u64
    }

    #[test]
    fn degree_one_counts() {
        assert_eq!(labeling_orbit_count(&theta(0, 0)).unwrap().orbits, 12);
        assert_eq!(labeling_orbit_count(&theta(0, 1)).unwrap().orbits, 24);
        assert_eq!(brute_force(&theta(0, 0)), 12);
        assert_eq!(brute_force(&theta(0, 1)), 24);
    }

    #[test]
    fn degree_two_counts_match_brute_force() {
        for (colors, crossed) in [([0; 6], true), ([0; 6], false), ([1, -1, 0, 0, 1, 0], true), ([0, 0, 0, 0, 1, 2], false)] {
            let d = chord2(&colors, crossed);
            let c = labeling_orbit_count(&d).unwrap();
            assert_eq!(c.orbits, brute_force(&d), "{colors:?} {crossed}");
            assert_eq!(c.orbits * c.automorphisms, 4 * 24 * 720);
        }
    }

    #[test]
    fn psi_examples() {
        let p = psi(&ColoredDiagram::from_monomial(&theta(0, 1))).unwrap();
        assert_eq!(p.scheme.size(), 1);
        assert_eq!(p.scheme.claspers[0].degree, 1);
        let p = psi(&ColoredDiagram::from_monomial(&chord2(&[0; 6], true))).unwrap();
        assert_eq!(p.scheme.size(), 2);
        assert!(p.scheme.claspers.iter().all(|c| c.degree == 1));

        // two legs into a pair of trivalent vertices joined by a double edge
        let o = BTreeMap::new();
        let d = Diagram::build(4, vec![0, 1], &[0, 0], &[(0, 2, 0), (1, 3, 0), (2, 3, 0), (2, 3, 0)], o).unwrap();
        let p = psi(&ColoredDiagram::from_monomial(&d)).unwrap();
        assert_eq!(p.scheme.size(), 1);
        assert_eq!(p.scheme.claspers[0].degree, 2);

        let not_nh = Diagram::build(2, vec![0, 1], &[1, 0], &[(1, 0, 0)], BTreeMap::new()).unwrap();
        assert!(matches!(psi(&ColoredDiagram::from_monomial(&not_nh)), Err(Error::Argument(_))));
        let sum = ColoredDiagram::new(theta(0, 0), vec![LaurentPoly::one(), LaurentPoly::one(), LaurentPoly::from_coeffs(0, &[1, 1])])
            .unwrap();
        assert!(matches!(psi(&sum), Err(Error::Argument(_))));
    }

    #[test]
    fn surgery_values() {
        let qs = build_quotient(Window::nh(1, 3), Conventions::default()).unwrap();
        let z = z_of_surgery(&theta(0, 1), 1, &qs).unwrap();
        assert_eq!(z.scalar, q(2));
        assert_eq!(z.class, qs.reduce_diagram(&theta(0, 1)).unwrap().scale(&q(2)));
        assert!(z_of_surgery(&theta(0, 0), 1, &qs).unwrap().class.is_zero());
    }

    #[test]
    fn whitehead() {
        let r = whitehead_example().unwrap();
        assert_eq!(r.w_image, PolyModConstants::new(LaurentPoly::from_coeffs(1, &[2])).unwrap());
        let qs = build_quotient(Window::nh(1, 3), Conventions::default()).unwrap();
        let again = z_of_surgery(&theta(0, 1), 1, &qs).unwrap().class;
        assert!(qs.reduce(&r.result.sub(&again)).unwrap().is_zero());
    }
}
