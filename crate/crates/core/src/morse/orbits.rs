//! The transfer digraph on 1/1-events and enumeration of closed AL-paths.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::FiberwiseMorseData;
use crate::laurent::LaurentPoly;
use crate::rational::{self, q, Q};

/// Descent along `to(from)` from the arrival of event `from` to the departure
/// of event `to`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransferEdge {
    pub from: usize,
    pub to: usize,
    pub locus: u32,
    #[serde(with = "rational::as_string")]
    pub drop: Q,
    /// Crossings with the reference fiber.
    pub exponent: u64,
    pub sign: i8,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransferGraph {
    pub node_count: usize,
    pub edges: Vec<TransferEdge>,
}

fn floor(x: &Q) -> i64 {
    x.floor().to_integer().to_i64().expect("small angle")
}

/// Number of times the base angle passes `theta0` while descending from
/// position `start` by `drop`.
fn crossings(start: &Q, drop: &Q, theta0: &Q) -> u64 {
    (floor(&(start - theta0)) - floor(&(start - drop - theta0))) as u64
}

impl TransferGraph {
    pub fn new(m: &FiberwiseMorseData) -> Self {
        let ev = &m.one_one_events;
        let mut edges = Vec::new();
        for (i, a) in ev.iter().enumerate() {
            let period = q(m.locus(a.to).expect("validated").period as i64);
            let start = Q::from_integer(a.to_sheet.into()) + &a.base_angle;
            for (j, b) in ev.iter().enumerate() {
                if b.from != a.to {
                    continue;
                }
                let stop = Q::from_integer(b.from_sheet.into()) + &b.base_angle;
                let mut drop = (&start - &stop) % &period;
                if drop <= Q::zero() {
                    drop += &period;
                }
                let exponent = crossings(&start, &drop, &m.base_fiber_angle);
                edges.push(TransferEdge { from: i, to: j, locus: a.to, drop, exponent, sign: b.sign });
            }
        }
        Self { node_count: ev.len(), edges }
    }

    pub fn successors(&self, i: usize) -> impl Iterator<Item = &TransferEdge> + '_ {
        self.edges.iter().filter(move |e| e.from == i)
    }

    pub fn edge(&self, i: usize, j: usize) -> Option<&TransferEdge> {
        self.edges.iter().find(|e| e.from == i && e.to == j)
    }

    /// `A(t)` with entry `sign * t^exponent` at each edge.
    pub fn matrix(&self) -> Vec<Vec<LaurentPoly>> {
        let n = self.node_count;
        let mut a = vec![vec![LaurentPoly::zero(); n]; n];
        for e in &self.edges {
            a[e.from][e.to] = LaurentPoly::monomial(q(e.sign as i64), e.exponent as i64);
        }
        a
    }

    /// `det(I - A(t))`.
    pub fn determinant(&self) -> LaurentPoly {
        let mut a = self.matrix();
        for (i, row) in a.iter_mut().enumerate() {
            for (j, x) in row.iter_mut().enumerate() {
                *x = -&*x;
                if i == j {
                    *x = &*x + &LaurentPoly::one();
                }
            }
        }
        super::det_poly(a).expect("polynomial entries")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum OrbitKind {
    Bare { locus: u32 },
    EventCycle { events: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Segment {
    Vertical {
        locus: u32,
        #[serde(with = "rational::as_string")]
        drop: Q,
    },
    Jump {
        event: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedALPath {
    pub id: String,
    pub kind: OrbitKind,
    pub segments: Vec<Segment>,
    pub period: u64,
    pub sign: i8,
    pub index: u8,
    pub irreducible: String,
    pub irreducible_period: u64,
    pub multiplicity: u64,
}

fn irreducible_id(kind: &OrbitKind) -> String {
    match kind {
        OrbitKind::Bare { locus } => format!("L{locus}"),
        OrbitKind::EventCycle { events } => {
            format!("E{}", events.iter().map(|e| e.to_string()).collect::<Vec<_>>().join("."))
        }
    }
}

fn with_power(base: &str, k: u64) -> String {
    if k == 1 {
        base.to_string()
    } else {
        format!("{base}^{k}")
    }
}

/// Smallest `d` with `c` invariant under rotation by `d`.
fn primitive_length(c: &[usize]) -> usize {
    let n = c.len();
    (1..=n).find(|&d| n.is_multiple_of(d) && (0..n).all(|i| c[i] == c[(i + d) % n])).unwrap()
}

fn is_least_rotation(c: &[usize]) -> bool {
    let n = c.len();
    (1..n).all(|r| {
        let rot = c[r..].iter().chain(&c[..r]);
        c.iter().cmp(rot) != std::cmp::Ordering::Greater
    })
}

fn event_cycle(m: &FiberwiseMorseData, g: &TransferGraph, cycle: Vec<usize>) -> ClosedALPath {
    let n = cycle.len();
    let mut segments = Vec::with_capacity(2 * n);
    let mut period = 0;
    let mut sign = 1;
    for i in 0..n {
        let e = g.edge(cycle[i], cycle[(i + 1) % n]).expect("cycle edge");
        segments.push(Segment::Jump { event: cycle[i] });
        segments.push(Segment::Vertical { locus: e.locus, drop: e.drop.clone() });
        period += e.exponent;
        sign *= m.one_one_events[cycle[i]].sign;
    }
    let d = primitive_length(&cycle);
    let k = (n / d) as u64;
    let irr = irreducible_id(&OrbitKind::EventCycle { events: cycle[..d].to_vec() });
    ClosedALPath {
        id: with_power(&irr, k),
        kind: OrbitKind::EventCycle { events: cycle },
        segments,
        period,
        sign,
        index: 1,
        irreducible: irr,
        irreducible_period: period / k,
        multiplicity: k,
    }
}

/// Cycles through `start` using only nodes `>= start`, in least rotation.
fn cycles_from(g: &TransferGraph, start: usize, max_period: u64) -> Vec<Vec<usize>> {
    let max_len = g.node_count * (max_period as usize + 1);
    let mut out = Vec::new();
    let mut path = vec![start];
    fn walk(
        g: &TransferGraph,
        start: usize,
        max_period: u64,
        max_len: usize,
        path: &mut Vec<usize>,
        weight: u64,
        out: &mut Vec<Vec<usize>>,
    ) {
        let last = *path.last().unwrap();
        for e in g.successors(last) {
            let w = weight + e.exponent;
            if w > max_period || e.to < start {
                continue;
            }
            if e.to == start && w >= 1 && is_least_rotation(path) {
                out.push(path.clone());
            }
            if path.len() < max_len {
                path.push(e.to);
                walk(g, start, max_period, max_len, path, w, out);
                path.pop();
            }
        }
    }
    walk(g, start, max_period, max_len, &mut path, 0, &mut out);
    out
}

/// Every closed AL-path class with period at most `max_period`, sorted by
/// period and id.
pub fn enumerate_closed_orbits(m: &FiberwiseMorseData, max_period: u64) -> Vec<ClosedALPath> {
    let mut out = Vec::new();
    for l in &m.critical_loci {
        let p = l.period as u64;
        let irr = irreducible_id(&OrbitKind::Bare { locus: l.id });
        let mut k = 1;
        while k * p <= max_period {
            out.push(ClosedALPath {
                id: with_power(&irr, k),
                kind: OrbitKind::Bare { locus: l.id },
                segments: vec![Segment::Vertical { locus: l.id, drop: q((k * p) as i64) }],
                period: k * p,
                sign: if l.sign == -1 && k.is_odd() { -1 } else { 1 },
                index: l.index,
                irreducible: irr.clone(),
                irreducible_period: p,
                multiplicity: k,
            });
            k += 1;
        }
    }
    let g = TransferGraph::new(m);
    let cycles: BTreeSet<Vec<usize>> =
        (0..g.node_count).into_par_iter().flat_map_iter(|s| cycles_from(&g, s, max_period)).collect();
    out.extend(cycles.into_iter().map(|c| event_cycle(m, &g, c)));
    out.sort_by(|a, b| (a.period, &a.id).cmp(&(b.period, &b.id)));
    debug_assert!(out.iter().all(|o| o.period >= 1 && o.period == o.multiplicity * o.irreducible_period));
    out
}
