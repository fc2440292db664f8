use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use super::elimination::{Echelon, SparseRow};
use super::{relations_at, Conventions, Window};
use crate::diagram::canonical::canonicalize_unchecked;
use crate::diagram::{enumerate_diagrams, enumerate_shapes, Diagram, DiagramVector, EnumerateOptions};
use crate::error::{Error, Result};

/// Default bound on the estimated number of window diagrams.
pub const DEFAULT_RESOURCE_CAP: u64 = 2_000_000;

/// The cap from `KNOTFORGE_RESOURCE_CAP`, or the default.
pub fn resource_cap() -> u64 {
    std::env::var("KNOTFORGE_RESOURCE_CAP")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_RESOURCE_CAP)
}

/// Number of colorings that enumeration would visit.
pub fn estimated_size(window: &Window) -> Result<u64> {
    let shapes = enumerate_shapes(window.degree)?;
    let width = (2 * window.max_exponent + 1) as u64;
    Ok(shapes
        .iter()
        .map(|s| width.saturating_pow(s.edges().len() as u32))
        .fold(0u64, |a, b| a.saturating_add(b)))
}

/// Canonical window diagrams that do not vanish by AS.
pub(crate) fn window_diagrams(window: &Window) -> Result<Vec<Diagram>> {
    if window.max_exponent < 0 {
        return Err(Error::Argument("window must be nonnegative".into()));
    }
    let size = estimated_size(window)?;
    let cap = resource_cap();
    if size > cap {
        return Err(Error::Resource(format!(
            "window (degree {}, K = {}) needs about {size} diagrams, above the cap {cap}; \
             raise KNOTFORGE_RESOURCE_CAP or shrink the window",
            window.degree, window.max_exponent
        )));
    }
    let opts = EnumerateOptions { nh_only: window.nh_only, chords_only: false };
    let all = enumerate_diagrams(window.degree, window.max_exponent, opts)?;
    Ok(all.into_par_iter().filter(|d| canonicalize_unchecked(d).sign != 0).collect())
}

/// Column order: smaller exponents first, so normal forms prefer them.
fn column_key(d: &Diagram) -> (i64, i64) {
    let max = d.max_abs_exponent();
    let sum = d.edges().iter().map(|e| e.color.abs()).sum();
    (max, sum)
}

/// A truncated quotient space with its normal-form map.
#[derive(Debug)]
pub struct QuotientSpace {
    window: Window,
    conventions: Conventions,
    columns: Vec<Diagram>,
    index: HashMap<Diagram, usize>,
    echelon: Echelon,
    relation_count: usize,
}

/// Generates every relation in the window and eliminates.
pub fn build_quotient(window: Window, conventions: Conventions) -> Result<QuotientSpace> {
    let mut columns = window_diagrams(&window)?;
    columns.par_sort_by_cached_key(|d| (column_key(d), d.clone()));
    let index: HashMap<Diagram, usize> =
        columns.iter().enumerate().map(|(i, d)| (d.clone(), i)).collect();

    let per_column: Vec<(usize, Vec<SparseRow>)> = columns
        .par_iter()
        .map(|d| {
            let rels = relations_at(d, &window, conventions);
            let rows = rels
                .iter()
                .filter_map(|r| {
                    let mut row = SparseRow::new();
                    for (diag, c) in r.vector().terms() {
                        let col = index[diag];
                        *row.entry(col).or_insert_with(BigInt::zero) += c.numer();
                    }
                    row.retain(|_, x| !x.is_zero());
                    (!row.is_empty()).then_some(row)
                })
                .collect();
            (rels.len(), rows)
        })
        .collect();

    let mut relation_count = 0;
    let mut rows = Vec::new();
    for (n, r) in per_column {
        relation_count += n;
        rows.extend(r);
    }
    // short rows first keeps intermediate rows small; the result does not depend on order
    rows.sort_by_key(|r| r.len());
    let mut echelon = Echelon::default();
    for r in rows {
        echelon.insert(r);
    }
    Ok(QuotientSpace { window, conventions, columns, index, echelon, relation_count })
}

impl QuotientSpace {
    pub fn window(&self) -> &Window {
        &self.window
    }

    pub fn conventions(&self) -> Conventions {
        self.conventions
    }

    pub fn relation_count(&self) -> usize {
        self.relation_count
    }

    pub fn column_count(&self) -> usize {
        self.columns.len()
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    /// Canonical diagrams spanning the quotient, in column order.
    pub fn basis(&self) -> Vec<&Diagram> {
        self.columns
            .iter()
            .enumerate()
            .filter(|(i, _)| !self.echelon.is_pivot(*i))
            .map(|(_, d)| d)
            .collect()
    }

    pub fn dimension(&self) -> usize {
        self.columns.len() - self.echelon.rank()
    }

    /// Normal form of `v`, supported on basis diagrams.
    pub fn reduce(&self, v: &DiagramVector) -> Result<DiagramVector> {
        let mut coords = BTreeMap::new();
        for (d, c) in v.terms() {
            let Some(&i) = self.index.get(d) else {
                return Err(Error::Window(format!(
                    "diagram of degree {} with max exponent {} lies outside window (degree {}, K = {}{}); enlarge K",
                    d.degree(),
                    d.max_abs_exponent(),
                    self.window.degree,
                    self.window.max_exponent,
                    if self.window.nh_only { ", nullhomologous only" } else { "" }
                )));
            };
            coords.insert(i, c.clone());
        }
        Ok(self
            .echelon
            .reduce(coords)
            .into_iter()
            .map(|(i, c)| (self.columns[i].clone(), c))
            .collect())
    }

    pub fn reduce_diagram(&self, d: &Diagram) -> Result<DiagramVector> {
        self.reduce(&DiagramVector::from_diagram(d)?)
    }

    /// Rank of the span of the reduced vectors.
    pub fn rank_of(&self, vs: &[DiagramVector]) -> Result<usize> {
        let mut e = Echelon::default();
        for v in vs {
            let r = self.reduce(v)?;
            let mut row = SparseRow::new();
            // clear denominators
            let lcm = r.terms().fold(BigInt::from(1), |acc, (_, c)| num_integer::lcm(acc, c.denom().clone()));
            for (d, c) in r.terms() {
                let x = c.numer() * (&lcm / c.denom());
                row.insert(self.index[d], x);
            }
            e.insert(row);
        }
        Ok(e.rank())
    }

    /// Whether a diagram is a column of this window.
    pub fn contains(&self, d: &Diagram) -> bool {
        self.index.contains_key(d)
    }
}

/// Reductions of every window-(K-2) diagram agree in windows K and K+2.
pub fn stabilization_check(window: Window, conventions: Conventions) -> Result<bool> {
    let small = Window { max_exponent: (window.max_exponent - 2).max(0), ..window };
    let qk = build_quotient(window, conventions)?;
    let qk2 = build_quotient(window.widened(2), conventions)?;
    let probes = window_diagrams(&small)?;
    let results: Result<Vec<bool>> = probes
        .par_iter()
        .map(|d| {
            let v = DiagramVector::from_diagram(d)?;
            Ok(qk.reduce(&v)? == qk2.reduce(&v)?)
        })
        .collect();
    Ok(results?.into_iter().all(|b| b))
}
