//! Fraction-free sparse elimination over the integers.
//!
//! Each stored row is primitive, has a positive leading entry, and is keyed by
//! its largest column (the pivot). Rows are only reduced at their pivot, so the
//! stored set is semi-echelon; normal forms are still unique because the set of
//! pivots is determined by the row space alone.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::rational::Q;

pub(crate) type SparseRow = BTreeMap<usize, BigInt>;

#[derive(Clone, Debug, Default)]
pub(crate) struct Echelon {
    pivots: HashMap<usize, SparseRow>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivots.contains_key(&col)
    }

    /// Adds a row to the span. Returns true when it increased the rank.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        row.retain(|_, x| !x.is_zero());
        loop {
            let Some((&c, a)) = row.iter().next_back() else { return false };
            let Some(p) = self.pivots.get(&c) else { break };
            let a = a.clone();
            let b = p[&c].clone();
            // row <- b*row - a*p, cancelling column c
            for x in row.values_mut() {
                *x *= &b;
            }
            for (&k, y) in p {
                let slot = row.entry(k).or_insert_with(BigInt::zero);
                *slot -= &a * y;
            }
            row.retain(|_, x| !x.is_zero());
            make_primitive(&mut row);
        }
        make_primitive(&mut row);
        let (&c, _) = row.iter().next_back().unwrap();
        self.pivots.insert(c, row);
        true
    }

    /// The unique representative of `v` modulo the span supported on
    /// non-pivot columns.
    pub fn reduce(&self, mut v: BTreeMap<usize, Q>) -> BTreeMap<usize, Q> {
        v.retain(|_, x| !x.is_zero());
        let mut bound: Option<usize> = None;
        loop {
            let next = match bound {
                None => v.keys().next_back().copied(),
                Some(b) => v.range(..b).next_back().map(|(&k, _)| k),
            };
            let Some(c) = next else { break };
            if let Some(p) = self.pivots.get(&c) {
                let factor = &v[&c] / Q::from_integer(p[&c].clone());
                for (&k, y) in p {
                    let slot = v.entry(k).or_insert_with(Q::zero);
                    *slot -= &factor * Q::from_integer(y.clone());
                    if slot.is_zero() {
                        v.remove(&k);
                    }
                }
            }
            bound = Some(c);
        }
        v
    }
}

fn make_primitive(row: &mut SparseRow) {
    let mut g = BigInt::zero();
    for x in row.values() {
        g = g.gcd(x);
        if g == BigInt::from(1) {
            break;
        }
    }
    let negate = row.values().next_back().is_some_and(|x| x.is_negative());
    if g.is_zero() {
        return;
    }
    if negate {
        g = -g;
    }
    if g != BigInt::from(1) {
        for x in row.values_mut() {
            *x /= &g;
        }
    }
}
