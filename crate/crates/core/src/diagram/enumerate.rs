use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use super::canonical::{canonical_code, canonicalize_unchecked};
use super::Diagram;
use crate::error::{Error, Result};

pub const MAX_DEGREE: usize = 3;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumerateOptions {
    /// Keep only diagrams whose Wilson exponents sum to zero.
    pub nh_only: bool,
    /// Keep only diagrams without trivalent vertices.
    pub chords_only: bool,
}

fn check_degree(degree: usize) -> Result<()> {
    if degree == 0 {
        return Err(Error::Argument("degree must be positive".into()));
    }
    if degree > MAX_DEGREE {
        return Err(Error::Argument(format!("degree {degree} exceeds the supported maximum {MAX_DEGREE}")));
    }
    Ok(())
}

/// One canonical trivially colored diagram per uncolored shape of the given degree.
pub fn enumerate_shapes(degree: usize) -> Result<Vec<Diagram>> {
    check_degree(degree)?;
    let n = 2 * degree;
    let mut found: BTreeMap<Vec<super::Edge>, Diagram> = BTreeMap::new();
    for q in 1..=n {
        let valence: Vec<usize> = (0..n).map(|v| if v < q { 1 } else { 3 }).collect();
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
        let mut rem = valence.clone();
        let mut mult = vec![0usize; pairs.len()];
        let mut out = Vec::new();
        fill(&pairs, 0, &mut rem, &mut mult, &mut out);
        for m in out {
            let mut nw = Vec::new();
            for (k, &(i, j)) in pairs.iter().enumerate() {
                for _ in 0..m[k] {
                    nw.push((i, j, 0));
                }
            }
            let Ok(d) = Diagram::build(n, (0..q).collect(), &vec![0; q], &nw, BTreeMap::new()) else {
                continue;
            };
            let code = canonical_code(&d);
            found.entry(code).or_insert_with(|| canonicalize_unchecked(&d).diagram);
        }
    }
    Ok(found.into_values().collect())
}

fn fill(
    pairs: &[(usize, usize)],
    k: usize,
    rem: &mut [usize],
    mult: &mut [usize],
    out: &mut Vec<Vec<usize>>,
) {
    if k == pairs.len() {
        if rem.iter().all(|&r| r == 0) {
            out.push(mult.to_vec());
        }
        return;
    }
    let (i, j) = pairs[k];
    let max = if i == j { rem[i] / 2 } else { rem[i].min(rem[j]) };
    for a in 0..=max {
        if i == j {
            rem[i] -= 2 * a;
        } else {
            rem[i] -= a;
            rem[j] -= a;
        }
        mult[k] = a;
        // the last pair touching i is (i, n-1)
        let closes_row = j == rem.len() - 1;
        if !closes_row || rem[i] == 0 {
            fill(pairs, k + 1, rem, mult, out);
        }
        if i == j {
            rem[i] += 2 * a;
        } else {
            rem[i] += a;
            rem[j] += a;
        }
    }
    mult[k] = 0;
}

/// One canonical representative per isomorphism class of monomially colored
/// diagrams with every exponent in `[-window, window]`.
///
/// Classes that vanish by AS (canonical sign 0) are included.
pub fn enumerate_diagrams(degree: usize, window: i64, opts: EnumerateOptions) -> Result<Vec<Diagram>> {
    if window < 0 {
        return Err(Error::Argument("window must be nonnegative".into()));
    }
    let shapes = enumerate_shapes(degree)?;
    let width = (2 * window + 1) as usize;
    let sets: Vec<BTreeSet<Diagram>> = shapes
        .par_iter()
        .filter(|s| !opts.chords_only || s.is_chord_diagram())
        .map(|shape| {
            let m = shape.edges().len();
            let total = width.pow(m as u32);
            (0..total)
                .into_par_iter()
                .filter_map(|mut idx| {
                    let mut colors = vec![0i64; m];
                    for c in colors.iter_mut() {
                        *c = (idx % width) as i64 - window;
                        idx /= width;
                    }
                    let d = shape.with_colors(&colors);
                    if opts.nh_only && !d.is_nh() {
                        return None;
                    }
                    Some(canonicalize_unchecked(&d).diagram)
                })
                .collect::<BTreeSet<_>>()
        })
        .collect();
    let mut all = BTreeSet::new();
    for s in sets {
        all.extend(s);
    }
    Ok(all.into_iter().collect())
}
