use serde::Serialize;

use crate::diagram::Diagram;
use crate::error::{Error, Result};

/// A diagram whose edges carry exponent vectors in `Z^r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultigradedDiagram {
    pub shape: Diagram,
    pub exponents: Vec<Vec<i64>>,
}

impl MultigradedDiagram {
    pub fn new(shape: Diagram, exponents: Vec<Vec<i64>>) -> Result<Self> {
        if exponents.len() != shape.edges().len() {
            return Err(Error::Argument(format!(
                "{} exponent vectors for {} edges",
                exponents.len(),
                shape.edges().len()
            )));
        }
        let r = exponents.first().map_or(0, |v| v.len());
        if exponents.iter().any(|v| v.len() != r) {
            return Err(Error::Argument("exponent vectors of different lengths".into()));
        }
        Ok(Self { shape, exponents })
    }

    pub fn rank(&self) -> usize {
        self.exponents.first().map_or(0, |v| v.len())
    }
}

/// Sends each exponent vector `v` to `t^<projection, v>`.
pub fn kappa_star(d: &MultigradedDiagram, projection: &[i64]) -> Result<Diagram> {
    if projection.len() != d.rank() {
        return Err(Error::Argument(format!("projection of length {} for rank {}", projection.len(), d.rank())));
    }
    let colors: Vec<i64> = d.exponents.iter().map(|v| v.iter().zip(projection).map(|(a, b)| a * b).sum()).collect();
    Ok(d.shape.with_colors(&colors))
}

/// One row of the counting argument: every strict clasper region needs two
/// univalent vertices on its strands and an M-null one needs at least one,
/// while a degree-n diagram has at most `2n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OccupancyRow {
    pub degree: usize,
    pub scheme_size: usize,
    pub m_null: usize,
    pub demand: usize,
    pub supply: usize,
    pub vanishes: bool,
}

pub fn occupied_region_report(max_degree: usize) -> Vec<OccupancyRow> {
    let mut rows = Vec::new();
    for degree in 1..=max_degree {
        for scheme_size in 1..=degree + 2 {
            for m_null in 0..=1 {
                let demand = 2 * (scheme_size - m_null) + m_null;
                let supply = 2 * degree;
                rows.push(OccupancyRow { degree, scheme_size, m_null, demand, supply, vanishes: demand > supply });
            }
        }
    }
    rows
}
