//! Combinatorial fiberwise Morse data on a mapping torus, closed AL-paths and
//! their generating functions.

mod assemble;
pub mod fixtures;
mod linalg;
mod orbits;
mod series;

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::rational::{self, Q};

pub use assemble::{assemble_f, edge_series_for, AssembledF, EdgeFactor};
pub use linalg::{char_poly, det_poly};
pub use orbits::{enumerate_closed_orbits, ClosedALPath, OrbitKind, Segment, TransferEdge, TransferGraph};
pub use series::{
    check_denominator, closed_orbit_series, iterate_series, ClosedOrbitSeries, DenominatorReport, OrbitSeries,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CriticalLocus {
    pub id: u32,
    pub index: u8,
    /// Base-circle revolutions before the locus closes up.
    pub period: u32,
    pub sign: i8,
}

/// A 1/1-intersection between index-1 loci. `from_sheet` and `to_sheet`
/// pick the sheet of a locus with period above one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OneOneEvent {
    pub from: u32,
    pub to: u32,
    #[serde(with = "rational::as_string")]
    pub base_angle: Q,
    pub sign: i8,
    #[serde(default, skip_serializing_if = "is_zero_u32")]
    pub from_sheet: u32,
    #[serde(default, skip_serializing_if = "is_zero_u32")]
    pub to_sheet: u32,
}

fn is_zero_u32(x: &u32) -> bool {
    *x == 0
}

fn zero_q() -> Q {
    Q::zero()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FiberwiseMorseData {
    pub fiber_genus: u32,
    pub critical_loci: Vec<CriticalLocus>,
    #[serde(default)]
    pub one_one_events: Vec<OneOneEvent>,
    #[serde(default)]
    pub monodromy: Vec<Vec<i64>>,
    #[serde(default = "zero_q", with = "rational::as_string")]
    pub base_fiber_angle: Q,
}

impl FiberwiseMorseData {
    /// Parses and validates the JSON form.
    pub fn from_json(text: &str) -> Result<Self> {
        let m: Self = serde_json::from_str(text).map_err(|e| {
            Error::Ingestion(format!("morse data, line {} column {}: {e}", e.line(), e.column()))
        })?;
        m.validate()?;
        Ok(m)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn locus(&self, id: u32) -> Option<&CriticalLocus> {
        self.critical_loci.iter().find(|l| l.id == id)
    }

    /// Critical points of each index on one fiber.
    pub fn fiber_counts(&self) -> [u64; 3] {
        let mut c = [0u64; 3];
        for l in &self.critical_loci {
            if let Some(x) = c.get_mut(l.index as usize) {
                *x += l.period as u64;
            }
        }
        c
    }

    pub fn validate(&self) -> Result<()> {
        let mut ids = BTreeSet::new();
        for l in &self.critical_loci {
            if !ids.insert(l.id) {
                return Err(Error::Ingestion(format!("duplicate locus id {}", l.id)));
            }
            if l.index > 2 {
                return Err(Error::Ingestion(format!("locus {} has index {}", l.id, l.index)));
            }
            if l.period == 0 {
                return Err(Error::Ingestion(format!("locus {} has period 0", l.id)));
            }
            check_sign(l.sign, &format!("locus {}", l.id))?;
        }
        let [c0, c1, c2] = self.fiber_counts();
        let chi = 2 - 2 * self.fiber_genus as i64;
        if c0 as i64 - c1 as i64 + c2 as i64 != chi {
            return Err(Error::InvariantViolation(format!(
                "critical counts {c0} - {c1} + {c2} differ from Euler characteristic {chi}"
            )));
        }

        if self.base_fiber_angle.is_negative() || self.base_fiber_angle >= Q::one() {
            return Err(Error::Ingestion("base_fiber_angle must lie in [0,1)".into()));
        }
        let mut angles = BTreeMap::new();
        for (i, e) in self.one_one_events.iter().enumerate() {
            check_sign(e.sign, &format!("event {i}"))?;
            for (id, sheet) in [(e.from, e.from_sheet), (e.to, e.to_sheet)] {
                let l = self
                    .locus(id)
                    .ok_or_else(|| Error::Ingestion(format!("event {i} refers to unknown locus {id}")))?;
                if l.index != 1 {
                    return Err(Error::Ingestion(format!("event {i} touches locus {id} of index {}", l.index)));
                }
                if sheet >= l.period {
                    return Err(Error::Ingestion(format!("event {i} uses sheet {sheet} of locus {id}")));
                }
            }
            if e.base_angle.is_negative() || e.base_angle >= Q::one() {
                return Err(Error::Ingestion(format!("event {i} has base angle outside [0,1)")));
            }
            if e.base_angle == self.base_fiber_angle {
                return Err(Error::InvariantViolation(format!("event {i} lies on the reference fiber")));
            }
            if let Some(j) = angles.insert(e.base_angle.clone(), i) {
                return Err(Error::Ingestion(format!(
                    "events {j} and {i} share base angle {}",
                    rational::format_q(&e.base_angle)
                )));
            }
        }

        let n = 2 * self.fiber_genus as usize;
        if self.monodromy.len() != n || self.monodromy.iter().any(|r| r.len() != n) {
            return Err(Error::Ingestion(format!("monodromy must be {n}x{n}")));
        }
        let det = linalg::int_det(&self.monodromy);
        if det.abs() != 1 {
            return Err(Error::InvariantViolation(format!("monodromy has determinant {det}")));
        }
        Ok(())
    }
}

fn check_sign(s: i8, what: &str) -> Result<()> {
    if s == 1 || s == -1 {
        Ok(())
    } else {
        Err(Error::Ingestion(format!("{what} has sign {s}")))
    }
}

/// `det(tI - M)` with lowest exponent 0 and positive lowest coefficient.
pub fn alexander_polynomial(m: &FiberwiseMorseData) -> Result<LaurentPoly> {
    let n = m.monodromy.len();
    if m.monodromy.iter().any(|r| r.len() != n) {
        return Err(Error::Argument("monodromy is not square".into()));
    }
    if linalg::int_det(&m.monodromy) == 0 {
        return Err(Error::InvariantViolation("singular monodromy".into()));
    }
    let p = char_poly(&m.monodromy)?;
    Ok(normalize_low(&p))
}

fn normalize_low(p: &LaurentPoly) -> LaurentPoly {
    let p = p.strip_t_power();
    let negative = p.terms().next().is_some_and(|(_, c)| c.is_negative());
    if negative {
        p.scale(&-Q::one())
    } else {
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alexander_examples() {
        assert!(alexander_polynomial(&fixtures::s2_times_s1()).unwrap().is_one());
        assert_eq!(alexander_polynomial(&fixtures::torus_identity()).unwrap(), LaurentPoly::from_coeffs(0, &[1, -2, 1]));
        assert_eq!(alexander_polynomial(&fixtures::genus_one_anosov()).unwrap(), LaurentPoly::from_coeffs(0, &[1, -3, 1]));
    }

    #[test]
    fn json_round_trip() {
        for m in fixtures::all() {
            let back = FiberwiseMorseData::from_json(&m.to_json()).unwrap();
            assert_eq!(back, m);
        }
    }

    #[test]
    fn rejects_bad_data() {
        let mut m = fixtures::s2_times_s1();
        m.critical_loci.pop();
        assert!(matches!(m.validate(), Err(Error::InvariantViolation(_))));

        let mut m = fixtures::genus_one_anosov();
        m.monodromy = vec![vec![2, 0], vec![0, 1]];
        assert!(matches!(m.validate(), Err(Error::InvariantViolation(_))));
        m.monodromy = vec![vec![0, 0], vec![0, 1]];
        assert!(matches!(alexander_polynomial(&m), Err(Error::InvariantViolation(_))));

        let mut m = fixtures::genus_one_anosov();
        m.one_one_events[1].base_angle = m.one_one_events[0].base_angle.clone();
        assert!(matches!(m.validate(), Err(Error::Ingestion(_))));

        let mut m = fixtures::genus_one_anosov();
        m.one_one_events[0].base_angle = Q::zero();
        assert!(matches!(m.validate(), Err(Error::InvariantViolation(_))));

        let mut m = fixtures::genus_one_anosov();
        m.one_one_events[0].to = 0;
        assert!(matches!(m.validate(), Err(Error::Ingestion(_))));

        assert!(matches!(FiberwiseMorseData::from_json("{\"fiber_genus\": 0}"), Err(Error::Ingestion(_))));
    }
}
