//! Rational generating functions of closed AL-paths.
//!
//! Classes are weighted by the period of their irreducible factor. With that
//! weighting the event-cycle part is `-t D'(t)/D(t)` for
//! `D = det(I - A(t))`, and bare loci contribute geometric series.

use std::collections::BTreeMap;

use serde::Serialize;

use super::orbits::{enumerate_closed_orbits, TransferGraph};
use super::{alexander_polynomial, FiberwiseMorseData};
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, RationalFn};
use crate::rational::{q, Q};

/// `e t^p / (1 - e t^p)`.
pub fn iterate_series(sign: i8, period: u64) -> RationalFn {
    let x = LaurentPoly::monomial(q(sign as i64), period as i64);
    RationalFn::new(x.clone(), &LaurentPoly::one() - &x).expect("nonzero denominator")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitSeries {
    pub sign: i8,
    pub period: u64,
    pub index: u8,
    pub iterate_series: RationalFn,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosedOrbitSeries {
    /// Order through which the series were checked against enumeration.
    pub checked_order: u64,
    /// Irreducible orbits of period at most `checked_order`.
    pub per_irreducible_orbit: BTreeMap<String, OrbitSeries>,
    pub boundary_series: RationalFn,
    pub self_loop_series: RationalFn,
    pub transfer_determinant: LaurentPoly,
}

struct ClosedForms {
    boundary: RationalFn,
    self_loop: RationalFn,
    det: LaurentPoly,
}

fn closed_forms(m: &FiberwiseMorseData) -> ClosedForms {
    let det = TransferGraph::new(m).determinant();
    let log_deriv =
        RationalFn::new(&LaurentPoly::t() * &det.derivative(), det.clone()).expect("det(I - A) has constant term 1");
    let mut boundary = log_deriv.clone();
    let mut self_loop = -&log_deriv;
    for l in &m.critical_loci {
        let s = iterate_series(l.sign, l.period as u64).scale(&q(l.period as i64));
        self_loop = &self_loop + &s;
        boundary = if l.index == 1 { &boundary - &s } else { &boundary + &s };
    }
    ClosedForms { boundary, self_loop, det }
}

fn compare(name: &str, f: &RationalFn, expected: &BTreeMap<i64, Q>, order: u64) -> Result<()> {
    let got = f.taylor(order as i64);
    if &got != expected {
        return Err(Error::Consistency(format!(
            "{name}: series coefficients {got:?} disagree with enumerated counts {expected:?} through t^{order}"
        )));
    }
    Ok(())
}

/// Closed forms for every series, checked coefficientwise against
/// [`enumerate_closed_orbits`] through `t^order`.
pub fn closed_orbit_series(m: &FiberwiseMorseData, order: u64) -> Result<ClosedOrbitSeries> {
    if order < 1 {
        return Err(Error::Argument("order must be at least 1".into()));
    }
    let forms = closed_forms(m);
    let orbits = enumerate_closed_orbits(m, order);

    let mut boundary = BTreeMap::new();
    let mut self_loop = BTreeMap::new();
    let mut per_orbit: BTreeMap<String, BTreeMap<i64, Q>> = BTreeMap::new();
    let mut per_irreducible = BTreeMap::new();
    for o in &orbits {
        let w = q(o.sign as i64 * o.irreducible_period as i64);
        let parity = if o.index == 1 { -1 } else { 1 };
        *boundary.entry(o.period as i64).or_insert_with(|| q(0)) += &w * q(parity);
        *self_loop.entry(o.period as i64).or_insert_with(|| q(0)) += &w;
        *per_orbit.entry(o.irreducible.clone()).or_default().entry(o.period as i64).or_insert_with(|| q(0)) +=
            q(o.sign as i64);
        if o.multiplicity == 1 {
            per_irreducible.insert(
                o.id.clone(),
                OrbitSeries {
                    sign: o.sign,
                    period: o.period,
                    index: o.index,
                    iterate_series: iterate_series(o.sign, o.period),
                },
            );
        }
    }
    for map in [&mut boundary, &mut self_loop] {
        map.retain(|_, c| *c != q(0));
    }
    compare("boundary series", &forms.boundary, &boundary, order)?;
    compare("self-loop series", &forms.self_loop, &self_loop, order)?;
    for (id, s) in &per_irreducible {
        compare(&format!("iterate series of {id}"), &s.iterate_series, &per_orbit[id], order)?;
    }
    Ok(ClosedOrbitSeries {
        checked_order: order,
        per_irreducible_orbit: per_irreducible,
        boundary_series: forms.boundary,
        self_loop_series: forms.self_loop,
        transfer_determinant: forms.det,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DenominatorReport {
    pub alexander: LaurentPoly,
    pub self_loop_series: RationalFn,
    /// `(1 - t)^2 Δ(t)` times the self-loop series.
    pub product: RationalFn,
    pub pass: bool,
}

pub fn check_denominator(m: &FiberwiseMorseData) -> Result<DenominatorReport> {
    let alexander = alexander_polynomial(m)?;
    let self_loop_series = closed_forms(m).self_loop;
    let bound = &LaurentPoly::from_coeffs(0, &[1, -2, 1]) * &alexander;
    let product = &RationalFn::from_poly(bound) * &self_loop_series;
    let pass = product.is_laurent();
    Ok(DenominatorReport { alexander, self_loop_series, product, pass })
}
