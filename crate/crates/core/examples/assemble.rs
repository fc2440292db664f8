//! Putting closed-orbit series on the edges of a shape and tracing.

use std::collections::BTreeMap;

use knotforge::diagram::EdgeKind;
use knotforge::laurent::RationalFn;
use knotforge::morse::{alexander_polynomial, assemble_f, closed_orbit_series, edge_series_for, fixtures};
use knotforge::relations::{build_quotient, Conventions, Window};
use knotforge::theta::omega;

fn main() -> knotforge::Result<()> {
    let m = fixtures::s2_times_s1();
    let series = closed_orbit_series(&m, 6)?;
    let shape = omega(0);
    let leg = shape.edges().iter().position(|e| e.kind == EdgeKind::Internal).unwrap();
    let edges = edge_series_for(&shape, &series, &BTreeMap::from([(leg, RationalFn::one())]))?;
    let f = assemble_f(&shape, &edges, &alexander_polynomial(&m)?)?;
    for x in &f.factors {
        println!("edge {} ({}): {}", x.edge, x.variable, x.series);
    }
    println!("denominator {}", f.traced.denominator);
    println!("numerator {}", f.traced.numerator);
    let qs = build_quotient(Window::nh(1, 2), Conventions::default())?;
    println!("reduced numerator {}", f.traced.reduced(&qs)?.numerator);
    Ok(())
}
