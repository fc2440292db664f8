//! Closed AL-paths of the fixture fibrations and their generating series.

use knotforge::morse::{closed_orbit_series, enumerate_closed_orbits, fixtures, TransferGraph};

fn main() -> knotforge::Result<()> {
    let m = fixtures::genus_one_anosov();
    let g = TransferGraph::new(&m);
    println!("transfer graph: {} events, det(I - A) = {}", g.node_count, g.determinant());
    for o in enumerate_closed_orbits(&m, 2) {
        println!("  {:<8} period {} sign {:+} irreducible {}", o.id, o.period, o.sign, o.irreducible);
    }
    for (name, m) in [("S2 x S1", fixtures::s2_times_s1()), ("anosov", m), ("twisted", fixtures::genus_one_twisted())] {
        let s = closed_orbit_series(&m, 10)?;
        println!("{name}: boundary {} | self-loop {}", s.boundary_series, s.self_loop_series);
        println!("  t^1..t^10: {:?}", s.self_loop_series.taylor(10).values().map(|c| c.to_string()).collect::<Vec<_>>());
    }
    Ok(())
}
