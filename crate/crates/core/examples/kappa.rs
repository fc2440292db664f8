use knotforge::surgery::{kappa_star, occupied_region_report, MultigradedDiagram};
use knotforge::theta::theta;

fn main() -> knotforge::Result<()> {
    let m = MultigradedDiagram::new(theta(0, 0), vec![vec![1, 0], vec![-1, 1], vec![2, -1]])?;
    for proj in [[1, 0], [0, 1], [1, 1]] {
        let d = kappa_star(&m, &proj)?;
        println!("kappa_* along {proj:?}: colors {:?}, nh {}", d.colors(), d.is_nh());
    }
    for r in occupied_region_report(3).iter().filter(|r| r.vanishes) {
        println!("degree {} with {} claspers ({} M-null): needs {} legs, has {}", r.degree, r.scheme_size, r.m_null, r.demand, r.supply);
    }
    Ok(())
}
