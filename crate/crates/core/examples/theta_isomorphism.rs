use knotforge::theta::{l_map, theta, verify_isomorphism, w_map, PolyModConstants};
use knotforge::diagram::DiagramVector;
use knotforge::laurent::LaurentPoly;

fn main() -> knotforge::Result<()> {
    let v = DiagramVector::from_diagram(&theta(2, 1))?;
    let w = w_map(&v)?;
    println!("W(Θ(2,1)) = {w}");
    let f = PolyModConstants::new(LaurentPoly::from_coeffs(1, &[3, 0, 1]))?;
    println!("L({f}) = {}", l_map(&f));

    let r = verify_isomorphism(3)?;
    for c in &r.checks {
        println!("{:<16} {:<5} {}", c.name, c.pass, c.detail);
    }
    Ok(())
}
