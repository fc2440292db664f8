//! Clasper presentations of chord diagrams and the degree-1 Whitehead double.

use knotforge::diagram::ColoredDiagram;
use knotforge::relations::{build_quotient, Conventions, Window};
use knotforge::surgery::{psi, whitehead_example, z_of_surgery};
use knotforge::theta::theta;

fn main() -> knotforge::Result<()> {
    let d = theta(0, 1);
    let p = psi(&ColoredDiagram::from_monomial(&d))?;
    println!("psi(Θ(0,1)): {} clasper(s), degree {}", p.scheme.size(), p.scheme.degree());

    let qs = build_quotient(Window::nh(1, 3), Conventions::default())?;
    let z = z_of_surgery(&d, 1, &qs)?;
    println!(
        "{} labelings x {} automorphisms = {}; Z_1 = {} [Θ(0,1)] = {}",
        z.labelings.orbits, z.labelings.automorphisms, z.labelings.group_order, z.scalar, z.class
    );

    let w = whitehead_example()?;
    println!("Z_1(Whitehead double) = {}", w.result);
    println!("W = {}", w.w_image);
    Ok(())
}
