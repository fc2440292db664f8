//! Building, canonicalizing and enumerating colored diagrams.

use knotforge::diagram::json::{short_name, DiagramJson};
use knotforge::diagram::{automorphism_group_order, canonicalize, connected_sum, enumerate_diagrams, enumerate_shapes, EnumerateOptions};
use knotforge::theta::{omega, theta};

fn main() -> knotforge::Result<()> {
    let th = theta(1, -1);
    let c = canonicalize(&th)?;
    println!("Θ(1,-1) -> {} (sign {})", short_name(&c.diagram), c.sign);
    println!("|Aut Θ(0,0)| = {}", automorphism_group_order(&theta(0, 0))?);

    for degree in 1..=2 {
        println!("degree {degree}: {} shapes", enumerate_shapes(degree)?.len());
    }
    let nh = enumerate_diagrams(1, 2, EnumerateOptions { nh_only: true, chords_only: false })?;
    println!("nullhomologous degree-1 diagrams with |exponent| <= 2: {}", nh.len());

    let sum = connected_sum(&omega(0), &theta(0, 1), None)?;
    println!("Ω(0) # Θ(0,1) has degree {}", sum.degree());

    let json = serde_json::to_string_pretty(&DiagramJson::from_diagram(&theta(0, 1))).unwrap();
    println!("{json}");
    Ok(())
}
