//! The truncated quotient by AS, IHX, STU, FI, Holonomy and Linearity.

use knotforge::diagram::json::short_name;
use knotforge::relations::{build_quotient, stabilization_check, Conventions, SignConvention, Window};
use knotforge::theta::{omega, theta};

fn main() -> knotforge::Result<()> {
    let w = Window::nh(1, 3);
    let qs = build_quotient(w, Conventions::default())?;
    println!("{} columns, {} relations, rank {}, dimension {}", qs.column_count(), qs.relation_count(), qs.rank(), qs.dimension());
    for d in qs.basis() {
        println!("  basis: {}", short_name(d));
    }
    for p in -2..=2 {
        println!("Ω({p}) -> {}", qs.reduce_diagram(&omega(p))?);
    }
    println!("Θ(2,-1) -> {}", qs.reduce_diagram(&theta(2, -1))?);
    println!("stable between K=3 and K=5: {}", stabilization_check(w, Conventions::default())?);

    let b = Conventions { ihx: SignConvention::B, stu: SignConvention::B };
    println!("dimension with convention B: {}", build_quotient(w, b)?.dimension());
    Ok(())
}
