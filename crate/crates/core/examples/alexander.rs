use knotforge::morse::{alexander_polynomial, check_denominator, fixtures, FiberwiseMorseData};

fn main() -> knotforge::Result<()> {
    for m in fixtures::all() {
        let r = check_denominator(&m)?;
        println!("genus {} Δ = {:<14} (1-t)^2 Δ · selfLoop = {}  laurent: {}", m.fiber_genus, r.alexander.to_string(), r.product, r.pass);
    }

    let text = fixtures::genus_one_anosov().to_json();
    let back = FiberwiseMorseData::from_json(&text)?;
    println!("round trip Δ = {}", alexander_polynomial(&back)?);

    let broken = text.replace("\"fiber_genus\": 1", "\"fiber_genus\": 2");
    match FiberwiseMorseData::from_json(&broken) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
