use knotforge::surgery::{check_scheme_identities, expand_forest_scheme, format_sum, ClasperTag};

fn main() -> knotforge::Result<()> {
    let s = expand_forest_scheme(&[ClasperTag::Strict, ClasperTag::MNull])?;
    for (sym, c) in format_sum(&s.expansion) {
        println!("{c:+} {sym}");
    }
    if let Err(e) = expand_forest_scheme(&[ClasperTag::MNull, ClasperTag::MNull]) {
        println!("two M-null claspers: {e}");
    }
    let r = check_scheme_identities(6)?;
    for c in &r.checks {
        println!("k={} {:<5} {:>3} terms  {}", c.k, c.identity, c.terms, c.pass);
    }
    Ok(())
}
