//! Run configurations as JSON, versioned reports, and a golden suite.

use knotforge::cli::{golden_check, render_text, run, Command, RunConfig};

fn main() -> knotforge::Result<()> {
    let config = RunConfig::new(Command::ThetaReduce { p: 2, q: -3 });
    let json = serde_json::to_string(&config).unwrap();
    println!("config: {json}");
    let report = run(&config)?;
    print!("{}", render_text(&report));

    let suite = std::env::temp_dir().join(format!("knotforge-golden-{}", std::process::id()));
    let case = suite.join("scheme");
    std::fs::create_dir_all(&case).unwrap();
    std::fs::write(case.join("case.json"), r#"{"command": "scheme-check", "max_k": 3}"#).unwrap();
    golden_check(&suite, None, true)?;
    let r = golden_check(&suite, Some(2), false)?;
    println!("golden suite at 2 threads: pass {}", r.pass);
    std::fs::remove_dir_all(&suite).unwrap();
    Ok(())
}
