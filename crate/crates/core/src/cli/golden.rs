use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{run_in, RunConfig, SCHEMA_VERSION};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenCase {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diff: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenReport {
    pub schema_version: u32,
    pub cases: Vec<GoldenCase>,
    pub warnings: Vec<String>,
    pub pass: bool,
}

fn first_difference(expected: &str, actual: &str) -> String {
    for (i, (a, b)) in expected.lines().zip(actual.lines()).enumerate() {
        if a != b {
            return format!("line {}: expected {a:?}, got {b:?}", i + 1);
        }
    }
    format!("length differs: expected {} lines, got {}", expected.lines().count(), actual.lines().count())
}

/// Regenerates every case under `suite` and compares byte for byte.
///
/// A case is a directory holding `case.json` (a [`RunConfig`]) and
/// `expected.json`; inputs named in the config are relative to the case
/// directory. With `update`, expected files are rewritten instead.
pub fn golden_check(suite: &Path, threads: Option<usize>, update: bool) -> Result<GoldenReport> {
    let entries = std::fs::read_dir(suite).map_err(|e| Error::Ingestion(format!("{}: {e}", suite.display())))?;
    let mut dirs: Vec<_> = entries
        .filter_map(|e| e.ok())
        .map(|e| e.path())
        .filter(|p| p.join("case.json").is_file())
        .collect();
    dirs.sort();

    let mut cases = Vec::new();
    for dir in &dirs {
        let name = dir.file_name().unwrap().to_string_lossy().into_owned();
        let text = std::fs::read_to_string(dir.join("case.json"))
            .map_err(|e| Error::Ingestion(format!("{name}/case.json: {e}")))?;
        let mut config: RunConfig = serde_json::from_str(&text).map_err(|e| {
            Error::Ingestion(format!("{name}/case.json, line {} column {}: {e}", e.line(), e.column()))
        })?;
        config.threads = threads;
        let actual = match run_in(&config, dir) {
            Ok(r) => r.to_json(),
            Err(e) => {
                cases.push(GoldenCase { name, pass: false, diff: Some(e.to_string()) });
                continue;
            }
        };
        let expected_path = dir.join("expected.json");
        if update {
            std::fs::write(&expected_path, &actual)
                .map_err(|e| Error::Ingestion(format!("{}: {e}", expected_path.display())))?;
            cases.push(GoldenCase { name, pass: true, diff: None });
            continue;
        }
        let case = match std::fs::read_to_string(&expected_path) {
            Ok(expected) if expected == actual => GoldenCase { name, pass: true, diff: None },
            Ok(expected) => GoldenCase { name, pass: false, diff: Some(first_difference(&expected, &actual)) },
            Err(_) => GoldenCase { name, pass: false, diff: Some("missing expected.json".into()) },
        };
        cases.push(case);
    }
    let mut warnings = Vec::new();
    if cases.is_empty() {
        warnings.push(format!("no cases under {}", suite.display()));
    }
    let pass = cases.iter().all(|c| c.pass);
    Ok(GoldenReport { schema_version: SCHEMA_VERSION, cases, warnings, pass })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_suite_passes_with_warning() {
        let dir = tempfile::tempdir().unwrap();
        let r = golden_check(dir.path(), None, false).unwrap();
        assert!(r.pass);
        assert_eq!(r.warnings.len(), 1);
    }

    #[test]
    fn corrupted_case_is_ingestion_error() {
        let dir = tempfile::tempdir().unwrap();
        let case = dir.path().join("bad");
        std::fs::create_dir(&case).unwrap();
        std::fs::write(case.join("case.json"), "{\"command\": \"theta-verify\",\n \"max\": }").unwrap();
        assert!(matches!(golden_check(dir.path(), None, false), Err(Error::Ingestion(_))));
    }

    #[test]
    fn update_then_check() {
        let dir = tempfile::tempdir().unwrap();
        let case = dir.path().join("scheme");
        std::fs::create_dir(&case).unwrap();
        std::fs::write(case.join("case.json"), r#"{"command": "scheme-check", "max_k": 3}"#).unwrap();
        let r = golden_check(dir.path(), None, false).unwrap();
        assert!(!r.pass);
        assert!(golden_check(dir.path(), None, true).unwrap().pass);
        assert!(golden_check(dir.path(), Some(2), false).unwrap().pass);
        let expected = case.join("expected.json");
        let text = std::fs::read_to_string(&expected).unwrap().replace("\"pass\": true", "\"pass\": false");
        std::fs::write(&expected, text).unwrap();
        let r = golden_check(dir.path(), None, false).unwrap();
        assert!(!r.pass);
        assert!(r.cases[0].diff.as_deref().unwrap().starts_with("line "));
    }
}
