//! Run configurations, versioned JSON reports and the golden-file harness
//! behind the `knotforge` binary.

mod golden;
mod text;

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::diagram::json::{parse_diagram_json, short_name};
use crate::error::{Error, Result};
use crate::morse::{
    alexander_polynomial, check_denominator, closed_orbit_series, enumerate_closed_orbits, FiberwiseMorseData,
};
use crate::relations::quotient::{estimated_size, resource_cap};
use crate::relations::{build_quotient, stabilization_check, Conventions, Window};
use crate::surgery::{check_scheme_identities, psi, whitehead_example, z_of_surgery};
use crate::theta::{theta, verify_isomorphism_with, w_map};

pub use golden::{golden_check, GoldenCase, GoldenReport};
pub use text::render_text;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Command {
    Quotient {
        degree: usize,
        window: i64,
        #[serde(default)]
        nh_only: bool,
    },
    ThetaVerify {
        max: i64,
    },
    ThetaReduce {
        p: i64,
        q: i64,
    },
    MorseZeta {
        input: PathBuf,
        order: u64,
    },
    MorseAlexander {
        input: PathBuf,
    },
    MorseCheckDenominator {
        input: PathBuf,
    },
    SurgeryZ {
        input: PathBuf,
        n: usize,
    },
    SurgeryWhitehead,
    SchemeCheck {
        max_k: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Value")]
pub struct RunConfig {
    #[serde(flatten)]
    pub command: Command,
    #[serde(default)]
    pub conventions: Conventions,
    /// Worker threads; `None` uses the global pool. Not echoed in reports.
    #[serde(default, skip_serializing)]
    pub threads: Option<usize>,
}

// flatten and deny_unknown_fields do not combine, so split the map by hand.
impl TryFrom<Value> for RunConfig {
    type Error = serde_json::Error;

    fn try_from(v: Value) -> std::result::Result<Self, Self::Error> {
        use serde::de::Error as _;
        let Value::Object(mut map) = v else {
            return Err(serde_json::Error::custom("run configuration must be an object"));
        };
        let conventions = match map.remove("conventions") {
            Some(c) => serde_json::from_value(c)?,
            None => Conventions::default(),
        };
        let threads = match map.remove("threads") {
            Some(t) => serde_json::from_value(t)?,
            None => None,
        };
        let command = serde_json::from_value(Value::Object(map))?;
        Ok(Self { command, conventions, threads })
    }
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self { command, conventions: Conventions::default(), threads: None }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: Command,
    pub conventions: Conventions,
    pub pass: bool,
    pub result: Value,
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::Ingestion(format!("report, line {} column {}: {e}", e.line(), e.column())))
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn read(base: &Path, p: &Path) -> Result<String> {
    let path = base.join(p);
    std::fs::read_to_string(&path).map_err(|e| Error::Ingestion(format!("{}: {e}", path.display())))
}

fn load_morse(base: &Path, p: &Path) -> Result<FiberwiseMorseData> {
    FiberwiseMorseData::from_json(&read(base, p)?).map_err(|e| match e {
        Error::Ingestion(m) => Error::Ingestion(format!("{}: {m}", p.display())),
        other => other,
    })
}

/// Runs a configuration with input paths taken relative to the current directory.
pub fn run(config: &RunConfig) -> Result<Report> {
    run_in(config, Path::new("."))
}

/// Runs a configuration with input paths taken relative to `base`.
pub fn run_in(config: &RunConfig, base: &Path) -> Result<Report> {
    match config.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| Error::Resource(format!("thread pool: {e}")))?
            .install(|| dispatch(config, base)),
        None => dispatch(config, base),
    }
}

fn dispatch(config: &RunConfig, base: &Path) -> Result<Report> {
    let conv = config.conventions;
    let (pass, result) = match &config.command {
        Command::Quotient { degree, window, nh_only } => {
            let w = Window { degree: *degree, max_exponent: *window, nh_only: *nh_only };
            let qs = build_quotient(w, conv)?;
            let stab = if estimated_size(&w.widened(2))? <= resource_cap() {
                Some(stabilization_check(w, conv)?)
            } else {
                None
            };
            let basis: Vec<String> = qs.basis().into_iter().map(short_name).collect();
            (
                stab != Some(false),
                json!({
                    "degree": degree,
                    "max_exponent": window,
                    "nh_only": nh_only,
                    "column_count": qs.column_count(),
                    "relation_count": qs.relation_count(),
                    "rank": qs.rank(),
                    "dimension": qs.dimension(),
                    "basis": basis,
                    "stabilization_check": stab,
                }),
            )
        }
        Command::ThetaVerify { max } => {
            let r = verify_isomorphism_with(*max, conv)?;
            (r.pass, to_value(&r))
        }
        Command::ThetaReduce { p, q } => {
            let k = p.abs().max(q.abs()).max((p + q).abs()) + 2;
            let qs = build_quotient(Window::nh(1, k), conv)?;
            let nf = qs.reduce_diagram(&theta(*p, *q))?;
            let target = qs.reduce_diagram(&theta(0, p + q))?;
            let w = w_map(&nf)?;
            (
                nf == target,
                json!({
                    "window": k,
                    "normal_form": nf,
                    "normal_form_text": nf.to_string(),
                    "w": w,
                    "w_text": w.to_string(),
                    "equals": format!("Θ(0,{})", p + q),
                }),
            )
        }
        Command::MorseZeta { input, order } => {
            let m = load_morse(base, input)?;
            let s = closed_orbit_series(&m, *order)?;
            let count = enumerate_closed_orbits(&m, *order).len();
            (
                true,
                json!({
                    "boundary_series_text": s.boundary_series.to_string(),
                    "self_loop_series_text": s.self_loop_series.to_string(),
                    "orbit_count": count,
                    "series": s,
                }),
            )
        }
        Command::MorseAlexander { input } => {
            let d = alexander_polynomial(&load_morse(base, input)?)?;
            (true, json!({ "alexander": d, "alexander_text": d.to_string() }))
        }
        Command::MorseCheckDenominator { input } => {
            let r = check_denominator(&load_morse(base, input)?)?;
            (r.pass, json!({ "product_text": r.product.to_string(), "report": r }))
        }
        Command::SurgeryZ { input, n } => {
            let d = parse_diagram_json(&read(base, input)?)?
                .as_monomial()
                .ok_or_else(|| Error::Argument("surgery z needs a monomial diagram".into()))?;
            let presentation = psi(&crate::diagram::ColoredDiagram::from_monomial(&d))?;
            let qs = build_quotient(Window::nh(*n, d.max_abs_exponent().max(2)), conv)?;
            let z = z_of_surgery(&d, *n, &qs)?;
            (true, json!({ "presentation": presentation, "class_text": z.class.to_string(), "value": z }))
        }
        Command::SurgeryWhitehead => {
            let r = whitehead_example()?;
            let coeff = r.w_image.representative().coeff(1);
            let named = format!("{}·Θ(0,1)", crate::rational::pretty_q(&coeff));
            (true, json!({ "z1_whitehead": named, "w_text": r.w_image.to_string(), "report": r }))
        }
        Command::SchemeCheck { max_k } => {
            let r = check_scheme_identities(*max_k)?;
            (r.pass, to_value(&r))
        }
    };
    Ok(Report { schema_version: SCHEMA_VERSION, command: config.command.clone(), conventions: conv, pass, result })
}
