//! Forest schemes `[K; G_1, ..., G_k]` as formal sums of surgery symbols.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClasperTag {
    Strict,
    MNull,
}

/// A clasper is a set of atomic surgery names; a forest split into parts
/// `S` and `T` is the clasper `{S, T}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Clasper {
    pub parts: BTreeSet<String>,
    pub tag: ClasperTag,
    pub degree: u32,
}

impl Clasper {
    pub fn new(name: &str, tag: ClasperTag, degree: u32) -> Self {
        Self { parts: BTreeSet::from([name.to_string()]), tag, degree }
    }

    pub fn name(&self) -> String {
        self.parts.iter().cloned().collect::<Vec<_>>().join("")
    }
}

/// `K^{A}`: the base knot after surgery on every atomic clasper in `A`.
/// Surgery on a symbol unions the sets, so `(K^S)^T = K^{ST}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SurgerySymbol {
    pub base: String,
    pub applied: BTreeSet<String>,
}

impl SurgerySymbol {
    pub fn knot(base: &str) -> Self {
        Self { base: base.to_string(), applied: BTreeSet::new() }
    }

    pub fn surgery<'a>(&self, parts: impl IntoIterator<Item = &'a String>) -> Self {
        let mut applied = self.applied.clone();
        applied.extend(parts.into_iter().cloned());
        Self { base: self.base.clone(), applied }
    }
}

impl fmt::Display for SurgerySymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.applied.is_empty() {
            write!(f, "{}", self.base)
        } else {
            write!(f, "{}^{{{}}}", self.base, self.applied.iter().cloned().collect::<Vec<_>>().join(""))
        }
    }
}

/// Integer combination of surgery symbols.
pub type FormalSum = BTreeMap<SurgerySymbol, i64>;

fn add_into(acc: &mut FormalSum, other: &FormalSum, sign: i64) {
    for (s, c) in other {
        let slot = acc.entry(s.clone()).or_insert(0);
        *slot += sign * c;
        if *slot == 0 {
            acc.remove(s);
        }
    }
}

/// `sum over I of (-1)^(k - |I|) base^{G_I}`.
pub fn bracket(base: &SurgerySymbol, claspers: &[Clasper]) -> FormalSum {
    let k = claspers.len();
    let mut out = FormalSum::new();
    for mask in 0u32..(1 << k) {
        let chosen = claspers.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1);
        let sym = base.surgery(chosen.flat_map(|(_, c)| c.parts.iter()));
        let sign = if (k - mask.count_ones() as usize).is_multiple_of(2) { 1 } else { -1 };
        add_into(&mut out, &FormalSum::from([(sym, sign)]), 1);
    }
    out
}

pub fn format_sum(s: &FormalSum) -> BTreeMap<String, i64> {
    s.iter().map(|(k, v)| (k.to_string(), *v)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestScheme {
    pub base: String,
    pub claspers: Vec<Clasper>,
    pub expansion: FormalSum,
}

impl ForestScheme {
    pub fn new(base: &str, claspers: Vec<Clasper>) -> Result<Self> {
        if claspers.is_empty() {
            return Err(Error::Argument("a forest scheme needs at least one clasper".into()));
        }
        if claspers.iter().filter(|c| c.tag == ClasperTag::MNull).count() > 1 {
            return Err(Error::Constraint("at most one clasper may be M-null".into()));
        }
        if claspers.iter().any(|c| c.degree == 0) {
            return Err(Error::Argument("clasper degrees start at 1".into()));
        }
        let expansion = bracket(&SurgerySymbol::knot(base), &claspers);
        Ok(Self { base: base.to_string(), claspers, expansion })
    }

    pub fn size(&self) -> usize {
        self.claspers.len()
    }

    pub fn degree(&self) -> u32 {
        self.claspers.iter().map(|c| c.degree).sum()
    }
}

impl Serialize for ForestScheme {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            base: &'a str,
            claspers: &'a [Clasper],
            degree: u32,
            expansion: BTreeMap<String, i64>,
        }
        Repr { base: &self.base, claspers: &self.claspers, degree: self.degree(), expansion: format_sum(&self.expansion) }
            .serialize(s)
    }
}

/// `[K; G_1, ..., G_k]` with degree-one claspers `G1..Gk`.
pub fn expand_forest_scheme(tags: &[ClasperTag]) -> Result<ForestScheme> {
    let claspers = tags.iter().enumerate().map(|(i, &t)| Clasper::new(&format!("G{}", i + 1), t, 1)).collect();
    ForestScheme::new("K", claspers)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub k: usize,
    pub identity: String,
    pub terms: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SchemeReport {
    pub max_k: usize,
    pub checks: Vec<IdentityCheck>,
    pub pass: bool,
}

/// Checks, for every size up to `max_k`:
/// `[K; G1..Gk] = [K^G1; G2..Gk] - [K; G2..Gk]` and
/// `[K; S∪T, G2..Gk] = [K; S, G2..Gk] + [K^S; T, G2..Gk]`.
pub fn check_scheme_identities(max_k: usize) -> Result<SchemeReport> {
    if !(1..=6).contains(&max_k) {
        return Err(Error::Argument(format!("max_k must be in 1..=6, got {max_k}")));
    }
    let k_sym = SurgerySymbol::knot("K");
    let mut checks = Vec::new();
    for k in 1..=max_k {
        let gs: Vec<Clasper> = (1..=k).map(|i| Clasper::new(&format!("G{i}"), ClasperTag::Strict, 1)).collect();
        let lhs = bracket(&k_sym, &gs);
        let mut rhs = bracket(&k_sym.surgery(&gs[0].parts), &gs[1..]);
        add_into(&mut rhs, &bracket(&k_sym, &gs[1..]), -1);
        checks.push(IdentityCheck { k, identity: "peel".into(), terms: lhs.len(), pass: lhs == rhs });

        let s = Clasper::new("S", ClasperTag::Strict, 1);
        let t = Clasper::new("T", ClasperTag::Strict, 1);
        let st = Clasper { parts: s.parts.union(&t.parts).cloned().collect(), tag: ClasperTag::Strict, degree: 2 };
        let rest = &gs[1..];
        let lhs = bracket(&k_sym, &[vec![st], rest.to_vec()].concat());
        let mut rhs = bracket(&k_sym, &[vec![s.clone()], rest.to_vec()].concat());
        add_into(&mut rhs, &bracket(&k_sym.surgery(&s.parts), &[vec![t], rest.to_vec()].concat()), 1);
        checks.push(IdentityCheck { k, identity: "split".into(), terms: lhs.len(), pass: lhs == rhs });
    }
    let pass = checks.iter().all(|c| c.pass);
    Ok(SchemeReport { max_k, checks, pass })
}
