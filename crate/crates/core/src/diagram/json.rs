//! JSON form of diagrams: `degree`, `wilson_cycle`, `edges` and
//! `vertex_orientations`, with colors as `{exponent: "p/q"}` maps.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{ColoredDiagram, Diagram, Edge, EdgeKind, HalfEdge};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum KindJson {
    #[serde(rename = "W")]
    Wilson,
    #[serde(rename = "I")]
    Internal,
    #[serde(rename = "rho")]
    SelfLoop,
}

impl From<EdgeKind> for KindJson {
    fn from(k: EdgeKind) -> Self {
        match k {
            EdgeKind::Wilson => KindJson::Wilson,
            EdgeKind::Internal => KindJson::Internal,
            EdgeKind::SelfLoop => KindJson::SelfLoop,
        }
    }
}

impl From<KindJson> for EdgeKind {
    fn from(k: KindJson) -> Self {
        match k {
            KindJson::Wilson => EdgeKind::Wilson,
            KindJson::Internal => EdgeKind::Internal,
            KindJson::SelfLoop => EdgeKind::SelfLoop,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeJson {
    pub from: usize,
    pub to: usize,
    pub kind: KindJson,
    pub color: LaurentPoly,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramJson {
    pub degree: usize,
    pub wilson_cycle: Vec<usize>,
    pub edges: Vec<EdgeJson>,
    /// Half-edge ids are `2 * edge + 0` for the tail and `2 * edge + 1` for the head.
    pub vertex_orientations: BTreeMap<usize, [usize; 3]>,
}

impl DiagramJson {
    pub fn from_diagram(d: &Diagram) -> Self {
        Self::from_colored(&ColoredDiagram::from_monomial(d))
    }

    pub fn from_colored(c: &ColoredDiagram) -> Self {
        let d = c.shape();
        Self {
            degree: d.degree(),
            wilson_cycle: d.wilson().to_vec(),
            edges: d
                .edges()
                .iter()
                .zip(c.colors())
                .map(|(e, col)| EdgeJson { from: e.tail, to: e.head, kind: e.kind.into(), color: col.clone() })
                .collect(),
            vertex_orientations: d
                .orientations()
                .iter()
                .map(|(&v, o)| (v, o.map(HalfEdge::id)))
                .collect(),
        }
    }

    pub fn to_colored(&self) -> Result<ColoredDiagram> {
        let edges: Vec<Edge> =
            self.edges.iter().map(|e| Edge::new(e.from, e.to, e.kind.into(), 0)).collect();
        let mut orientations = BTreeMap::new();
        for (&v, ids) in &self.vertex_orientations {
            if ids.iter().any(|&h| h / 2 >= edges.len()) {
                return Err(Error::Structural(format!("orientation at {v} names a missing edge")));
            }
            orientations.insert(v, ids.map(HalfEdge::from_id));
        }
        let shape = Diagram::new(2 * self.degree, self.wilson_cycle.clone(), edges, orientations)?;
        ColoredDiagram::new(shape, self.edges.iter().map(|e| e.color.clone()).collect())
    }

    /// The monomial diagram; every color must be a single `t^c` with coefficient 1.
    pub fn to_diagram(&self) -> Result<Diagram> {
        self.to_colored()?
            .as_monomial()
            .ok_or_else(|| Error::Argument("diagram colors are not monomials t^c".into()))
    }
}

/// Parses a diagram document, reporting the line and column of schema errors.
pub fn parse_diagram_json(text: &str) -> Result<ColoredDiagram> {
    let j: DiagramJson =
        serde_json::from_str(text).map_err(|e| Error::Ingestion(format!("diagram: {e}")))?;
    j.to_colored()
}

/// Compact one-line name used in text reports and as basis ids.
pub fn short_name(d: &Diagram) -> String {
    let kind = |k: EdgeKind| match k {
        EdgeKind::Wilson => "W",
        EdgeKind::Internal => "I",
        EdgeKind::SelfLoop => "rho",
    };
    let mut s = String::new();
    for (i, e) in d.edges().iter().enumerate() {
        if i > 0 {
            s.push(' ');
        }
        s.push_str(&format!("{}>{}:{}^{}", e.tail, e.head, kind(e.kind), e.color));
    }
    for (v, o) in d.orientations() {
        let ids: Vec<String> = o.iter().map(|h| h.id().to_string()).collect();
        s.push_str(&format!(" @{v}({})", ids.join(",")));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::enumerate::{enumerate_diagrams, EnumerateOptions};

    #[test]
    fn round_trip_all_small_diagrams() {
        for d in enumerate_diagrams(2, 1, EnumerateOptions { nh_only: true, chords_only: false }).unwrap() {
            let text = serde_json::to_string(&DiagramJson::from_diagram(&d)).unwrap();
            let back = parse_diagram_json(&text).unwrap().as_monomial().unwrap();
            assert_eq!(back, d);
        }
    }

    #[test]
    fn wire_format() {
        let d = Diagram::build(2, vec![0, 1], &[0, 0], &[(1, 0, 1)], BTreeMap::new()).unwrap();
        let text = serde_json::to_string(&DiagramJson::from_diagram(&d)).unwrap();
        assert_eq!(
            text,
            r#"{"degree":1,"wilson_cycle":[0,1],"edges":[{"from":0,"to":1,"kind":"W","color":{"0":"1/1"}},{"from":1,"to":0,"kind":"W","color":{"0":"1/1"}},{"from":1,"to":0,"kind":"I","color":{"1":"1/1"}}],"vertex_orientations":{}}"#
        );
    }

    #[test]
    fn schema_errors_carry_position() {
        let err = parse_diagram_json("{\"degree\": 1,\n \"wilson\": []}").unwrap_err();
        match err {
            Error::Ingestion(m) => assert!(m.contains("line 2"), "{m}"),
            other => panic!("{other:?}"),
        }
        let bad_valence = r#"{"degree":1,"wilson_cycle":[0,1],"edges":[{"from":0,"to":1,"kind":"W","color":{"0":"1/1"}},{"from":1,"to":0,"kind":"W","color":{"0":"1/1"}}],"vertex_orientations":{}}"#;
        assert!(matches!(parse_diagram_json(bad_valence), Err(Error::Structural(_))));
    }
}
