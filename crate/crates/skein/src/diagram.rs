//! JSON form of planar diagrams:
//! `{"crossings":[{"edges":[e0,e1,e2,e3],"over":[0,2]}],"free_loops":n,"kinks":k}`.
//!
//! `edges` lists the four half-edge labels counterclockwise around the
//! crossing; `over` names the two slots of the over-strand, `[0,2]` or
//! `[1,3]`. Every label must appear exactly twice.

use serde::{Deserialize, Serialize};
use skein_core::bracket::{Crossing, DiagramError, Over, PlanarDiagram};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingJson {
    pub edges: [u32; 4],
    pub over: [usize; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiagramJson {
    #[serde(default)]
    pub crossings: Vec<CrossingJson>,
    #[serde(default)]
    pub free_loops: u32,
    #[serde(default)]
    pub kinks: i64,
}

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("crossing {index}: over slots {slots:?} are not [0,2] or [1,3]")]
    OverSlots { index: usize, slots: [usize; 2] },
    #[error("invalid diagram: {0}")]
    Invalid(#[from] DiagramError),
}

impl DiagramJson {
    pub fn from_diagram(d: &PlanarDiagram) -> Self {
        Self {
            crossings: d
                .crossings
                .iter()
                .map(|c| CrossingJson {
                    edges: c.edges,
                    over: c.over.slots(),
                })
                .collect(),
            free_loops: d.free_loops,
            kinks: d.kinks,
        }
    }

    /// Converts and validates.
    pub fn to_diagram(&self) -> Result<PlanarDiagram, FormatError> {
        let crossings = self
            .crossings
            .iter()
            .enumerate()
            .map(|(index, c)| {
                let mut slots = c.over;
                slots.sort_unstable();
                Over::from_slots(slots)
                    .map(|over| Crossing::new(c.edges, over))
                    .ok_or(FormatError::OverSlots { index, slots: c.over })
            })
            .collect::<Result<Vec<_>, _>>()?;
        let d = PlanarDiagram::new(crossings, self.free_loops, self.kinks);
        d.validate()?;
        Ok(d)
    }
}

pub fn parse_diagram(text: &str) -> Result<PlanarDiagram, FormatError> {
    serde_json::from_str::<DiagramJson>(text)?.to_diagram()
}

pub fn diagram_to_json(d: &PlanarDiagram) -> String {
    serde_json::to_string(&DiagramJson::from_diagram(d)).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use skein_core::bracket::corpus::standard_corpus;

    #[test]
    fn corpus_round_trips() {
        for (name, d) in standard_corpus() {
            assert_eq!(parse_diagram(&diagram_to_json(&d)).unwrap(), d, "{name}");
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            parse_diagram("{\"crossings\": ["),
            Err(FormatError::Json(_))
        ));
        let bad_over = r#"{"crossings":[{"edges":[0,0,1,1],"over":[0,1]}]}"#;
        assert!(matches!(
            parse_diagram(bad_over),
            Err(FormatError::OverSlots { index: 0, .. })
        ));
        let unmatched = r#"{"crossings":[{"edges":[0,1,2,3],"over":[0,2]}]}"#;
        assert!(matches!(parse_diagram(unmatched), Err(FormatError::Invalid(_))));
        assert_eq!(
            parse_diagram(r#"{"free_loops":2}"#).unwrap(),
            PlanarDiagram::new(Vec::new(), 2, 0)
        );
    }
}
