//! The `alternator/1` JSON document.
//!
//! Crossings, edges and tags are the authoritative content; faces, edge
//! classifications and circles are derived data written out for readers and
//! ignored on input.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::augment::{AugmentedDiagram, MoveLog};
use crate::diagram::{
    Axis, Crossing, CrossingId, Dart, Diagram, DiagramError, DiagramParts, EdgeClass, EdgeId, FaceId, Sign,
    Tag,
};
use crate::verify::Report;

pub const FORMAT: &str = "alternator/1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    pub format: String,
    pub crossings: Vec<CrossingDoc>,
    pub edges: Vec<EdgeDoc>,
    pub faces: Vec<FaceDoc>,
    pub circles: Vec<CircleDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub moves: Option<MoveLog>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<Report>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossingDoc {
    pub id: CrossingId,
    /// Darts in counterclockwise order, slot 0 first.
    pub rotation: [Dart; 4],
    pub over_axis: Axis,
    pub origin: Option<CrossingId>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub id: EdgeId,
    pub darts: [Dart; 2],
    /// `[crossing, slot]` of each end.
    pub ends: [[usize; 2]; 2],
    pub tag: Tag,
    pub circle: Option<usize>,
    pub labels: [Sign; 2],
    pub class: EdgeClass,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceDoc {
    pub id: FaceId,
    pub darts: Vec<Dart>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircleDoc {
    pub id: usize,
    pub edges: Vec<EdgeId>,
    pub darts: Vec<Dart>,
}

#[derive(Debug, Error)]
pub enum JsonError {
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("unsupported format {0:?}, expected {FORMAT:?}")]
    Format(String),
    #[error("inconsistent document: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

impl Document {
    pub fn new(aug: &AugmentedDiagram, report: Option<&Report>) -> Document {
        let d = aug.diagram();
        let crossings = d
            .crossings()
            .iter()
            .enumerate()
            .map(|(id, c)| CrossingDoc {
                id,
                rotation: [0, 1, 2, 3].map(|s| Dart::new(id, s)),
                over_axis: c.over,
                origin: c.origin,
            })
            .collect();
        let edges = d
            .edges()
            .iter()
            .map(|e| {
                let labels = d.edge_labels(e.id);
                EdgeDoc {
                    id: e.id,
                    darts: e.darts,
                    ends: e.darts.map(|x| [x.crossing(), x.slot()]),
                    tag: e.tag,
                    circle: aug.circle_of_edge(e.id),
                    labels: labels.ends,
                    class: labels.class,
                }
            })
            .collect();
        let faces = d.faces().iter().map(|f| FaceDoc { id: f.id, darts: f.darts.clone() }).collect();
        let circles = aug
            .circles()
            .iter()
            .map(|c| CircleDoc { id: c.id, edges: c.edges(d), darts: c.darts.clone() })
            .collect();
        Document {
            format: FORMAT.to_string(),
            crossings,
            edges,
            faces,
            circles,
            moves: aug.log().cloned(),
            report: report.cloned(),
        }
    }

    pub fn to_augmented(&self) -> Result<AugmentedDiagram, JsonError> {
        if self.format != FORMAT {
            return Err(JsonError::Format(self.format.clone()));
        }
        let n = self.crossings.len();
        let mut parts = DiagramParts { crossings: Vec::with_capacity(n), twin: vec![], tags: vec![] };
        for (i, c) in self.crossings.iter().enumerate() {
            if c.id != i {
                return Err(JsonError::Inconsistent(format!("crossing at position {i} has id {}", c.id)));
            }
            if c.rotation != [0, 1, 2, 3].map(|s| Dart::new(i, s)) {
                return Err(JsonError::Inconsistent(format!("crossing {i} has a non-canonical rotation")));
            }
            parts.add_crossing(c.over_axis);
            parts.crossings[i] = Crossing { over: c.over_axis, origin: c.origin };
        }
        let mut covered = vec![false; 4 * n];
        for e in &self.edges {
            for x in e.darts {
                if x.0 >= 4 * n || std::mem::replace(&mut covered[x.0], true) {
                    return Err(JsonError::Inconsistent(format!("dart {} is missing or reused", x.0)));
                }
            }
            parts.join(e.darts[0], e.darts[1], e.tag);
        }
        if let Some(x) = covered.iter().position(|&c| !c) {
            return Err(JsonError::Inconsistent(format!("dart {x} belongs to no edge")));
        }
        Ok(AugmentedDiagram::new(Diagram::from_parts(parts)?, self.moves.clone()))
    }
}

/// Pretty-printed document with a stable key order.
pub fn emit_json(aug: &AugmentedDiagram, report: Option<&Report>) -> String {
    serde_json::to_string_pretty(&Document::new(aug, report)).expect("document serializes")
}

pub fn parse_json(text: &str) -> Result<(AugmentedDiagram, Option<Report>), JsonError> {
    let doc: Document = serde_json::from_str(text)?;
    Ok((doc.to_augmented()?, doc.report))
}
