//! Link projections as 4-regular planar combinatorial maps.
//!
//! Every crossing owns four darts (edge ends) numbered `4 * crossing + slot`,
//! with slots listed counterclockwise. Two darts are joined by the `twin`
//! involution to form an edge, and the strand through a crossing connects
//! opposite slots. Faces are the orbits of `d -> next(twin(d))`.
//!
//! Edge-end labels follow the over/under convention: a dart is labelled
//! [`Sign::Plus`] when its strand passes over at that crossing and
//! [`Sign::Minus`] when it passes under. This is the only convention under
//! which "an alternating edge carries one plus and one minus" agrees with the
//! usual notion of an alternating diagram.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type CrossingId = usize;
pub type EdgeId = usize;
pub type FaceId = usize;

/// One end of an edge, identified by its crossing and rotation slot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Dart(pub usize);

impl Dart {
    pub fn new(crossing: CrossingId, slot: usize) -> Dart {
        debug_assert!(slot < 4);
        Dart(4 * crossing + slot)
    }

    pub fn crossing(self) -> CrossingId {
        self.0 / 4
    }

    pub fn slot(self) -> usize {
        self.0 % 4
    }

    /// Next dart counterclockwise around the same crossing.
    pub fn next(self) -> Dart {
        Dart::new(self.crossing(), (self.slot() + 1) % 4)
    }

    pub fn prev(self) -> Dart {
        Dart::new(self.crossing(), (self.slot() + 3) % 4)
    }

    /// The dart where the strand entering through `self` leaves the crossing.
    pub fn opposite(self) -> Dart {
        Dart::new(self.crossing(), (self.slot() + 2) % 4)
    }
}

impl fmt::Display for Dart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.crossing(), self.slot())
    }
}

/// A pair of opposite slots: `Even` is {0, 2}, `Odd` is {1, 3}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    Even,
    Odd,
}

impl Axis {
    pub fn of_slot(slot: usize) -> Axis {
        if slot.is_multiple_of(2) {
            Axis::Even
        } else {
            Axis::Odd
        }
    }

    pub fn contains(self, slot: usize) -> bool {
        Axis::of_slot(slot) == self
    }

    pub fn flipped(self) -> Axis {
        match self {
            Axis::Even => Axis::Odd,
            Axis::Odd => Axis::Even,
        }
    }

    pub fn slots(self) -> [usize; 2] {
        match self {
            Axis::Even => [0, 2],
            Axis::Odd => [1, 3],
        }
    }
}

impl Serialize for Axis {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.slots().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Axis {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        match <[usize; 2]>::deserialize(deserializer)? {
            [0, 2] => Ok(Axis::Even),
            [1, 3] => Ok(Axis::Odd),
            other => {
                Err(serde::de::Error::custom(format!("over axis must be [0,2] or [1,3], got {other:?}")))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    /// Which strand passes over.
    pub over: Axis,
    /// Id of the input crossing this one descends from. `None` for crossings
    /// introduced by augmentation or moves.
    pub origin: Option<CrossingId>,
}

/// Whether an edge belongs to the input projection or to an augmenting circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Tag {
    Original,
    Augment,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TagFilter {
    Any,
    Original,
    Augment,
}

impl TagFilter {
    pub fn matches(self, tag: Tag) -> bool {
        match self {
            TagFilter::Any => true,
            TagFilter::Original => tag == Tag::Original,
            TagFilter::Augment => tag == Tag::Augment,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: EdgeId,
    /// The twin pair, smaller dart first.
    pub darts: [Dart; 2],
    pub tag: Tag,
}

/// A region of the projection: one orbit of the face permutation, starting
/// at its smallest dart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub id: FaceId,
    pub darts: Vec<Dart>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl std::ops::Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeClass {
    Alternating,
    PositiveNonAlt,
    NegativeNonAlt,
}

impl EdgeClass {
    pub fn is_alternating(self) -> bool {
        self == EdgeClass::Alternating
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeLabelPair {
    pub ends: [Sign; 2],
    pub class: EdgeClass,
}

impl EdgeLabelPair {
    pub fn new(ends: [Sign; 2]) -> EdgeLabelPair {
        let class = match ends {
            [Sign::Plus, Sign::Plus] => EdgeClass::PositiveNonAlt,
            [Sign::Minus, Sign::Minus] => EdgeClass::NegativeNonAlt,
            _ => EdgeClass::Alternating,
        };
        EdgeLabelPair { ends, class }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("a diagram needs at least one crossing")]
    Empty,
    #[error("edge label {label} occurs {count} time(s); every label must occur exactly twice")]
    DuplicateLabelArity { label: u64, count: usize },
    #[error("diagram is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("diagram is not planar: V - E + F = {euler}, expected 2")]
    NonPlanar { euler: i64 },
    #[error("twin map is not a fixed-point-free involution at dart {0}")]
    BadTwin(usize),
    #[error("the two ends of the edge at dart {0} carry different tags")]
    TagMismatch(usize),
    #[error("expected {expected} per-dart entries, got {found}")]
    Length { expected: usize, found: usize },
}

/// Raw, unvalidated contents of a [`Diagram`]. Rewrites edit parts and
/// rebuild through [`Diagram::from_parts`], which re-checks every invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramParts {
    pub crossings: Vec<Crossing>,
    /// Indexed by dart.
    pub twin: Vec<Dart>,
    /// Indexed by dart; both ends of an edge must agree.
    pub tags: Vec<Tag>,
}

impl DiagramParts {
    pub fn add_crossing(&mut self, over: Axis) -> CrossingId {
        let id = self.crossings.len();
        self.crossings.push(Crossing { over, origin: None });
        for slot in 0..4 {
            self.twin.push(Dart::new(id, slot));
            self.tags.push(Tag::Original);
        }
        id
    }

    pub fn join(&mut self, a: Dart, b: Dart, tag: Tag) {
        self.twin[a.0] = b;
        self.twin[b.0] = a;
        self.tags[a.0] = tag;
        self.tags[b.0] = tag;
    }
}

/// A connected link projection on the sphere.
///
/// Values are immutable; faces and edges are derived once at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    twin: Vec<Dart>,
    edge_of: Vec<EdgeId>,
    edges: Vec<Edge>,
    faces: Vec<Face>,
    face_of: Vec<FaceId>,
}

impl Diagram {
    pub fn from_parts(parts: DiagramParts) -> Result<Diagram, DiagramError> {
        let DiagramParts { crossings, twin, tags } = parts;
        if crossings.is_empty() {
            return Err(DiagramError::Empty);
        }
        let n = 4 * crossings.len();
        for len in [twin.len(), tags.len()] {
            if len != n {
                return Err(DiagramError::Length { expected: n, found: len });
            }
        }
        for (d, &t) in twin.iter().enumerate() {
            if t.0 >= n || t.0 == d || twin[t.0].0 != d {
                return Err(DiagramError::BadTwin(d));
            }
            if tags[t.0] != tags[d] {
                return Err(DiagramError::TagMismatch(d.min(t.0)));
            }
        }

        let mut edge_of = vec![usize::MAX; n];
        let mut edges = Vec::with_capacity(n / 2);
        for d in 0..n {
            if edge_of[d] == usize::MAX {
                let t = twin[d].0;
                let id = edges.len();
                edge_of[d] = id;
                edge_of[t] = id;
                edges.push(Edge { id, darts: [Dart(d), Dart(t)], tag: tags[d] });
            }
        }

        let faces = trace_orbits(&twin);
        let mut face_of = vec![0; n];
        for face in &faces {
            for d in &face.darts {
                face_of[d.0] = face.id;
            }
        }

        let diagram = Diagram { crossings, twin, edge_of, edges, faces, face_of };
        let components = diagram.crossing_components();
        if components != 1 {
            return Err(DiagramError::Disconnected { components });
        }
        let euler = diagram.euler_characteristic();
        if euler != 2 {
            return Err(DiagramError::NonPlanar { euler });
        }
        Ok(diagram)
    }

    pub fn to_parts(&self) -> DiagramParts {
        DiagramParts {
            crossings: self.crossings.clone(),
            twin: self.twin.clone(),
            tags: (0..self.dart_count()).map(|d| self.edges[self.edge_of[d]].tag).collect(),
        }
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn dart_count(&self) -> usize {
        self.twin.len()
    }

    pub fn darts(&self) -> impl Iterator<Item = Dart> {
        (0..self.twin.len()).map(Dart)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing(&self, id: CrossingId) -> &Crossing {
        &self.crossings[id]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        &self.edges[id]
    }

    pub fn edge_of(&self, dart: Dart) -> EdgeId {
        self.edge_of[dart.0]
    }

    pub fn tag_of(&self, dart: Dart) -> Tag {
        self.edges[self.edge_of[dart.0]].tag
    }

    pub fn twin(&self, dart: Dart) -> Dart {
        self.twin[dart.0]
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: FaceId) -> &Face {
        &self.faces[id]
    }

    pub fn face_of(&self, dart: Dart) -> FaceId {
        self.face_of[dart.0]
    }

    /// Successor of `dart` in its face orbit.
    pub fn face_next(&self, dart: Dart) -> Dart {
        self.twin(dart).next()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.crossings.len() as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    pub fn end_label(&self, dart: Dart) -> Sign {
        if self.crossings[dart.crossing()].over.contains(dart.slot()) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn edge_labels(&self, edge: EdgeId) -> EdgeLabelPair {
        let [a, b] = self.edges[edge].darts;
        EdgeLabelPair::new([self.end_label(a), self.end_label(b)])
    }

    /// Label pair and classification of every edge, indexed by edge id.
    pub fn classify_edges(&self) -> Vec<EdgeLabelPair> {
        (0..self.edges.len()).map(|e| self.edge_labels(e)).collect()
    }

    pub fn non_alternating_edges(&self) -> Vec<EdgeId> {
        (0..self.edges.len()).filter(|&e| !self.edge_labels(e).class.is_alternating()).collect()
    }

    pub fn is_alternating(&self) -> bool {
        (0..self.edges.len()).all(|e| self.edge_labels(e).class.is_alternating())
    }

    /// Closed strand walks through the edges selected by `filter`.
    ///
    /// Each walk lists darts `d0, d1, ...` where `d(i+1) = opposite(twin(di))`,
    /// i.e. the strand enters a crossing at one slot and leaves at the
    /// opposite one. Walks start at their smallest dart and are ordered by it.
    /// A strand is reported only when every one of its edges matches.
    pub fn strand_components(&self, filter: TagFilter) -> Vec<Vec<Dart>> {
        let mut seen = vec![false; self.dart_count()];
        let mut walks = Vec::new();
        for start in self.darts() {
            if seen[start.0] {
                continue;
            }
            let mut walk = Vec::new();
            let mut d = start;
            loop {
                seen[d.0] = true;
                seen[self.twin(d).0] = true;
                walk.push(d);
                d = self.twin(d).opposite();
                if d == start {
                    break;
                }
            }
            if walk.iter().all(|&d| filter.matches(self.tag_of(d))) {
                walks.push(walk);
            }
        }
        walks
    }

    /// Tags of the two strands through a crossing, indexed by axis (even, odd).
    pub fn strand_tags(&self, crossing: CrossingId) -> [[Tag; 2]; 2] {
        let t = |slot| self.tag_of(Dart::new(crossing, slot));
        [[t(0), t(2)], [t(1), t(3)]]
    }

    fn crossing_components(&self) -> usize {
        let n = self.crossings.len();
        let mut seen = vec![false; n];
        let mut components = 0;
        for root in 0..n {
            if seen[root] {
                continue;
            }
            components += 1;
            seen[root] = true;
            let mut stack = vec![root];
            while let Some(c) = stack.pop() {
                for slot in 0..4 {
                    let other = self.twin(Dart::new(c, slot)).crossing();
                    if !seen[other] {
                        seen[other] = true;
                        stack.push(other);
                    }
                }
            }
        }
        components
    }
}

fn trace_orbits(twin: &[Dart]) -> Vec<Face> {
    let mut seen = vec![false; twin.len()];
    let mut faces = Vec::new();
    for start in 0..twin.len() {
        if seen[start] {
            continue;
        }
        let mut darts = Vec::new();
        let mut d = Dart(start);
        while !seen[d.0] {
            seen[d.0] = true;
            darts.push(d);
            d = twin[d.0].next();
        }
        faces.push(Face { id: faces.len(), darts });
    }
    faces
}

/// Recomputes the face partition of a diagram from its twin map.
pub fn trace_faces(diagram: &Diagram) -> Vec<Face> {
    trace_orbits(&diagram.twin)
}

/// Builds a diagram from crossing tuples of edge labels.
///
/// Tuple `(a, b, c, d)` lists the edge ends counterclockwise as slots 0..3;
/// the strand through `a, c` passes under and the strand through `b, d`
/// passes over. Dart `4 * i + j` is slot `j` of tuple `i`, and crossing `i`
/// records itself as its own origin.
pub fn build_diagram(tuples: &[[u64; 4]], tag_of: impl Fn(u64) -> Tag) -> Result<Diagram, DiagramError> {
    if tuples.is_empty() {
        return Err(DiagramError::Empty);
    }
    let mut ends: std::collections::BTreeMap<u64, Vec<Dart>> = Default::default();
    for (i, tuple) in tuples.iter().enumerate() {
        for (slot, &label) in tuple.iter().enumerate() {
            ends.entry(label).or_default().push(Dart::new(i, slot));
        }
    }
    if let Some((&label, darts)) = ends.iter().find(|(_, darts)| darts.len() != 2) {
        return Err(DiagramError::DuplicateLabelArity { label, count: darts.len() });
    }

    let mut parts = DiagramParts {
        crossings: Vec::with_capacity(tuples.len()),
        twin: Vec::with_capacity(4 * tuples.len()),
        tags: Vec::with_capacity(4 * tuples.len()),
    };
    for i in 0..tuples.len() {
        parts.add_crossing(Axis::Odd);
        parts.crossings[i].origin = Some(i);
    }
    for (&label, darts) in &ends {
        parts.join(darts[0], darts[1], tag_of(label));
    }
    Diagram::from_parts(parts)
}
