//! Alternating augmentation of a connected projection.
//!
//! Every non-alternating edge receives a midpoint crossing. Inside each
//! region the non-alternating incidences alternate in sign around the
//! boundary, so pairing them consecutively, `(1, 2), (3, 4), ...` from the
//! smallest dart, joins opposite signs with arcs that never cross. The arc
//! end at a `++` edge passes over, the end at a `--` edge passes under, and
//! every resulting edge alternates. The arcs close up into disjoint simple
//! circles.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::{
    Axis, CrossingId, Dart, Diagram, DiagramError, EdgeClass, EdgeId, FaceId, Sign, Tag, TagFilter,
};

pub type CircleId = usize;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AugmentError {
    #[error("non-alternating incidences of face {face} do not alternate in sign")]
    RegionAlternationViolated { face: FaceId },
    #[error("augmentation broke planarity: {0}")]
    PlanarityBroken(DiagramError),
    #[error("crossing {crossing} has two augmenting strands")]
    CircleNotSimple { crossing: CrossingId },
    #[error("strand through dart {dart} mixes original and augmenting edges")]
    MixedStrand { dart: Dart },
    #[error("augmented diagram is not alternating at edge {edge}")]
    NotAlternating { edge: EdgeId },
}

/// One closed augmenting component, as a strand walk of augmenting darts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circle {
    pub id: CircleId,
    pub darts: Vec<Dart>,
}

impl Circle {
    pub fn edges(&self, diagram: &Diagram) -> Vec<EdgeId> {
        self.darts.iter().map(|&d| diagram.edge_of(d)).collect()
    }
}

/// Counts of rewrites applied since augmentation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveLog {
    pub type_i: usize,
    pub type_ii: usize,
    /// Over/under choices made by type II pushes, indexed by
    /// `2 * (arc over at entry) + (arc over at exit)`.
    pub type_ii_assignments: [usize; 4],
}

/// A projection together with its augmenting circles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AugmentedDiagram {
    diagram: Diagram,
    circles: Vec<Circle>,
    circle_of_edge: Vec<Option<CircleId>>,
    log: Option<MoveLog>,
}

impl AugmentedDiagram {
    /// Wraps a diagram, reading its circles off the augmenting strands.
    ///
    /// No validity checks are made here; see [`AugmentedDiagram::circles_of`].
    /// `log` is `None` when the history of the diagram is unknown, e.g. after
    /// parsing.
    pub fn new(diagram: Diagram, log: Option<MoveLog>) -> AugmentedDiagram {
        let circles: Vec<Circle> = diagram
            .strand_components(TagFilter::Augment)
            .into_iter()
            .enumerate()
            .map(|(id, darts)| Circle { id, darts })
            .collect();
        let mut circle_of_edge = vec![None; diagram.edge_count()];
        for circle in &circles {
            for &d in &circle.darts {
                circle_of_edge[diagram.edge_of(d)] = Some(circle.id);
            }
        }
        AugmentedDiagram { diagram, circles, circle_of_edge, log }
    }

    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn into_diagram(self) -> Diagram {
        self.diagram
    }

    pub fn circles(&self) -> &[Circle] {
        &self.circles
    }

    pub fn circle_of_edge(&self, edge: EdgeId) -> Option<CircleId> {
        self.circle_of_edge[edge]
    }

    pub fn circle_of_dart(&self, dart: Dart) -> Option<CircleId> {
        self.circle_of_edge[self.diagram.edge_of(dart)]
    }

    pub fn log(&self) -> Option<&MoveLog> {
        self.log.as_ref()
    }

    /// Recomputes the circles and checks they are simple and disjoint.
    pub fn circles_of(&self) -> Result<Vec<Circle>, AugmentError> {
        let d = &self.diagram;
        for c in 0..d.crossing_count() {
            if d.strand_tags(c).iter().all(|strand| strand.contains(&Tag::Augment)) {
                return Err(AugmentError::CircleNotSimple { crossing: c });
            }
        }
        for walk in d.strand_components(TagFilter::Any) {
            let first = d.tag_of(walk[0]);
            if let Some(&dart) = walk.iter().find(|&&x| d.tag_of(x) != first) {
                return Err(AugmentError::MixedStrand { dart });
            }
        }
        Ok(AugmentedDiagram::new(d.clone(), None).circles)
    }

    /// For every original edge, the edge of `input` it was cut from.
    ///
    /// Each original edge is followed along its strand, through crossings
    /// that carry an augmenting strand, to the nearest crossing inherited
    /// from the input. Dart ids of inherited crossings never change, so the
    /// dart reached there names the input edge.
    pub fn provenance(&self, input: &Diagram) -> Vec<Option<EdgeId>> {
        let d = &self.diagram;
        let is_transit = |c: CrossingId| {
            d.crossing(c).origin.is_none() || d.strand_tags(c).iter().flatten().any(|&t| t == Tag::Augment)
        };
        d.edges()
            .iter()
            .map(|edge| {
                if edge.tag != Tag::Original {
                    return None;
                }
                let mut dart = edge.darts[0];
                // Walk backwards until `dart` sits on an inherited crossing.
                let mut steps = 0;
                while is_transit(dart.crossing()) {
                    dart = d.twin(dart.opposite());
                    steps += 1;
                    if steps > d.dart_count() {
                        return None;
                    }
                }
                let origin = d.crossing(dart.crossing()).origin?;
                let input_dart = Dart::new(origin, dart.slot());
                (input_dart.0 < input.dart_count()).then(|| input.edge_of(input_dart))
            })
            .collect()
    }
}

/// A non-alternating edge end seen from inside a face.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Incidence {
    /// The edge's dart lying in the face orbit.
    pub dart: Dart,
    pub edge: EdgeId,
    pub sign: Sign,
}

/// Non-alternating incidences of `face` in boundary order from its smallest dart.
pub fn region_incidences(diagram: &Diagram, face: FaceId) -> Result<Vec<Incidence>, AugmentError> {
    let incidences: Vec<Incidence> = diagram
        .face(face)
        .darts
        .iter()
        .filter_map(|&dart| {
            let edge = diagram.edge_of(dart);
            let sign = match diagram.edge_labels(edge).class {
                EdgeClass::Alternating => return None,
                EdgeClass::PositiveNonAlt => Sign::Plus,
                EdgeClass::NegativeNonAlt => Sign::Minus,
            };
            Some(Incidence { dart, edge, sign })
        })
        .collect();
    let n = incidences.len();
    if (0..n).any(|i| incidences[i].sign == incidences[(i + 1) % n].sign) {
        return Err(AugmentError::RegionAlternationViolated { face });
    }
    Ok(incidences)
}

/// Inserts a midpoint on every non-alternating edge and joins them with
/// augmenting arcs region by region. Alternating input comes back unchanged
/// with no circles.
pub fn augment_regions(diagram: &Diagram) -> Result<AugmentedDiagram, AugmentError> {
    let non_alternating = diagram.non_alternating_edges();
    if non_alternating.is_empty() {
        return Ok(AugmentedDiagram::new(diagram.clone(), Some(MoveLog::default())));
    }

    let mut parts = diagram.to_parts();
    let mut midpoint: Vec<Option<CrossingId>> = vec![None; diagram.edge_count()];
    for &e in &non_alternating {
        let edge = diagram.edge(e);
        // The arc passes over exactly where both original ends pass over.
        let over = match diagram.edge_labels(e).class {
            EdgeClass::PositiveNonAlt => Axis::Odd,
            _ => Axis::Even,
        };
        let m = parts.add_crossing(over);
        let [a, b] = edge.darts;
        parts.join(a, Dart::new(m, 0), edge.tag);
        parts.join(Dart::new(m, 2), b, edge.tag);
        midpoint[e] = Some(m);
    }

    // Slot 1 of a midpoint faces the side of darts[0], slot 3 the side of darts[1].
    let arc_end = |inc: &Incidence| {
        let m = midpoint[inc.edge].expect("incidence on a non-alternating edge");
        let slot = if inc.dart == diagram.edge(inc.edge).darts[0] { 1 } else { 3 };
        Dart::new(m, slot)
    };
    for face in diagram.faces() {
        let incidences = region_incidences(diagram, face.id)?;
        for pair in incidences.chunks(2) {
            parts.join(arc_end(&pair[0]), arc_end(&pair[1]), Tag::Augment);
        }
    }

    let augmented = Diagram::from_parts(parts).map_err(AugmentError::PlanarityBroken)?;
    if let Some(edge) = augmented.non_alternating_edges().first() {
        return Err(AugmentError::NotAlternating { edge: *edge });
    }
    let result = AugmentedDiagram::new(augmented, Some(MoveLog::default()));
    result.circles_of()?;
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{diagram, FLIPPED_TREFOIL, TREFOIL};

    #[test]
    fn alternating_input_is_untouched() {
        let d = diagram(&TREFOIL);
        for f in d.faces() {
            assert!(region_incidences(&d, f.id).unwrap().is_empty());
        }
        let a = augment_regions(&d).unwrap();
        assert_eq!(a.diagram(), &d);
        assert!(a.circles().is_empty());
    }

    #[test]
    fn flipped_crossing_faces_see_one_of_each_sign() {
        let d = diagram(&FLIPPED_TREFOIL);
        let at_flipped: Vec<_> =
            d.faces().iter().filter(|f| f.darts.iter().any(|x| x.crossing() == 0)).collect();
        assert_eq!(at_flipped.len(), 4);
        for f in at_flipped {
            let inc = region_incidences(&d, f.id).unwrap();
            assert_eq!(inc.len(), 2, "face {f:?}");
            assert_ne!(inc[0].sign, inc[1].sign);
        }
    }

    #[test]
    fn flipped_trefoil_augments_to_seven_alternating_crossings() {
        let d = diagram(&FLIPPED_TREFOIL);
        let a = augment_regions(&d).unwrap();
        assert_eq!(a.diagram().crossing_count(), 7);
        assert!(a.diagram().is_alternating());
        assert_eq!(a.diagram().euler_characteristic(), 2);
        assert_eq!(a.circles_of().unwrap(), a.circles());
    }

    #[test]
    fn midpoints_pair_one_original_and_one_augment_strand() {
        let d = diagram(&FLIPPED_TREFOIL);
        let a = augment_regions(&d).unwrap();
        for c in 3..7 {
            let tags = a.diagram().strand_tags(c);
            assert_eq!(tags[0], [Tag::Original; 2]);
            assert_eq!(tags[1], [Tag::Augment; 2]);
        }
    }

    #[test]
    fn provenance_maps_halves_back_to_their_edge() {
        let d = diagram(&FLIPPED_TREFOIL);
        let a = augment_regions(&d).unwrap();
        let prov = a.provenance(&d);
        let mut hits = vec![0; d.edge_count()];
        for (e, p) in prov.iter().enumerate() {
            match a.diagram().edge(e).tag {
                Tag::Original => hits[p.unwrap()] += 1,
                Tag::Augment => assert!(p.is_none()),
            }
        }
        for (e, &hit) in hits.iter().enumerate() {
            let expected = if d.edge_labels(e).class.is_alternating() { 1 } else { 2 };
            assert_eq!(hit, expected, "edge {e}");
        }
    }

    #[test]
    fn incidences_balance_in_every_face() {
        let d = diagram(&FLIPPED_TREFOIL);
        for f in d.faces() {
            let inc = region_incidences(&d, f.id).unwrap();
            assert_eq!(inc.iter().filter(|i| i.sign == Sign::Plus).count() * 2, inc.len());
        }
    }
}
