//! Alternation-preserving rewrites of augmented diagrams.
//!
//! Both moves act inside one face `f` on two of its boundary edges, given by
//! their darts `a` and `b` in the orbit of `f`.
//!
//! * [`type_i_merge`] is a band sum of two augmenting circles across `f`. The
//!   arcs `a` and `b` are cut and their ends reconnected the other way round,
//!   so no crossing is created and the two circles become one.
//! * [`type_ii_push`] pushes a finger of the augmenting arc `a` through `f`
//!   and across the edge `b`, creating two crossings. The finger tip lies in
//!   the face on the far side of `b`.
//!
//! In an alternating diagram all darts of one face orbit carry the same label,
//! which is what makes both rewrites compatible with alternation.

use thiserror::Error;

use crate::augment::AugmentedDiagram;
use crate::diagram::{Axis, Dart, Diagram, DiagramError, EdgeId, FaceId, Tag};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MoveError {
    #[error("dart {dart} is not on face {face}")]
    NotSameFace { face: FaceId, dart: Dart },
    #[error("dart {dart} is not on an augmenting arc")]
    NotAugmentArc { dart: Dart },
    #[error("dart {dart} is not on an original edge")]
    NotOriginalEdge { dart: Dart },
    #[error("both arcs belong to circle {circle}")]
    SameCircle { circle: usize },
    #[error("move left edge {edge} non-alternating")]
    AlternationBroken { edge: EdgeId },
    #[error("no over/under choice at the pushed crossings restores alternation")]
    NoAlternatingAssignment,
    #[error("move broke planarity: {0}")]
    PlanarityBroken(DiagramError),
}

/// Two boundary edges of a common face, named by their darts in its orbit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MoveSite {
    pub face: FaceId,
    pub a: Dart,
    pub b: Dart,
}

impl MoveSite {
    fn check(&self, diagram: &Diagram) -> Result<(), MoveError> {
        for dart in [self.a, self.b] {
            if dart.0 >= diagram.dart_count()
                || self.face >= diagram.face_count()
                || diagram.face_of(dart) != self.face
            {
                return Err(MoveError::NotSameFace { face: self.face, dart });
            }
        }
        Ok(())
    }
}

fn rebuild(parts: crate::diagram::DiagramParts) -> Result<Diagram, MoveError> {
    Diagram::from_parts(parts).map_err(MoveError::PlanarityBroken)
}

/// Band-sums the two circles owning `site.a` and `site.b` across `site.face`.
///
/// With the face boundary running `p1 -a-> p2 ... q1 -b-> q2 ...`, the arcs
/// are replaced by `p2 - q1` and `p1 - q2`.
pub fn type_i_merge(aug: &AugmentedDiagram, site: MoveSite) -> Result<AugmentedDiagram, MoveError> {
    let d = aug.diagram();
    site.check(d)?;
    let (ca, cb) = match (aug.circle_of_dart(site.a), aug.circle_of_dart(site.b)) {
        (Some(ca), Some(cb)) => (ca, cb),
        (None, _) => return Err(MoveError::NotAugmentArc { dart: site.a }),
        (_, None) => return Err(MoveError::NotAugmentArc { dart: site.b }),
    };
    if ca == cb {
        return Err(MoveError::SameCircle { circle: ca });
    }

    let (x, y) = (site.a, site.b);
    let mut parts = d.to_parts();
    parts.join(d.twin(x), y, Tag::Augment);
    parts.join(x, d.twin(y), Tag::Augment);
    let merged = rebuild(parts)?;
    if let Some(&edge) = merged.non_alternating_edges().first() {
        return Err(MoveError::AlternationBroken { edge });
    }

    let mut log = aug.log().cloned().unwrap_or_default();
    log.type_i += 1;
    Ok(AugmentedDiagram::new(merged, Some(log)))
}

/// Pushes the augmenting arc at `site.a` across the original edge at `site.b`.
pub fn type_ii_push(aug: &AugmentedDiagram, site: MoveSite) -> Result<AugmentedDiagram, MoveError> {
    push(aug, site).map(|(out, _)| out)
}

/// As [`type_ii_push`], also returning the dart of the finger tip: the new
/// middle arc, oriented from the entry crossing and lying in the face beyond
/// the crossed edge.
pub(crate) fn push(aug: &AugmentedDiagram, site: MoveSite) -> Result<(AugmentedDiagram, Dart), MoveError> {
    let d = aug.diagram();
    site.check(d)?;
    if d.tag_of(site.a) != Tag::Augment {
        return Err(MoveError::NotAugmentArc { dart: site.a });
    }
    if d.tag_of(site.b) != Tag::Original {
        return Err(MoveError::NotOriginalEdge { dart: site.b });
    }

    // Arc `x` runs p1 -> p2 and edge `y` runs q1 -> q2, both with the face on
    // the same side. The finger leaves the arc, meets the edge at `entry`
    // (near q2), runs beside it on the far side and comes back at `exit`.
    let (x, y) = (site.a, site.b);
    let (x_end, y_end) = (d.twin(x), d.twin(y));
    let beta_tag = d.tag_of(y);

    let mut parts = d.to_parts();
    let entry = parts.add_crossing(Axis::Even);
    let exit = parts.add_crossing(Axis::Even);
    let slot = |c, s| Dart::new(c, s);

    parts.join(y, slot(exit, 0), beta_tag);
    parts.join(slot(exit, 2), slot(entry, 0), beta_tag);
    parts.join(slot(entry, 2), y_end, beta_tag);

    parts.join(x, slot(entry, 1), Tag::Augment);
    parts.join(slot(entry, 3), slot(exit, 3), Tag::Augment);
    parts.join(slot(exit, 1), x_end, Tag::Augment);

    // The arc runs on the odd axis of both new crossings; prefer it over first.
    for (index, (over_entry, over_exit)) in
        [(true, true), (true, false), (false, true), (false, false)].into_iter().enumerate()
    {
        let axis = |arc_over: bool| if arc_over { Axis::Odd } else { Axis::Even };
        let mut candidate = parts.clone();
        candidate.crossings[entry].over = axis(over_entry);
        candidate.crossings[exit].over = axis(over_exit);
        let pushed = rebuild(candidate)?;
        if pushed.is_alternating() {
            let mut log = aug.log().cloned().unwrap_or_default();
            log.type_ii += 1;
            log.type_ii_assignments[3 - index] += 1;
            return Ok((AugmentedDiagram::new(pushed, Some(log)), slot(entry, 3)));
        }
    }
    Err(MoveError::NoAlternatingAssignment)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::augment::augment_regions;
    use crate::fixtures::{diagram, FLIPPED_TREFOIL};
    use crate::verify::restriction;

    fn flipped() -> (Diagram, AugmentedDiagram) {
        let d = diagram(&FLIPPED_TREFOIL);
        let a = augment_regions(&d).unwrap();
        (d, a)
    }

    fn push_sites(aug: &AugmentedDiagram) -> Vec<MoveSite> {
        let d = aug.diagram();
        let mut sites = Vec::new();
        for f in d.faces() {
            for &a in f.darts.iter().filter(|&&x| d.tag_of(x) == Tag::Augment) {
                for &b in f.darts.iter().filter(|&&x| d.tag_of(x) == Tag::Original) {
                    sites.push(MoveSite { face: f.id, a, b });
                }
            }
        }
        sites
    }

    #[test]
    fn every_push_site_on_flipped_trefoil_stays_alternating() {
        let (input, aug) = flipped();
        let sites = push_sites(&aug);
        assert!(!sites.is_empty());
        for site in sites {
            let out = type_ii_push(&aug, site).unwrap();
            let d = out.diagram();
            assert_eq!(d.crossing_count(), aug.diagram().crossing_count() + 2);
            assert!(d.is_alternating());
            assert_eq!(d.euler_characteristic(), 2);
            assert_eq!(out.circles().len(), aug.circles().len());
            assert_eq!(out.circles_of().unwrap().len(), aug.circles().len());
            assert_eq!(restriction(&out).unwrap(), input);
            assert_eq!(out.log().unwrap().type_ii, 1);
        }
    }

    #[test]
    fn push_then_push_back_keeps_restriction() {
        let (input, aug) = flipped();
        let site = push_sites(&aug)[0];
        let (once, tip) = push(&aug, site).unwrap();
        // Seen from inside the finger, the tip bounds a bigon with the middle
        // piece of the crossed edge.
        let d = once.diagram();
        let tip = d.twin(tip);
        let bigon = d.face_of(tip);
        let back = d.face(bigon).darts.iter().copied().find(|&x| d.tag_of(x) == Tag::Original).unwrap();
        assert_eq!(d.face(bigon).darts.len(), 2);
        let twice = type_ii_push(&once, MoveSite { face: bigon, a: tip, b: back }).unwrap();
        assert!(twice.diagram().is_alternating());
        assert_eq!(restriction(&twice).unwrap(), input);
    }

    #[test]
    fn push_rejects_bad_sites() {
        let (_, aug) = flipped();
        let d = aug.diagram();
        let site = push_sites(&aug)[0];
        let elsewhere = d.darts().find(|&x| d.face_of(x) != site.face).unwrap();
        assert!(matches!(
            type_ii_push(&aug, MoveSite { b: elsewhere, ..site }),
            Err(MoveError::NotSameFace { .. })
        ));
        assert!(matches!(
            type_ii_push(&aug, MoveSite { a: site.b, b: site.a, ..site }),
            Err(MoveError::NotAugmentArc { .. })
        ));
    }

    #[test]
    fn merge_rejects_same_circle_and_original_edges() {
        let (_, aug) = flipped();
        let d = aug.diagram();
        let site = push_sites(&aug)[0];
        assert!(matches!(type_i_merge(&aug, site), Err(MoveError::NotAugmentArc { .. })));
        let c = aug.circles()[0].darts[0];
        let f = d.face_of(c);
        let same = d
            .face(f)
            .darts
            .iter()
            .copied()
            .find(|&x| x != c && aug.circle_of_dart(x) == aug.circle_of_dart(c));
        if let Some(other) = same {
            assert!(matches!(
                type_i_merge(&aug, MoveSite { face: f, a: c, b: other }),
                Err(MoveError::SameCircle { .. })
            ));
        }
    }
}
