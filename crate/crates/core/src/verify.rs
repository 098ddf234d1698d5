//! Independent certificate checks for augmented diagrams.
//!
//! Nothing here calls into the constructive modules. Every property is
//! re-derived from the raw crossings, twins and tags of the result.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::augment::AugmentedDiagram;
use crate::diagram::{CrossingId, Dart, Diagram, DiagramError, DiagramParts, Tag};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("crossing {crossing} keeps {degree} original edge ends after deleting augmenting edges")]
    DegreeViolation { crossing: CrossingId, degree: usize },
    #[error("crossing {crossing} has no recorded origin")]
    MissingOrigin { crossing: CrossingId },
    #[error("origin {origin} is claimed twice or is out of range")]
    BadOrigin { origin: CrossingId },
    #[error("original edge at dart {dart} lies on a strand without original crossings")]
    OrphanStrand { dart: Dart },
    #[error("restriction is not a valid diagram: {0}")]
    Diagram(#[from] DiagramError),
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Role {
    Kept,
    Transit,
}

fn crossing_role(d: &Diagram, c: CrossingId) -> Result<Role, VerifyError> {
    let originals: Vec<bool> = (0..4).map(|s| d.tag_of(Dart::new(c, s)) == Tag::Original).collect();
    let degree = originals.iter().filter(|&&o| o).count();
    match degree {
        4 => Ok(Role::Kept),
        2 if originals[0] == originals[2] => Ok(Role::Transit),
        _ => Err(VerifyError::DegreeViolation { crossing: c, degree }),
    }
}

/// Deletes augmenting edges and smooths the crossings they leave with two
/// original ends. Surviving crossings are renumbered by their recorded origin.
pub fn restriction(aug: &AugmentedDiagram) -> Result<Diagram, VerifyError> {
    let d = aug.diagram();
    let roles = (0..d.crossing_count()).map(|c| crossing_role(d, c)).collect::<Result<Vec<_>, _>>()?;

    let kept: Vec<CrossingId> = (0..d.crossing_count()).filter(|&c| roles[c] == Role::Kept).collect();
    let mut new_id = vec![usize::MAX; d.crossing_count()];
    let mut claimed = vec![false; kept.len()];
    for &c in &kept {
        let origin = d.crossing(c).origin.ok_or(VerifyError::MissingOrigin { crossing: c })?;
        if origin >= kept.len() || claimed[origin] {
            return Err(VerifyError::BadOrigin { origin });
        }
        claimed[origin] = true;
        new_id[c] = origin;
    }

    let mut parts = DiagramParts {
        crossings: vec![*d.crossing(0); kept.len()],
        twin: vec![Dart(0); 4 * kept.len()],
        tags: vec![Tag::Original; 4 * kept.len()],
    };
    let mut reached = vec![false; d.dart_count()];
    for &c in &kept {
        parts.crossings[new_id[c]] = *d.crossing(c);
        for slot in 0..4 {
            let mut t = d.twin(Dart::new(c, slot));
            reached[t.0] = true;
            while roles[t.crossing()] == Role::Transit {
                t = d.twin(t.opposite());
                reached[t.0] = true;
            }
            parts.twin[4 * new_id[c] + slot] = Dart::new(new_id[t.crossing()], t.slot());
        }
    }
    if let Some(dart) = d.darts().find(|&x| d.tag_of(x) == Tag::Original && !reached[x.0]) {
        return Err(VerifyError::OrphanStrand { dart });
    }
    Ok(Diagram::from_parts(parts)?)
}

/// Outcome of checking a result against the input it claims to augment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub alternating: bool,
    pub planar: bool,
    pub connected: bool,
    pub circle_count: usize,
    pub expected_circles: usize,
    pub circle_simple: bool,
    pub restriction_ok: bool,
    pub crossing_accounting_ok: bool,
    pub details: Vec<String>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.alternating
            && self.planar
            && self.connected
            && self.circle_simple
            && self.restriction_ok
            && self.crossing_accounting_ok
            && self.circle_count == self.expected_circles
    }

    /// Names of the failing checks, in field order.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        for (ok, name) in [
            (self.alternating, "alternating"),
            (self.planar, "planar"),
            (self.connected, "connected"),
            (self.circle_count == self.expected_circles, "circle_count"),
            (self.circle_simple, "circle_simple"),
            (self.restriction_ok, "restriction_ok"),
            (self.crossing_accounting_ok, "crossing_accounting_ok"),
        ] {
            if !ok {
                out.push(name);
            }
        }
        out
    }
}

fn over(d: &Diagram, dart: Dart) -> bool {
    d.crossing(dart.crossing()).over.contains(dart.slot())
}

fn count_non_alternating(d: &Diagram) -> usize {
    d.darts().filter(|&x| x < d.twin(x) && over(d, x) == over(d, d.twin(x))).count()
}

/// Checks `result` against `original`. Never fails: every problem becomes a
/// `false` field plus a line in `details`.
pub fn verify(original: &Diagram, result: &AugmentedDiagram, expected_circles: usize) -> Report {
    let d = result.diagram();
    let mut details = Vec::new();

    let bad_edges: Vec<Dart> =
        d.darts().filter(|&x| x < d.twin(x) && over(d, x) == over(d, d.twin(x))).collect();
    let alternating = bad_edges.is_empty();
    if !alternating {
        details.push(format!("{} non-alternating edge(s), first at dart {}", bad_edges.len(), bad_edges[0]));
    }

    // Face orbits of d -> next(twin(d)).
    let n = d.dart_count();
    let mut seen = vec![false; n];
    let mut faces = 0i64;
    for start in 0..n {
        if !seen[start] {
            faces += 1;
            let mut x = Dart(start);
            while !seen[x.0] {
                seen[x.0] = true;
                x = d.twin(x).next();
            }
        }
    }
    let euler = d.crossing_count() as i64 - (n / 2) as i64 + faces;
    let planar = euler == 2;
    if !planar {
        details.push(format!("V - E + F = {euler}"));
    }

    let mut reached = vec![false; d.crossing_count()];
    let mut stack = vec![0];
    reached[0] = true;
    while let Some(c) = stack.pop() {
        for s in 0..4 {
            let next = d.twin(Dart::new(c, s)).crossing();
            if !reached[next] {
                reached[next] = true;
                stack.push(next);
            }
        }
    }
    let connected = reached.iter().all(|&r| r);
    if !connected {
        details.push("crossings are not all reachable from crossing 0".into());
    }

    // Augmenting strands: each must be closed within augmenting edges and
    // must never meet another augmenting strand at a crossing.
    let mut circle_simple = true;
    let mut circle_count = 0;
    let mut walked = vec![false; n];
    for start in d.darts().filter(|&x| d.tag_of(x) == Tag::Augment) {
        if walked[start.0] {
            continue;
        }
        circle_count += 1;
        let mut x = start;
        loop {
            walked[x.0] = true;
            walked[d.twin(x).0] = true;
            x = d.twin(x).opposite();
            if d.tag_of(x) != Tag::Augment {
                circle_simple = false;
                details.push(format!("augmenting strand continues into original edge at dart {x}"));
                break;
            }
            if x == start {
                break;
            }
        }
    }
    for c in 0..d.crossing_count() {
        let aug = |s| d.tag_of(Dart::new(c, s)) == Tag::Augment;
        if (aug(0) || aug(2)) && (aug(1) || aug(3)) {
            circle_simple = false;
            details.push(format!("crossing {c} has augmenting edges on both strands"));
        }
    }
    if circle_count != expected_circles {
        details.push(format!("{circle_count} augmenting circle(s), expected {expected_circles}"));
    }

    let restriction_ok = match restriction(result) {
        Ok(r) if &r == original => true,
        Ok(_) => {
            details.push("restriction differs from the original diagram".into());
            false
        }
        Err(e) => {
            details.push(format!("restriction failed: {e}"));
            false
        }
    };

    let added = d.crossing_count() as i64 - original.crossing_count() as i64;
    let midpoints = count_non_alternating(original) as i64;
    let mut crossing_accounting_ok = added >= midpoints && (added - midpoints) % 2 == 0;
    if let Some(log) = result.log() {
        crossing_accounting_ok &= added == midpoints + 2 * log.type_ii as i64;
    }
    if !crossing_accounting_ok {
        details.push(format!(
            "{added} added crossing(s) for {midpoints} non-alternating edge(s) and {} push(es)",
            result.log().map_or("unknown".to_string(), |l| l.type_ii.to_string())
        ));
    }

    Report {
        alternating,
        planar,
        connected,
        circle_count,
        expected_circles,
        circle_simple,
        restriction_ok,
        crossing_accounting_ok,
        details,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::augment::augment_regions;
    use crate::fixtures::{diagram, FLIPPED_TREFOIL, TREFOIL};

    #[test]
    fn restriction_of_plain_diagram_is_identity() {
        let d = diagram(&TREFOIL);
        let a = AugmentedDiagram::new(d.clone(), None);
        assert_eq!(restriction(&a).unwrap(), d);
        assert!(verify(&d, &a, 0).all_pass());
    }

    #[test]
    fn restriction_undoes_augmentation() {
        let d = diagram(&FLIPPED_TREFOIL);
        let a = augment_regions(&d).unwrap();
        assert_eq!(restriction(&a).unwrap(), d);
    }

    #[test]
    fn toggled_midpoint_breaks_alternation() {
        let d = diagram(&FLIPPED_TREFOIL);
        let a = augment_regions(&d).unwrap();
        let mut parts = a.diagram().to_parts();
        parts.crossings[3].over = parts.crossings[3].over.flipped();
        let tampered = AugmentedDiagram::new(Diagram::from_parts(parts).unwrap(), a.log().cloned());
        let r = verify(&d, &tampered, a.circles().len());
        assert!(!r.alternating);
        assert!(r.restriction_ok);
        assert!(!r.all_pass());
    }

    #[test]
    fn toggled_original_crossing_breaks_restriction() {
        let d = diagram(&FLIPPED_TREFOIL);
        let a = augment_regions(&d).unwrap();
        let mut parts = a.diagram().to_parts();
        parts.crossings[1].over = parts.crossings[1].over.flipped();
        let tampered = AugmentedDiagram::new(Diagram::from_parts(parts).unwrap(), a.log().cloned());
        assert!(!verify(&d, &tampered, a.circles().len()).restriction_ok);
    }

    #[test]
    fn degree_violation_is_reported() {
        let d = diagram(&FLIPPED_TREFOIL);
        let a = augment_regions(&d).unwrap();
        let mut parts = a.diagram().to_parts();
        let x = Dart::new(0, 0);
        let t = parts.twin[x.0];
        parts.tags[x.0] = Tag::Augment;
        parts.tags[t.0] = Tag::Augment;
        let tampered = AugmentedDiagram::new(Diagram::from_parts(parts).unwrap(), None);
        assert!(matches!(restriction(&tampered), Err(VerifyError::DegreeViolation { .. })));
        let r = verify(&d, &tampered, a.circles().len());
        assert!(!r.restriction_ok && !r.all_pass());
    }
}
