//! Reducing the augmenting circles to one.
//!
//! Cutting the sphere along all augmenting circles leaves components, each a
//! union of faces glued across original edges. While two or more circles
//! remain, some component is bounded by at least two of them. One of those
//! circles is pushed across original edges along a shortest face path with
//! [`type_ii_push`](crate::moves::type_ii_push) until it shares a face with
//! the other, and the two are then band-summed with
//! [`type_i_merge`].

use std::collections::VecDeque;

use thiserror::Error;

use crate::augment::{augment_regions, AugmentError, AugmentedDiagram, CircleId};
use crate::codec::emit_pd;
use crate::diagram::{Dart, Diagram, FaceId, Tag};
use crate::moves::{push, type_i_merge, MoveError, MoveSite};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MergeError {
    /// Should not happen. Carries the offending diagram as PD text.
    #[error("{circles} circle(s) present but no component is bounded by two of them: {pd}")]
    NoMergeableComponent { circles: usize, pd: String },
    #[error("fewer than two circles; nothing to merge")]
    NothingToMerge,
    #[error("no face path from circle {from} to circle {target} inside component {component}")]
    NoPath { component: usize, from: CircleId, target: CircleId },
    #[error(transparent)]
    Augment(#[from] AugmentError),
    #[error(transparent)]
    Move(#[from] MoveError),
}

/// A component of the sphere cut along the augmenting circles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub id: usize,
    /// Ascending face ids.
    pub faces: Vec<FaceId>,
    /// Circles with an arc on the boundary of one of the faces, ascending.
    pub circles: Vec<CircleId>,
}

/// A walk through the faces of one component, crossing one original edge
/// per step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualPath {
    pub faces: Vec<FaceId>,
    /// `steps[i]` is the dart of the crossed edge lying in `faces[i]`.
    pub steps: Vec<Dart>,
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

pub fn components(aug: &AugmentedDiagram) -> Vec<Component> {
    let d = aug.diagram();
    let mut parent: Vec<usize> = (0..d.face_count()).collect();
    for edge in d.edges().iter().filter(|e| e.tag == Tag::Original) {
        let a = find(&mut parent, d.face_of(edge.darts[0]));
        let b = find(&mut parent, d.face_of(edge.darts[1]));
        // Keep the smaller face as root so component order follows face order.
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        parent[hi] = lo;
    }

    let mut index_of_root = vec![usize::MAX; d.face_count()];
    let mut out: Vec<Component> = Vec::new();
    let mut component_of_face = Vec::with_capacity(d.face_count());
    for f in 0..d.face_count() {
        let root = find(&mut parent, f);
        if index_of_root[root] == usize::MAX {
            index_of_root[root] = out.len();
            out.push(Component { id: out.len(), faces: Vec::new(), circles: Vec::new() });
        }
        let id = index_of_root[root];
        out[id].faces.push(f);
        component_of_face.push(id);
    }
    for dart in d.darts() {
        if let Some(circle) = aug.circle_of_dart(dart) {
            out[component_of_face[d.face_of(dart)]].circles.push(circle);
        }
    }
    for c in &mut out {
        c.circles.sort_unstable();
        c.circles.dedup();
    }
    out
}

fn touches(aug: &AugmentedDiagram, face: FaceId, circle: CircleId) -> bool {
    aug.diagram().face(face).darts.iter().any(|&x| aug.circle_of_dart(x) == Some(circle))
}

/// Breadth-first search over the faces of `component`, from the faces touching
/// `source` to the first face touching `target`.
pub fn find_dual_path(
    aug: &AugmentedDiagram,
    component: &Component,
    source: CircleId,
    target: CircleId,
) -> Result<DualPath, MergeError> {
    let d = aug.diagram();
    let no_path = MergeError::NoPath { component: component.id, from: source, target };
    let starts: Vec<FaceId> = component.faces.iter().copied().filter(|&f| touches(aug, f, source)).collect();
    if let Some(&f) = starts.iter().find(|&&f| touches(aug, f, target)) {
        return Ok(DualPath { faces: vec![f], steps: Vec::new() });
    }

    let mut came_from: Vec<Option<(FaceId, Dart)>> = vec![None; d.face_count()];
    let mut visited = vec![false; d.face_count()];
    let mut queue = VecDeque::new();
    for &f in &starts {
        visited[f] = true;
        queue.push_back(f);
    }
    while let Some(f) = queue.pop_front() {
        let mut darts = d.face(f).darts.clone();
        darts.sort_unstable();
        for dart in darts.into_iter().filter(|&x| d.tag_of(x) == Tag::Original) {
            let g = d.face_of(d.twin(dart));
            if visited[g] {
                continue;
            }
            visited[g] = true;
            came_from[g] = Some((f, dart));
            if touches(aug, g, target) {
                let mut faces = vec![g];
                let mut steps = Vec::new();
                let mut cur = g;
                while let Some((prev, step)) = came_from[cur] {
                    faces.push(prev);
                    steps.push(step);
                    cur = prev;
                }
                faces.reverse();
                steps.reverse();
                return Ok(DualPath { faces, steps });
            }
            queue.push_back(g);
        }
    }
    Err(no_path)
}

/// Smallest face shared by the circles through `a` and `b`, with the smallest
/// dart of each circle on it.
fn shared_face(aug: &AugmentedDiagram, a: Dart, b: Dart) -> Option<MoveSite> {
    let (ca, cb) = (aug.circle_of_dart(a)?, aug.circle_of_dart(b)?);
    aug.diagram().faces().iter().find_map(|face| {
        let pick = |c| face.darts.iter().copied().filter(|&x| aug.circle_of_dart(x) == Some(c)).min();
        Some(MoveSite { face: face.id, a: pick(ca)?, b: pick(cb)? })
    })
}

/// Fuses two circles bounding a common component into one.
pub fn merge_once(aug: &AugmentedDiagram) -> Result<AugmentedDiagram, MergeError> {
    let circles = aug.circles().len();
    if circles < 2 {
        return Err(MergeError::NothingToMerge);
    }
    let comps = components(aug);
    let comp = comps
        .iter()
        .find(|c| c.circles.len() >= 2)
        .ok_or_else(|| MergeError::NoMergeableComponent { circles, pd: emit_pd(aug.diagram()) })?;
    let (source, target) = (comp.circles[0], comp.circles[1]);
    let path = find_dual_path(aug, comp, source, target)?;

    // Dart ids of untouched edges survive rewrites, so one dart of the target
    // keeps naming it while the source is pushed.
    let anchor = aug.circles()[target].darts[0];
    let mut lead = aug
        .diagram()
        .face(path.faces[0])
        .darts
        .iter()
        .copied()
        .filter(|&x| aug.circle_of_dart(x) == Some(source))
        .min()
        .expect("source circle touches the first path face");

    let mut current = aug.clone();
    for &step in &path.steps {
        if shared_face(&current, lead, anchor).is_some() {
            break;
        }
        let face = current.diagram().face_of(lead);
        let (next, tip) = push(&current, MoveSite { face, a: lead, b: step })?;
        current = next;
        lead = tip;
    }
    let site = shared_face(&current, lead, anchor).ok_or(MergeError::NoPath {
        component: comp.id,
        from: source,
        target,
    })?;
    let merged = type_i_merge(&current, site)?;
    debug_assert_eq!(merged.circles().len() + 1, circles);
    Ok(merged)
}

/// Merges until at most one circle is left.
pub fn merge_all(aug: &AugmentedDiagram) -> Result<AugmentedDiagram, MergeError> {
    let mut current = aug.clone();
    while current.circles().len() >= 2 {
        current = merge_once(&current)?;
    }
    Ok(current)
}

/// Augments `diagram` and merges the circles into a single component.
pub fn full_pipeline(diagram: &Diagram) -> Result<AugmentedDiagram, MergeError> {
    let augmented = augment_regions(diagram)?;
    merge_all(&augmented)
}
