//! Alternating augmentations of connected link projections.
//!
//! Given a connected, non-alternating link projection, [`augment::augment_regions`]
//! weaves unknotted circles through the midpoints of its non-alternating edges
//! so that the result is alternating, and [`merge::merge_all`] fuses those
//! circles into a single unknotted component using two alternation-preserving
//! rewrites ([`moves::type_i_merge`] and [`moves::type_ii_push`]). The
//! [`verify`] module re-checks every claimed property of the output from
//! scratch.
//!
//! ```
//! use alternator::{codec, merge, verify};
//!
//! let flipped = codec::parse_pd("X[4,2,5,1] X[3,6,4,1] X[5,2,6,3]").unwrap();
//! assert!(!flipped.is_alternating());
//!
//! let result = merge::full_pipeline(&flipped).unwrap();
//! assert!(result.diagram().is_alternating());
//! assert_eq!(result.circles().len(), 1);
//!
//! let report = verify::verify(&flipped, &result, 1);
//! assert!(report.all_pass());
//! ```

pub mod augment;
pub mod codec;
pub mod diagram;
pub mod gen;
pub mod merge;
pub mod moves;
pub mod samples;
pub mod verify;

pub use augment::{AugmentedDiagram, Circle, CircleId, MoveLog};
pub use diagram::{
    build_diagram, trace_faces, Axis, Crossing, CrossingId, Dart, Diagram, DiagramError, DiagramParts, Edge,
    EdgeClass, EdgeId, EdgeLabelPair, Face, FaceId, Sign, Tag, TagFilter,
};
pub use verify::Report;

#[cfg(test)]
pub(crate) mod fixtures {
    use crate::{build_diagram, Diagram, Tag};

    pub const TREFOIL: [[u64; 4]; 3] = [[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]];
    pub const FLIPPED_TREFOIL: [[u64; 4]; 3] = [[4, 2, 5, 1], [3, 6, 4, 1], [5, 2, 6, 3]];

    pub fn diagram(tuples: &[[u64; 4]]) -> Diagram {
        build_diagram(tuples, |_| Tag::Original).unwrap()
    }
}
