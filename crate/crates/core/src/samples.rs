//! Named PD codes used by tests, the CLI and the demo page.
//!
//! The composite and eight-crossing entries are closures of three-strand
//! braids; the word is given next to each.

/// Standard alternating trefoil.
pub const TREFOIL: &str = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";

/// The trefoil with its first crossing switched. Edges 1 and 2 become `++`,
/// edges 4 and 5 become `--`.
pub const FLIPPED_TREFOIL: &str = "X[4,2,5,1] X[3,6,4,1] X[5,2,6,3]";

/// `s1^3 s2^3`: the granny knot.
pub const GRANNY: &str = "X[1,9,12,10] X[9,11,8,12] X[11,7,10,8] X[4,6,3,7] X[6,2,5,3] X[2,4,1,5]";

/// `s1^3 s2^-3`: the square knot.
pub const SQUARE: &str = "X[1,9,12,10] X[9,11,8,12] X[11,7,10,8] X[7,4,6,3] X[3,6,2,5] X[5,2,4,1]";

/// `s1^3 s2 s1^3 s2`, determinant 3.
pub const KNOT_8_19: &str =
    "X[1,5,16,6] X[5,15,4,16] X[15,3,14,4] X[10,2,9,3] X[9,13,8,14] X[13,7,12,8] X[7,11,6,12] X[2,10,1,11]";

/// `s1^3 s2^-1 s1^-3 s2^-1`, determinant 9.
pub const KNOT_8_20: &str =
    "X[1,5,16,6] X[5,15,4,16] X[15,3,14,4] X[3,10,2,9] X[14,9,13,8] X[8,13,7,12] X[12,7,11,6] X[11,2,10,1]";

/// `s1^-3 s2^-1 s1^2 s2^-2`, determinant 15.
pub const KNOT_8_21: &str =
    "X[1,6,16,5] X[5,16,4,15] X[15,4,14,3] X[14,11,13,10] X[10,2,9,3] X[2,8,1,9] X[8,13,7,12] X[12,7,11,6]";

/// `s1 s3^-1 s2^-1 s4^-1 s3^-2` on five strands. Augmenting it gives two
/// circles of two edges each with a face in common.
pub const TWO_CIRCLES: &str = "X[1,11,12,12] X[8,3,7,2] X[11,2,10,1] X[7,6,6,5] X[10,5,9,4] X[4,9,3,8]";

pub const ALL: &[(&str, &str)] = &[
    ("trefoil", TREFOIL),
    ("flipped-trefoil", FLIPPED_TREFOIL),
    ("granny", GRANNY),
    ("square", SQUARE),
    ("8_19", KNOT_8_19),
    ("8_20", KNOT_8_20),
    ("8_21", KNOT_8_21),
    ("two-circles", TWO_CIRCLES),
];

pub fn by_name(name: &str) -> Option<&'static str> {
    ALL.iter().find(|(n, _)| *n == name).map(|(_, pd)| *pd)
}
