//! Text formats: PD codes, the `alternator/1` JSON document and a DOT export.

mod dot;
mod json;
mod pd;

pub use dot::emit_dot;
pub use json::{emit_json, parse_json, Document, JsonError, FORMAT};
pub use pd::{emit_pd, parse_augmented_pd, parse_pd, ParseError, PdCode};
