//! PD-code text.
//!
//! ```text
//! pd       ::= crossing+ annotation?
//! crossing ::= "X[" int "," int "," int "," int "]"
//! annotation ::= "A{" (int ((","|";") int)*)? "}"
//! ```
//!
//! Whitespace and commas may separate items and `#` starts a comment that
//! runs to the end of the line. Each tuple lists edge labels counterclockwise;
//! the strand through the first and third entries passes under. Labels in the
//! annotation block belong to augmenting circles, with `;` separating circles.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::augment::AugmentedDiagram;
use crate::diagram::{build_diagram, Axis, Dart, Diagram, DiagramError, EdgeId, Tag, TagFilter};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("{line}:{column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{line}:{column}: {source}")]
    Build {
        line: usize,
        column: usize,
        #[source]
        source: DiagramError,
    },
    #[error("{line}:{column}: augmenting label {label} does not name an edge")]
    UnknownLabel { line: usize, column: usize, label: u64 },
}

impl ParseError {
    /// One-based line and column of the offending input.
    pub fn location(&self) -> (usize, usize) {
        match *self {
            ParseError::Syntax { line, column, .. }
            | ParseError::Build { line, column, .. }
            | ParseError::UnknownLabel { line, column, .. } => (line, column),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct Pos {
    line: usize,
    column: usize,
}

/// A parsed PD code, before any structural validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PdCode {
    pub crossings: Vec<[u64; 4]>,
    /// Augmenting edge labels, grouped as written.
    pub augment: Vec<Vec<u64>>,
    label_pos: Vec<[Pos; 4]>,
    augment_pos: Vec<Vec<Pos>>,
}

struct Cursor<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    pos: Pos,
}

impl Cursor<'_> {
    fn peek(&mut self) -> Option<char> {
        self.chars.peek().copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.pos.line += 1;
            self.pos.column = 1;
        } else {
            self.pos.column += 1;
        }
        Some(c)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { line: self.pos.line, column: self.pos.column, message: message.into() })
    }

    fn skip_blank(&mut self) {
        while let Some(c) = self.peek() {
            if c == '#' {
                while self.peek().is_some_and(|c| c != '\n') {
                    self.bump();
                }
            } else if c.is_whitespace() {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn skip_separators(&mut self) {
        loop {
            self.skip_blank();
            if self.peek() == Some(',') {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn expect(&mut self, want: char) -> Result<(), ParseError> {
        self.skip_blank();
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => self.error(format!("expected `{want}`, found `{c}`")),
            None => self.error(format!("expected `{want}`, found end of input")),
        }
    }

    fn label(&mut self) -> Result<(u64, Pos), ParseError> {
        self.skip_blank();
        let start = self.pos;
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.bump();
        }
        if digits.is_empty() {
            return match self.peek() {
                Some(c) => self.error(format!("expected an edge label, found `{c}`")),
                None => self.error("expected an edge label, found end of input"),
            };
        }
        match digits.parse::<u64>() {
            Ok(0) => Err(ParseError::Syntax {
                line: start.line,
                column: start.column,
                message: "edge labels must be positive".into(),
            }),
            Ok(n) => Ok((n, start)),
            Err(_) => Err(ParseError::Syntax {
                line: start.line,
                column: start.column,
                message: format!("edge label `{digits}` is too large"),
            }),
        }
    }
}

impl PdCode {
    pub fn parse(text: &str) -> Result<PdCode, ParseError> {
        let mut cur = Cursor { chars: text.chars().peekable(), pos: Pos { line: 1, column: 1 } };
        let mut code = PdCode {
            crossings: Vec::new(),
            augment: Vec::new(),
            label_pos: Vec::new(),
            augment_pos: Vec::new(),
        };
        let mut annotated = false;
        loop {
            cur.skip_separators();
            match cur.peek() {
                None => break,
                Some(_) if annotated => return cur.error("nothing may follow the `A{...}` block"),
                Some('X') => {
                    cur.bump();
                    cur.expect('[')?;
                    let mut tuple = [0; 4];
                    let mut pos = [Pos::default(); 4];
                    for i in 0..4 {
                        if i > 0 {
                            cur.expect(',')?;
                        }
                        (tuple[i], pos[i]) = cur.label()?;
                    }
                    cur.expect(']')?;
                    code.crossings.push(tuple);
                    code.label_pos.push(pos);
                }
                Some('A') => {
                    cur.bump();
                    cur.expect('{')?;
                    annotated = true;
                    let mut group = Vec::new();
                    let mut group_pos = Vec::new();
                    cur.skip_blank();
                    if cur.peek() != Some('}') {
                        loop {
                            let (label, pos) = cur.label()?;
                            group.push(label);
                            group_pos.push(pos);
                            cur.skip_blank();
                            match cur.peek() {
                                Some(',') => {}
                                Some(';') => {
                                    code.augment.push(std::mem::take(&mut group));
                                    code.augment_pos.push(std::mem::take(&mut group_pos));
                                }
                                _ => break,
                            }
                            cur.bump();
                        }
                    }
                    cur.expect('}')?;
                    if !group.is_empty() {
                        code.augment.push(group);
                        code.augment_pos.push(group_pos);
                    }
                }
                Some(c) => return cur.error(format!("expected `X[` or `A{{`, found `{c}`")),
            }
        }
        if code.crossings.is_empty() {
            return cur.error("expected at least one crossing `X[a,b,c,d]`");
        }
        Ok(code)
    }

    /// Builds the diagram; labels named in the annotation block are tagged
    /// as augmenting.
    pub fn to_diagram(&self) -> Result<Diagram, ParseError> {
        let mut seen = BTreeSet::new();
        for tuple in &self.crossings {
            seen.extend(tuple.iter().copied());
        }
        let augment: BTreeSet<u64> = self.augment.iter().flatten().copied().collect();
        for (group, positions) in self.augment.iter().zip(&self.augment_pos) {
            for (&label, pos) in group.iter().zip(positions) {
                if !seen.contains(&label) {
                    return Err(ParseError::UnknownLabel { line: pos.line, column: pos.column, label });
                }
            }
        }
        build_diagram(&self.crossings, |l| if augment.contains(&l) { Tag::Augment } else { Tag::Original })
            .map_err(|source| {
                let at = match source {
                    DiagramError::DuplicateLabelArity { label, .. } => self.first_position(label),
                    _ => self.label_pos[0][0],
                };
                ParseError::Build { line: at.line, column: at.column, source }
            })
    }

    fn first_position(&self, label: u64) -> Pos {
        self.crossings
            .iter()
            .zip(&self.label_pos)
            .find_map(|(t, p)| t.iter().position(|&l| l == label).map(|i| p[i]))
            .unwrap_or_default()
    }

    /// Edge of `diagram` (built from this code) carrying `label`.
    pub fn edge_of_label(&self, diagram: &Diagram, label: u64) -> Option<EdgeId> {
        self.crossings
            .iter()
            .enumerate()
            .find_map(|(i, t)| t.iter().position(|&l| l == label).map(|s| diagram.edge_of(Dart::new(i, s))))
    }

    /// Input label of every edge of `diagram` (built from this code).
    pub fn labels(&self, diagram: &Diagram) -> Vec<u64> {
        let mut out = vec![0; diagram.edge_count()];
        for (i, t) in self.crossings.iter().enumerate() {
            for (s, &l) in t.iter().enumerate() {
                out[diagram.edge_of(Dart::new(i, s))] = l;
            }
        }
        out
    }
}

pub fn parse_pd(text: &str) -> Result<Diagram, ParseError> {
    PdCode::parse(text)?.to_diagram()
}

/// Parses a PD code with an optional annotation block into an augmented
/// diagram. Its move history is unknown.
pub fn parse_augmented_pd(text: &str) -> Result<AugmentedDiagram, ParseError> {
    Ok(AugmentedDiagram::new(parse_pd(text)?, None))
}

/// Canonical PD text.
///
/// Crossings keep their order. Edges are relabelled `1..=E` along strands,
/// each strand starting at its smallest dart, and tuples are rotated so the
/// under-strand comes first. The trailing `A{...}` block is always present.
pub fn emit_pd(diagram: &Diagram) -> String {
    let mut label = vec![0u64; diagram.edge_count()];
    let mut next = 1;
    for walk in diagram.strand_components(TagFilter::Any) {
        for dart in walk {
            label[diagram.edge_of(dart)] = next;
            next += 1;
        }
    }

    let mut out = String::new();
    for (c, crossing) in diagram.crossings().iter().enumerate() {
        let l = |s: usize| label[diagram.edge_of(Dart::new(c, s))];
        let t = match crossing.over {
            Axis::Odd => [l(0), l(1), l(2), l(3)],
            Axis::Even => [l(1), l(2), l(3), l(0)],
        };
        out.push_str(&format!("X[{},{},{},{}] ", t[0], t[1], t[2], t[3]));
    }

    let circles: Vec<String> = diagram
        .strand_components(TagFilter::Augment)
        .iter()
        .map(|walk| walk.iter().map(|&d| label[diagram.edge_of(d)].to_string()).collect::<Vec<_>>().join(","))
        .collect();
    out.push_str(&format!("A{{{}}}", circles.join(";")));
    out
}
