//! Command implementations behind the `alternator` binary.
//!
//! Every command takes its whole input as text and returns an [`Output`]
//! holding what would go to stdout and stderr plus the exit code, so the
//! binary is a thin shell around these functions.
//!
//! Input is a stream of records, one per non-empty line. Lines holding only
//! a comment are skipped. JSON input is a sequence of documents instead.

use std::fmt::Write as _;

use alternator::augment::{augment_regions, region_incidences};
use alternator::codec::{emit_dot, emit_pd, Document, PdCode};
use alternator::gen::random_diagram;
use alternator::merge::full_pipeline;
use alternator::verify::verify;
use alternator::{AugmentedDiagram, Diagram, Report, Sign, Tag};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_STRICT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "alternator", version, about = "Alternating augmentations of link projections")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Classify edges and list the non-alternating incidences of every face.
    Label {
        /// Input file; standard input when absent or `-`.
        input: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Pd)]
        format: Format,
    },
    /// Augment each diagram and merge its augmenting circles into one.
    Run(RunArgs),
    /// Emit closures of seeded random braid words.
    Gen(GenArgs),
    /// Check results against the diagrams they claim to augment.
    Verify {
        original: String,
        /// Results as PD or JSON; standard input when absent or `-`.
        result: Option<String>,
        /// Expected number of augmenting circles. Defaults to 0 for
        /// alternating originals and 1 otherwise.
        #[arg(long)]
        circles: Option<usize>,
    },
}

#[derive(Args, Debug, Clone, Default)]
pub struct RunArgs {
    /// Input file; standard input when absent or `-`.
    pub input: Option<String>,
    /// Stop after augmentation and keep every circle.
    #[arg(long)]
    pub no_merge: bool,
    #[arg(long, value_enum, default_value_t = Format::Pd)]
    pub format: Format,
    /// Attach a verification report and exit 1 if any check fails.
    #[arg(long)]
    pub verify: bool,
    /// Reject already alternating input with exit code 3.
    #[arg(long)]
    pub strict: bool,
    /// Also write every result as a DOT graph to this file.
    #[arg(long, value_name = "PATH")]
    pub emit_graph: Option<String>,
}

#[derive(Args, Debug, Clone)]
pub struct GenArgs {
    #[arg(long, default_value_t = 3)]
    pub strands: usize,
    #[arg(long, default_value_t = 10)]
    pub length: usize,
    #[arg(long, default_value_t = 1)]
    pub count: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Pd)]
    pub format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Pd,
    Json,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
    /// DOT text requested with `--emit-graph`.
    pub graph: Option<String>,
}

impl Output {
    fn error(&mut self, line: usize, message: impl std::fmt::Display) {
        let _ = writeln!(self.stderr, "error: line {line}: {message}");
        self.code = EXIT_INPUT;
    }

    fn fail(&mut self) {
        if self.code != EXIT_INPUT {
            self.code = EXIT_VERIFY;
        }
    }

    fn strict(&mut self) {
        if self.code == EXIT_OK {
            self.code = EXIT_STRICT;
        }
    }
}

/// A record with its one-based line number in the input.
#[derive(Debug)]
struct Record {
    line: usize,
    diagram: AugmentedDiagram,
    /// Input label of every edge, when the record was PD text.
    labels: Option<Vec<u64>>,
}

fn is_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

/// Splits `text` into records. Bad records are reported and skipped.
fn read_records(text: &str, out: &mut Output) -> Vec<Record> {
    let mut records = Vec::new();
    if is_json(text) {
        let mut stream = serde_json::Deserializer::from_str(text).into_iter::<Document>();
        loop {
            let offset = stream.byte_offset();
            let line = 1 + text[..offset].matches('\n').count();
            match stream.next() {
                None => break,
                Some(Ok(doc)) => match doc.to_augmented() {
                    Ok(diagram) => records.push(Record { line, diagram, labels: None }),
                    Err(e) => out.error(line, e),
                },
                Some(Err(e)) => {
                    out.error(e.line(), e);
                    break;
                }
            }
        }
        return records;
    }
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let line = i + 1;
        let parsed = PdCode::parse(raw).and_then(|code| {
            let d = code.to_diagram()?;
            let labels = code.labels(&d);
            Ok((d, labels))
        });
        match parsed {
            Ok((d, labels)) => {
                records.push(Record { line, diagram: AugmentedDiagram::new(d, None), labels: Some(labels) })
            }
            Err(e) => {
                let (_, column) = e.location();
                let message = e.to_string();
                let message = message.split_once(": ").map_or(message.as_str(), |(_, m)| m);
                out.error(line, format_args!("column {column}: {message}"));
            }
        }
    }
    records
}

fn original_of(record: &Record, out: &mut Output) -> Option<Diagram> {
    let d = record.diagram.diagram();
    if d.darts().any(|x| d.tag_of(x) == Tag::Augment) {
        out.error(record.line, "input already carries augmenting edges");
        return None;
    }
    Some(d.clone())
}

fn sign_str(s: Sign) -> &'static str {
    match s {
        Sign::Plus => "+",
        Sign::Minus => "-",
    }
}

pub fn cmd_label(text: &str, format: Format) -> Output {
    let mut out = Output::default();
    for record in read_records(text, &mut out) {
        let Some(d) = original_of(&record, &mut out) else { continue };
        let name = |e: usize| record.labels.as_ref().map_or(e as u64, |l| l[e]);
        let nonalt = d.non_alternating_edges();
        let mut faces = Vec::new();
        for face in d.faces() {
            match region_incidences(&d, face.id) {
                Ok(inc) => faces.push(inc.iter().map(|i| (name(i.edge), i.sign)).collect::<Vec<_>>()),
                Err(e) => {
                    out.error(record.line, e);
                    faces.clear();
                    break;
                }
            }
        }
        match format {
            Format::Pd => {
                let _ = writeln!(
                    out.stdout,
                    "alternating: {}, non-alternating edges: {}",
                    nonalt.is_empty(),
                    nonalt.len()
                );
                let mut edges: Vec<usize> = (0..d.edge_count()).collect();
                edges.sort_by_key(|&e| name(e));
                for e in edges {
                    let ends = d.edge_labels(e).ends;
                    let _ = writeln!(
                        out.stdout,
                        "  edge {}: {}{}",
                        name(e),
                        sign_str(ends[0]),
                        sign_str(ends[1])
                    );
                }
                for (f, inc) in faces.iter().enumerate() {
                    let seq: Vec<String> = inc.iter().map(|(e, s)| format!("{e}{}", sign_str(*s))).collect();
                    let _ = writeln!(out.stdout, "  face {f}: {}", seq.join(" "));
                }
            }
            Format::Json => {
                let mut edges: Vec<usize> = (0..d.edge_count()).collect();
                edges.sort_by_key(|&e| name(e));
                let edges: Vec<_> = edges
                    .into_iter()
                    .map(|e| {
                        let l = d.edge_labels(e);
                        json!({ "label": name(e), "ends": l.ends, "class": l.class })
                    })
                    .collect();
                let faces: Vec<_> = faces
                    .iter()
                    .map(|inc| inc.iter().map(|(e, s)| json!([e, s])).collect::<Vec<_>>())
                    .collect();
                let mut nonalt_labels: Vec<u64> = nonalt.iter().map(|&e| name(e)).collect();
                nonalt_labels.sort_unstable();
                let doc = json!({
                    "alternating": nonalt.is_empty(),
                    "non_alternating_edges": nonalt_labels,
                    "edges": edges,
                    "faces": faces,
                });
                let _ = writeln!(out.stdout, "{doc}");
            }
        }
    }
    out
}

fn emit(aug: &AugmentedDiagram, report: Option<&Report>, format: Format) -> String {
    match format {
        Format::Pd => match report {
            Some(r) => format!("{} # verify: {}", emit_pd(aug.diagram()), serde_json::to_string(r).unwrap()),
            None => emit_pd(aug.diagram()),
        },
        Format::Json => serde_json::to_string(&Document::new(aug, report)).expect("document serializes"),
    }
}

pub fn cmd_run(text: &str, args: &RunArgs) -> Output {
    let mut out = Output::default();
    let mut graphs = String::new();
    for record in read_records(text, &mut out) {
        let Some(d) = original_of(&record, &mut out) else { continue };
        let line = record.line;
        if d.is_alternating() {
            if args.strict {
                let _ = writeln!(out.stderr, "error: line {line}: input is already alternating");
                out.strict();
                continue;
            }
            let _ = writeln!(out.stderr, "notice: line {line}: input is already alternating, passed through");
        }
        let result = if args.no_merge {
            augment_regions(&d).map_err(|e| e.to_string())
        } else {
            full_pipeline(&d).map_err(|e| e.to_string())
        };
        let aug = match result {
            Ok(a) => a,
            Err(e) => {
                let _ = writeln!(out.stderr, "error: line {line}: {e}");
                out.fail();
                continue;
            }
        };
        let report = args.verify.then(|| {
            let expected = if args.no_merge { aug.circles().len() } else { usize::from(!d.is_alternating()) };
            verify(&d, &aug, expected)
        });
        if let Some(r) = report.as_ref().filter(|r| !r.all_pass()) {
            let _ =
                writeln!(out.stderr, "error: line {line}: verification failed: {}", r.failures().join(", "));
            out.fail();
        }
        out.stdout.push_str(&emit(&aug, report.as_ref(), args.format));
        out.stdout.push('\n');
        if args.emit_graph.is_some() {
            graphs.push_str(&emit_dot(aug.diagram()));
        }
    }
    if args.emit_graph.is_some() {
        out.graph = Some(graphs);
    }
    out
}

pub fn cmd_gen(args: &GenArgs) -> Output {
    let mut out = Output::default();
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    for _ in 0..args.count {
        match random_diagram(args.strands, args.length, rng.gen()) {
            Ok(d) => {
                out.stdout.push_str(&emit(&AugmentedDiagram::new(d, None), None, args.format));
                out.stdout.push('\n');
            }
            Err(e) => {
                let _ = writeln!(out.stderr, "error: {e}");
                out.code = EXIT_INPUT;
                break;
            }
        }
    }
    out
}

pub fn cmd_verify(original: &str, result: &str, circles: Option<usize>) -> Output {
    let mut out = Output::default();
    let originals = read_records(original, &mut out);
    let results = read_records(result, &mut out);
    if out.code == EXIT_INPUT {
        return out;
    }
    if originals.len() != results.len() {
        let _ = writeln!(
            out.stderr,
            "error: {} original record(s) but {} result record(s)",
            originals.len(),
            results.len()
        );
        out.code = EXIT_INPUT;
        return out;
    }
    for (o, r) in originals.iter().zip(&results) {
        let Some(d) = original_of(o, &mut out) else { continue };
        let expected = circles.unwrap_or(usize::from(!d.is_alternating()));
        let report = verify(&d, &r.diagram, expected);
        if !report.all_pass() {
            let _ = writeln!(
                out.stderr,
                "error: result line {}: verification failed: {}",
                r.line,
                report.failures().join(", ")
            );
            out.fail();
        }
        let _ = writeln!(out.stdout, "{}", serde_json::to_string(&report).unwrap());
    }
    out
}
