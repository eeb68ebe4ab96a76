//! Command-line front end: document loading and command dispatch.
//!
//! The `coxcenter` binary is a thin wrapper around [`dispatch`]; everything it prints comes
//! from here so the behaviour is testable without spawning processes.

mod document;

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;
use serde_json::json;

pub use document::{load_system, parse_system, Source, SystemDocument};

use crate::center::{center_with, check_theorem2, essential_subset};
use crate::engine::WordEngine;
use crate::error::CoxeterError;
use crate::finite_type::{classify_component, components, is_spherical, longest_element_with};
use crate::matrix::GenSet;
use crate::oracle::{
    ball_enumeration, brute_center, enumerate_group, gram_positive_definite, DEFAULT_BALL_RADIUS,
    DEFAULT_ENUMERATION_CAP,
};
use crate::word::{CanonicalElement, Word};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("declared rank {declared} but m has {rows} rows")]
    RankMismatch { declared: usize, rows: usize },
    #[error("names must list one distinct name per generator")]
    InvalidNames,
    #[error("invalid matrix: {0}")]
    Validation(#[from] CoxeterError),
}

/// Process exit codes.
pub mod exit {
    pub const SUCCESS: u8 = 0;
    pub const INVALID_INPUT: u8 = 1;
    pub const CAP_EXCEEDED: u8 = 2;
    pub const VERIFICATION_FAILED: u8 = 3;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Validate,
    Reduce,
    Mul,
    Inv,
    Descents,
    Components,
    Spherical,
    Longest,
    Essential,
    Center,
    Enumerate,
    Verify,
}

impl Command {
    pub const ALL: [Command; 12] = [
        Command::Validate,
        Command::Reduce,
        Command::Mul,
        Command::Inv,
        Command::Descents,
        Command::Components,
        Command::Spherical,
        Command::Longest,
        Command::Essential,
        Command::Center,
        Command::Enumerate,
        Command::Verify,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Reduce => "reduce",
            Command::Mul => "mul",
            Command::Inv => "inv",
            Command::Descents => "descents",
            Command::Components => "components",
            Command::Spherical => "spherical",
            Command::Longest => "longest",
            Command::Essential => "essential",
            Command::Center => "center",
            Command::Enumerate => "enumerate",
            Command::Verify => "verify",
        }
    }
}

impl FromStr for Command {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown command {s:?}"))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format {s:?}")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Flags {
    /// `--word` values in order; `mul` takes two.
    pub words: Vec<String>,
    pub subset: Option<String>,
    pub cap: usize,
    pub radius: usize,
    pub format: Format,
}

impl Default for Flags {
    fn default() -> Self {
        Flags {
            words: Vec::new(),
            subset: None,
            cap: DEFAULT_ENUMERATION_CAP,
            radius: DEFAULT_BALL_RADIUS,
            format: Format::Text,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn success(stdout: String) -> Self {
        Outcome {
            exit_code: exit::SUCCESS,
            stdout,
            stderr: String::new(),
        }
    }

    fn failure(exit_code: u8, message: impl std::fmt::Display) -> Self {
        Outcome {
            exit_code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

fn exit_code_for(e: &CoxeterError) -> u8 {
    match e {
        CoxeterError::CapExceeded { .. } => exit::CAP_EXCEEDED,
        _ => exit::INVALID_INPUT,
    }
}

/// Runs one command against a loaded document.
pub fn dispatch(command: Command, doc: &SystemDocument, flags: &Flags) -> Outcome {
    match run(command, doc, flags) {
        Ok(outcome) => outcome,
        Err(Failure::Usage(msg)) => Outcome::failure(exit::INVALID_INPUT, msg),
        Err(Failure::Library(e)) => Outcome::failure(exit_code_for(&e), e),
    }
}

enum Failure {
    Usage(String),
    Library(CoxeterError),
}

impl From<CoxeterError> for Failure {
    fn from(e: CoxeterError) -> Self {
        Failure::Library(e)
    }
}

fn parse_words(doc: &SystemDocument, flags: &Flags, expected: usize) -> Result<Vec<Word>, Failure> {
    if flags.words.len() != expected {
        return Err(Failure::Usage(format!(
            "expected {expected} --word argument(s), got {}",
            flags.words.len()
        )));
    }
    flags
        .words
        .iter()
        .map(|s| {
            let w: Word = s.parse().map_err(|e| Failure::Usage(format!("{e}")))?;
            w.validate(&doc.matrix)?;
            Ok(w)
        })
        .collect()
}

fn parse_subset(doc: &SystemDocument, flags: &Flags) -> Result<GenSet, Failure> {
    match &flags.subset {
        None => Ok(doc.matrix.generators()),
        Some(s) => {
            let w: Word = s.parse().map_err(|e| Failure::Usage(format!("{e}")))?;
            let set = w.letter_set();
            doc.matrix.check_subset(set)?;
            Ok(set)
        }
    }
}

fn indices(set: GenSet) -> Vec<usize> {
    set.iter().collect()
}

fn element_json(e: &CanonicalElement) -> serde_json::Value {
    json!(e.to_string())
}

fn render(flags: &Flags, text: String, value: serde_json::Value) -> Outcome {
    match flags.format {
        Format::Text => Outcome::success(text),
        Format::Json => Outcome::success(format!("{value}\n")),
    }
}

fn run(command: Command, doc: &SystemDocument, flags: &Flags) -> Result<Outcome, Failure> {
    let m = &doc.matrix;
    let mut engine = WordEngine::new(m);
    let outcome = match command {
        Command::Validate => {
            let text = format!("valid rank {} Coxeter matrix\n{m}", m.rank());
            let value = json!({ "valid": true, "rank": m.rank(), "m": m.encoded_rows(), "names": doc.names });
            render(flags, text, value)
        }
        Command::Reduce | Command::Inv | Command::Descents => {
            let w = &parse_words(doc, flags, 1)?[0];
            let e = engine.reduce(w)?;
            match command {
                Command::Reduce => render(
                    flags,
                    format!("{e}\n"),
                    json!({ "element": element_json(&e), "length": e.length() }),
                ),
                Command::Inv => {
                    let inv = engine.invert(&e)?;
                    render(
                        flags,
                        format!("{inv}\n"),
                        json!({ "element": element_json(&inv), "length": inv.length() }),
                    )
                }
                _ => {
                    let d = engine.right_descents(&e)?;
                    render(flags, format!("{d}\n"), json!({ "descents": indices(d) }))
                }
            }
        }
        Command::Mul => {
            let ws = parse_words(doc, flags, 2)?;
            let a = engine.reduce(&ws[0])?;
            let b = engine.reduce(&ws[1])?;
            let p = engine.multiply(&a, &b)?;
            render(
                flags,
                format!("{p}\n"),
                json!({ "element": element_json(&p), "length": p.length() }),
            )
        }
        Command::Components => {
            let subset = parse_subset(doc, flags)?;
            let cs = components(m, subset)?;
            let mut text = String::new();
            let mut list = Vec::new();
            for c in &cs {
                let class = classify_component(c, m);
                writeln!(text, "{}: {class}", c.members).unwrap();
                list.push(json!({ "members": indices(c.members), "type": class.to_string() }));
            }
            render(flags, text, json!({ "components": list }))
        }
        Command::Spherical => {
            let subset = parse_subset(doc, flags)?;
            let s = is_spherical(m, subset)?;
            render(flags, format!("{s}\n"), json!({ "spherical": s }))
        }
        Command::Longest => {
            let subset = parse_subset(doc, flags)?;
            let w0 = match longest_element_with(&mut engine, subset) {
                Err(CoxeterError::NotSpherical) => {
                    return Err(Failure::Usage(format!("subset {{{subset}}} is not spherical")))
                }
                other => other?,
            };
            render(
                flags,
                format!("{w0}\n"),
                json!({ "element": element_json(&w0), "length": w0.length() }),
            )
        }
        Command::Essential => {
            let split = essential_subset(m);
            render(
                flags,
                format!("essential={}\ncomplement={}\n", split.members, split.complement),
                json!({ "essential": indices(split.members), "complement": indices(split.complement) }),
            )
        }
        Command::Center => {
            let z = center_with(&mut engine)?;
            let mut text = format!("rank={}\n", z.rank_n);
            for g in &z.generators {
                writeln!(text, "generator={g}").unwrap();
            }
            for s in &z.supports {
                writeln!(text, "support={s}").unwrap();
            }
            for e in &z.elements {
                writeln!(text, "element={e}").unwrap();
            }
            let value = json!({
                "rank": z.rank_n,
                "generators": z.generators.iter().map(element_json).collect::<Vec<_>>(),
                "supports": z.supports.iter().map(|s| indices(*s)).collect::<Vec<_>>(),
                "elements": z.elements.iter().map(element_json).collect::<Vec<_>>(),
            });
            render(flags, text, value)
        }
        Command::Enumerate => {
            let e = enumerate_group(m, flags.cap);
            let mut text = format!("order={}\ncomplete={}\n", e.len(), e.complete);
            for x in &e.elements {
                writeln!(text, "element={x}").unwrap();
            }
            let value = json!({
                "order": e.len(),
                "complete": e.complete,
                "elements": e.elements.iter().map(element_json).collect::<Vec<_>>(),
            });
            render(flags, text, value)
        }
        Command::Verify => verify(&mut engine, flags)?,
    };
    Ok(outcome)
}

#[derive(Serialize)]
struct PropertyResult {
    name: &'static str,
    pass: bool,
}

fn verify(engine: &mut WordEngine<'_>, flags: &Flags) -> Result<Outcome, Failure> {
    let m = engine.matrix();
    let mut results = Vec::new();

    let report = check_theorem2(m)?;
    results.push(PropertyResult { name: "theorem2.supports_in_finite_part", pass: report.supports_in_finite_part });
    results.push(PropertyResult { name: "theorem2.finite_part_center_matches", pass: report.finite_part_center_matches });
    results.push(PropertyResult { name: "theorem2.essential_center_trivial", pass: report.essential_center_trivial });

    let z = center_with(engine)?;
    let mut squares = true;
    for e in &z.elements {
        squares &= engine.multiply(e, e)?.is_identity();
    }
    let set: BTreeSet<&CanonicalElement> = z.elements.iter().collect();
    let mut closed = true;
    for a in &z.elements {
        for b in &z.elements {
            closed &= set.contains(&engine.multiply(a, b)?);
        }
    }
    results.push(PropertyResult {
        name: "center.elementary_abelian",
        pass: z.elements.len() == 1 << z.rank_n && set.len() == z.elements.len() && squares && closed,
    });
    let mut central = true;
    for e in &z.elements {
        for s in m.generators().iter() {
            central &= engine.multiply_generator(e, s)? == engine.left_multiply_generator(s, e)?;
        }
    }
    results.push(PropertyResult { name: "center.commutes_with_generators", pass: central });

    let enumeration = enumerate_group(m, flags.cap);
    let (scope, oracle_match) = if enumeration.complete {
        let brute = brute_center(&enumeration);
        (format!("complete enumeration, {} elements", enumeration.len()), brute == z.elements)
    } else {
        let ball = ball_enumeration(m, flags.radius);
        let brute = brute_center(&ball);
        let expected: Vec<_> = z.elements.iter().filter(|e| e.length() <= flags.radius).cloned().collect();
        (format!("ball of radius {}, {} elements", flags.radius, ball.len()), brute == expected)
    };
    results.push(PropertyResult { name: "oracle.center_matches_brute_force", pass: oracle_match });

    let gram_agrees = components(m, m.generators())?
        .iter()
        .all(|c| classify_component(c, m).is_finite() == gram_positive_definite(m, c.members));
    results.push(PropertyResult { name: "oracle.classification_matches_gram", pass: gram_agrees });

    let all_pass = results.iter().all(|r| r.pass);
    let mut text = format!("scope: {scope}\n");
    for r in &results {
        writeln!(text, "{} {}", if r.pass { "PASS" } else { "FAIL" }, r.name).unwrap();
    }
    let mut outcome = render(flags, text, json!({ "scope": scope, "properties": results, "pass": all_pass }));
    if !all_pass {
        outcome.exit_code = exit::VERIFICATION_FAILED;
    }
    Ok(outcome)
}
