use std::collections::HashSet;
use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::CliError;
use crate::matrix::{validate_matrix, CoxeterMatrix, Label};

/// On-disk form: `{"rank": n, "m": [[...]], "names": [...]}` with `0` meaning infinity.
#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    rank: usize,
    m: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    names: Option<Vec<String>>,
}

/// A validated Coxeter system description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemDocument {
    pub matrix: CoxeterMatrix,
    pub names: Option<Vec<String>>,
}

impl SystemDocument {
    pub fn new(matrix: CoxeterMatrix) -> Self {
        SystemDocument { matrix, names: None }
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// Serializes back to the on-disk form.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&RawDocument {
            rank: self.matrix.rank(),
            m: self.matrix.encoded_rows(),
            names: self.names.clone(),
        })
        .expect("document serializes")
    }
}

/// Where to read a document from.
#[derive(Clone, Copy, Debug)]
pub enum Source<'a> {
    Path(&'a Path),
    Stdin,
}

pub fn load_system(source: Source<'_>) -> Result<SystemDocument, CliError> {
    let text = match source {
        Source::Path(path) => std::fs::read_to_string(path).map_err(|e| CliError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?,
        Source::Stdin => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CliError::Io {
                    path: "<stdin>".into(),
                    message: e.to_string(),
                })?;
            buf
        }
    };
    parse_system(&text)
}

pub fn parse_system(text: &str) -> Result<SystemDocument, CliError> {
    let raw: RawDocument = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    if raw.m.len() != raw.rank {
        return Err(CliError::RankMismatch {
            declared: raw.rank,
            rows: raw.m.len(),
        });
    }
    let labels: Vec<Vec<Label>> = raw
        .m
        .iter()
        .map(|row| row.iter().map(|&v| Label::from_encoded(v)).collect())
        .collect();
    let matrix = validate_matrix(&labels)?;
    if let Some(names) = &raw.names {
        let distinct: HashSet<&String> = names.iter().collect();
        if names.len() != raw.rank || distinct.len() != names.len() {
            return Err(CliError::InvalidNames);
        }
    }
    Ok(SystemDocument {
        matrix,
        names: raw.names,
    })
}
