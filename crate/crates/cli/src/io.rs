//! File and argument plumbing for the binary.

use std::path::Path;

use galekit_core::json::{from_json, ConditionDto};
use galekit_core::{Error, Result};
use serde::Deserialize;

pub fn read_json<T: for<'a> Deserialize<'a>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Json(format!("{}: {e}", path.display())))?;
    from_json(&text)
}

pub fn emit(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| Error::Json(format!("{}: {e}", path.display())))
        }
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

/// Comma or whitespace separated index list, e.g. "1,4" or "1 4".
pub fn parse_indices(text: &str) -> Result<Vec<usize>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad index '{s}'")))
        })
        .collect()
}

/// Input for `linsys-dim`: ambient dimension, degree, and conditions.
#[derive(Debug, Deserialize)]
pub struct SolveRequest {
    pub n: usize,
    pub degree: u32,
    pub conditions: Vec<ConditionDto>,
}

/// Input for `quadrics-check`: a model plus a candidate point.
#[derive(Debug, Deserialize)]
pub struct ModelQuery {
    pub model: galekit_core::json::ModelDto,
    pub point: Vec<String>,
}
