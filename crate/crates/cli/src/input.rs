use std::path::Path;

use qec_entropy::code::{builtin_code, load_code, Code};
use qec_entropy::tensor::{CVector, PureState, SubsystemLayout, C64};
use qec_entropy::{Error, Result};
use serde::Deserialize;

/// A built-in name, otherwise a path to a code file.
pub fn resolve_code(arg: &str) -> Result<(String, Code)> {
    match builtin_code(arg) {
        Ok(code) => Ok((arg.to_owned(), code)),
        Err(Error::UnknownCode(_)) if Path::new(arg).exists() => Ok((arg.to_owned(), load_code(arg)?)),
        Err(Error::UnknownCode(_)) => Err(Error::Precondition(format!("`{arg}` is neither a built-in code nor an existing file"))),
        Err(e) => Err(e),
    }
}

/// Comma-separated non-negative integers; empty input is the empty list.
pub fn parse_indices(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| Error::Precondition(format!("`{t}` is not a position"))))
        .collect()
}

/// Three groups separated by `:` or `/`, each a comma list of part labels or
/// positions. A bare position `i` becomes `numbered(i)`.
pub fn parse_split(spec: &str, numbered: impl Fn(usize) -> String) -> Result<[Vec<String>; 3]> {
    let groups: Vec<Vec<String>> = spec
        .split([':', '/'])
        .map(|g| {
            g.split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map(&numbered).unwrap_or_else(|_| t.to_owned()))
                .collect()
        })
        .collect();
    match <[Vec<String>; 3]>::try_from(groups) {
        Ok(g) if g.iter().all(|x| !x.is_empty()) => Ok(g),
        _ => Err(Error::Precondition(format!("split `{spec}` must name three non-empty groups, e.g. R:0,1/2,3,4"))),
    }
}

#[derive(Deserialize)]
struct StateFile {
    layout: SubsystemLayout,
    amplitudes: Vec<[f64; 2]>,
}

/// Reads a pure state stored as JSON `{"layout": [...], "amplitudes": [[re, im], ...]}`.
pub fn load_state(path: &str) -> Result<PureState> {
    let text = std::fs::read_to_string(path)?;
    let file: StateFile = serde_json::from_str(&text).map_err(|e| Error::Parse { line: e.line(), message: e.to_string() })?;
    let amps = CVector::from_iterator(file.amplitudes.len(), file.amplitudes.iter().map(|[re, im]| C64::new(*re, *im)));
    PureState::new(file.layout, amps)
}
