//! Text code-file format.
//!
//! ```text
//! # comments and blank lines are ignored
//! format-version 1
//! kind quantum
//! n 2
//! k 1
//! codeword 0 1,0 0,0 0,0 0,0
//! codeword 1 0,0 0,0 0,0 1,0
//! ```
//!
//! Quantum rows carry `2^n` `re,im` pairs in basis order (qubit 0 most
//! significant). Classical rows are `codeword <i> <bits> <prior>`. Header
//! lines appear exactly once, in the order shown; codeword indices run
//! `0 .. 2^k − 1` in order.

use std::path::Path;

use super::{ClassicalCode, Code, QuantumCode};
use crate::tensor::{CVector, C64};
use crate::{Error, Result};

pub const FORMAT_VERSION: u32 = 1;

fn perr(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

struct Lines<'a> {
    inner: std::iter::Peekable<Box<dyn Iterator<Item = (usize, &'a str)> + 'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let it: Box<dyn Iterator<Item = (usize, &'a str)>> = Box::new(
            text.lines()
                .enumerate()
                .map(|(i, l)| (i + 1, l.trim()))
                .filter(|(_, l)| !l.is_empty() && !l.starts_with('#')),
        );
        Self { inner: it.peekable(), last: 0 }
    }

    fn next(&mut self) -> Option<(usize, &'a str)> {
        let item = self.inner.next();
        if let Some((n, _)) = item {
            self.last = n;
        }
        item
    }

    fn header(&mut self, key: &str) -> Result<(usize, &'a str)> {
        let (line, text) = self.next().ok_or_else(|| perr(self.last + 1, format!("missing `{key}` header")))?;
        let mut parts = text.split_whitespace();
        match (parts.next(), parts.next(), parts.next()) {
            (Some(k), Some(v), None) if k == key => Ok((line, v)),
            (Some(k), _, _) if k == key => Err(perr(line, format!("`{key}` takes exactly one value"))),
            _ => Err(perr(line, format!("expected `{key}` header, found `{text}`"))),
        }
    }
}

fn parse_usize(line: usize, field: &str, v: &str) -> Result<usize> {
    v.parse().map_err(|_| perr(line, format!("field `{field}`: `{v}` is not a nonnegative integer")))
}

fn parse_f64(line: usize, field: &str, v: &str) -> Result<f64> {
    let x: f64 = v.parse().map_err(|_| perr(line, format!("field `{field}`: `{v}` is not a number")))?;
    if !x.is_finite() {
        return Err(perr(line, format!("field `{field}`: `{v}` is not finite")));
    }
    Ok(x)
}

/// Parses a code file. Structural problems report the line and field;
/// semantic problems (norms, orthogonality, duplicates) come from the code
/// constructors.
pub fn parse_code(text: &str) -> Result<Code> {
    let mut lines = Lines::new(text);
    let (line, v) = lines.header("format-version")?;
    if parse_usize(line, "format-version", v)? != FORMAT_VERSION as usize {
        return Err(perr(line, format!("unsupported format-version {v} (expected {FORMAT_VERSION})")));
    }
    let (kind_line, kind) = lines.header("kind")?;
    let (line, v) = lines.header("n")?;
    let n = parse_usize(line, "n", v)?;
    let (line, v) = lines.header("k")?;
    let k = parse_usize(line, "k", v)?;
    if k > n {
        return Err(perr(line, format!("field `k`: {k} exceeds n = {n}")));
    }
    if n >= 31 {
        return Err(perr(line, format!("field `n`: {n} is too large")));
    }
    let count = 1usize << k;
    match kind {
        "quantum" => {
            let dim = 1usize << n;
            let cap = crate::tensor::max_total_dim();
            if dim > cap {
                return Err(Error::DimensionOverflow { dim, cap });
            }
            let mut words = Vec::with_capacity(count);
            for index in 0..count {
                let (line, fields) = codeword_row(&mut lines, index)?;
                if fields.len() != dim {
                    return Err(perr(line, format!("codeword {index}: expected {dim} amplitudes, found {}", fields.len())));
                }
                let amps = fields
                    .iter()
                    .enumerate()
                    .map(|(j, f)| {
                        let (re, im) = f
                            .split_once(',')
                            .ok_or_else(|| perr(line, format!("amplitude {j}: `{f}` is not a `re,im` pair")))?;
                        Ok(C64::new(parse_f64(line, &format!("amplitude {j} re"), re)?, parse_f64(line, &format!("amplitude {j} im"), im)?))
                    })
                    .collect::<Result<Vec<_>>>()?;
                words.push(CVector::from_vec(amps));
            }
            trailing(&mut lines)?;
            Ok(QuantumCode::new(n, k, words)?.into())
        }
        "classical" => {
            let mut words = Vec::with_capacity(count);
            let mut priors = Vec::with_capacity(count);
            for index in 0..count {
                let (line, fields) = codeword_row(&mut lines, index)?;
                let [bits, prior] = fields[..] else {
                    return Err(perr(line, format!("codeword {index}: expected `<bits> <prior>`")));
                };
                if bits.len() != n {
                    return Err(perr(line, format!("codeword {index}: expected {n} bits, found {}", bits.len())));
                }
                let w = bits
                    .bytes()
                    .map(|b| match b {
                        b'0' => Ok(0u8),
                        b'1' => Ok(1u8),
                        _ => Err(perr(line, format!("codeword {index}: `{bits}` is not a bit string"))),
                    })
                    .collect::<Result<Vec<_>>>()?;
                words.push(w);
                priors.push(parse_f64(line, "prior", prior)?);
            }
            trailing(&mut lines)?;
            Ok(ClassicalCode::new(n, k, words, priors)?.into())
        }
        other => Err(perr(kind_line, format!("field `kind`: `{other}` is not `quantum` or `classical`"))),
    }
}

fn codeword_row<'a>(lines: &mut Lines<'a>, index: usize) -> Result<(usize, Vec<&'a str>)> {
    let (line, text) = lines.next().ok_or_else(|| perr(lines.last + 1, format!("missing codeword {index}")))?;
    let mut parts = text.split_whitespace();
    if parts.next() != Some("codeword") {
        return Err(perr(line, format!("expected `codeword {index}`, found `{text}`")));
    }
    let idx = parts.next().ok_or_else(|| perr(line, "missing codeword index"))?;
    if parse_usize(line, "index", idx)? != index {
        return Err(perr(line, format!("field `index`: expected {index}, found {idx}")));
    }
    Ok((line, parts.collect()))
}

fn trailing(lines: &mut Lines<'_>) -> Result<()> {
    match lines.next() {
        Some((line, text)) => Err(perr(line, format!("unexpected trailing content `{text}`"))),
        None => Ok(()),
    }
}

/// Serialises a code in the text format.
pub fn format_code(code: &Code) -> String {
    let mut out = format!("format-version {FORMAT_VERSION}\nkind {}\nn {}\nk {}\n", code.kind(), code.n(), code.k());
    match code {
        Code::Quantum(q) => {
            for (i, w) in q.codewords().iter().enumerate() {
                out.push_str(&format!("codeword {i}"));
                for a in w.iter() {
                    out.push_str(&format!(" {:?},{:?}", a.re, a.im));
                }
                out.push('\n');
            }
        }
        Code::Classical(c) => {
            for (i, p) in c.priors().iter().enumerate() {
                out.push_str(&format!("codeword {i} {} {p:?}\n", c.codeword_string(i)));
            }
        }
    }
    out
}

pub fn load_code(path: impl AsRef<Path>) -> Result<Code> {
    parse_code(&std::fs::read_to_string(path)?)
}

pub fn save_code(code: &Code, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, format_code(code))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const TWO: &str = "# demo\nformat-version 1\nkind quantum\nn 2\nk 1\ncodeword 0 1,0 0,0 0,0 0,0\n\ncodeword 1 0,0 0,0 0,0 1,0\n";

    #[test]
    fn parses_minimal_quantum() {
        let Code::Quantum(q) = parse_code(TWO).unwrap() else { panic!() };
        assert_eq!((q.n(), q.k()), (2, 1));
        assert_eq!(q.codewords()[1][3], C64::new(1.0, 0.0));
    }

    #[test]
    fn roundtrip_builtins() {
        for name in super::super::builtin_names() {
            let code = super::super::builtin_code(name).unwrap();
            let back = parse_code(&format_code(&code)).unwrap();
            assert_eq!(back, code, "{name}");
        }
    }

    fn line_of(err: Error) -> usize {
        match err {
            Error::Parse { line, .. } => line,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn structural_errors_name_the_line() {
        assert_eq!(line_of(parse_code("format-version 2\n").unwrap_err()), 1);
        assert_eq!(line_of(parse_code(&TWO.replace("kind quantum", "kind qutrit")).unwrap_err()), 3);
        assert_eq!(line_of(parse_code(&TWO.replace("n 2", "n two")).unwrap_err()), 4);
        assert_eq!(line_of(parse_code(&TWO.replace("codeword 1", "codeword 2")).unwrap_err()), 8);
        assert_eq!(line_of(parse_code(&TWO.replace(" 0,0 1,0", " 0,0 1;0")).unwrap_err()), 8);
        assert_eq!(line_of(parse_code(&TWO.replace(" 0,0 1,0", " 1,0")).unwrap_err()), 8);
        assert_eq!(line_of(parse_code(&format!("{TWO}codeword 2 1,0\n")).unwrap_err()), 9);
        assert_eq!(line_of(parse_code(&TWO.replace("k 1", "k 3")).unwrap_err()), 5);
        assert!(matches!(parse_code(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn semantic_errors() {
        let dup = TWO.replace("codeword 1 0,0 0,0 0,0 1,0", "codeword 1 1,0 0,0 0,0 0,0");
        assert!(matches!(parse_code(&dup), Err(Error::DuplicateCodeword { i: 0, j: 1 })));
        let short = TWO.replace("codeword 1 0,0 0,0 0,0 1,0", "codeword 1 0,0 0,0 0,0 0.9,0");
        match parse_code(&short) {
            Err(Error::BadNorm { index: 1, norm }) => assert!((norm - 0.9).abs() < 1e-12),
            other => panic!("{other:?}"),
        }
        let classical = "format-version 1\nkind classical\nn 3\nk 1\ncodeword 0 000 0.5\ncodeword 1 000 0.5\n";
        assert!(matches!(parse_code(classical), Err(Error::DuplicateCodeword { i: 0, j: 1 })));
        let bad_bits = "format-version 1\nkind classical\nn 3\nk 1\ncodeword 0 000 0.5\ncodeword 1 1x1 0.5\n";
        assert_eq!(line_of(parse_code(bad_bits).unwrap_err()), 6);
    }

    #[test]
    fn save_and_load_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("five.code");
        let code = super::super::builtin_code("five-qubit").unwrap();
        save_code(&code, &path).unwrap();
        let Code::Quantum(q) = load_code(&path).unwrap() else { panic!() };
        assert!(q.orthonormality_residual() < crate::tol::NORM);
        assert!(matches!(load_code(dir.path().join("missing.code")), Err(Error::Io(_))));
    }
}
