use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Environment variable overriding [`DEFAULT_MAX_DIM`].
pub const MAX_DIM_ENV: &str = "QECENT_MAX_DIM";

/// Default cap on the total Hilbert-space dimension (12 qubits).
pub const DEFAULT_MAX_DIM: usize = 4096;

/// Current cap on total dimension: `QECENT_MAX_DIM` when set to a positive
/// integer, otherwise [`DEFAULT_MAX_DIM`].
pub fn max_total_dim() -> usize {
    std::env::var(MAX_DIM_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&v| v > 0)
        .unwrap_or(DEFAULT_MAX_DIM)
}

pub(crate) fn check_dim(dim: usize) -> Result<()> {
    let cap = max_total_dim();
    if dim > cap {
        Err(Error::DimensionOverflow { dim, cap })
    } else {
        Ok(())
    }
}

/// A labelled tensor factor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Part {
    pub label: String,
    pub dim: usize,
}

/// Ordered list of labelled subsystems. Part 0 is the most significant
/// tensor factor of every state or operator carrying this layout.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Part>", into = "Vec<Part>")]
pub struct SubsystemLayout {
    parts: Vec<Part>,
    total: usize,
}

impl TryFrom<Vec<Part>> for SubsystemLayout {
    type Error = Error;

    fn try_from(parts: Vec<Part>) -> Result<Self> {
        let mut total: usize = 1;
        for (i, p) in parts.iter().enumerate() {
            if p.label.is_empty() {
                return Err(Error::InvalidLayout(format!("part {i} has an empty label")));
            }
            if p.dim == 0 {
                return Err(Error::InvalidLayout(format!("part `{}` has dimension 0", p.label)));
            }
            if parts[..i].iter().any(|q| q.label == p.label) {
                return Err(Error::InvalidLayout(format!("duplicate label `{}`", p.label)));
            }
            total = total.checked_mul(p.dim).ok_or(Error::DimensionOverflow {
                dim: usize::MAX,
                cap: max_total_dim(),
            })?;
            check_dim(total)?;
        }
        Ok(Self { parts, total })
    }
}

impl From<SubsystemLayout> for Vec<Part> {
    fn from(l: SubsystemLayout) -> Self {
        l.parts
    }
}

impl SubsystemLayout {
    pub fn new<S: Into<String>>(parts: impl IntoIterator<Item = (S, usize)>) -> Result<Self> {
        parts
            .into_iter()
            .map(|(label, dim)| Part { label: label.into(), dim })
            .collect::<Vec<_>>()
            .try_into()
    }

    /// `n` qubits labelled `{prefix}0 .. {prefix}{n-1}`.
    pub fn qubits(prefix: &str, n: usize) -> Result<Self> {
        Self::new((0..n).map(|i| (format!("{prefix}{i}"), 2)))
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn total_dim(&self) -> usize {
        self.total
    }

    pub fn labels(&self) -> impl Iterator<Item = &str> {
        self.parts.iter().map(|p| p.label.as_str())
    }

    pub fn position(&self, label: &str) -> Result<usize> {
        self.parts
            .iter()
            .position(|p| p.label == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_owned()))
    }

    pub fn dim_of(&self, label: &str) -> Result<usize> {
        Ok(self.parts[self.position(label)?].dim)
    }

    /// Concatenation of the two part lists.
    pub fn concat(&self, other: &SubsystemLayout) -> Result<Self> {
        let mut parts = self.parts.clone();
        parts.extend(other.parts.iter().cloned());
        parts.try_into()
    }

    /// Resolve labels to part positions, rejecting unknown or repeated labels.
    pub fn resolve<S: AsRef<str>>(&self, labels: &[S]) -> Result<Vec<usize>> {
        let mut out = Vec::with_capacity(labels.len());
        for l in labels {
            let pos = self.position(l.as_ref())?;
            if out.contains(&pos) {
                return Err(Error::OverlappingLabels(l.as_ref().to_owned()));
            }
            out.push(pos);
        }
        Ok(out)
    }

    /// Layout made of the parts at `positions`, in the given order.
    pub fn select(&self, positions: &[usize]) -> Result<Self> {
        positions.iter().map(|&i| self.parts[i].clone()).collect::<Vec<_>>().try_into()
    }

    /// Index table for splitting the basis into a selected group and the rest.
    ///
    /// Entry `r * d_sel + s` is the full basis index whose selected digits
    /// combine (big-endian, in `sel` order) to `s` and whose remaining digits
    /// combine (in layout order) to `r`.
    pub(crate) fn split_table(&self, sel: &[usize]) -> (usize, usize, Vec<usize>) {
        let d_sel: usize = sel.iter().map(|&i| self.parts[i].dim).product();
        let rest: Vec<usize> = (0..self.parts.len()).filter(|i| !sel.contains(i)).collect();
        let d_rest = self.total / d_sel;

        let mut strides = vec![1usize; self.parts.len()];
        for i in (0..self.parts.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * self.parts[i + 1].dim;
        }

        let mut table = vec![0usize; self.total];
        for (r, s, f) in FullIndexIter::new(self, sel, &rest, &strides) {
            table[r * d_sel + s] = f;
        }
        (d_sel, d_rest, table)
    }
}

/// Walks all basis digit tuples once, yielding (rest index, selected index, full index).
struct FullIndexIter<'a> {
    dims: Vec<usize>,
    digits: Vec<usize>,
    sel: &'a [usize],
    rest: &'a [usize],
    strides: &'a [usize],
    done: bool,
}

impl<'a> FullIndexIter<'a> {
    fn new(l: &SubsystemLayout, sel: &'a [usize], rest: &'a [usize], strides: &'a [usize]) -> Self {
        Self {
            dims: l.parts.iter().map(|p| p.dim).collect(),
            digits: vec![0; l.parts.len()],
            sel,
            rest,
            strides,
            done: false,
        }
    }

    fn combine(&self, which: &[usize]) -> usize {
        which.iter().fold(0, |acc, &i| acc * self.dims[i] + self.digits[i])
    }
}

impl Iterator for FullIndexIter<'_> {
    type Item = (usize, usize, usize);

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let f = self.digits.iter().zip(self.strides).map(|(d, s)| d * s).sum();
        let item = (self.combine(self.rest), self.combine(self.sel), f);
        // odometer increment, last part fastest
        let mut i = self.digits.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.digits[i] += 1;
            if self.digits[i] < self.dims[i] {
                break;
            }
            self.digits[i] = 0;
        }
        Some(item)
    }
}
