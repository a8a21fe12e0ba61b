use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::tensor::{DensityMatrix, Part, SubsystemLayout};
use crate::{tol, Error, Result};

/// Joint distribution over labelled discrete variables, stored by support.
///
/// Only outcomes with nonzero probability are kept, so deterministic code
/// channels over many bits stay small.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JointDistribution {
    parts: Vec<Part>,
    support: Vec<(Vec<usize>, f64)>,
}

impl JointDistribution {
    /// Builds a distribution from `(outcome, probability)` pairs; repeated
    /// outcomes are merged.
    pub fn new<S: Into<String>>(
        variables: impl IntoIterator<Item = (S, usize)>,
        outcomes: impl IntoIterator<Item = (Vec<usize>, f64)>,
    ) -> Result<Self> {
        let parts: Vec<Part> = variables.into_iter().map(|(l, d)| Part { label: l.into(), dim: d }).collect();
        for (i, p) in parts.iter().enumerate() {
            if p.dim == 0 {
                return Err(Error::InvalidDistribution(format!("variable `{}` has an empty alphabet", p.label)));
            }
            if parts[..i].iter().any(|q| q.label == p.label) {
                return Err(Error::InvalidDistribution(format!("duplicate variable `{}`", p.label)));
            }
        }
        let mut merged: BTreeMap<Vec<usize>, f64> = BTreeMap::new();
        let mut total = 0.0;
        for (outcome, p) in outcomes {
            if outcome.len() != parts.len() {
                return Err(Error::InvalidDistribution(format!(
                    "outcome {outcome:?} has {} symbols, expected {}",
                    outcome.len(),
                    parts.len()
                )));
            }
            if let Some((sym, part)) = outcome.iter().zip(&parts).find(|(s, part)| **s >= part.dim) {
                return Err(Error::InvalidDistribution(format!("symbol {sym} outside alphabet of `{}`", part.label)));
            }
            if !(p >= -tol::NORM) || !p.is_finite() {
                return Err(Error::InvalidDistribution(format!("negative probability {p}")));
            }
            total += p;
            if p > 0.0 {
                *merged.entry(outcome).or_insert(0.0) += p;
            }
        }
        if (total - 1.0).abs() > tol::NORM {
            return Err(Error::InvalidDistribution(format!("probabilities sum to {total}")));
        }
        Ok(Self { parts, support: merged.into_iter().collect() })
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn support(&self) -> &[(Vec<usize>, f64)] {
        &self.support
    }

    pub fn position(&self, label: &str) -> Result<usize> {
        self.parts
            .iter()
            .position(|p| p.label == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_owned()))
    }

    /// Marginal probabilities of the variables at `positions`, keyed by the
    /// projected outcome.
    pub fn marginal(&self, positions: &[usize]) -> BTreeMap<Vec<usize>, f64> {
        let mut out = BTreeMap::new();
        for (outcome, p) in &self.support {
            let key: Vec<usize> = positions.iter().map(|&i| outcome[i]).collect();
            *out.entry(key).or_insert(0.0) += p;
        }
        out
    }

    /// Diagonal density matrix carrying this distribution.
    pub fn to_density_matrix(&self) -> Result<DensityMatrix> {
        let layout = SubsystemLayout::new(self.parts.iter().map(|p| (p.label.clone(), p.dim)))?;
        let mut probs = vec![0.0; layout.total_dim()];
        for (outcome, p) in &self.support {
            let idx = outcome.iter().zip(&self.parts).fold(0, |acc, (s, part)| acc * part.dim + s);
            probs[idx] += p;
        }
        DensityMatrix::diagonal(layout, &probs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(JointDistribution::new([("x", 2)], [(vec![0], 0.5), (vec![1], 0.5)]).is_ok());
        assert!(JointDistribution::new([("x", 2)], [(vec![0], 0.5)]).is_err());
        assert!(JointDistribution::new([("x", 2)], [(vec![2], 1.0)]).is_err());
        assert!(JointDistribution::new([("x", 2)], [(vec![0], 1.5), (vec![1], -0.5)]).is_err());
        assert!(JointDistribution::new([("x", 2), ("x", 2)], [(vec![0, 0], 1.0)]).is_err());
    }

    #[test]
    fn merges_and_marginalises() {
        let d = JointDistribution::new(
            [("x", 2), ("y", 2)],
            [(vec![0, 1], 0.25), (vec![0, 1], 0.25), (vec![1, 1], 0.5)],
        )
        .unwrap();
        assert_eq!(d.support().len(), 2);
        let m = d.marginal(&[1]);
        assert_eq!(m.get(&vec![1]), Some(&1.0));
    }
}
