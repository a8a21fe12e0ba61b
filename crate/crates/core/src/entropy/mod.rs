//! Shannon and von Neumann entropy calculus, in bits.
//!
//! Every derived quantity (conditional, mutual, conditional mutual, ternary)
//! is assembled from entropies of subsets of parts. Conditional and mutual
//! density matrices are never formed.

mod diagram;
mod distribution;

use std::collections::HashMap;

pub use diagram::{tripartite_diagram, tripartite_diagram_named, EntropyDiagram, EntropyReport};
pub use distribution::JointDistribution;

use crate::tensor::{DensityMatrix, PureState};
use crate::{tol, Error, Result};

fn plogp_sum<I: IntoIterator<Item = f64>>(probs: I) -> f64 {
    let h: f64 = probs.into_iter().filter(|&p| p > 0.0).map(|p| -p * p.log2()).sum();
    // -0.0 and roundoff just below zero read as zero
    h.max(0.0)
}

/// `-Σ p log₂ p` with `0 log 0 = 0`.
pub fn shannon_entropy(p: &[f64]) -> Result<f64> {
    if let Some(&neg) = p.iter().find(|&&x| x < -tol::NORM || !x.is_finite()) {
        return Err(Error::InvalidDistribution(format!("entry {neg} is negative or not finite")));
    }
    let total: f64 = p.iter().sum();
    if (total - 1.0).abs() > tol::NORM {
        return Err(Error::InvalidDistribution(format!("entries sum to {total}")));
    }
    Ok(plogp_sum(p.iter().copied()))
}

/// Entropy of a spectrum after clamping roundoff negatives.
///
/// Eigenvalues in `[-tol::EIG, 0)` count as zero; anything lower is an
/// invalid state.
pub fn spectrum_entropy(eigenvalues: &[f64]) -> Result<f64> {
    if let Some(&bad) = eigenvalues.iter().find(|&&v| v < -tol::EIG) {
        return Err(Error::NegativeEigenvalue { value: bad });
    }
    Ok(plogp_sum(eigenvalues.iter().copied()))
}

pub fn von_neumann_entropy(rho: &DensityMatrix) -> Result<f64> {
    spectrum_entropy(&rho.eigenvalues()?)
}

/// Anything whose subsystems have well-defined entropies.
pub trait EntropySource {
    /// Part position for a label.
    fn position(&self, label: &str) -> Result<usize>;

    /// Number of parts.
    fn part_count(&self) -> usize;

    /// Label of the part at `position`.
    fn part_label(&self, position: usize) -> &str;

    /// Entropy (bits) of the parts at sorted, distinct `positions`. The empty
    /// set has entropy zero.
    fn subset_entropy(&self, positions: &[usize]) -> Result<f64>;
}

impl EntropySource for PureState {
    fn position(&self, label: &str) -> Result<usize> {
        self.layout().position(label)
    }

    fn part_count(&self) -> usize {
        self.layout().len()
    }

    fn part_label(&self, position: usize) -> &str {
        &self.layout().parts()[position].label
    }

    fn subset_entropy(&self, positions: &[usize]) -> Result<f64> {
        if positions.is_empty() {
            return Ok(0.0);
        }
        spectrum_entropy(&self.reduced_spectrum(positions)?)
    }
}

impl EntropySource for DensityMatrix {
    fn position(&self, label: &str) -> Result<usize> {
        self.layout().position(label)
    }

    fn part_count(&self) -> usize {
        self.layout().len()
    }

    fn part_label(&self, position: usize) -> &str {
        &self.layout().parts()[position].label
    }

    fn subset_entropy(&self, positions: &[usize]) -> Result<f64> {
        if positions.is_empty() {
            return Ok(0.0);
        }
        if positions.len() == self.layout().len() {
            return von_neumann_entropy(self);
        }
        spectrum_entropy(&crate::tensor::hermitian_eigenvalues(&self.reduce(positions))?)
    }
}

impl EntropySource for JointDistribution {
    fn position(&self, label: &str) -> Result<usize> {
        JointDistribution::position(self, label)
    }

    fn part_count(&self) -> usize {
        self.parts().len()
    }

    fn part_label(&self, position: usize) -> &str {
        &self.parts()[position].label
    }

    fn subset_entropy(&self, positions: &[usize]) -> Result<f64> {
        if positions.is_empty() {
            return Ok(0.0);
        }
        Ok(plogp_sum(self.marginal(positions).into_values()))
    }
}

/// Memoised subset entropies for one analysis of one source.
pub struct EntropyCalc<'a, S: EntropySource + ?Sized> {
    source: &'a S,
    cache: HashMap<Vec<usize>, f64>,
}

impl<'a, S: EntropySource + ?Sized> EntropyCalc<'a, S> {
    pub fn new(source: &'a S) -> Self {
        Self { source, cache: HashMap::new() }
    }

    pub fn source(&self) -> &'a S {
        self.source
    }

    /// Resolves labels to positions, rejecting unknown or repeated labels.
    pub fn resolve<L: AsRef<str>>(&self, labels: &[L]) -> Result<Vec<usize>> {
        let mut out = Vec::with_capacity(labels.len());
        for l in labels {
            let p = self.source.position(l.as_ref())?;
            if out.contains(&p) {
                return Err(Error::OverlappingLabels(l.as_ref().to_owned()));
            }
            out.push(p);
        }
        Ok(out)
    }

    /// Entropy of the union of the given position sets.
    pub fn joint(&mut self, sets: &[&[usize]]) -> Result<f64> {
        let mut key: Vec<usize> = sets.iter().flat_map(|s| s.iter().copied()).collect();
        key.sort_unstable();
        key.dedup();
        if let Some(&v) = self.cache.get(&key) {
            return Ok(v);
        }
        let v = self.source.subset_entropy(&key)?;
        self.cache.insert(key, v);
        Ok(v)
    }

    pub fn entropy(&mut self, x: &[usize]) -> Result<f64> {
        self.joint(&[x])
    }

    /// `S(X|Y) = S(XY) − S(Y)`.
    pub fn conditional(&mut self, x: &[usize], y: &[usize]) -> Result<f64> {
        self.disjoint(&[x, y])?;
        Ok(self.joint(&[x, y])? - self.joint(&[y])?)
    }

    /// `S(X:Y) = S(X) + S(Y) − S(XY)`.
    pub fn mutual(&mut self, x: &[usize], y: &[usize]) -> Result<f64> {
        self.disjoint(&[x, y])?;
        Ok(self.joint(&[x])? + self.joint(&[y])? - self.joint(&[x, y])?)
    }

    /// `S(X:Y|Z) = S(XZ) + S(YZ) − S(Z) − S(XYZ)`.
    pub fn conditional_mutual(&mut self, x: &[usize], y: &[usize], z: &[usize]) -> Result<f64> {
        self.disjoint(&[x, y, z])?;
        Ok(self.joint(&[x, z])? + self.joint(&[y, z])? - self.joint(&[z])? - self.joint(&[x, y, z])?)
    }

    /// `S(X:Y:Z)`, the inclusion-exclusion centre of the three-set diagram.
    pub fn ternary(&mut self, x: &[usize], y: &[usize], z: &[usize]) -> Result<f64> {
        self.disjoint(&[x, y, z])?;
        Ok(self.joint(&[x])? + self.joint(&[y])? + self.joint(&[z])?
            - self.joint(&[x, y])?
            - self.joint(&[x, z])?
            - self.joint(&[y, z])?
            + self.joint(&[x, y, z])?)
    }

    fn disjoint(&self, sets: &[&[usize]]) -> Result<()> {
        for (i, a) in sets.iter().enumerate() {
            for b in &sets[i + 1..] {
                if let Some(&p) = a.iter().find(|p| b.contains(p)) {
                    return Err(Error::OverlappingLabels(self.source.part_label(p).to_owned()));
                }
            }
        }
        Ok(())
    }
}

macro_rules! labelled {
    ($(#[$doc:meta])* $name:ident, $method:ident, $($arg:ident),+) => {
        $(#[$doc])*
        pub fn $name<S: EntropySource + ?Sized>(source: &S, $($arg: &[impl AsRef<str>]),+) -> Result<f64> {
            let mut calc = EntropyCalc::new(source);
            $(let $arg = calc.resolve($arg)?;)+
            calc.$method($(&$arg),+)
        }
    };
}

labelled!(
    /// Joint entropy of the labelled parts.
    entropy, entropy, x
);
labelled!(
    /// `S(X|Y)`; negative values are possible for entangled states.
    conditional_entropy, conditional, x, y
);
labelled!(
    /// `S(X:Y)`.
    mutual_entropy, mutual, x, y
);
labelled!(
    /// `S(X:Y|Z)`.
    conditional_mutual_entropy, conditional_mutual, x, y, z
);
labelled!(
    /// `S(X:Y:Z)`.
    ternary_mutual_entropy, ternary, x, y, z
);

/// Classical conditional mutual information `H(X:Y|Z)` of a joint distribution.
pub fn shannon_conditional_mutual(
    dist: &JointDistribution,
    x: &[impl AsRef<str>],
    y: &[impl AsRef<str>],
    z: &[impl AsRef<str>],
) -> Result<f64> {
    conditional_mutual_entropy(dist, x, y, z)
}

/// Residuals of the entropy chain rule and the mutual-entropy chain rule.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct ChainResiduals {
    /// `|S(XYZ) − S(X) − S(Y|X) − S(Z|XY)|`
    pub entropy: f64,
    /// `|S(X:YZ) − S(X:Z) − S(X:Y|Z)|`
    pub mutual: f64,
}

pub fn chain_rule_check<S: EntropySource + ?Sized>(
    source: &S,
    x: &[impl AsRef<str>],
    y: &[impl AsRef<str>],
    z: &[impl AsRef<str>],
) -> Result<ChainResiduals> {
    let mut calc = EntropyCalc::new(source);
    let (x, y, z) = (calc.resolve(x)?, calc.resolve(y)?, calc.resolve(z)?);
    let xy: Vec<usize> = x.iter().chain(&y).copied().collect();
    let yz: Vec<usize> = y.iter().chain(&z).copied().collect();
    let sxyz = calc.joint(&[&x, &y, &z])?;
    let sx = calc.entropy(&x)?;
    let sy_x = calc.conditional(&y, &x)?;
    let sz_xy = calc.conditional(&z, &xy)?;
    let ix_yz = calc.mutual(&x, &yz)?;
    let ix_z = calc.mutual(&x, &z)?;
    let ix_y_z = calc.conditional_mutual(&x, &y, &z)?;
    Ok(ChainResiduals {
        entropy: (sxyz - sx - sy_x - sz_xy).abs(),
        mutual: (ix_yz - ix_z - ix_y_z).abs(),
    })
}

/// One-way entanglement witness: a conditional entropy below `-tol` in
/// either direction rules out separability. `false` proves nothing.
pub fn negative_conditional_witness<S: EntropySource + ?Sized>(
    source: &S,
    x: &[impl AsRef<str>],
    y: &[impl AsRef<str>],
    tol: f64,
) -> Result<bool> {
    let mut calc = EntropyCalc::new(source);
    let (x, y) = (calc.resolve(x)?, calc.resolve(y)?);
    Ok(calc.conditional(&x, &y)? < -tol || calc.conditional(&y, &x)? < -tol)
}
