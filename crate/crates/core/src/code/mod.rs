//! Quantum and classical code models, encoders and built-in example codes.

mod builtin;
mod format;

use serde::Serialize;

pub use builtin::{builtin_code, builtin_names, BuiltinInfo, BUILTINS};
pub use format::{format_code, load_code, parse_code, save_code, FORMAT_VERSION};

use crate::entropy::JointDistribution;
use crate::tensor::{CVector, PureState, SubsystemLayout, C64};
use crate::{tol, Error, Result};

/// Label of the reference system in encoded states.
pub const REFERENCE: &str = "R";
/// Label of the logical input variable in classical joint distributions.
pub const LOGICAL: &str = "X";

/// Label of physical qubit `i`.
pub fn qubit_label(i: usize) -> String {
    format!("q{i}")
}

/// Label of physical bit `i` of a classical codeword.
pub fn bit_label(i: usize) -> String {
    format!("y{i}")
}

/// `n`-qubit code with `2^k` orthonormal codewords; codeword `i` encodes
/// logical basis state `i`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumCode {
    n: usize,
    k: usize,
    codewords: Vec<CVector>,
}

impl QuantumCode {
    pub fn new(n: usize, k: usize, codewords: Vec<CVector>) -> Result<Self> {
        if k > n {
            return Err(Error::InvalidCode(format!("k = {k} exceeds n = {n}")));
        }
        let dim = 1usize
            .checked_shl(n as u32)
            .filter(|&d| d <= crate::tensor::max_total_dim())
            .ok_or(Error::DimensionOverflow { dim: usize::MAX, cap: crate::tensor::max_total_dim() })?;
        if codewords.len() != 1 << k {
            return Err(Error::InvalidCode(format!("expected {} codewords for k = {k}, found {}", 1 << k, codewords.len())));
        }
        for (i, w) in codewords.iter().enumerate() {
            if w.len() != dim {
                return Err(Error::InvalidCode(format!("codeword {i} has length {}, expected {dim}", w.len())));
            }
        }
        for i in 0..codewords.len() {
            for j in 0..i {
                if (&codewords[i] - &codewords[j]).norm() <= tol::NORM {
                    return Err(Error::DuplicateCodeword { i: j, j: i });
                }
            }
        }
        for (i, w) in codewords.iter().enumerate() {
            let norm = w.norm();
            if (norm - 1.0).abs() > tol::NORM {
                return Err(Error::BadNorm { index: i, norm });
            }
        }
        for i in 0..codewords.len() {
            for j in 0..i {
                let overlap = codewords[j].dotc(&codewords[i]).norm();
                if overlap > tol::NORM {
                    return Err(Error::NonOrthogonal { i: j, j: i, overlap });
                }
            }
        }
        Ok(Self { n, k, codewords })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn codewords(&self) -> &[CVector] {
        &self.codewords
    }

    /// Largest `|⟨i|j⟩ − δ_ij|` over all codeword pairs.
    pub fn orthonormality_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for (i, a) in self.codewords.iter().enumerate() {
            for (j, b) in self.codewords.iter().enumerate() {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((a.dotc(b) - C64::new(target, 0.0)).norm());
            }
        }
        worst
    }

    /// Layout of the physical qubits `q0 .. q{n-1}`.
    pub fn qubit_layout(&self) -> Result<SubsystemLayout> {
        SubsystemLayout::qubits("q", self.n)
    }

    /// Labels of all physical qubits.
    pub fn qubit_labels(&self) -> Vec<String> {
        (0..self.n).map(qubit_label).collect()
    }
}

/// Logical amplitudes `a_i` of the state entangled with the reference.
#[derive(Debug, Clone, PartialEq)]
pub struct AmplitudeProfile(CVector);

impl AmplitudeProfile {
    pub fn new(a: CVector) -> Result<Self> {
        let norm = a.norm();
        if (norm - 1.0).abs() > tol::NORM {
            return Err(Error::NotNormalized { norm });
        }
        Ok(Self(a))
    }

    /// `|a_i|² = 2^-k`, the case where reference and code saturate their entropy.
    pub fn uniform(k: usize) -> Self {
        let d = 1usize << k;
        Self(CVector::from_element(d, C64::new(1.0 / (d as f64).sqrt(), 0.0)))
    }

    /// Real amplitudes `sqrt(p_i)` for a probability vector.
    pub fn from_probabilities(p: &[f64]) -> Result<Self> {
        if p.iter().any(|&x| x < 0.0) {
            return Err(Error::InvalidDistribution("negative probability".into()));
        }
        Self::new(CVector::from_iterator(p.len(), p.iter().map(|&x| C64::new(x.sqrt(), 0.0))))
    }

    /// All weight on logical basis state `index`.
    pub fn basis(k: usize, index: usize) -> Result<Self> {
        let d = 1usize << k;
        if index >= d {
            return Err(Error::DimensionMismatch { expected: d, found: index + 1 });
        }
        let mut a = CVector::zeros(d);
        a[index] = C64::new(1.0, 0.0);
        Ok(Self(a))
    }

    pub fn amplitudes(&self) -> &CVector {
        &self.0
    }

    pub fn probabilities(&self) -> Vec<f64> {
        self.0.iter().map(|a| a.norm_sqr()).collect()
    }
}

/// `Σ_i a_i |i⟩_R |i⟩_Q` over the layout `(R, q0, …, q{n-1})`, with `R` of
/// dimension `2^k`.
pub fn encode_entangled(code: &QuantumCode, amps: &AmplitudeProfile) -> Result<PureState> {
    let d_r = 1usize << code.k;
    if amps.0.len() != d_r {
        return Err(Error::DimensionMismatch { expected: d_r, found: amps.0.len() });
    }
    let layout = SubsystemLayout::new([(REFERENCE.to_owned(), d_r)])?.concat(&code.qubit_layout()?)?;
    let d_q = 1usize << code.n;
    let mut v = CVector::zeros(layout.total_dim());
    for (i, w) in code.codewords.iter().enumerate() {
        let a = amps.0[i];
        for (j, c) in w.iter().enumerate() {
            v[i * d_q + j] = a * c;
        }
    }
    PureState::new(layout, v)
}

/// Classical code: `2^k` distinct `n`-bit codewords with prior probabilities
/// on the logical words.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassicalCode {
    n: usize,
    k: usize,
    codewords: Vec<Vec<u8>>,
    priors: Vec<f64>,
}

impl ClassicalCode {
    pub fn new(n: usize, k: usize, codewords: Vec<Vec<u8>>, priors: Vec<f64>) -> Result<Self> {
        if k > n {
            return Err(Error::InvalidCode(format!("k = {k} exceeds n = {n}")));
        }
        if k >= usize::BITS as usize - 1 {
            return Err(Error::InvalidCode(format!("k = {k} too large")));
        }
        if codewords.len() != 1 << k {
            return Err(Error::InvalidCode(format!("expected {} codewords for k = {k}, found {}", 1 << k, codewords.len())));
        }
        for (i, w) in codewords.iter().enumerate() {
            if w.len() != n || w.iter().any(|&b| b > 1) {
                return Err(Error::InvalidCode(format!("codeword {i} is not an {n}-bit string")));
            }
            if let Some(j) = codewords[..i].iter().position(|v| v == w) {
                return Err(Error::DuplicateCodeword { i: j, j: i });
            }
        }
        if priors.len() != codewords.len() {
            return Err(Error::InvalidDistribution(format!("{} priors for {} codewords", priors.len(), codewords.len())));
        }
        crate::entropy::shannon_entropy(&priors)?;
        Ok(Self { n, k, codewords, priors })
    }

    /// Equiprobable logical words.
    pub fn with_uniform_priors(n: usize, k: usize, codewords: Vec<Vec<u8>>) -> Result<Self> {
        let p = 1.0 / (1usize << k) as f64;
        Self::new(n, k, codewords, vec![p; 1 << k])
    }

    /// Codewords from `0`/`1` strings, uniform priors.
    pub fn from_strings(k: usize, words: &[&str]) -> Result<Self> {
        let n = words.first().map_or(0, |w| w.len());
        let cw = words
            .iter()
            .map(|w| {
                w.bytes()
                    .map(|b| match b {
                        b'0' => Ok(0),
                        b'1' => Ok(1),
                        _ => Err(Error::InvalidCode(format!("`{w}` is not a bit string"))),
                    })
                    .collect::<Result<Vec<u8>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::with_uniform_priors(n, k, cw)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn codewords(&self) -> &[Vec<u8>] {
        &self.codewords
    }

    pub fn priors(&self) -> &[f64] {
        &self.priors
    }

    pub fn with_priors(&self, priors: Vec<f64>) -> Result<Self> {
        Self::new(self.n, self.k, self.codewords.clone(), priors)
    }

    pub fn codeword_string(&self, index: usize) -> String {
        self.codewords[index].iter().map(|b| if *b == 1 { '1' } else { '0' }).collect()
    }

    pub fn bit_labels(&self) -> Vec<String> {
        (0..self.n).map(bit_label).collect()
    }
}

/// Deterministic encoding channel: `P(x, w) = prior(x)` iff `w` is the
/// codeword of `x`. Variables are `X` (alphabet `2^k`) then `y0 … y{n-1}`.
pub fn classical_joint_distribution(code: &ClassicalCode) -> Result<JointDistribution> {
    let vars = std::iter::once((LOGICAL.to_owned(), 1usize << code.k)).chain((0..code.n).map(|i| (bit_label(i), 2)));
    let outcomes = code.codewords.iter().zip(&code.priors).enumerate().map(|(x, (w, &p))| {
        let mut o = Vec::with_capacity(code.n + 1);
        o.push(x);
        o.extend(w.iter().map(|&b| b as usize));
        (o, p)
    });
    JointDistribution::new(vars, outcomes)
}

/// A code of either kind.
#[derive(Debug, Clone, PartialEq)]
pub enum Code {
    Quantum(QuantumCode),
    Classical(ClassicalCode),
}

impl Code {
    pub fn n(&self) -> usize {
        match self {
            Code::Quantum(c) => c.n(),
            Code::Classical(c) => c.n(),
        }
    }

    pub fn k(&self) -> usize {
        match self {
            Code::Quantum(c) => c.k(),
            Code::Classical(c) => c.k(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Code::Quantum(_) => "quantum",
            Code::Classical(_) => "classical",
        }
    }
}

impl From<QuantumCode> for Code {
    fn from(c: QuantumCode) -> Self {
        Code::Quantum(c)
    }
}

impl From<ClassicalCode> for Code {
    fn from(c: ClassicalCode) -> Self {
        Code::Classical(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entropy::{entropy, mutual_entropy, conditional_entropy};

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    fn basis(dim: usize, i: usize) -> CVector {
        let mut v = CVector::zeros(dim);
        v[i] = c(1.0);
        v
    }

    #[test]
    fn quantum_validation() {
        assert!(QuantumCode::new(1, 1, vec![basis(2, 0), basis(2, 1)]).is_ok());
        assert!(matches!(QuantumCode::new(1, 2, vec![]), Err(Error::InvalidCode(_))));
        assert!(matches!(
            QuantumCode::new(1, 1, vec![basis(2, 0), basis(2, 0)]),
            Err(Error::DuplicateCodeword { i: 0, j: 1 })
        ));
        let short = basis(2, 1) * c(0.9);
        assert!(matches!(QuantumCode::new(1, 1, vec![basis(2, 0), short]), Err(Error::BadNorm { index: 1, .. })));
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let plus = CVector::from_vec(vec![c(h), c(h)]);
        match QuantumCode::new(1, 1, vec![basis(2, 0), plus]) {
            Err(Error::NonOrthogonal { i: 0, j: 1, overlap }) => assert!((overlap - h).abs() < 1e-12),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn uniform_encoding_entropy_is_k() {
        let code = QuantumCode::new(2, 1, vec![basis(4, 0), basis(4, 3)]).unwrap();
        let psi = encode_entangled(&code, &AmplitudeProfile::uniform(1)).unwrap();
        let q = code.qubit_labels();
        assert!((entropy(&psi, &[REFERENCE]).unwrap() - 1.0).abs() < 1e-12);
        assert!((entropy(&psi, &q).unwrap() - 1.0).abs() < 1e-12);
        let all: Vec<String> = std::iter::once(REFERENCE.to_owned()).chain(q).collect();
        assert!(entropy(&psi, &all).unwrap().abs() < 1e-12);
    }

    #[test]
    fn point_amplitudes_give_product() {
        let code = QuantumCode::new(2, 1, vec![basis(4, 0), basis(4, 3)]).unwrap();
        let psi = encode_entangled(&code, &AmplitudeProfile::basis(1, 0).unwrap()).unwrap();
        assert!(entropy(&psi, &[REFERENCE]).unwrap().abs() < 1e-12);
    }

    #[test]
    fn nonuniform_profile_entropy() {
        let code = QuantumCode::new(2, 2, (0..4).map(|i| basis(4, i)).collect()).unwrap();
        let amps = AmplitudeProfile::from_probabilities(&[0.5, 0.25, 0.25, 0.0]).unwrap();
        let psi = encode_entangled(&code, &amps).unwrap();
        assert!((entropy(&psi, &[REFERENCE]).unwrap() - 1.5).abs() < 1e-12);
        let wrong = AmplitudeProfile::uniform(1);
        assert!(matches!(encode_entangled(&code, &wrong), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn classical_distribution() {
        let rep3 = ClassicalCode::from_strings(1, &["000", "111"]).unwrap();
        let d = classical_joint_distribution(&rep3).unwrap();
        let y = rep3.bit_labels();
        assert_eq!(entropy(&d, &[LOGICAL]).unwrap(), 1.0);
        assert_eq!(mutual_entropy(&d, &[LOGICAL], &y).unwrap(), 1.0);
        assert_eq!(conditional_entropy(&d, &y, &[LOGICAL]).unwrap(), 0.0);

        let point = rep3.with_priors(vec![1.0, 0.0]).unwrap();
        let d = classical_joint_distribution(&point).unwrap();
        assert_eq!(entropy(&d, &[LOGICAL]).unwrap(), 0.0);
        assert_eq!(mutual_entropy(&d, &[LOGICAL], &y).unwrap(), 0.0);
    }

    #[test]
    fn classical_validation() {
        assert!(matches!(ClassicalCode::from_strings(1, &["000", "000"]), Err(Error::DuplicateCodeword { .. })));
        assert!(ClassicalCode::from_strings(1, &["000", "11"]).is_err());
        assert!(ClassicalCode::from_strings(1, &["000", "1a1"]).is_err());
        let rep3 = ClassicalCode::from_strings(1, &["000", "111"]).unwrap();
        assert!(rep3.with_priors(vec![0.7, 0.7]).is_err());
    }
}
