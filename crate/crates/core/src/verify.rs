//! Correction conditions and bounds.
//!
//! Quantum codes are checked entropically (`S(R:Q_e) = 0` for every erasure
//! pattern) and through the Knill–Laflamme matrix-element conditions. Both
//! sweeps are exhaustive, so codes are limited to [`MAX_SWEEP_QUBITS`].

use num_rational::Ratio;
use rayon::prelude::*;
use serde::Serialize;

use crate::channel::{combinations, ErasurePattern};
use crate::code::{bit_label, classical_joint_distribution, encode_entangled, AmplitudeProfile, ClassicalCode, QuantumCode, LOGICAL, REFERENCE};
use crate::entropy::EntropyCalc;
use crate::tensor::{CVector, PureState, C64};
use crate::{Error, Result};

/// Largest code length for which exhaustive pattern sweeps are run.
pub const MAX_SWEEP_QUBITS: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    pub const NONTRIVIAL: [Pauli; 3] = [Pauli::X, Pauli::Y, Pauli::Z];
    pub const ALL: [Pauli; 4] = [Pauli::I, Pauli::X, Pauli::Y, Pauli::Z];

    fn letter(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}

/// Tensor product of single-qubit Paulis; position 0 is the most significant factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliString {
    letters: Vec<Pauli>,
}

impl PauliString {
    pub fn new(letters: Vec<Pauli>) -> Self {
        Self { letters }
    }

    pub fn identity(n: usize) -> Self {
        Self { letters: vec![Pauli::I; n] }
    }

    /// `I` everywhere except `letters[j]` at `support[j]`.
    pub fn on(n: usize, support: &[usize], letters: &[Pauli]) -> Self {
        let mut p = Self::identity(n);
        for (&s, &l) in support.iter().zip(letters) {
            p.letters[s] = l;
        }
        p
    }

    pub fn parse(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .map(|c| match c {
                'I' => Ok(Pauli::I),
                'X' => Ok(Pauli::X),
                'Y' => Ok(Pauli::Y),
                'Z' => Ok(Pauli::Z),
                other => Err(Error::Precondition(format!("'{other}' is not a Pauli letter"))),
            })
            .collect::<Result<_>>()?;
        Ok(Self { letters })
    }

    pub fn n(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[Pauli] {
        &self.letters
    }

    pub fn weight(&self) -> usize {
        self.letters.iter().filter(|&&l| l != Pauli::I).count()
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.n()).filter(|&i| self.letters[i] != Pauli::I).collect()
    }

    /// `P|v⟩`, computed on basis indices without forming the matrix.
    pub fn apply(&self, v: &CVector) -> CVector {
        let n = self.n();
        let (mut flip, mut zmask, mut ymask) = (0usize, 0usize, 0usize);
        for (i, l) in self.letters.iter().enumerate() {
            let bit = 1usize << (n - 1 - i);
            match l {
                Pauli::I => {}
                Pauli::X => flip |= bit,
                Pauli::Z => zmask |= bit,
                Pauli::Y => {
                    flip |= bit;
                    ymask |= bit;
                }
            }
        }
        let ny = ymask.count_ones();
        // Y = iXZ: each Y contributes i, and −1 when its input bit is 1
        let base = [C64::new(1.0, 0.0), C64::new(0.0, 1.0), C64::new(-1.0, 0.0), C64::new(0.0, -1.0)][(ny % 4) as usize];
        let mut out = CVector::zeros(v.len());
        for x in 0..v.len() {
            let sign = if ((x & (zmask | ymask)).count_ones()) % 2 == 1 { -1.0 } else { 1.0 };
            out[x ^ flip] = v[x] * base * sign;
        }
        out
    }
}

impl std::fmt::Display for PauliString {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.letters.iter().try_for_each(|l| write!(f, "{}", l.letter()))
    }
}

impl Serialize for PauliString {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// All `4^|support|` strings supported inside `support`, letters ordered
/// `I < X < Y < Z` with the first position most significant.
pub fn paulis_within(n: usize, support: &[usize]) -> Vec<PauliString> {
    let mut out = Vec::with_capacity(1 << (2 * support.len()));
    for code in 0..(1usize << (2 * support.len())) {
        let letters: Vec<Pauli> = (0..support.len())
            .map(|j| Pauli::ALL[(code >> (2 * (support.len() - 1 - j))) & 3])
            .collect();
        out.push(PauliString::on(n, support, &letters));
    }
    out
}

/// All strings of weight `≤ w`: weight ascending, supports lexicographic,
/// letters `X < Y < Z` with the first position most significant.
pub fn paulis_up_to_weight(n: usize, w: usize) -> Vec<PauliString> {
    let mut out = Vec::new();
    for weight in 0..=w.min(n) {
        for support in combinations(n, weight) {
            for code in 0..3usize.pow(weight as u32) {
                let letters: Vec<Pauli> = (0..weight)
                    .map(|j| Pauli::NONTRIVIAL[(code / 3usize.pow((weight - 1 - j) as u32)) % 3])
                    .collect();
                out.push(PauliString::on(n, &support, &letters));
            }
        }
    }
    out
}

/// One violation found by a check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    /// Erasure pattern, or the support of the offending operator.
    pub pattern: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub operator: Option<PauliString>,
    pub magnitude: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Verdict {
    pub pass: bool,
    pub witnesses: Vec<Witness>,
    pub tolerance: f64,
}

impl Verdict {
    fn from_witnesses(witnesses: Vec<Witness>, tolerance: f64) -> Self {
        Self { pass: witnesses.is_empty(), witnesses, tolerance }
    }
}

fn check_sweep(n: usize, e: usize) -> Result<()> {
    if n > MAX_SWEEP_QUBITS {
        return Err(Error::Precondition(format!("exhaustive sweeps are limited to n ≤ {MAX_SWEEP_QUBITS}, got n = {n}")));
    }
    if e > n {
        return Err(Error::Precondition(format!("cannot erase {e} of {n} qubits")));
    }
    Ok(())
}

/// `S(R:Q_e)` for every `e`-pattern of `psi` over `(R, q0, …)`, in
/// lexicographic pattern order.
pub fn erasure_mutual_profile(psi: &PureState, n: usize, e: usize) -> Result<Vec<(ErasurePattern, f64)>> {
    ErasurePattern::all(n, e)
        .into_par_iter()
        .map(|p| {
            let mut calc = EntropyCalc::new(psi);
            let r = calc.resolve(&[REFERENCE])?;
            let qe = calc.resolve(&p.labels())?;
            let m = calc.mutual(&r, &qe)?;
            Ok((p, m))
        })
        .collect()
}

/// Entropic erasure condition with maximal (uniform) entanglement to the
/// reference: pass iff `S(R:Q_e) ≤ tol` for every `e`-pattern.
pub fn entropic_erasure_check(code: &QuantumCode, e: usize, tol: f64) -> Result<Verdict> {
    check_sweep(code.n(), e)?;
    let psi = encode_entangled(code, &AmplitudeProfile::uniform(code.k()))?;
    let witnesses = erasure_mutual_profile(&psi, code.n(), e)?
        .into_iter()
        .filter(|(_, m)| *m > tol)
        .map(|(p, m)| Witness { pattern: p.indices().to_vec(), operator: None, magnitude: m })
        .collect();
    Ok(Verdict::from_witnesses(witnesses, tol))
}

/// Largest deviation from `⟨c_i|P|c_j⟩ = C_P δ_ij` over all codeword pairs.
pub fn kl_violation(code: &QuantumCode, p: &PauliString) -> f64 {
    let words = code.codewords();
    let images: Vec<CVector> = words.iter().map(|c| p.apply(c)).collect();
    let reference = words[0].dotc(&images[0]);
    let mut worst = 0.0f64;
    for (i, ci) in words.iter().enumerate() {
        for (j, img) in images.iter().enumerate() {
            let v = ci.dotc(img);
            let dev = if i == j { (v - reference).norm() } else { v.norm() };
            worst = worst.max(dev);
        }
    }
    worst
}

fn first_violation(code: &QuantumCode, ops: &[PauliString], tol: f64) -> Option<(PauliString, f64)> {
    ops.iter().find_map(|p| {
        let v = kl_violation(code, p);
        (v > tol).then(|| (p.clone(), v))
    })
}

/// Knill–Laflamme erasure conditions: for every `e`-pattern and every Pauli
/// supported inside it, diagonal elements are uniform and off-diagonal
/// elements vanish. One witness per violating pattern, naming the first
/// offending operator.
pub fn kl_erasure_check(code: &QuantumCode, e: usize, tol: f64) -> Result<Verdict> {
    check_sweep(code.n(), e)?;
    let witnesses: Vec<Option<Witness>> = combinations(code.n(), e)
        .into_par_iter()
        .map(|pattern| {
            first_violation(code, &paulis_within(code.n(), &pattern), tol)
                .map(|(op, magnitude)| Witness { pattern, operator: Some(op), magnitude })
        })
        .collect();
    Ok(Verdict::from_witnesses(witnesses.into_iter().flatten().collect(), tol))
}

/// Knill–Laflamme error conditions for `t` errors at unknown positions, in
/// the form: every Pauli of weight `≤ 2t` satisfies the matrix-element
/// conditions. One witness per violating support.
pub fn kl_error_check(code: &QuantumCode, t: usize, tol: f64) -> Result<Verdict> {
    check_sweep(code.n(), 2 * t)?;
    let n = code.n();
    let supports: Vec<Vec<usize>> = (0..=2 * t).flat_map(|w| combinations(n, w)).collect();
    let witnesses: Vec<Option<Witness>> = supports
        .into_par_iter()
        .map(|support| {
            let ops: Vec<PauliString> = paulis_within(n, &support).into_iter().filter(|p| p.weight() == support.len()).collect();
            first_violation(code, &ops, tol).map(|(op, magnitude)| Witness { pattern: support, operator: Some(op), magnitude })
        })
        .collect();
    Ok(Verdict::from_witnesses(witnesses.into_iter().flatten().collect(), tol))
}

/// Whether the `t`-error and `2t`-erasure verdicts agree.
pub fn equivalence_check(code: &QuantumCode, t: usize, tol: f64) -> Result<bool> {
    Ok(kl_error_check(code, t, tol)?.pass == kl_erasure_check(code, 2 * t, tol)?.pass)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DistanceReport {
    pub min_distance: usize,
    pub max_t: usize,
    pub max_e: usize,
}

pub fn classical_distance_check(code: &ClassicalCode) -> Result<DistanceReport> {
    let words = code.codewords();
    if words.len() < 2 {
        return Err(Error::Precondition("minimum distance needs at least two codewords".into()));
    }
    let mut d = usize::MAX;
    for (i, a) in words.iter().enumerate() {
        for b in &words[i + 1..] {
            d = d.min(a.iter().zip(b).filter(|(x, y)| x != y).count());
        }
    }
    Ok(DistanceReport { min_distance: d, max_t: d.saturating_sub(1) / 2, max_e: d.saturating_sub(1) })
}

fn bit_positions(code: &ClassicalCode, bits: &[usize]) -> Result<Vec<String>> {
    bits.iter()
        .map(|&i| if i < code.n() { Ok(bit_label(i)) } else { Err(Error::PatternOutOfRange { index: i, n: code.n() }) })
        .collect()
}

/// Entropies of the logical variable against the erased and unaffected bits.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClassicalErasureReport {
    /// `H(X|Y_u)`
    pub x_given_unaffected: f64,
    /// `H(X:Y_e|Y_u)`
    pub x_erased_given_unaffected: f64,
    /// `H(X:Y_u)`
    pub x_unaffected: f64,
    /// `H(X:Y_e)`
    pub x_erased: f64,
    /// `H(X|Y)`, zero for a deterministic encoding.
    pub x_given_word: f64,
}

impl ClassicalErasureReport {
    pub fn correctable(&self, tol: f64) -> bool {
        self.x_given_unaffected <= tol
    }
}

pub fn classical_erasure_entropy_check(code: &ClassicalCode, pattern: &[usize]) -> Result<ClassicalErasureReport> {
    let mut erased = pattern.to_vec();
    erased.sort_unstable();
    erased.dedup();
    let erased_labels = bit_positions(code, &erased)?;
    let unaffected_labels: Vec<String> = (0..code.n()).filter(|i| !erased.contains(i)).map(bit_label).collect();
    let dist = classical_joint_distribution(code)?;
    let mut calc = EntropyCalc::new(&dist);
    let x = calc.resolve(&[LOGICAL])?;
    let ye = calc.resolve(&erased_labels)?;
    let yu = calc.resolve(&unaffected_labels)?;
    let y: Vec<usize> = ye.iter().chain(&yu).copied().collect();
    Ok(ClassicalErasureReport {
        x_given_unaffected: calc.conditional(&x, &yu)?,
        x_erased_given_unaffected: calc.conditional_mutual(&x, &ye, &yu)?,
        x_unaffected: calc.mutual(&x, &yu)?,
        x_erased: calc.mutual(&x, &ye)?,
        x_given_word: calc.conditional(&x, &y)?,
    })
}

/// Mutual informations of `X` with two disjoint groups of codeword bits.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SplitReport {
    /// `H(X:Y1)`
    pub x_first: f64,
    /// `H(X:Y2)`
    pub x_second: f64,
    /// `H(X:Y1Y2)`
    pub x_both: f64,
    /// `H(Y1:Y2|X)`
    pub first_second_given_x: f64,
    /// `H(X)`
    pub x: f64,
    /// When `Y1Y2` carries all of `X` and the groups are independent given
    /// `X`, the two parts cannot both be independent of `X`:
    /// `H(X:Y1) + H(X:Y2) ≥ H(X)`.
    pub contract_holds: bool,
}

pub fn classical_no_independent_split(code: &ClassicalCode, y1: &[usize], y2: &[usize], tol: f64) -> Result<SplitReport> {
    if y1.is_empty() || y2.is_empty() {
        return Err(Error::EmptySelection);
    }
    let dist = classical_joint_distribution(code)?;
    let mut calc = EntropyCalc::new(&dist);
    let x = calc.resolve(&[LOGICAL])?;
    let a = calc.resolve(&bit_positions(code, y1)?)?;
    let b = calc.resolve(&bit_positions(code, y2)?)?;
    let ab: Vec<usize> = a.iter().chain(&b).copied().collect();
    let x_first = calc.mutual(&x, &a)?;
    let x_second = calc.mutual(&x, &b)?;
    let x_both = calc.mutual(&x, &ab)?;
    let first_second_given_x = calc.conditional_mutual(&a, &b, &x)?;
    let hx = calc.entropy(&x)?;
    let premise = (x_both - hx).abs() <= tol && first_second_given_x <= tol;
    Ok(SplitReport {
        x_first,
        x_second,
        x_both,
        first_second_given_x,
        x: hx,
        contract_holds: !premise || x_first + x_second >= hx - tol,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    /// `k ≤ n − 2e`
    QuantumErasure,
    /// `k ≤ n − 4t`
    QuantumError,
    /// `k ≤ n − e`
    ClassicalErasure,
    /// `k ≤ n − 2t`
    ClassicalError,
}

impl BoundKind {
    fn factor(self) -> i64 {
        match self {
            BoundKind::QuantumErasure => 2,
            BoundKind::QuantumError => 4,
            BoundKind::ClassicalErasure => 1,
            BoundKind::ClassicalError => 2,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SingletonBound {
    pub kind: BoundKind,
    pub n: usize,
    pub k: usize,
    pub param: usize,
    /// Right-hand side of the bound; negative when no code can exist.
    pub limit: i64,
    pub holds: bool,
    pub saturated: bool,
}

pub fn singleton_bound(n: usize, k: usize, param: usize, kind: BoundKind) -> SingletonBound {
    let limit = n as i64 - kind.factor() * param as i64;
    SingletonBound { kind, n, k, param, limit, holds: k as i64 <= limit, saturated: k as i64 == limit }
}

pub fn singleton_check(n: usize, k: usize, param: usize, kind: BoundKind) -> bool {
    singleton_bound(n, k, param, kind).holds
}

/// Entropies for one pair of disjoint erasure patterns `(Q_e, Q_e')` with
/// remainder `Q*`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SingletonPair {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    pub remainder: Vec<usize>,
    pub s_first: f64,
    pub s_second: f64,
    pub s_remainder: f64,
    /// `S(Q_u) − k − S(Q_e)` and its mirror for `Q_u'`
    pub unaffected_residuals: [f64; 2],
    /// `k + S(Q_e) − S(Q_e') ≤ S(Q*)` and its mirror
    pub subadditivity: [bool; 2],
    /// `k ≤ S(Q*) ≤ n − 2e`
    pub remainder_bounds: bool,
}

impl SingletonPair {
    pub fn holds(&self, tol: f64) -> bool {
        self.unaffected_residuals.iter().all(|r| r.abs() <= tol) && self.subadditivity.iter().all(|&b| b) && self.remainder_bounds
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SingletonWitness {
    pub n: usize,
    pub k: usize,
    pub e: usize,
    pub pairs: Vec<SingletonPair>,
    pub all_hold: bool,
    pub tolerance: f64,
}

/// Evaluates the entropic argument behind `k ≤ n − 2e` on an actual code,
/// for every unordered pair of disjoint `e`-patterns.
pub fn singleton_witness(code: &QuantumCode, e: usize, tol: f64) -> Result<SingletonWitness> {
    let (n, k) = (code.n(), code.k());
    if 2 * e > n {
        return Err(Error::Precondition(format!("two disjoint {e}-patterns need 2e ≤ n, got n = {n}")));
    }
    let verdict = entropic_erasure_check(code, e, tol)?;
    if !verdict.pass {
        return Err(Error::Precondition(format!(
            "code does not satisfy the entropic erasure condition for e = {e} ({} violating patterns)",
            verdict.witnesses.len()
        )));
    }
    let psi = encode_entangled(code, &AmplitudeProfile::uniform(k))?;
    let patterns = combinations(n, e);
    let mut pairs = Vec::new();
    for (i, a) in patterns.iter().enumerate() {
        let start = if e == 0 { i } else { i + 1 };
        for b in &patterns[start..] {
            if a.iter().any(|x| b.contains(x)) {
                continue;
            }
            pairs.push((a.clone(), b.clone()));
        }
    }
    let kf = k as f64;
    let upper = (n - 2 * e) as f64;
    let pairs: Vec<SingletonPair> = pairs
        .into_par_iter()
        .map(|(first, second)| {
            let remainder: Vec<usize> = (0..n).filter(|x| !first.contains(x) && !second.contains(x)).collect();
            let mut calc = EntropyCalc::new(&psi);
            let pos = |c: &EntropyCalc<PureState>, idx: &[usize]| c.resolve(&idx.iter().map(|&i| crate::code::qubit_label(i)).collect::<Vec<_>>());
            let (qa, qb, qs) = (pos(&calc, &first)?, pos(&calc, &second)?, pos(&calc, &remainder)?);
            let s_first = calc.entropy(&qa)?;
            let s_second = calc.entropy(&qb)?;
            let s_remainder = calc.entropy(&qs)?;
            let s_ua = calc.joint(&[&qb, &qs])?;
            let s_ub = calc.joint(&[&qa, &qs])?;
            Ok(SingletonPair {
                unaffected_residuals: [s_ua - kf - s_first, s_ub - kf - s_second],
                subadditivity: [kf + s_first - s_second <= s_remainder + tol, kf + s_second - s_first <= s_remainder + tol],
                remainder_bounds: kf - tol <= s_remainder && s_remainder <= upper + tol,
                first,
                second,
                remainder,
                s_first,
                s_second,
                s_remainder,
            })
        })
        .collect::<Result<_>>()?;
    let all_hold = pairs.iter().all(|p| p.holds(tol));
    Ok(SingletonWitness { n, k, e, pairs, all_hold, tolerance: tol })
}

/// Fractional number of clones `N_c = e/(n−e)` against its bounds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CloningNumber {
    pub n_c: Ratio<u64>,
    /// Quantum limit `(n−k)/(n+k)`.
    pub bound: Ratio<u64>,
    /// Classical limit `(n−k)/k`; unbounded for `k = 0`.
    pub classical_bound: Option<Ratio<u64>>,
    pub n_c_value: f64,
    pub bound_value: f64,
    pub within_bound: bool,
    pub saturated: bool,
}

fn ratio_value(r: Ratio<u64>) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

pub fn cloning_number(n: usize, k: usize, e: usize) -> Result<CloningNumber> {
    if e >= n {
        return Err(Error::Precondition(format!("cloning number needs e < n, got e = {e}, n = {n}")));
    }
    if k > n {
        return Err(Error::Precondition(format!("k = {k} exceeds n = {n}")));
    }
    let (n, k, e) = (n as u64, k as u64, e as u64);
    let n_c = Ratio::new(e, n - e);
    let bound = Ratio::new(n - k, n + k);
    let classical_bound = (k > 0).then(|| Ratio::new(n - k, k));
    let (n_c_value, bound_value) = (ratio_value(n_c), ratio_value(bound));
    Ok(CloningNumber {
        n_c,
        bound,
        classical_bound,
        n_c_value,
        bound_value,
        within_bound: n_c <= bound,
        saturated: (n_c_value - bound_value).abs() <= 1e-12,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{builtin_code, Code};
    use crate::tensor::{kron, CMatrix};
    use crate::tol;

    fn quantum(name: &str) -> QuantumCode {
        match builtin_code(name).unwrap() {
            Code::Quantum(q) => q,
            _ => unreachable!(),
        }
    }

    fn classical(name: &str) -> ClassicalCode {
        match builtin_code(name).unwrap() {
            Code::Classical(c) => c,
            _ => unreachable!(),
        }
    }

    fn single(l: Pauli) -> CMatrix {
        let (o, z, i) = (C64::new(1.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 1.0));
        match l {
            Pauli::I => CMatrix::from_row_slice(2, 2, &[o, z, z, o]),
            Pauli::X => CMatrix::from_row_slice(2, 2, &[z, o, o, z]),
            Pauli::Y => CMatrix::from_row_slice(2, 2, &[z, -i, i, z]),
            Pauli::Z => CMatrix::from_row_slice(2, 2, &[o, z, z, -o]),
        }
    }

    #[test]
    fn pauli_apply_matches_kronecker_matrix() {
        let v = crate::tensor::random_pure_state(8, 5).unwrap();
        for s in ["XYZ", "YYI", "IZY", "ZXX", "III"] {
            let p = PauliString::parse(s).unwrap();
            let m = p.letters().iter().fold(CMatrix::identity(1, 1), |acc, &l| kron(&acc, &single(l)).unwrap());
            let expect = &m * v.amplitudes();
            assert!((p.apply(v.amplitudes()) - expect).norm() < 1e-12, "{s}");
        }
    }

    #[test]
    fn pauli_string_properties() {
        let p = PauliString::parse("IXIZY").unwrap();
        assert_eq!(p.weight(), 3);
        assert_eq!(p.support(), vec![1, 3, 4]);
        assert_eq!(p.to_string(), "IXIZY");
        assert!(PauliString::parse("XA").is_err());
    }

    #[test]
    fn enumeration_orders() {
        let within: Vec<String> = paulis_within(3, &[0, 2]).iter().map(|p| p.to_string()).collect();
        assert_eq!(within.len(), 16);
        assert_eq!(&within[..5], &["III", "IIX", "IIY", "IIZ", "XII"]);
        let up: Vec<String> = paulis_up_to_weight(3, 1).iter().map(|p| p.to_string()).collect();
        assert_eq!(up, ["III", "XII", "YII", "ZII", "IXI", "IYI", "IZI", "IIX", "IIY", "IIZ"]);
        assert_eq!(paulis_up_to_weight(5, 2).len(), 1 + 15 + 90);
    }

    #[test]
    fn entropic_checks() {
        let five = quantum("five-qubit");
        assert!(entropic_erasure_check(&five, 2, tol::ENT).unwrap().pass);
        let rep3 = quantum("quantum-rep3");
        let v = entropic_erasure_check(&rep3, 1, tol::ENT).unwrap();
        assert!(!v.pass);
        assert_eq!(v.witnesses.len(), 3);
        assert!(v.witnesses.iter().all(|w| (w.magnitude - 1.0).abs() < 1e-9));
        assert!(entropic_erasure_check(&rep3, 0, tol::ENT).unwrap().pass);
        assert!(entropic_erasure_check(&quantum("four-qubit"), 1, tol::ENT).unwrap().pass);
        assert!(!entropic_erasure_check(&quantum("four-qubit"), 2, tol::ENT).unwrap().pass);
    }

    #[test]
    fn kl_checks() {
        let five = quantum("five-qubit");
        assert!(kl_erasure_check(&five, 2, tol::KL).unwrap().pass);
        assert!(kl_error_check(&five, 1, tol::KL).unwrap().pass);
        assert!(!kl_error_check(&five, 2, tol::KL).unwrap().pass);
        let rep3 = quantum("quantum-rep3");
        let v = kl_erasure_check(&rep3, 1, tol::KL).unwrap();
        assert!(!v.pass);
        assert_eq!(v.witnesses[0].operator.as_ref().unwrap().to_string(), "ZII");
        assert!((v.witnesses[0].magnitude - 2.0).abs() < 1e-12);
        assert!(!kl_error_check(&rep3, 1, tol::KL).unwrap().pass);
        assert!(kl_erasure_check(&quantum("four-qubit"), 1, tol::KL).unwrap().pass);
    }

    #[test]
    fn kl_trivial_code_passes() {
        let mut v = CVector::zeros(4);
        v[0] = C64::new(1.0, 0.0);
        let code = QuantumCode::new(2, 0, vec![v]).unwrap();
        assert!(kl_erasure_check(&code, 2, tol::KL).unwrap().pass);
        assert!(entropic_erasure_check(&code, 2, tol::ENT).unwrap().pass);
    }

    #[test]
    fn equivalence_examples() {
        assert!(equivalence_check(&quantum("five-qubit"), 1, tol::KL).unwrap());
        assert!(equivalence_check(&quantum("quantum-rep3"), 1, tol::KL).unwrap());
        assert!(equivalence_check(&quantum("quantum-rep3"), 0, tol::KL).unwrap());
    }

    #[test]
    fn sweep_limits() {
        assert!(matches!(entropic_erasure_check(&quantum("quantum-rep3"), 4, tol::ENT), Err(Error::Precondition(_))));
    }

    #[test]
    fn classical_distance() {
        assert_eq!(classical_distance_check(&classical("classical-rep3")).unwrap(), DistanceReport { min_distance: 3, max_t: 1, max_e: 2 });
        assert_eq!(classical_distance_check(&classical("classical-5-2")).unwrap(), DistanceReport { min_distance: 3, max_t: 1, max_e: 2 });
        let id = ClassicalCode::from_strings(2, &["00", "01", "10", "11"]).unwrap();
        assert_eq!(classical_distance_check(&id).unwrap(), DistanceReport { min_distance: 1, max_t: 0, max_e: 0 });
    }

    #[test]
    fn classical_erasure_entropies() {
        let r = classical_erasure_entropy_check(&classical("classical-5-2"), &[0, 4]).unwrap();
        assert!((r.x_unaffected - 2.0).abs() < 1e-12);
        assert!((r.x_erased - 1.0).abs() < 1e-12);
        assert!(r.correctable(tol::ENT));
        let r = classical_erasure_entropy_check(&classical("classical-rep3"), &[0]).unwrap();
        assert!(r.x_given_unaffected.abs() < 1e-12);
        assert!((r.x_erased - 1.0).abs() < 1e-12);
        let r = classical_erasure_entropy_check(&classical("classical-rep3"), &[]).unwrap();
        assert!(r.x_given_unaffected.abs() < 1e-12);
        let r = classical_erasure_entropy_check(&classical("classical-rep3"), &[0, 1, 2]).unwrap();
        assert!((r.x_given_unaffected - 1.0).abs() < 1e-12);
        assert!(!r.correctable(tol::ENT));
    }

    #[test]
    fn independent_split_impossible() {
        let r = classical_no_independent_split(&classical("classical-5-2"), &[0, 1], &[2, 3, 4], tol::ENT).unwrap();
        assert!(r.x_first + r.x_second >= 2.0 - 1e-12);
        assert!(r.contract_holds);
        let r = classical_no_independent_split(&classical("classical-rep3"), &[0], &[1, 2], tol::ENT).unwrap();
        assert!((r.x_first - 1.0).abs() < 1e-12 && (r.x_second - 1.0).abs() < 1e-12);
        let constant = ClassicalCode::from_strings(0, &["101"]).unwrap();
        let r = classical_no_independent_split(&constant, &[0], &[1], tol::ENT).unwrap();
        assert!(r.x.abs() < 1e-12 && r.x_first.abs() < 1e-12 && r.contract_holds);
    }

    #[test]
    fn singleton_bounds() {
        let b = singleton_bound(5, 1, 2, BoundKind::QuantumErasure);
        assert!(b.holds && b.saturated);
        assert!(singleton_bound(4, 2, 1, BoundKind::QuantumErasure).saturated);
        assert!(!singleton_check(4, 3, 1, BoundKind::QuantumErasure));
        assert!(singleton_bound(5, 1, 1, BoundKind::QuantumError).saturated);
        assert!(!singleton_check(5, 1, 2, BoundKind::QuantumError));
        assert!(singleton_check(3, 1, 2, BoundKind::ClassicalErasure));
        assert!(singleton_check(3, 1, 1, BoundKind::ClassicalError));
    }

    #[test]
    fn singleton_witness_examples() {
        let w = singleton_witness(&quantum("five-qubit"), 2, tol::ENT).unwrap();
        assert_eq!(w.pairs.len(), 15);
        assert!(w.all_hold);
        assert!(w.pairs.iter().all(|p| (p.s_remainder - 1.0).abs() < 1e-9));
        let w = singleton_witness(&quantum("four-qubit"), 1, tol::ENT).unwrap();
        assert!(w.all_hold);
        assert!(w.pairs.iter().all(|p| p.s_remainder >= 2.0 - 1e-9));
        let w = singleton_witness(&quantum("quantum-rep3"), 0, tol::ENT).unwrap();
        assert_eq!(w.pairs.len(), 1);
        assert!((w.pairs[0].s_remainder - 1.0).abs() < 1e-9);
        assert!(matches!(singleton_witness(&quantum("quantum-rep3"), 1, tol::ENT), Err(Error::Precondition(_))));
        assert!(matches!(singleton_witness(&quantum("five-qubit"), 3, tol::ENT), Err(Error::Precondition(_))));
    }

    #[test]
    fn cloning_numbers() {
        let c = cloning_number(5, 1, 2).unwrap();
        assert_eq!(c.n_c, Ratio::new(2, 3));
        assert_eq!(c.bound, Ratio::new(2, 3));
        assert!(c.saturated && c.within_bound);
        assert_eq!(c.classical_bound, Some(Ratio::new(4, 1)));
        let c = cloning_number(3, 3, 0).unwrap();
        assert_eq!(c.n_c, Ratio::new(0, 1));
        assert_eq!(c.bound, Ratio::new(0, 1));
        assert!(c.saturated);
        assert_eq!(cloning_number(4, 0, 0).unwrap().classical_bound, None);
        assert!(cloning_number(3, 1, 3).is_err());
    }
}
