//! Search for erasure-correcting codes.
//!
//! The encoder is a `2^n × 2^k` isometry `V` whose columns are the codewords.
//! The objective is the worst-pattern mutual entanglement
//! `max_{Q_e} S(R:Q_e)` under uniform amplitudes. Each restart starts from a
//! Haar-random isometry and runs a (1+1) random search: perturb `V` by a
//! scaled complex Gaussian, restore orthonormality with a thin QR, keep the
//! candidate only if the objective improves, and adapt the step
//! geometrically.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::code::{encode_entangled, format_code, Code, qubit_label, AmplitudeProfile, QuantumCode, REFERENCE};
use crate::tensor::random::{gaussian, haar_unitary_with};
use crate::channel::combinations;
use crate::entropy::spectrum_entropy;
use crate::tensor::state::split_spectrum;
use crate::tensor::{CMatrix, CVector, PureState, SubsystemLayout, C64};
use crate::verify::{erasure_mutual_profile, singleton_bound, BoundKind, MAX_SWEEP_QUBITS};
use crate::{tol, Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchConfig {
    pub n: usize,
    pub k: usize,
    pub e: usize,
    pub restarts: usize,
    pub max_iters: usize,
    /// Candidate perturbations drawn per iteration; the best one competes
    /// with the current point.
    pub offspring: usize,
    /// Initial perturbation scale.
    pub initial_step: f64,
    /// Step multiplier after an accepted move.
    pub step_growth: f64,
    /// Step multiplier after a rejected move.
    pub step_decay: f64,
    /// A restart stops early once its step falls below this.
    pub min_step: f64,
    pub seed: u64,
    /// Convergence threshold on the objective, in bits.
    pub target: f64,
}

impl SearchConfig {
    pub const DEFAULT_RESTARTS: usize = 32;
    pub const DEFAULT_MAX_ITERS: usize = 2000;
    pub const DEFAULT_OFFSPRING: usize = 8;

    pub fn new(n: usize, k: usize, e: usize) -> Self {
        Self {
            n,
            k,
            e,
            restarts: Self::DEFAULT_RESTARTS,
            max_iters: Self::DEFAULT_MAX_ITERS,
            offspring: Self::DEFAULT_OFFSPRING,
            initial_step: 0.3,
            step_growth: 1.3,
            step_decay: 0.85,
            min_step: 1e-9,
            seed: 0,
            target: tol::SEARCH,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_budget(mut self, restarts: usize, max_iters: usize) -> Self {
        self.restarts = restarts;
        self.max_iters = max_iters;
        self
    }

    /// Rejects parameters that no code can meet, or that the search cannot run.
    pub fn validate(&self) -> Result<()> {
        if self.k > self.n {
            return Err(Error::SingletonViolation(format!("k ≤ n violated: {} > {}", self.k, self.n)));
        }
        let bound = singleton_bound(self.n, self.k, self.e, BoundKind::QuantumErasure);
        if !bound.holds {
            return Err(Error::SingletonViolation(format!(
                "k ≤ n−2e violated: {} > {} (n = {}, e = {})",
                self.k, bound.limit, self.n, self.e
            )));
        }
        if self.n == 0 || self.n > MAX_SWEEP_QUBITS {
            return Err(Error::Precondition(format!("search supports 1 ≤ n ≤ {MAX_SWEEP_QUBITS}, got n = {}", self.n)));
        }
        if self.restarts == 0 || self.offspring == 0 {
            return Err(Error::Precondition("at least one restart and one offspring are required".into()));
        }
        let positive = |x: f64| x.is_finite() && x > 0.0;
        if !(positive(self.initial_step) && positive(self.min_step) && positive(self.step_decay) && self.step_decay < 1.0 && self.step_growth >= 1.0) {
            return Err(Error::Precondition("step schedule needs positive steps, decay in (0,1) and growth ≥ 1".into()));
        }
        if !(self.target >= 0.0) {
            return Err(Error::Precondition("target must be non-negative".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchResult {
    /// Serialised as code-file text.
    #[serde(serialize_with = "code_as_text")]
    pub best_code: QuantumCode,
    pub objective: f64,
    /// Accepted objective value after each iteration of the winning restart,
    /// starting with the initial isometry.
    pub trace: Vec<f64>,
    pub converged: bool,
    /// Index of the winning restart.
    pub restart: usize,
    pub config: SearchConfig,
}

fn code_as_text<S: serde::Serializer>(code: &QuantumCode, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_code(&Code::Quantum(code.clone())))
}

/// Worst-pattern `S(R:Q_e)` with uniform amplitudes.
pub fn objective(code: &QuantumCode, e: usize) -> Result<f64> {
    let psi = encode_entangled(code, &AmplitudeProfile::uniform(code.k()))?;
    worst_pattern(&psi, code.n(), e)
}

fn worst_pattern(psi: &PureState, n: usize, e: usize) -> Result<f64> {
    if e > n {
        return Err(Error::PatternOutOfRange { index: e, n });
    }
    let profile = erasure_mutual_profile(psi, n, e)?;
    Ok(profile.into_iter().map(|(_, m)| m).fold(0.0, f64::max))
}

type SplitTable = (usize, usize, Vec<usize>);

/// Evaluates isometries of one shape, reusing the index tables of every
/// erasure pattern.
struct Evaluator {
    k: usize,
    reference: SplitTable,
    /// `(Q_e, R Q_e)` tables per pattern.
    patterns: Vec<(SplitTable, SplitTable)>,
}

impl Evaluator {
    fn new(n: usize, k: usize, e: usize) -> Result<Self> {
        if e > n {
            return Err(Error::PatternOutOfRange { index: e, n });
        }
        let layout = SubsystemLayout::new([(REFERENCE.to_owned(), 1usize << k)])?
            .concat(&SubsystemLayout::new((0..n).map(|i| (qubit_label(i), 2)))?)?;
        let patterns = combinations(n, e)
            .into_iter()
            .filter(|p| !p.is_empty())
            .map(|p| {
                let qe: Vec<usize> = p.iter().map(|i| i + 1).collect();
                let rqe: Vec<usize> = std::iter::once(0).chain(qe.iter().copied()).collect();
                (layout.split_table(&qe), layout.split_table(&rqe))
            })
            .collect();
        Ok(Self { k, reference: layout.split_table(&[0]), patterns })
    }

    fn value(&self, v: &CMatrix) -> Result<f64> {
        let scale = 1.0 / ((1usize << self.k) as f64).sqrt();
        // column-major storage of V is exactly the R-major amplitude order
        let amps = CVector::from_iterator(v.len(), v.iter().map(|c| c * scale));
        let s = |t: &SplitTable| spectrum_entropy(&split_spectrum(&amps, t.0, t.1, &t.2)?);
        let s_r = s(&self.reference)?;
        let mut worst = 0.0f64;
        for (qe, rqe) in &self.patterns {
            worst = worst.max(s_r + s(qe)? - s(rqe)?);
        }
        Ok(worst)
    }
}

/// Orthonormal columns spanning the same space as those of `m`.
fn orthonormalize(m: CMatrix) -> CMatrix {
    let cols = m.ncols();
    let q = m.qr().q();
    q.columns(0, cols).into_owned()
}

/// Gaussian direction with the component inside the code space removed:
/// moves of the form `V ↦ V A` only rotate the logical basis and leave the
/// objective unchanged.
fn horizontal_noise(rng: &mut ChaCha8Rng, v: &CMatrix) -> CMatrix {
    let g = CMatrix::from_fn(v.nrows(), v.ncols(), |_, _| gaussian(rng));
    let inside = v * (v.adjoint() * &g);
    g - inside
}

struct RestartOutcome {
    v: CMatrix,
    value: f64,
    trace: Vec<f64>,
}

fn run_restart(config: &SearchConfig, eval: &Evaluator, restart: usize) -> Result<RestartOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed.wrapping_add(restart as u64));
    let (rows, cols) = (1usize << config.n, 1usize << config.k);
    let mut v = haar_unitary_with(&mut rng, rows)?.columns(0, cols).into_owned();
    let mut value = eval.value(&v)?;
    let mut trace = vec![value];
    let mut step = config.initial_step;
    for _ in 0..config.max_iters {
        if value <= config.target || step < config.min_step {
            break;
        }
        let mut best: Option<(CMatrix, f64)> = None;
        for _ in 0..config.offspring {
            let candidate = orthonormalize(&v + horizontal_noise(&mut rng, &v) * C64::new(step, 0.0));
            let cand_value = eval.value(&candidate)?;
            if best.as_ref().is_none_or(|(_, b)| cand_value < *b) {
                best = Some((candidate, cand_value));
            }
        }
        match best {
            Some((candidate, cand_value)) if cand_value < value => {
                v = candidate;
                value = cand_value;
                step *= config.step_growth;
            }
            _ => step *= config.step_decay,
        }
        trace.push(value);
    }
    Ok(RestartOutcome { v, value, trace })
}

/// Runs all restarts in parallel and keeps the best by
/// `(objective, restart index)`.
pub fn search_code(config: &SearchConfig) -> Result<SearchResult> {
    config.validate()?;
    let eval = Evaluator::new(config.n, config.k, config.e)?;
    let outcomes: Vec<RestartOutcome> = (0..config.restarts)
        .into_par_iter()
        .map(|r| run_restart(config, &eval, r))
        .collect::<Result<_>>()?;
    let (restart, best) = outcomes
        .into_iter()
        .enumerate()
        .min_by(|(ia, a), (ib, b)| a.value.total_cmp(&b.value).then(ia.cmp(ib)))
        .expect("at least one restart");
    let codewords = best.v.column_iter().map(|c| c.into_owned()).collect();
    let best_code = QuantumCode::new(config.n, config.k, codewords)?;
    Ok(SearchResult {
        objective: best.value,
        converged: best.value <= config.target,
        trace: best.trace,
        restart,
        best_code,
        config: config.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::{builtin_code, Code};

    fn quantum(name: &str) -> QuantumCode {
        match builtin_code(name).unwrap() {
            Code::Quantum(q) => q,
            _ => unreachable!(),
        }
    }

    #[test]
    fn objective_examples() {
        assert!(objective(&quantum("five-qubit"), 2).unwrap() <= tol::ENT);
        assert!((objective(&quantum("quantum-rep3"), 1).unwrap() - 1.0).abs() < 1e-9);
        assert_eq!(objective(&quantum("quantum-rep3"), 0).unwrap(), 0.0);
    }

    #[test]
    fn evaluator_matches_code_objective() {
        let code = quantum("four-qubit");
        let v = CMatrix::from_columns(code.codewords());
        let eval = Evaluator::new(4, 2, 1).unwrap();
        assert!((eval.value(&v).unwrap() - objective(&code, 1).unwrap()).abs() < 1e-12);
        let rep = quantum("quantum-rep3");
        let eval = Evaluator::new(3, 1, 1).unwrap();
        let v = CMatrix::from_columns(rep.codewords());
        assert!((eval.value(&v).unwrap() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn refuses_singleton_violations() {
        let err = search_code(&SearchConfig::new(4, 3, 1)).unwrap_err();
        assert!(matches!(err, Error::SingletonViolation(_)));
        assert!(err.to_string().contains("k ≤ n−2e violated"));
    }

    #[test]
    fn zero_logical_qubits_converge_immediately() {
        let r = search_code(&SearchConfig::new(2, 0, 1).with_budget(2, 10)).unwrap();
        assert!(r.converged);
        assert_eq!(r.trace.len(), 1);
        assert_eq!(r.best_code.k(), 0);
    }

    #[test]
    fn deterministic_and_orthonormal() {
        let cfg = SearchConfig::new(3, 1, 1).with_seed(11).with_budget(3, 40);
        let a = search_code(&cfg).unwrap();
        let b = search_code(&cfg).unwrap();
        assert_eq!(a, b);
        assert!(a.best_code.orthonormality_residual() < tol::NORM);
        assert!(!a.converged);
        assert!(a.trace.windows(2).all(|w| w[1] <= w[0]));
    }
}
