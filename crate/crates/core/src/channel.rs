//! Erasure channel with an explicit environment.
//!
//! The encoded state `ψ_RQ` is extended by an environment `E` prepared in
//! `|0⟩`, and a unitary couples `E` to the erased qubits `Q_e` only. The
//! mutual entanglement `M = S(R:Q_e)` is measured before the interaction,
//! the loss `L = S(R':E'|Q')` after it.

use serde::Serialize;

use crate::code::{encode_entangled, qubit_label, AmplitudeProfile, QuantumCode, REFERENCE};
use crate::entropy::{tripartite_diagram_named, EntropyCalc, EntropyDiagram, EntropyReport};
use crate::tensor::{random_unitary, CMatrix, PureState, SubsystemLayout, UnitaryOp};
use crate::{Error, Result};

/// Label of the environment part appended by the erasure routines.
pub const ENVIRONMENT: &str = "E";

/// Sorted set of erased qubit positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct ErasurePattern(Vec<usize>);

impl ErasurePattern {
    pub fn new(mut indices: Vec<usize>, n: usize) -> Result<Self> {
        indices.sort_unstable();
        if let Some(w) = indices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Precondition(format!("erasure position {} listed twice", w[0])));
        }
        if let Some(&index) = indices.iter().find(|&&i| i >= n) {
            return Err(Error::PatternOutOfRange { index, n });
        }
        Ok(Self(indices))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// All `C(n, e)` patterns in lexicographic order.
    pub fn all(n: usize, e: usize) -> Vec<Self> {
        combinations(n, e).into_iter().map(Self).collect()
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn e(&self) -> usize {
        self.0.len()
    }

    pub fn labels(&self) -> Vec<String> {
        self.0.iter().map(|&i| qubit_label(i)).collect()
    }

    /// Labels of the unaffected qubits `Q_u`.
    pub fn complement_labels(&self, n: usize) -> Vec<String> {
        (0..n).filter(|i| !self.0.contains(i)).map(qubit_label).collect()
    }
}

impl std::fmt::Display for ErasurePattern {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", s.join(","))
    }
}

/// All `e`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, e: usize) -> Vec<Vec<usize>> {
    if e > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..e).collect();
    loop {
        out.push(cur.clone());
        let mut i = e;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n - e + i {
                cur[i] += 1;
                for j in i + 1..e {
                    cur[j] = cur[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn qubit_count(state: &PureState) -> usize {
    state.layout().labels().filter(|l| is_qubit_label(l)).count()
}

fn is_qubit_label(l: &str) -> bool {
    l.strip_prefix('q').is_some_and(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
}

fn check_pattern(state: &PureState, pattern: &ErasurePattern) -> Result<()> {
    let n = qubit_count(state);
    match pattern.0.iter().find(|&&i| i >= n) {
        Some(&index) => Err(Error::PatternOutOfRange { index, n }),
        None => Ok(()),
    }
}

/// Appends a part `label` of dimension `dim` prepared in `|0⟩`.
pub fn attach_environment(state: &PureState, label: &str, dim: usize) -> Result<PureState> {
    let env = PureState::basis(SubsystemLayout::new([(label.to_owned(), dim)])?, 0)?;
    state.tensor(&env)
}

/// Swaps the erased qubits with a fresh `2^e`-dimensional environment: the
/// erased qubits end in `|0⟩` and `E` holds their former content.
pub fn erase_with_swap(state: &PureState, pattern: &ErasurePattern) -> Result<PureState> {
    check_pattern(state, pattern)?;
    let d = 1usize << pattern.e();
    let mut targets = pattern.labels();
    targets.push(ENVIRONMENT.to_owned());
    let with_env = attach_environment(state, ENVIRONMENT, d)?;
    with_env.apply(&UnitaryOp::swap(d, targets))
}

/// Applies `1_R ⊗ 1_{Q_u} ⊗ U_{Q_e E}` with `E` of dimension `env_dim`
/// prepared in `|0⟩`. `u` acts on the erased qubits (in pattern order) then
/// `E`, so its side must be `2^e · env_dim`.
pub fn erase_with_unitary(state: &PureState, pattern: &ErasurePattern, u: &CMatrix, env_dim: usize) -> Result<PureState> {
    check_pattern(state, pattern)?;
    let side = (1usize << pattern.e()) * env_dim;
    if u.nrows() != side || u.ncols() != side {
        return Err(Error::DimensionMismatch { expected: side, found: u.nrows() });
    }
    let mut targets = pattern.labels();
    targets.push(ENVIRONMENT.to_owned());
    let op = UnitaryOp::new(u.clone(), targets)?;
    attach_environment(state, ENVIRONMENT, env_dim)?.apply(&op)
}

/// `M = S(R:Q_e)` of the state before decoherence.
pub fn mutual_entanglement(state: &PureState, pattern: &ErasurePattern) -> Result<f64> {
    check_pattern(state, pattern)?;
    let mut calc = EntropyCalc::new(state);
    let r = calc.resolve(&[REFERENCE])?;
    let qe = calc.resolve(&pattern.labels())?;
    calc.mutual(&r, &qe)
}

/// The loss evaluated along three algebraically equivalent routes.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LossRoutes {
    /// `S(R':E'|Q')`
    pub conditional: f64,
    /// `S(E') + S(Q) − S(Q')`, with `S(Q)` taken before decoherence
    pub via_channel: f64,
    /// `S(R':E')`
    pub reference_environment: f64,
}

impl LossRoutes {
    pub fn spread(&self) -> f64 {
        let v = [self.conditional, self.via_channel, self.reference_environment];
        let max = v.iter().copied().fold(f64::MIN, f64::max);
        let min = v.iter().copied().fold(f64::MAX, f64::min);
        max - min
    }
}

/// Loss of a post-decoherence pure state over `(R, q…, E)`.
///
/// `pre_channel_entropy` is `S(Q)` before the interaction. The three routes
/// must agree within `10 · tol`; larger disagreement is reported as
/// [`Error::Inconsistent`].
pub fn compute_loss(post: &PureState, pre_channel_entropy: f64, tol: f64) -> Result<LossRoutes> {
    let mut calc = EntropyCalc::new(post);
    let r = calc.resolve(&[REFERENCE])?;
    let e = calc.resolve(&[ENVIRONMENT])?;
    let q_labels: Vec<&str> = post.layout().labels().filter(|l| *l != REFERENCE && *l != ENVIRONMENT).collect();
    let q = calc.resolve(&q_labels)?;
    let routes = LossRoutes {
        conditional: calc.conditional_mutual(&r, &e, &q)?,
        via_channel: calc.entropy(&e)? + pre_channel_entropy - calc.entropy(&q)?,
        reference_environment: calc.mutual(&r, &e)?,
    };
    if routes.spread() > 10.0 * tol {
        return Err(Error::Inconsistent(format!("loss routes disagree: {routes:?}")));
    }
    Ok(routes)
}

/// How the environment couples to the erased qubits.
#[derive(Debug, Clone, PartialEq)]
pub enum Interaction {
    /// No coupling.
    Identity,
    /// Exchange with a `2^e`-dimensional environment.
    Swap,
    /// Haar-random unitary on `Q_e E` with a `2^e`-dimensional environment.
    Random { seed: u64 },
    /// Caller-supplied unitary on `Q_e E`.
    Custom { unitary: CMatrix, env_dim: usize },
}

impl Interaction {
    pub fn name(&self) -> &'static str {
        match self {
            Interaction::Identity => "identity",
            Interaction::Swap => "swap",
            Interaction::Random { .. } => "random",
            Interaction::Custom { .. } => "custom",
        }
    }

    /// Applies the interaction to `state` over `(R, q…)`.
    pub fn apply(&self, state: &PureState, pattern: &ErasurePattern) -> Result<PureState> {
        let d = 1usize << pattern.e();
        match self {
            Interaction::Identity => {
                check_pattern(state, pattern)?;
                attach_environment(state, ENVIRONMENT, d)
            }
            Interaction::Swap => erase_with_swap(state, pattern),
            Interaction::Random { seed } => {
                let u = random_unitary(d * d, *seed)?;
                erase_with_unitary(state, pattern, u.matrix(), d)
            }
            Interaction::Custom { unitary, env_dim } => erase_with_unitary(state, pattern, unitary, *env_dim),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChannelVerdict {
    Perfect,
    Lossy,
}

/// Outcome of one channel run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChannelReport {
    pub pattern: ErasurePattern,
    pub interaction: String,
    #[serde(rename = "M")]
    pub m: f64,
    #[serde(rename = "L")]
    pub l: f64,
    pub loss_routes: LossRoutes,
    /// `S(R)` before the channel.
    pub reference_entropy: f64,
    /// `S(Q)` before the channel.
    pub channel_entropy: f64,
    /// Subset entropies over `(R', Q', E')`.
    pub entropies: EntropyReport,
    pub diagram: EntropyDiagram,
    pub verdict: ChannelVerdict,
    /// `L` above the tolerance but within ten times it.
    pub borderline: bool,
    pub tolerance: f64,
}

impl ChannelReport {
    /// `S(R':Q')` after the channel.
    pub fn reference_channel_mutual(&self) -> f64 {
        self.diagram.mutual_xy()
    }
}

/// Encodes `code` with `amps`, runs the interaction on `pattern` and
/// collects `M`, `L` and the `(R', Q', E')` entropy diagram.
pub fn run_channel(
    code: &QuantumCode,
    amps: &AmplitudeProfile,
    pattern: &ErasurePattern,
    interaction: &Interaction,
    tol: f64,
) -> Result<ChannelReport> {
    let psi = encode_entangled(code, amps)?;
    run_channel_on(&psi, pattern, interaction, tol)
}

/// [`run_channel`] for an already encoded state over `(R, q…)`.
pub fn run_channel_on(psi: &PureState, pattern: &ErasurePattern, interaction: &Interaction, tol: f64) -> Result<ChannelReport> {
    let q_labels: Vec<String> = psi.layout().labels().filter(|l| *l != REFERENCE).map(str::to_owned).collect();
    let (m, reference_entropy, channel_entropy) = {
        let mut calc = EntropyCalc::new(psi);
        let r = calc.resolve(&[REFERENCE])?;
        let q = calc.resolve(&q_labels)?;
        check_pattern(psi, pattern)?;
        let qe = calc.resolve(&pattern.labels())?;
        (calc.mutual(&r, &qe)?, calc.entropy(&r)?, calc.entropy(&q)?)
    };
    let post = interaction.apply(psi, pattern)?;
    let loss_routes = compute_loss(&post, channel_entropy, tol)?;
    let l = loss_routes.conditional;
    let diagram = tripartite_diagram_named(&post, [("R'", &[REFERENCE.to_owned()][..]), ("Q'", &q_labels[..]), ("E'", &[ENVIRONMENT.to_owned()][..])])?;
    let verdict = if l <= tol { ChannelVerdict::Perfect } else { ChannelVerdict::Lossy };
    Ok(ChannelReport {
        pattern: pattern.clone(),
        interaction: interaction.name().to_owned(),
        m,
        l,
        loss_routes,
        reference_entropy,
        channel_entropy,
        entropies: diagram.report(),
        diagram,
        verdict,
        borderline: l > tol && l < 10.0 * tol,
        tolerance: tol,
    })
}

/// Runs every `e`-pattern, in lexicographic order, on the rayon pool.
pub fn run_all_patterns(
    code: &QuantumCode,
    amps: &AmplitudeProfile,
    e: usize,
    interaction: &Interaction,
    tol: f64,
) -> Result<Vec<ChannelReport>> {
    use rayon::prelude::*;
    if e > code.n() {
        return Err(Error::PatternOutOfRange { index: e, n: code.n() });
    }
    let psi = encode_entangled(code, amps)?;
    ErasurePattern::all(code.n(), e)
        .par_iter()
        .map(|p| run_channel_on(&psi, p, interaction, tol))
        .collect()
}

/// Default number of Haar-random interactions per pattern in property sweeps.
pub const DEFAULT_RANDOM_INTERACTIONS: usize = 20;
