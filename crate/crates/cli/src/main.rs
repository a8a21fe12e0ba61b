//! `qecent`: verify, simulate, diagram, search and bound quantum and
//! classical erasure codes.
//!
//! Exit codes: 0 pass, 1 checked and failed, 2 usage or input error.

mod input;
mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qec_entropy::channel::{run_channel, ChannelReport, ChannelVerdict, ErasurePattern, Interaction};
use qec_entropy::code::{
    bit_label, classical_joint_distribution, qubit_label, save_code, AmplitudeProfile, Code, BUILTINS, LOGICAL,
    REFERENCE,
};
use qec_entropy::entropy::{tripartite_diagram, tripartite_diagram_named, EntropyDiagram};
use qec_entropy::search::{search_code, SearchConfig};
use qec_entropy::tol::Tolerances;
use qec_entropy::verify::{
    classical_distance_check, classical_erasure_entropy_check, cloning_number, entropic_erasure_check, kl_erasure_check,
    kl_error_check, singleton_bound, BoundKind,
};
use qec_entropy::{Error, Result};
use serde_json::{json, Value};

use render::{num, pass_word};

#[derive(Parser)]
#[command(name = "qecent", version, about = "Entropic analysis of quantum and classical erasure codes")]
struct Cli {
    /// Output style: aligned text tables or JSON data.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Override both the entropy and the matrix-element tolerance.
    #[arg(long, global = true)]
    tolerance: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Data,
}

#[derive(Subcommand)]
enum Command {
    /// Check correction conditions for a code.
    Verify(VerifyArgs),
    /// Run the erasure channel and report mutual entanglement and loss.
    Simulate(SimulateArgs),
    /// Tripartite entropy diagram of a code or a stored state.
    Diagram(DiagramArgs),
    /// Search for a quantum code meeting the entropic erasure condition.
    Search(SearchArgs),
    /// Singleton bounds and cloning number for given parameters.
    Bounds(BoundsArgs),
    /// List the built-in codes.
    List,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("mode").required(true))]
struct VerifyArgs {
    /// Built-in code name or code file.
    code: String,
    /// Erasures at known positions.
    #[arg(long, group = "mode")]
    erasure: Option<usize>,
    /// Errors at unknown positions.
    #[arg(long, group = "mode")]
    error: Option<usize>,
    /// Minimum distance report for a classical code.
    #[arg(long, group = "mode")]
    classical: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum InteractionKind {
    Swap,
    Random,
    Identity,
}

#[derive(Args)]
struct SimulateArgs {
    code: String,
    /// Erased positions, e.g. `1,3`.
    #[arg(long, conflicts_with_all = ["e", "all_patterns"])]
    pattern: Option<String>,
    /// Erase every pattern of this many qubits.
    #[arg(long)]
    e: Option<usize>,
    /// Sweep every pattern (of `--e` qubits, or the built-in design value).
    #[arg(long)]
    all_patterns: bool,
    #[arg(long, value_enum, default_value_t = InteractionKind::Random)]
    interaction: InteractionKind,
    /// Seed of the random interaction; pattern `i` of a sweep uses `seed + i`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Logical-word probabilities, comma separated (default uniform).
    #[arg(long)]
    amplitudes: Option<String>,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("groups").required(true))]
struct DiagramArgs {
    /// Built-in code name or code file.
    #[arg(required_unless_present = "state", conflicts_with = "state")]
    code: Option<String>,
    /// JSON pure state instead of a code.
    #[arg(long)]
    state: Option<String>,
    /// Three groups, e.g. `R:0,1/2,3,4`; numbers are qubit (or bit) positions.
    #[arg(long, group = "groups")]
    split: Option<String>,
    /// Erased positions; groups become reference, erased and unaffected.
    #[arg(long, group = "groups")]
    erase: Option<String>,
}

#[derive(Args)]
struct SearchArgs {
    n: usize,
    k: usize,
    e: usize,
    #[arg(long, default_value_t = SearchConfig::DEFAULT_RESTARTS)]
    restarts: usize,
    #[arg(long, default_value_t = SearchConfig::DEFAULT_MAX_ITERS)]
    iters: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the best code here in the code file format.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("param").required(true))]
struct BoundsArgs {
    n: usize,
    k: usize,
    #[arg(long, group = "param")]
    e: Option<usize>,
    #[arg(long, group = "param")]
    t: Option<usize>,
}

struct Output {
    pass: bool,
    text: String,
    data: Value,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let tol = cli.tolerance.map(Tolerances::uniform).unwrap_or_default();
    if let Some(t) = cli.tolerance {
        if !(t.is_finite() && t > 0.0) {
            eprintln!("error: --tolerance must be a positive number");
            return ExitCode::from(2);
        }
    }
    let result = match &cli.command {
        Command::Verify(a) => verify(a, tol),
        Command::Simulate(a) => simulate(a, tol),
        Command::Diagram(a) => diagram(a),
        Command::Search(a) => search(a, tol),
        Command::Bounds(a) => bounds(a),
        Command::List => Ok(list()),
    };
    match result {
        Ok(out) => {
            match cli.format {
                Format::Text => print!("{}", out.text),
                Format::Data => println!("{}", serde_json::to_string_pretty(&out.data).expect("serialisable output")),
            }
            ExitCode::from(if out.pass { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serialisable value")
}

fn verify(a: &VerifyArgs, tol: Tolerances) -> Result<Output> {
    let (name, code) = input::resolve_code(&a.code)?;
    match (&code, a.erasure, a.error, a.classical) {
        (Code::Quantum(q), Some(e), _, _) => {
            let entropic = entropic_erasure_check(q, e, tol.ent)?;
            let kl = kl_erasure_check(q, e, tol.kl)?;
            let pass = entropic.pass && kl.pass;
            let text = format!(
                "{name} (n = {}, k = {}), {e} erasures: {}\n{}{}",
                q.n(),
                q.k(),
                pass_word(pass),
                render::verdict("entropic S(R:Q_e) = 0", &entropic),
                render::verdict("Knill-Laflamme erasure", &kl)
            );
            let data = json!({"code": name, "kind": "quantum", "n": q.n(), "k": q.k(), "mode": "erasure", "e": e,
                "pass": pass, "entropic": to_value(&entropic), "kl": to_value(&kl)});
            Ok(Output { pass, text, data })
        }
        (Code::Quantum(q), _, Some(t), _) => {
            let kl = kl_error_check(q, t, tol.kl)?;
            let bound = singleton_bound(q.n(), q.k(), t, BoundKind::QuantumError);
            let text = format!(
                "{name} (n = {}, k = {}), {t} errors: {}\n{}  k ≤ n−4t: {} ≤ {} {}\n",
                q.n(),
                q.k(),
                pass_word(kl.pass),
                render::verdict("Knill-Laflamme error", &kl),
                q.k(),
                bound.limit,
                if bound.holds { "OK" } else { "violated" }
            );
            let data = json!({"code": name, "kind": "quantum", "n": q.n(), "k": q.k(), "mode": "error", "t": t,
                "pass": kl.pass, "kl": to_value(&kl), "singleton": to_value(&bound)});
            Ok(Output { pass: kl.pass, text, data })
        }
        (Code::Quantum(_), _, _, _) => Err(Error::Precondition(format!("{name} is a quantum code; use --erasure or --error"))),
        (Code::Classical(c), e, t, _) => {
            let dist = classical_distance_check(c)?;
            let mut text = format!(
                "{name} (classical, n = {}, k = {}): distance {}, corrects {} errors or {} erasures\n",
                c.n(),
                c.k(),
                dist.min_distance,
                dist.max_t,
                dist.max_e
            );
            let mut data = json!({"code": name, "kind": "classical", "n": c.n(), "k": c.k(), "distance": to_value(&dist)});
            let pass = if let Some(e) = e {
                let mut rows = Vec::new();
                let mut all = true;
                for p in ErasurePattern::all(c.n(), e) {
                    let r = classical_erasure_entropy_check(c, p.indices())?;
                    let ok = r.correctable(tol.ent);
                    all &= ok;
                    text.push_str(&format!(
                        "  erase {p}: H(X|Y_u) = {}  H(X:Y_u) = {}  H(X:Y_e) = {}  {}\n",
                        num(r.x_given_unaffected),
                        num(r.x_unaffected),
                        num(r.x_erased),
                        pass_word(ok)
                    ));
                    rows.push(json!({"pattern": p, "correctable": ok, "entropies": to_value(&r)}));
                }
                text.push_str(&format!("{e} erasures: {}\n", pass_word(all)));
                data["mode"] = json!("erasure");
                data["e"] = json!(e);
                data["patterns"] = Value::Array(rows);
                all
            } else if let Some(t) = t {
                let ok = t <= dist.max_t;
                text.push_str(&format!("{t} errors: {}\n", pass_word(ok)));
                data["mode"] = json!("error");
                data["t"] = json!(t);
                ok
            } else {
                data["mode"] = json!("classical");
                true
            };
            data["pass"] = json!(pass);
            Ok(Output { pass, text, data })
        }
    }
}

fn amplitude_profile(arg: Option<&str>, k: usize) -> Result<AmplitudeProfile> {
    match arg {
        None => Ok(AmplitudeProfile::uniform(k)),
        Some(s) => {
            let probs = s
                .split(',')
                .map(|t| t.trim().parse::<f64>().map_err(|_| Error::Precondition(format!("`{t}` is not a probability"))))
                .collect::<Result<Vec<f64>>>()?;
            if probs.len() != 1 << k {
                return Err(Error::DimensionMismatch { expected: 1 << k, found: probs.len() });
            }
            AmplitudeProfile::from_probabilities(&probs)
        }
    }
}

fn simulate(a: &SimulateArgs, tol: Tolerances) -> Result<Output> {
    let (name, code) = input::resolve_code(&a.code)?;
    let Code::Quantum(q) = code else {
        return Err(Error::Precondition(format!("{name} is classical; simulate needs a quantum code")));
    };
    let patterns = match (&a.pattern, a.e) {
        (Some(p), _) => vec![ErasurePattern::new(input::parse_indices(p)?, q.n())?],
        (None, Some(e)) => {
            if e > q.n() {
                return Err(Error::PatternOutOfRange { index: e, n: q.n() });
            }
            ErasurePattern::all(q.n(), e)
        }
        (None, None) if a.all_patterns => {
            let e = BUILTINS
                .iter()
                .find(|b| b.name == name)
                .map(|b| b.design_e)
                .ok_or_else(|| Error::Precondition("--all-patterns needs --e for codes loaded from files".into()))?;
            ErasurePattern::all(q.n(), e)
        }
        (None, None) => return Err(Error::Precondition("give --pattern, --e or --all-patterns".into())),
    };
    let amps = amplitude_profile(a.amplitudes.as_deref(), q.k())?;
    let reports: Vec<ChannelReport> = patterns
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let interaction = match a.interaction {
                InteractionKind::Swap => Interaction::Swap,
                InteractionKind::Identity => Interaction::Identity,
                InteractionKind::Random => Interaction::Random { seed: a.seed.wrapping_add(i as u64) },
            };
            run_channel(&q, &amps, p, &interaction, tol.ent)
        })
        .collect::<Result<_>>()?;
    let max_m = reports.iter().map(|r| r.m).fold(0.0, f64::max);
    let max_l = reports.iter().map(|r| r.l).fold(0.0, f64::max);
    let pass = reports.iter().all(|r| r.verdict == ChannelVerdict::Perfect);
    let mut text = format!("{name}: {} pattern(s), interaction {}\n", reports.len(), reports[0].interaction);
    for r in &reports {
        text.push_str(&render::channel(r));
    }
    text.push_str(&format!("max M = {}  max L = {}  {}\n", num(max_m), num(max_l), if pass { "all perfect" } else { "lossy" }));
    let data = json!({"code": name, "interaction": reports[0].interaction, "seed": a.seed, "reports": to_value(&reports),
        "max_M": max_m, "max_L": max_l, "pass": pass});
    Ok(Output { pass, text, data })
}

fn diagram(a: &DiagramArgs) -> Result<Output> {
    let d: EntropyDiagram = if let Some(path) = &a.state {
        let psi = input::load_state(path)?;
        let Some(spec) = &a.split else {
            return Err(Error::Precondition("a state file needs --split".into()));
        };
        let [x, y, z] = input::parse_split(spec, qubit_label)?;
        tripartite_diagram(&psi, &x, &y, &z)?
    } else {
        let (_, code) = input::resolve_code(a.code.as_deref().expect("clap requires a code"))?;
        match code {
            Code::Quantum(q) => {
                let psi = qec_entropy::code::encode_entangled(&q, &AmplitudeProfile::uniform(q.k()))?;
                if let Some(spec) = &a.split {
                    let [x, y, z] = input::parse_split(spec, qubit_label)?;
                    tripartite_diagram(&psi, &x, &y, &z)?
                } else {
                    let p = ErasurePattern::new(input::parse_indices(a.erase.as_deref().unwrap_or_default())?, q.n())?;
                    let (qe, qu) = (p.labels(), p.complement_labels(q.n()));
                    tripartite_diagram_named(&psi, [("R", &[REFERENCE.to_owned()][..]), ("Q_e", &qe[..]), ("Q_u", &qu[..])])?
                }
            }
            Code::Classical(c) => {
                let dist = classical_joint_distribution(&c)?;
                if let Some(spec) = &a.split {
                    let [x, y, z] = input::parse_split(spec, bit_label)?;
                    tripartite_diagram(&dist, &x, &y, &z)?
                } else {
                    let erased = input::parse_indices(a.erase.as_deref().unwrap_or_default())?;
                    if let Some(&index) = erased.iter().find(|&&i| i >= c.n()) {
                        return Err(Error::PatternOutOfRange { index, n: c.n() });
                    }
                    let ye: Vec<String> = erased.iter().map(|&i| bit_label(i)).collect();
                    let yu: Vec<String> = (0..c.n()).filter(|i| !erased.contains(i)).map(bit_label).collect();
                    tripartite_diagram_named(&dist, [("X", &[LOGICAL.to_owned()][..]), ("Y_e", &ye[..]), ("Y_u", &yu[..])])?
                }
            }
        }
    };
    Ok(Output { pass: true, text: render::diagram(&d), data: to_value(&d) })
}

fn search(a: &SearchArgs, tol: Tolerances) -> Result<Output> {
    let cfg = SearchConfig::new(a.n, a.k, a.e).with_seed(a.seed).with_budget(a.restarts, a.iters);
    let r = search_code(&cfg)?;
    let recheck = entropic_erasure_check(&r.best_code, a.e, tol.ent.max(cfg.target))?;
    if let Some(path) = &a.out {
        save_code(&Code::Quantum(r.best_code.clone()), path)?;
    }
    let mut text = format!(
        "search n = {}, k = {}, e = {}: {} (objective {:e} bits, restart {}, {} iterations)\n",
        a.n,
        a.k,
        a.e,
        if r.converged { "converged" } else { "not converged" },
        r.objective,
        r.restart,
        r.trace.len() - 1
    );
    text.push_str(&format!("re-verification at tolerance {:e}: {}\n", recheck.tolerance, pass_word(recheck.pass)));
    if let Some(path) = &a.out {
        text.push_str(&format!("wrote {path}\n"));
    }
    let mut data = to_value(&r);
    data["reverification"] = to_value(&recheck);
    Ok(Output { pass: r.converged && recheck.pass, text, data })
}

fn bounds(a: &BoundsArgs) -> Result<Output> {
    let (n, k) = (a.n, a.k);
    let mut text = String::new();
    let mut data = json!({"n": n, "k": k});
    let line = |label: &str, b: &qec_entropy::verify::SingletonBound| {
        let status = if !b.holds {
            "violated"
        } else if b.saturated {
            "OK (saturated)"
        } else {
            "OK"
        };
        format!("{label}: {} ≤ {} {status}\n", b.k, b.limit)
    };
    let (quantum, classical, e_equiv) = match (a.e, a.t) {
        (Some(e), _) => {
            data["e"] = json!(e);
            (singleton_bound(n, k, e, BoundKind::QuantumErasure), singleton_bound(n, k, e, BoundKind::ClassicalErasure), e)
        }
        (None, Some(t)) => {
            data["t"] = json!(t);
            (singleton_bound(n, k, t, BoundKind::QuantumError), singleton_bound(n, k, t, BoundKind::ClassicalError), 2 * t)
        }
        (None, None) => unreachable!("clap requires --e or --t"),
    };
    let (qlabel, clabel) = if a.e.is_some() { ("k ≤ n−2e", "classical k ≤ n−e") } else { ("k ≤ n−4t", "classical k ≤ n−2t") };
    text.push_str(&line(qlabel, &quantum));
    text.push_str(&line(clabel, &classical));
    data["quantum"] = to_value(&quantum);
    data["classical"] = to_value(&classical);
    if k <= n && e_equiv < n {
        let c = cloning_number(n, k, e_equiv)?;
        let relation = if c.saturated {
            "= bound (saturated)".to_owned()
        } else if c.within_bound {
            format!("≤ bound {}", c.bound)
        } else {
            format!("> bound {} (exceeded)", c.bound)
        };
        let classical = c.classical_bound.map(|b| b.to_string()).unwrap_or_else(|| "unbounded".into());
        text.push_str(&format!("N_c = {} {relation}; classical limit {classical}\n", c.n_c));
        data["cloning"] = to_value(&c);
    } else {
        text.push_str("N_c undefined (needs e < n)\n");
    }
    data["pass"] = json!(quantum.holds);
    Ok(Output { pass: quantum.holds, text, data })
}

fn list() -> Output {
    let rows: Vec<(String, String)> = BUILTINS
        .iter()
        .map(|b| (b.name.to_owned(), format!("{:<9} n = {}  k = {}  e = {}  {}", b.kind, b.n, b.k, b.design_e, b.description)))
        .collect();
    let data = Value::Array(
        BUILTINS
            .iter()
            .map(|b| json!({"name": b.name, "kind": b.kind, "n": b.n, "k": b.k, "design_e": b.design_e, "description": b.description}))
            .collect(),
    );
    Output { pass: true, text: render::table(&rows), data }
}
