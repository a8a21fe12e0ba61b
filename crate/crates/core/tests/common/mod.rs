#![allow(dead_code)]

use qec_entropy::code::{builtin_code, qubit_label, Code, QuantumCode};
use qec_entropy::tensor::{random_unitary, PureState, UnitaryOp};

pub fn quantum(name: &str) -> QuantumCode {
    match builtin_code(name).unwrap() {
        Code::Quantum(q) => q,
        Code::Classical(_) => panic!("{name} is classical"),
    }
}

pub const QUANTUM_BUILTINS: [(&str, usize); 3] = [("quantum-rep3", 1), ("five-qubit", 2), ("four-qubit", 1)];

/// First `2^k` columns of a Haar unitary on `n` qubits.
pub fn random_code(n: usize, k: usize, seed: u64) -> QuantumCode {
    let u = random_unitary(1 << n, seed).unwrap();
    let words = (0..1usize << k).map(|j| u.matrix().column(j).into_owned()).collect();
    QuantumCode::new(n, k, words).unwrap()
}

/// The same code after an independent random unitary on every qubit.
pub fn locally_scrambled(code: &QuantumCode, seed: u64) -> QuantumCode {
    let op = (0..code.n())
        .map(|i| random_unitary(2, seed.wrapping_add(i as u64)).unwrap().on([qubit_label(i)]))
        .reduce(|a, b| a.tensor(&b).unwrap())
        .unwrap_or_else(|| UnitaryOp::identity(1, Vec::<String>::new()));
    let words = code
        .codewords()
        .iter()
        .map(|c| {
            let s = PureState::new(code.qubit_layout().unwrap(), c.clone()).unwrap();
            s.apply(&op).unwrap().amplitudes().clone()
        })
        .collect();
    QuantumCode::new(code.n(), code.k(), words).unwrap()
}
