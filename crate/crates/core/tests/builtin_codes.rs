//! Independent check of the shipped stabilizer codewords: Pauli matrices are
//! built here by explicit Kronecker products, not through the verifier.

mod common;

use common::quantum;
use qec_entropy::code::{builtin_code, builtin_names, format_code, parse_code, Code, BUILTINS};
use qec_entropy::tensor::{CMatrix, C64};

fn pauli_matrix(word: &str) -> CMatrix {
    let (o, z, i) = (C64::new(1.0, 0.0), C64::new(0.0, 0.0), C64::new(0.0, 1.0));
    word.chars().fold(CMatrix::identity(1, 1), |acc, c| {
        let m = match c {
            'I' => CMatrix::from_row_slice(2, 2, &[o, z, z, o]),
            'X' => CMatrix::from_row_slice(2, 2, &[z, o, o, z]),
            'Y' => CMatrix::from_row_slice(2, 2, &[z, -i, i, z]),
            'Z' => CMatrix::from_row_slice(2, 2, &[o, z, z, -o]),
            _ => unreachable!(),
        };
        acc.kronecker(&m)
    })
}

fn check_stabilized(name: &str, stabilizers: &[&str], logical_z: &[&str]) {
    let code = quantum(name);
    let k = code.k();
    for g in stabilizers {
        let s = pauli_matrix(g);
        for (idx, c) in code.codewords().iter().enumerate() {
            assert!((&s * c - c).norm() < 1e-12, "{name}: {g} does not fix codeword {idx}");
        }
    }
    for (j, zl) in logical_z.iter().enumerate() {
        let z = pauli_matrix(zl);
        for (idx, c) in code.codewords().iter().enumerate() {
            // logical index bits, most significant first
            let sign = if (idx >> (k - 1 - j)) & 1 == 1 { -1.0 } else { 1.0 };
            assert!((&z * c - c * C64::new(sign, 0.0)).norm() < 1e-12, "{name}: {zl} on codeword {idx}");
        }
    }
}

#[test]
fn five_qubit_codewords_are_stabilized() {
    check_stabilized("five-qubit", &["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"], &["ZZZZZ"]);
}

#[test]
fn four_qubit_codewords_are_stabilized() {
    check_stabilized("four-qubit", &["XXXX", "ZZZZ"], &["ZIZI", "ZZII"]);
}

#[test]
fn repetition_code_is_stabilized() {
    check_stabilized("quantum-rep3", &["ZZI", "IZZ"], &["ZII"]);
}

#[test]
fn every_builtin_loads_and_round_trips() {
    assert_eq!(builtin_names().count(), BUILTINS.len());
    for info in BUILTINS {
        let code = builtin_code(info.name).unwrap();
        assert_eq!((code.n(), code.k(), code.kind()), (info.n, info.k, info.kind));
        let back = parse_code(&format_code(&code)).unwrap();
        match (&code, &back) {
            (Code::Quantum(a), Code::Quantum(b)) => {
                for (x, y) in a.codewords().iter().zip(b.codewords()) {
                    assert_eq!(x, y);
                }
            }
            _ => assert_eq!(code, back),
        }
    }
}
