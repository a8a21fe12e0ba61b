use super::{parse_code, ClassicalCode, Code, QuantumCode};
use crate::tensor::{CVector, C64};
use crate::{Error, Result};

/// Catalogue entry for a built-in code.
#[derive(Debug, Clone, Copy)]
pub struct BuiltinInfo {
    pub name: &'static str,
    pub kind: &'static str,
    pub n: usize,
    pub k: usize,
    /// Number of erasures the code is exercised at.
    pub design_e: usize,
    pub description: &'static str,
}

pub const BUILTINS: &[BuiltinInfo] = &[
    BuiltinInfo {
        name: "classical-rep3",
        kind: "classical",
        n: 3,
        k: 1,
        design_e: 2,
        description: "repetition code 0 -> 000, 1 -> 111",
    },
    BuiltinInfo {
        name: "classical-5-2",
        kind: "classical",
        n: 5,
        k: 2,
        design_e: 2,
        description: "linear code 00000, 01110, 10101, 11011 (distance 3)",
    },
    BuiltinInfo {
        name: "quantum-rep3",
        kind: "quantum",
        n: 3,
        k: 1,
        design_e: 1,
        description: "|000>, |111> repetition code; fails the erasure conditions",
    },
    BuiltinInfo {
        name: "five-qubit",
        kind: "quantum",
        n: 5,
        k: 1,
        design_e: 2,
        description: "[[5,1,3]] stabilizer code XZZXI (cyclic)",
    },
    BuiltinInfo {
        name: "four-qubit",
        kind: "quantum",
        n: 4,
        k: 2,
        design_e: 1,
        description: "[[4,2,2]] stabilizer code XXXX, ZZZZ",
    },
];

const FIVE_QUBIT: &str = include_str!("../../data/five-qubit.code");
const FOUR_QUBIT: &str = include_str!("../../data/four-qubit.code");

pub fn builtin_names() -> impl Iterator<Item = &'static str> {
    BUILTINS.iter().map(|b| b.name)
}

/// Looks up a built-in code by name.
pub fn builtin_code(name: &str) -> Result<Code> {
    match name {
        "classical-rep3" => Ok(ClassicalCode::from_strings(1, &["000", "111"])?.into()),
        "classical-5-2" => Ok(ClassicalCode::from_strings(2, &["00000", "01110", "10101", "11011"])?.into()),
        "quantum-rep3" => {
            let basis = |i: usize| {
                let mut v = CVector::zeros(8);
                v[i] = C64::new(1.0, 0.0);
                v
            };
            Ok(QuantumCode::new(3, 1, vec![basis(0), basis(7)])?.into())
        }
        "five-qubit" => parse_code(FIVE_QUBIT),
        "four-qubit" => parse_code(FOUR_QUBIT),
        other => Err(Error::UnknownCode(other.to_owned())),
    }
}
