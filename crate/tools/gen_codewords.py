#!/usr/bin/env python3
"""Build the shipped stabilizer-code codeword files from their generators.

Each code is defined only by its stabilizer generators and logical X
operators. The logical |0...0> is the normalized projection of |0...0> onto
the joint +1 eigenspace of the stabilizers; the other codewords follow by
applying products of logical X operators.

Usage: python3 tools/gen_codewords.py [output-dir]
"""

import itertools
import os
import sys

import numpy as np

PAULI = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}

CODES = {
    "five-qubit": {
        "n": 5,
        "k": 1,
        "stabilizers": ["XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"],
        "logical_x": ["XXXXX"],
        "logical_z": ["ZZZZZ"],
    },
    "four-qubit": {
        "n": 4,
        "k": 2,
        "stabilizers": ["XXXX", "ZZZZ"],
        "logical_x": ["XXII", "XIXI"],
        "logical_z": ["ZIZI", "ZZII"],
    },
}


def pauli_matrix(word):
    # qubit 0 is the most significant tensor factor
    m = np.array([[1]], dtype=complex)
    for letter in word:
        m = np.kron(m, PAULI[letter])
    return m


def codewords(spec):
    n, k = spec["n"], spec["k"]
    dim = 2**n
    proj = np.eye(dim, dtype=complex)
    for g in spec["stabilizers"]:
        proj = proj @ (np.eye(dim) + pauli_matrix(g)) / 2
    zero = np.zeros(dim, dtype=complex)
    zero[0] = 1
    base = proj @ zero
    base /= np.linalg.norm(base)
    words = []
    # logical index i, bit j of i (most significant first) selects logical_x[j]
    for bits in itertools.product([0, 1], repeat=k):
        v = base.copy()
        for j, b in enumerate(bits):
            if b:
                v = pauli_matrix(spec["logical_x"][j]) @ v
        words.append(v)
    w = np.array(words)
    gram = w.conj() @ w.T
    assert np.allclose(gram, np.eye(2**k), atol=1e-12), "codewords not orthonormal"
    for g in spec["stabilizers"]:
        s = pauli_matrix(g)
        for v in words:
            assert np.allclose(s @ v, v, atol=1e-12), "codeword not stabilized"
    for j, zl in enumerate(spec["logical_z"]):
        z = pauli_matrix(zl)
        for idx, bits in enumerate(itertools.product([0, 1], repeat=k)):
            sign = -1 if bits[j] else 1
            assert np.allclose(z @ words[idx], sign * words[idx], atol=1e-12)
    return words


def fmt(x):
    x = float(x)
    if x == 0.0:
        return "0"
    return repr(x)


def write(name, spec, out_dir):
    words = codewords(spec)
    path = os.path.join(out_dir, f"{name}.code")
    with open(path, "w") as f:
        f.write(f"# {name} code, generated by tools/gen_codewords.py\n")
        f.write("# stabilizers: " + " ".join(spec["stabilizers"]) + "\n")
        f.write("# logical X: " + " ".join(spec["logical_x"]) + "\n")
        f.write("format-version 1\n")
        f.write("kind quantum\n")
        f.write(f"n {spec['n']}\n")
        f.write(f"k {spec['k']}\n")
        for i, v in enumerate(words):
            pairs = " ".join(f"{fmt(a.real)},{fmt(a.imag)}" for a in v)
            f.write(f"codeword {i} {pairs}\n")
    print(f"wrote {path}")


def main():
    here = os.path.dirname(os.path.abspath(__file__))
    out_dir = sys.argv[1] if len(sys.argv) > 1 else os.path.join(here, "..", "crates", "core", "data")
    for name, spec in CODES.items():
        write(name, spec, out_dir)


if __name__ == "__main__":
    main()
