# Copyright 2026 The nctk Authors
# SPDX-License-Identifier: Apache-2.0
"""Regenerates the example triple documents in data/.

two_point.json: M_n(C) + C acting by left multiplication on M_{n+1}(C),
with D psi = Delta psi + psi Delta, J psi = psi^*, Gamma psi = K psi K.
"""
import argparse
import json
import pathlib

import numpy as np


def mat(m):
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(m, dtype=complex)]


def unit(n, i, j):
    e = np.zeros((n, n), dtype=complex)
    e[i, j] = 1
    return e


def sa_basis(n):
    out = [unit(n, i, i) for i in range(n)]
    out += [unit(n, i, j) + unit(n, j, i) for i in range(n) for j in range(i + 1, n)]
    out += [1j * (unit(n, j, i) - unit(n, i, j)) for i in range(n) for j in range(i + 1, n)]
    return out


def two_point(m):
    m = np.asarray(m, dtype=complex)
    n = m.size
    k = n + 1
    delta = np.zeros((k, k), dtype=complex)
    delta[:n, n] = m
    delta[n, :n] = m.conj()
    eye = np.eye(k)
    # Row-major vectorization: vec(A psi B) = (A kron B^T) vec(psi).
    left = lambda a: np.kron(a, eye)
    dirac = np.kron(delta, eye) + np.kron(eye, delta.T)
    kk = np.diag([1.0] * n + [-1.0])
    grading = np.kron(kk, kk)
    swap = np.zeros((k * k, k * k))
    for i in range(k):
        for j in range(k):
            swap[i * k + j, j * k + i] = 1
    rep_m = []
    for b in sa_basis(n):
        blk = np.zeros((k, k), dtype=complex)
        blk[:n, :n] = b
        rep_m.append(mat(left(blk)))
    pc = np.zeros((k, k))
    pc[n, n] = 1
    return {
        "algebra": [{"label": f"M{n}", "kind": "Mn", "n": n}, {"label": "C", "kind": "C"}],
        "hilbert_dim": k * k,
        "representation": [rep_m, [mat(left(pc))]],
        "dirac": mat(dirac),
        "grading": mat(grading),
        "real_structure": {"unitary": mat(swap)},
        "kr_dim": 0,
    }


def m2_on_c2_with_conj_J():
    rep = [mat(b) for b in sa_basis(2)]
    return {
        "algebra": [{"label": "M2", "kind": "Mn", "n": 2}],
        "hilbert_dim": 2,
        "representation": [rep],
        "dirac": mat(np.diag([0.0, 1.0])),
        "grading": "odd",
        "real_structure": {"unitary": mat(np.eye(2))},
        "kr_dim": 7,
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "data"))
    args = ap.parse_args()
    out = pathlib.Path(args.out)
    (out / "two_point.json").write_text(json.dumps(two_point([1.0, 0.0]), indent=1) + "\n")
    (out / "m2_on_c2_with_conj_J.json").write_text(json.dumps(m2_on_c2_with_conj_J(), indent=1) + "\n")


if __name__ == "__main__":
    main()
