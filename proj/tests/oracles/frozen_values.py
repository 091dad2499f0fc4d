#!/usr/bin/env python3
# Copyright 2026 The sic4 Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Brute-force numpy oracle for the regression constants frozen in the C++ tests.

Shares no code with the library. Everything here is direct evaluation:
explicit matrix powers, exhaustive loops over triples and 4-subsets, and the
Pauli expansion written out term by term.
"""
import itertools

import numpy as np

d = 4
omega = np.exp(2j * np.pi / d)
tau = -np.exp(1j * np.pi / d)
X = np.roll(np.eye(d), 1, axis=0)
Z = np.diag([omega**r for r in range(d)])
G = (np.sqrt(5) - 1) / 2


def D(p1, p2):
    return tau ** (p1 * p2) * np.linalg.matrix_power(X, p1) @ np.linalg.matrix_power(Z, p2)


e = np.exp
psi = np.array([
    1 + e(-1j * np.pi / 4),
    e(1j * np.pi / 4) + 1j * G**-1.5,
    1 - e(-1j * np.pi / 4),
    e(1j * np.pi / 4) - 1j * G**-1.5,
]) / (2 * np.sqrt(3 + G))
rho = [np.outer(D(a, b) @ psi, (D(a, b) @ psi).conj()) for a in range(4) for b in range(4)]


def cluster(values, gap):
    out = []
    for v in values:
        for c in out:
            if abs(c[0] - v) < gap:
                c[1] += 1
                break
        else:
            out.append([v, 1])
    return out


def d11_entry():
    print("D_{1,1}[1,0] =", D(1, 1)[1, 0], " tau =", tau)


def triple_census():
    vals = [np.trace(rho[i] @ rho[j] @ rho[k]) for i, j, k in itertools.permutations(range(16), 3)]
    cl = sorted(cluster(vals, 1e-6), key=lambda c: np.angle(c[0]))
    print("triple census:", len(cl))
    for v, n in cl:
        print(f"  {{{v.real:.15f}, {v.imag:.15f}, {n}}},")
    vs = sorted(c[0] for c in cl)
    gaps = [abs(a - b) for a, b in itertools.combinations([c[0] for c in cl], 2)]
    print("  min pairwise gap", min(gaps))


def signatures():
    M = sum(np.linalg.matrix_power(Z, j) @ rho[0] @ np.linalg.matrix_power(Z, -j % 4) for j in range(4))
    print("reference signature", np.sort(np.linalg.eigvalsh(M)))
    sigs = []
    for sub in itertools.combinations(range(16), 4):
        sigs.append(tuple(np.sort(np.linalg.eigvalsh(sum(rho[i] for i in sub)))))
    cl = []
    for s in sigs:
        for c in cl:
            if max(abs(np.array(c[0]) - s)) < 1e-7:
                c[1] += 1
                break
        else:
            cl.append([s, 1])
    print("distinct 4-subset signatures:", len(cl))
    for s, n in sorted(cl):
        print("  {{" + ", ".join(f"{x:.12f}" for x in s) + f"}}, {n}}},")


sx = np.array([[0, 1], [1, 0]])
sy = np.array([[0, -1j], [1j, 0]])
sz = np.diag([1, -1])
I2 = np.eye(2)


def gbv_fiducial():
    P = [sx, sy, sz]
    r = [np.trace(rho[0] @ np.kron(I2, s)).real for s in P]
    s_ = [np.trace(rho[0] @ np.kron(s, I2)).real for s in P]
    C = [[np.trace(rho[0] @ np.kron(a, b)).real for b in P] for a in P]
    print("fiducial gbv r", r)
    print("fiducial gbv s", s_)
    print("fiducial gbv C", C)
    Ap = np.sqrt(1 + np.sqrt(G)) / np.sqrt(5)
    Am = np.sqrt(1 - np.sqrt(G)) / np.sqrt(5)
    print("A+ A- B", Ap, Am, 1 / np.sqrt(5))
    # second-qubit Bloch vectors of SIC 1
    pts = []
    for rh in rho:
        pts.append(np.array([np.trace(rh @ np.kron(I2, s)).real for s in P]))
    uniq = cluster([tuple(p) for p in pts], 1e-9) if False else None
    dist = sorted({round(float(np.linalg.norm(a - b)), 9) for a in pts for b in pts if np.linalg.norm(a - b) > 1e-9})
    print("qubit-2 pairwise distances", dist)


if __name__ == "__main__":
    d11_entry()
    triple_census()
    signatures()
    gbv_fiducial()
