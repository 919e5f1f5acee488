#!/usr/bin/env python3
"""Derive the su3_group manifest from 3x3 matrices.

Basis of su(3), orthonormal for <A, B> = -tr(AB)/2 (a positive multiple of
the Killing form):

    e1..e6 = X12, Y12, X13, Y13, X23, Y23   X = E_jk - E_kj, Y = i(E_jk + E_kj)
    e7, e8 = T1 = i diag(1, -1, 0),  T2 = i diag(1, 1, -2) / sqrt3

Structure constants c^k_ij = <[e_i, e_j], e_k> give de^k = -sum_{i<j} c^k_ij e^ij.
The Samelson structure sends X_jk to Y_jk (j < k) and T1 to T2, so the +i
eigenspace is t^(1,0) + span(E_jk, j < k), a subalgebra.

Usage: python3 su3_group_derivation.py > su3_group.json
"""

import json
import sys

import sympy as sp

I = sp.I
SQRT3 = sp.sqrt(3)


def unit(j, k):
    m = sp.zeros(3, 3)
    m[j, k] = 1
    return m


def basis():
    out = []
    for j, k in [(0, 1), (0, 2), (1, 2)]:
        out.append(unit(j, k) - unit(k, j))
        out.append(I * (unit(j, k) + unit(k, j)))
    out.append(I * sp.diag(1, -1, 0))
    out.append(I * sp.diag(1, 1, -2) / SQRT3)
    return out


def inner(a, b):
    return sp.simplify(-(a * b).trace() / 2)


def scalar_json(c):
    c = sp.expand(c)
    b = sp.nsimplify(c.coeff(SQRT3))
    a = sp.nsimplify(sp.expand(c - b * SQRT3))
    if not (a.is_rational and b.is_rational):
        raise ValueError(f"coefficient {c} is not in Q(sqrt3)")
    if b == 0:
        return str(a)
    return {"re": str(a), "im": "0", "re_sqrt3": str(b), "im_sqrt3": "0"}


def dump(value, indent=0):
    """JSON with one form term per line."""
    pad = "  " * (indent + 1)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f"{pad}{json.dumps(k)}: {dump(v, indent + 1)}" for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + "  " * indent + "}"
    if isinstance(value, list) and any(isinstance(v, (list, dict)) for v in value):
        if all(isinstance(v, list) and not any(isinstance(x, list) for x in v) for v in value):
            return "[" + ", ".join(json.dumps(v, separators=(", ", ": ")) for v in value) + "]"
        items = [pad + dump(v, indent + 1) for v in value]
        return "[\n" + ",\n".join(items) + "\n" + "  " * indent + "]"
    return json.dumps(value, separators=(", ", ": "))


def main():
    e = basis()
    n = len(e)
    gram = [[inner(e[i], e[j]) for j in range(n)] for i in range(n)]
    assert gram == [[1 if i == j else 0 for j in range(n)] for i in range(n)], "basis not orthonormal"

    differentials = {}
    for k in range(n):
        terms = []
        for i in range(n):
            for j in range(i + 1, n):
                c = inner(e[i] * e[j] - e[j] * e[i], e[k])
                if c != 0:
                    terms.append([i + 1, j + 1, scalar_json(-c)])
        if terms:
            differentials[str(k + 1)] = terms

    lam = {"12": 1, "13": 2, "23": 1}
    manifest = {
        "kind": "lie_algebra",
        "name": "su3_group",
        "description": "Compact su(3) in a Killing-orthonormal basis with the Samelson complex structure; "
                       "Omega1 bi-invariant, Omega2 = Kahler flag form (lambda = 1, 2, 1) plus theta1 ^ theta2",
        "dim": n,
        "differentials": differentials,
        "complex_structure": {"pairs": [[1, 2], [3, 4], [5, 6], [7, 8]]},
        "metrics": {
            "Omega1": [[1, 2, "1"], [3, 4, "1"], [5, 6, "1"], [7, 8, "1"]],
            "Omega2": [[1, 2, str(lam["12"])], [3, 4, str(lam["13"])], [5, 6, str(lam["23"])], [7, 8, "1"]],
        },
        "expect": [
            {"args": ["check-algebra"], "checks": {"jacobi": "pass", "integrable": "pass"}},
            {"args": ["classify", "--metric", "Omega1"],
             "checks": {"Omega1.positive": "pass", "Omega1.skt": "pass", "Omega1.astheno": "fail",
                        "Omega1.kahler": "fail"}},
            {"args": ["classify", "--metric", "Omega2"],
             "checks": {"Omega2.positive": "pass", "Omega2.astheno": "pass", "Omega2.skt": "fail",
                        "Omega2.kahler": "fail"}},
        ],
    }
    sys.stdout.write(dump(manifest) + "\n")


if __name__ == "__main__":
    main()
