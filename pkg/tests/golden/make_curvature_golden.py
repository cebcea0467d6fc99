"""Regenerate curvature.json, cross-checking every entry against sympy.

Each curvature is recomputed with sympy twice: once by the same
D_u D_v log(r) formula (exact equality of the rational functions) and once
through the connection form of the normalized 1-forms (zero verdict only).
The file is written only if both agree with kummerweb for all 84 triples.

    python tests/golden/make_curvature_golden.py
"""

import json
import pathlib
from itertools import combinations

import sympy as sp

from kummerweb.ratfunc import parse_ratfunc
from kummerweb.web import INTERIOR_TEXT, blaschke_curvature

x, y = sp.symbols("x y")
U = [sp.sympify(t.replace("^", "**")) for t in INTERIOR_TEXT]


def wedge(f, g):
    return sp.diff(f, x) * sp.diff(g, y) - sp.diff(f, y) * sp.diff(g, x)


def curvature_formula(i, j, k):
    ui, uj, uk = U[i - 1], U[j - 1], U[k - 1]
    jac = wedge(ui, uj)
    lr = sp.log(wedge(uk, uj) / wedge(ui, uk))
    dv = (sp.diff(lr, y) * sp.diff(ui, x) - sp.diff(lr, x) * sp.diff(ui, y)) / jac
    return sp.cancel(sp.together((sp.diff(dv, x) * sp.diff(uj, y) - sp.diff(dv, y) * sp.diff(uj, x)) / jac))


def connection_curvature(i, j, k):
    # w_jk dU_i + w_ki dU_j + w_ij dU_k = 0; find theta with d(omega_a) = theta ^ omega_a
    ui, uj, uk = U[i - 1], U[j - 1], U[k - 1]
    forms = [
        (wedge(uj, uk) * sp.diff(ui, x), wedge(uj, uk) * sp.diff(ui, y)),
        (wedge(uk, ui) * sp.diff(uj, x), wedge(uk, ui) * sp.diff(uj, y)),
    ]
    s, t = sp.symbols("s t")
    eqs = [sp.Eq(s * q - t * p, sp.diff(q, x) - sp.diff(p, y)) for p, q in forms]
    sol = sp.solve(eqs, [s, t], dict=True)[0]
    return sp.cancel(sp.together(sp.diff(sol[t], x) - sp.diff(sol[s], y)))


def main():
    out = []
    for tri in combinations(range(1, 10), 3):
        k = blaschke_curvature(*tri)
        mine = sp.sympify(k.render().replace("^", "**"))
        assert sp.cancel(mine - curvature_formula(*tri)) == 0, tri
        assert (connection_curvature(*tri) == 0) == k.is_zero, tri
        assert parse_ratfunc(k.render()) == k
        out.append({"triple": list(tri), "zero": k.is_zero, "curvature": k.render()})
    path = pathlib.Path(__file__).with_name("curvature.json")
    path.write_text(json.dumps(out, indent=1) + "\n")
    print(f"wrote {len(out)} triples, {sum(not e['zero'] for e in out)} nonzero")


if __name__ == "__main__":
    main()
