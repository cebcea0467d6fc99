"""Abelian relations of the Kummer web over a fixed 16-atom basis.

Every component of every relation is a finite complex combination of the
atoms below, evaluated at the strand value ``t = U_i(p)``::

    One  Z  RecipZ  L0  L1  L0^2  L0L1  L1^2  L0^3  L0^2L1  L0L1^2  L1^3
    Li2  L0Li2  Li3  A

with ``L0 = Log(t)``, ``L1 = Log(1 - t)`` (both on the cut plane of
:mod:`kummerweb.polylog`) and ``A = artanh(sqrt t)``.  Linear independence
of the family then reduces to the rank of a 36 x 144 coefficient matrix.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import polylog
from .polylog import CONSTANTS
from .web import SubwebSelector, U, is_generic
from .ratfunc import eval_rat

__all__ = [
    "Atom",
    "GermExpression",
    "AbelianRelation",
    "RelationMatrix",
    "RelationDomainError",
    "constant_basis",
    "gamma_basis",
    "residual",
    "relation_matrix",
    "numerical_rank",
    "singular_values",
    "relation",
    "SubwebSolutions",
    "ATOMS",
    "subweb_solution_dim",
    "subweb_rank",
    "relation_from_coefficients",
    "relations_to_json",
    "relations_from_json",
    "N_STRANDS",
]

N_STRANDS = 9


class Atom(enum.Enum):
    ONE = "One"
    Z = "Z"
    RECIP_Z = "RecipZ"
    L0 = "L0"
    L1 = "L1"
    L0_2 = "L0^2"
    L0L1 = "L0L1"
    L1_2 = "L1^2"
    L0_3 = "L0^3"
    L0_2L1 = "L0^2L1"
    L0L1_2 = "L0L1^2"
    L1_3 = "L1^3"
    LI2 = "Li2"
    L0LI2 = "L0Li2"
    LI3 = "Li3"
    A = "A"


ATOMS = tuple(Atom)
_ATOM_INDEX = {a: k for k, a in enumerate(ATOMS)}
N_ATOMS = len(ATOMS)


class RelationDomainError(ValueError):
    def __init__(self, message, strand=None, atom=None):
        super().__init__(message)
        self.strand = strand
        self.atom = atom


def atom_values(t, atoms=ATOMS):
    """Values of the requested atoms at the strand value ``t``."""
    t = complex(t)
    need_l0 = any(a in _USES_L0 for a in atoms)
    need_l1 = any(a in _USES_L1 for a in atoms)
    l0 = polylog.log_cut(t) if need_l0 else None
    l1 = polylog.log_cut(1 - t) if need_l1 else None
    out = {}
    for a in atoms:
        out[a] = _ATOM_EVAL[a](t, l0, l1)
    return out


_USES_L0 = {Atom.L0, Atom.L0_2, Atom.L0L1, Atom.L0_3, Atom.L0_2L1, Atom.L0L1_2, Atom.L0LI2}
_USES_L1 = {Atom.L1, Atom.L0L1, Atom.L1_2, Atom.L0_2L1, Atom.L0L1_2, Atom.L1_3}

_ATOM_EVAL = {
    Atom.ONE: lambda t, l0, l1: 1.0 + 0j,
    Atom.Z: lambda t, l0, l1: t,
    Atom.RECIP_Z: lambda t, l0, l1: 1 / t,
    Atom.L0: lambda t, l0, l1: l0,
    Atom.L1: lambda t, l0, l1: l1,
    Atom.L0_2: lambda t, l0, l1: l0 * l0,
    Atom.L0L1: lambda t, l0, l1: l0 * l1,
    Atom.L1_2: lambda t, l0, l1: l1 * l1,
    Atom.L0_3: lambda t, l0, l1: l0**3,
    Atom.L0_2L1: lambda t, l0, l1: l0 * l0 * l1,
    Atom.L0L1_2: lambda t, l0, l1: l0 * l1 * l1,
    Atom.L1_3: lambda t, l0, l1: l1**3,
    Atom.LI2: lambda t, l0, l1: polylog.li2(t),
    Atom.L0LI2: lambda t, l0, l1: l0 * polylog.li2(t),
    Atom.LI3: lambda t, l0, l1: polylog.li3(t),
    Atom.A: lambda t, l0, l1: polylog.atom_a(t),
}


class GermExpression:
    """Complex combination of atoms; zero coefficients are never stored."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {a: complex(c) for a, c in (coeffs or {}).items() if c != 0}

    @classmethod
    def atom(cls, a):
        return cls({a: 1})

    def __add__(self, other):
        if isinstance(other, (int, float, complex)):
            other = GermExpression({Atom.ONE: other})
        out = dict(self.coeffs)
        for a, c in other.coeffs.items():
            out[a] = out.get(a, 0) + c
        return GermExpression(out)

    __radd__ = __add__

    def __neg__(self):
        return GermExpression({a: -c for a, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, k):
        if not isinstance(k, (int, float, complex, Fraction)):
            return NotImplemented
        return GermExpression({a: c * complex(k) for a, c in self.coeffs.items()})

    __rmul__ = __mul__

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, GermExpression) and self.coeffs == other.coeffs

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{_fmt(c)}*{a.value}" for a, c in self.coeffs.items())

    def vector(self):
        v = np.zeros(N_ATOMS, dtype=complex)
        for a, c in self.coeffs.items():
            v[_ATOM_INDEX[a]] = c
        return v

    def evaluate(self, t):
        vals = atom_values(t, tuple(self.coeffs))
        return sum(c * vals[a] for a, c in self.coeffs.items())


def _fmt(c):
    if c.imag == 0:
        return f"{c.real:.6g}"
    if c.real == 0:
        return f"{c.imag:.6g}j"
    return f"({c.real:.6g}{c.imag:+.6g}j)"


@dataclass(frozen=True)
class AbelianRelation:
    label: str
    components: tuple  # nine GermExpressions

    def __post_init__(self):
        if len(self.components) != N_STRANDS:
            raise ValueError("an abelian relation has exactly nine components")

    def vector(self):
        return np.concatenate([c.vector() for c in self.components])

    def support(self):
        return tuple(i + 1 for i, c in enumerate(self.components) if c)

    def scaled(self, k):
        return AbelianRelation(self.label, tuple(c * k for c in self.components))

    def to_dict(self):
        return {
            "label": self.label,
            "components": [
                [
                    {"atom": a.value, "re": c.real, "im": c.imag}
                    for a, c in sorted(comp.coeffs.items(), key=lambda kv: _ATOM_INDEX[kv[0]])
                ]
                for comp in self.components
            ],
        }

    @classmethod
    def from_dict(cls, d):
        comps = tuple(
            GermExpression({Atom(e["atom"]): complex(e["re"], e["im"]) for e in comp})
            for comp in d["components"]
        )
        return cls(d["label"], comps)


# ---------------------------------------------------------------------------
# transcription of the family


_PI = CONSTANTS.pi
_PI2 = CONSTANTS.pi2
_PI3 = CONSTANTS.pi3
_IPI = 1j * _PI
_ZETA3 = CONSTANTS.zeta3

_G = GermExpression.atom
ONE = _G(Atom.ONE)
Z = _G(Atom.Z)
RZ = _G(Atom.RECIP_Z)
L0 = _G(Atom.L0)
L1 = _G(Atom.L1)
L0SQ = _G(Atom.L0_2)
L0L1 = _G(Atom.L0L1)
L0SQL1 = _G(Atom.L0_2L1)
LI2 = _G(Atom.LI2)
L0LI2 = _G(Atom.L0LI2)
LI3 = _G(Atom.LI3)
A = _G(Atom.A)
O = GermExpression()

D = LI2 + 0.5 * L0L1 - (_PI2 / 6)
G = LI3 - L0LI2 - L0SQL1 * (1 / 3) - (2 * _ZETA3 / 9)
H = 2 * L0LI2 + L0SQL1
G_TILDE = G - (_IPI / 3) * LI2 + (4 * _IPI / 3) * D + (_PI2 / 3) * L1 + (2j * _PI3 / 9)
H_TILDE = H + (2 * _IPI) * LI2 - (4 * _IPI) * D - _PI2 * L1 - (2j * _PI3 / 3)


def _f_tuples():
    # Log(t/(1-t)) = L0 - L1 and Log((1-t)/t) = L1 - L0 on (0, 1)
    return [
        (L0, -L0, -L0, O, O, O, O, O, O),
        (L0 - L1, O, L1 - L0, -L1, O, O, O, O, O),
        (L1, -L1, O, L0, O, O, O, O, O),
        (O, O, L0, L0, -L0, O, O, O, O),
        (L1, O, -L1, O, L1, O, O, O, O),
        (L0, L0, O, O, O, -L0, O, O, O),
        (L0, O, O, L0, O, O, -L0 + _IPI, O, O),
        (RZ, O, O, O, RZ, O, RZ - 1, O, O),
        (L1, O, O, O, O, -L1, L1, O, O),
        (O, Z, O, Z, O, O, Z - 1, O, O),
        (O, O, O, O, O, L0, -L0, L0, O),
        (O, L0, O, O, O, O, -L1, L1, O),
        (O, O, O, O, O, O, L0, L0, -L0 - 2 * _IPI),
        (O, O, O, O, L1, O, L1, O, -L1),
        (O, RZ, O, O, Z, O, O, Z - 1, O),
        (Z, O, O, RZ, O, O, O, RZ - 1, O),
        (O, O, A, O, O, -A, O, O, -A),
        (2 * L0SQ, 2 * L0SQ, -L0SQ, O, O, -L0SQ, O, O, O),
        (O, O, O, O, O, L0SQ, -2 * L0SQ, -2 * L0SQ, L0SQ + 4 * _IPI * L0 - 4 * _PI2),
        (O, O, L0SQ, -2 * L0SQ, -2 * L0SQ, O, O, O, L0SQ),
        (D, -D, -D, -D, D, O, O, O, O),
        (D, D - (_IPI / 2) * L0, O, O, O, -D, D, -D, O),
        (
            _PI2 * ONE, O, O, D - (_IPI / 2) * L0, D, O, D,
            D + (_IPI / 2) * L0 - _IPI * L1, -D,
        ),
        (LI2, LI2, O, 0.5 * L0SQ, O, -LI2, LI2, -LI2 - 0.5 * L0SQ + _IPI * L0, (_PI2 / 3) * ONE),
        (O, 0.5 * L0SQ, O, LI2, LI2, O, LI2, LI2, -LI2),
        (2 * LI2, O, -LI2, O, 2 * LI2, -LI2, 2 * LI2, O, -LI2),
        (2 * G, 2 * G, -G, 2 * G, 2 * G, -G, 2 * G_TILDE, 2 * G_TILDE, -G),
        (
            2 * H, 2 * H - (2 * _PI2 / 3) * L0, -H, 2 * H, 2 * H, -H,
            2 * H_TILDE, 2 * H_TILDE, -H,
        ),
    ]


def constant_basis():
    """C_1..C_8: a constant 1 on strand i balanced by -1 on strand 9."""
    out = []
    for i in range(8):
        comps = [O] * N_STRANDS
        comps[i] = ONE
        comps[8] = -ONE
        out.append(AbelianRelation(f"C{i + 1}", tuple(comps)))
    return out


_GAMMA = None


def gamma_basis():
    """The 36 relations C_1..C_8, F_1..F_28 in that order."""
    global _GAMMA
    if _GAMMA is None:
        fs = [AbelianRelation(f"F{j + 1}", tuple(t)) for j, t in enumerate(_f_tuples())]
        _GAMMA = tuple(constant_basis() + fs)
    return _GAMMA


def relation(label):
    for r in gamma_basis():
        if r.label == label:
            return r
    raise KeyError(label)


# ---------------------------------------------------------------------------
# evaluation


def _exact_point(p):
    x, y = p
    return Fraction(x), Fraction(y)


@lru_cache(maxsize=4096)
def _point_data(q):
    gen = is_generic(q)
    if not gen:
        return gen, None
    return gen, tuple(float(eval_rat(u, q)) for u in U)


def residual(rel, p):
    """Sum over strands of ``rel.components[i]`` evaluated at ``U_i(p)``."""
    gen, values = _point_data(_exact_point(p))
    if not gen:
        raise RelationDomainError(f"point {p!r} is not generic ({gen.reason} {gen.witness})")
    total = 0j
    for i, comp in enumerate(rel.components):
        if not comp:
            continue
        t = values[i]
        try:
            vals = atom_values(t, tuple(comp.coeffs))
        except ValueError as exc:
            bad = _failing_atom(t, comp)
            raise RelationDomainError(
                f"{rel.label}: strand {i + 1} value {t!r} outside the domain of {bad.value}: {exc}",
                strand=i + 1,
                atom=bad,
            ) from exc
        total += sum(c * vals[a] for a, c in comp.coeffs.items())
    return total


def _failing_atom(t, comp):
    for a in comp.coeffs:
        try:
            atom_values(t, (a,))
        except ValueError:
            return a
    return next(iter(comp.coeffs))


# ---------------------------------------------------------------------------
# ranks


@dataclass(frozen=True)
class RelationMatrix:
    entries: np.ndarray  # (n_relations, 9 * 16) complex
    labels: tuple

    def rows(self, labels):
        idx = [self.labels.index(l) for l in labels]
        return RelationMatrix(self.entries[idx], tuple(labels))

    def strand_columns(self, strands):
        cols = []
        for s in strands:
            cols.extend(range((s - 1) * N_ATOMS, s * N_ATOMS))
        return cols


def relation_matrix(relations=None):
    rels = gamma_basis() if relations is None else tuple(relations)
    return RelationMatrix(np.array([r.vector() for r in rels]), tuple(r.label for r in rels))


def _normalized(m):
    norms = np.linalg.norm(m, axis=1)
    norms[norms == 0] = 1
    return m / norms[:, None]


def _rank_from_singular_values(s, tol):
    if s.size == 0 or s[0] == 0:
        return 0
    return int(np.sum(s > tol * s[0]))


def singular_values(m):
    entries = m.entries if isinstance(m, RelationMatrix) else np.asarray(m)
    if entries.size == 0:
        return np.zeros(0)
    return np.linalg.svd(_normalized(entries), compute_uv=False)


def numerical_rank(m, tol=1e-8):
    """Rank of the row-normalized matrix, dropping singular values below ``tol * s_max``."""
    if not 0 < tol < 1:
        raise ValueError("tol must lie in (0, 1)")
    return _rank_from_singular_values(singular_values(m), tol)


@dataclass(frozen=True)
class SubwebSolutions:
    selector: SubwebSelector
    dim: int
    basis: np.ndarray  # (dim, 36) coefficient vectors over gamma_basis()
    singular_values: np.ndarray


def _selector(sel):
    return sel if isinstance(sel, SubwebSelector) else SubwebSelector(sel)


def subweb_solution_dim(sel, tol=1e-8):
    """Dimension and a basis of the combinations of Γ supported on ``sel``.

    A combination ``c`` is supported on ``sel`` when its atom coefficients on
    every other strand vanish, i.e. ``c`` lies in the left null space of the
    matrix columns belonging to the excluded strands.
    """
    sel = _selector(sel)
    m = relation_matrix()
    entries = _normalized(m.entries)
    outside = [s for s in range(1, N_STRANDS + 1) if s not in sel.indices]
    n = entries.shape[0]
    if not outside:
        return SubwebSolutions(sel, n, np.eye(n, dtype=complex), np.zeros(0))
    block = entries[:, m.strand_columns(outside)]
    u, s, _ = np.linalg.svd(block, full_matrices=True)
    r = _rank_from_singular_values(s, tol)
    # rows c with c @ block = 0 are conj of trailing left singular vectors
    basis = u[:, r:].conj().T
    # undo the row normalization so the vectors act on gamma_basis() directly
    norms = np.linalg.norm(m.entries, axis=1)
    basis = basis / norms[None, :]
    return SubwebSolutions(sel, n - r, basis, s)


def subweb_rank(sel, tol=1e-8):
    """Rank of the sub-web: supported solutions modulo its |sel| - 1 constants."""
    sel = _selector(sel)
    return subweb_solution_dim(sel, tol).dim - (len(sel) - 1)


def relation_from_coefficients(coeffs, label="combination"):
    comps = [GermExpression() for _ in range(N_STRANDS)]
    for c, rel in zip(coeffs, gamma_basis()):
        if c == 0:
            continue
        for i in range(N_STRANDS):
            comps[i] = comps[i] + rel.components[i] * complex(c)
    return AbelianRelation(label, tuple(comps))


# ---------------------------------------------------------------------------
# serialization


def relations_to_json(relations=None, *, indent=2):
    rels = gamma_basis() if relations is None else relations
    doc = {"schema": "kummerweb.relations/1", "atoms": [a.value for a in ATOMS],
           "relations": [r.to_dict() for r in rels]}
    return json.dumps(doc, indent=indent)


def relations_from_json(text):
    doc = json.loads(text)
    return [AbelianRelation.from_dict(d) for d in doc["relations"]]
