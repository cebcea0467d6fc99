"""The Kummer 9-web: interior functions, genericity, Blaschke curvature."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from numbers import Rational

from .ratfunc import PoleError, RationalFunction, eval_rat, parse_ratfunc, partial, wedge

__all__ = [
    "INTERIOR_TEXT",
    "U",
    "KUMMER_COEFFS",
    "SubwebSelector",
    "DegenerateTripleError",
    "GenericityResult",
    "interior_functions",
    "strand_values",
    "is_generic",
    "blaschke_curvature",
    "is_hexagonal",
    "HexagonalityCertificate",
]

INTERIOR_TEXT = (
    "x",
    "y",
    "x/y",
    "(1-y)/(1-x)",
    "x*(1-y)/(y*(1-x))",
    "x*y",
    "x*(1-y)/(x-1)",
    "(1-y)/(y*(x-1))",
    "x*(1-y)^2/(y*(1-x)^2)",
)

# coefficients of Li3(U_i) in Kummer's equation
KUMMER_COEFFS = (2, 2, -1, 2, 2, -1, 2, 2, -1)


@lru_cache(maxsize=1)
def interior_functions():
    """The nine first integrals U_1..U_9 as a tuple (0-based)."""
    return tuple(parse_ratfunc(t) for t in INTERIOR_TEXT)


U = interior_functions()


class DegenerateTripleError(ValueError):
    pass


@dataclass(frozen=True)
class SubwebSelector:
    """A set of strands of the 9-web, 1-based like the strand labels."""

    indices: tuple

    def __init__(self, indices):
        idx = tuple(sorted(set(int(i) for i in indices)))
        if len(idx) != len(tuple(indices)):
            raise ValueError(f"repeated strand index in {indices!r}")
        if any(i < 1 or i > 9 for i in idx):
            raise ValueError(f"strand indices must lie in 1..9, got {indices!r}")
        if len(idx) < 3:
            raise ValueError("a sub-web needs at least 3 strands")
        object.__setattr__(self, "indices", idx)

    @classmethod
    def complement(cls, excluded):
        excluded = set(int(i) for i in excluded)
        if any(i < 1 or i > 9 for i in excluded):
            raise ValueError(f"strand indices must lie in 1..9, got {sorted(excluded)!r}")
        return cls([i for i in range(1, 10) if i not in excluded])

    def __iter__(self):
        return iter(self.indices)

    def __len__(self):
        return len(self.indices)

    def label(self):
        missing = [i for i in range(1, 10) if i not in self.indices]
        if not missing:
            return "K"
        if len(missing) <= len(self.indices):
            return "T_{^" + "".join(map(str, missing)) + "}"
        return "T_{" + ",".join(map(str, self.indices)) + "}"


def strand_values(p):
    """U_1(p)..U_9(p); exact for rational p, complex otherwise."""
    return tuple(eval_rat(u, p) for u in U)


@dataclass(frozen=True)
class GenericityResult:
    generic: bool
    reason: str = ""
    witness: tuple = ()

    def __bool__(self):
        return self.generic


@lru_cache(maxsize=1)
def _pairwise_wedges():
    return {(i, j): wedge(U[i - 1], U[j - 1]) for i, j in combinations(range(1, 10), 2)}


def _is_zero(value, exact, epsilon):
    return value == 0 if exact else abs(value) <= epsilon


def is_generic(p, *, epsilon=1e-12):
    """Whether ``p`` avoids the singular set of the 9-web.

    Returns a truthy/falsy :class:`GenericityResult`; on failure ``reason`` is
    ``"pole"``, ``"diagonal"`` or ``"wedge"`` and ``witness`` names the strand
    or strand pair responsible.  The diagonal ``x = y`` is excluded even where
    the wedges survive, since several strand values equal 1 there.
    """
    x, y = p
    exact = isinstance(x, Rational) and isinstance(y, Rational)
    if exact:
        p = (Fraction(x), Fraction(y))
    for k, u in enumerate(U, start=1):
        try:
            eval_rat(u, p)
        except PoleError:
            return GenericityResult(False, "pole", (k,))
    if _is_zero(x - y, exact, epsilon):
        return GenericityResult(False, "diagonal", (4, 5, 9))
    for (i, j), w in _pairwise_wedges().items():
        try:
            value = eval_rat(w, p)
        except PoleError:
            return GenericityResult(False, "pole", (i, j))
        if _is_zero(value, exact, epsilon):
            return GenericityResult(False, "wedge", (i, j))
    return GenericityResult(True)


def _check_index(i):
    if not isinstance(i, int) or i < 1 or i > 9:
        raise ValueError(f"strand index must be an integer in 1..9, got {i!r}")


def _dlog(f, var):
    return partial(f, var) / f


@lru_cache(maxsize=None)
def blaschke_curvature(i, j, k):
    """Exact Blaschke curvature of the 3-web (U_i, U_j, U_k) as a rational function.

    In the coordinates (u, v) = (U_i, U_j) the third foliation is w = W(u, v)
    and the curvature is d^2/du dv of log(W_u / W_v); the 3-web is hexagonal
    iff this vanishes identically.
    """
    for t in (i, j, k):
        _check_index(t)
    if len({i, j, k}) != 3:
        raise ValueError("curvature needs three distinct strands")
    ui, uj, uk = U[i - 1], U[j - 1], U[k - 1]
    jac = wedge(ui, uj)
    w_ki = wedge(uk, uj)
    w_ik = wedge(ui, uk)
    for pair, w in (((i, j), jac), ((k, j), w_ki), ((i, k), w_ik)):
        if w.is_zero:
            raise DegenerateTripleError(f"dU_{pair[0]} ^ dU_{pair[1]} vanishes identically")
    ratio = w_ki / w_ik
    # D_v(log r) with D_v = (-Ui_y d/dx + Ui_x d/dy) / J
    lx, ly = _dlog(ratio, "x"), _dlog(ratio, "y")
    dv = (ly * partial(ui, "x") - lx * partial(ui, "y")) / jac
    # D_u = (Uj_y d/dx - Uj_x d/dy) / J
    return (partial(dv, "x") * partial(uj, "y") - partial(dv, "y") * partial(uj, "x")) / jac


@dataclass(frozen=True)
class HexagonalityCertificate:
    selector: SubwebSelector
    triples: tuple  # ((i, j, k), curvature RationalFunction)

    @property
    def hexagonal(self):
        return all(c.is_zero for _, c in self.triples)

    def __bool__(self):
        return self.hexagonal

    def nonzero_triples(self):
        return [t for t, c in self.triples if not c.is_zero]

    def as_dict(self):
        return {
            "subweb": list(self.selector.indices),
            "hexagonal": self.hexagonal,
            "triples": [
                {"triple": list(t), "zero": c.is_zero, "curvature": c.render()}
                for t, c in self.triples
            ],
        }


def is_hexagonal(sel):
    """Exact hexagonality test over every 3-subset of the selected strands."""
    if not isinstance(sel, SubwebSelector):
        sel = SubwebSelector(sel)
    triples = tuple((t, blaschke_curvature(*t)) for t in combinations(sel.indices, 3))
    return HexagonalityCertificate(sel, triples)
