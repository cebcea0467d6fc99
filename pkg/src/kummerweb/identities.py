"""Checkers for the named trilogarithm and dilogarithm functional equations.

Every checker returns a :class:`~kummerweb.results.CheckResult` whose
``value`` is the absolute residual; ``float(result)`` gives the number.
"""

from __future__ import annotations

import cmath
import math
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

from . import polylog
from .corrections import CORRECTION_IDS
from .polylog import CONSTANTS, l3_sv
from .ratfunc import eval_rat
from .results import CheckResult
from .web import KUMMER_COEFFS, U

__all__ = [
    "IdentityDomainError",
    "DegenerateArgumentError",
    "KummerSample",
    "FormalSum",
    "EPSILON0",
    "e3",
    "kummer_lhs",
    "check_kummer",
    "check_li2_nine",
    "r3",
    "check_goncharov",
    "specialization_terms",
    "check_specialization",
    "specialization_is_exact",
    "check_inversion",
    "check_corollary",
]

_ZETA3 = CONSTANTS.zeta3
EPSILON0 = (math.sqrt(5) - 1) / 2


class IdentityDomainError(ValueError):
    pass


class DegenerateArgumentError(IdentityDomainError):
    def __init__(self, message, denominator):
        super().__init__(message)
        self.denominator = denominator


@dataclass(frozen=True)
class KummerSample:
    """A point with ``0 < x < y < 1`` (or ``< epsilon0`` when given)."""

    x: float
    y: float
    epsilon0: float | None = None

    def __post_init__(self):
        bound = 1 if self.epsilon0 is None else self.epsilon0
        if not (0 < self.x < self.y < bound):
            raise IdentityDomainError(
                f"need 0 < x < y < {bound}, got x={self.x!r}, y={self.y!r}"
            )

    def strand_values(self):
        # exact rational evaluation keeps each U_i within one rounding of the truth
        p = (Fraction(self.x), Fraction(self.y))
        return tuple(float(eval_rat(u, p)) for u in U)


def _sample(x, y=None, epsilon0=None):
    if isinstance(x, KummerSample):
        if epsilon0 is not None and x.epsilon0 != epsilon0:
            return KummerSample(x.x, x.y, epsilon0)
        return x
    if y is None:
        x, y = x
    return KummerSample(float(x), float(y), epsilon0)


def e3(x, y=None):
    """Right member of Kummer's equation at ``(x, y)``."""
    s = _sample(x, y)
    ly = math.log(s.y)
    return (
        2 * _ZETA3
        - ly * ly * math.log((1 - s.y) / (1 - s.x))
        + CONSTANTS.pi2 / 3 * ly
        + ly**3 / 3
    )


def kummer_lhs(x, y=None, f=None):
    """``sum c_i f(U_i(x, y))`` with Kummer's coefficients; ``f`` defaults to Li3."""
    s = _sample(x, y)
    f = f or (lambda t: polylog.li3(t).real)
    # no U_i is >= 1 on the domain, so Li3 is real there
    return math.fsum(c * f(t) for c, t in zip(KUMMER_COEFFS, s.strand_values()))


def check_kummer(x, y=None, tol=1e-11):
    s = _sample(x, y)
    value = abs(kummer_lhs(s) - e3(s))
    return CheckResult("kummer", "residual", value, tol, {"x": s.x, "y": s.y})


_LI2_NINE = ((2, 0), (-1, 2), (2, 4), (-1, 5), (2, 6), (-1, 8))


def check_li2_nine(x, y=None, tol=1e-11):
    """Residual of the nine-strand dilogarithm identity carried by strands 1,3,5,6,7,9."""
    s = _sample(x, y)
    u = s.strand_values()
    value = abs(math.fsum(c * polylog.li2(u[i]).real for c, i in _LI2_NINE))
    return CheckResult("li2-nine", "residual", value, tol, {"x": s.x, "y": s.y})


# ---------------------------------------------------------------------------
# formal sums on the projective line

INFINITY = None


def _is_one(t):
    return t is not INFINITY and t == 1


@dataclass(frozen=True)
class FormalSum:
    """Finite sum ``sum c {t}``; ``unit`` holds the coefficient of ``{1}`` kept apart.

    Points may be exact rationals, complex numbers, or :data:`INFINITY`.
    """

    terms: tuple  # ((Fraction, point), ...)
    unit: Fraction = Fraction(0)

    def __post_init__(self):
        for c, _ in self.terms:
            if c == 0:
                raise ValueError("formal sum coefficients must be nonzero")

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def coefficient(self, point):
        return sum((c for c, t in self.terms if t == point), Fraction(0))

    def evaluate(self, f=None):
        """Extend ``f`` (default: single-valued L3) by linearity; ``f(1)`` adds ``unit`` times."""
        if f is None:
            f = lambda t: l3_sv(t, extended=True)
        total = math.fsum(float(c) * f(t) for c, t in self.terms)
        if self.unit:
            total += float(self.unit) * f(1)
        return total

    def folded(self):
        """Collect like points after ``t -> 1/t`` on ``|t| > 1``; needs exact points."""
        acc = defaultdict(Fraction)
        for c, t in self.terms:
            acc[_fold(t)] += c
        if self.unit:
            acc[Fraction(1)] += self.unit
        return {t: c for t, c in acc.items() if c != 0}


def _fold(t):
    if t is INFINITY:
        return Fraction(0)
    if t != 0 and abs(t) > 1:
        return 1 / t
    return t


def _r3_brackets(a0, a1, a2):
    p0 = a2 * a0 - a0 + 1
    p2 = a1 * a2 - a2 + 1
    return (
        (1, p0),
        (1, p0 / (a2 * a0)),
        (1, a2),
        (1, p2 / (p0 * a1)),
        (-1, p0 / a2),
        (-1, p2 / (p0 * a1 * a2)),
        (1, -a0 * p2 / p0),
    )


def r3(a1, a2, a3):
    """The 22-term cyclic formal sum whose single-valued trilogarithm vanishes.

    Each cyclic index contributes seven bracket terms and a ``-{1}``; the three
    ``-{1}`` are collected into ``unit = -3``.  Exact rational arguments give
    exact points.
    """
    a = tuple(_exact_or_complex(v) for v in (a1, a2, a3))
    for i, v in enumerate(a, start=1):
        if v == 0:
            raise DegenerateArgumentError(f"alpha_{i} = 0 appears in a denominator", f"alpha_{i}")
    for i in range(3):
        ai, ai2 = a[i], a[(i + 2) % 3]
        if ai2 * ai - ai + 1 == 0:
            name = f"alpha_{(i + 2) % 3 + 1}*alpha_{i + 1} - alpha_{i + 1} + 1"
            raise DegenerateArgumentError(f"{name} vanishes", name)
    terms = []
    for i in range(3):
        for c, t in _r3_brackets(a[i], a[(i + 1) % 3], a[(i + 2) % 3]):
            terms.append((Fraction(c), t))
    terms.append((Fraction(1), -a[0] * a[1] * a[2]))
    return FormalSum(tuple(terms), Fraction(-3))


def _exact_or_complex(v):
    if isinstance(v, Rational):
        return Fraction(v)
    v = complex(v)
    if not (cmath.isfinite(v)):
        raise IdentityDomainError("r3 arguments must be finite")
    return v


def check_goncharov(a, b, c, tol=1e-8):
    fs = r3(a, b, c)
    value = abs(fs.evaluate())
    return CheckResult(
        "goncharov", "residual", value, tol,
        {"a": _json_complex(a), "b": _json_complex(b), "c": _json_complex(c)},
        corrections=CORRECTION_IDS,
    )


def _json_complex(v):
    v = complex(v)
    return [v.real, v.imag]


def specialization_terms(x, y):
    """``r3(1, x, (1-y)/(1-x))``; exact when ``x`` and ``y`` are rational."""
    if isinstance(x, Rational) and isinstance(y, Rational):
        x, y = Fraction(x), Fraction(y)
    return r3(1, x, (1 - y) / (1 - x))


def check_specialization(x, y=None, tol=1e-8):
    """``L3(r3(1, x, (1-y)/(1-x)))`` against ``sum c_i L3(U_i) - 2 zeta(3)``."""
    s = _sample(x, y)
    lhs = specialization_terms(s.x, s.y).evaluate()
    rhs = kummer_lhs(s, f=l3_sv) - 2 * _ZETA3
    return CheckResult(
        "a=1 specialization", "residual", abs(lhs - rhs), tol,
        {"x": s.x, "y": s.y}, corrections=CORRECTION_IDS,
    )


def specialization_is_exact(x, y):
    """Whether folded ``r3(1, x, (1-y)/(1-x))`` equals folded ``sum c_i {U_i} - 2{1}`` exactly."""
    x, y = Fraction(x), Fraction(y)
    KummerSample(float(x), float(y))
    lhs = specialization_terms(x, y).folded()
    p = (x, y)
    kummer = FormalSum(
        tuple((Fraction(c), eval_rat(u, p)) for c, u in zip(KUMMER_COEFFS, U)), Fraction(-2)
    ).folded()
    return lhs == kummer


def check_inversion(z, tol=1e-13):
    z = complex(z)
    value = abs(l3_sv(z) - l3_sv(1 / z))
    return CheckResult("l3 inversion", "residual", value, tol, {"z": _json_complex(z)})


def check_corollary(alpha, x, y=None, tol=1e-9, epsilon0=EPSILON0):
    """Residual of ``sum c_i G(U_i) = 2 zeta(3)`` for ``G = alpha L3 + (2/9)(1 - alpha) zeta(3)``."""
    s = _sample(x, y, epsilon0)
    alpha = float(alpha)
    const = 2 * (1 - alpha) * _ZETA3 / 9
    g = lambda t: alpha * l3_sv(t) + const
    value = abs(kummer_lhs(s, f=g) - 2 * _ZETA3)
    return CheckResult(
        "corollary", "residual", value, tol, {"alpha": alpha, "x": s.x, "y": s.y}
    )
