"""Complex polylogarithm atoms on a fixed simply connected sheet.

All multivalued atoms live on ``C`` minus two vertical rays: the ray going
down from 0 (``{-i t : t >= 0}``) and the ray going up from 1
(``{1 + i t : t >= 0}``).  On that domain:

* :func:`log_cut` is ``log|z| + i arg z`` with ``arg z`` in ``(-pi/2, 3pi/2]``,
* :func:`li2`, :func:`li3` are the continuations of ``sum z^n / n^s`` from the
  unit disc, which agree with the principal branch except to the right of the
  upward ray, where the sheet continues across ``(1, inf)`` from below.

``Log(1 - z)`` on this sheet is ``log_cut(1 - z)``, whose cut is again the
upward ray from 1, so every atom shares one domain.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import mpmath

__all__ = [
    "BranchCutError",
    "SingularPointError",
    "MathConstants",
    "CONSTANTS",
    "CUT_EPSILON",
    "on_cut",
    "log_cut",
    "li2",
    "li3",
    "li_principal",
    "atom_a",
    "atom_d",
    "atom_g",
    "atom_h",
    "atom_g_tilde",
    "atom_h_tilde",
    "bloch_wigner_d2",
    "l3_sv",
    "li_series",
    "li_reflection",
    "li_inversion",
    "li_oracle",
    "route_discrepancy",
]

CUT_EPSILON = 1e-12
_SERIES_RTOL = 1e-18
_SERIES_CAP = 10_000


class BranchCutError(ValueError):
    """The argument lies on (or within ``CUT_EPSILON`` of) a deleted ray."""


class SingularPointError(ValueError):
    pass


@dataclass(frozen=True)
class MathConstants:
    pi: float
    pi2: float
    pi3: float
    zeta3: float
    catalan: float


CONSTANTS = MathConstants(
    pi=math.pi,
    pi2=math.pi**2,
    pi3=math.pi**3,
    zeta3=1.2020569031595942854,
    catalan=0.91596559417721901505,
)

_PI = CONSTANTS.pi
_PI2 = CONSTANTS.pi2
_ZETA2 = _PI2 / 6
_ZETA3 = CONSTANTS.zeta3
_IPI = 1j * _PI


def _distance_to_downward_ray(z):
    # ray {-i t : t >= 0}
    if z.imag <= 0:
        return abs(z.real)
    return abs(z)


def _distance_to_upward_ray(z):
    # ray {1 + i t : t >= 0}
    if z.imag >= 0:
        return abs(z.real - 1)
    return abs(z - 1)


def on_cut(z, epsilon=CUT_EPSILON):
    """Which deleted ray ``z`` is near: ``"zero"``, ``"one"`` or ``None``."""
    z = complex(z)
    if _distance_to_downward_ray(z) < epsilon:
        return "zero"
    if _distance_to_upward_ray(z) < epsilon:
        return "one"
    return None


def log_cut(z):
    """Logarithm with ``arg`` in ``(-pi/2, 3pi/2]``; cut straight down from 0."""
    z = complex(z)
    if _distance_to_downward_ray(z) < CUT_EPSILON:
        raise BranchCutError(f"log_cut: {z!r} is on the downward ray from 0")
    arg = cmath.phase(z)
    if arg <= -_PI / 2:
        arg += 2 * _PI
    return complex(math.log(abs(z)), arg)


def _log1m_cut(z):
    # Log(1 - z) on the sheet; its cut is the upward ray from 1
    return log_cut(1 - complex(z))


# ---------------------------------------------------------------------------
# principal branch machinery


@lru_cache(maxsize=None)
def _bernoulli_table(n_max=120):
    b = [Fraction(0)] * (n_max + 1)
    b[0] = Fraction(1)
    for m in range(1, n_max + 1):
        acc = Fraction(0)
        binom = 1
        for k in range(m):
            acc += binom * b[k]
            binom = binom * (m + 1 - k) // (k + 1)
        b[m] = -acc / (m + 1)
    return b


@lru_cache(maxsize=None)
def _logseries_coeffs(s):
    """Pairs (k, zeta(s-k)/k!) for the regular part of the log(z) expansion."""
    b = _bernoulli_table()
    out = []
    for k in range(0, len(b) - 2):
        if k == s - 1:
            continue
        m = s - k
        if m == 2:
            z = _ZETA2
        elif m == 3:
            z = _ZETA3
        else:
            n = -m  # zeta(-n) = (-1)^n B_{n+1} / (n+1)
            z = float((-1) ** n * b[n + 1] / (n + 1))
        if z:
            out.append((k, z / math.factorial(k)))
    return tuple(out)


def _harmonic(n):
    return sum(1.0 / k for k in range(1, n + 1))


def _li_direct(s, z):
    term = z
    total = z
    zn = z
    for n in range(2, _SERIES_CAP + 1):
        zn *= z
        term = zn / n**s
        total += term
        if abs(term) < _SERIES_RTOL * abs(total):
            break
    return total


def _li_logseries(s, z):
    u = cmath.log(z)
    total = 0j
    for k, c in _logseries_coeffs(s):
        term = c * u**k
        total += term
        if k > s and abs(term) < _SERIES_RTOL * abs(total):
            break
    sing = u ** (s - 1) / math.factorial(s - 1) * (_harmonic(s - 1) - cmath.log(-u))
    return total + sing


def _li_upper(s, z):
    # principal branch for Im z >= 0 (upper side of the cut [1, inf))
    if z == 0:
        return 0j
    if z == 1:
        return complex(_ZETA2 if s == 2 else _ZETA3)
    r = abs(z)
    if r <= 0.5:
        return _li_direct(s, z)
    if r >= 2:
        w = 1 / z
        lm = cmath.log(complex(-z.real, -z.imag))
        inner = _li_direct(s, w) if abs(w) <= 0.5 else _li_logseries(s, w)
        if s == 2:
            return -_ZETA2 - 0.5 * lm * lm - inner
        return inner - _ZETA2 * lm - lm**3 / 6
    return _li_logseries(s, z)


def li_principal(s, z):
    """Principal branch of Li_s (s = 2 or 3), cut along ``[1, inf)``.

    On the cut itself the sign of ``z.imag`` (including signed zero) picks the
    side, matching ``cmath``'s conventions.
    """
    if s not in (2, 3):
        raise ValueError("only s = 2, 3 are supported")
    z = complex(z)
    if math.copysign(1.0, z.imag) < 0:
        return _li_upper(s, z.conjugate()).conjugate()
    return _li_upper(s, z)


def _check_li_domain(z, name):
    if _distance_to_upward_ray(z) < CUT_EPSILON:
        raise BranchCutError(f"{name}: {z!r} is on the upward ray from 1")


def li2(z):
    """Dilogarithm on the sheet described in the module docstring."""
    z = complex(z)
    _check_li_domain(z, "li2")
    val = li_principal(2, z)
    if z.real > 1 and z.imag >= 0:
        val -= 2 * _IPI * cmath.log(z)
    return val


def li3(z):
    """Trilogarithm on the sheet described in the module docstring."""
    z = complex(z)
    _check_li_domain(z, "li3")
    val = li_principal(3, z)
    if z.real > 1 and z.imag >= 0:
        lz = cmath.log(z)
        val -= _IPI * lz * lz
    return val


# ---------------------------------------------------------------------------
# composite atoms


def atom_a(z):
    """``artanh(sqrt z)`` with the principal square root."""
    z = complex(z)
    if z.imag == 0 and z.real >= 1:
        raise BranchCutError(f"atom_a: {z!r} is on [1, inf)")
    return cmath.atanh(cmath.sqrt(z))


def atom_d(z):
    return li2(z) + 0.5 * log_cut(z) * _log1m_cut(z) - _ZETA2


def atom_g(z):
    l0 = log_cut(z)
    return li3(z) - l0 * li2(z) - l0 * l0 * _log1m_cut(z) / 3 - 2 * _ZETA3 / 9


def atom_h(z):
    l0 = log_cut(z)
    return 2 * l0 * li2(z) + l0 * l0 * _log1m_cut(z)


def atom_g_tilde(z):
    return (
        atom_g(z)
        - _IPI / 3 * li2(z)
        + 4 * _IPI / 3 * atom_d(z)
        + _PI2 / 3 * _log1m_cut(z)
        + 2j * CONSTANTS.pi3 / 9
    )


def atom_h_tilde(z):
    return (
        atom_h(z)
        + 2 * _IPI * li2(z)
        - 4 * _IPI * atom_d(z)
        - _PI2 * _log1m_cut(z)
        - 2j * CONSTANTS.pi3 / 3
    )


# ---------------------------------------------------------------------------
# single-valued functions


def _check_finite_nonsingular(z, name):
    if z is None or cmath.isinf(z):
        raise SingularPointError(f"{name}: point at infinity")
    z = complex(z)
    if z == 0 or z == 1:
        raise SingularPointError(f"{name}: singular point {z!r}")
    return z


def bloch_wigner_d2(z):
    """``Im(Li2(z)) + arg(1 - z) log|z|``, real-analytic off {0, 1, inf}."""
    z = _check_finite_nonsingular(z, "bloch_wigner_d2")
    if z.imag == 0:
        return 0.0
    return (li_principal(2, z) + cmath.log(1 - z) * math.log(abs(z))).imag


def l3_sv(z, *, extended=False):
    """Single-valued trilogarithm ``Re(Li3 - log|z| Li2 - log^2|z| log(1-z) / 3)``.

    With ``extended=True`` the points 0 and infinity map to 0 and 1 maps to
    zeta(3), the continuous extension to the projective line.  ``None`` or an
    infinite value denotes the point at infinity.
    """
    if extended:
        if z is None or cmath.isinf(z) or z == 0:
            return 0.0
        if z == 1:
            return _ZETA3
    z = _check_finite_nonsingular(z, "l3_sv")
    if abs(z) > 1:
        # inversion keeps the series arguments inside the unit disc
        z = 1 / z
    lz = math.log(abs(z))
    val = li_principal(3, z) - lz * li_principal(2, z) - lz * lz * cmath.log(1 - z) / 3
    return val.real


# ---------------------------------------------------------------------------
# independent evaluation routes (used for self-validation)


def li_series(s, z):
    """Direct power series; requires ``|z| < 1``."""
    z = complex(z)
    if abs(z) >= 1:
        raise ValueError("direct series needs |z| < 1")
    if z == 0:
        return 0j
    return _li_direct(s, z)


def li_reflection(s, z):
    """Principal Li_s(z) through the ``z -> 1 - z`` reflection.

    Valid off ``(-inf, 0] U [1, inf)``.  For s = 3 this is Landen's
    three-term identity, which also involves ``1 - 1/z``.
    """
    z = complex(z)
    lz = cmath.log(z)
    l1 = cmath.log(1 - z)
    if s == 2:
        return _ZETA2 - lz * l1 - li_principal(2, 1 - z)
    return (
        _ZETA3
        + lz**3 / 6
        + _ZETA2 * lz
        - 0.5 * lz * lz * l1
        - li_principal(3, 1 - z)
        - li_principal(3, 1 - 1 / z)
    )


def li_inversion(s, z):
    """Principal Li_s(z) through ``z -> 1/z``; valid off ``[0, inf)``."""
    z = complex(z)
    lm = cmath.log(-z)
    inner = li_principal(s, 1 / z)
    if s == 2:
        return -_ZETA2 - 0.5 * lm * lm - inner
    return inner - _ZETA2 * lm - lm**3 / 6


def route_discrepancy(s, z):
    """Largest gap between :func:`li_principal` and every route valid at ``z``."""
    z = complex(z)
    ref = li_principal(s, z)
    routes = []
    if abs(z) < 0.95:
        routes.append(li_series)
    if z.imag != 0:
        routes.append(li_reflection)
    if z.imag != 0 or z.real < 0:
        routes.append(li_inversion)
    if not routes:
        raise ValueError(f"no independent route is valid at {z!r}")
    return max(abs(r(s, z) - ref) for r in routes)


def li_oracle(s, z, dps=50):
    """High-precision principal Li_s(z), summed in mpmath at ``dps`` digits.

    ``|z| <= 1/2`` sums the power series, ``|z| >= 2`` inverts into that disc,
    and the band in between sums the log(z) expansion with exact Bernoulli
    numbers.  Used only to validate the double-precision routes.
    """
    z = complex(z)
    lower = math.copysign(1.0, z.imag) < 0
    with mpmath.workdps(dps + 10):
        val = _oracle(s, mpmath.mpc(z.real, abs(z.imag)))
        return complex(mpmath.conj(val) if lower else val)


def _oracle_series(s, z):
    eps = mpmath.mpf(10) ** (-mpmath.mp.dps)
    total = mpmath.mpc(0)
    zn = mpmath.mpc(1)
    n = 0
    while True:
        n += 1
        zn *= z
        term = zn / mpmath.mpf(n) ** s
        total += term
        if abs(term) < eps * max(abs(total), eps):
            return total


def _oracle_logseries(s, z):
    eps = mpmath.mpf(10) ** (-mpmath.mp.dps)
    u = mpmath.log(z)
    total = mpmath.mpc(0)
    k = 0
    while True:
        if k != s - 1:
            zv = mpmath.zeta(s - k)
            term = zv * u**k / mpmath.factorial(k)
            total += term
            if k > s + 1 and zv != 0 and abs(term) < eps * abs(total):
                break
        k += 1
    h = sum(mpmath.mpf(1) / j for j in range(1, s))
    return total + u ** (s - 1) / mpmath.factorial(s - 1) * (h - mpmath.log(-u))


def _oracle(s, z):
    if z == 0:
        return mpmath.mpc(0)
    if z == 1:
        return mpmath.zeta(s)
    if abs(z) <= 0.5:
        return _oracle_series(s, z)
    if abs(z) >= 2:
        if mpmath.im(z) == 0 and mpmath.re(z) > 0:
            # upper side of the cut: -z sits just below the negative axis
            lm = mpmath.log(mpmath.re(z)) - 1j * mpmath.pi
        else:
            lm = mpmath.log(-z)
        inner = _oracle_series(s, 1 / z)
        if s == 2:
            return -mpmath.zeta(2) - lm**2 / 2 - inner
        return inner - mpmath.zeta(2) * lm - lm**3 / 6
    return _oracle_logseries(s, z)
