"""Exact bivariate rational functions over Q.

Polynomials in ``x`` and ``y`` are stored sparsely as ``{(i, j): Fraction}``.
A :class:`RationalFunction` is always kept in lowest terms with a monic
denominator (graded lexicographic order, ``x > y``), so two rational
functions are equal exactly when their stored forms are equal.

Expression grammar accepted by :func:`parse_ratfunc` and emitted by
:meth:`RationalFunction.render`::

    expr   = term { ("+" | "-") term } ;
    term   = unary { ("*" | "/") unary } ;
    unary  = ("+" | "-") unary | power ;
    power  = atom [ "^" ["-"] integer ] ;
    atom   = integer | "x" | "y" | "(" expr ")" ;
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational

__all__ = [
    "Poly",
    "RationalFunction",
    "RatFuncError",
    "ParseError",
    "ZeroDenominatorError",
    "PoleError",
    "parse_ratfunc",
    "partial",
    "wedge",
    "eval_rat",
    "X",
    "Y",
    "ONE",
    "ZERO",
]


class RatFuncError(Exception):
    """Base class for rational-function errors."""


class ParseError(RatFuncError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class ZeroDenominatorError(RatFuncError, ZeroDivisionError):
    pass


class PoleError(RatFuncError, ZeroDivisionError):
    """Raised when evaluating at a zero of the denominator."""

    def __init__(self, denominator, point):
        super().__init__(f"denominator {denominator.render()} vanishes at {point!r}")
        self.denominator = denominator
        self.point = point


def _grlex_key(mono):
    i, j = mono
    return (i + j, i)


# ---------------------------------------------------------------------------
# univariate helpers (dense coefficient lists, lowest degree first)


def _u_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _u_add(a, b):
    n = max(len(a), len(b))
    out = [(a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(n)]
    return _u_trim(out)


def _u_sub(a, b):
    return _u_add(a, [-c for c in b])


def _u_mul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _u_trim(out)


def _int_content(a):
    g = 0
    for c in a:
        g = math.gcd(g, c)
    return g


def _z_primitive(a):
    g = _int_content(a)
    if a[-1] < 0:
        g = -g
    return [c // g for c in a]


def _z_prem(a, b):
    a = list(a)
    lead = b[-1]
    while len(a) >= len(b):
        top = a[-1]
        shift = len(a) - len(b)
        a = [c * lead for c in a]
        for k, cb in enumerate(b):
            a[shift + k] -= top * cb
        _u_trim(a)
    return a


def _z_divide(a, b):
    """Exact quotient in Z[x]; ``b`` must divide ``a``."""
    a = list(a)
    q = [0] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while a:
        c, rem = divmod(a[-1], lead)
        shift = len(a) - len(b)
        if rem or shift < 0:
            raise ArithmeticError("inexact polynomial division")
        q[shift] = c
        for k, cb in enumerate(b):
            a[shift + k] -= c * cb
        _u_trim(a)
    return _u_trim(q)


_PRIME = (1 << 61) - 1


def _coprime_mod_p(a, b):
    """True when a, b are certainly coprime in Q[x], judged modulo a large prime."""
    if a[-1] % _PRIME == 0 or b[-1] % _PRIME == 0:
        return False
    a = [c % _PRIME for c in a]
    b = [c % _PRIME for c in b]
    while len(b) > 1:
        inv = pow(b[-1], -1, _PRIME)
        while len(a) >= len(b):
            q = a[-1] * inv % _PRIME
            shift = len(a) - len(b)
            for k, cb in enumerate(b):
                a[shift + k] = (a[shift + k] - q * cb) % _PRIME
            _u_trim(a)
        a, b = b, a
        if not b:
            return False
    # gcd mod p has degree 0, which bounds the degree of the true gcd
    return bool(b)


def _z_gcd(a, b):
    """gcd in Z[x] with positive leading coefficient (primitive PRS)."""
    a, b = _u_trim(list(a)), _u_trim(list(b))
    if not a or not b:
        rest = a or b
        return _z_primitive(rest) if rest else []
    c = math.gcd(_int_content(a), _int_content(b))
    if len(a) == 1 or len(b) == 1 or _coprime_mod_p(a, b):
        return [c]
    a, b = _z_primitive(a), _z_primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _z_prem(a, b)
        a, b = b, (_z_primitive(r) if r else [])
    return [c * v for v in a]


# ---------------------------------------------------------------------------


class Poly:
    """Sparse bivariate polynomial with Fraction coefficients (immutable)."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for mono, c in terms.items():
                if c:
                    i, j = mono
                    if i < 0 or j < 0:
                        raise ValueError("negative exponent")
                    clean[(int(i), int(j))] = Fraction(c)
        self.terms = clean
        self._hash = None

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    @property
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == Poly.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __repr__(self):
        return f"Poly({self.render()!r})"

    def leading(self):
        """Leading (monomial, coefficient) in grlex order with x > y."""
        mono = max(self.terms, key=_grlex_key)
        return mono, self.terms[mono]

    def degree(self, var=None):
        if not self.terms:
            return -1
        if var == "x":
            return max(i for i, _ in self.terms)
        if var == "y":
            return max(j for _, j in self.terms)
        return max(i + j for i, j in self.terms)

    def __neg__(self):
        return Poly({m: -c for m, c in self.terms.items()})

    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Poly(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                m = (i1 + i2, j1 + j2)
                out[m] = out.get(m, 0) + c1 * c2
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c):
        return Poly({m: v * c for m, v in self.terms.items()})

    def diff(self, var):
        if var == "x":
            return Poly({(i - 1, j): c * i for (i, j), c in self.terms.items() if i})
        if var == "y":
            return Poly({(i, j - 1): c * j for (i, j), c in self.terms.items() if j})
        raise ValueError(f"unknown variable {var!r}")

    # -- recursive view: polynomial in y with coefficients in Q[x] ---------

    def _as_y_coeffs(self):
        coeffs = {}
        for (i, j), c in self.terms.items():
            row = coeffs.setdefault(j, [])
            if len(row) <= i:
                row.extend([Fraction(0)] * (i + 1 - len(row)))
            row[i] += c
        dy = max(coeffs) if coeffs else -1
        return [coeffs.get(j, []) for j in range(dy + 1)]

    @staticmethod
    def _from_y_coeffs(rows):
        out = {}
        for j, row in enumerate(rows):
            for i, c in enumerate(row):
                if c:
                    out[(i, j)] = c
        return Poly(out)

    def divide_exact(self, other):
        """Exact quotient ``self / other``; raises ArithmeticError if inexact."""
        if other.is_zero:
            raise ZeroDenominatorError("division by the zero polynomial")
        rem = dict(self.terms)
        quot = {}
        lm, lc = other.leading()
        while rem:
            m = max(rem, key=_grlex_key)
            c = rem[m]
            di, dj = m[0] - lm[0], m[1] - lm[1]
            if di < 0 or dj < 0:
                raise ArithmeticError("polynomial division is not exact")
            q = c / lc
            quot[(di, dj)] = q
            for (i, j), v in other.terms.items():
                key = (i + di, j + dj)
                nv = rem.get(key, 0) - q * v
                if nv:
                    rem[key] = nv
                else:
                    rem.pop(key, None)
        return Poly(quot)

    def __call__(self, x, y):
        return _horner(self, x, y)

    def render(self):
        if not self.terms:
            return "0"
        parts = []
        for (i, j) in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[(i, j)]
            mono = []
            if i:
                mono.append("x" if i == 1 else f"x^{i}")
            if j:
                mono.append("y" if j == 1 else f"y^{j}")
            mag = abs(c)
            if not mono:
                body = _render_fraction(mag)
            elif mag == 1:
                body = "*".join(mono)
            else:
                body = _render_fraction(mag) + "*" + "*".join(mono)
            parts.append(("-" if c < 0 else "+", body))
        sign, body = parts[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _render_fraction(c):
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _as_poly(v):
    if isinstance(v, Poly):
        return v
    if isinstance(v, (int, Fraction)):
        return Poly.const(v)
    return None


def _y_coprime_mod_p(a, b):
    """True when primitive a, b in Z[x][y] have a gcd free of y (checked at x = x0 mod p)."""
    for x0 in (3, 5, 7, 11, 13):
        ya = [_u_eval_mod(row, x0) for row in a]
        yb = [_u_eval_mod(row, x0) for row in b]
        if ya[-1] and yb[-1]:
            # leading coefficients survive, so the image degrees are the true ones
            return len(ya) == 1 or len(yb) == 1 or _coprime_mod_p(ya, yb)
    return False


def _u_eval_mod(row, x0):
    acc = 0
    for c in reversed(row):
        acc = (acc * x0 + c) % _PRIME
    return acc


def _z_content(rows):
    g = []
    for row in rows:
        g = _z_gcd(g, row)
        if g == [1]:
            break
    return g


def _integer_rows(p):
    rows = p._as_y_coeffs()
    lcm = 1
    for row in rows:
        for c in row:
            lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    return [[int(c * lcm) for c in row] for row in rows]


def poly_gcd(f, g):
    """Monic (grlex) gcd of two bivariate polynomials over Q.

    Works over Z[x][y] after clearing denominators: a primitive
    pseudo-remainder sequence in ``y`` with contents taken in Z[x].
    """
    if f.is_zero and g.is_zero:
        return Poly()
    if f.is_zero or g.is_zero:
        h = g if f.is_zero else f
        return h.scale(1 / h.leading()[1])
    a, b = _integer_rows(f), _integer_rows(g)
    ca, cb = _z_content(a), _z_content(b)
    content = _z_gcd(ca, cb)
    a = [_z_divide(r, ca) for r in a]
    b = [_z_divide(r, cb) for r in b]
    if len(a) < len(b):
        a, b = b, a
    if _y_coprime_mod_p(a, b):
        a, b = [[1]], [[1]]
    while True:
        if len(b) == 1:
            # b is a nonzero element of Z[x] with trivial content: coprime in y
            a = [[1]]
            break
        r = _prem(a, b)
        if not r:
            a = b
            break
        cr = _z_content(r)
        r = [_z_divide(c, cr) for c in r]
        a, b = b, r
    result = Poly._from_y_coeffs([[Fraction(v) for v in _u_mul(content, row)] for row in a])
    return result.scale(1 / result.leading()[1])


def _prem(a, b):
    """Pseudo-remainder of a by b as polynomials in y over Q[x]."""
    a = [list(r) for r in a]
    lead = b[-1]
    while len(a) >= len(b):
        top = a[-1]
        shift = len(a) - len(b)
        a = [_u_mul(r, lead) for r in a]
        for k, rb in enumerate(b):
            a[shift + k] = _u_sub(a[shift + k], _u_mul(top, rb))
        while a and not a[-1]:
            a.pop()
    return a


def _horner(p, x, y):
    rows = p._as_y_coeffs()
    exact = isinstance(x, Rational) and isinstance(y, Rational)
    if exact:
        x, y = Fraction(x), Fraction(y)
    else:
        x, y = complex(x), complex(y)
    acc = 0
    for row in reversed(rows):
        inner = 0
        for c in reversed(row):
            inner = inner * x + (c if exact else float(c))
        acc = acc * y + inner
    return acc


def _scale_at(p, x, y):
    ax, ay = abs(complex(x)), abs(complex(y))
    return sum(abs(float(c)) * ax**i * ay**j for (i, j), c in p.terms.items())


class RationalFunction:
    """Canonical quotient of two bivariate polynomials. Immutable."""

    __slots__ = ("num", "den", "_hash")

    pole_epsilon = 1e-14

    def __init__(self, num, den=None, *, _canonical=False):
        num = _as_poly(num) if not isinstance(num, Poly) else num
        den = Poly.const(1) if den is None else (_as_poly(den) if not isinstance(den, Poly) else den)
        if den.is_zero:
            raise ZeroDenominatorError("denominator is the zero polynomial")
        if not _canonical:
            if num.is_zero:
                den = Poly.const(1)
            else:
                g = poly_gcd(num, den)
                if g != 1:
                    num, den = num.divide_exact(g), den.divide_exact(g)
            lc = den.leading()[1]
            if lc != 1:
                num, den = num.scale(1 / lc), den.scale(1 / lc)
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def _monic(cls, num, den):
        """Wrap an already coprime pair, normalizing the denominator."""
        if num.is_zero:
            return ZERO
        lc = den.leading()[1]
        if lc != 1:
            num, den = num.scale(1 / lc), den.scale(1 / lc)
        return cls(num, den, _canonical=True)

    @classmethod
    def _coerce(cls, v):
        if isinstance(v, RationalFunction):
            return v
        if isinstance(v, Poly):
            return cls(v)
        if isinstance(v, (int, Fraction)):
            return cls(Poly.const(v), _canonical=True)
        return None

    @property
    def is_zero(self):
        return self.num.is_zero

    def __bool__(self):
        return not self.num.is_zero

    def __eq__(self, other):
        other = RationalFunction._coerce(other)
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def __repr__(self):
        return f"RationalFunction({self.render()!r})"

    def __str__(self):
        return self.render()

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _canonical=True)

    def __add__(self, other):
        other = RationalFunction._coerce(other)
        if other is None:
            return NotImplemented
        if self.num.is_zero:
            return other
        if other.num.is_zero:
            return self
        # Henrici: with g = gcd(b, d), only g can share factors with the new numerator
        g = poly_gcd(self.den, other.den)
        b1, d1 = _cancel(self.den, other.den, g)
        num = self.num * d1 + other.num * b1
        if num.is_zero:
            return ZERO
        h = poly_gcd(num, g)
        num, g = _cancel(num, g, h)
        return RationalFunction._monic(num, b1 * d1 * g)

    __radd__ = __add__

    def __sub__(self, other):
        other = RationalFunction._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = RationalFunction._coerce(other)
        if other is None:
            return NotImplemented
        # cross-cancel first to keep intermediate sizes down
        g1 = poly_gcd(self.num, other.den)
        g2 = poly_gcd(other.num, self.den)
        n1, d2 = _cancel(self.num, other.den, g1)
        n2, d1 = _cancel(other.num, self.den, g2)
        return RationalFunction._monic(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def reciprocal(self):
        if self.num.is_zero:
            raise ZeroDenominatorError("reciprocal of the zero function")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        other = RationalFunction._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return RationalFunction._coerce(other) * self.reciprocal()

    def __pow__(self, n):
        if n < 0:
            return self.reciprocal() ** (-n)
        return RationalFunction(self.num**n, self.den**n, _canonical=True)

    def diff(self, var):
        return partial(self, var)

    def __call__(self, x, y):
        return eval_rat(self, (x, y))

    def render(self):
        if self.den == 1:
            return self.num.render()
        num = self.num.render()
        if len(self.num.terms) > 1:
            num = f"({num})"
        return f"{num}/({self.den.render()})"


def _cancel(n, d, g):
    if g == 1:
        return n, d
    return n.divide_exact(g), d.divide_exact(g)


X = RationalFunction(Poly({(1, 0): 1}), _canonical=True)
Y = RationalFunction(Poly({(0, 1): 1}), _canonical=True)
ONE = RationalFunction(Poly.const(1), _canonical=True)
ZERO = RationalFunction(Poly(), _canonical=True)


def partial(f, var):
    """Exact partial derivative of ``f`` with respect to ``"x"`` or ``"y"``."""
    if var not in ("x", "y"):
        raise ValueError(f"unknown variable {var!r}")
    n, d = f.num, f.den
    dd = d.diff(var)
    if dd.is_zero:
        return RationalFunction._monic(n.diff(var), d)
    # divide out gcd(d, d') up front so repeated factors stay small
    g = poly_gcd(d, dd)
    d1, dd1 = _cancel(d, dd, g)
    return RationalFunction(n.diff(var) * d1 - n * dd1, d * d1)


def wedge(f, g):
    """Coefficient of dx^dy in df^dg, i.e. f_x g_y - f_y g_x."""
    return partial(f, "x") * partial(g, "y") - partial(f, "y") * partial(g, "x")


def eval_rat(f, p, *, epsilon=None):
    """Evaluate ``f`` at ``p = (x, y)``.

    Rational coordinates give an exact Fraction; anything else gives a complex
    double. A vanishing denominator raises :class:`PoleError`; in complex mode
    "vanishing" means below ``epsilon`` times the denominator's scale at ``p``.
    """
    x, y = p
    den = _horner(f.den, x, y)
    if isinstance(den, Fraction):
        if den == 0:
            raise PoleError(f.den, p)
        return _horner(f.num, x, y) / den
    eps = RationalFunction.pole_epsilon if epsilon is None else epsilon
    if abs(den) <= eps * _scale_at(f.den, x, y):
        raise PoleError(f.den, p)
    return _horner(f.num, x, y) / den


# ---------------------------------------------------------------------------
# parser

_TOKEN = re.compile(r"\s*(?:(\d+)|([xy])|(\S))")


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("var", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", start)
            tokens.append(("op", ch, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        tok = self.take()
        if tok[1] != value:
            raise ParseError(f"expected {value!r}", tok[2])

    def expr(self):
        acc = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in ("*", "/"):
            _, op, pos = self.take()
            rhs = self.unary()
            if op == "*":
                acc = acc * rhs
            else:
                if rhs.is_zero:
                    raise ZeroDenominatorError(f"division by the zero polynomial at position {pos}")
                acc = acc / rhs
        return acc

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("+", "-"):
            self.take()
            val = self.unary()
            return -val if tok[1] == "-" else val
        return self.power()

    def power(self):
        base = self.atom()
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "^":
            self.take()
            neg = False
            if self.peek()[1] == "-" and self.peek()[0] == "op":
                self.take()
                neg = True
            exp_tok = self.take()
            if exp_tok[0] != "int":
                raise ParseError("exponent must be an integer literal", exp_tok[2])
            n = -exp_tok[1] if neg else exp_tok[1]
            if n < 0 and base.is_zero:
                raise ZeroDenominatorError(f"negative power of zero at position {exp_tok[2]}")
            return base**n
        return base

    def atom(self):
        kind, value, pos = self.take()
        if kind == "int":
            return RationalFunction._coerce(value)
        if kind == "var":
            return X if value == "x" else Y
        if kind == "op" and value == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if kind == "end":
            raise ParseError("unexpected end of input", pos)
        raise ParseError(f"unexpected {value!r}", pos)


def parse_ratfunc(text):
    """Parse an expression in ``x``, ``y`` into canonical form."""
    parser = _Parser(text)
    result = parser.expr()
    kind, value, pos = parser.peek()
    if kind != "end":
        raise ParseError(f"unexpected {value!r}", pos)
    return result
