"""Exact scalars: rationals and univariate polynomials in a formal variable t.

A scalar is either a :class:`fractions.Fraction` or a :class:`Poly`.  Polynomials
of degree <= 0 are always collapsed to a ``Fraction`` so that equal values share
one representation.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Union

from .errors import ScalarSyntaxError

__all__ = [
    "Poly",
    "Scalar",
    "T",
    "as_scalar",
    "format_scalar",
    "is_rational",
    "make_poly",
    "parse_scalar",
]


class Poly:
    """Polynomial in ``t`` with rational coefficients, ascending degree.

    Instances are immutable.  Build them with :func:`make_poly` (or arithmetic),
    which strips trailing zeros and collapses constants to ``Fraction``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __call__(self, t):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    # arithmetic ---------------------------------------------------------
    @staticmethod
    def _coeffs_of(other):
        if isinstance(other, Poly):
            return other.coeffs
        if isinstance(other, (int, Fraction)):
            return (Fraction(other),)
        return None

    def __add__(self, other):
        oc = self._coeffs_of(other)
        if oc is None:
            return NotImplemented
        n = max(len(self.coeffs), len(oc))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = oc + (Fraction(0),) * (n - len(oc))
        return make_poly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return make_poly(-c for c in self.coeffs)

    def __pos__(self):
        return self

    def __sub__(self, other):
        oc = self._coeffs_of(other)
        if oc is None:
            return NotImplemented
        return self + make_poly(-c for c in oc)

    def __rsub__(self, other):
        oc = self._coeffs_of(other)
        if oc is None:
            return NotImplemented
        return -self + Poly(oc)

    def __mul__(self, other):
        oc = self._coeffs_of(other)
        if oc is None:
            return NotImplemented
        if not self.coeffs or not oc:
            return Fraction(0)
        out = [Fraction(0)] * (len(self.coeffs) + len(oc) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(oc):
                    out[i + j] += a * b
        return make_poly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        # only division by a nonzero rational is meaningful here
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("polynomial divided by zero")
            return make_poly(c / other for c in self.coeffs)
        return NotImplemented

    def __pow__(self, k: int):
        out = Fraction(1)
        for _ in range(k):
            out = out * self
        return out

    # comparison ---------------------------------------------------------
    def __eq__(self, other):
        oc = self._coeffs_of(other)
        if oc is None:
            return NotImplemented
        oc = list(oc)
        while oc and oc[-1] == 0:
            oc.pop()
        return self.coeffs == tuple(oc)

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else Fraction(0))
        return hash(("Poly", self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Poly({format_scalar(self)!r})"

    __str__ = lambda self: format_scalar(self)


Scalar = Union[Fraction, Poly]

T = Poly((0, 1))
"""The formal deformation variable."""


def make_poly(coeffs: Iterable) -> Scalar:
    """Normalized polynomial; constants come back as ``Fraction``."""
    p = Poly(coeffs)
    if len(p.coeffs) <= 1:
        return p.coeffs[0] if p.coeffs else Fraction(0)
    return p


def is_rational(s) -> bool:
    return isinstance(s, (int, Fraction))


def as_scalar(value) -> Scalar:
    """Coerce ints, Fractions, Polys and scalar literals to a canonical scalar."""
    if isinstance(value, Poly):
        return make_poly(value.coeffs)
    if isinstance(value, bool):
        raise ScalarSyntaxError(f"not a scalar: {value!r}")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_scalar(value)
    raise ScalarSyntaxError(f"not a scalar: {value!r}")


_RATIONAL = r"\d+(?:/\d+)?"
_TERM = re.compile(
    r"(?P<sign>[+-]{0,2})(?P<coef>" + _RATIONAL + r")?"
    r"(?P<tpart>\*?t(?:\^(?P<exp>\d+))?)?"
)


def _parse_rational(text: str, literal: str) -> Fraction:
    if "/" in text:
        p, q = text.split("/")
        if int(q) == 0:
            raise ScalarSyntaxError(f"zero denominator in scalar {literal!r}")
        return Fraction(int(p), int(q))
    return Fraction(int(text))


def parse_scalar(literal: str) -> Scalar:
    """Parse ``"p"``, ``"p/q"`` or ``"c0 + c1*t + c2*t^2 ..."``.

    Whitespace is ignored.  Denominators must be positive; signs go in front.
    """
    if not isinstance(literal, str):
        raise ScalarSyntaxError(f"scalar literal must be a string, got {literal!r}")
    s = re.sub(r"\s+", "", literal)
    if not s:
        raise ScalarSyntaxError("empty scalar literal")
    coeffs: dict[int, Fraction] = {}
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ScalarSyntaxError(f"malformed scalar {literal!r} at offset {pos}")
        sign, coef, tpart = m.group("sign"), m.group("coef"), m.group("tpart")
        if not first and not sign:
            raise ScalarSyntaxError(f"missing operator in scalar {literal!r}")
        if coef is None and tpart is None:
            raise ScalarSyntaxError(f"malformed scalar {literal!r} at offset {pos}")
        if coef is None and tpart.startswith("*"):
            raise ScalarSyntaxError(f"dangling '*' in scalar {literal!r}")
        value = _parse_rational(coef, literal) if coef is not None else Fraction(1)
        if sign.count("-") % 2:
            value = -value
        k = 0
        if tpart is not None:
            k = int(m.group("exp")) if m.group("exp") is not None else 1
        coeffs[k] = coeffs.get(k, Fraction(0)) + value
        pos = m.end()
        first = False
    top = max(coeffs)
    return make_poly(coeffs.get(k, Fraction(0)) for k in range(top + 1))


def _format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(s) -> str:
    """Canonical string: ``"p"``, ``"p/q"`` or ``"1 - 1/2*t + t^2"``."""
    if isinstance(s, (int, Fraction)):
        return _format_rational(s)
    if not isinstance(s, Poly):
        raise TypeError(f"not a scalar: {s!r}")
    if len(s.coeffs) <= 1:
        return _format_rational(s.coeffs[0] if s.coeffs else 0)
    parts = []
    for k, c in enumerate(s.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = _format_rational(mag)
        else:
            tt = "t" if k == 1 else f"t^{k}"
            body = tt if mag == 1 else f"{_format_rational(mag)}*{tt}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)
