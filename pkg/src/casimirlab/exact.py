"""Exact rational arithmetic helpers and q-numbers.

Every scalar in the package is a :class:`fractions.Fraction`.  This module
adds the few things the standard library does not give directly: strict
construction, JSON-friendly serialization, q-number evaluation and exact
polynomial interpolation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

__all__ = [
    "Rational",
    "QPoint",
    "rat",
    "as_rational",
    "qnum",
    "rational_to_str",
    "parse_rational",
    "fact",
    "interpolate",
    "poly_eval",
]

Rational = Fraction


def rat(num: int, den: int = 1) -> Fraction:
    """Reduced fraction ``num/den``; the sign is carried by the numerator."""
    if den == 0:
        raise ZeroDivisionError("rat: zero denominator")
    return Fraction(int(num), int(den))


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction.

    Floats are rejected: silently accepting them would break exactness.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def rational_to_str(x: Fraction) -> str:
    """Canonical ``"num/den"`` rendering (integers get ``/1``)."""
    x = as_rational(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    text = s.strip().replace("−", "-")
    if not text:
        raise ValueError("empty rational literal")
    num, sep, den = text.partition("/")
    try:
        return rat(int(num), int(den) if sep else 1)
    except ValueError:
        raise ValueError(f"malformed rational literal {s!r}") from None


@dataclass(frozen=True)
class QPoint:
    """A nonzero rational sample point for q-numbers."""

    q: Fraction

    def __post_init__(self):
        q = as_rational(self.q)
        if q == 0:
            raise ValueError("q must be nonzero")
        object.__setattr__(self, "q", q)


def qnum(A: int, at) -> Fraction:
    r"""Symmetric q-number :math:`[A]_q = q^{A-1} + q^{A-3} + \dots + q^{1-A}`.

    Args:
        A: integer argument; negative values use :math:`[-A]_q = -[A]_q`.
        at: a :class:`QPoint` or anything :func:`as_rational` accepts.

    Returns:
        The exact value, which equals ``A`` at ``q = 1``.
    """
    q = at.q if isinstance(at, QPoint) else QPoint(as_rational(at)).q
    if A < 0:
        return -qnum(-A, q)
    return sum((q ** (A - 1 - 2 * k) for k in range(A)), Fraction(0))


def fact(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative integer {n}")
    return factorial(n)


def interpolate(xs, ys) -> list[Fraction]:
    """Coefficients (constant term first) of the interpolating polynomial.

    Newton divided differences over exact rationals; ``xs`` must be distinct.
    """
    xs = [as_rational(x) for x in xs]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    coef = [as_rational(y) for y in ys]
    n = len(xs)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    # expand the Newton form into monomials
    poly = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        # poly = poly * (x - xs[i]) + coef[i]
        shifted = [Fraction(0)] + poly[:-1]
        poly = [s - xs[i] * p for s, p in zip(shifted, poly)]
        poly[0] += coef[i]
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return poly


def poly_eval(coeffs, x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc
