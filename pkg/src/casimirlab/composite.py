"""Composite ``sl(N)`` representations ``(mu, lam)``.

The pair stacks the columns of ``mu`` on the columns complementary to those
of ``lam`` inside height-``N`` columns, giving an ordinary Young diagram.
Dimensions are then polynomials in ``N``; the ``N -> -N`` dualities are
checked by exact interpolation of those polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction

from .exact import interpolate, poly_eval
from .young import dim_sl, partition, size, transpose

__all__ = [
    "CompositePair",
    "min_rank",
    "to_diagram",
    "dynkin_labels",
    "dim_composite",
    "dimension_polynomial",
    "check_duality",
    "virtual_dim",
]


@dataclass(frozen=True, order=True)
class CompositePair:
    """The label ``(upper, lower)``; ``upper`` is ``mu`` and ``lower`` is ``lam``."""

    upper: tuple = ()
    lower: tuple = ()
    balanced: bool = field(default=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "upper", partition(self.upper))
        object.__setattr__(self, "lower", partition(self.lower))
        if self.balanced and size(self.upper) != size(self.lower):
            raise ValueError(f"unbalanced pair {self}: |upper| != |lower|")

    def swap(self) -> "CompositePair":
        return CompositePair(self.lower, self.upper, self.balanced)

    def transposed(self) -> "CompositePair":
        return CompositePair(transpose(self.upper), transpose(self.lower), self.balanced)

    def __str__(self):
        fmt = lambda p: "[" + ",".join(map(str, p)) + "]"
        return f"({fmt(self.upper)},{fmt(self.lower)})"

    def to_json(self) -> dict:
        return {"upper": list(self.upper), "lower": list(self.lower)}


def _pair(p) -> CompositePair:
    return p if isinstance(p, CompositePair) else CompositePair(*p)


def min_rank(p) -> int:
    """Smallest ``N`` for which the stacked diagram exists."""
    p = _pair(p)
    return len(p.upper) + len(p.lower)


def to_diagram(p, N: int) -> tuple[int, ...]:
    """Young diagram of ``(mu, lam)`` in ``sl(N)``.

    Its transpose is ``[N - lam'_r, ..., N - lam'_1, mu'_1, ..., mu'_s]``.
    """
    p = _pair(p)
    need = min_rank(p)
    if N < max(need, 1):
        raise ValueError(f"{p} needs N >= {need}, got N = {N}")
    cols = [N - h for h in reversed(transpose(p.lower))] + list(transpose(p.upper))
    return transpose(tuple(cols))


def dynkin_labels(p, N: int) -> tuple[int, ...]:
    """Dynkin labels ``(mu1-mu2, ..., mu_q, 0..., lam_p, ..., lam1-lam2)``."""
    p = _pair(p)
    need = min_rank(p)
    if N < max(need, 2):
        raise ValueError(f"{p} needs N >= {need}, got N = {N}")
    if need == N:
        # a full height-N column is trivial; the pattern would overlap
        rows = list(to_diagram(p, N)) + [0] * N
        return tuple(rows[i] - rows[i + 1] for i in range(N - 1))
    d = [0] * (N - 1)
    mu, lam = p.upper, p.lower
    for i, m in enumerate(mu):
        d[i] += m - (mu[i + 1] if i + 1 < len(mu) else 0)
    for i, l in enumerate(lam):
        d[N - 2 - i] += l - (lam[i + 1] if i + 1 < len(lam) else 0)
    return tuple(d)


def dim_composite(p, N: int) -> Fraction:
    """Dimension of ``(mu, lam)`` in ``sl(N)``; 0 when the pair does not fit."""
    p = _pair(p)
    if N < max(min_rank(p), 1):
        return Fraction(0)
    return dim_sl(N, to_diagram(p, N))


def dimension_polynomial(p, N_range) -> list[Fraction]:
    """Coefficients in ``N`` of ``dim_composite(p, N)``.

    Fits through ``deg + 1`` admissible points of ``N_range`` and checks every
    remaining admissible point against the fit.
    """
    p = _pair(p)
    deg = size(p.upper) + size(p.lower)
    pts = sorted(N for N in set(N_range) if N >= max(min_rank(p), 2))
    if len(pts) < deg + 1:
        raise ValueError(
            f"{p}: need at least {deg + 1} sample points with N >= {max(min_rank(p), 2)}, got {len(pts)}"
        )
    fit = interpolate(pts[: deg + 1], [dim_composite(p, N) for N in pts[: deg + 1]])
    for N in pts[deg + 1 :]:
        if poly_eval(fit, N) != dim_composite(p, N):
            raise ArithmeticError(f"{p}: dimension is not a polynomial of degree <= {deg}")
    return fit


@lru_cache(maxsize=None)
def _poly_cached(p: CompositePair) -> tuple:
    lo = max(min_rank(p), 2)
    deg = size(p.upper) + size(p.lower)
    return tuple(dimension_polynomial(p, range(lo, lo + deg + 2)))


def virtual_dim(p, N) -> Fraction:
    """The dimension polynomial of ``(mu, lam)`` evaluated at any ``N``.

    Equals :func:`dim_composite` whenever the pair fits; below that it is the
    signed continuation that keeps polynomial identities (such as dimension
    conservation in tensor powers) valid for every ``N``.
    """
    p = _pair(p)
    return poly_eval(_poly_cached(CompositePair(p.upper, p.lower)), Fraction(N))


def _reflect(coeffs):
    return [c if k % 2 == 0 else -c for k, c in enumerate(coeffs)]


def check_duality(p, N_range) -> bool:
    """Check the ``N -> -N`` dualities of composite dimensions.

    Always tests ``dim(mu,lam)(-N) = (-1)^(|mu|+|lam|) dim(lam^T, mu^T)(N)``;
    for balanced pairs also ``dim(mu,lam)(-N) = dim(mu^T, lam^T)(N)``.
    """
    p = _pair(p)
    N_range = list(N_range)
    lhs = _reflect(dimension_polynomial(p, N_range))
    sign = -1 if (size(p.upper) + size(p.lower)) % 2 else 1
    dual = CompositePair(transpose(p.lower), transpose(p.upper))
    ok = lhs == [sign * c for c in dimension_polynomial(dual, N_range)]
    if size(p.upper) == size(p.lower):
        ok = ok and lhs == dimension_polynomial(p.transposed(), N_range)
    return ok
