"""q-deformed dimensions for the ``sl(N)`` branching of ``box x Y_n``.

``dim_q`` of a diagram is the symmetric hook-content product
``prod [N + content]_q / [hook]_q`` (normalization constant ``c = 0``).
Identities between products of q-numbers are checked by clearing
denominators and evaluating at more rational points than the degree of the
resulting polynomial, which proves them as Laurent-polynomial identities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import QPoint, qnum
from .young import contents, hook_lengths, partition

__all__ = [
    "QDimError",
    "QDimExpr",
    "qdim_sl",
    "yn_diagram",
    "part_diagram",
    "branch_expr",
    "qdim_branch",
    "identity1_terms",
    "identity2_terms",
    "required_samples",
    "holds_at",
    "default_samples",
    "verify_q_identity_1",
    "verify_q_identity_2",
]


class QDimError(ValueError):
    pass


def _q(at) -> QPoint:
    return at if isinstance(at, QPoint) else QPoint(at)


def _prod_q(args, at) -> Fraction:
    out = Fraction(1)
    for A in args:
        out *= qnum(A, at)
    return out


def qdim_sl(N: int, lam, at) -> Fraction:
    """Symmetric q-dimension of the ``sl(N)`` irrep ``lam``; 0 if it has more than N rows."""
    lam = partition(lam)
    if len(lam) > N:
        return Fraction(0)
    at = _q(at)
    num = _prod_q([N + c for c in contents(lam)], at)
    den = _prod_q(hook_lengths(lam), at)
    if den == 0:
        raise QDimError(f"a hook q-number vanishes at q = {at.q}")
    return num / den


def yn_diagram(N: int, n: int) -> tuple[int, ...]:
    """``[2n, n^(N-2)]``"""
    return partition([2 * n] + [n] * (N - 2))


def part_diagram(N: int, n: int, part: int):
    """Diagram of branching part 1, 2 or 3; ``None`` when it does not exist for this ``N``."""
    rows = {
        1: [2 * n + 1] + [n] * (N - 2),
        2: [2 * n, n + 1] + [n] * (N - 3),
        3: [2 * n - 1] + [n - 1] * (N - 2),
    }[part]
    if N - 3 < 0 and part == 2:
        return None
    return partition(rows)


@dataclass(frozen=True)
class QDimExpr:
    """``prod [num]_q / prod [den]_q`` times ``dim_q`` of ``base`` in ``sl(N)``."""

    N: int
    num: tuple
    den: tuple
    base: tuple

    def ratio(self, at) -> Fraction:
        at = _q(at)
        d = _prod_q(self.den, at)
        if d == 0:
            raise QDimError(f"denominator q-number vanishes at q = {at.q}: {list(self.den)}")
        return _prod_q(self.num, at) / d

    def evaluate(self, at) -> Fraction:
        return self.ratio(at) * qdim_sl(self.N, self.base, at)


def branch_expr(N: int, n: int, part: int) -> QDimExpr:
    if part not in (1, 2, 3):
        raise QDimError(f"part must be 1, 2 or 3, got {part}")
    if N < 2 or n < 1:
        raise QDimError(f"need N >= 2 and n >= 1, got N = {N}, n = {n}")
    num, den = {
        1: ((N + 2 * n, N + n - 1), (N + 2 * n - 1, n + 1)),
        2: ((N + n - 1, n, N - 2), (n + 1, N + n - 2)),
        3: ((N + 2 * n - 2, n), (N + n - 2, N + 2 * n - 1)),
    }[part]
    return QDimExpr(N, num, den, yn_diagram(N, n))


def qdim_branch(N: int, n: int, part: int, at) -> Fraction:
    """q-dimension of branching part ``part`` of ``box x Y_n`` as ratio times ``dim_q Y_n``."""
    return branch_expr(N, n, part).evaluate(at)


# -- identities ----------------------------------------------------------------
# Each identity is stored with denominators cleared: a list of signed
# monomials (sign, q-number arguments) whose sum must vanish.


def identity1_terms(N: int, n: int) -> list:
    """``[N] = r1 + r2 + r3`` times ``[N+2n-1][n+1][N+n-2]``."""
    return [
        (1, (N, N + 2 * n - 1, n + 1, N + n - 2)),
        (-1, (N + 2 * n, N + n - 1, N + n - 2)),
        (-1, (N + n - 1, n, N - 2, N + 2 * n - 1)),
        (-1, (N + 2 * n - 2, n, n + 1)),
    ]


def identity2_terms(N: int, M: int) -> list:
    """``[N+M][M+1][N+1] = [N][N+1] + [N+M+2][M][N] + [M][M+1]``."""
    return [
        (1, (N + M, M + 1, N + 1)),
        (-1, (N, N + 1)),
        (-1, (N + M + 2, M, N)),
        (-1, (M, M + 1)),
    ]


def _degree(terms) -> int:
    """Half-width of the Laurent span: each ``[A]_q`` spans ``q^(1-|A|)..q^(|A|-1)``."""
    return max(sum(max(abs(A) - 1, 0) for A in args) for _, args in terms)


def required_samples(terms) -> int:
    """Distinct q points that prove a cleared identity (degree ``2d`` polynomial after ``q^d``)."""
    return 2 * _degree(terms) + 1


def default_samples(count: int, avoid=()) -> list[Fraction]:
    """Deterministic distinct sample points ``2, 3, 4, ...`` skipping ``avoid``."""
    seen = {Fraction(a) for a in avoid}
    out, k = [], 2
    while len(out) < count:
        if Fraction(k) not in seen:
            out.append(Fraction(k))
        k += 1
    return out


def holds_at(terms, at) -> bool:
    """Whether a cleared identity vanishes at one point."""
    q = _q(at).q
    return sum((s * _prod_q(args, q) for s, args in terms), Fraction(0)) == 0


def _check(terms, sample_qs, strict: bool) -> bool:
    qs = list(dict.fromkeys(_q(s).q for s in sample_qs))
    need = required_samples(terms)
    if len(qs) < need:
        if strict:
            raise QDimError(f"{len(qs)} distinct samples given; {need} are required to prove the identity")
        qs += default_samples(need - len(qs), avoid=qs)
    return all(holds_at(terms, q) for q in qs)


def verify_q_identity_1(N: int, n: int, sample_qs=(), strict: bool = False) -> bool:
    """Check ``[N]_q`` as the sum of the three branching ratios.

    Args:
        N: rank parameter, ``N >= 2``.
        n: Cartan power, ``n >= 1``.
        sample_qs: points to evaluate at; all of them are always used.
        strict: raise when fewer distinct points than needed for a proof are
            given, instead of adding deterministic extra points.
    """
    if N < 2 or n < 1:
        raise QDimError(f"need N >= 2 and n >= 1, got N = {N}, n = {n}")
    return _check(identity1_terms(N, n), sample_qs, strict)


def verify_q_identity_2(N: int, M: int, sample_qs=(), strict: bool = False) -> bool:
    """Check the symmetric three-term identity, and its ``N <-> M`` mirror."""
    if N < 0 or M < 0:
        raise QDimError(f"need N, M >= 0, got N = {N}, M = {M}")
    return _check(identity2_terms(N, M), sample_qs, strict) and _check(identity2_terms(M, N), sample_qs, strict)
