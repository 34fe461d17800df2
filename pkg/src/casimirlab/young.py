"""Young diagrams and closed-form dimensions of classical tensor irreps.

Partitions are plain tuples of weakly decreasing positive integers; the empty
tuple is the empty diagram.  The dimension formulas run over column heights,
which is the form in which they are usually quoted for ``sl`` and ``so``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from .exact import fact

__all__ = [
    "Partition",
    "partition",
    "size",
    "transpose",
    "hook_lengths",
    "contents",
    "num_standard_tableaux",
    "dim_sl",
    "dim_sl_hook_content",
    "dim_so",
    "dim_sp",
    "horizontal_sum",
    "partitions_of",
    "add_box",
    "remove_box",
]

Partition = tuple


def partition(rows=()) -> tuple[int, ...]:
    """Validate and canonicalize ``rows`` (trailing zeros are dropped)."""
    rows = [int(r) for r in rows]
    while rows and rows[-1] == 0:
        rows.pop()
    for i, r in enumerate(rows):
        if r < 1:
            raise ValueError(f"row {i + 1} has non-positive length {r}")
        if i and r > rows[i - 1]:
            raise ValueError(f"rows not weakly decreasing at row {i + 1}: {rows}")
    return tuple(rows)


def size(lam) -> int:
    return sum(lam)


def transpose(lam) -> tuple[int, ...]:
    """Column heights of ``lam`` as a partition."""
    if not lam:
        return ()
    return tuple(sum(1 for r in lam if r > j) for j in range(lam[0]))


def _cells(lam):
    for i, r in enumerate(lam):
        for j in range(r):
            yield i, j


def hook_lengths(lam) -> list[int]:
    cols = transpose(lam)
    return [lam[i] - j + cols[j] - i - 1 for i, j in _cells(lam)]


def contents(lam) -> list[int]:
    return [j - i for i, j in _cells(lam)]


def num_standard_tableaux(lam) -> int:
    """Hook-length formula ``|lam|! / prod(hooks)``."""
    return factorial(size(lam)) // prod(hook_lengths(lam))


def dim_sl(N: int, lam) -> Fraction:
    r"""Dimension of the ``sl(N)`` irrep with diagram ``lam``.

    Uses the column-height product

    .. math::

        \prod_{i=1}^k \frac{(N+i-1)!}{(N-a_i+i-1)!\,(a_i+k-i)!}
        \prod_{l<j} (a_l - a_j + j - l),

    where ``a`` are the column heights.  Diagrams with more than ``N`` rows
    give 0.
    """
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    if len(lam) > N:
        return Fraction(0)
    a = transpose(lam)
    k = len(a)
    val = Fraction(1)
    for i, ai in enumerate(a, start=1):
        val *= Fraction(fact(N + i - 1), fact(N - ai + i - 1) * fact(ai + k - i))
    for l in range(k):
        for j in range(l + 1, k):
            val *= a[l] - a[j] + j - l
    return val


def dim_sl_hook_content(N: int, lam) -> Fraction:
    """Hook-content form ``prod (N + c) / h``; independent of :func:`dim_sl`."""
    num = prod(N + c for c in contents(lam))
    return Fraction(num, prod(hook_lengths(lam)))


def dim_so(N: int, lam) -> Fraction:
    r"""Dimension of the ``so(N)`` tensor irrep with diagram ``lam``.

    Column-height product

    .. math::

        \prod_{i=1}^k \frac{(N+2(i-1))!}{(N-a_i+k-2+i)!\,(a_i+k-i)!}
        \prod_{l<j} (a_l-a_j+j-l)(N-(a_l+a_j)+l+j-2).

    Only diagrams with at most ``N // 2`` rows are accepted; deeper diagrams
    need modification rules, which are out of scope.
    """
    if N < 3:
        raise ValueError(f"so(N) needs N >= 3, got {N}")
    if len(lam) > N // 2:
        raise ValueError(f"diagram {list(lam)} has more than N//2 = {N // 2} rows")
    a = transpose(lam)
    k = len(a)
    val = Fraction(1)
    for i, ai in enumerate(a, start=1):
        lo = N - ai + k - 2 + i
        if lo < 0:
            raise ValueError(f"column {i} (height {ai}) gives negative factorial argument {lo}")
        val *= Fraction(fact(N + 2 * (i - 1)), fact(lo) * fact(ai + k - i))
    for l in range(k):
        for j in range(l + 1, k):
            # 0-based l, j: the 1-based offset (l + j - 2) becomes l + j
            val *= (a[l] - a[j] + j - l) * (N - (a[l] + a[j]) + l + j)
    return val


def dim_sp(N: int, lam) -> Fraction:
    r"""Dimension of the ``sp(N)`` irrep (``N = 2r``) with diagram ``lam``.

    Closed product over shifted rows :math:`l_i = \lambda_i + r - i + 1`:

    .. math::

        \prod_i \frac{l_i}{r-i+1}
        \prod_{i<j} \frac{(l_i-l_j)(l_i+l_j)}{(j-i)(2r+2-i-j)}.
    """
    if N < 2 or N % 2:
        raise ValueError(f"sp(N) needs even N >= 2, got {N}")
    r = N // 2
    if len(lam) > r:
        raise ValueError(f"diagram {list(lam)} has more than N/2 = {r} rows")
    rows = list(lam) + [0] * (r - len(lam))
    shifted = [rows[i] + r - i for i in range(r)]
    base = [r - i for i in range(r)]
    val = Fraction(prod(shifted), prod(base))
    for i in range(r):
        for j in range(i + 1, r):
            val *= Fraction(
                (shifted[i] - shifted[j]) * (shifted[i] + shifted[j]),
                (base[i] - base[j]) * (base[i] + base[j]),
            )
    return val


def horizontal_sum(lam, mu) -> tuple[int, ...]:
    """Row-wise sum of two diagrams; missing rows count as zero."""
    n = max(len(lam), len(mu))
    lam = list(lam) + [0] * (n - len(lam))
    mu = list(mu) + [0] * (n - len(mu))
    return tuple(x + y for x, y in zip(lam, mu))


@lru_cache(maxsize=None)
def _partitions(n: int, cap: int) -> tuple:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, cap), 0, -1):
        out.extend((first,) + rest for rest in _partitions(n - first, first))
    return tuple(out)


def partitions_of(n: int, max_part: int | None = None) -> tuple:
    """All partitions of ``n`` in reverse lexicographic order."""
    return _partitions(n, n if max_part is None else max_part)


def add_box(lam) -> list[tuple[int, ...]]:
    """Diagrams obtained by adding one box (single-box Pieri rule)."""
    lam = tuple(lam)
    out = []
    for i in range(len(lam) + 1):
        cur = lam[i] if i < len(lam) else 0
        if i == 0 or lam[i - 1] > cur:
            out.append(lam[:i] + (cur + 1,) + lam[i + 1 :])
    return out


def remove_box(lam) -> list[tuple[int, ...]]:
    """Diagrams obtained by deleting one removable corner."""
    lam = tuple(lam)
    out = []
    for i, r in enumerate(lam):
        nxt = lam[i + 1] if i + 1 < len(lam) else 0
        if r > nxt:
            out.append(partition(lam[:i] + (r - 1,) + lam[i + 1 :]))
    return out
