"""Quadratic Casimir eigenvalues for classical-series irreps.

Raw values use the root-space metrics: orthonormal for ``sl`` and ``so``,
half the identity for ``sp``.  With these choices the adjoint has raw value
``2t`` and every normalized value is ``C(label) / C(ad)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .composite import CompositePair, to_diagram
from .exact import rational_to_str
from .young import size, transpose

__all__ = [
    "AlgebraId",
    "CasimirValue",
    "FAMILIES",
    "casimir_sl",
    "casimir_sl_columns",
    "casimir_so",
    "casimir_sp",
    "casimir_adjoint_raw",
    "split_eigenvalue",
]

CLASSICAL = ("sl", "so", "sp")
EXCEPTIONAL = ("g2", "f4", "e6", "e7", "e8")
FAMILIES = CLASSICAL + EXCEPTIONAL


@dataclass(frozen=True)
class AlgebraId:
    family: str
    N: int | None = None

    def __post_init__(self):
        fam = self.family.lower()
        object.__setattr__(self, "family", fam)
        if fam not in FAMILIES:
            raise ValueError(f"unknown algebra family {self.family!r}; expected one of {', '.join(FAMILIES)}")
        if fam in EXCEPTIONAL:
            if self.N is not None:
                raise ValueError(f"{fam} takes no N parameter")
            return
        if self.N is None:
            raise ValueError(f"{fam} requires N")
        N = int(self.N)
        object.__setattr__(self, "N", N)
        if fam == "sl" and N < 2:
            raise ValueError(f"sl(N) needs N >= 2, got {N}")
        if fam == "so" and N < 5:
            raise ValueError(f"so(N) needs N >= 5, got {N}")
        if fam == "sp" and (N < 2 or N % 2):
            raise ValueError(f"sp(N) needs even N >= 2, got {N}")

    @classmethod
    def parse(cls, text: str, N: int | None = None) -> "AlgebraId":
        """Accepts ``"sl"`` with a separate ``N``, or ``"sl(5)"``/``"sl5"``."""
        m = re.fullmatch(r"\s*(sl|so|sp)\s*\(?\s*(\d+)\s*\)?\s*", text.lower())
        if m:
            if N is not None and int(m.group(2)) != N:
                raise ValueError(f"conflicting N in {text!r} and N={N}")
            return cls(m.group(1), int(m.group(2)))
        return cls(text.strip().lower(), N)

    @property
    def classical(self) -> bool:
        return self.family in CLASSICAL

    @property
    def rank(self) -> int:
        if self.family == "sl":
            return self.N - 1
        if self.family in ("so", "sp"):
            return self.N // 2
        return int(self.family[1])

    def __str__(self):
        return f"{self.family}({self.N})" if self.classical else self.family


@dataclass(frozen=True)
class CasimirValue:
    raw: Fraction
    normalized: Fraction

    def to_json(self) -> dict:
        return {"raw": rational_to_str(self.raw), "normalized": rational_to_str(self.normalized)}


def casimir_adjoint_raw(g: AlgebraId) -> Fraction:
    """Raw adjoint value ``2t`` in the metric conventions above."""
    return {
        "sl": lambda N: Fraction(2 * N),
        "so": lambda N: Fraction(2 * (N - 2)),
        "sp": lambda N: Fraction(N + 2),
        "g2": lambda N: Fraction(8),
        "f4": lambda N: Fraction(18),
        "e6": lambda N: Fraction(24),
        "e7": lambda N: Fraction(36),
        "e8": lambda N: Fraction(60),
    }[g.family](g.N)


def _sl_diagram(N: int, label) -> tuple[int, ...]:
    if isinstance(label, CompositePair):
        return to_diagram(label, N)
    lam = tuple(label)
    if len(lam) > N:
        raise ValueError(f"diagram {list(lam)} has more than N = {N} rows")
    return lam


def casimir_sl(N: int, label) -> CasimirValue:
    """``sum l_i^2 - 2 sum i l_i + (N+1)|l| - |l|^2/N``, normalized by ``2N``."""
    lam = _sl_diagram(N, label)
    m = size(lam)
    raw = (
        sum(r * r for r in lam)
        - 2 * sum(i * r for i, r in enumerate(lam, start=1))
        + (N + 1) * m
        - Fraction(m * m, N)
    )
    return CasimirValue(raw, raw / (2 * N))


def casimir_sl_columns(N: int, label) -> CasimirValue:
    """Same value computed from column heights ``a``."""
    a = transpose(_sl_diagram(N, label))
    m = sum(a)
    raw = (
        -sum(h * h for h in a)
        + 2 * sum(i * h for i, h in enumerate(a, start=1))
        + (N - 1) * m
        - Fraction(m * m, N)
    )
    return CasimirValue(raw, raw / (2 * N))


def casimir_so(N: int, lam) -> CasimirValue:
    """``sum (l_i^2 + l_i (N - 2i))``, normalized by ``2(N-2)``."""
    lam = tuple(lam)
    if len(lam) > N // 2:
        raise ValueError(f"diagram {list(lam)} has more than N//2 = {N // 2} rows")
    raw = Fraction(sum(r * r + r * (N - 2 * i) for i, r in enumerate(lam, start=1)))
    return CasimirValue(raw, raw / (2 * (N - 2)))


def casimir_sp(N: int, lam) -> CasimirValue:
    """``(1/2) sum (l_i^2 + l_i (N + 2 - 2i))``, normalized by ``N + 2``."""
    if N % 2:
        raise ValueError(f"sp(N) needs even N, got {N}")
    lam = tuple(lam)
    if len(lam) > N // 2:
        raise ValueError(f"diagram {list(lam)} has more than N/2 = {N // 2} rows")
    raw = Fraction(sum(r * r + r * (N + 2 - 2 * i) for i, r in enumerate(lam, start=1)), 2)
    return CasimirValue(raw, raw / (N + 2))


def split_eigenvalue(c_total: CasimirValue, parts) -> Fraction:
    """Split-Casimir eigenvalue ``(c(total) - sum c(part)) / 2`` on normalized values."""
    return (c_total.normalized - sum((p.normalized for p in parts), Fraction(0))) / 2
