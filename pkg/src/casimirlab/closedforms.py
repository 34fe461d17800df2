"""Per-family closed forms for ``box x Y_n`` and ``box x Y_n'``.

These are the algebra-specific expressions (factorial forms of ``dim Y_n``,
dimension ratios, split-Casimir eigenvalues) that the universal layer is
checked against.  Ratios and eigenvalues are read from the ``branchings``
fixture; the ``sp`` parts have no printed ratio and use :func:`young.dim_sp`.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from . import fixtures
from .casimir import AlgebraId
from .labels import format_label, instantiate_label
from .young import dim_sp

__all__ = ["dim_Yn_closed", "box_Yn_closed", "box_Yn_eigenvalues", "BranchPart"]

F = Fraction


def _f(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of {n}: outside the closed form's range")
    return factorial(n)


def dim_Yn_closed(g: AlgebraId, n: int, primed: bool = False) -> Fraction:
    """Factorial / Gamma closed forms of ``dim Y_n`` and ``dim Y_n'``."""
    N = g.N
    if g.family == "sl":
        if primed:
            if n > N // 2:
                return F(0)
            return F(_f(N + 1), _f(n) * _f(N - n + 1)) ** 2 * F(N - 2 * n + 1, N + 1)
        return F(_f(N + n - 2), _f(n) * _f(N - 2)) ** 2 * F(N + 2 * n - 1, N - 1)
    if g.family == "so":
        if primed:
            return F(comb(N, 2 * n))
        num = _f(N + n - 5) * _f(N + n - 4) * _f(N + 2 * n - 2)
        den = _f(n) * _f(n + 1) * _f(N - 4) * _f(N - 2) * _f(N + 2 * n - 5)
        return F(num, den)
    if g.family == "sp":
        if primed:
            if n > N // 2:
                return F(0)
            pre = F((N + 2 - 2 * n) * (N + 3 - 2 * n) * (N + 4 - 2 * n), (N - n + 4) * (n + 1) * (N + 2) * (N + 3))
            return pre * F(_f(N + 3), _f(n) * _f(N - n + 3)) ** 2
        return F(_f(2 * n + N - 1), _f(N - 1) * _f(2 * n))
    raise ValueError(f"no factorial closed form for dim Y_n of {g}; use the universal formula")


class BranchPart(tuple):
    """``(label, dimension)``"""

    __slots__ = ()

    def __new__(cls, label, dimension):
        return super().__new__(cls, (label, dimension))

    @property
    def label(self) -> str:
        return self[0]

    @property
    def dimension(self) -> Fraction:
        return self[1]


def _section(g: AlgebraId, primed: bool) -> dict:
    data = fixtures.load("branchings")
    table = data["box_Yn_prime" if primed else "box_Yn"]
    if g.family not in table:
        raise ValueError(f"no closed-form branching of box x Y_n{chr(39) if primed else ''} for {g}")
    return table[g.family]


def box_Yn_closed(g: AlgebraId, n: int, primed: bool = False) -> list[BranchPart]:
    """The three nonzero parts of ``box x Y_n`` with closed-form dimensions."""
    sec = _section(g, primed)
    env = {"n": n}
    if g.classical:
        env["N"] = g.N
        base = dim_Yn_closed(g, n, primed)
    else:
        from .vogel import dim_Yk_universal, params

        base = dim_Yk_universal(params(g), n)
    out = []
    for part in sec["parts"]:
        lab = instantiate_label(part["label"], g.family, g.rank, n=n)
        if lab is None:
            continue
        if "ratio" in part:
            dim = fixtures.eval_expr(part["ratio"], **env) * base
        else:
            dim = dim_sp(g.N, lab)
        out.append(BranchPart(format_label(g.family, lab), dim))
    return out


def box_Yn_eigenvalues(family: str, N, n, primed: bool = False) -> list[Fraction]:
    """Split-Casimir eigenvalues of the three parts, as printed per family.

    ``N`` may be any rational here so the triples can be compared as
    rational functions of ``N``.
    """
    table = fixtures.load("branchings")["box_Yn_prime" if primed else "box_Yn"]
    if family not in table:
        raise ValueError(f"no printed eigenvalues for {family}")
    sec = table[family]
    return [fixtures.eval_expr(p["eigenvalue"], N=N, n=n) for p in sec["parts"] if "eigenvalue" in p]
