"""Tensor-product decompositions.

The ``sl(N)`` adjoint powers come from the four-term rule for multiplying a
composite pair by ``([1],[1])``, built from single-box Pieri steps only.
Everything else (``so`` adjoint powers, branchings of ``box x Y_n``,
``Y_n x Y_1``) is fixture data instantiated at the requested ``n``.
"""

from __future__ import annotations

import re
from collections import Counter
from fractions import Fraction
from itertools import permutations

from . import fixtures
from .casimir import AlgebraId
from .composite import CompositePair, dim_composite, virtual_dim
from .labels import format_label, instantiate_label, parse_label
from .young import add_box, dim_so, dim_sp, horizontal_sum, num_standard_tableaux, partitions_of, remove_box, size

__all__ = [
    "Decomposition",
    "DecompError",
    "mult_by_adjoint",
    "ad_power",
    "grouped_coeffs",
    "a_coeffs",
    "derangements_bruteforce",
    "branch_box_Yn",
    "yn_times_ad",
    "so_ad_power",
    "so_candidates",
    "horizontal_sum_residue",
    "label_dimension",
]


class DecompError(ValueError):
    pass


class Decomposition:
    """A multiset of irrep labels of one family with positive multiplicities."""

    def __init__(self, family: str, terms=None):
        self.family = family
        self.terms: Counter = Counter()
        for label, mult in dict(terms or {}).items():
            if mult < 0:
                raise DecompError(f"negative multiplicity {mult} for {label}")
            if mult:
                self.terms[label] += mult

    @classmethod
    def from_fixture(cls, family: str, entries, rank: int | None = None, **env) -> "Decomposition":
        d = cls(family)
        for e in entries:
            lab = instantiate_label(e["label"], family, rank, **env) if env else parse_label(family, e["label"], rank)
            if lab is not None:
                d.terms[lab] += e["multiplicity"]
        return d

    def __eq__(self, other):
        return isinstance(other, Decomposition) and self.family == other.family and self.terms == other.terms

    def __len__(self):
        return len(self.terms)

    def __contains__(self, label):
        return label in self.terms

    def __getitem__(self, label):
        return self.terms.get(label, 0)

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: _sort_key(kv[0]))

    def total(self) -> int:
        return sum(self.terms.values())

    def __add__(self, other: "Decomposition") -> "Decomposition":
        if other.family != self.family:
            raise DecompError("cannot add decompositions of different families")
        return Decomposition(self.family, self.terms + other.terms)

    def dimension(self, g: AlgebraId, virtual: bool = False) -> Fraction:
        """Total dimension; ``virtual`` uses the polynomial continuation for sl pairs that do not fit."""
        if virtual and g.family == "sl":
            return sum((m * virtual_dim(lab, g.N) for lab, m in self.terms.items()), Fraction(0))
        return sum((m * label_dimension(g, lab) for lab, m in self.terms.items()), Fraction(0))

    def to_json(self) -> list:
        return [{"label": format_label(self.family, lab), "multiplicity": m} for lab, m in self.items()]

    def __repr__(self):
        fmt = lambda lab: format_label(self.family, lab) if self.family in ("sl", "so", "sp") else f"({format_label(self.family, lab)})"
        body = " + ".join(f"{m}*{fmt(lab)}" if m > 1 else fmt(lab) for lab, m in self.items())
        return f"Decomposition({self.family}: {body or '0'})"


def _sort_key(label):
    if isinstance(label, CompositePair):
        return (-(size(label.upper) + size(label.lower)), tuple(-x for x in label.upper), tuple(-x for x in label.lower))
    return (-sum(label), tuple(-x for x in label))


def label_dimension(g: AlgebraId, label) -> Fraction:
    if g.family == "sl":
        return dim_composite(label, g.N)
    if g.family == "so":
        return dim_so(g.N, label)
    if g.family == "sp":
        return dim_sp(g.N, label)
    from .rootsys import build, weyl_dim

    rs = build(g)
    return weyl_dim(rs, rs.weight(label))


def _with_removed(lam):
    """``sum_i lam_i x [1]``: remove a corner, then add a box, with multiplicity."""
    out = Counter()
    for smaller in remove_box(lam):
        for bigger in add_box(smaller):
            out[bigger] += 1
    return out


def mult_by_adjoint(d: Decomposition) -> Decomposition:
    """Multiply every composite pair by ``([1],[1])`` with the four-term rule."""
    if d.family != "sl":
        raise DecompError("the composite product rule applies to sl decompositions")
    out = Counter()
    for p, m in d.terms.items():
        if size(p.upper) != size(p.lower):
            raise DecompError(f"{p} is not balanced")
        mu, lam = p.upper, p.lower
        for a in add_box(mu):
            for b in add_box(lam):
                out[CompositePair(a, b)] += m
        for a, k in _with_removed(mu).items():
            out[CompositePair(a, lam)] += m * k
        for b, k in _with_removed(lam).items():
            out[CompositePair(mu, b)] += m * k
        for a in remove_box(mu):
            for b in remove_box(lam):
                out[CompositePair(a, b)] += m
    return Decomposition("sl", out)


_AD = CompositePair((1,), (1,))


def ad_power(k: int) -> Decomposition:
    """``([1],[1])^{x k}`` for ``sl(N)`` with N large enough for every label."""
    if k < 1:
        raise DecompError(f"k must be >= 1, got {k}")
    d = Decomposition("sl", {_AD: 1})
    for _ in range(k - 1):
        d = mult_by_adjoint(d)
    return d


def grouped_coeffs(d: Decomposition) -> list[int]:
    """Aggregate coefficients ``a_j``: ``mult(mu, lam) = a_j f_mu f_lam`` with ``j = |mu|``.

    Raises if some label breaks the factorized form.
    """
    coeffs: dict[int, Fraction] = {}
    for p, m in d.terms.items():
        j = size(p.upper)
        a = Fraction(m, num_standard_tableaux(p.upper) * num_standard_tableaux(p.lower))
        if coeffs.setdefault(j, a) != a:
            raise DecompError(f"multiplicity of {p} is not a_{j} f f")
    top = max(coeffs, default=-1)
    out = [coeffs.get(j, Fraction(0)) for j in range(top + 1)]
    if any(c.denominator != 1 for c in out):
        raise DecompError("non-integer aggregate coefficient")
    return [int(c) for c in out]


def a_coeffs(m: int) -> list[int]:
    """``(a_0, ..., a_m)`` of ``ad^{x m}`` from the three-term recurrence."""
    if m < 0:
        raise DecompError(f"m must be >= 0, got {m}")
    a = [1]
    for _ in range(m):
        a = a + [0, 0]
        a = [(a[k - 1] if k else 0) + 2 * k * a[k] + (k + 1) ** 2 * a[k + 1] for k in range(len(a) - 1)]
    return a


def derangements_bruteforce(m: int) -> int:
    """Permutations of ``m`` points with no fixed point, by enumeration."""
    if m < 0:
        raise DecompError(f"m must be >= 0, got {m}")
    if m > 9:
        raise DecompError(f"m = {m} exceeds the enumeration budget (m <= 9)")
    return sum(1 for s in permutations(range(m)) if all(s[i] != i for i in range(m)))


def branch_box_Yn(g: AlgebraId, n: int, primed: bool = False) -> Decomposition:
    """``box x Y_n`` (or ``box x Y_n'``) as printed for the family of ``g``.

    For ``e8``, where ``box`` is the adjoint, the six-term ``ad x Y_n`` list is returned.
    """
    if n < 1:
        raise DecompError(f"n must be >= 1, got {n}")
    if g.family == "e8":
        if primed:
            if n != 2:
                raise DecompError("for e8 only box x Y_2' is known (no universal primed branching)")
            return _y2prime(g)
        return yn_times_ad(g, n)
    if primed and not g.classical:
        if n != 2:
            raise DecompError(
                f"{g}: box x Y_n' has no universal form for exceptional algebras; only n = 2 is tabulated"
            )
        return _y2prime(g)
    table = fixtures.load("branchings")["box_Yn_prime" if primed else "box_Yn"][g.family]
    entries = [{"label": p["label"], "multiplicity": 1} for p in table["parts"]]
    return Decomposition.from_fixture(g.family, entries, g.rank, n=n)


def _y2prime(g: AlgebraId) -> Decomposition:
    line = fixtures.load("exceptional_box_y2prime")["lines"][g.family]
    entries = [{"label": p["weight"], "multiplicity": 1} for p in line["parts"]]
    return Decomposition.from_fixture(g.family, entries, g.rank)


def yn_times_ad(g: AlgebraId, n: int) -> Decomposition:
    """``Y_n x Y_1`` for the classical families and ``e8``."""
    if n < 1:
        raise DecompError(f"n must be >= 1, got {n}")
    if g.family == "e8":
        entries = fixtures.load("e8_ad_yn")["terms"]
    elif g.classical:
        entries = fixtures.load("branchings")["Yn_times_ad"][g.family]
    else:
        raise DecompError(f"Y_n x Y_1 is not tabulated for {g}")
    return Decomposition.from_fixture(g.family, entries, g.rank, n=n)


def so_ad_power(k: int) -> Decomposition:
    """``so(N)`` decomposition of ``ad^{x k}`` for ``k = 2, 3, 4`` (large ``N``)."""
    table = fixtures.load("so_adk")["ad_power"]
    if str(k) not in table:
        raise DecompError(f"so(N) ad^{k} is tabulated only for k in {sorted(table)}")
    return Decomposition.from_fixture("so", table[str(k)])


def so_candidates(k: int, max_cells: int | None = None) -> frozenset:
    """Outer bound for diagrams in ``so(N)`` ``ad^{x k}``: even size ``<= 2k``, at most ``k`` columns."""
    if k < 1:
        raise DecompError(f"k must be >= 1, got {k}")
    cap = 2 * k if max_cells is None else min(2 * k, max_cells)
    return frozenset(lam for cells in range(0, cap + 1, 2) for lam in partitions_of(cells, k))


def _raw_rows(text: str) -> tuple[int, ...]:
    rows = []
    for item in filter(None, (x.strip() for x in text.split(","))):
        base, _, rep = item.partition("^")
        rows.extend([int(base)] * int(rep or 1))
    return tuple(rows)


def _raw_pair(text: str) -> tuple[tuple[int, ...], tuple[int, ...]]:
    m = re.fullmatch(r"\s*\(\s*\[([^\]]*)\]\s*,\s*\[([^\]]*)\]\s*\)\s*", text)
    if not m:
        raise DecompError(f"malformed composite template {text!r}")
    return _raw_rows(m.group(1)), _raw_rows(m.group(2))


def horizontal_sum_residue(n: int) -> Counter:
    """sl terms of ``Y_n x Y_1`` left over after mapping onto the sp terms.

    The map works on the rows of the generic-``n`` terms: a dual pair
    ``(mu, lam)``, ``(lam, mu)`` goes to ``mu + lam`` once, a self-dual
    ``(lam, lam)`` to ``lam + lam``.  At ``n = 1`` the term ``([n],[n-1,1])``
    is not an sl label, but its row sum ``[1,1]`` still matches an sp term.
    Returns the unmatched sl terms (as row-tuple pairs) with multiplicity.
    """
    if n < 1:
        raise DecompError(f"n must be >= 1, got {n}")
    sl_terms = Counter()
    for e in fixtures.load("branchings")["Yn_times_ad"]["sl"]:
        text = fixtures.instantiate(e["label"], n=n)
        if text is not None:
            sl_terms[_raw_pair(text)] += e["multiplicity"]
    sp = yn_times_ad(AlgebraId("sp", 4 * n + 4), n)
    images = Counter()
    sources: dict = {}
    for (mu, lam), m in sl_terms.items():
        if mu != lam:
            if sl_terms[(lam, mu)] != m:
                raise DecompError(f"({mu},{lam}) and its dual have different multiplicities")
            if (mu, lam) > (lam, mu):
                continue
        img = tuple(x for x in horizontal_sum(mu, lam) if x)
        if any(a < b for a, b in zip(img, img[1:])):
            raise DecompError(f"row sum of ({mu},{lam}) is not a partition")
        images[img] += m
        sources.setdefault(img, (mu, lam))
    missing = [img for img in sp.terms if sp[img] > images[img]]
    if missing:
        raise DecompError(f"sp terms without an sl preimage: {missing}")
    residue = Counter()
    for img, m in images.items():
        if m > sp[img]:
            residue[sources[img]] += m - sp[img]
    return residue
