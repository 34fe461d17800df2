"""Universal layer: Vogel parameters and the formulas written in them.

Everything here is a rational function of the homogeneous parameters
``alpha_hat + beta_hat + gamma_hat = 1/2``.  Table data (``dim box`` and the
normalized Casimir of ``box``) come from the hard-coded constructors below,
which are checked once against the ``vogel_table`` fixture.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import fixtures
from .casimir import AlgebraId
from .exact import rational_to_str
from .labels import format_label, instantiate_label

__all__ = [
    "VogelParams",
    "UniversalMultiplet",
    "VogelError",
    "DegenerateSpectrumError",
    "params",
    "vogel_row",
    "dim_g_universal",
    "dim_Yk_universal",
    "c2_Yn_universal",
    "c2_box_branch",
    "c2_box_swapped",
    "char_identity_roots",
    "dims_box_Yn",
    "projector_coefficients",
    "trace_power",
    "trace_closed_form",
    "vandermonde_dims",
    "ladder_factor",
    "solve_linear",
]

F = Fraction


class VogelError(ValueError):
    """A universal formula was evaluated outside its domain."""


class DegenerateSpectrumError(VogelError):
    def __init__(self, roots, pairs):
        self.roots, self.pairs = list(roots), list(pairs)
        desc = ", ".join(f"a{i + 1} = a{j + 1} = {rational_to_str(self.roots[i])}" for i, j in self.pairs)
        super().__init__(f"coincident split-Casimir eigenvalues: {desc}")


@dataclass(frozen=True)
class VogelParams:
    algebra: AlgebraId
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    t: Fraction
    alpha_hat: Fraction
    beta_hat: Fraction
    gamma_hat: Fraction
    swapped: bool = False

    def primed(self) -> "VogelParams":
        """Exchange the alpha and beta slots (``Y_n`` becomes ``Y_n'``)."""
        return replace(self, alpha=self.beta, beta=self.alpha, alpha_hat=self.beta_hat, beta_hat=self.alpha_hat)

    def to_json(self) -> dict:
        out = {"algebra": str(self.algebra), "swapped": self.swapped}
        for k in ("alpha", "beta", "gamma", "t", "alpha_hat", "beta_hat", "gamma_hat"):
            out[k] = rational_to_str(getattr(self, k))
        return out


@dataclass(frozen=True)
class UniversalMultiplet:
    index: str
    eigenvalue: Fraction
    dimension: Fraction
    label: str | None = None

    def to_json(self) -> dict:
        return {
            "index": self.index,
            "eigenvalue": rational_to_str(self.eigenvalue),
            "dimension": rational_to_str(self.dimension),
            "label": self.label,
        }


# Hard-coded Vogel triples (alpha, beta, gamma) and (dim box, c2 box).
def _abc(g: AlgebraId):
    N = g.N
    return {
        "sl": lambda: (F(-2), F(2), F(N)),
        "so": lambda: (F(-2), F(4), F(N - 4)),
        "sp": lambda: (F(-2), F(1), F(N + 4, 2)),
        "g2": lambda: (F(-2), F(10, 3), F(8, 3)),
        "f4": lambda: (F(-2), F(5), F(6)),
        "e6": lambda: (F(-2), F(6), F(8)),
        "e7": lambda: (F(-2), F(8), F(12)),
        "e8": lambda: (F(-2), F(12), F(20)),
    }[g.family]()


def _box(g: AlgebraId) -> tuple[Fraction, Fraction]:
    N = g.N
    return {
        "sl": lambda: (F(N), F(N * N - 1, 2 * N * N)),
        "so": lambda: (F(N), F(N - 1, 2 * (N - 2))),
        "sp": lambda: (F(N), F(N + 1, 2 * (N + 2))),
        "g2": lambda: (F(7), F(1, 2)),
        "f4": lambda: (F(26), F(2, 3)),
        "e6": lambda: (F(27), F(13, 18)),
        "e7": lambda: (F(56), F(19, 24)),
        "e8": lambda: (F(248), F(1)),
    }[g.family]()


def vogel_row(g: AlgebraId, directory=None) -> dict:
    """The Vogel-table fixture row evaluated at ``g`` (exact rationals)."""
    row = fixtures.load("vogel_table", directory)["rows"][g.family]
    env = {"N": g.N} if g.classical else {}
    return {k: fixtures.eval_expr(v, **env) for k, v in row.items()}


_SAMPLE_N = {"sl": (2, 3, 7), "so": (5, 8, 11), "sp": (2, 6, 10)}


@lru_cache(maxsize=None)
def _check_vogel_table(directory=None) -> None:
    for fam in ("sl", "so", "sp", "g2", "f4", "e6", "e7", "e8"):
        for N in _SAMPLE_N.get(fam, (None,)):
            g = AlgebraId(fam, N)
            row = vogel_row(g, directory)
            p = _build(g, False)
            dim_box, c2_box = _box(g)
            mine = {
                "alpha": p.alpha, "beta": p.beta, "gamma": p.gamma, "t": p.t,
                "alpha_hat": p.alpha_hat, "beta_hat": p.beta_hat, "gamma_hat": p.gamma_hat,
                "dim_box": dim_box, "c2_box": c2_box,
            }
            for k, v in mine.items():
                if row[k] != v:
                    raise fixtures.FixtureError(f"vogel_table fixture disagrees with constructor for {g}: {k} = {row[k]} vs {v}")


def _build(g: AlgebraId, swapped: bool) -> VogelParams:
    a, b, c = _abc(g)
    t = a + b + c
    ah, bh, ch = a / (2 * t), b / (2 * t), c / (2 * t)
    if swapped and g.classical:
        b, c, bh, ch = c, b, ch, bh
    return VogelParams(g, a, b, c, t, ah, bh, ch, swapped)


def params(g: AlgebraId, swapped: bool = False) -> VogelParams:
    """Vogel parameters of ``g``; ``swapped`` exchanges beta and gamma for classical algebras."""
    _check_vogel_table()
    return _build(g, swapped)


def dim_g_universal(p: VogelParams) -> Fraction:
    a, b, c = p.alpha_hat, p.beta_hat, p.gamma_hat
    if 0 in (a, b, c):
        raise VogelError("a homogeneous Vogel parameter is zero")
    return (a - 1) * (b - 1) * (c - 1) / (a * b * c)


def dim_Yk_universal(p: VogelParams, k: int, primed: bool = False) -> Fraction:
    """Dimension of the Cartan power ``Y_k`` (or ``Y_k'`` when ``primed``)."""
    if k < 0:
        raise VogelError(f"k must be non-negative, got {k}")
    if primed:
        p = p.primed()
    a, b, c = p.alpha_hat, p.beta_hat, p.gamma_hat
    if k > 0 and a == 0:
        raise VogelError("alpha_hat vanishes")
    if 1 - (k - 1) * a == 0:
        raise VogelError(f"denominator factor (1 - (k-1)*alpha_hat) vanishes at k = {k}")
    val = (1 - (2 * k - 1) * a) / (factorial(k) * a**k * (1 - (k - 1) * a))
    for l in range(k):
        db, dc = b - l * a, c - l * a
        if db == 0:
            raise VogelError(f"denominator factor (beta_hat - {l}*alpha_hat) vanishes")
        if dc == 0:
            raise VogelError(f"denominator factor (gamma_hat - {l}*alpha_hat) vanishes")
        val *= (l * a - 1) * (b + l * a - 1) * (c + l * a - 1) / (db * dc)
    return val


def c2_Yn_universal(p: VogelParams, n: int, primed: bool = False) -> Fraction:
    if n < 0:
        raise VogelError(f"n must be non-negative, got {n}")
    x = p.beta_hat if primed else p.alpha_hat
    return n * (1 - x * n + x)


def c2_box_branch(p: VogelParams) -> Fraction:
    """Normalized Casimir of ``box`` from the vanishing of one multiplet.

    Classical algebras use ``alpha beta dim g / (4 (gamma - 1))``, exceptional
    ones the same with beta and gamma exchanged.  Parameters must be plain.
    """
    if p.swapped and p.algebra.classical:
        raise VogelError("c2_box_branch expects plain (unswapped) parameters")
    a, b, c = p.alpha_hat, p.beta_hat, p.gamma_hat
    if p.algebra.classical:
        return a * b * dim_g_universal(p) / (4 * (c - 1))
    return a * c * dim_g_universal(p) / (4 * (b - 1))


def c2_box_swapped(p: VogelParams) -> Fraction:
    """The single formula ``alpha gamma' dim g / (4 (beta' - 1))`` (swapped parameters)."""
    if p.algebra.classical and not p.swapped:
        p = params(p.algebra, swapped=True)
    return p.alpha_hat * p.gamma_hat * dim_g_universal(p) / (4 * (p.beta_hat - 1))


def char_identity_roots(p: VogelParams, n: int, primed: bool = False) -> list[Fraction]:
    """Roots of the characteristic identity of the split Casimir on ``box x Y_n``.

    Unprimed: the four roots ``a1..a4``.  Primed (classical only): the three
    roots of the ``box x Y_n'`` identity, obtained by exchanging alpha and beta.
    """
    if n < 1:
        raise VogelError(f"n must be >= 1, got {n}")
    if primed:
        if not p.algebra.classical:
            raise VogelError(f"no universal box x Y_n' identity exists for {p.algebra}")
        if p.swapped:
            p = params(p.algebra)
        a, b = p.beta_hat, p.alpha_hat
        return [-(1 + a * (1 - n)) / 2, -n * a / 2, -b / 2]
    a = p.alpha_hat
    return [-(1 + a * (1 - n)) / 2, -n * a / 2, -p.beta_hat / 2, -p.gamma_hat / 2]


# multiplet index carried by each eigenvalue slot a1..a4
_SLOT_INDEX = ("Lambda2", "Lambda1", "Lambda4", "Lambda3")


def _require_not_e8(g: AlgebraId) -> None:
    if g.family == "e8":
        raise VogelError(
            "e8 has box = ad, so box x Y_n is not covered by the universal four-multiplet formulas; "
            "use the ad x Y_n fixture (decomp.branch_box_Yn / decomp.yn_times_ad)"
        )


def _cancelled(a, b, c, n, dim_y, dim_box):
    # the multiplet whose numerator factor (c - b) cancels against (c - b) in the denominator
    return (1 - a * n + a) * a * (b + c - 1) * n * dim_y * dim_box / ((c - 1) * (a * n - b) * (1 + a - a * n - b))


def _dims(p: VogelParams, n: int) -> list[Fraction]:
    a, b, c = p.alpha_hat, p.beta_hat, p.gamma_hat
    dim_box, c2 = _box(p.algebra)
    dg = dim_g_universal(p)
    dy = dim_Yk_universal(p, n)
    common = dy * dim_box / dg
    v1 = (4 * a * (a * n - a - 1) * (n - 1) * c2 - a * b * c * dg) * n * common / (
        (a * n - a + c - 1) * (a * n - a + b - 1) * (1 + a - 2 * a * n)
    )
    v2 = (1 - a * n + a) * (4 * n * (1 - a * n) * c2 + b * c * dg) * common / (
        (c - a * n) * (b - a * n) * (1 + a - 2 * a * n)
    )
    if b != c:
        v3 = (1 - a * n + a) * (4 * (1 - b) * c2 + a * c * dg) * n * common / ((c - b) * (a * n - b) * (1 + a - a * n - b))
        v4 = (1 - a * n + a) * (4 * (1 - c) * c2 + a * b * dg) * n * common / ((b - c) * (a * n - c) * (1 + a - a * n - c))
        return [v1, v2, v3, v4]
    # beta_hat == gamma_hat: pick the branch satisfied by c2(box)
    if c2 == a * b * dg / (4 * (c - 1)):
        return [v1, v2, _cancelled(a, b, c, n, dy, dim_box), F(0)]
    if c2 == a * c * dg / (4 * (b - 1)):
        return [v1, v2, F(0), _cancelled(a, c, b, n, dy, dim_box)]
    raise VogelError(f"beta_hat = gamma_hat for {p.algebra} but c2(box) matches neither branch")


def _labels(g: AlgebraId, n: int, swapped: bool) -> dict:
    row = fixtures.load("multiplets_plain")["rows"][g.family]
    out = {}
    for key in ("Lambda1", "Lambda2", "Lambda3", "Lambda4"):
        tpl = row[key]
        lab = None if tpl is None else instantiate_label(tpl, g.family, g.rank, n=n)
        out[key] = None if lab is None else format_label(g.family, lab)
    if swapped and g.classical:
        out["Lambda3"], out["Lambda4"] = out["Lambda4"], None
    return out


def dims_box_Yn(g: AlgebraId, n: int, swapped: bool = False) -> list[UniversalMultiplet]:
    """The four universal multiplets of ``box x Y_n`` in eigenvalue order a1..a4."""
    _require_not_e8(g)
    if n < 1:
        raise VogelError(f"n must be >= 1, got {n}")
    p = params(g, swapped)
    roots = char_identity_roots(p, n)
    dims = _dims(p, n)
    labels = _labels(g, n, swapped)
    out = []
    for slot, (r, d) in enumerate(zip(roots, dims)):
        idx = _SLOT_INDEX[slot]
        out.append(UniversalMultiplet(idx, r, d, labels[idx] if d != 0 else None))
    return out


def _poly_mul(p, q):
    out = [F(0)] * (len(p) + len(q) - 1)
    for i, x in enumerate(p):
        for j, y in enumerate(q):
            out[i + j] += x * y
    return out


def _check_distinct(roots) -> None:
    pairs = [(i, j) for i in range(len(roots)) for j in range(i + 1, len(roots)) if roots[i] == roots[j]]
    if pairs:
        raise DegenerateSpectrumError(roots, pairs)


def lagrange_basis(roots) -> list[list[Fraction]]:
    """Coefficients (constant first) of ``prod_{j != i} (x - r_j)/(r_i - r_j)``."""
    roots = [F(r) for r in roots]
    _check_distinct(roots)
    basis = []
    for i, ri in enumerate(roots):
        poly = [F(1)]
        for j, rj in enumerate(roots):
            if j != i:
                poly = [x / (ri - rj) for x in _poly_mul(poly, [-rj, F(1)])]
        basis.append(poly)
    return basis


def projector_coefficients(p: VogelParams, n: int) -> list[list[Fraction]]:
    """Projectors onto the four eigenspaces as cubic polynomials in the split Casimir."""
    return lagrange_basis(char_identity_roots(p, n))


def trace_power(g: AlgebraId, n: int, L: int) -> Fraction:
    """``Tr (C_split)^L`` on ``box x Y_n`` as the eigenvalue-weighted sum."""
    if L < 0:
        raise VogelError(f"L must be non-negative, got {L}")
    return sum((m.eigenvalue**L * m.dimension for m in dims_box_Yn(g, n)), F(0))


def trace_closed_form(g: AlgebraId, n: int, L: int) -> Fraction:
    """Closed forms of the traces for ``L = 0..3`` from dimensions and Casimirs alone."""
    _require_not_e8(g)
    p = params(g)
    dim_box, c2 = _box(g)
    dy = dim_Yk_universal(p, n)
    if L == 0:
        return dim_box * dy
    if L == 1:
        return F(0)
    t2 = c2 * c2_Yn_universal(p, n) * dim_box * dy / dim_g_universal(p)
    if L == 2:
        return t2
    if L == 3:
        return -t2 / 4
    raise VogelError(f"closed form known only for L <= 3, got {L}")


def solve_linear(A, b) -> list[Fraction]:
    """Exact Gauss-Jordan solve of a square system; singular systems raise."""
    n = len(A)
    M = [[F(x) for x in row] + [F(y)] for row, y in zip(A, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if M[r][col] != 0), None)
        if piv is None:
            raise VogelError("singular linear system")
        M[col], M[piv] = M[piv], M[col]
        inv = 1 / M[col][col]
        M[col] = [x * inv for x in M[col]]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return [M[r][n] for r in range(n)]


def vandermonde_dims(g: AlgebraId, n: int) -> list[Fraction]:
    """Multiplet dimensions from the Vandermonde system with closed-form traces."""
    p = params(g)
    roots = char_identity_roots(p, n)
    _check_distinct(roots)
    A = [[r**k for r in roots] for k in range(4)]
    rhs = [trace_closed_form(g, n, k) for k in range(4)]
    return solve_linear(A, rhs)


def ladder_factor(g: AlgebraId, L: int) -> Fraction:
    """Colour factor of the ``L``-rung ladder: ``Tr_1 (C_{box x ad})^L = factor * I``."""
    _require_not_e8(g)
    if L < 0:
        raise VogelError(f"L must be non-negative, got {L}")
    p = params(g, swapped=True)
    a, b, c = p.alpha_hat, p.beta_hat, p.gamma_hat
    dim_box, _ = _box(g)
    s = (
        F(-1, 2) ** L
        + (-a / 2) ** L * (1 - a - b) * (c - 1) / (a * b * (c - a))
        + (-c / 2) ** L * (1 - b - c) * (a - 1) / (c * b * (a - c))
    )
    return dim_box / dim_g_universal(p) * s
