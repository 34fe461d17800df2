"""Root systems in explicit ambient coordinates: an independent oracle.

Classical algebras use the usual orthonormal coordinates.  The exceptional
ones follow a fixed embedding: g2 lives in the plane ``x1+x2+x3 = 0``, f4 in
R^4, and e6/e7 are the sublattices of the e8 roots orthogonal to
``e1+e8`` (and ``e1+e2+2e8`` for e6).  Positive roots are those with
positive pairing against the Weyl vector, which pins the convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from .casimir import AlgebraId, CasimirValue, casimir_adjoint_raw
from .composite import CompositePair, to_diagram
from .young import size

__all__ = [
    "RootSystem",
    "build",
    "weyl_dim",
    "casimir_weyl",
    "g2_det_dim",
    "label_weight",
]

F = Fraction
H = F(1, 2)


def _vec(*xs) -> tuple[Fraction, ...]:
    return tuple(F(x) for x in xs)


def _dot(a, b) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), F(0))


def _add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _scale(c, a):
    return tuple(c * x for x in a)


# fundamental weights (index i -> lambda_(i)) and metric scales
_G2_WEIGHTS = [_vec(0, -1, 1), _vec(-1, -1, 2)]
_F4_WEIGHTS = [_vec(1, 0, 0, 1), _vec(1, 1, 0, 2), _vec(H, H, H, F(3, 2)), _vec(0, 0, 0, 1)]
_E6_WEIGHTS = [
    _vec(F(-1, 3), F(-1, 3), 1, 0, 0, 0, 0, F(1, 3)),
    _vec(F(-2, 3), F(-2, 3), 1, 1, 0, 0, 0, F(2, 3)),
    _vec(-1, -1, 1, 1, 1, 0, 0, 1),
    _vec(F(-5, 6), F(-5, 6), H, H, H, H, -H, F(5, 6)),
    _vec(-H, -H, H, H, H, H, H, H),
    _vec(F(-2, 3), F(-2, 3), 0, 0, 0, 0, 0, F(2, 3)),
]
_E7_WEIGHTS = [
    _vec(-H, 1, 0, 0, 0, 0, 0, H),
    _vec(-1, 1, 1, 0, 0, 0, 0, 1),
    _vec(F(-3, 2), 1, 1, 1, 0, 0, 0, F(3, 2)),
    _vec(-2, 1, 1, 1, 1, 0, 0, 2),
    _vec(F(-3, 2), H, H, H, H, H, -H, F(3, 2)),
    _vec(-1, H, H, H, H, H, H, 1),
    _vec(-1, 0, 0, 0, 0, 0, 0, 1),
]
_E8_WEIGHTS = [
    _vec(1, 0, 0, 0, 0, 0, 0, 1),
    _vec(1, 1, 0, 0, 0, 0, 0, 2),
    _vec(1, 1, 1, 0, 0, 0, 0, 3),
    _vec(1, 1, 1, 1, 0, 0, 0, 4),
    # printed with a spurious overall 1/2; the weights must sum to rho
    _vec(1, 1, 1, 1, 1, 0, 0, 5),
    _vec(H, H, H, H, H, H, -H, F(7, 2)),
    _vec(H, H, H, H, H, H, H, F(5, 2)),
    _vec(0, 0, 0, 0, 0, 0, 0, 2),
]
_EXC_RHO = {
    "g2": _vec(-1, -2, 3),
    "f4": _vec(F(5, 2), F(3, 2), H, F(11, 2)),
    "e6": _vec(-4, -4, 4, 3, 2, 1, 0, 4),
    "e7": _vec(F(-17, 2), 5, 4, 3, 2, 1, 0, F(17, 2)),
    "e8": _vec(6, 5, 4, 3, 2, 1, 0, 23),
}
_EXC_CONSTRAINTS = {
    "e6": [_vec(1, 0, 0, 0, 0, 0, 0, 1), _vec(1, 1, 0, 0, 0, 0, 0, 2)],
    "e7": [_vec(1, 0, 0, 0, 0, 0, 0, 1)],
    "e8": [],
}


def _unit(n, i, c=1):
    v = [F(0)] * n
    v[i] = F(c)
    return tuple(v)


def _pm_pairs(n):
    """All e_i +- e_j and -e_i +- e_j for i < j."""
    out = []
    for i, j in combinations(range(n), 2):
        for si, sj in product((1, -1), repeat=2):
            out.append(_add(_unit(n, i, si), _unit(n, j, sj)))
    return out


def _e8_roots():
    roots = _pm_pairs(8)
    for signs in product((1, -1), repeat=8):
        if signs.count(-1) % 2 == 0:
            roots.append(tuple(F(s, 2) for s in signs))
    return roots


def _exceptional_roots(fam):
    if fam == "g2":
        roots = []
        for i, j in product(range(3), repeat=2):
            if i != j:
                roots.append(_add(_unit(3, i), _unit(3, j, -1)))
        for i in range(3):
            v = tuple(F(2) if k == i else F(-1) for k in range(3))
            roots += [v, _scale(-1, v)]
        return roots
    if fam == "f4":
        roots = _pm_pairs(4)
        roots += [_unit(4, i, s) for i in range(4) for s in (1, -1)]
        roots += [tuple(F(s, 2) for s in signs) for signs in product((1, -1), repeat=4)]
        return roots
    cons = _EXC_CONSTRAINTS[fam]
    return [r for r in _e8_roots() if all(_dot(r, c) == 0 for c in cons)]


@dataclass(frozen=True)
class RootSystem:
    """Positive roots, simple roots and fundamental weights of one algebra.

    ``simple_roots[i]`` is dual to ``fundamental_weights[i]``:
    ``(lambda_i, alpha_j^vee) = delta_ij``.
    """

    algebra: AlgebraId
    positive_roots: tuple
    rho: tuple
    metric_scale: Fraction
    simple_roots: tuple
    fundamental_weights: tuple

    def inner(self, a, b) -> Fraction:
        return self.metric_scale * _dot(a, b)

    @property
    def highest_root(self):
        return max(self.positive_roots, key=lambda a: _dot(a, self.rho))

    def weight(self, coeffs) -> tuple:
        """Weight ``sum c_i lambda_(i)`` from Dynkin coefficients."""
        coeffs = list(coeffs)
        if len(coeffs) != len(self.fundamental_weights):
            raise ValueError(f"{self.algebra} needs {len(self.fundamental_weights)} coefficients")
        dim = len(self.rho)
        out = (F(0),) * dim
        for c, w in zip(coeffs, self.fundamental_weights):
            out = _add(out, _scale(c, w))
        return out

    def dynkin(self, weight) -> tuple:
        return tuple(2 * _dot(weight, a) / _dot(a, a) for a in self.simple_roots)

    def to_json(self) -> dict:
        s = lambda v: [f"{x.numerator}/{x.denominator}" for x in v]
        return {
            "algebra": str(self.algebra),
            "metric_scale": f"{self.metric_scale.numerator}/{self.metric_scale.denominator}",
            "rho": s(self.rho),
            "positive_roots": [s(a) for a in self.positive_roots],
            "simple_roots": [s(a) for a in self.simple_roots],
            "fundamental_weights": [s(w) for w in self.fundamental_weights],
        }


def _classical_data(g: AlgebraId):
    N, fam = g.N, g.family
    if fam == "sl":
        n = N
        pos = [_add(_unit(n, i), _unit(n, j, -1)) for i, j in combinations(range(n), 2)]
        rho = tuple(F(N + 1, 2) - i for i in range(1, N + 1))
        weights = [
            tuple(F(1 if i < k else 0) - F(k, N) for i in range(N)) for k in range(1, N)
        ]
        return pos, rho, F(1), weights
    r = N // 2
    pos = []
    for i, j in combinations(range(r), 2):
        pos.append(_add(_unit(r, i), _unit(r, j, -1)))
        pos.append(_add(_unit(r, i), _unit(r, j)))
    if fam == "so":
        if N % 2:
            pos += [_unit(r, i) for i in range(r)]
        rho = tuple(F(N, 2) - i for i in range(1, r + 1))
        weights = [tuple(F(1 if i < k else 0) for i in range(r)) for k in range(1, r + 1)]
        if N % 2:
            weights[-1] = (H,) * r
        else:
            weights[-2] = (H,) * (r - 1) + (-H,)
            weights[-1] = (H,) * r
        return pos, rho, F(1), weights
    # sp
    pos += [_unit(r, i, 2) for i in range(r)]
    rho = tuple(F(N, 2) - i + 1 for i in range(1, r + 1))
    weights = [tuple(F(1 if i < k else 0) for i in range(r)) for k in range(1, r + 1)]
    return pos, rho, H, weights


@lru_cache(maxsize=None)
def build(g: AlgebraId) -> RootSystem:
    """Construct and self-check the root system of ``g``.

    Checks performed: half-sum of positive roots equals the stated Weyl
    vector, the weights are dual to the simple roots, their sum is the Weyl
    vector, and the adjoint Casimir equals ``2t``.
    """
    if g.classical:
        pos, rho, scale, weights = _classical_data(g)
    else:
        fam = g.family
        rho = _EXC_RHO[fam]
        roots = _exceptional_roots(fam)
        for c in _EXC_CONSTRAINTS.get(fam, []):
            for w in {"e6": _E6_WEIGHTS, "e7": _E7_WEIGHTS}.get(fam, []):
                if _dot(w, c) != 0:
                    raise AssertionError(f"{fam} weight {w} leaves the hyperplane")
        if any(_dot(a, rho) == 0 for a in roots):
            raise AssertionError(f"{fam}: Weyl vector is not regular")
        pos = [a for a in roots if _dot(a, rho) > 0]
        scale = F(1, 3) if fam == "g2" else F(1)
        weights = {
            "g2": _G2_WEIGHTS,
            "f4": _F4_WEIGHTS,
            "e6": _E6_WEIGHTS,
            "e7": _E7_WEIGHTS,
            "e8": _E8_WEIGHTS,
        }[fam]
    dim = len(rho)
    half = tuple(sum((a[i] for a in pos), F(0)) / 2 for i in range(dim))
    if half != tuple(rho):
        raise AssertionError(f"{g}: half-sum of positive roots {half} != rho {rho}")
    posset = set(pos)
    simple = [a for a in pos if not any(_add(a, _scale(-1, b)) in posset for b in pos)]
    if len(simple) != len(weights):
        raise AssertionError(f"{g}: found {len(simple)} simple roots, expected {len(weights)}")
    ordered = []
    for w in weights:
        match = [a for a in simple if 2 * _dot(w, a) / _dot(a, a) == 1]
        others_zero = [a for a in simple if a not in match and _dot(w, a) != 0]
        if len(match) != 1 or others_zero:
            raise AssertionError(f"{g}: weight {w} is not fundamental")
        ordered.append(match[0])
    total = tuple(sum((w[i] for w in weights), F(0)) for i in range(dim))
    if total != tuple(rho):
        raise AssertionError(f"{g}: sum of fundamental weights {total} != rho")
    rs = RootSystem(g, tuple(pos), tuple(rho), scale, tuple(ordered), tuple(tuple(w) for w in weights))
    theta = rs.highest_root
    if rs.inner(theta, _add(theta, _scale(2, rho))) != casimir_adjoint_raw(g):
        raise AssertionError(f"{g}: adjoint Casimir disagrees with 2t")
    return rs


def _check_dominant(rs: RootSystem, lam) -> None:
    for k, a in enumerate(rs.simple_roots, start=1):
        c = 2 * _dot(lam, a) / _dot(a, a)
        if c < 0 or c.denominator != 1:
            raise ValueError(f"weight is not dominant integral (coefficient {c} on simple root {k})")


def weyl_dim(rs: RootSystem, lam) -> Fraction:
    """Weyl dimension ``prod (lam + rho, a) / (rho, a)`` over positive roots."""
    lam = tuple(F(x) for x in lam)
    _check_dominant(rs, lam)
    shifted = _add(lam, rs.rho)
    num, den = 1, 1
    for a in rs.positive_roots:
        num *= _dot(shifted, a)
        den *= _dot(rs.rho, a)
    return F(num) / F(den)


def casimir_weyl(rs: RootSystem, lam) -> CasimirValue:
    """``(lam, lam + 2 rho)`` in the algebra's metric, with its normalization."""
    lam = tuple(F(x) for x in lam)
    _check_dominant(rs, lam)
    raw = rs.inner(lam, _add(lam, _scale(2, rs.rho)))
    return CasimirValue(raw, raw / casimir_adjoint_raw(rs.algebra))


def g2_det_dim(lam) -> Fraction:
    """g2 dimension ``-(1/5!) prod_{i<j} (l_i - l_j)(l_i + l_j)`` with ``l = lam + rho``."""
    lam = tuple(F(x) for x in lam)
    if len(lam) != 3 or sum(lam) != 0:
        raise ValueError("g2 weights have three coordinates summing to zero")
    l = _add(lam, _EXC_RHO["g2"])
    val = F(1)
    for i, j in combinations(range(3), 2):
        val *= (l[i] - l[j]) * (l[i] + l[j])
    return -val / 120


def label_weight(g: AlgebraId, label) -> tuple:
    """Ambient weight of a family label.

    ``sl``: partition or :class:`CompositePair`; ``so``/``sp``: partition with
    at most ``rank`` rows; exceptional: Dynkin coefficients.
    """
    rs = build(g)
    if g.family == "sl":
        lam = to_diagram(label, g.N) if isinstance(label, CompositePair) else tuple(label)
        if len(lam) > g.N:
            raise ValueError(f"diagram {list(lam)} has more than N = {g.N} rows")
        shift = F(size(lam), g.N)
        rows = list(lam) + [0] * (g.N - len(lam))
        return tuple(F(r) - shift for r in rows)
    if g.family in ("so", "sp"):
        lam = tuple(label)
        r = len(rs.rho)
        if len(lam) > r:
            raise ValueError(f"diagram {list(lam)} has more than {r} rows")
        return tuple(F(x) for x in list(lam) + [0] * (r - len(lam)))
    return rs.weight(label)
