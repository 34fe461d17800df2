from fractions import Fraction as F
from math import comb

import pytest

from casimirlab.casimir import AlgebraId, casimir_so, casimir_sp, casimir_sl, split_eigenvalue
from casimirlab.closedforms import box_Yn_closed, box_Yn_eigenvalues, dim_Yn_closed
from casimirlab.labels import parse_label
from casimirlab.rootsys import build, label_weight, weyl_dim
from casimirlab.vogel import VogelError, char_identity_roots, dim_Yk_universal, params

CLASSICAL = [AlgebraId("sl", N) for N in (3, 4, 7)] + [AlgebraId("so", N) for N in (7, 8, 11)] + [
    AlgebraId("sp", N) for N in (4, 6, 10)
]


def _yn(g, n, primed):
    N = g.N
    if g.family == "sl":
        return ((2,) * n + (1,) * (N - 2 * n)) if primed else ((2 * n,) + (n,) * (N - 2))
    if g.family == "so":
        return (1,) * (2 * n) if primed else (n, n)
    return (2,) * n if primed else (2 * n,)


def _casimir(g, lam):
    return {"sl": casimir_sl, "so": casimir_so, "sp": casimir_sp}[g.family](g.N, lam)


@pytest.mark.parametrize("g", CLASSICAL, ids=str)
@pytest.mark.parametrize("n", range(1, 4))
@pytest.mark.parametrize("primed", [False, True])
def test_dim_Yn_closed_against_universal_and_weyl(g, n, primed):
    val = dim_Yn_closed(g, n, primed)
    if primed and g.family == "so":
        # Y_n' is the exterior power of rank 2n
        assert val == comb(g.N, 2 * n)
        if 2 * n >= g.N / 2:
            return
    elif primed and 2 * n > g.N:
        assert val == 0
        return
    lam = _yn(g, n, primed)
    assert val == weyl_dim(build(g), label_weight(g, lam))
    try:
        assert val == dim_Yk_universal(params(g), n, primed)
    except VogelError:
        pass


def test_dim_Yn_closed_exceptional_refuses():
    with pytest.raises(ValueError):
        dim_Yn_closed(AlgebraId.parse("g2"), 1)


@pytest.mark.parametrize("g", CLASSICAL, ids=str)
@pytest.mark.parametrize("n", range(1, 4))
def test_branch_parts_sum_and_weyl(g, n):
    parts = box_Yn_closed(g, n)
    assert sum(p.dimension for p in parts) == g.N * dim_Yn_closed(g, n)
    rs = build(g)
    for p in parts:
        lab = parse_label(g.family, p.label)
        assert weyl_dim(rs, label_weight(g, lab)) == p.dimension


def test_branch_examples():
    assert box_Yn_closed(AlgebraId("so", 9), 2) == [("[3,2]", 2574), ("[2,2,1]", 1650), ("[2,1]", 231)]
    assert box_Yn_closed(AlgebraId("sp", 8), 2, primed=True) == [("[3,2]", 1512), ("[2,2,1]", 792), ("[2,1]", 160)]


@pytest.mark.parametrize("family,N", [("so", 9), ("so", 12), ("sp", 8), ("sp", 10)])
@pytest.mark.parametrize("n", range(1, 4))
def test_printed_eigenvalues_match_casimir_differences(family, N, n):
    # unprimed so/sp parts in multiplet order: [n+1,n], [n^2,1], [n,n-1] and [2n+1], [2n,1], [2n-1]
    g = AlgebraId(family, N)
    y = _yn(g, n, False)
    if family == "so":
        labels = [(n + 1, n), (n, n, 1), (n, n - 1)]
    else:
        labels = [(2 * n + 1,), (2 * n, 1), (2 * n - 1,)]
    box, cy = _casimir(g, (1,)), _casimir(g, y)
    expected = [split_eigenvalue(_casimir(g, tuple(r for r in l if r)), [box, cy]) for l in labels]
    assert sorted(box_Yn_eigenvalues(family, N, n)) == sorted(expected)


@pytest.mark.parametrize("g", CLASSICAL, ids=str)
@pytest.mark.parametrize("n", range(1, 4))
def test_eigenvalues_are_identity_roots(g, n):
    try:
        printed = box_Yn_eigenvalues(g.family, g.N, n)
    except ValueError:
        return
    assert set(printed) <= set(char_identity_roots(params(g), n))
