from collections import Counter
from fractions import Fraction as F
from math import factorial

import pytest
from hypothesis import given

from casimirlab.casimir import AlgebraId, casimir_so, casimir_sl
from casimirlab.composite import CompositePair as P, dim_composite
from casimirlab.decomp import (
    DecompError,
    Decomposition,
    a_coeffs,
    ad_power,
    branch_box_Yn,
    derangements_bruteforce,
    grouped_coeffs,
    horizontal_sum_residue,
    label_dimension,
    mult_by_adjoint,
    so_ad_power,
    so_candidates,
    yn_times_ad,
)
from casimirlab.rootsys import build, casimir_weyl, label_weight, weyl_dim
from casimirlab.young import dim_so, horizontal_sum, num_standard_tableaux

from conftest import composite_pairs

REMARK_LIST = [1, 0, 1, 2, 9, 44, 265, 1854, 14833, 133496]


def test_mult_by_adjoint_examples():
    ad2 = mult_by_adjoint(Decomposition("sl", {P((1,), (1,)): 1}))
    assert ad2.total() == 7
    assert ad2[P((1,), (1,))] == 2 and ad2[P()] == 1
    assert mult_by_adjoint(Decomposition("sl", {P(): 1})) == Decomposition("sl", {P((1,), (1,)): 1})


def test_examples_one_expansion():
    got = mult_by_adjoint(Decomposition("sl", {P((3,), (2, 1)): 1}))
    expected = Counter(
        {
            P((4,), (3, 1)): 1, P((4,), (2, 2)): 1, P((4,), (2, 1, 1)): 1,
            P((3, 1), (3, 1)): 1, P((3, 1), (2, 2)): 1, P((3, 1), (2, 1, 1)): 1,
            P((3,), (2, 1)): 3, P((2, 1), (2, 1)): 1, P((3,), (3,)): 1,
            P((3,), (1, 1, 1)): 1, P((2,), (2,)): 1, P((2,), (1, 1)): 1,
        }
    )
    assert dict(got.items()) == dict(expected)
    assert len(got) == 12 and got.total() == 14


@pytest.mark.parametrize(
    "k,coeffs", [(2, [1, 2, 1]), (3, [2, 9, 6, 1]), (4, [9, 44, 42, 12, 1]), (5, [44, 265, 320, 130, 20, 1])]
)
def test_ad_power_coefficients(k, coeffs):
    assert grouped_coeffs(ad_power(k)) == coeffs
    assert a_coeffs(k) == coeffs


def test_ad_power_six_matches_recurrence():
    assert grouped_coeffs(ad_power(6)) == a_coeffs(6)


def test_a_coeffs_examples_and_closed_values():
    assert a_coeffs(1) == [0, 1]
    assert [a_coeffs(m)[0] for m in range(10)] == REMARK_LIST
    for m in range(1, 9):
        assert a_coeffs(m)[m] == 1
        assert a_coeffs(m)[m - 1] == m * (m - 1)
        assert a_coeffs(m + 1)[m - 1] == F(m * (m**3 + 1), 2)


@pytest.mark.parametrize("m", range(0, 9))
def test_derangements(m):
    assert derangements_bruteforce(m) == a_coeffs(m)[0] == REMARK_LIST[m]


def test_derangement_budget():
    with pytest.raises(DecompError):
        derangements_bruteforce(10)


@pytest.mark.parametrize("m", range(2, 10))
def test_euler_recurrences(m):
    d = REMARK_LIST
    assert d[m] == (m - 1) * (d[m - 1] + d[m - 2])
    assert d[m] == m * d[m - 1] + (-1) ** m


@pytest.mark.parametrize("N", range(6, 10))
@pytest.mark.parametrize("k", range(2, 5))
def test_dimension_conservation(N, k):
    g = AlgebraId("sl", N)
    assert ad_power(k).dimension(g, virtual=True) == (N * N - 1) ** k


@pytest.mark.parametrize("k", range(2, 5))
def test_casimir_trace_conservation(k):
    # the split Casimir is traceless, so sum mult dim c2 = k dim^k for normalized c2
    N = 2 * k + 1
    s = sum(m * dim_composite(p, N) * casimir_sl(N, p).normalized for p, m in ad_power(k).items())
    assert s == k * (N * N - 1) ** k


def test_yn_times_ad_one_is_ad_squared():
    assert yn_times_ad(AlgebraId("sl", 8), 1) == ad_power(2)


@pytest.mark.parametrize("n", range(1, 5))
def test_yn_times_ad_sl_terms(n):
    d = yn_times_ad(AlgebraId("sl", 4 * n + 2), n)
    assert d[P((n,), (n,))] == 2
    assert d.dimension(AlgebraId("sl", 4 * n + 2)) == (16 * n * n + 16 * n + 3) * dim_composite(P((n,), (n,)), 4 * n + 2)


@pytest.mark.parametrize("family,N", [("so", 12), ("so", 13), ("sp", 8), ("sp", 10)])
@pytest.mark.parametrize("n", range(1, 4))
def test_yn_times_ad_conservation(family, N, n):
    g = AlgebraId(family, N)
    ad = (1, 1) if family == "so" else (2,)
    yn = (n, n) if family == "so" else (2 * n,)
    assert yn_times_ad(g, n).dimension(g) == label_dimension(g, ad) * label_dimension(g, yn)


def test_yn_times_ad_counts():
    assert len(yn_times_ad(AlgebraId("so", 14), 3)) == 7
    assert len(yn_times_ad(AlgebraId("sp", 10), 3)) == 6
    with pytest.raises(DecompError):
        yn_times_ad(AlgebraId.parse("f4"), 1)


def test_branch_examples():
    n = 3
    assert branch_box_Yn(AlgebraId("sl", 7), n) == Decomposition(
        "sl", {P((n + 1,), (n,)): 1, P((n, 1), (n,)): 1, P((n,), (n - 1,)): 1}
    )
    assert branch_box_Yn(AlgebraId("sp", 8), n, primed=True) == Decomposition(
        "sp", {(3, 2, 2): 1, (2, 2, 2, 1): 1, (2, 2, 1): 1}
    )
    assert branch_box_Yn(AlgebraId.parse("g2"), n) == Decomposition(
        "g2", {(1, n): 1, (1, n - 1): 1, (2, n - 1): 1}
    )


def test_branch_unsupported():
    with pytest.raises(DecompError, match="only n = 2"):
        branch_box_Yn(AlgebraId.parse("f4"), 3, primed=True)


@pytest.mark.parametrize("name", ["g2", "f4", "e6", "e7"])
@pytest.mark.parametrize("n", range(1, 6))
def test_exceptional_branching_sums(name, n):
    g = AlgebraId.parse(name)
    rs = build(g)
    box = rs.fundamental_weights[{"g2": 0, "f4": 3, "e6": 0, "e7": 0}[name]]
    y = rs.highest_root
    yn = tuple(n * x for x in y)
    d = branch_box_Yn(g, n)
    assert d.dimension(g) == weyl_dim(rs, box) * weyl_dim(rs, yn)
    # traceless split Casimir: weighted c2 sum equals dim x dim x (c2 box + c2 Y_n)
    lhs = sum(m * weyl_dim(rs, rs.weight(l)) * casimir_weyl(rs, rs.weight(l)).normalized for l, m in d.items())
    rhs = weyl_dim(rs, box) * weyl_dim(rs, yn) * (casimir_weyl(rs, box).normalized + casimir_weyl(rs, yn).normalized)
    assert lhs == rhs


@pytest.mark.parametrize("n", range(1, 4))
def test_e8_ad_times_yn(n):
    g = AlgebraId.parse("e8")
    rs = build(g)
    yn = tuple(n * x for x in rs.highest_root)
    d = yn_times_ad(g, n)
    assert d.dimension(g) == 248 * weyl_dim(rs, yn)
    assert branch_box_Yn(g, n) == d


def test_so_ad_power_fixtures():
    ad4 = so_ad_power(4)
    assert len(ad4) == 32
    assert ad4[(1, 1)] == 22
    assert all(lam in so_candidates(4) for lam, _ in ad4.items())
    assert all(lam in so_candidates(2) for lam, _ in so_ad_power(2).items())
    assert set(l for l, _ in so_ad_power(2).items()) == {(), (1, 1), (2,), (2, 2), (2, 1, 1), (1, 1, 1, 1)}
    assert (1,) * 10 not in so_candidates(4)


@pytest.mark.parametrize("k", [2, 3, 4])
@pytest.mark.parametrize("N", [17, 18, 20])
def test_so_ad_power_conservation(k, N):
    g = AlgebraId("so", N)
    d = so_ad_power(k)
    dim_ad = F(N * (N - 1), 2)
    assert d.dimension(g) == dim_ad**k
    s = sum(m * dim_so(N, l) * casimir_so(N, l).normalized for l, m in d.items())
    assert s == k * dim_ad**k


@pytest.mark.parametrize("n", range(1, 6))
def test_horizontal_sum_single_exception(n):
    assert horizontal_sum_residue(n) == Counter({((n,), (n,)): 1})


@given(composite_pairs(max_size=3, balanced=True))
def test_mult_by_adjoint_conserves_dimension(p):
    N = 2 * max(sum(p.upper), 1) + 3
    g = AlgebraId("sl", N)
    d = mult_by_adjoint(Decomposition("sl", {p: 1}))
    assert d.dimension(g, virtual=True) == dim_composite(p, N) * (N * N - 1)


@pytest.mark.parametrize("k", range(1, 6))
def test_weighted_label_count(k):
    # mult = a_j f_mu f_lam, and summing f_mu^2 f_lam^2 over mu, lam of size j gives (j!)^2
    lhs = sum(m * num_standard_tableaux(p.upper) * num_standard_tableaux(p.lower) for p, m in ad_power(k).items())
    assert lhs == sum(c * factorial(j) ** 2 for j, c in enumerate(a_coeffs(k)))
