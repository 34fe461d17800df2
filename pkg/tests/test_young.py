from fractions import Fraction
from itertools import permutations
from math import factorial

import pytest
from hypothesis import example, given, strategies as st

from casimirlab.casimir import AlgebraId
from casimirlab.rootsys import build, label_weight, weyl_dim
from casimirlab.young import (
    add_box,
    dim_sl,
    dim_sl_hook_content,
    dim_so,
    dim_sp,
    horizontal_sum,
    num_standard_tableaux,
    partition,
    partitions_of,
    remove_box,
    size,
    transpose,
)

from conftest import partitions


def test_transpose_examples():
    assert transpose((4, 2)) == (2, 2, 1, 1)
    assert transpose(()) == ()
    assert transpose((3, 1)) == (2, 1, 1)


def test_partition_validation():
    assert partition([3, 1, 0]) == (3, 1)
    with pytest.raises(ValueError):
        partition([1, 2])
    with pytest.raises(ValueError):
        partition([2, -1])


def _tableaux_bruteforce(lam):
    """Count fillings of lam by 1..n increasing along rows and columns."""
    cells = [(i, j) for i, r in enumerate(lam) for j in range(r)]
    count = 0
    for perm in permutations(range(len(cells))):
        t = dict(zip(cells, perm))
        if all(t[(i, j)] < t[(i, j + 1)] for (i, j) in cells if (i, j + 1) in t) and all(
            t[(i, j)] < t[(i + 1, j)] for (i, j) in cells if (i + 1, j) in t
        ):
            count += 1
    return count


@pytest.mark.parametrize("lam,expected", [((2, 1), 2), ((1, 1, 1), 1), ((2, 2), 2), ((), 1)])
def test_num_standard_tableaux(lam, expected):
    assert num_standard_tableaux(lam) == expected
    assert _tableaux_bruteforce(lam) == expected


@pytest.mark.parametrize("m", range(0, 9))
def test_sum_of_squares_is_group_order(m):
    assert sum(num_standard_tableaux(l) ** 2 for l in partitions_of(m)) == factorial(m)


def test_dim_sl_examples():
    assert dim_sl(5, (2, 1, 1, 1)) == 24
    assert dim_sl(7, ()) == 1
    assert dim_sl(4, (4, 2, 2)) == 84
    assert dim_sl(3, (1, 1, 1, 1)) == 0


def test_dim_so_middle_diagram_splits():
    assert dim_so(6, (1, 1, 1)) == 20
    g = AlgebraId("so", 6)
    assert weyl_dim(build(g), label_weight(g, (1, 1, 1))) == 10


def test_dim_so_examples():
    assert dim_so(7, (1, 1)) == 21
    assert dim_so(9, ()) == 1
    assert dim_so(5, (2, 2)) == 35
    with pytest.raises(ValueError):
        dim_so(7, (1, 1, 1, 1))


def test_horizontal_sum_examples():
    assert horizontal_sum((3,), (3,)) == (6,)
    assert horizontal_sum((4, 2), ()) == (4, 2)
    assert horizontal_sum((4, 2), (3, 1)) == (7, 3)


@given(partitions(max_size=10), st.integers(min_value=1, max_value=10))
def test_dim_sl_column_form_equals_hook_content(lam, N):
    expected = dim_sl_hook_content(N, lam) if len(lam) <= N else 0
    assert dim_sl(N, lam) == expected


@given(partitions(max_size=7), st.integers(min_value=2, max_value=7))
def test_dim_sl_matches_weyl(lam, N):
    if len(lam) > N:
        return
    g = AlgebraId("sl", N)
    assert dim_sl(N, lam) == weyl_dim(build(g), label_weight(g, lam))


@given(partitions(max_size=7), st.integers(min_value=5, max_value=10))
@example((1, 1, 1), 6)
def test_dim_so_matches_weyl_and_is_positive_integer(lam, N):
    if len(lam) > N // 2:
        return
    g = AlgebraId("so", N)
    d = dim_so(N, lam)
    weyl = weyl_dim(build(g), label_weight(g, lam))
    # N even with N/2 rows: the diagram is a self-dual plus an anti-self-dual irrep
    assert d == (2 * weyl if N % 2 == 0 and len(lam) == N // 2 else weyl)
    assert d.denominator == 1 and d > 0


@given(partitions(max_size=7), st.sampled_from([2, 4, 6, 8, 10]))
def test_dim_sp_matches_weyl(lam, N):
    if len(lam) > N // 2:
        return
    g = AlgebraId("sp", N)
    assert dim_sp(N, lam) == weyl_dim(build(g), label_weight(g, lam))


@given(partitions(), partitions(), partitions())
def test_horizontal_sum_commutative_associative(a, b, c):
    assert horizontal_sum(a, b) == horizontal_sum(b, a)
    assert horizontal_sum(horizontal_sum(a, b), c) == horizontal_sum(a, horizontal_sum(b, c))


@given(partitions())
def test_transpose_involution(lam):
    assert transpose(transpose(lam)) == lam
    assert size(transpose(lam)) == size(lam)


@given(partitions(max_size=7))
def test_pieri_single_box_branching(lam):
    # f_lam = sum over removable corners; f_(lam+box) summed over addable corners = (|lam|+1) f_lam
    if lam:
        assert num_standard_tableaux(lam) == sum(num_standard_tableaux(m) for m in remove_box(lam))
    assert sum(num_standard_tableaux(m) for m in add_box(lam)) == (size(lam) + 1) * num_standard_tableaux(lam)
