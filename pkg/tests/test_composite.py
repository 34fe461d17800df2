from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from casimirlab.composite import (
    CompositePair,
    check_duality,
    dim_composite,
    dimension_polynomial,
    dynkin_labels,
    min_rank,
    to_diagram,
    virtual_dim,
)
from casimirlab.young import horizontal_sum, size, transpose

from conftest import composite_pairs


def test_to_diagram_examples():
    assert to_diagram(CompositePair((3, 1), (4, 2)), 8) == (7, 5, 4, 4, 4, 4, 2)
    assert to_diagram(CompositePair(), 6) == ()
    assert to_diagram(CompositePair((1,), (1,)), 5) == (2, 1, 1, 1)


def test_to_diagram_reports_minimal_rank():
    with pytest.raises(ValueError, match="N >= 4"):
        to_diagram(CompositePair((1, 1), (1, 1)), 3)


def test_dynkin_with_full_column():
    assert dynkin_labels(CompositePair((1, 1), ()), 2) == (0,)
    assert dynkin_labels(CompositePair((), (1, 1)), 2) == (0,)
    assert dynkin_labels(CompositePair((2, 1), (1,)), 3) == (1, 2)


def test_dynkin_examples():
    assert dynkin_labels(CompositePair((3, 1), (4, 2)), 8) == (2, 1, 0, 0, 0, 2, 2)
    assert dynkin_labels(CompositePair(), 4) == (0, 0, 0)
    assert dynkin_labels(CompositePair((1,), (1,)), 4) == (1, 0, 1)


def test_dim_examples():
    assert dim_composite(CompositePair((2,), (2,)), 4) == 84
    assert dim_composite(CompositePair((1,), (1,)), 5) == 24
    assert dim_composite(CompositePair((1, 1), (1, 1)), 4) == 20
    assert dim_composite(CompositePair((1, 1), (1, 1)), 3) == 0


def test_duality_examples():
    assert check_duality(CompositePair((2,), (2,)), range(2, 12))
    assert check_duality(CompositePair(), range(2, 5))
    assert check_duality(CompositePair((2,), (1, 1)), range(5, 16))


def test_y2_and_y2_prime_are_exchanged_by_reflection():
    p = dimension_polynomial(CompositePair((2,), (2,)), range(4, 12))
    q = dimension_polynomial(CompositePair((1, 1), (1, 1)), range(4, 12))
    assert [c if k % 2 == 0 else -c for k, c in enumerate(p)] == q


def test_duality_needs_enough_samples():
    with pytest.raises(ValueError, match="need at least 5 sample points"):
        check_duality(CompositePair((2,), (1, 1)), range(5, 8))


def test_balanced_flag():
    with pytest.raises(ValueError):
        CompositePair((2,), (1,), balanced=True)
    assert CompositePair((2,), (1, 1), balanced=True).swap() == CompositePair((1, 1), (2,))


def test_virtual_dim_continues_below_min_rank():
    p = CompositePair((1, 1), (1, 1))
    assert virtual_dim(p, 4) == 20
    # N^2 (N-3)(N+1)/4 at N = 2
    assert virtual_dim(p, 2) == Fraction(4 * -1 * 3, 4)


@given(composite_pairs(balanced=True), st.integers(min_value=0, max_value=4))
def test_duals_have_equal_dimension(p, extra):
    N = max(min_rank(p), 2) + extra
    assert dim_composite(p, N) == dim_composite(p.swap(), N)


@given(composite_pairs(), st.integers(min_value=0, max_value=5))
def test_diagram_size(p, extra):
    N = max(min_rank(p), 2) + extra
    lam = to_diagram(p, N)
    r = p.lower[0] if p.lower else 0
    assert size(lam) == r * N + size(p.upper) - size(p.lower)
    assert (size(lam) - size(p.upper) + size(p.lower)) % N == 0


@given(composite_pairs(max_size=4), st.integers(min_value=0, max_value=5))
def test_dynkin_from_diagram(p, extra):
    N = max(min_rank(p), 2) + extra
    lam = list(to_diagram(p, N)) + [0] * N
    assert dynkin_labels(p, N) == tuple(lam[i] - lam[i + 1] for i in range(N - 1))


@given(composite_pairs(max_size=3))
def test_duality_property(p):
    lo = max(min_rank(p), min_rank(CompositePair(transpose(p.lower), transpose(p.upper))), 2)
    assert check_duality(p, range(lo, lo + size(p.upper) + size(p.lower) + 3))


@pytest.mark.parametrize("n", range(1, 6))
def test_horizontal_sum_rule_on_multiplet_table(n):
    rows = [
        (((n + 1,), (n,)), (2 * n + 1,)),
        (((n,), (n - 1,)), (2 * n - 1,)),
        (((n, 1), (n,)), (2 * n, 1)),
        (((n,), (n,)), (2 * n,)),
    ]
    for (upper, lower), sp in rows:
        assert horizontal_sum(upper, lower) == sp
