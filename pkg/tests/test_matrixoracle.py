from fractions import Fraction as F
from functools import lru_cache

import pytest
from hypothesis import given, strategies as st

from casimirlab.casimir import AlgebraId
from casimirlab.matrixoracle import (
    OracleError,
    annihilates,
    build_sl,
    cartan_power_rep,
    casimir_matrix,
    commutator,
    matrix_rank,
    projector_rank,
    spectrum,
    split_casimir_matrix,
    structure_constants,
    trace_power_matrix,
)
from casimirlab.vogel import char_identity_roots, dims_box_Yn, ladder_factor, params


@lru_cache(maxsize=None)
def box_ad(N):
    box, ad, killing = build_sl(N)
    return split_casimir_matrix(box, ad, killing)


def _tr(A):
    return sum(A[i][i] for i in range(len(A)))


def _mul(A, B):
    return [[sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0]))] for i in range(len(A))]


def _scalar(M):
    c = M[0][0]
    return all(M[i][j] == (c if i == j else 0) for i in range(len(M)) for j in range(len(M))) and c


def test_build_budget():
    for N in (1, 6):
        with pytest.raises(OracleError):
            build_sl(N)


@pytest.mark.parametrize("N,c2", [(2, F(3, 8)), (3, F(4, 9)), (4, F(15, 32))])
def test_defining_and_adjoint_casimirs(N, c2):
    box, ad, killing = build_sl(N)
    assert len(box.generators) == N * N - 1
    assert matrix_rank(killing) == N * N - 1
    assert _scalar(casimir_matrix(box, killing)) == c2 == F(N * N - 1, 2 * N * N)
    assert _scalar(casimir_matrix(ad, killing)) == 1


def test_killing_is_adjoint_trace_form():
    box, ad, killing = build_sl(3)
    for a, A in enumerate(ad.generators):
        for b, B in enumerate(ad.generators):
            assert killing[a][b] == _tr(_mul(A, B))


def test_dynkin_index_of_box():
    box, ad, killing = build_sl(2)
    for a, A in enumerate(box.generators):
        for b, B in enumerate(box.generators):
            assert _tr(_mul(A, B)) == F(1, 4) * killing[a][b]


@pytest.mark.parametrize("N", range(2, 5))
def test_jacobi_and_invariance(N):
    X = structure_constants(N)
    d = N * N - 1
    _, ad, killing = build_sl(N)
    ad.check(X)

    def br(u, v):
        out = {}
        for a, x in u.items():
            for b, y in v.items():
                for c, z in X[a][b].items():
                    out[c] = out.get(c, 0) + x * y * z
        return {k: v for k, v in out.items() if v}

    def g(u, v):
        return sum(x * y * killing[a][b] for a, x in u.items() for b, y in v.items())

    e = [{i: F(1)} for i in range(d)]
    for a in range(d):
        for b in range(d):
            for c in range(d):
                s = {}
                for t in (br(e[a], br(e[b], e[c])), br(e[b], br(e[c], e[a])), br(e[c], br(e[a], e[b]))):
                    for k, v in t.items():
                        s[k] = s.get(k, 0) + v
                assert not any(s.values())
                assert g(br(e[a], e[b]), e[c]) + g(e[b], br(e[a], e[c])) == 0


def test_spectra_sl2_sl3():
    assert spectrum(box_ad(2), [F(-1, 2), F(1, 4), F(-1, 4)]) == {F(-1, 2): 2, F(1, 4): 4}
    assert spectrum(box_ad(3), char_identity_roots(params(AlgebraId("sl", 3)), 1)) == {
        F(-1, 2): 3,
        F(1, 6): 15,
        F(-1, 6): 6,
    }


@pytest.mark.parametrize("N", [2, 3, 4])
def test_spectrum_matches_universal(N):
    g = AlgebraId("sl", N)
    predicted = {}
    for m in dims_box_Yn(g, 1):
        if m.dimension:
            predicted[m.eigenvalue] = predicted.get(m.eigenvalue, 0) + m.dimension
    assert spectrum(box_ad(N), char_identity_roots(params(g), 1)) == predicted


@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_char_identity_annihilates(N):
    roots = char_identity_roots(params(AlgebraId("sl", N)), 1)
    assert annihilates(box_ad(N), roots)
    assert trace_power_matrix(box_ad(N), 1) == 0


def test_sl3_minimal_polynomial_lacks_quarter():
    roots = [F(-1, 2), F(1, 6), F(-1, 6)]
    assert annihilates(box_ad(3), roots)
    for r in roots:
        assert not annihilates(box_ad(3), [x for x in roots if x != r])


@pytest.mark.parametrize("N", [2, 3])
@pytest.mark.parametrize("L", range(0, 7))
def test_traces_match_ladder(N, L):
    g = AlgebraId("sl", N)
    assert trace_power_matrix(box_ad(N), L) == (N * N - 1) * ladder_factor(g, L)


def test_trace_examples():
    assert trace_power_matrix(box_ad(3), 2) == F(4, 3)
    assert trace_power_matrix(box_ad(3), 3) == F(-1, 3)


def test_projector_ranks_sl3():
    roots = [F(-1, 2), F(1, 6), F(-1, 6)]
    ranks = [projector_rank(box_ad(3), roots, i) for i in range(3)]
    assert ranks == [3, 15, 6]
    assert sum(ranks) == 3 * 8
    for L in range(7):
        assert trace_power_matrix(box_ad(3), L) == sum(r**L * k for r, k in zip(roots, ranks))


def test_projector_rank_needs_full_spectrum():
    with pytest.raises(OracleError, match="missing"):
        projector_rank(box_ad(3), [F(-1, 2), F(1, 6)], 0)


def test_cartan_power_y2():
    for N, expected in ((2, {F(-3, 4): 4, F(1, 2): 6}), (3, {F(-2, 3): 15, F(1, 3): 42, F(-1, 6): 24})):
        box, _, killing = build_sl(N)
        y2 = cartan_power_rep(N, 2)
        assert y2.dim_rep == {2: 5, 3: 27}[N]
        assert _scalar(casimir_matrix(y2, killing)) == 2 * (1 + F(1, N))
        c = split_casimir_matrix(box, y2, killing)
        g = AlgebraId("sl", N)
        assert spectrum(c, char_identity_roots(params(g), 2)) == expected


def test_cartan_power_budget():
    with pytest.raises(OracleError):
        cartan_power_rep(5, 3)


@st.composite
def small_matrices(draw, n=3):
    vals = st.integers(min_value=-3, max_value=3).map(F)
    return [[draw(vals) for _ in range(n)] for _ in range(n)]


@given(small_matrices(), small_matrices())
def test_commutator_traceless_and_antisymmetric(A, B):
    C = commutator(A, B)
    assert _tr(C) == 0
    D = commutator(B, A)
    assert all(C[i][j] == -D[i][j] for i in range(3) for j in range(3))
