"""Explicit ``sl(N)`` matrices as a brute-force oracle.

The basis is ``E_ij`` (``i != j``) followed by ``H_k = E_kk - E_{k+1,k+1}``.
The metric is ``g_ab = Tr(ad X_a ad X_b)``, so the adjoint Casimir is 1 and
the split Casimir ``g^{ab} T1(X_a) x T2(X_b)`` has the same normalization as
the universal formulas.  Everything is exact; sizes are kept small on
purpose (``N <= 5``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "MatrixRep",
    "SplitCasimirMatrix",
    "OracleError",
    "build_sl",
    "split_casimir_matrix",
    "trace_power_matrix",
    "projector_rank",
    "spectrum",
    "annihilates",
    "matrix_rank",
    "cartan_power_rep",
    "commutator",
]

F = Fraction
ZERO = F(0)

MAX_N = 5
MAX_TENSOR_DIM = 4096


class OracleError(ValueError):
    pass


# -- dense exact matrices ----------------------------------------------------


def _zeros(r, c=None):
    return [[ZERO] * (r if c is None else c) for _ in range(r)]


def _identity(n):
    m = _zeros(n)
    for i in range(n):
        m[i][i] = F(1)
    return m


def _mul(A, B):
    cols = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [ZERO] * cols
        for k, a in enumerate(row):
            if a:
                bk = B[k]
                for j in range(cols):
                    if bk[j]:
                        acc[j] += a * bk[j]
        out.append(acc)
    return out


def _add(A, B, s=1):
    return [[x + s * y for x, y in zip(ra, rb)] for ra, rb in zip(A, B)]


def _scale(A, c):
    return [[c * x for x in row] for row in A]


def _shift(A, r):
    """``A - r I``"""
    out = [list(row) for row in A]
    for i in range(len(out)):
        out[i][i] -= r
    return out


def _trace(A):
    return sum((A[i][i] for i in range(len(A))), ZERO)


def _kron(A, B):
    m, n = len(A), len(B)
    out = _zeros(m * n)
    for i, ra in enumerate(A):
        for j, a in enumerate(ra):
            if a:
                for k, rb in enumerate(B):
                    row = out[i * n + k]
                    for l, b in enumerate(rb):
                        if b:
                            row[j * n + l] = a * b
    return out


def _is_zero(A):
    return all(not x for row in A for x in row)


def commutator(A, B):
    return _add(_mul(A, B), _mul(B, A), -1)


def matrix_rank(A) -> int:
    """Rank by exact Gaussian elimination."""
    M = [list(row) for row in A]
    rank, cols = 0, len(M[0]) if M else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(M)) if M[r][c]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = 1 / M[rank][c]
        prow = [x * inv for x in M[rank]]
        M[rank] = prow
        for r in range(rank + 1, len(M)):
            f = M[r][c]
            if f:
                M[r] = [x - f * y for x, y in zip(M[r], prow)]
        rank += 1
    return rank


def _inverse(A):
    n = len(A)
    M = [list(row) + e for row, e in zip(A, _identity(n))]
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c]), None)
        if piv is None:
            raise OracleError("metric is degenerate")
        M[c], M[piv] = M[piv], M[c]
        inv = 1 / M[c][c]
        M[c] = [x * inv for x in M[c]]
        for r in range(n):
            if r != c and M[r][c]:
                f = M[r][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return [row[n:] for row in M]


# -- representations ---------------------------------------------------------


@dataclass(frozen=True)
class MatrixRep:
    """Generators ``T(X_a)`` in the fixed basis of ``sl(N)``."""

    N: int
    dim_rep: int
    generators: tuple
    name: str = ""

    def check(self, structure) -> None:
        """Tracelessness and closure ``[T_a, T_b] = X^d_ab T_d``."""
        for a, T in enumerate(self.generators):
            if _trace(T):
                raise OracleError(f"{self.name}: generator {a} is not traceless")
        for a, Ta in enumerate(self.generators):
            for b, Tb in enumerate(self.generators):
                rhs = _zeros(self.dim_rep)
                for d, c in structure[a][b].items():
                    rhs = _add(rhs, self.generators[d], c)
                if commutator(Ta, Tb) != rhs:
                    raise OracleError(f"{self.name}: closure fails for ({a}, {b})")


@dataclass(frozen=True)
class SplitCasimirMatrix:
    matrix: tuple

    @property
    def dim(self) -> int:
        return len(self.matrix)


def _basis(N):
    mats = []
    for i in range(N):
        for j in range(N):
            if i != j:
                m = _zeros(N)
                m[i][j] = F(1)
                mats.append(m)
    for k in range(N - 1):
        m = _zeros(N)
        m[k][k], m[k + 1][k + 1] = F(1), F(-1)
        mats.append(m)
    return mats


def _coords(M, N):
    """Coordinates of a traceless ``N x N`` matrix in the basis above."""
    out = [M[i][j] for i in range(N) for j in range(N) if i != j]
    acc = ZERO
    for k in range(N - 1):
        acc += M[k][k]
        out.append(acc)
    return out


def _structure(N, basis):
    """``X^d_ab`` as a nested list of sparse dicts ``{d: coeff}``."""
    return [
        [{d: c for d, c in enumerate(_coords(commutator(A, B), N)) if c} for B in basis]
        for A in basis
    ]


@lru_cache(maxsize=None)
def _build(N):
    basis = _basis(N)
    dim = len(basis)
    structure = _structure(N, basis)
    ad = []
    for a in range(dim):
        m = _zeros(dim)
        for b in range(dim):
            for d, c in structure[a][b].items():
                m[d][b] = c
        ad.append(m)
    killing = [[_trace(_mul(ad[a], ad[b])) for b in range(dim)] for a in range(dim)]
    defining = MatrixRep(N, N, tuple(basis), "defining")
    adjoint = MatrixRep(N, dim, tuple(ad), "adjoint")
    return defining, adjoint, tuple(map(tuple, killing)), structure


def build_sl(N: int):
    """``(defining, adjoint, killing)`` for ``sl(N)``, ``2 <= N <= 5``."""
    if not 2 <= N <= MAX_N:
        raise OracleError(f"matrix oracle supports 2 <= N <= {MAX_N}, got N = {N}")
    defining, adjoint, killing, _ = _build(N)
    return defining, adjoint, [list(r) for r in killing]


def structure_constants(N: int):
    if not 2 <= N <= MAX_N:
        raise OracleError(f"matrix oracle supports 2 <= N <= {MAX_N}, got N = {N}")
    return _build(N)[3]


def casimir_matrix(rep: MatrixRep, killing) -> list:
    """``g^{ab} T_a T_b``; a scalar matrix on an irreducible rep."""
    ginv = _inverse(killing)
    out = _zeros(rep.dim_rep)
    for a, Ta in enumerate(rep.generators):
        for b, Tb in enumerate(rep.generators):
            if ginv[a][b]:
                out = _add(out, _mul(Ta, Tb), ginv[a][b])
    return out


def split_casimir_matrix(r1: MatrixRep, r2: MatrixRep, killing) -> SplitCasimirMatrix:
    """``g^{ab} T1(X_a) x T2(X_b)`` as an exact matrix on ``r1 x r2``."""
    if r1.N != r2.N or len(r1.generators) != len(killing):
        raise OracleError("representations and metric use different bases")
    ginv = _inverse(killing)
    dim = len(killing)
    out = _zeros(r1.dim_rep * r2.dim_rep)
    for b in range(dim):
        U = _zeros(r1.dim_rep)
        for a in range(dim):
            if ginv[a][b]:
                U = _add(U, r1.generators[a], ginv[a][b])
        if not _is_zero(U):
            out = _add(out, _kron(U, r2.generators[b]))
    return SplitCasimirMatrix(tuple(map(tuple, out)))


def trace_power_matrix(c: SplitCasimirMatrix, L: int) -> Fraction:
    """``Tr(C^L)``."""
    if L < 0:
        raise OracleError(f"L must be non-negative, got {L}")
    if L == 0:
        return F(c.dim)
    M = [list(r) for r in c.matrix]
    P = M
    for _ in range(L - 1):
        P = _mul(P, M)
    return _trace(P)


def _poly_at(M, roots):
    out = _identity(len(M))
    for r in roots:
        out = _mul(out, _shift(M, F(r)))
    return out


def annihilates(c: SplitCasimirMatrix, roots) -> bool:
    """Whether ``prod (C - r)`` vanishes exactly."""
    return _is_zero(_poly_at([list(r) for r in c.matrix], roots))


def projector_rank(c: SplitCasimirMatrix, roots, i: int) -> int:
    """Rank of the Lagrange projector onto the ``roots[i]`` eigenspace.

    The full product over ``roots`` must annihilate the matrix first; the
    rank is then the trace of the (idempotent) projector, cross-checked by
    elimination.
    """
    roots = [F(r) for r in roots]
    if len(set(roots)) != len(roots):
        raise OracleError(f"roots are not distinct: {roots}")
    if not 0 <= i < len(roots):
        raise OracleError(f"root index {i} out of range")
    M = [list(r) for r in c.matrix]
    if not _is_zero(_poly_at(M, roots)):
        raise OracleError("the roots do not annihilate the matrix: an eigenvalue is missing")
    others = [r for j, r in enumerate(roots) if j != i]
    denom = F(1)
    for r in others:
        denom *= roots[i] - r
    P = _scale(_poly_at(M, others), 1 / denom)
    tr = _trace(P)
    if tr.denominator != 1 or int(tr) != matrix_rank(P):
        raise OracleError("projector trace and rank disagree")
    return int(tr)


def spectrum(c: SplitCasimirMatrix, candidates) -> dict:
    """Eigenvalues among ``candidates`` with multiplicities.

    A candidate is an eigenvalue when ``C - r`` is singular.  The found
    eigenvalues must annihilate the matrix (so it is diagonalizable with no
    eigenvalue outside the list); multiplicities are projector ranks.
    """
    M = [list(r) for r in c.matrix]
    found = []
    for r in dict.fromkeys(F(x) for x in candidates):
        if matrix_rank(_shift(M, r)) < len(M):
            found.append(r)
    if not found or not _is_zero(_poly_at(M, found)):
        raise OracleError("candidate roots do not account for the whole spectrum")
    return {r: projector_rank(c, found, i) for i, r in enumerate(found)}


# -- Cartan powers -----------------------------------------------------------


def _act(gen, vec, n, d):
    """Action of one adjoint generator on a sparse vector of ``ad^{x n}``."""
    out: dict = {}
    for idx, x in vec.items():
        for slot in range(n):
            b = idx[slot]
            for row in range(d):
                c = gen[row][b]
                if c:
                    key = idx[:slot] + (row,) + idx[slot + 1 :]
                    v = out.get(key, ZERO) + c * x
                    if v:
                        out[key] = v
                    else:
                        out.pop(key, None)
    return out


def cartan_power_rep(N: int, n: int) -> MatrixRep:
    """``Y_n`` as the submodule of ``ad^{x n}`` generated by ``E_1N^{x n}``."""
    if n < 1:
        raise OracleError(f"n must be >= 1, got {n}")
    _, adjoint, _ = build_sl(N)
    d = adjoint.dim_rep
    if d**n > MAX_TENSOR_DIM:
        raise OracleError(f"ad^{n} of sl({N}) has dimension {d**n} > {MAX_TENSOR_DIM}")
    top = (N - 1,)  # index of E_1N in the basis
    basis: list[dict] = []  # reduced: pivot of basis[j] vanishes in every other vector
    pivots: list = []

    def reduce(v):
        v = dict(v)
        for p, b in zip(pivots, basis):
            f = v.get(p)
            if f:
                for k, x in b.items():
                    y = v.get(k, ZERO) - f * x
                    if y:
                        v[k] = y
                    else:
                        v.pop(k, None)
        return v

    def insert(v):
        p = min(v)
        inv = 1 / v[p]
        v = {k: x * inv for k, x in v.items()}
        for j, b in enumerate(basis):
            f = b.get(p)
            if f:
                nb = dict(b)
                for k, x in v.items():
                    y = nb.get(k, ZERO) - f * x
                    if y:
                        nb[k] = y
                    else:
                        nb.pop(k, None)
                basis[j] = nb
        basis.append(v)
        pivots.append(p)

    queue = [{top * n: F(1)}]
    insert(queue[0])
    while queue:
        v = queue.pop()
        for gen in adjoint.generators:
            w = reduce(_act(gen, v, n, d))
            if w:
                insert(w)
                queue.append(w)
    dim = len(basis)
    gens = []
    for gen in adjoint.generators:
        m = _zeros(dim)
        for j, b in enumerate(basis):
            w = _act(gen, b, n, d)
            for i, p in enumerate(pivots):
                m[i][j] = w.get(p, ZERO)
        gens.append(m)
    return MatrixRep(N, dim, tuple(gens), f"Y_{n}")
