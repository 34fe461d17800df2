"""Verification suites behind ``casimirlab verify``.

Each suite yields :class:`Entry` records comparing two independently
computed exact values.  Reports are deterministic: ranges are fixed, random
composite pairs come from a seeded generator, and timings are only recorded
when asked for.
"""

from __future__ import annotations

import csv
import io
import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .casimir import AlgebraId, casimir_adjoint_raw, casimir_so, casimir_sp, casimir_sl
from .closedforms import box_Yn_closed, box_Yn_eigenvalues
from .composite import CompositePair, check_duality, min_rank
from .decomp import (
    a_coeffs,
    ad_power,
    derangements_bruteforce,
    grouped_coeffs,
    horizontal_sum_residue,
    label_dimension,
    so_ad_power,
)
from .exact import rational_to_str
from . import fixtures
from .labels import parse_label
from .young import partitions_of

__all__ = ["Entry", "VerifyReport", "SUITES", "run_suite", "default_ranges"]

EXCEPTIONAL_SWEEP = ("g2", "f4", "e6", "e7")


@dataclass
class Entry:
    check_id: str
    algebra: str
    parameters: dict
    status: str
    lhs: str
    rhs: str
    elapsed_ms: int = 0

    def to_json(self) -> dict:
        return {
            "check_id": self.check_id,
            "algebra": self.algebra,
            "parameters": self.parameters,
            "status": self.status,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "elapsed_ms": self.elapsed_ms,
        }


@dataclass
class VerifyReport:
    entries: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(e.status != "fail" for e in self.entries)

    def counts(self) -> dict:
        out = {"pass": 0, "fail": 0, "skipped": 0}
        for e in self.entries:
            out[e.status] += 1
        return out

    def to_json(self) -> dict:
        return {"summary": self.counts(), "entries": [e.to_json() for e in self.entries]}

    def render(self, fmt: str = "json") -> str:
        cols = ["check_id", "algebra", "parameters", "status", "lhs", "rhs", "elapsed_ms"]
        rows = [e.to_json() for e in self.entries]
        if fmt == "json":
            return json.dumps(self.to_json(), indent=2)
        if fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(cols)
            for r in rows:
                w.writerow([json.dumps(r[c], sort_keys=True) if c == "parameters" else r[c] for c in cols])
            return buf.getvalue().rstrip("\n")
        if fmt == "md":
            lines = ["| " + " | ".join(cols) + " |", "|" + "---|" * len(cols)]
            for r in rows:
                cells = [json.dumps(r[c], sort_keys=True) if c == "parameters" else str(r[c]) for c in cols]
                lines.append("| " + " | ".join(x.replace("|", "\\|") for x in cells) + " |")
            c = self.counts()
            lines.append("")
            lines.append(f"{c['pass']} passed, {c['fail']} failed, {c['skipped']} skipped")
            return "\n".join(lines)
        raise ValueError(f"unknown format {fmt!r}")


def _s(x) -> str:
    if isinstance(x, (Fraction, int)) and not isinstance(x, bool):
        return rational_to_str(Fraction(x))
    if isinstance(x, (list, tuple)):
        return "[" + ", ".join(_s(v) for v in x) + "]"
    return str(x)


class _Collector:
    def __init__(self, timings: bool):
        self.timings = timings
        self.entries: list[Entry] = []

    def check(self, check_id, algebra, parameters, fn):
        """Run ``fn() -> (lhs, rhs)``; equal means pass, an exception means fail."""
        t0 = time.perf_counter()
        try:
            lhs, rhs = fn()
            status = "pass" if lhs == rhs else "fail"
            lhs, rhs = _s(lhs), _s(rhs)
        except _Skip as e:
            status, lhs, rhs = "skipped", str(e), ""
        except Exception as e:  # reported, never swallowed silently
            status, lhs, rhs = "fail", f"{type(e).__name__}: {e}", ""
        ms = int((time.perf_counter() - t0) * 1000) if self.timings else 0
        self.entries.append(Entry(check_id, str(algebra), dict(parameters), status, lhs, rhs, ms))


class _Skip(Exception):
    pass


def default_ranges(quick: bool = False) -> dict:
    if quick:
        return {
            "sl": [3, 4, 6],
            "so": [7, 8, 10],
            "sp": [4, 6, 8],
            "exceptional": list(EXCEPTIONAL_SWEEP),
            "n": [1, 2, 3],
            "k": 4,
            "oracle_N": [2, 3],
            "qN": range(2, 6),
            "qn": range(1, 3),
            "qM": range(1, 5),
            "pairs": 15,
        }
    return {
        "sl": list(range(3, 13)),
        "so": list(range(7, 15)),
        "sp": list(range(4, 13, 2)),
        "exceptional": list(EXCEPTIONAL_SWEEP),
        "n": [1, 2, 3, 4, 5],
        "k": 5,
        "oracle_N": [2, 3],
        "qN": range(2, 11),
        "qn": range(1, 6),
        "qM": range(1, 11),
        "pairs": 50,
    }


def _algebras(ranges, families):
    out = []
    for fam in families:
        if fam in ("sl", "so", "sp"):
            out += [AlgebraId(fam, N) for N in ranges[fam]]
        elif fam in ranges["exceptional"] or fam == "e8":
            out.append(AlgebraId(fam))
        elif fam == "exceptional":
            out += [AlgebraId(f) for f in ranges["exceptional"]]
        else:
            raise ValueError(f"unknown family {fam!r}")
    return out


# -- suites --------------------------------------------------------------------


def suite_dims(c: _Collector, ranges, families):
    """Universal multiplet dimensions vs closed forms vs Weyl dimensions."""
    from .rootsys import build, label_weight, weyl_dim
    from .vogel import dim_Yk_universal, dims_box_Yn, params, vogel_row

    for g in _algebras(ranges, families):
        if g.family == "e8":
            continue
        rs = build(g)
        for n in ranges["n"]:
            par = {"n": n}
            mults = [m for m in dims_box_Yn(g, n) if m.dimension != 0]
            closed = {p.label: p.dimension for p in box_Yn_closed(g, n)}
            for m in mults:
                pm = dict(par, multiplet=m.index, label=m.label)
                c.check("dims.closed_form", g, pm, lambda m=m: (m.dimension, closed.get(m.label, "missing")))
                lab = parse_label(g.family, m.label, g.rank)
                c.check("dims.weyl", g, pm, lambda m=m, lab=lab: (m.dimension, weyl_dim(rs, label_weight(g, lab))))
            c.check(
                "dims.sum",
                g,
                par,
                lambda n=n, mults=mults: (
                    sum(m.dimension for m in mults),
                    vogel_row(g)["dim_box"] * dim_Yk_universal(params(g), n),
                ),
            )
            c.check("dims.labels", g, par, lambda mults=mults, closed=closed: (sorted(m.label for m in mults), sorted(closed)))


def _box_label(g):
    return parse_label(g.family, fixtures.load("multiplets_plain")["box"][g.family], g.rank)


def suite_casimir(c: _Collector, ranges, families):
    """Vogel-table rows: universal dimension, the c2(box) branch formulas, t and the oracles."""
    from .rootsys import build, casimir_weyl
    from .vogel import c2_box_branch, c2_box_swapped, dim_g_universal, params, vogel_row

    table_N = {"sl": range(2, 8), "so": range(5, 11), "sp": range(2, 13, 2)}
    gs = []
    for fam in families:
        if fam in table_N:
            gs += [AlgebraId(fam, N) for N in table_N[fam]]
        elif fam == "exceptional":
            gs += [AlgebraId(f) for f in ("g2", "f4", "e6", "e7", "e8")]
        else:
            gs.append(AlgebraId(fam))
    for g in gs:
        row = vogel_row(g)
        p = params(g)
        for k in ("alpha", "beta", "gamma", "t", "alpha_hat", "beta_hat", "gamma_hat"):
            c.check(f"vogel.{k}", g, {}, lambda k=k: (getattr(p, k), row[k]))
        c.check("vogel.hat_sum", g, {}, lambda: (p.alpha_hat + p.beta_hat + p.gamma_hat, Fraction(1, 2)))
        c.check("vogel.dim_g", g, {}, lambda: (dim_g_universal(p), row["dim_g"]))
        rs = build(g)
        c.check("vogel.dim_g_roots", g, {}, lambda: (row["dim_g"], 2 * len(rs.positive_roots) + len(rs.simple_roots)))
        c.check("vogel.t_adjoint", g, {}, lambda: (row["t"], casimir_adjoint_raw(g) / 2))
        if g.family == "e8":
            # box = ad for e8; the branch formula does not apply
            c.check("vogel.c2_box", g, {}, lambda: (row["c2_box"], Fraction(1)))
        else:
            c.check("vogel.c2_box", g, {}, lambda: (c2_box_branch(p), row["c2_box"]))
            c.check("vogel.c2_box_swapped", g, {}, lambda: (c2_box_swapped(p), row["c2_box"]))
        box = _box_label(g)
        c.check("vogel.dim_box", g, {}, lambda: (label_dimension(g, box), row["dim_box"]))
        c.check("vogel.c2_box_weyl", g, {}, lambda: (_c2_oracle(g, box, rs, casimir_weyl), row["c2_box"]))
        c.check("vogel.c2_dim_box", g, {}, lambda: (row["c2_box"] * row["dim_box"], row["c2_box_times_dim_box"]))


def _c2_oracle(g, label, rs, casimir_weyl):
    from .rootsys import label_weight

    if g.family == "sl":
        return casimir_sl(g.N, label).normalized
    if g.family == "so":
        return casimir_so(g.N, label).normalized
    if g.family == "sp":
        return casimir_sp(g.N, label).normalized
    return casimir_weyl(rs, label_weight(g, label)).normalized


def suite_traces(c: _Collector, ranges, families):
    """Eigenvalue-weighted traces vs their dimension/Casimir closed forms."""
    from .vogel import trace_closed_form, trace_power

    for g in _algebras(ranges, families):
        if g.family == "e8":
            continue
        for n in ranges["n"]:
            for L in range(4):
                c.check(f"traces.L{L}", g, {"n": n, "L": L}, lambda n=n, L=L: (trace_power(g, n, L), trace_closed_form(g, n, L)))
            c.check("traces.L3_quarter", g, {"n": n}, lambda n=n: (trace_power(g, n, 3), -trace_power(g, n, 2) / 4))


def suite_projectors(c: _Collector, ranges, families):
    """Vandermonde solve and Lagrange projectors vs the direct multiplet dimensions."""
    from .vogel import DegenerateSpectrumError, char_identity_roots, dims_box_Yn, params, projector_coefficients, vandermonde_dims

    def vdm(g, n):
        try:
            return vandermonde_dims(g, n), [m.dimension for m in dims_box_Yn(g, n)]
        except DegenerateSpectrumError as e:
            raise _Skip(str(e)) from None

    def lagrange(g, n):
        roots = char_identity_roots(params(g), n)
        try:
            polys = projector_coefficients(params(g), n)
        except DegenerateSpectrumError as e:
            raise _Skip(str(e)) from None
        ev = lambda poly, x: sum(cf * x**k for k, cf in enumerate(poly))
        return [[ev(P, r) for r in roots] for P in polys], [[int(i == j) for j in range(4)] for i in range(4)]

    for g in _algebras(ranges, families):
        if g.family == "e8":
            continue
        for n in ranges["n"]:
            c.check("projectors.vandermonde", g, {"n": n}, lambda n=n: vdm(g, n))
            c.check("projectors.lagrange", g, {"n": n}, lambda n=n: lagrange(g, n))


def suite_decomp(c: _Collector, ranges, families):
    """Adjoint powers: coefficient vectors, singlet counts, dimension conservation."""
    data = fixtures.load("ad_sl")
    K = ranges["k"]
    for k in range(2, K + 1):
        expect = data["a_coeffs"].get(str(k))
        c.check("decomp.a_coeffs_recurrence", "sl", {"k": k}, lambda k=k: (a_coeffs(k), grouped_coeffs(ad_power(k))))
        if expect is not None:
            c.check("decomp.a_coeffs_fixture", "sl", {"k": k}, lambda k=k, e=expect: (a_coeffs(k), e))
    for m in range(0, 9):
        c.check("decomp.derangements", "sl", {"m": m}, lambda m=m: (a_coeffs(m)[0], derangements_bruteforce(m)))
    singlets = data["singlet_counts"]
    c.check("decomp.singlet_list", "sl", {}, lambda: ([a_coeffs(m)[0] for m in range(len(singlets))], singlets))
    for N in range(6, 10):
        g = AlgebraId("sl", N)
        for k in range(2, min(K, 4) + 1):
            c.check("decomp.conservation", g, {"k": k}, lambda g=g, k=k: (ad_power(k).dimension(g, virtual=True), (g.N**2 - 1) ** k))
    for N in (17, 18, 20):
        g = AlgebraId("so", N)
        dg = N * (N - 1) // 2
        for k in (2, 3, 4):
            c.check("decomp.so_conservation", g, {"k": k}, lambda g=g, k=k, dg=dg: (so_ad_power(k).dimension(g), dg**k))
    for n in ranges["n"]:
        c.check(
            "decomp.horizontal_sum",
            "sl/sp",
            {"n": n},
            lambda n=n: (dict(horizontal_sum_residue(n)), {((n,), (n,)): 1}),
        )


def _random_partition(rng, max_size):
    s = rng.randint(0, max_size)
    parts = partitions_of(s)
    return parts[rng.randrange(len(parts))]


def random_pairs(count: int, seed: int = 20250401, max_size: int = 3):
    rng = random.Random(seed)
    out = []
    for i in range(count):
        mu = _random_partition(rng, max_size)
        # every other pair is balanced so both duality variants get exercised
        lam = _random_partition(rng, max_size) if i % 2 else rng.choice(partitions_of(sum(mu)))
        out.append(CompositePair(mu, lam))
    return out


def triple_duality(fam_a, fam_b, n, primed_b, samples=(Fraction(1009, 7), 11, 13, 17, 23)):
    """Match the eigenvalue triple of ``fam_a`` at ``-N`` to that of ``fam_b`` at ``N``.

    The pairing is fixed at the first (generic) sample and then checked at
    the rest; each eigenvalue is a ratio of linear functions of ``N``, so
    agreement at three points already proves equality of rational functions.
    """
    N0 = Fraction(samples[0])
    a = box_Yn_eigenvalues(fam_a, -N0, n)
    b = box_Yn_eigenvalues(fam_b, N0, n, primed=primed_b)
    perm = [b.index(x) if x in b else None for x in a]
    if None in perm or len(set(perm)) != len(perm):
        return False
    for N in samples[1:]:
        N = Fraction(N)
        a = box_Yn_eigenvalues(fam_a, -N, n)
        b = box_Yn_eigenvalues(fam_b, N, n, primed=primed_b)
        if any(a[i] != b[perm[i]] for i in range(len(a))):
            return False
    return True


def suite_duality(c: _Collector, ranges, families):
    """N -> -N dualities of composite dimensions and of eigenvalue triples."""
    for p in random_pairs(ranges["pairs"]):
        deg = sum(p.upper) + sum(p.lower)
        # the transposed dual can need a larger N than the pair itself
        lo = max(min_rank(p), min_rank(p.transposed()), 2)
        c.check("duality.composite", "sl", {"pair": str(p)}, lambda p=p, lo=lo, deg=deg: (check_duality(p, range(lo, lo + deg + 4)), True))
    for n in ranges["n"]:
        c.check("duality.so_to_sp_primed", "so/sp", {"n": n}, lambda n=n: (triple_duality("so", "sp", n, True), True))
        c.check("duality.sp_to_so_primed", "sp/so", {"n": n}, lambda n=n: (triple_duality("sp", "so", n, True), True))
        c.check("duality.sl_to_sl_primed", "sl", {"n": n}, lambda n=n: (triple_duality("sl", "sl", n, True), True))


def suite_qdim(c: _Collector, ranges, families):
    """The two q-identities and the q = 1 limit of the branching q-dimensions."""
    from .qdim import qdim_branch, verify_q_identity_1, verify_q_identity_2

    for N in ranges["qN"]:
        for n in ranges["qn"]:
            c.check("qdim.identity1", f"sl({N})", {"n": n}, lambda N=N, n=n: (verify_q_identity_1(N, n), True))
    for N in ranges["qM"]:
        for M in ranges["qM"]:
            if M >= N:
                c.check("qdim.identity2", "-", {"N": N, "M": M}, lambda N=N, M=M: (verify_q_identity_2(N, M), True))
    for N in ranges["sl"]:
        g = AlgebraId("sl", N)
        for n in ranges["n"]:
            c.check(
                "qdim.classical_limit",
                g,
                {"n": n},
                lambda g=g, n=n: ([qdim_branch(g.N, n, p, 1) for p in (1, 2, 3)], [b.dimension for b in box_Yn_closed(g, n)]),
            )


def suite_oracle(c: _Collector, ranges, families):
    """Explicit sl(N) matrices vs the universal layer."""
    from . import matrixoracle as mo
    from .vogel import char_identity_roots, dims_box_Yn, ladder_factor, params

    for N in ranges["oracle_N"]:
        g = AlgebraId("sl", N)
        d, a, k = mo.build_sl(N)
        st = mo.structure_constants(N)
        dim = N * N - 1

        def jacobi():
            bad = 0
            for x in range(dim):
                for y in range(dim):
                    for z in range(dim):
                        tot = {}
                        for (p, q, r) in ((x, y, z), (y, z, x), (z, x, y)):
                            for e, c1 in st[q][r].items():
                                for f, c2 in st[p][e].items():
                                    tot[f] = tot.get(f, 0) + c1 * c2
                        bad += any(tot.values())
            return bad, 0

        def invariance():
            bad = 0
            for x in range(dim):
                for y in range(dim):
                    for z in range(dim):
                        s = sum(cf * k[e][z] for e, cf in st[x][y].items()) + sum(cf * k[y][e] for e, cf in st[x][z].items())
                        bad += s != 0
            return bad, 0

        c.check("oracle.jacobi", g, {}, jacobi)
        c.check("oracle.ad_invariance", g, {}, invariance)
        c.check("oracle.closure", g, {}, lambda d=d, a=a, st=st: (d.check(st) or a.check(st) or True, True))
        c.check("oracle.c2_adjoint", g, {}, lambda a=a, k=k: (mo.casimir_matrix(a, k), _scalar(1, dim)))
        c.check("oracle.c2_box", g, {}, lambda d=d, k=k: (mo.casimir_matrix(d, k), _scalar(Fraction(N * N - 1, 2 * N * N), N)))
        C = mo.split_casimir_matrix(d, a, k)
        roots = char_identity_roots(params(g), 1)
        expect = {}
        for m in dims_box_Yn(g, 1):
            if m.dimension:
                expect[m.eigenvalue] = int(m.dimension)
        c.check("oracle.spectrum", g, {"n": 1}, lambda C=C, roots=roots, expect=expect: (_sorted_spec(mo.spectrum(C, roots)), _sorted_spec(expect)))
        c.check("oracle.char_identity", g, {"n": 1}, lambda C=C, roots=roots: (mo.annihilates(C, roots), True))
        c.check("oracle.rank_sum", g, {"n": 1}, lambda C=C, roots=roots: (sum(mo.spectrum(C, roots).values()), N * dim))
        for L in range(7):
            c.check("oracle.ladder", g, {"L": L}, lambda C=C, L=L: (mo.trace_power_matrix(C, L), ladder_factor(g, L) * dim))
        for L in range(7):
            c.check(
                "oracle.trace_vs_spectrum",
                g,
                {"L": L},
                lambda C=C, roots=roots, L=L: (
                    mo.trace_power_matrix(C, L),
                    sum(r**L * m for r, m in mo.spectrum(C, roots).items()),
                ),
            )
    g = AlgebraId("sl", 2)

    def y2():
        d, _, k = mo.build_sl(2)
        Y = mo.cartan_power_rep(2, 2)
        C = mo.split_casimir_matrix(d, Y, k)
        roots = char_identity_roots(params(g), 2)
        exp = {m.eigenvalue: int(m.dimension) for m in dims_box_Yn(g, 2) if m.dimension}
        return _sorted_spec(mo.spectrum(C, roots)), _sorted_spec(exp)

    c.check("oracle.cartan_power_Y2", g, {"n": 2}, y2)


def _scalar(x, n):
    return [[Fraction(x) if i == j else Fraction(0) for j in range(n)] for i in range(n)]


def _sorted_spec(d):
    return sorted((Fraction(r), int(m)) for r, m in d.items())


SUITES = {
    "dims": suite_dims,
    "casimir": suite_casimir,
    "traces": suite_traces,
    "projectors": suite_projectors,
    "decomp": suite_decomp,
    "duality": suite_duality,
    "qdim": suite_qdim,
    "oracle": suite_oracle,
}

DEFAULT_FAMILIES = ["sl", "so", "sp", "exceptional"]


def run_suite(name: str, quick: bool = False, families=None, n_range=None, k=None, timings: bool = False) -> VerifyReport:
    """Run one suite (or ``"all"``) and collect a report."""
    if name != "all" and name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; expected one of {', '.join(list(SUITES) + ['all'])}")
    ranges = default_ranges(quick)
    if n_range is not None:
        ranges["n"] = list(n_range)
    if k is not None:
        ranges["k"] = k
    fams = list(families) if families else DEFAULT_FAMILIES
    c = _Collector(timings)
    for s in SUITES if name == "all" else [name]:
        SUITES[s](c, ranges, fams)
    return VerifyReport(c.entries)
