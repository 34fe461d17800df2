"""Command-line interface: ``casimirlab <command> [options]``.

Exit status is 0 on success, 1 when a verification fails and 2 for usage or
precondition errors.  Rationals print exactly unless ``--approx`` is given.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from decimal import Decimal, localcontext
from fractions import Fraction

from . import fixtures
from .casimir import AlgebraId

__all__ = ["main", "build_parser"]

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- rendering -----------------------------------------------------------------


def _fmt_rational(x: Fraction, approx: bool, json_mode: bool) -> str:
    if approx:
        with localcontext() as ctx:
            ctx.prec = 20
            return str(Decimal(x.numerator) / Decimal(x.denominator))
    if json_mode:
        return f"{x.numerator}/{x.denominator}"
    return str(x)


def _plain(obj, approx: bool, json_mode: bool):
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, Fraction):
        return _fmt_rational(obj, approx, json_mode)
    if isinstance(obj, int):
        return obj if json_mode else str(obj)
    if isinstance(obj, dict):
        return {str(k): _plain(v, approx, json_mode) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v, approx, json_mode) for v in obj]
    return str(obj)


class Result:
    """What a command produced: canonical ``data``, an optional ``table`` and a text form."""

    def __init__(self, data: dict, table: list | None = None, text=None, status: int = EXIT_OK):
        self.data, self.table, self.text, self.status = data, table, text, status

    def render(self, fmt: str, approx: bool) -> str:
        if fmt == "json":
            return json.dumps(_plain(self.data, approx, True), indent=2)
        rows = self.table
        if rows is None:
            rows = [{"key": k, "value": v} for k, v in self.data.items()]
        rows = [_plain(r, approx, False) for r in rows]
        cols = list(dict.fromkeys(k for r in rows for k in r))
        cell = lambda v: "" if v is None else (json.dumps(v) if isinstance(v, (dict, list)) else str(v))
        if fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(cols)
            for r in rows:
                w.writerow([cell(r.get(c)) for c in cols])
            return buf.getvalue().rstrip("\n")
        if fmt == "md":
            lines = ["| " + " | ".join(cols) + " |", "|" + "---|" * len(cols)]
            for r in rows:
                lines.append("| " + " | ".join(cell(r.get(c)).replace("|", "\\|") for c in cols) + " |")
            return "\n".join(lines)
        text = self.text(approx) if callable(self.text) else self.text
        if text is None:
            text = "\n".join(f"{r['key']}: {cell(r['value'])}" for r in rows) if self.table is None else self.render("md", approx)
        return text


# -- argument helpers ----------------------------------------------------------


def parse_int_range(text: str | None, default=None) -> list[int] | None:
    """``"3"``, ``"1..4"`` or ``"1,3,5"``."""
    if text is None:
        return default
    out = []
    for piece in str(text).split(","):
        piece = piece.strip()
        if ".." in piece:
            lo, hi = piece.split("..", 1)
            try:
                a, b = int(lo), int(hi)
            except ValueError:
                raise UsageError(f"malformed range {piece!r}") from None
            if a > b:
                raise UsageError(f"empty range {piece!r}")
            out.extend(range(a, b + 1))
        else:
            try:
                out.append(int(piece))
            except ValueError:
                raise UsageError(f"expected an integer, got {piece!r}") from None
    return out


def _one_int(text, name, default=None) -> int | None:
    vals = parse_int_range(text)
    if vals is None:
        return default
    if len(vals) != 1:
        raise UsageError(f"--{name} takes a single integer here")
    return vals[0]


def _algebra(args) -> AlgebraId:
    if not args.algebra:
        raise UsageError("--algebra is required")
    return AlgebraId.parse(args.algebra, _one_int(args.N, "N"))


def _label(args, g: AlgebraId):
    """Label from ``--label`` / ``--weight``; sl accepts a partition or a composite pair."""
    from .composite import CompositePair
    from .labels import parse_composite, parse_partition, parse_weight

    text = args.weight if args.weight is not None else args.label
    if text is None:
        raise UsageError("a representation is required (--label or --weight)")
    if g.family == "sl":
        if text.lstrip().startswith("("):
            return CompositePair(*parse_composite(text))
        return parse_partition(text)
    if g.family in ("so", "sp"):
        return parse_partition(text)
    text = text.strip()
    if text.startswith("["):
        raw = [int(x) for x in text.strip("[]").split(",") if x.strip()]
        if len(raw) != g.rank:
            raise UsageError(f"{g} needs {g.rank} Dynkin coefficients, got {len(raw)}")
        return tuple(raw)
    return parse_weight(text, g.rank)


def _label_str(g, label) -> str:
    from .composite import CompositePair
    from .labels import format_label, format_partition

    if g.family == "sl" and not isinstance(label, CompositePair):
        return format_partition(label)
    return format_label(g.family, label)


# -- commands ------------------------------------------------------------------


def cmd_dim(args) -> Result:
    from .composite import CompositePair, dim_composite
    from .rootsys import build, weyl_dim
    from .young import dim_sl, dim_so, dim_sp

    g = _algebra(args)
    if args.universal:
        from .vogel import dim_Yk_universal, params

        k = _one_int(args.k, "k")
        if k is None:
            raise UsageError("--universal needs --k")
        val = dim_Yk_universal(params(g), k, primed=args.primed)
        name = f"Y_{k}'" if args.primed else f"Y_{k}"
        return Result({"algebra": str(g), "representation": name, "dimension": val}, text=lambda a: _fmt_rational(val, a, False))
    lab = _label(args, g)
    if g.family == "sl":
        val = dim_composite(lab, g.N) if isinstance(lab, CompositePair) else dim_sl(g.N, lab)
    elif g.family == "so":
        val = dim_so(g.N, lab)
    elif g.family == "sp":
        val = dim_sp(g.N, lab)
    else:
        rs = build(g)
        val = weyl_dim(rs, rs.weight(lab))
    return Result({"algebra": str(g), "label": _label_str(g, lab), "dimension": val}, text=lambda a: _fmt_rational(val, a, False))


def cmd_casimir(args) -> Result:
    from .casimir import casimir_so, casimir_sp, casimir_sl
    from .rootsys import build, casimir_weyl

    g = _algebra(args)
    if args.label is None and args.weight is None:
        from .vogel import c2_Yn_universal, params

        n = _one_int(args.n, "n")
        if n is None:
            raise UsageError("give a representation (--label/--weight) or --n for the universal Y_n value")
        val = c2_Yn_universal(params(g), n, primed=args.primed)
        data = {"algebra": str(g), "representation": f"Y_{n}'" if args.primed else f"Y_{n}", "normalized": val}
        return Result(data, text=lambda a: _fmt_rational(val, a, False))
    lab = _label(args, g)
    if g.family == "sl":
        cv = casimir_sl(g.N, lab)
    elif g.family == "so":
        cv = casimir_so(g.N, lab)
    elif g.family == "sp":
        cv = casimir_sp(g.N, lab)
    else:
        rs = build(g)
        cv = casimir_weyl(rs, rs.weight(lab))
    return Result({"algebra": str(g), "label": _label_str(g, lab), "raw": cv.raw, "normalized": cv.normalized})


def _decomp_result(g_label: str, d, g: AlgebraId | None, extra: dict | None = None) -> Result:
    from .decomp import label_dimension
    from .labels import format_label

    rows = []
    total = Fraction(0)
    for lab, m in d.items():
        row = {"label": format_label(d.family, lab), "multiplicity": m}
        if g is not None:
            dim = label_dimension(g, lab)
            row["dimension"] = dim
            total += m * dim
        rows.append(row)
    data = {"algebra": g_label, **(extra or {}), "terms": rows, "distinct": len(rows), "total_multiplicity": d.total()}
    if g is not None:
        data["total_dimension"] = total
    return Result(data, table=rows)


def cmd_decompose(args) -> Result:
    from .composite import CompositePair
    from .decomp import Decomposition, ad_power, mult_by_adjoint, so_ad_power, yn_times_ad

    text = (args.algebra or "sl").strip().lower()
    # large-N decompositions need no N; give one to get dimensions
    g = None if text in ("sl", "so", "sp") and args.N is None else AlgebraId.parse(text, _one_int(args.N, "N"))
    fam = g.family if g else text
    k = _one_int(args.k, "k")
    n = _one_int(args.n, "n")
    if n is not None:
        if g is None:
            raise UsageError("Y_n x ad needs --N for classical algebras")
        return _decomp_result(str(g), yn_times_ad(g, n), g, {"product": f"Y_{n} x ad"})
    if fam == "sl":
        if args.label is not None:
            lab = _label(args, AlgebraId("sl", 2))
            if not isinstance(lab, CompositePair):
                raise UsageError("sl decompose --label expects a composite pair like '([2],[1,1])'")
            d = Decomposition("sl", {CompositePair(lab.upper, lab.lower): 1})
            for _ in range(k or 1):
                d = mult_by_adjoint(d)
            return _decomp_result(str(g) if g else "sl", d, g, {"product": f"{lab} x ad^{k or 1}"})
        if k is None:
            raise UsageError("decompose needs --k, --n or --label")
        return _decomp_result(str(g) if g else "sl", ad_power(k), g, {"product": f"ad^{k}"})
    if fam == "so":
        if k is None:
            raise UsageError("so decompose needs --k")
        return _decomp_result(str(g) if g else "so", so_ad_power(k), g, {"product": f"ad^{k}"})
    raise UsageError(f"nothing to decompose for {args.algebra} with these options")


def cmd_branch(args) -> Result:
    from .decomp import branch_box_Yn, label_dimension
    from .labels import format_label

    g = _algebra(args)
    n = _one_int(args.n, "n")
    if n is None:
        raise UsageError("branch needs --n")
    d = branch_box_Yn(g, n, primed=args.primed)
    eig = {}
    if not args.primed and g.family != "e8":
        from .vogel import dims_box_Yn

        eig = {m.label: m.eigenvalue for m in dims_box_Yn(g, n) if m.label}
    rows = []
    for lab, m in d.items():
        s = format_label(g.family, lab)
        row = {"label": s, "multiplicity": m, "dimension": label_dimension(g, lab)}
        if s in eig:
            row["eigenvalue"] = eig[s]
        rows.append(row)
    name = "ad" if g.family == "e8" and not args.primed else "box"
    data = {"algebra": str(g), "product": f"{name} x Y_{n}{chr(39) if args.primed else ''}", "terms": rows}
    data["total_dimension"] = sum((r["dimension"] * r["multiplicity"] for r in rows), Fraction(0))
    return Result(data, table=rows)


def cmd_universal(args) -> Result:
    from .vogel import c2_Yn_universal, dim_Yk_universal, dim_g_universal, dims_box_Yn, params, vogel_row

    g = _algebra(args)
    p = params(g, swapped=args.swapped)
    row = vogel_row(g)
    data = {
        "algebra": str(g),
        "swapped": args.swapped,
        "alpha": p.alpha, "beta": p.beta, "gamma": p.gamma, "t": p.t,
        "alpha_hat": p.alpha_hat, "beta_hat": p.beta_hat, "gamma_hat": p.gamma_hat,
        "dim_g": dim_g_universal(p),
        "dim_box": row["dim_box"],
        "c2_box": row["c2_box"],
    }
    n = _one_int(args.n, "n")
    if n is None:
        return Result(data)
    data["n"] = n
    data["dim_Yn"] = dim_Yk_universal(params(g), n)
    data["c2_Yn"] = c2_Yn_universal(params(g), n)
    rows = [
        {"index": m.index, "eigenvalue": m.eigenvalue, "dimension": m.dimension, "label": m.label}
        for m in dims_box_Yn(g, n, swapped=args.swapped)
    ]
    data["multiplets"] = rows
    return Result(data, table=rows)


def cmd_verify(args) -> Result:
    from .verify import run_suite

    fams = [f.strip() for f in args.families.split(",")] if args.families else None
    report = run_suite(
        args.suite,
        quick=args.quick,
        families=fams,
        n_range=parse_int_range(args.n),
        k=_one_int(args.k, "k"),
        timings=args.timings,
    )

    def text(_approx):
        by: dict = {}
        for e in report.entries:
            by.setdefault(e.check_id, {"pass": 0, "fail": 0, "skipped": 0})[e.status] += 1
        lines = [f"{cid}: {c['pass']} pass, {c['fail']} fail, {c['skipped']} skipped" for cid, c in by.items()]
        for e in report.entries:
            if e.status == "fail":
                lines.append(f"FAIL {e.check_id} {e.algebra} {json.dumps(e.parameters, sort_keys=True)}: {e.lhs} != {e.rhs}")
        c = report.counts()
        lines.append(f"total: {c['pass']} pass, {c['fail']} fail, {c['skipped']} skipped")
        return "\n".join(lines)

    res = Result(report.to_json(), table=[e.to_json() for e in report.entries], text=text)
    res.status = EXIT_OK if report.ok else EXIT_FAIL
    return res


def cmd_ladder(args) -> Result:
    from .vogel import ladder_factor

    g = _algebra(args)
    L = _one_int(args.L, "L")
    if L is None:
        raise UsageError("ladder needs --L")
    val = ladder_factor(g, L)
    data = {"algebra": str(g), "L": L, "ladder_factor": val}
    status = EXIT_OK
    if args.oracle:
        from . import matrixoracle as mo

        if g.family != "sl" or g.N > mo.MAX_N:
            raise UsageError(f"--oracle needs sl(N) with N <= {mo.MAX_N}")
        d, a, k = mo.build_sl(g.N)
        C = mo.split_casimir_matrix(d, a, k)
        matrix_val = mo.trace_power_matrix(C, L) / (g.N * g.N - 1)
        data["oracle"] = matrix_val
        data["agree"] = matrix_val == val
        status = EXIT_OK if data["agree"] else EXIT_FAIL
    text = None if args.oracle else (lambda a: _fmt_rational(val, a, False))
    return Result(data, text=text, status=status)


def cmd_oracle(args) -> Result:
    from . import matrixoracle as mo
    from .vogel import char_identity_roots, dims_box_Yn, params, trace_power

    N = _one_int(args.N, "N")
    if N is None:
        raise UsageError("oracle needs --N")
    n = _one_int(args.n, "n", 1)
    g = AlgebraId("sl", N)
    d, a, k = mo.build_sl(N)
    rep = a if n == 1 else mo.cartan_power_rep(N, n)
    C = mo.split_casimir_matrix(d, rep, k)
    roots = char_identity_roots(params(g), n)
    spec = mo.spectrum(C, roots)
    universal = {}
    for m in dims_box_Yn(g, n):
        if m.dimension:
            universal[m.eigenvalue] = int(m.dimension)
    rows = [
        {"eigenvalue": r, "matrix_multiplicity": spec.get(r, 0), "universal_dimension": universal.get(r, 0)}
        for r in sorted(set(spec) | set(universal))
    ]
    traces = [{"L": L, "matrix": mo.trace_power_matrix(C, L), "universal": trace_power(g, n, L)} for L in range(7)]
    agree = all(r["matrix_multiplicity"] == r["universal_dimension"] for r in rows) and all(t["matrix"] == t["universal"] for t in traces)
    data = {
        "algebra": str(g),
        "n": n,
        "dim": C.dim,
        "spectrum": rows,
        "traces": traces,
        "char_identity_annihilates": mo.annihilates(C, roots),
        "agree": agree,
    }
    return Result(data, table=rows, status=EXIT_OK if agree and data["char_identity_annihilates"] else EXIT_FAIL)


def cmd_qverify(args) -> Result:
    from .exact import parse_rational
    from .qdim import holds_at, identity1_terms, identity2_terms, required_samples, verify_q_identity_1, verify_q_identity_2

    qs = [parse_rational(x) for x in args.q.split(",")] if args.q else []
    Ns = parse_int_range(args.N)
    if not Ns:
        raise UsageError("qverify needs --N")
    entries = []
    for N in Ns:
        if args.M is not None:
            cases = [("identity2", "M", M, identity2_terms(N, M), lambda M=M: verify_q_identity_2(N, M, qs)) for M in parse_int_range(args.M)]
        else:
            ns = parse_int_range(args.n, [1])
            cases = [("identity1", "n", n, identity1_terms(N, n), lambda n=n: verify_q_identity_1(N, n, qs)) for n in ns]
        for ident, key, val, terms, proof in cases:
            for q in qs:
                ok = holds_at(terms, q)
                entries.append({"identity": ident, "N": N, key: val, "q": Fraction(q), "status": "pass" if ok else "fail"})
            ok = proof()
            entries.append({
                "identity": ident, "N": N, key: val, "q": "laurent",
                "samples_required": required_samples(terms), "status": "pass" if ok else "fail",
            })
    passed = all(e["status"] == "pass" for e in entries)
    return Result({"entries": entries, "ok": passed}, table=entries, status=EXIT_OK if passed else EXIT_FAIL)


def cmd_fixtures(args) -> Result:
    base = fixtures.fixtures_dir(args.fixtures_dir)
    if args.action == "rehash":
        if args.fixtures_dir is None:
            raise UsageError("rehash rewrites a manifest; name the directory with --fixtures-dir")
        manifest = fixtures.rehash(base)
        return Result({"directory": str(base), "files": manifest["files"]})
    try:
        manifest = json.loads((base / fixtures.MANIFEST).read_text())
    except FileNotFoundError:
        raise fixtures.FixtureError(f"no {fixtures.MANIFEST} in fixtures directory {base}") from None
    rows = []
    for fname in sorted(manifest["files"]):
        try:
            fixtures.load(fname[: -len(".json")], base)
            rows.append({"file": fname, "status": "ok"})
        except fixtures.FixtureError as e:
            rows.append({"file": fname, "status": f"fail: {e}"})
    bad = any(r["status"] != "ok" for r in rows)
    return Result({"directory": str(base), "files": rows}, table=rows, status=1 if bad else 0)


COMMANDS = {
    "dim": cmd_dim,
    "casimir": cmd_casimir,
    "decompose": cmd_decompose,
    "branch": cmd_branch,
    "universal": cmd_universal,
    "verify": cmd_verify,
    "ladder": cmd_ladder,
    "oracle": cmd_oracle,
    "qverify": cmd_qverify,
    "fixtures": cmd_fixtures,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv", "md"], default="text", help="output format (json is canonical)")
    common.add_argument("--fixtures-dir", help=f"fixtures directory (default: packaged; env {fixtures.ENV_VAR})")
    common.add_argument("--approx", action="store_true", help="render rationals as decimals")

    alg = argparse.ArgumentParser(add_help=False)
    alg.add_argument("--algebra", help="sl, so, sp, g2, f4, e6, e7, e8 (or e.g. 'sl(5)')")
    alg.add_argument("--N", help="N for classical algebras")

    rep = argparse.ArgumentParser(add_help=False)
    rep.add_argument("--label", help="partition '[2,1^3]', sl composite '([1],[1])', or Dynkin list")
    rep.add_argument("--weight", help="exceptional weight like '1*w2 + 1*w1'")

    p = argparse.ArgumentParser(prog="casimirlab", description="Exact representation data for simple Lie algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("dim", parents=[common, alg, rep], help="dimension of an irrep or of Y_k")
    s.add_argument("--universal", action="store_true", help="dim Y_k from the universal formula")
    s.add_argument("--k")
    s.add_argument("--primed", action="store_true")

    s = sub.add_parser("casimir", parents=[common, alg, rep], help="quadratic Casimir (raw and normalized)")
    s.add_argument("--n", help="universal c2(Y_n) when no label is given")
    s.add_argument("--primed", action="store_true")

    s = sub.add_parser("decompose", parents=[common, alg, rep], help="ad^k, (mu,lam) x ad^k or Y_n x ad")
    s.add_argument("--k")
    s.add_argument("--n")

    s = sub.add_parser("branch", parents=[common, alg], help="box x Y_n (or box x Y_n')")
    s.add_argument("--n")
    s.add_argument("--primed", action="store_true")

    s = sub.add_parser("universal", parents=[common, alg], help="Vogel parameters and the four multiplets")
    s.add_argument("--n")
    s.add_argument("--swapped", action="store_true")

    s = sub.add_parser("verify", parents=[common], help="run verification suites")
    s.add_argument("suite", help="dims, casimir, traces, projectors, decomp, duality, qdim, oracle or all")
    s.add_argument("--quick", action="store_true")
    s.add_argument("--families", help="comma list, e.g. sl,so,sp,exceptional")
    s.add_argument("--n", help="n range, e.g. 1..4")
    s.add_argument("--k", help="highest adjoint power for the decomp suite")
    s.add_argument("--timings", action="store_true", help="record elapsed_ms (output is then not reproducible)")

    s = sub.add_parser("ladder", parents=[common, alg], help="ladder colour factor")
    s.add_argument("--L")
    s.add_argument("--oracle", action="store_true", help="cross-check with explicit sl(N) matrices")

    s = sub.add_parser("oracle", parents=[common], help="explicit split-Casimir matrix on box x Y_n for sl(N)")
    s.add_argument("--N")
    s.add_argument("--n")

    s = sub.add_parser("qverify", parents=[common], help="check the two q-identities")
    s.add_argument("--N")
    s.add_argument("--n")
    s.add_argument("--M", help="check the symmetric identity with this M instead")
    s.add_argument("--q", help="comma list of rational sample points")

    s = sub.add_parser("fixtures", parents=[common], help="check or rehash the fixture manifest")
    s.add_argument("action", choices=["check", "rehash"])
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0) and EXIT_USAGE
    saved = os.environ.get(fixtures.ENV_VAR)
    if args.fixtures_dir:
        os.environ[fixtures.ENV_VAR] = args.fixtures_dir
    try:
        if args.command == "verify" and args.suite not in ("dims", "casimir", "traces", "projectors", "decomp", "duality", "qdim", "oracle", "all"):
            raise UsageError(f"unknown suite {args.suite!r}")
        result = COMMANDS[args.command](args)
    except (UsageError, ValueError, fixtures.FixtureError, ArithmeticError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        # the override is scoped to this invocation
        if saved is None:
            os.environ.pop(fixtures.ENV_VAR, None)
        else:
            os.environ[fixtures.ENV_VAR] = saved
    print(result.render(args.format, args.approx))
    return result.status


if __name__ == "__main__":
    sys.exit(main())
