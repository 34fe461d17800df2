"""Versioned JSON fixtures holding the tables used as ground truth.

Every fixture directory carries ``manifest.json`` with a SHA-256 digest per
file; digests are checked before a fixture is parsed.  The directory is the
packaged one unless overridden by an argument or ``CASIMIRLAB_FIXTURES``.
"""

from __future__ import annotations

import ast
import hashlib
import json
import operator
import os
import re
from fractions import Fraction
from importlib import resources
from pathlib import Path

__all__ = [
    "FixtureError",
    "fixtures_dir",
    "load",
    "rehash",
    "eval_expr",
    "instantiate",
]

ENV_VAR = "CASIMIRLAB_FIXTURES"
MANIFEST = "manifest.json"


class FixtureError(RuntimeError):
    pass


def fixtures_dir(override: str | os.PathLike | None = None) -> Path:
    if override is not None:
        return Path(override)
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(str(resources.files("casimirlab") / "fixtures"))


def _digest(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


_cache: dict = {}


def load(name: str, directory: str | os.PathLike | None = None) -> dict:
    """Load fixture ``name`` (without ``.json``) after verifying its checksum."""
    base = fixtures_dir(directory)
    fname = f"{name}.json"
    path = base / fname
    try:
        manifest = json.loads((base / MANIFEST).read_text())
    except FileNotFoundError:
        raise FixtureError(f"no {MANIFEST} in fixtures directory {base}") from None
    expected = manifest.get("files", {}).get(fname)
    if expected is None:
        raise FixtureError(f"fixture {fname} is not listed in {base / MANIFEST}")
    if not path.exists():
        raise FixtureError(f"fixture file {path} is missing")
    actual = _digest(path)
    if actual != expected:
        raise FixtureError(f"checksum mismatch for {path}: manifest {expected[:12]}..., file {actual[:12]}...")
    key = (str(path.resolve()), actual)
    if key not in _cache:
        data = json.loads(path.read_text())
        if data.get("fixture") != name:
            raise FixtureError(f"{path} declares fixture {data.get('fixture')!r}, expected {name!r}")
        _cache[key] = data
    return _cache[key]


def rehash(directory: str | os.PathLike | None = None) -> dict:
    """Rewrite the manifest of ``directory`` from the files present."""
    base = fixtures_dir(directory)
    files = {p.name: _digest(p) for p in sorted(base.glob("*.json")) if p.name != MANIFEST}
    manifest = {"version": 1, "algorithm": "sha256", "files": files}
    (base / MANIFEST).write_text(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
    return manifest


_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
    ast.Pow: operator.pow,
}


def eval_expr(expr: str, **env) -> Fraction:
    """Evaluate a small arithmetic expression exactly.

    Supports integers, named variables, ``+ - * /`` and ``^`` (or ``**``)
    with integer exponents.  Nothing else is accepted.
    """

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            return Fraction(node.value)
        if isinstance(node, ast.Name):
            if node.id not in env:
                raise FixtureError(f"unknown variable {node.id!r} in {expr!r}")
            return Fraction(env[node.id])
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            left, right = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Pow) and right.denominator != 1:
                raise FixtureError(f"non-integer exponent in {expr!r}")
            if isinstance(node.op, ast.Pow):
                return left ** int(right)
            return _BINOPS[type(node.op)](left, right)
        raise FixtureError(f"unsupported syntax in expression {expr!r}")

    return ev(ast.parse(expr.replace("^", "**"), mode="eval"))


_SLOT = re.compile(r"\{([^{}]*)\}")


def instantiate(template: str, **env) -> str | None:
    """Fill ``{expr}`` slots of a label template.

    Returns ``None`` when a slot in a weight term is negative, which the
    tables use for terms that are absent at small ``n``.
    """

    def fill(m):
        val = eval_expr(m.group(1), **env)
        if val.denominator != 1:
            raise FixtureError(f"slot {m.group(0)} is not an integer in {template!r}")
        if val < 0:
            raise _Absent
        return str(int(val))

    try:
        return _SLOT.sub(fill, template)
    except _Absent:
        return None


class _Absent(Exception):
    pass
