"""Parsing and printing of irrep labels.

Accepted syntaxes::

    [4,2,2]  [2^3,1^2]  []  ∅          partitions
    ([3,1],[4,2])                      composite sl(N) pairs
    1*w2 + 2*w1,  w1+w5,  0            weights in fundamental-weight basis
"""

from __future__ import annotations

import re

from . import fixtures
from .composite import CompositePair
from .young import partition

__all__ = [
    "LabelSyntaxError",
    "parse_partition",
    "format_partition",
    "parse_composite",
    "parse_weight",
    "format_weight",
    "parse_label",
    "format_label",
    "instantiate_label",
]


class LabelSyntaxError(ValueError):
    def __init__(self, text: str, pos: int, msg: str):
        super().__init__(f"{msg} at position {pos} in {text!r}")
        self.text, self.pos = text, pos


_PART_ITEM = re.compile(r"\s*(\d+)\s*(?:\^\s*(\d+))?\s*")


def _parse_partition_at(text: str, pos: int) -> tuple[tuple[int, ...], int]:
    while pos < len(text) and text[pos].isspace():
        pos += 1
    if text.startswith("∅", pos):
        return (), pos + 1
    if pos >= len(text) or text[pos] != "[":
        raise LabelSyntaxError(text, pos, "expected '['")
    pos += 1
    rows: list[int] = []
    if text[pos:].lstrip().startswith("]"):
        return (), text.index("]", pos) + 1
    while True:
        m = _PART_ITEM.match(text, pos)
        if not m or not m.group(1):
            raise LabelSyntaxError(text, pos, "expected a row length")
        rows.extend([int(m.group(1))] * int(m.group(2) or 1))
        pos = m.end()
        if pos < len(text) and text[pos] == ",":
            pos += 1
            continue
        if pos < len(text) and text[pos] == "]":
            pos += 1
            break
        raise LabelSyntaxError(text, pos, "expected ',' or ']'")
    try:
        return partition(rows), pos
    except ValueError as exc:
        raise LabelSyntaxError(text, 0, str(exc)) from None


def _expect_end(text: str, pos: int) -> None:
    if text[pos:].strip():
        raise LabelSyntaxError(text, pos, "trailing characters")


def parse_partition(text: str) -> tuple[int, ...]:
    lam, pos = _parse_partition_at(text, 0)
    _expect_end(text, pos)
    return lam


def format_partition(lam) -> str:
    return "[" + ",".join(map(str, lam)) + "]"


def parse_composite(text: str) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Parse ``"(upper,lower)"`` into a pair of partitions."""
    pos = len(text) - len(text.lstrip())
    if not text.startswith("(", pos):
        raise LabelSyntaxError(text, pos, "expected '('")
    upper, pos = _parse_partition_at(text, pos + 1)
    while pos < len(text) and text[pos].isspace():
        pos += 1
    if not text.startswith(",", pos):
        raise LabelSyntaxError(text, pos, "expected ','")
    lower, pos = _parse_partition_at(text, pos + 1)
    while pos < len(text) and text[pos].isspace():
        pos += 1
    if not text.startswith(")", pos):
        raise LabelSyntaxError(text, pos, "expected ')'")
    _expect_end(text, pos + 1)
    return upper, lower


_WEIGHT_TERM = re.compile(r"\s*(?:(\d+)\s*\*?\s*)?w(\d+)\s*")


def parse_weight(text: str, rank: int) -> tuple[int, ...]:
    """Parse ``"1*w2 + 2*w1"`` into Dynkin coefficients of length ``rank``."""
    coeffs = [0] * rank
    if text.strip() == "0":
        return tuple(coeffs)
    pos = 0
    while True:
        m = _WEIGHT_TERM.match(text, pos)
        if not m:
            raise LabelSyntaxError(text, pos, "expected a term like '2*w1'")
        idx = int(m.group(2))
        if not 1 <= idx <= rank:
            raise LabelSyntaxError(text, m.start(2), f"fundamental weight index must be in 1..{rank}")
        coeffs[idx - 1] += int(m.group(1) or 1)
        pos = m.end()
        if pos == len(text):
            return tuple(coeffs)
        if text[pos] != "+":
            raise LabelSyntaxError(text, pos, "expected '+'")
        pos += 1


def format_weight(coeffs) -> str:
    terms = [f"{c}*w{i}" for i, c in enumerate(coeffs, start=1) if c]
    return " + ".join(terms) if terms else "0"


def parse_label(family: str, text: str, rank: int | None = None):
    """Family-tagged label: :class:`CompositePair` for sl, a partition for
    so/sp, Dynkin coefficients for the exceptional algebras (needs ``rank``)."""
    if family == "sl":
        return CompositePair(*parse_composite(text))
    if family in ("so", "sp"):
        return parse_partition(text)
    if rank is None:
        raise ValueError(f"rank required to parse a {family} weight")
    return parse_weight(text, rank)


def format_label(family: str, label) -> str:
    if family == "sl":
        return str(label)
    if family in ("so", "sp"):
        return format_partition(label)
    return format_weight(label)


def instantiate_label(template: str, family: str, rank: int | None = None, **env):
    """Fill a fixture template; ``None`` when the term is absent for these values.

    A term is absent when a slot goes negative or when the filled rows do not
    form a partition (e.g. ``[n-1,1]`` at ``n = 1``).
    """
    text = fixtures.instantiate(template, **env)
    if text is None:
        return None
    try:
        return parse_label(family, text, rank)
    except LabelSyntaxError:
        if family in ("so", "sp", "sl"):
            return None
        raise
