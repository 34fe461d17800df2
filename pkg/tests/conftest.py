import os
from fractions import Fraction

from hypothesis import settings, strategies as st

from casimirlab.composite import CompositePair

F = Fraction

settings.register_profile("default", max_examples=60, deadline=None)
settings.register_profile("thorough", max_examples=500, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def partitions(draw, max_size=8, max_rows=None):
    n = draw(st.integers(min_value=0, max_value=max_size))
    rows = []
    while n:
        cap = min(n, rows[-1]) if rows else n
        r = draw(st.integers(min_value=1, max_value=cap))
        rows.append(r)
        n -= r
        if max_rows is not None and len(rows) == max_rows:
            break
    return tuple(rows)


@st.composite
def composite_pairs(draw, max_size=3, balanced=False):
    mu = draw(partitions(max_size=max_size))
    if balanced:
        lam = draw(partitions(max_size=sum(mu)).filter(lambda p: sum(p) == sum(mu)))
    else:
        lam = draw(partitions(max_size=max_size))
    return CompositePair(mu, lam)


rationals = st.fractions(max_denominator=50).filter(lambda x: abs(x) < 1000)
nonzero_rationals = st.fractions(min_value=Fraction(-9), max_value=Fraction(9), max_denominator=12).filter(lambda x: x != 0)


# Vogel table typed in by hand: (alpha, beta, gamma, t, dim box, dim g, c2 box)
VOGEL_ROWS = {
    "sl": lambda N: (-2, 2, N, N, N, N * N - 1, F(N * N - 1, 2 * N * N)),
    "so": lambda N: (-2, 4, N - 4, N - 2, N, F(N * (N - 1), 2), F(N - 1, 2 * (N - 2))),
    "sp": lambda N: (-2, 1, F(N + 4, 2), F(N + 2, 2), N, F(N * (N + 1), 2), F(N + 1, 2 * (N + 2))),
    "g2": lambda N: (-2, F(10, 3), F(8, 3), 4, 7, 14, F(1, 2)),
    "f4": lambda N: (-2, 5, 6, 9, 26, 52, F(2, 3)),
    "e6": lambda N: (-2, 6, 8, 12, 27, 78, F(13, 18)),
    "e7": lambda N: (-2, 8, 12, 18, 56, 133, F(19, 24)),
    "e8": lambda N: (-2, 12, 20, 30, 248, 248, F(1)),
}


# acceptance criteria record their verdicts here; printed once at the end of the run
ACCEPTANCE: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num:>2}: {'PASS' if ok else 'FAIL'}  {text}")
