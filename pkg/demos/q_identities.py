"""Evaluate the q-deformed sl(N) branching of box x Y_n at a few q and
check the two q-identities as Laurent-polynomial equalities.

Run: python demos/q_identities.py
"""

from fractions import Fraction

from casimirlab.exact import qnum
from casimirlab.qdim import (
    identity1_terms,
    qdim_branch,
    qdim_sl,
    required_samples,
    verify_q_identity_1,
    verify_q_identity_2,
    yn_diagram,
)

N, n = 5, 2
for q in (Fraction(1), Fraction(2), Fraction(3, 7)):
    parts = [qdim_branch(N, n, k, q) for k in (1, 2, 3)]
    total = qnum(N, q) * qdim_sl(N, yn_diagram(N, n), q)
    print(f"q = {q}: parts {[str(p) for p in parts]}, sum matches [N]_q dim_q Y_n: {sum(parts) == total}")

print(f"identity 1 at N={N}, n={n} needs {required_samples(identity1_terms(N, n))} sample points")
print("identity 1, N = 2..10, n = 1..5:", all(verify_q_identity_1(a, b) for a in range(2, 11) for b in range(1, 6)))
print("identity 2, N, M = 0..10:", all(verify_q_identity_2(a, b) for a in range(11) for b in range(11)))
