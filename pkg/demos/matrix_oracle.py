"""Build the split Casimir on box x ad for sl(3) as an exact matrix and
compare it with the universal predictions.

Run: python demos/matrix_oracle.py
"""

from casimirlab.casimir import AlgebraId
from casimirlab.matrixoracle import build_sl, spectrum, split_casimir_matrix, trace_power_matrix
from casimirlab.vogel import char_identity_roots, dims_box_Yn, ladder_factor, params

N = 3
g = AlgebraId("sl", N)
box, ad, killing = build_sl(N)
c = split_casimir_matrix(box, ad, killing)
print(f"split Casimir on box x ad of {g}: {c.dim} x {c.dim} rational matrix")

found = spectrum(c, char_identity_roots(params(g), 1))
universal = {m.eigenvalue: m.dimension for m in dims_box_Yn(g, 1) if m.dimension}
for a in sorted(found):
    print(f"  eigenvalue {str(a):>5}: multiplicity {found[a]:>2}, universal dimension {universal[a]}")

for L in range(5):
    tr = trace_power_matrix(c, L)
    print(f"  Tr C^{L} = {str(tr):>6}   dim g * ladder = {(N * N - 1) * ladder_factor(g, L)}")
