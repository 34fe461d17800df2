"""Print the four universal multiplets of box x Y_n for every algebra.

Run: python demos/universal_multiplets.py [n]
"""

import sys

from casimirlab.casimir import AlgebraId
from casimirlab.vogel import dims_box_Yn, dim_Yk_universal, params, vogel_row


def main(n: int = 2) -> None:
    algebras = [AlgebraId("sl", 5), AlgebraId("so", 9), AlgebraId("sp", 8)]
    algebras += [AlgebraId(f) for f in ("g2", "f4", "e6", "e7")]
    for g in algebras:
        dim_y = dim_Yk_universal(params(g), n)
        print(f"{g}: box x Y_{n}, dim box = {vogel_row(g)['dim_box']}, dim Y_{n} = {dim_y}")
        for m in dims_box_Yn(g, n, swapped=g.classical):
            label = m.label or "-"
            print(f"  {m.index:8} a = {str(m.eigenvalue):>7}  dim = {str(m.dimension):>9}  {label}")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 2)
