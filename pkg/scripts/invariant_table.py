"""Print tensor, exterior, square and multiplier dimensions for the reference family.

    python scripts/invariant_table.py [--char P]
"""

import argparse

from supertensor.exactlin import Field
from supertensor.gamma import gamma_of_abelianization
from supertensor.report import reference_family
from supertensor.superalg import derived_subalgebra
from supertensor.tensor import exterior_square, multiplier_dim, square_ideal, tensor_square


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--char", type=int, default=0)
    args = ap.parse_args()
    cols = ("algebra", "dim", "L^2", "L⊗L", "L∧L", "L□L", "Γ(L^ab)", "M(L)")
    print("  ".join(f"{c:>14}" for c in cols))
    for L in reference_family(Field(args.char)):
        row = (L.name, L.dim, derived_subalgebra(L).dim, tensor_square(L).dim, exterior_square(L).dim,
               square_ideal(L).dim, gamma_of_abelianization(L), multiplier_dim(L))
        print("  ".join(f"{str(x):>14}" for x in row))


if __name__ == "__main__":
    main()
