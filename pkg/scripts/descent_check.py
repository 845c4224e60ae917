"""Check the descent algebra map for B_n with I = {t} and print timings."""
import argparse
import time

from semicox.catalog import builtin
from semicox.decomp import Decomposition
from semicox.descent import DescentMap


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("types", nargs="*", default=["B2", "B3", "B4"])
    ap.add_argument("--I", default="t", help="comma-separated generators in I")
    args = ap.parse_args()
    I = [s for s in args.I.split(",") if s]

    for label in args.types:
        t0 = time.perf_counter()
        R = DescentMap(Decomposition(builtin(label), I))
        pairs = R.verify_morphism()
        rank, dim = R.image_fixed_check()
        diagram = R.verify_diagram()
        print(
            f"{label:4s} |W|={R.T.order:5d} |J~|={R.k}  morphism on {pairs} pairs, "
            f"image rank {rank} = fixed dim {dim}, diagram on {diagram} subsets "
            f"({time.perf_counter() - t0:.1f}s)"
        )


if __name__ == "__main__":
    main()
