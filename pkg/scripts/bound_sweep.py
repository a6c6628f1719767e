"""Sweep H(m,n)+A(a|b) and H_m+A(a|b) up to a total dimension and summarize the bound slack.

    python scripts/bound_sweep.py [--max-dim 7]
"""

import argparse
import time
from collections import Counter

from supertensor.bounds import family_sweep


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-dim", type=int, default=7)
    args = ap.parse_args()
    t0 = time.perf_counter()
    reps = family_sweep(args.max_dim, ceiling=max(args.max_dim, 7))
    elapsed = time.perf_counter() - t0
    by_slack = Counter(r.slack for r in reps)
    print(f"{len(reps)} algebras in {elapsed:.2f}s")
    for slack in sorted(by_slack):
        print(f"  slack {slack:>3}: {by_slack[slack]}")
    print("equality cases:")
    for r in reps:
        if r.equality:
            print(f"  {r.name}  (k|l) = ({r.k}|{r.l}), bound {r.bound}")


if __name__ == "__main__":
    main()
