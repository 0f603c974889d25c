#!/usr/bin/env python3
"""Count the semi-De Morgan and De Morgan algebras by size, up to isomorphism.

Usage: python scripts/algebra_census.py [--max-size N]
"""

import argparse
import os
import sys
import time
from collections import Counter

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from morgankit import check_variety, enumerate_algebras  # noqa: E402


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-size", type=int, default=5)
    args = ap.parse_args()

    for variety in ("sdm", "dm"):
        t0 = time.perf_counter()
        algebras = enumerate_algebras(variety, args.max_size)
        counts = Counter(a.size for a in algebras)
        sizes = "  ".join(f"n={n}: {counts.get(n, 0)}"
                          for n in range(2, args.max_size + 1))
        print(f"{variety}: {len(algebras)} algebras up to isomorphism "
              f"({sizes})  [{time.perf_counter() - t0:.1f}s]")
    sdm = enumerate_algebras("sdm", args.max_size)
    strictly = [a for a in sdm if not check_variety(a, "dm")]
    print(f"strictly semi-De Morgan (not De Morgan): {len(strictly)}")


if __name__ == "__main__":
    main()
