"""Count isomorphism classes of finite models by size.

By default also counts the matching models for a few common properties.
``--oracle`` recounts small sizes by filling every table cell, with no
pruning; that is slow beyond size 3.
"""
import argparse
import sys
import time
from pathlib import Path

from pseudoeq.search import SearchSpec, enumerate_models, matches, resolve_property

PROPERTIES = ("pseudo-eq", "equality", "invariant", "commutative", "symmetric", "linear")


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-size", type=int, default=4)
    ap.add_argument("--oracle", action="store_true", help="cross-check sizes ≤ 3 by brute force")
    args = ap.parse_args(argv)

    print("size  " + "  ".join(f"{p:>11}" for p in PROPERTIES) + "   seconds")
    for n in range(1, args.max_size + 1):
        t = time.time()
        models = enumerate_models(SearchSpec(n))
        counts = [sum(matches(A, [resolve_property(p)], []) for A in models) for p in PROPERTIES]
        print(f"{n:>4}  " + "  ".join(f"{c:>11}" for c in counts) + f"   {time.time() - t:7.1f}")

    if args.oracle:
        sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))
        from oracles import count_models

        for n in range(1, min(args.max_size, 3) + 1):
            fast = len(enumerate_models(SearchSpec(n)))
            slow = count_models(n)
            print(f"size {n}: search {fast}, brute force {slow}: {'agree' if fast == slow else 'DIFFER'}")
            if fast != slow:
                return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
