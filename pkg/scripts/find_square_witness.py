"""Search small non-uniform morphisms for one whose standard form does not commute with squaring.

Enumerates r = 2, 3 with image lengths up to 4 in a fixed order, standardizes
by brute force over all r! relabelings, and prints the first hit plus a count.

    python scripts/find_square_witness.py [--max-len 4] [--all]
"""

import argparse
from itertools import permutations, product

from morphstd import Morphism, Relabeling, permuted_version


def brute_standard(m: Morphism) -> Morphism:
    best = None
    for perm in permutations(range(1, m.r + 1)):
        cand = permuted_version(m, Relabeling(perm))
        key = (cand.concatenation(), cand.lengths())
        if best is None or key < best[0]:
            best = (key, cand)
    return best[1]


def morphisms(r: int, max_len: int):
    words = [w for n in range(1, max_len + 1) for w in product(range(1, r + 1), repeat=n)]
    for images in product(words, repeat=r):
        m = Morphism(images)
        if not m.is_uniform():
            yield m


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-len", type=int, default=4)
    ap.add_argument("--all", action="store_true", help="count all witnesses instead of stopping at the first")
    args = ap.parse_args()
    for r in (2, 3):
        hits = 0
        for m in morphisms(r, args.max_len):
            std = brute_standard(m)
            if brute_standard(m * m) != std * std:
                hits += 1
                if hits == 1:
                    print(f"r={r}: first witness {m}")
                    print(f"  standard form       {std}")
                    print(f"  square of standard  {std * std}")
                    print(f"  standard of square  {brute_standard(m * m)}")
                if not args.all:
                    break
        if args.all:
            print(f"r={r}: {hits} witnesses")


if __name__ == "__main__":
    main()
