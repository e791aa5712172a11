"""Compare the 6-letter morphism zeta^2 with the 3-block morphism of Thue-Morse.

Exploration only.  Prints both morphisms in standard form, whether they coincide,
and the first terms of each fixed point.

    python scripts/zeta_vs_block.py [-n 32]
"""

import argparse

from morphstd import (MorphicSequence, block_morphism, format_morphism, parse_morphism,
                      standardize_morphism)
from morphstd.core import format_terms

ZETA = parse_morphism("1->23, 2->14, 3->21, 4->56, 5->63, 6->54")
THUE_MORSE = parse_morphism("1->12, 2->21")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("-n", type=int, default=32, help="number of fixed-point terms to print")
    args = ap.parse_args()

    z2 = ZETA * ZETA
    b3, coding = block_morphism(THUE_MORSE, 1, 3)
    sz, sb = standardize_morphism(z2).standard, standardize_morphism(b3).standard
    print("zeta^2          ", format_morphism(z2))
    print("  standard      ", format_morphism(sz))
    print("TM 3-blocks     ", format_morphism(b3))
    print("  standard      ", format_morphism(sb))
    print("  coding")
    print("".join("    " + line + "\n" for line in coding.format().splitlines()), end="")
    print("same standard form:", sz == sb)
    print("fix zeta^2      ", format_terms(MorphicSequence(z2, 1).prefix(args.n)))
    print("fix TM 3-blocks ", format_terms(MorphicSequence(b3, 1).prefix(args.n)))


if __name__ == "__main__":
    main()
