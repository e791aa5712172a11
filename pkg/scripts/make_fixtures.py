"""Regenerate the shipped OEIS b-file fixtures from each entry's own definition.

Runs offline and deliberately avoids importing morphstd, so the fixtures stay
an independent check on the library.  Irrational floors use 80-digit decimals.

    python scripts/make_fixtures.py [--terms 1000]
"""

import argparse
from decimal import Decimal, getcontext
from pathlib import Path

getcontext().prec = 80
PHI = (1 + Decimal(5).sqrt()) / 2
OUT = Path(__file__).resolve().parents[1] / "src" / "morphstd" / "data"


def floor_dec(x):
    return int(x.to_integral_value(rounding="ROUND_FLOOR"))


def fixed_point(rules, seed, n):
    x = [seed]
    i = 0
    while len(x) < n:
        img = rules[x[i]]
        x.extend(img[1:] if i == 0 else img)
        i += 1
    return x[:n]


def a010060(n):
    return 0, [bin(k).count("1") % 2 for k in range(n)]


def a000201(n):
    return 1, [floor_dec(k * PHI) for k in range(1, n + 1)]


def a005206(n):
    g = [0]
    for k in range(1, n):
        g.append(k - g[g[k - 1]])
    return 0, g


def a120613(n):
    return 1, [floor_dec(PHI * floor_dec(k / PHI)) for k in range(1, n + 1)]


def a120614(n):
    g = [floor_dec(PHI * floor_dec(k / PHI)) for k in range(0, n + 1)]
    return 1, [g[k] - g[k - 1] for k in range(1, n + 1)]


def a159917(n):
    return 0, fixed_point({0: [0, 1], 1: [2], 2: [0, 1]}, 0, n)


def a138967(n):
    # replace 1 by 1,2,3 and 3 by 1,4 in the Fibonacci word on {1, 3}
    fib = fixed_point({1: [1, 3], 3: [1]}, 1, n)
    out = []
    for c in fib:
        out.extend([1, 2, 3] if c == 1 else [1, 4])
        if len(out) >= n:
            break
    return 1, out[:n]


SOURCES = {
    "A010060": (a010060, "Thue-Morse: parity of the binary weight of n"),
    "A000201": (a000201, "floor(n*phi)"),
    "A005206": (a005206, "Hofstadter G: a(0)=0, a(n)=n-a(a(n-1))"),
    "A120613": (a120613, "floor(phi*floor(n/phi))"),
    "A120614": (a120614, "A120613(n)-A120613(n-1)"),
    "A159917": (a159917, "fixed point of 0->01, 1->2, 2->01"),
    "A138967": (a138967, "1->1,2,3 and 3->1,4 applied to the Fibonacci word on {1,3}"),
}


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--terms", type=int, default=1000)
    args = ap.parse_args()
    OUT.mkdir(parents=True, exist_ok=True)
    for oeis_id, (fn, definition) in SOURCES.items():
        offset, terms = fn(args.terms)
        lines = [f"# {oeis_id}: {definition}",
                 "# regenerated offline from the definition above by scripts/make_fixtures.py"]
        lines += [f"{i} {v}" for i, v in enumerate(terms, offset)]
        path = OUT / f"b{oeis_id[1:]}.txt"
        path.write_text("\n".join(lines) + "\n")
        print(f"wrote {path.name}: {len(terms)} terms from offset {offset}")


if __name__ == "__main__":
    main()
