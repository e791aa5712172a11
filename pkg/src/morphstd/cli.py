"""Command-line interface.  Run ``morphstd <command> --help`` for details.

Exit status: 0 on success, 1 on a domain error, 2 on a usage error.
Output is written only once a command has fully succeeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import catalog, golden
from .canonical import DEFAULT_SEARCH_CAP, standardize_morphism, standardize_sequence
from .core import format_morphism, format_terms, parse_morphism, parse_word
from .errors import MorphismError
from .generate import DEFAULT_CLOSURE_CAP, MorphicSequence, complexity, fixed_point_seeds
from .transform import LetterMap, block_morphism, merge_equal_images, project, rotate

FORMATS = ("text", "csv", "bfile")


class UsageError(Exception):
    pass


def emit_terms(terms, fmt: str = "text", offset: int = 0) -> str:
    if fmt == "text":
        return format_terms(terms) + "\n"
    sep = "," if fmt == "csv" else " "
    return "".join(f"{i}{sep}{v}\n" for i, v in enumerate(terms, offset))


def _read_source(inline: str | None, path: str | None) -> str:
    if inline is not None and path is not None:
        raise UsageError("give either an inline argument or --file, not both")
    if inline is not None:
        return inline
    if path is None or path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _morphism_lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def _terms_from(inline: str | None, path: str | None) -> tuple[list[int], int]:
    """Terms and their starting index; files are read as b-files."""
    if inline is None:
        rec = catalog.read_bfile(_read_source(None, path))
        return rec.terms, rec.offset
    return list(parse_word(inline)), 0


def _seed_for(m, seed: int | None) -> int:
    if seed is not None:
        return seed
    seeds = fixed_point_seeds(m)
    if len(seeds) == 1:
        return seeds[0]
    if not seeds:
        raise MorphismError("the morphism is not prolongable on any letter")
    raise UsageError(f"several fixed points (seeds {', '.join(map(str, seeds))}); choose one with --seed")


# --- commands ---------------------------------------------------------------

def cmd_standardize_morphism(args) -> str:
    lines = [args.morphism] if args.morphism is not None else _morphism_lines(_read_source(None, args.file))
    out = []
    for line in lines:
        res = standardize_morphism(parse_morphism(line), args.cap)
        out.append(res.key + (f"  witness: {res.witness}" if args.witness else ""))
    return "".join(s + "\n" for s in out)


def cmd_standardize_sequence(args) -> str:
    terms, offset = _terms_from(args.terms, args.file)
    word, shift = catalog.import_as_word(terms)
    missing = sorted(set(range(1, max(word) + 1)) - set(word))
    if missing:
        print(f"warning: letters {missing} (after shift {shift:+d}) never occur; "
              "the alphabet has gaps", file=sys.stderr)
    std, witness = standardize_sequence(word)
    out = emit_terms(std, args.format, offset)
    if args.witness:
        out += f"# shift {shift:+d}; relabeling {witness}\n"
    return out


def cmd_fixed_points(args) -> str:
    res = standardize_morphism(parse_morphism(args.morphism), args.cap)
    out = [f"standard: {res.key}"]
    seeds = fixed_point_seeds(res.standard)
    if not seeds:
        out.append("no fixed points")
    for seed in seeds:
        pre = MorphicSequence(res.standard, seed).prefix(args.n)
        out.append(f"seed {seed}: {format_terms(pre)}")
        out.append(f"  standard form: {format_terms(standardize_sequence(pre)[0])}")
    return "".join(s + "\n" for s in out)


def cmd_orbit(args) -> str:
    m = parse_morphism(args.morphism)
    coding = LetterMap.parse(args.map).images if args.map else None
    s = MorphicSequence(m, _seed_for(m, args.seed), coding)
    return emit_terms(s.prefix(args.n), args.format, args.offset)


def cmd_block(args) -> str:
    m = parse_morphism(args.morphism)
    bm, coding = block_morphism(m, _seed_for(m, args.seed), args.N, args.closure_cap)
    return format_morphism(bm) + "\n" + coding.format()


def cmd_rotate(args) -> str:
    m = parse_morphism(args.morphism)
    for _ in range(args.times):
        m = rotate(m)
    return format_morphism(m) + "\n"


def cmd_merge(args) -> str:
    reduced, q = merge_equal_images(parse_morphism(args.morphism))
    return f"{format_morphism(reduced)}\nquotient: {q}\n"


def cmd_project(args) -> str:
    terms, offset = _terms_from(args.terms, args.file)
    return emit_terms(project(terms, LetterMap.parse(args.map)), args.format, offset)


def cmd_complexity(args) -> str:
    m = parse_morphism(args.morphism)
    s = MorphicSequence(m, _seed_for(m, args.seed))
    return format_terms(complexity(s, args.n_max, args.closure_cap)) + "\n"


GOLDEN_SEQUENCES = {
    "a": (golden.beatty_a, 1),
    "g": (golden.g_seq, 0),
    "inc": (golden.increment_a, 1),
    "e": (golden.e_seq, 0),
}


def cmd_golden(args) -> str | tuple[str, int]:
    if args.which == "verify":
        report = golden.verify_identities(args.n_max, args.jobs)
        return "".join(s + "\n" for s in report.lines()), 0 if report.all_passed else 1
    fn, first = GOLDEN_SEQUENCES[args.which]
    start = first if args.start is None else args.start
    if start < first:
        raise UsageError(f"golden {args.which} starts at index {first}")
    return emit_terms([fn(k) for k in range(start, start + args.n)], args.format, start)


def cmd_dedup(args) -> str | tuple[str, int]:
    items = []
    for name in args.files:
        text = Path(name).read_text()
        if args.kind == "morphism":
            for lineno, line in enumerate(text.splitlines(), 1):
                if line.strip() and not line.lstrip().startswith("#"):
                    try:
                        items.append((f"{name}:{lineno}", parse_morphism(line)))
                    except MorphismError as exc:
                        items.append((f"{name}:{lineno}", exc))
        else:
            try:
                items.append((name, catalog.read_bfile(text).terms))
            except MorphismError as exc:
                items.append((name, exc))
    bad = [(label, str(x)) for label, x in items if isinstance(x, Exception)]
    good = [(label, x) for label, x in items if not isinstance(x, Exception)]
    res = catalog.dedup(good, args.kind, args.compare_length, args.cap, args.jobs)
    out = []
    if args.kind == "sequence":
        out.append(f"# heuristic: sequences compared on their first {args.compare_length} terms")
    for i, (key, members) in enumerate(res.groups, 1):
        out.append(f"group {i}: {key}")
        out += [f"  {m}" for m in members]
    failures = sorted(bad + res.failures)
    for label, msg in failures:
        print(f"error: {label}: {msg}", file=sys.stderr)
    return "".join(s + "\n" for s in out), 1 if failures else 0


def cmd_oeis(args) -> str:
    rec = catalog.fetch_oeis(args.id, network=args.network,
                             cache=Path(args.cache_dir) if args.cache_dir else None)
    return catalog.write_bfile(rec)


# --- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="morphstd",
        description="Standard forms of morphisms and symbolic sequences, morphic sequence tools, "
                    "and exact golden-mean floor identities.")
    sub = p.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def morphism_arg(sp):
        sp.add_argument("morphism", help="morphism text, e.g. '1->12,2->3,3->12'")

    def cap_arg(sp):
        sp.add_argument("--cap", type=int, default=DEFAULT_SEARCH_CAP,
                        help=f"largest alphabet for the permutation search (default {DEFAULT_SEARCH_CAP})")

    def seed_arg(sp):
        sp.add_argument("--seed", type=int,
                        help="letter whose fixed point is used (required if there are several)")

    def closure_arg(sp):
        sp.add_argument("--closure-cap", type=int, default=DEFAULT_CLOSURE_CAP,
                        help=f"iteration cap for factor-set closure (default {DEFAULT_CLOSURE_CAP})")

    def format_arg(sp):
        sp.add_argument("--format", choices=FORMATS, default="text",
                        help="text: comma-separated terms; csv: 'index,value' lines; "
                             "bfile: 'index value' lines (default text)")

    sp = sub.add_parser("standardize-morphism", help="print the standard form of morphisms")
    sp.add_argument("morphism", nargs="?",
                    help="morphism text; if omitted, one morphism per line is read from --file or stdin")
    sp.add_argument("--file", help="file with one morphism per line ('-' for stdin)")
    sp.add_argument("--witness", action="store_true", help="also print the relabeling that was used")
    cap_arg(sp)
    sp.set_defaults(func=cmd_standardize_morphism)

    sp = sub.add_parser("standardize-sequence", help="relabel a sequence prefix into standard form")
    sp.add_argument("terms", nargs="?", help="comma-separated terms; if omitted, a b-file is read")
    sp.add_argument("--file", help="b-file to read ('-' for stdin)")
    sp.add_argument("--witness", action="store_true", help="append the import shift and relabeling")
    format_arg(sp)
    sp.set_defaults(func=cmd_standardize_sequence)

    sp = sub.add_parser("fixed-points",
                        help="standardize a morphism, then list its fixed points and their standard forms")
    morphism_arg(sp)
    sp.add_argument("-n", type=int, default=32, help="prefix length to print (default 32)")
    cap_arg(sp)
    sp.set_defaults(func=cmd_fixed_points)

    sp = sub.add_parser("orbit", help="print a prefix of a fixed point")
    morphism_arg(sp)
    seed_arg(sp)
    sp.add_argument("-n", type=int, required=True, help="number of terms")
    sp.add_argument("--map", help="letter-to-letter coding applied to the output, e.g. '1,3->0 2->1'")
    sp.add_argument("--offset", type=int, default=0, help="index of the first term in csv/bfile output")
    format_arg(sp)
    sp.set_defaults(func=cmd_orbit)

    sp = sub.add_parser("block", help="N-block morphism and its block coding")
    morphism_arg(sp)
    seed_arg(sp)
    sp.add_argument("-N", type=int, required=True, help="block length")
    closure_arg(sp)
    sp.set_defaults(func=cmd_block)

    sp = sub.add_parser("rotate", help="rotate (conjugate) a morphism whose images share a first letter")
    morphism_arg(sp)
    sp.add_argument("--times", type=int, default=1, help="number of rotation steps (default 1)")
    sp.set_defaults(func=cmd_rotate)

    sp = sub.add_parser("merge", help="merge letters with equal images until injective")
    morphism_arg(sp)
    sp.set_defaults(func=cmd_merge)

    sp = sub.add_parser("project", help="apply a letter-to-letter map to a sequence")
    sp.add_argument("terms", nargs="?", help="comma-separated terms; if omitted, a b-file is read")
    sp.add_argument("--file", help="b-file to read ('-' for stdin)")
    sp.add_argument("--map", required=True, help="letter map, e.g. '1,3,5->0 2,4,6->1'")
    format_arg(sp)
    sp.set_defaults(func=cmd_project)

    sp = sub.add_parser("complexity", help="subword complexity p(1..N) of a fixed point")
    morphism_arg(sp)
    seed_arg(sp)
    sp.add_argument("--n-max", type=int, required=True, help="largest factor length")
    closure_arg(sp)
    sp.set_defaults(func=cmd_complexity)

    sp = sub.add_parser("golden", help="golden-mean floor sequences and identity verification")
    gsub = sp.add_subparsers(dest="which", required=True, metavar="WHICH")
    for name, text in [("a", "floor(n*phi), from n=1"),
                       ("g", "floor(phi*floor(k/phi)), from k=0"),
                       ("inc", "g(n)-g(n-1), from n=1"),
                       ("e", "floor((n+1)/phi), from n=0")]:
        gp = gsub.add_parser(name, help=text)
        gp.add_argument("-n", type=int, required=True, help="number of terms")
        gp.add_argument("--start", type=int, help="first index (default: the sequence's first index)")
        format_arg(gp)
        gp.set_defaults(func=cmd_golden)
    gp = gsub.add_parser("verify", help="check the floor identities exactly for n=1..N")
    gp.add_argument("--n-max", type=int, required=True, help="largest n to check")
    gp.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    gp.set_defaults(func=cmd_golden)

    sp = sub.add_parser("dedup", help="group morphisms or sequences by canonical key")
    sp.add_argument("files", nargs="+",
                    help="morphism files (one per line) or b-files, depending on --kind")
    sp.add_argument("--kind", choices=("morphism", "sequence"), default="morphism",
                    help="what the files contain (default morphism)")
    sp.add_argument("--compare-length", type=int, default=catalog.DEFAULT_COMPARE_LENGTH,
                    help=f"sequence terms compared (default {catalog.DEFAULT_COMPARE_LENGTH})")
    sp.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    cap_arg(sp)
    sp.set_defaults(func=cmd_dedup)

    sp = sub.add_parser("oeis", help="OEIS b-file cache")
    osub = sp.add_subparsers(dest="action", required=True, metavar="ACTION")
    op = osub.add_parser("fetch", help="print a b-file from the cache, downloading it with --network")
    op.add_argument("id", help="OEIS id such as A000201")
    net = op.add_mutually_exclusive_group()
    net.add_argument("--network", dest="network", action="store_true", help="allow downloading")
    net.add_argument("--no-network", dest="network", action="store_false",
                     help="use the cache only (default)")
    op.add_argument("--cache-dir", help=f"cache directory (default ${catalog.CACHE_ENV} or ~/.cache/morphstd)")
    op.set_defaults(func=cmd_oeis, network=False)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"morphstd: error: {exc}", file=sys.stderr)
        return 2
    except (MorphismError, OSError) as exc:
        print(f"morphstd: error: {exc}", file=sys.stderr)
        return 1
    out, code = result if isinstance(result, tuple) else (result, 0)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
