"""b-file I/O, shipped OEIS fixtures, an opt-in OEIS fetcher, and deduplication."""

from __future__ import annotations

import os
import re
import urllib.request
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .canonical import DEFAULT_SEARCH_CAP, standardize_morphism, standardize_sequence
from .core import Morphism, Word, format_terms
from .errors import MorphismError, NotSymbolicError, ParseError

CACHE_ENV = "MORPHSTD_CACHE_DIR"
URL_ENV = "MORPHSTD_OEIS_URL"
DEFAULT_URL = "https://oeis.org/{id}/b{number}.txt"
DEFAULT_COMPARE_LENGTH = 256
MAX_SYMBOLS = 64

_OEIS_ID = re.compile(r"A(\d{6})")


class CatalogError(MorphismError):
    pass


@dataclass
class SequenceRecord:
    terms: list[int]
    offset: int = 0
    id: str | None = None
    provenance: str = "generated"
    comments: list[str] = field(default_factory=list)

    def __post_init__(self):
        if not self.terms:
            raise CatalogError("a sequence record needs at least one term")


def read_bfile(text: str, id: str | None = None, provenance: str = "fixture") -> SequenceRecord:
    comments, terms = [], []
    offset = expected = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.rstrip("\r")
        stripped = line.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            comments.append(line)
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected '<index> <value>', got {stripped!r}", lineno)
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer field in {stripped!r}", lineno) from None
        if expected is None:
            offset = expected = index
        elif index != expected:
            raise ParseError(f"line {lineno}: index {index} follows {expected - 1}, expected {expected}", lineno)
        terms.append(value)
        expected += 1
    if not terms:
        raise CatalogError("b-file contains no data lines")
    return SequenceRecord(terms, offset, id, provenance, comments)


def write_bfile(rec: SequenceRecord) -> str:
    lines = list(rec.comments)
    lines += [f"{i} {v}" for i, v in enumerate(rec.terms, rec.offset)]
    return "\n".join(lines) + "\n"


def import_as_word(rec: SequenceRecord | Sequence[int]) -> tuple[Word, int]:
    """Shift small non-negative symbols onto 1..r; returns the word and the shift added."""
    terms = rec.terms if isinstance(rec, SequenceRecord) else list(rec)
    if not terms:
        raise NotSymbolicError("empty sequence")
    lo, hi = min(terms), max(terms)
    if lo < 0:
        raise NotSymbolicError(f"negative term {lo}; not a symbolic sequence")
    if hi - lo + 1 > MAX_SYMBOLS:
        raise NotSymbolicError(f"terms span {hi - lo + 1} values (more than {MAX_SYMBOLS}); "
                               "not a symbolic sequence")
    shift = 1 - lo
    return tuple(t + shift for t in terms), shift


# --- fixtures and fetching --------------------------------------------------

def _bfile_name(oeis_id: str) -> str:
    m = _OEIS_ID.fullmatch(oeis_id)
    if m is None:
        raise CatalogError(f"malformed OEIS id {oeis_id!r}; expected 'A' followed by six digits")
    return f"b{m.group(1)}.txt"


def fixture_ids() -> list[str]:
    names = resources.files("morphstd").joinpath("data").iterdir()
    return sorted("A" + p.name[1:7] for p in names if p.name.startswith("b"))


def load_fixture(oeis_id: str) -> SequenceRecord:
    path = resources.files("morphstd").joinpath("data", _bfile_name(oeis_id))
    if not path.is_file():
        raise CatalogError(f"no shipped fixture for {oeis_id}")
    return read_bfile(path.read_text(), oeis_id, "fixture")


def cache_dir() -> Path:
    return Path(os.environ.get(CACHE_ENV) or Path.home() / ".cache" / "morphstd")


def fetch_oeis(oeis_id: str, network: bool = False, cache: Path | None = None,
               url_template: str | None = None, timeout: float = 30.0) -> SequenceRecord:
    """Return the b-file for ``oeis_id`` from the cache, downloading it if ``network`` is set."""
    name = _bfile_name(oeis_id)
    path = Path(cache or cache_dir()) / name
    if path.is_file():
        return read_bfile(path.read_text(), oeis_id, "fetched")
    if not network:
        raise CatalogError(f"{oeis_id} is not cached in {path.parent} and network access is disabled")
    template = url_template or os.environ.get(URL_ENV) or DEFAULT_URL
    url = template.format(id=oeis_id, number=oeis_id[1:])
    with urllib.request.urlopen(url, timeout=timeout) as resp:
        text = resp.read().decode("utf-8")
    rec = read_bfile(text, oeis_id, "fetched")
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    tmp.write_text(text)
    tmp.replace(path)
    return rec


# --- deduplication --------------------------------------------------------

@dataclass
class DedupResult:
    groups: list[tuple[str, list[str]]]
    failures: list[tuple[str, str]]


def _morphism_key(args: tuple[Morphism, int]) -> str:
    m, cap = args
    return standardize_morphism(m, cap).key


def _sequence_key(args: tuple[Sequence[int], int]) -> str:
    terms, length = args
    word, _ = import_as_word(terms[:length])
    return format_terms(standardize_sequence(word)[0])


def _safe(fn, arg):
    try:
        return fn(arg), None
    except MorphismError as exc:
        return None, str(exc)


def _safe_morphism(arg):
    return _safe(_morphism_key, arg)


def _safe_sequence(arg):
    return _safe(_sequence_key, arg)


def dedup(items: Iterable[tuple[str, Morphism | Sequence[int]]], kind: str = "morphism",
          compare_length: int = DEFAULT_COMPARE_LENGTH, cap: int = DEFAULT_SEARCH_CAP,
          jobs: int = 1) -> DedupResult:
    """Group labelled morphisms (exactly) or sequences (by standardized prefix) by canonical key."""
    items = list(items)
    if kind == "morphism":
        fn, args = _safe_morphism, [(x, cap) for _, x in items]
    elif kind == "sequence":
        fn, args = _safe_sequence, [(list(x), compare_length) for _, x in items]
    else:
        raise ValueError(f"unknown dedup kind {kind!r}")
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            keys = list(pool.map(fn, args))
    else:
        keys = [fn(a) for a in args]

    groups: dict[str, list[str]] = {}
    failures = []
    for (label, _), (key, err) in zip(items, keys):
        if err is not None:
            failures.append((label, err))
        else:
            groups.setdefault(key, []).append(label)
    return DedupResult(sorted((k, sorted(v)) for k, v in groups.items()), sorted(failures))
