"""Words, morphisms and relabelings over the standard alphabet {1, ..., r}.

A word is a plain tuple of positive ints.  Morphisms and relabelings are
frozen dataclasses, so every value here is hashable and safe to share.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import chain
from typing import Iterable, Sequence

from .errors import AlphabetMismatchError, MorphismError, ParseError

Letter = int
Word = tuple[int, ...]


def as_word(letters: Iterable[int]) -> Word:
    return tuple(int(a) for a in letters)


def _check_letters(w: Iterable[int], r: int, what: str = "word") -> None:
    for i, a in enumerate(w):
        if not 1 <= a <= r:
            raise AlphabetMismatchError(
                f"letter {a} at position {i} of {what} is outside 1..{r}")


@dataclass(frozen=True)
class Relabeling:
    """A bijection of {1, ..., r}; ``mapping[a - 1]`` is the image of ``a``."""

    mapping: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mapping", as_word(self.mapping))
        if sorted(self.mapping) != list(range(1, len(self.mapping) + 1)):
            raise MorphismError(f"not a bijection of 1..{len(self.mapping)}: {self.mapping}")

    @property
    def r(self) -> int:
        return len(self.mapping)

    @classmethod
    def identity(cls, r: int) -> Relabeling:
        return cls(tuple(range(1, r + 1)))

    @classmethod
    def from_dict(cls, d: dict[int, int], r: int | None = None) -> Relabeling:
        r = max(d) if r is None else r
        return cls(tuple(d.get(a, a) for a in range(1, r + 1)))

    @classmethod
    def from_cycles(cls, r: int, *cycles: Sequence[int]) -> Relabeling:
        """Cycle notation: ``(1, 2, 3)`` sends 1 to 2, 2 to 3 and 3 to 1."""
        m = list(range(1, r + 1))
        for cyc in cycles:
            for a, b in zip(cyc, chain(cyc[1:], cyc[:1])):
                m[a - 1] = b
        return cls(tuple(m))

    def __call__(self, a: int) -> int:
        return self.mapping[a - 1]

    def inverse(self) -> Relabeling:
        inv = [0] * self.r
        for a, b in enumerate(self.mapping, 1):
            inv[b - 1] = a
        return Relabeling(tuple(inv))

    def compose(self, other: Relabeling) -> Relabeling:
        """``self o other``, i.e. ``a -> self(other(a))``."""
        if other.r != self.r:
            raise AlphabetMismatchError(f"cannot compose relabelings of sizes {self.r} and {other.r}")
        return Relabeling(tuple(self.mapping[b - 1] for b in other.mapping))

    def is_identity(self) -> bool:
        return self.mapping == tuple(range(1, self.r + 1))

    def __str__(self):
        return " ".join(f"{a}->{b}" for a, b in enumerate(self.mapping, 1))


@dataclass(frozen=True)
class Morphism:
    """A non-erasing morphism on r letters; ``images[a - 1]`` is the image of ``a``."""

    images: tuple[Word, ...]

    def __post_init__(self):
        images = tuple(as_word(w) for w in self.images)
        object.__setattr__(self, "images", images)
        if not images:
            raise MorphismError("a morphism needs at least one letter")
        for a, w in enumerate(images, 1):
            if not w:
                raise MorphismError(f"image of letter {a} is empty (erasing morphisms are not supported)")
            _check_letters(w, len(images), f"image of letter {a}")

    @classmethod
    def from_images(cls, *images: Iterable[int] | str) -> Morphism:
        """Shorthand for small alphabets: ``Morphism.from_images("12", "1")``."""
        return cls(tuple(as_word(map(int, w)) if isinstance(w, str) else as_word(w) for w in images))

    @property
    def r(self) -> int:
        return len(self.images)

    def __call__(self, a: int) -> Word:
        return self.images[a - 1]

    def lengths(self) -> tuple[int, ...]:
        return tuple(len(w) for w in self.images)

    def is_uniform(self) -> bool:
        return len(set(self.lengths())) == 1

    def is_injective(self) -> bool:
        return len(set(self.images)) == self.r

    def concatenation(self) -> Word:
        return tuple(chain.from_iterable(self.images))

    def __mul__(self, other: Morphism) -> Morphism:
        """Composition ``self o other``; ``m * m`` is the square."""
        if other.r != self.r:
            raise AlphabetMismatchError(f"cannot compose morphisms on {self.r} and {other.r} letters")
        return Morphism(tuple(apply_morphism(self, w) for w in other.images))

    def __pow__(self, k: int) -> Morphism:
        result = Morphism(tuple((a,) for a in range(1, self.r + 1)))
        for _ in range(k):
            result = self * result
        return result

    def __str__(self):
        return format_morphism(self)


def apply_morphism(m: Morphism, w: Iterable[int]) -> Word:
    w = as_word(w)
    _check_letters(w, m.r)
    return tuple(chain.from_iterable(m.images[a - 1] for a in w))


def relabel_word(w: Iterable[int], p: Relabeling) -> Word:
    w = as_word(w)
    _check_letters(w, p.r)
    return tuple(p.mapping[a - 1] for a in w)


relabel_sequence = relabel_word


def permuted_version(m: Morphism, p: Relabeling) -> Morphism:
    """The morphism ``a -> p^-1(m(p(a)))``."""
    if p.r != m.r:
        raise AlphabetMismatchError(f"relabeling on {p.r} letters, morphism on {m.r}")
    inv = p.inverse()
    return Morphism(tuple(relabel_word(m(p(a)), inv) for a in range(1, m.r + 1)))


# --- text format --------------------------------------------------------

_RULE = re.compile(r"(\d+)\s*->\s*([\d.]+)")
_SIZE = re.compile(r"\s*r\s*=\s*(\d+)[\s,;]*")


def parse_morphism(text: str) -> Morphism:
    """Parse ``"1->12, 2->3"`` or, for ten or more letters, ``"1->3.12.7 ..."``."""
    declared = None
    pos = 0
    m = _SIZE.match(text)
    if m:
        declared = int(m.group(1))
        if declared < 1:
            raise ParseError("alphabet size must be at least 1", m.start(1))
        pos = m.end()

    rules: list[tuple[int, str, int]] = []
    while True:
        while pos < len(text) and (text[pos].isspace() or text[pos] in ",;"):
            pos += 1
        if pos >= len(text):
            break
        m = _RULE.match(text, pos)
        if m is None:
            raise ParseError(f"expected '<letter>-><image>' near {text[pos:pos + 12]!r}", pos)
        rules.append((int(m.group(1)), m.group(2), m.start(2)))
        pos = m.end()
        if pos < len(text) and not (text[pos].isspace() or text[pos] in ",;"):
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
    if not rules:
        raise ParseError("no rules found", 0)

    dotted = (any("." in img for _, img, _ in rules)
              or max(a for a, _, _ in rules) >= 10
              or (declared is not None and declared >= 10))
    images: dict[int, Word] = {}
    for a, img, at in rules:
        if a in images:
            raise ParseError(f"letter {a} has more than one rule", at)
        if dotted:
            parts = img.split(".")
            if any(not p for p in parts):
                raise ParseError(f"empty letter in image {img!r}", at)
            images[a] = tuple(int(p) for p in parts)
        else:
            images[a] = tuple(int(c) for c in img)

    r = declared if declared is not None else max(
        chain(images, chain.from_iterable(images.values())))
    for a, img in images.items():
        bad = [b for b in chain((a,), img) if not 1 <= b <= r]
        if bad:
            raise AlphabetMismatchError(f"letter {bad[0]} in rule for {a} is outside 1..{r}")
    missing = [a for a in range(1, r + 1) if a not in images]
    if missing:
        raise MorphismError(f"no image given for letter(s) {', '.join(map(str, missing))}")
    return Morphism(tuple(images[a] for a in range(1, r + 1)))


def format_word(w: Iterable[int], dotted: bool = False) -> str:
    return ".".join(map(str, w)) if dotted else "".join(map(str, w))


def format_morphism(m: Morphism) -> str:
    dotted = m.r >= 10
    return ",".join(f"{a}->{format_word(w, dotted)}" for a, w in enumerate(m.images, 1))


def parse_word(text: str) -> Word:
    """Comma/whitespace separated integers; a lone digit string is split per digit."""
    text = text.strip()
    if not text:
        return ()
    parts = [p for p in re.split(r"[\s,]+", text) if p]
    if len(parts) == 1 and len(parts[0]) > 1 and parts[0].isdigit():
        return tuple(int(c) for c in parts[0])
    try:
        return tuple(int(p) for p in parts)
    except ValueError as exc:
        raise ParseError(f"not an integer sequence: {exc}", 0) from None


def format_terms(terms: Iterable[int]) -> str:
    return ",".join(map(str, terms))
