"""N-block morphisms, rotation, merging of letters with equal images, projections."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .core import Morphism, Word, apply_morphism, as_word, format_word
from .errors import AlphabetMismatchError, MorphismError, NotRotatableError, ParseError
from .generate import DEFAULT_CLOSURE_CAP, MorphicSequence, factors


@dataclass(frozen=True)
class BlockCoding:
    """Letter ``k`` of a block morphism stands for ``blocks[k - 1]``."""

    blocks: tuple[Word, ...]

    def __post_init__(self):
        blocks = tuple(as_word(b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if len(set(blocks)) != len(blocks):
            raise MorphismError("blocks of a coding must be distinct")
        if len({len(b) for b in blocks}) > 1:
            raise MorphismError("blocks of a coding must share one length")

    @property
    def n(self) -> int:
        return len(self.blocks[0]) if self.blocks else 0

    def letter(self, block: Iterable[int]) -> int:
        return self.blocks.index(as_word(block)) + 1

    def decode(self, w: Iterable[int]) -> Word:
        """First components of the blocks named by ``w``."""
        return tuple(self.blocks[a - 1][0] for a in w)

    def format(self) -> str:
        dotted = any(a >= 10 for b in self.blocks for a in b)
        return "".join(f"{k} {format_word(b, dotted)}\n" for k, b in enumerate(self.blocks, 1))

    @classmethod
    def parse(cls, text: str) -> BlockCoding:
        blocks = []
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 2 or not parts[0].isdigit() or int(parts[0]) != len(blocks) + 1:
                raise ParseError(f"line {lineno}: expected '{len(blocks) + 1} <block>'", lineno)
            blk = parts[1]
            blocks.append(tuple(int(p) for p in blk.split(".")) if "." in blk else tuple(int(c) for c in blk))
        return cls(tuple(blocks))


@dataclass(frozen=True)
class LetterMap:
    """A total, not necessarily injective, map on {1, ..., r}; ``images[a - 1]`` is f(a)."""

    images: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "images", as_word(self.images))
        if any(v < 0 for v in self.images):
            raise MorphismError("letter map values must be non-negative")

    @property
    def r(self) -> int:
        return len(self.images)

    def __call__(self, a: int) -> int:
        return self.images[a - 1]

    @classmethod
    def identity(cls, r: int) -> LetterMap:
        return cls(tuple(range(1, r + 1)))

    @classmethod
    def parse(cls, text: str) -> LetterMap:
        """``"1,3,5->0 2,4,6->1"``; groups are separated by whitespace or ';'."""
        d: dict[int, int] = {}
        for group in re.split(r"[\s;]+", text.strip()):
            if not group:
                continue
            m = re.fullmatch(r"(\d+(?:,\d+)*)->(\d+)", group)
            if m is None:
                raise ParseError(f"bad letter-map group {group!r}", text.find(group))
            for a in m.group(1).split(","):
                if int(a) in d:
                    raise ParseError(f"letter {a} mapped twice", text.find(group))
                d[int(a)] = int(m.group(2))
        if not d:
            raise ParseError("empty letter map", 0)
        r = max(d)
        missing = [a for a in range(1, r + 1) if a not in d]
        if missing or min(d) < 1:
            raise MorphismError(f"letter map must cover exactly 1..{r}; missing {missing}")
        return cls(tuple(d[a] for a in range(1, r + 1)))

    def __str__(self):
        return " ".join(f"{a}->{v}" for a, v in enumerate(self.images, 1))


def project(w: Iterable[int], f: LetterMap) -> Word:
    out = []
    for i, a in enumerate(w):
        if not 1 <= a <= f.r:
            raise AlphabetMismatchError(f"letter {a} at position {i} is outside the map's domain 1..{f.r}")
        out.append(f.images[a - 1])
    return tuple(out)


def block_morphism(m: Morphism, seed: int, n: int,
                   cap: int = DEFAULT_CLOSURE_CAP) -> tuple[Morphism, BlockCoding]:
    """The morphism induced on length-n factors of the fixed point of ``m`` from ``seed``.

    Block B = j_1...j_n maps to the first |m(j_1)| sliding n-windows of m(B).
    Blocks are numbered by first occurrence in the fixed point.  For n = 1 the
    result is ``m`` itself with the identity coding.
    """
    if n == 1:
        MorphicSequence(m, seed)
        return m, BlockCoding(tuple((a,) for a in range(1, m.r + 1)))
    coding = BlockCoding(tuple(factors(MorphicSequence(m, seed), n, cap)))
    index = {b: k for k, b in enumerate(coding.blocks, 1)}
    images = []
    for b in coding.blocks:
        u = apply_morphism(m, b)
        images.append(tuple(index[u[i:i + n]] for i in range(len(m(b[0])))))
    return Morphism(tuple(images)), coding


def rotate(m: Morphism) -> Morphism:
    """Move the common first letter of all images to their ends."""
    firsts = {w[0] for w in m.images}
    if len(firsts) != 1:
        groups = {}
        for a, w in enumerate(m.images, 1):
            groups.setdefault(w[0], []).append(a)
        detail = "; ".join(f"images of {', '.join(map(str, v))} start with {k}"
                           for k, v in sorted(groups.items()))
        raise NotRotatableError(f"images do not share a first letter ({detail})")
    (b,) = firsts
    return Morphism(tuple(w[1:] + (b,) for w in m.images))


def merge_equal_images(m: Morphism) -> tuple[Morphism, LetterMap]:
    """Identify letters with equal images until the morphism is injective on letters.

    Classes are numbered in order of their smallest members.  Returns the reduced
    morphism and the quotient map from the original alphabet.
    """
    quotient = list(range(1, m.r + 1))
    current = m
    while not current.is_injective():
        label: dict[Word, int] = {}
        q = []
        for w in current.images:
            q.append(label.setdefault(w, len(label) + 1))
        reps = {}
        for a, k in enumerate(q, 1):
            reps.setdefault(k, a)
        current = Morphism(tuple(tuple(q[c - 1] for c in current(reps[k]))
                                 for k in range(1, len(label) + 1)))
        quotient = [q[c - 1] for c in quotient]
    return current, LetterMap(tuple(quotient))
