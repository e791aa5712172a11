"""Fixed points, iterates, factor sets and subword complexity."""

from __future__ import annotations

import threading
from typing import Iterable, Sequence

from .core import Morphism, Word, apply_morphism, as_word
from .errors import AlphabetMismatchError, CapacityError, NotProlongableError

DEFAULT_CLOSURE_CAP = 60
MAX_ITERATE_LENGTH = 1 << 22


def fixed_point_seeds(m: Morphism) -> list[int]:
    return [a for a, w in enumerate(m.images, 1) if w[0] == a and len(w) >= 2]


def iterate(m: Morphism, w: Iterable[int], k: int) -> Word:
    if k < 0:
        raise ValueError("iteration count must be non-negative")
    w = as_word(w)
    for _ in range(k):
        w = apply_morphism(m, w)
    return w


class MorphicSequence:
    """The fixed point of ``morphism`` starting with ``seed``, optionally coded letter by letter.

    Letters are produced lazily: the fixed point x satisfies x = m(x_0) m(x_1) ...,
    so appending the image of the next unread letter extends the known prefix.
    """

    def __init__(self, morphism: Morphism, seed: int, coding: Sequence[int] | None = None):
        if not 1 <= seed <= morphism.r:
            raise AlphabetMismatchError(f"seed {seed} outside 1..{morphism.r}")
        img = morphism(seed)
        if img[0] != seed or len(img) < 2:
            raise NotProlongableError(
                f"morphism is not prolongable on {seed}: its image {''.join(map(str, img))} "
                f"must start with {seed} and have length at least 2")
        if coding is not None:
            coding = tuple(coding)
            if len(coding) != morphism.r:
                raise AlphabetMismatchError(f"coding covers {len(coding)} letters, morphism has {morphism.r}")
        self.morphism = morphism
        self.seed = seed
        self.coding = coding
        self._x: list[int] = list(img)
        self._next = 1
        self._lock = threading.Lock()

    def __repr__(self):
        return f"MorphicSequence({self.morphism}, seed={self.seed})"

    def _extend(self, n: int) -> None:
        with self._lock:
            x, images = self._x, self.morphism.images
            while len(x) < n:
                x.extend(images[x[self._next] - 1])
                self._next += 1

    def raw_prefix(self, n: int) -> Word:
        """First n letters of the fixed point, before coding."""
        if n < 0:
            raise ValueError("prefix length must be non-negative")
        if len(self._x) < n:
            self._extend(n)
        return tuple(self._x[:n])

    def prefix(self, n: int) -> Word:
        w = self.raw_prefix(n)
        if self.coding is None:
            return w
        c = self.coding
        return tuple(c[a - 1] for a in w)


def prefix(s: MorphicSequence, n: int) -> Word:
    return s.prefix(n)


def _windows(w: Sequence[int], n: int) -> Iterable[Word]:
    return (tuple(w[i:i + n]) for i in range(len(w) - n + 1))


def factors(s: MorphicSequence, n: int, cap: int = DEFAULT_CLOSURE_CAP) -> list[Word]:
    """All length-n factors of the (uncoded) fixed point, in order of first occurrence.

    The candidate set is read off m^k(seed) until it stops growing from k to k+1.
    It is then closed under "length-n factors of m(B)": once m^k(seed) has length
    at least n, a set containing its n-factors and closed under that rule holds
    every n-factor of m^j(seed) for j >= k, so it is the whole factor set.
    """
    if n < 1:
        raise ValueError("block length must be at least 1")
    m = s.morphism
    w: Word = (s.seed,)
    found: set[Word] = set()
    for _ in range(cap):
        w = apply_morphism(m, w)
        if len(w) > MAX_ITERATE_LENGTH:
            raise CapacityError(f"iterate grew past {MAX_ITERATE_LENGTH} letters before the factor set settled")
        if len(w) < n:
            continue
        now = set(_windows(w, n))
        if now == found:
            break
        found = now
    else:
        raise CapacityError(f"factor set of length {n} not stable after {cap} iterations")

    todo = list(found)
    rounds = 0
    while todo:
        rounds += 1
        if rounds > cap:
            raise CapacityError(f"factor set of length {n} not closed after {cap} rounds")
        new = []
        for b in todo:
            for f in _windows(apply_morphism(m, b), n):
                if f not in found:
                    found.add(f)
                    new.append(f)
        todo = new

    # order by first occurrence; every factor shows up in a long enough prefix
    length = max(2 * len(w), 64)
    for _ in range(cap):
        seen: dict[Word, None] = {}
        for f in _windows(s.raw_prefix(length), n):
            seen.setdefault(f)
            if len(seen) == len(found):
                return list(seen)
        length *= 2
    raise CapacityError(f"could not locate all {len(found)} factors of length {n} in a prefix")


def complexity(s: MorphicSequence, n_max: int, cap: int = DEFAULT_CLOSURE_CAP) -> list[int]:
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    return [len(factors(s, n, cap)) for n in range(1, n_max + 1)]
