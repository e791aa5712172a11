"""Standard forms of morphisms and of symbolic sequences.

The standard form of a morphism is the permuted version whose concatenated
images ``m(1) m(2) ... m(r)`` are lexicographically smallest; ties are broken
by the smallest vector of image lengths.  The standard form of a sequence is
its lexicographically smallest relabeling, which is the relabeling by order
of first occurrence.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import Morphism, Relabeling, Word, as_word, format_morphism, permuted_version
from .errors import AlphabetMismatchError, CapacityError, IncompleteAlphabetError

DEFAULT_SEARCH_CAP = 8


@dataclass(frozen=True)
class StandardizationResult:
    standard: Morphism
    witness: Relabeling

    @property
    def key(self) -> str:
        return format_morphism(self.standard)


def standardize_morphism(m: Morphism, cap: int = DEFAULT_SEARCH_CAP) -> StandardizationResult:
    """Search all r! relabelings, pruning branches whose determined prefix already loses.

    A branch fixes ``P(1), ..., P(k)``.  The concatenation ``m(P(1)) ... m(P(k))``
    relabeled by ``P^-1`` is known up to its first letter whose new label is not
    assigned yet; that letter will receive a label of at least ``k + 1``.
    """
    r = m.r
    if r > cap:
        raise CapacityError(
            f"morphism on {r} letters exceeds the permutation search cap of {cap} "
            f"({r}! candidates); pass cap={r} (CLI: --cap {r}) to search anyway")

    images = m.images
    best: list = [None]  # (w_chi, lengths, perm)
    perm: list[int] = []
    label = [0] * (r + 1)  # old letter -> new letter, 0 = unassigned

    def bound_fails(lowest: int) -> bool:
        if best[0] is None:
            return False
        bw = best[0][0]
        i = 0
        for b in perm:
            for c in images[b - 1]:
                v = label[c]
                if v == 0:
                    return bw[i] < lowest
                if v != bw[i]:
                    return v > bw[i]
                i += 1
        return False

    def search(k: int) -> None:
        if k == r:
            w = tuple(label[c] for b in perm for c in images[b - 1])
            cand = (w, tuple(len(images[b - 1]) for b in perm), tuple(perm))
            if best[0] is None or cand < best[0]:
                best[0] = cand
            return
        for b in range(1, r + 1):
            if label[b]:
                continue
            label[b] = k + 1
            perm.append(b)
            if not bound_fails(k + 2):
                search(k + 1)
            perm.pop()
            label[b] = 0

    search(0)
    witness = Relabeling(best[0][2])
    return StandardizationResult(permuted_version(m, witness), witness)


def first_occurrence_relabeling(prefix: Iterable[int], r: int | None = None) -> Relabeling:
    """Relabeling sending the k-th distinct letter of ``prefix`` to k.

    With ``r`` given, every letter of 1..r must occur.  Otherwise r is the largest
    letter and letters that never occur take the remaining labels in order.
    """
    w = as_word(prefix)
    if not w:
        raise IncompleteAlphabetError("empty sequence has no standard form")
    if min(w) < 1:
        raise AlphabetMismatchError(
            f"letter {min(w)} is not in the standard alphabet; shift the sequence first")
    top = max(w)
    if r is not None and top > r:
        raise AlphabetMismatchError(f"letter {top} is outside 1..{r}")
    size = top if r is None else r
    order: dict[int, int] = {}
    for a in w:
        if a not in order:
            order[a] = len(order) + 1
    if r is not None and len(order) < r:
        missing = sorted(set(range(1, r + 1)) - set(order))
        raise IncompleteAlphabetError(
            f"letters {missing} of 1..{r} never occur; shrink the alphabet first")
    for a in range(1, size + 1):
        if a not in order:
            order[a] = len(order) + 1
    return Relabeling.from_dict(order, size)


def standardize_sequence(prefix: Iterable[int], r: int | None = None) -> tuple[Word, Relabeling]:
    w = as_word(prefix)
    p = first_occurrence_relabeling(w, r)
    return tuple(p.mapping[a - 1] for a in w), p


def equivalent_morphisms(a: Morphism, b: Morphism, cap: int = DEFAULT_SEARCH_CAP) -> bool:
    if a.r != b.r:
        return False
    return standardize_morphism(a, cap).standard == standardize_morphism(b, cap).standard


def equivalent_sequences(a: Iterable[int], b: Iterable[int]) -> bool:
    return standardize_sequence(a)[0] == standardize_sequence(b)[0]
