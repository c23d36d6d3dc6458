"""Brute-force pattern containment and multiset word enumeration.

Everything here is deliberately naive; it exists to cross-check the
recurrence engines at small sizes.
"""
from __future__ import annotations

from math import factorial, prod
from typing import Iterable, Iterator, Sequence

from .errors import InputError, ResourceLimitError

Word = tuple[int, ...]
Pattern = tuple[int, ...]

DEFAULT_GUARD = 12


def validate_pattern(pattern: Sequence[int]) -> Pattern:
    p = tuple(pattern)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise InputError(f"pattern {p!r} is not a permutation of 1..{len(p)}")
    return p


def parse_pattern(text: str) -> Pattern:
    """Parse a digit string such as ``"1432"`` into a pattern."""
    text = text.strip()
    if not text.isdigit():
        raise InputError(f"pattern {text!r} must be a string of digits")
    return validate_pattern(int(c) for c in text)


def rev_k_pattern(k: int) -> Pattern:
    """The pattern 1 k (k-1) ... 2."""
    if k < 3:
        raise InputError(f"k must be at least 3, got {k}")
    return (1,) + tuple(range(k, 1, -1))


def contains(word: Sequence[int], pattern: Sequence[int]) -> bool:
    """True if some subsequence of `word` is order-isomorphic to `pattern`.

    Comparisons are strict in both directions, so two equal letters of
    the word can never stand for two (distinct) pattern values.
    """
    p = validate_pattern(pattern)
    w = tuple(word)
    k = len(p)
    if k == 0:
        return True
    if k > len(w) or k > len(set(w)):
        return False

    chosen: list[int] = []

    def fits(x: int) -> bool:
        j = len(chosen)
        for i, y in enumerate(chosen):
            if (p[i] < p[j]) != (y < x) or (p[i] > p[j]) != (y > x):
                return False
        return True

    def search(start: int) -> bool:
        j = len(chosen)
        if j == k:
            return True
        # not enough positions left to finish the match
        for pos in range(start, len(w) - (k - j) + 1):
            x = w[pos]
            if fits(x):
                chosen.append(x)
                if search(pos + 1):
                    return True
                chosen.pop()
        return False

    return search(0)


def multinomial(counts: Sequence[int]) -> int:
    return factorial(sum(counts)) // prod(factorial(c) for c in counts)


def enumerate_words(counts: Sequence[int], guard: int = DEFAULT_GUARD) -> Iterator[Word]:
    """Yield each arrangement of the multiset {i: counts[i-1]} exactly once.

    Words come out in lexicographic order.  Raises ResourceLimitError when
    the total length exceeds `guard`.
    """
    counts = list(counts)
    if any(c < 0 for c in counts):
        raise InputError(f"counts must be nonnegative, got {counts}")
    total = sum(counts)
    if total > guard:
        raise ResourceLimitError(
            f"word length {total} exceeds oracle guard of {guard} letters")
    remaining = counts[:]
    prefix: list[int] = []

    def rec() -> Iterator[Word]:
        if len(prefix) == total:
            yield tuple(prefix)
            return
        for i, c in enumerate(remaining):
            if c:
                remaining[i] -= 1
                prefix.append(i + 1)
                yield from rec()
                prefix.pop()
                remaining[i] += 1

    return rec()


def brute_count(counts: Sequence[int], patterns: Iterable[Sequence[int]],
                guard: int = DEFAULT_GUARD) -> int:
    """Number of words with the given letter counts avoiding every pattern."""
    pats = [validate_pattern(p) for p in patterns]
    return sum(1 for w in enumerate_words(counts, guard)
               if not any(contains(w, p) for p in pats))
