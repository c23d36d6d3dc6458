"""Counting words that avoid 123, alone or together with 1k(k-1)...2.

Two engines live here.  `Avoid123Counter` counts 123-avoiders with
arbitrary letter multiplicities via the tail-collapsing recurrence

    A(L) = sum_i A([l_1, ..., l_{i-1}, l_i - 1, l_{i+1} + ... + l_n]).

`RevKEngine123` counts words on [n]^r avoiding both 123 and 1k(k-1)...2
through states (a, b, L): r copies of each of 1..a remain, b copies of
a+1, and L[i] copies of a+1+i (i = 1..t), with the extra requirement that
the completion still avoids both patterns when a+1 is put in front of it.
"""
from __future__ import annotations

from typing import Sequence

from ._recursion import recursion_headroom
from .errors import InputError, InvariantViolation

CountList = tuple[int, ...]


def remove_zeros(L: Sequence[int]) -> CountList:
    return tuple(x for x in L if x)


class Avoid123Counter:
    """Memoized counter for 123-avoiding words with prescribed letter counts."""

    def __init__(self) -> None:
        self.memo: dict[CountList, int] = {(): 1}

    def count(self, L: Sequence[int]) -> int:
        if any(x < 0 for x in L):
            raise InputError(f"letter counts must be nonnegative, got {list(L)}")
        key = remove_zeros(L)
        with recursion_headroom(sum(key)):
            return self._count(key)

    def _count(self, L: CountList) -> int:
        memo = self.memo
        if L in memo:
            return memo[L]
        total = 0
        n = len(L)
        for i in range(n):
            # first letter is i+1; everything above it collapses into one letter
            nxt = L[:i] + (L[i] - 1, sum(L[i + 1:]))
            total += self._count(remove_zeros(nxt))
        memo[L] = total
        return total


def count_avoid123(L: Sequence[int]) -> int:
    """Number of words with L[i] copies of letter i+1 that avoid 123."""
    return Avoid123Counter().count(L)


def count_avoid123_uniform(n: int, r: int) -> int:
    if n < 0 or r < 1:
        raise InputError(f"need n >= 0 and r >= 1, got n={n}, r={r}")
    return count_avoid123([r] * n)


State123 = tuple[int, int, CountList]


class RevKEngine123:
    """Counts words on [n]^r avoiding 123 and 1k(k-1)...2.

    The memo table is private to the instance; reuse one instance to share
    work between alphabet sizes.
    """

    def __init__(self, r: int, k: int, check_invariants: bool = False) -> None:
        if r < 1:
            raise InputError(f"r must be at least 1, got {r}")
        if k < 3:
            raise InputError(f"k must be at least 3, got {k}")
        self.r = r
        self.k = k
        self.check_invariants = check_invariants
        self.memo: dict[State123, int] = {}
        self.states_checked = 0

    def lowest_next(self, a: int, b: int, t: int) -> int:
        """Smallest fresh letter that may come next from state (a, b, t).

        After placing letter i <= a, every remaining letter above i follows
        it in decreasing order, so together with i they must stay shorter
        than k.  Those letters are the a-i fresh ones, a+1 when b > 0, and
        the t letters of L.
        """
        room = self.k - 2 - t - (1 if b else 0)
        return max(1, a - room)

    def transitions(self, b: int, L: CountList, a: int | None = None) -> list[tuple[int, State123]]:
        """One-letter moves out of (a, b, L) as (fresh-drop, successor) pairs.

        With `a` given, returns concrete successor states and clamps at
        letter 1.  With `a=None` the fresh block is taken to be unbounded
        and the successor's `a` field holds the drop d >= 1 in a instead.
        """
        r, k = self.r, self.k
        t = len(L)
        out: list[tuple[int, State123]] = []
        room = k - 2 - t - (1 if b else 0)
        head = (b,) + L if b else L
        for d in range(room + 1):
            # next letter is i = a - d; it becomes the new a+1 with r-1 copies left
            if a is not None and a - d < 1:
                break
            new_a = (a - d - 1) if a is not None else d + 1
            out.append((d + 1, (new_a, r - 1, (r,) * d + head)))
        if b:
            out.append((0, (a if a is not None else 0, b - 1, L)))
        if t:
            out.append((0, (a if a is not None else 0, b, remove_zeros(L[:-1] + (L[-1] - 1,)))))
        return out

    def _check(self, a: int, b: int, L: CountList) -> None:
        self.states_checked += 1
        if len(L) > self.k - 2:
            raise InvariantViolation(f"|L| = {len(L)} exceeds k-2 = {self.k - 2} in {(a, b, L)}")
        if not 0 <= b <= self.r:
            raise InvariantViolation(f"b = {b} outside 0..{self.r}")
        if any(not 1 <= x <= self.r for x in L):
            raise InvariantViolation(f"L = {L} has entries outside 1..{self.r}")
        if a < 0:
            raise InvariantViolation(f"a = {a} is negative")

    def count_state(self, a: int, b: int, L: Sequence[int]) -> int:
        L = tuple(L)
        with recursion_headroom(self.r * a + b + sum(L)):
            return self._count(a, b, L)

    def _count(self, a: int, b: int, L: CountList) -> int:
        key = (a, b, L)
        memo = self.memo
        if key in memo:
            return memo[key]
        if self.check_invariants:
            self._check(a, b, L)
        if a == 0 and b == 0 and not L:
            return 1
        total = 0
        for _, (na, nb, nL) in self.transitions(b, L, a):
            total += self._count(na, nb, nL)
        memo[key] = total
        return total

    def count_words(self, n: int) -> int:
        if n < 0:
            raise InputError(f"n must be nonnegative, got {n}")
        if n == 0:
            return 1
        # n is the largest letter, so prepending it can never create a pattern
        return self.count_state(n - 1, self.r, ())

    def series(self, N: int) -> list[int]:
        if N < 0:
            raise InputError(f"N must be nonnegative, got {N}")
        return [self.count_words(n) for n in range(N + 1)]


def count_words(n: int, r: int, k: int, check_invariants: bool = False) -> int:
    """Words on [n]^r avoiding both 123 and 1k(k-1)...2."""
    if n < 0:
        raise InputError(f"n must be nonnegative, got {n}")
    return RevKEngine123(r, k, check_invariants).count_words(n)


def series_123(r: int, k: int, N: int, check_invariants: bool = False) -> list[int]:
    return RevKEngine123(r, k, check_invariants).series(N)
