"""Counting words on [n]^r avoiding both 1234 and 1k(k-1)...2.

Words are built left to right.  A state records

* ``a``: letters 1..a are untouched (r copies each remain);
* ``L``: remaining copies of the letters a+1..a+t, a window of fixed width
  t = 6(k-2)+2; letters above a+t are used up and can no longer take part
  in a forbidden pattern;
* ``M``: the live left-to-right minima as window offsets, largest first;
* ``S``: for each live minimum, the later letters larger than it (its
  activated sequence), as window offsets in order of appearance.

Offsets are 1-based, so offset j names the letter a+j.
"""
from __future__ import annotations

from bisect import bisect_left
from pathlib import Path
from typing import Sequence

from ._recursion import recursion_headroom
from .errors import DataError, InputError, InvariantViolation, ResourceLimitError

Offsets = tuple[int, ...]
State1234 = tuple[int, Offsets, tuple[Offsets, ...], Offsets]

VARIANTS = ("appended", "literal")
CACHE_MAGIC = "patword-cache v1"


def window_width(k: int) -> int:
    return 6 * (k - 2) + 2


def fix(m: int, S: Sequence[int], L: Sequence[int]) -> Offsets:
    """`S` followed by every remaining letter above `m`, largest first."""
    tail = [j for j in range(len(L), m, -1) for _ in range(L[j - 1])]
    return tuple(S) + tuple(tail)


def reduce(L: Sequence[int], i: int) -> Offsets:
    if L[i - 1] < 1:
        raise InvariantViolation(f"no copies of offset {i} left in {tuple(L)}")
    out = list(L)
    out[i - 1] -= 1
    return tuple(out)


def remove(r: int, M: Sequence[int], S: Sequence[Sequence[int]], L: Sequence[int],
           i: int) -> tuple[Offsets, tuple[Offsets, ...], Offsets]:
    """Drop window slot `i` and slide the window down by one fresh letter."""
    def shift(x: int) -> int:
        return x + 1 if x < i else x

    M2 = tuple(shift(x) for x in M)
    S2 = tuple(tuple(shift(x) for x in s) for s in S)
    L2 = (r,) + tuple(L[:i - 1]) + tuple(L[i:])
    return M2, S2, L2


def has_decreasing_run(seq: Sequence[int], length: int) -> bool:
    """True if `seq` has a strictly decreasing subsequence of the given length."""
    if length <= 0:
        return True
    tails: list[int] = []
    for x in seq:
        pos = bisect_left(tails, -x)
        if pos == len(tails):
            tails.append(-x)
            if len(tails) >= length:
                return True
        else:
            tails[pos] = -x
    return False


class RevKEngine1234:
    """Memoized counter for words avoiding 1234 and 1k(k-1)...2.

    ``variant="appended"`` (the default) adds each newly placed letter to
    the activated sequences that survive it and rejects the move when the
    first of them then holds a decreasing run of length k-1.
    ``variant="literal"`` leaves the surviving sequences untouched; it
    never sees most 1k(k-1)...2 occurrences and is kept only so the difference can be
    demonstrated against the brute-force oracle.
    """

    def __init__(self, r: int, k: int, check_invariants: bool = False,
                 variant: str = "appended") -> None:
        if r < 1:
            raise InputError(f"r must be at least 1, got {r}")
        if k < 3:
            raise InputError(f"k must be at least 3, got {k}")
        if variant not in VARIANTS:
            raise InputError(f"unknown variant {variant!r}")
        self.r = r
        self.k = k
        self.t = window_width(k)
        self.n_candidates = 2 * (k - 2) + 1
        self.max_minima = 2 * r * (k - 2) + 1
        self.max_activated = 2 * r * (k - 2)
        self.check_invariants = check_invariants
        self.variant = variant
        self.memo: dict[State1234, int] = {}
        self.states_checked = 0

    def initial_state(self, n: int) -> State1234:
        r, t = self.r, self.t
        if n >= t:
            return n - t, (), (), (r,) * t
        return 0, (), (), (r,) * n + (0,) * (t - n)

    def check_state(self, a: int, M: Offsets, S: tuple[Offsets, ...], L: Offsets) -> None:
        self.states_checked += 1
        state = (a, M, S, L)
        if len(L) != self.t:
            raise InvariantViolation(f"|L| = {len(L)} != {self.t} in {state}")
        if len(M) != len(S):
            raise InvariantViolation(f"|M| != |S| in {state}")
        if len(M) > self.max_minima:
            raise InvariantViolation(f"u = {len(M)} exceeds {self.max_minima} in {state}")
        for s in S:
            if len(s) > self.max_activated:
                raise InvariantViolation(
                    f"activated sequence of length {len(s)} exceeds {self.max_activated} in {state}")
        if any(x <= y for x, y in zip(M, M[1:])):
            raise InvariantViolation(f"M not strictly decreasing in {state}")
        for x in M + tuple(y for s in S for y in s):
            if not 1 <= x <= self.t:
                raise InvariantViolation(f"offset {x} outside 1..{self.t} in {state}")
        if a < 0 or any(not 0 <= x <= self.r for x in L):
            raise InvariantViolation(f"bad letter counts in {state}")

    def successor(self, a: int, M: Offsets, S: tuple[Offsets, ...], L: Offsets,
                  i: int) -> State1234 | None:
        """State after appending offset `i`, or None if that move is dead."""
        placed = self.place(M, S, L, i)
        if placed is None:
            return None
        return self.slide(a, *placed)[0]

    def place(self, M: Offsets, S: tuple[Offsets, ...], L: Offsets,
              i: int) -> tuple[Offsets, tuple[Offsets, ...], Offsets] | None:
        """Append offset `i` without touching the window; None if dead."""
        k = self.k
        L2 = reduce(L, i)
        if not M or i <= M[-1]:
            if M and i == M[-1] and self.variant == "appended":
                # a repeat of the current minimum is not a new minimum
                return M, S, L2
            if M and not S[-1]:
                return M[:-1] + (i,), S, L2
            return M + (i,), S + ((),), L2
        h = next(j for j, m in enumerate(M) if i > m)
        top = not any(L[j] for j in range(i, len(L)))
        if S[0] and i > min(S[0]) and not top:
            return None
        for j in range(h):
            if has_decreasing_run(fix(M[j], S[j], L), k - 1):
                return None
        M2, S2 = M[h:], S[h:]
        if self.variant == "appended":
            S2 = tuple(s + (i,) for s in S2)
            # later sequences are suffixes of the first one
            if has_decreasing_run(S2[0], k - 1):
                return None
        return M2, S2, L2

    def slide(self, a: int, M: Offsets, S: tuple[Offsets, ...],
              L: Offsets) -> tuple[State1234, list[int]]:
        """Drop used-up unreferenced slots, pulling untouched letters into the window.

        Returns the new state and the removed slots (ascending, as offsets
        before the slide).
        """
        used = set(M)
        for s in S:
            used.update(s)
        J = [j for j in range(1, len(L) + 1) if L[j - 1] == 0 and j not in used]
        for j in J:
            M, S, L = remove(self.r, M, S, L, j)
        a2 = a - len(J)
        if a2 < 0:
            # the slid-in letters do not exist; they are the leading nonzero slots
            L2 = list(L)
            left = -a2
            for idx, x in enumerate(L2):
                if not left:
                    break
                if x:
                    L2[idx] = 0
                    left -= 1
            L = tuple(L2)
            a2 = 0
        return (a2, M, S, L), J

    def count_state(self, a: int, M: Sequence[int], S: Sequence[Sequence[int]],
                    L: Sequence[int]) -> int:
        state = (a, tuple(M), tuple(tuple(s) for s in S), tuple(L))
        with recursion_headroom(self.r * a + sum(state[3])):
            return self._count(state)

    def _count(self, state: State1234) -> int:
        memo = self.memo
        if state in memo:
            return memo[state]
        a, M, S, L = state
        if self.check_invariants:
            self.check_state(a, M, S, L)
        nonzero = [j for j in range(1, len(L) + 1) if L[j - 1]]
        if a == 0 and not nonzero:
            return 1
        if a > 0 and len(nonzero) < self.n_candidates:
            raise ResourceLimitError(
                f"window of width {self.t} too narrow for state {state}: "
                f"an untouched letter would be a legal next letter")
        total = 0
        for i in nonzero[-self.n_candidates:]:
            nxt = self.successor(a, M, S, L, i)
            if nxt is not None:
                total += self._count(nxt)
        memo[state] = total
        return total

    def count_words(self, n: int) -> int:
        if n < 0:
            raise InputError(f"n must be nonnegative, got {n}")
        if n == 0:
            return 1
        return self.count_state(*self.initial_state(n))

    def series(self, N: int) -> list[int]:
        if N < 0:
            raise InputError(f"N must be nonnegative, got {N}")
        return [self.count_words(n) for n in range(N + 1)]

    # memo persistence

    def save_cache(self, path: str | Path) -> None:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(f"{CACHE_MAGIC} r={self.r} k={self.k}\n")
            for state in sorted(self.memo):
                fh.write(f"{format_state_key(state)}\t{self.memo[state]}\n")

    def load_cache(self, path: str | Path) -> int:
        """Merge a cache file into the memo; returns the number of records read."""
        with open(path, encoding="ascii") as fh:
            header = fh.readline().strip()
            expected = f"{CACHE_MAGIC} r={self.r} k={self.k}"
            if header != expected:
                raise DataError(f"cache header {header!r} does not match {expected!r}")
            n = 0
            for lineno, line in enumerate(fh, start=2):
                line = line.rstrip("\n")
                if not line:
                    continue
                try:
                    key, value = line.split("\t")
                    state = parse_state_key(key)
                    count = int(value)
                except ValueError as exc:
                    raise DataError(f"{path}:{lineno}: malformed cache record") from exc
                if len(state[3]) != self.t:
                    raise DataError(f"{path}:{lineno}: window width differs from {self.t}")
                self.memo[state] = count
                n += 1
        return n


def _join(xs: Sequence[int]) -> str:
    return ",".join(map(str, xs))


def _split(text: str) -> Offsets:
    return tuple(int(x) for x in text.split(",")) if text else ()


def format_state_key(state: State1234) -> str:
    a, M, S, L = state
    return f"{a}|{_join(M)}|{';'.join(_join(s) for s in S)}|{_join(L)}"


def parse_state_key(text: str) -> State1234:
    a, m, s, l = text.split("|")
    M = _split(m)
    # |S| = |M| disambiguates "" (no sequences) from a single empty sequence
    S = tuple(_split(part) for part in s.split(";")) if M else ()
    if len(S) != len(M):
        raise ValueError(f"{len(S)} sequences for {len(M)} minima")
    return int(a), M, S, _split(l)


def count_words(n: int, r: int, k: int, check_invariants: bool = False) -> int:
    """Words on [n]^r avoiding both 1234 and 1k(k-1)...2."""
    if n < 0:
        raise InputError(f"n must be nonnegative, got {n}")
    return RevKEngine1234(r, k, check_invariants).count_words(n)


def series_1234(r: int, k: int, N: int, check_invariants: bool = False) -> list[int]:
    return RevKEngine1234(r, k, check_invariants).series(N)
