"""Rational generating functions for the counting sequences.

Two routes are provided and kept apart:

* a conjectural one that guesses a constant-coefficient recurrence from
  computed terms (`fit_cfinite`, `conjecture_gf_1234`);
* a rigorous one for the 123 family, built from the transfer matrix of
  the (b, L) recurrence (`build_transfer_system`, `derive_gf_123`).

All arithmetic is exact.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import lcm
from typing import Sequence

from .avoid123 import RevKEngine123
from .avoid1234 import RevKEngine1234
from .errors import DataError, InputError, InvariantViolation, ResourceLimitError
from .poly import IntPoly, charpoly, poly_gcd

RIGOROUS = "rigorous"
CONJECTURAL = "conjectural"

DEFAULT_STATE_CAP = 400


@dataclass(frozen=True)
class RationalGF:
    """numerator / denominator, both in Z[x]."""

    numerator: IntPoly
    denominator: IntPoly

    def __post_init__(self) -> None:
        if self.denominator[0] == 0:
            raise DataError("denominator must have a nonzero constant term")

    @classmethod
    def from_coeffs(cls, num: Sequence[int], den: Sequence[int]) -> RationalGF:
        return cls(IntPoly(num), IntPoly(den))

    def canonical(self) -> RationalGF:
        """Lowest terms, content-free, positive constant term in the denominator."""
        num, den = self.numerator, self.denominator
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num.divexact(g), den.divexact(g)
        c = IntPoly(num.coeffs + den.coeffs).content() or 1
        if den[0] < 0:
            c = -c
        return RationalGF(IntPoly(x // c for x in num.coeffs),
                          IntPoly(x // c for x in den.coeffs))

    def same_function(self, other: RationalGF) -> bool:
        return self.numerator * other.denominator == other.numerator * self.denominator

    def to_text(self) -> str:
        return f"({format_poly(self.numerator)}) / ({format_poly(self.denominator)})"

    def to_dict(self, status: str) -> dict:
        return {
            "numerator": [str(c) for c in self.numerator.coeffs],
            "denominator": [str(c) for c in self.denominator.coeffs],
            "variable": "x",
            "status": status,
        }

    def to_json(self, status: str) -> str:
        return json.dumps(self.to_dict(status))

    @classmethod
    def from_dict(cls, data: dict) -> RationalGF:
        try:
            return cls.from_coeffs([int(c) for c in data["numerator"]],
                                   [int(c) for c in data["denominator"]])
        except (KeyError, TypeError, ValueError) as exc:
            raise DataError(f"malformed generating function record: {data!r}") from exc


def format_poly(p: IntPoly, var: str = "x") -> str:
    if not p:
        return "0"
    parts: list[str] = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def expand_series(gf: RationalGF, N: int) -> list[int]:
    """First N+1 Taylor coefficients; DataError if any is not an integer."""
    num, den = gf.numerator, gf.denominator
    d0 = den[0]
    out: list[int] = []
    for n in range(N + 1):
        acc = num[n] - sum(den[j] * out[n - j] for j in range(1, min(n, den.degree) + 1))
        q, rem = divmod(acc, d0)
        if rem:
            raise DataError(f"coefficient {n} of {gf.to_text()} is {Fraction(acc, d0)}, not an integer")
        out.append(q)
    return out


def _solve_exact(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Some solution of rows . c = rhs, or None if the system is inconsistent."""
    m = len(rows)
    ncols = len(rows[0]) if rows else 0
    aug = [row[:] + [b] for row, b in zip(rows, rhs)]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if p is None:
            continue
        aug[r], aug[p] = aug[p], aug[r]
        pv = aug[r][c]
        aug[r] = [v / pv for v in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    if any(aug[i][-1] != 0 for i in range(r, m)):
        return None
    sol = [Fraction(0)] * ncols
    for i, c in enumerate(pivots):
        sol[c] = aug[i][-1]
    return sol


def fit_cfinite(seq: Sequence[int], max_order: int) -> tuple[int, list[Fraction]] | None:
    """Guess the shortest recurrence a(n) = c_1 a(n-1) + ... + c_d a(n-d).

    The recurrence must hold at every n from d to len(seq)-1; for any
    d <= max_order that leaves at least two equations beyond the d needed
    to pin the coefficients down.
    """
    if max_order < 1:
        raise InputError(f"max_order must be at least 1, got {max_order}")
    if len(seq) < 2 * max_order + 2:
        raise InputError(
            f"{len(seq)} terms cannot support order {max_order} with two guard terms; "
            f"need {2 * max_order + 2}")
    a = [Fraction(v) for v in seq]
    for d in range(1, max_order + 1):
        rows = [[a[n - j] for j in range(1, d + 1)] for n in range(d, len(a))]
        sol = _solve_exact(rows, a[d:])
        if sol is not None:
            return d, sol
    return None


def recurrence_to_gf(coeffs: Sequence[Fraction | int], initial_terms: Sequence[int]) -> RationalGF:
    """Generating function of the sequence with the given recurrence and start."""
    d = len(coeffs)
    if len(initial_terms) < d:
        raise InputError(f"need at least {d} initial terms, got {len(initial_terms)}")
    fr = [Fraction(c) for c in coeffs]
    scale = lcm(*(c.denominator for c in fr)) if fr else 1
    den = IntPoly([scale] + [-int(c * scale) for c in fr])
    num = (IntPoly(initial_terms) * den).truncate(d)
    gf = RationalGF(num, den).canonical()
    if expand_series(gf, len(initial_terms) - 1) != list(initial_terms):
        raise InputError("initial terms do not follow the recurrence")
    return gf


def conjecture_gf_1234(r: int, k: int, terms: int,
                       series: Sequence[int] | None = None) -> RationalGF | None:
    """Guessed generating function sum_n count(n) x^n for the 1234 family.

    Uses the counts for alphabet sizes 0..terms-1 (computed unless passed
    in).  Returns None when no recurrence with two guard terms fits.
    """
    if terms < 1:
        raise InputError(f"terms must be positive, got {terms}")
    if series is None:
        series = RevKEngine1234(r, k).series(terms - 1)
    series = list(series)[:terms]
    max_order = (len(series) - 2) // 2
    if max_order < 1:
        return None
    fit = fit_cfinite(series, max_order)
    if fit is None:
        return None
    _, coeffs = fit
    return recurrence_to_gf(coeffs, series)


StateKey = tuple[int, tuple[int, ...]]


@dataclass
class TransferSystem:
    """One-letter transition counts between (b, L) states of the 123 recurrence."""

    r: int
    k: int
    states: list[StateKey]
    matrix: list[list[int]]
    index: dict[StateKey, int] = field(repr=False)

    @property
    def seed(self) -> int:
        return self.index[(self.r, ())]

    def __len__(self) -> int:
        return len(self.states)


def build_transfer_system(r: int, k: int, state_cap: int = DEFAULT_STATE_CAP) -> TransferSystem:
    """Reachable (b, L) states from (r, []) with the untouched block unbounded."""
    engine = RevKEngine123(r, k)
    seed: StateKey = (r, ())
    index = {seed: 0}
    states = [seed]
    edges: list[dict[int, int]] = []
    queue = deque([seed])
    while queue:
        b, L = queue.popleft()
        row: dict[int, int] = {}
        for _, (_, nb, nL) in engine.transitions(b, L, None):
            key = (nb, nL)
            if key not in index:
                if len(states) >= state_cap:
                    raise ResourceLimitError(
                        f"transfer system for r={r}, k={k} exceeds {state_cap} states")
                index[key] = len(states)
                states.append(key)
                queue.append(key)
            j = index[key]
            row[j] = row.get(j, 0) + 1
        edges.append(row)
    n = len(states)
    matrix = [[edges[i].get(j, 0) for j in range(n)] for i in range(n)]
    return TransferSystem(r, k, states, matrix, index)


def derive_gf_123(r: int, k: int, state_cap: int = DEFAULT_STATE_CAP,
                  engine: RevKEngine123 | None = None) -> RationalGF:
    """Proven generating function sum_n count_words(n, r, k) x^n.

    The counts are graded by total letters N = r*n.  Once N >= 2r(k-1)
    no state's untouched block is short enough to clip the recurrence, so
    the state vector obeys v(N) = M v(N-1) from then on; Cayley-Hamilton
    then bounds the numerator degree below 2r(k-1) - 1 + dim.  The next
    dim coefficients of series * denominator are checked to vanish.
    """
    system = build_transfer_system(r, k, state_cap)
    dim = len(system)
    den = charpoly(system.matrix).reversed(dim)  # det(I - xM)
    if den[0] != 1:
        raise InvariantViolation(f"det(I - xM) has constant term {den[0]}")
    num_bound = 2 * r * (k - 1) - 1 + dim
    top = num_bound + dim
    engine = engine or RevKEngine123(r, k)
    letters = [0] * (top + 1)
    for n in range(top // r + 1):
        letters[r * n] = engine.count_words(n)
    prod = IntPoly(letters) * den
    guards = [prod[j] for j in range(num_bound, top + 1)]
    if any(guards):
        raise InvariantViolation(
            f"series * det(I - xM) does not vanish past degree {num_bound - 1}")
    gf = RationalGF(prod.truncate(num_bound), den).canonical()
    try:
        reduced = RationalGF(gf.numerator.subs_power(r), gf.denominator.subs_power(r))
    except InvariantViolation as exc:
        raise InvariantViolation(f"reduced generating function is not a function of x^{r}") from exc
    return reduced.canonical()
