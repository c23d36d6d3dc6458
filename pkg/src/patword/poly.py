"""Dense integer polynomials and a fraction-free determinant over Z[x].

A polynomial is an immutable `IntPoly` wrapping its coefficients in
ascending degree.  Trailing zeros are always stripped, so the zero
polynomial has no coefficients.
"""
from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence

from .errors import InvariantViolation


def _strip(cs: Iterable[int]) -> tuple[int, ...]:
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


class IntPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        cs = _strip(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"coefficient {c!r} is not an integer")
        self.coeffs = cs

    @classmethod
    def x(cls) -> IntPoly:
        return cls((0, 1))

    @classmethod
    def const(cls, c: int) -> IntPoly:
        return cls((c,))

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPoly.const(other)
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lead(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __neg__(self) -> IntPoly:
        return IntPoly(-c for c in self.coeffs)

    def __add__(self, other: IntPoly | int) -> IntPoly:
        other = _lift(other)
        n = max(len(self), len(other))
        return IntPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __sub__(self, other: IntPoly | int) -> IntPoly:
        return self + (-_lift(other))

    def __rsub__(self, other: int) -> IntPoly:
        return _lift(other) - self

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        other = _lift(other)
        if not self or not other:
            return IntPoly()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def truncate(self, n: int) -> IntPoly:
        """Terms of degree below n."""
        return IntPoly(self.coeffs[:n])

    def reversed(self, degree: int) -> IntPoly:
        """x^degree * p(1/x)."""
        return IntPoly(self[degree - i] for i in range(degree + 1))

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive(self) -> IntPoly:
        """Divide out the content and make the leading coefficient positive."""
        g = self.content()
        if g == 0:
            return self
        if self.lead < 0:
            g = -g
        return IntPoly(c // g for c in self.coeffs)

    def divexact(self, other: IntPoly | int) -> IntPoly:
        """Quotient of an exact division in Z[x]; raises if not exact."""
        other = _lift(other)
        q, rem = self.pseudo_divmod(other, exact=True)
        if rem:
            raise InvariantViolation(f"{self} is not divisible by {other}")
        return q

    def pseudo_divmod(self, other: IntPoly, exact: bool = False) -> tuple[IntPoly, IntPoly]:
        """Division with remainder.

        With ``exact=True`` the quotient coefficients must come out integral;
        otherwise a pseudo-remainder is returned: lead(other)^e * self =
        q * other + rem with e = deg(self) - deg(other) + 1.
        """
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other)
        if dq < 0:
            return IntPoly(), self
        q = [0] * (dq + 1)
        lc = other.lead
        for shift in range(dq, -1, -1):
            top = rem[shift + other.degree]
            if exact:
                if top % lc:
                    raise InvariantViolation(f"{self} is not divisible by {other}")
                f = top // lc
            else:
                rem = [c * lc for c in rem]
                q = [c * lc for c in q]
                f = top
            q[shift] = f
            if f:
                for j, b in enumerate(other.coeffs):
                    rem[shift + j] -= f * b
        return IntPoly(q), IntPoly(rem[:other.degree] if other.degree > 0 else ())

    def subs_power(self, r: int) -> IntPoly:
        """Replace x^r by x; every exponent must be a multiple of r."""
        if any(c for i, c in enumerate(self.coeffs) if i % r):
            raise InvariantViolation(f"{self} is not a polynomial in x^{r}")
        return IntPoly(self.coeffs[::r])


def _lift(p: IntPoly | int) -> IntPoly:
    return IntPoly.const(p) if isinstance(p, int) else p


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd of two integer polynomials (primitive remainder sequence)."""
    a, b = a.primitive(), b.primitive()
    while b:
        _, rem = a.pseudo_divmod(b)
        a, b = b, rem.primitive()
    return a.primitive() if a else a


def det(matrix: Sequence[Sequence[IntPoly]]) -> IntPoly:
    """Determinant of a square matrix over Z[x] by Bareiss elimination.

    Every intermediate entry is itself a minor, so the divisions are exact
    and no fractions appear.
    """
    a = [list(row) for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix is not square")
    if n == 0:
        return IntPoly.const(1)
    sign = 1
    prev = IntPoly.const(1)
    for p in range(n - 1):
        if not a[p][p]:
            for i in range(p + 1, n):
                if a[i][p]:
                    a[p], a[i] = a[i], a[p]
                    sign = -sign
                    break
            else:
                return IntPoly()
        piv = a[p][p]
        for i in range(p + 1, n):
            aip = a[i][p]
            row_i, row_p = a[i], a[p]
            for j in range(p + 1, n):
                v = row_i[j] * piv
                if aip and row_p[j]:
                    v = v - aip * row_p[j]
                row_i[j] = v.divexact(prev) if v else v
            row_i[p] = IntPoly()
        prev = piv
    d = a[n - 1][n - 1]
    return -d if sign < 0 else d


def charpoly(matrix: Sequence[Sequence[int]]) -> IntPoly:
    """det(xI - M) for an integer matrix M."""
    x = IntPoly.x()
    n = len(matrix)
    grid = [[(x if i == j else IntPoly()) - IntPoly.const(matrix[i][j]) for j in range(n)]
            for i in range(n)]
    return det(grid)
