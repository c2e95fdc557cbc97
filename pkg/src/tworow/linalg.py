"""Exact linear algebra over Q and Q[t].

Everything here is fraction-free or plain rational arithmetic; there are
no floating-point operations and no rank thresholds anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Callable, Hashable, Iterable, Mapping, Optional, Sequence

from .tpoly import TPoly


def tpoly_det_bareiss(matrix: Sequence[Sequence[TPoly]]) -> TPoly:
    """Determinant of a square matrix over Q[t] by fraction-free elimination.

    Bareiss' update keeps every intermediate entry equal to a minor of
    the input, so the divisions below are exact in Q[t].
    """
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square")
    if n == 0:
        return TPoly.one()
    a = [list(row) for row in matrix]
    sign = 1
    prev = TPoly.one()
    for col in range(n - 1):
        if not a[col][col]:
            for r in range(col + 1, n):
                if a[r][col]:
                    a[col], a[r] = a[r], a[col]
                    sign = -sign
                    break
            else:
                return TPoly.zero()
        pivot = a[col][col]
        for i in range(col + 1, n):
            for j in range(col + 1, n):
                num = pivot * a[i][j] - a[i][col] * a[col][j]
                a[i][j] = num.exact_div(prev)
            a[i][col] = TPoly.zero()
        prev = pivot
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def tpoly_det_cofactor(matrix: Sequence[Sequence[TPoly]]) -> TPoly:
    """Determinant by cofactor expansion; an independent cross-check for
    small matrices."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square")
    if n == 0:
        return TPoly.one()
    if n == 1:
        return matrix[0][0]
    total = TPoly.zero()
    for j in range(n):
        entry = matrix[0][j]
        if not entry:
            continue
        minor = [
            [row[c] for c in range(n) if c != j] for row in matrix[1:]
        ]
        term = entry * tpoly_det_cofactor(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


def integer_det_bareiss(matrix: Sequence[Sequence[int]]) -> int:
    """Exact integer determinant, fraction-free."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1
    a = [list(row) for row in matrix]
    sign = 1
    prev = 1
    for col in range(n - 1):
        if a[col][col] == 0:
            for r in range(col + 1, n):
                if a[r][col]:
                    a[col], a[r] = a[r], a[col]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[col][col]
        for i in range(col + 1, n):
            for j in range(col + 1, n):
                a[i][j] = (pivot * a[i][j] - a[i][col] * a[col][j]) // prev
            a[i][col] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class TPolySolveResult:
    """Outcome of an exact square solve over Q[t].

    The solution components are the rational functions
    numerators[i] / denominator.  ``is_polynomial`` reports whether every
    component is a genuine element of Q[t], in which case ``quotients``
    holds the divided-out values.
    """

    singular: bool
    numerators: Optional[tuple[TPoly, ...]] = None
    denominator: Optional[TPoly] = None
    is_polynomial: bool = False
    quotients: Optional[tuple[TPoly, ...]] = None


def solve_tpoly_system(
    matrix: Sequence[Sequence[TPoly]], rhs: Sequence[TPoly]
) -> TPolySolveResult:
    """Solve M x = b over the fraction field of Q[t] by Cramer's rule with
    Bareiss determinants.  A singular matrix yields a report, not an error."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square")
    if len(rhs) != n:
        raise ValueError("right-hand side has wrong length")
    det = tpoly_det_bareiss(matrix)
    if not det:
        return TPolySolveResult(singular=True)
    numerators = []
    for col in range(n):
        replaced = [
            [rhs[i] if j == col else matrix[i][j] for j in range(n)]
            for i in range(n)
        ]
        numerators.append(tpoly_det_bareiss(replaced))
    quotients = []
    polynomial = True
    for num in numerators:
        q, r = divmod(num, det)
        if r:
            polynomial = False
            break
        quotients.append(q)
    return TPolySolveResult(
        singular=False,
        numerators=tuple(numerators),
        denominator=det,
        is_polynomial=polynomial,
        quotients=tuple(quotients) if polynomial else None,
    )


def solve_rational(
    matrix: Sequence[Sequence[Fraction | int]], rhs: Sequence[Fraction | int]
) -> Optional[list[Fraction]]:
    """Solve a square rational system by exact Gaussian elimination.
    Returns None when the matrix is singular."""
    n = len(matrix)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square")
    if len(rhs) != n:
        raise ValueError("right-hand side has wrong length")
    a = [[Fraction(v) for v in row] + [Fraction(rhs[i])] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if a[r][col]), None)
        if pivot_row is None:
            return None
        a[col], a[pivot_row] = a[pivot_row], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                factor = a[r][col]
                a[r] = [v - factor * p for v, p in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def _integer_row(row: Mapping[Hashable, Fraction | int]) -> dict[Hashable, int]:
    scale = 1
    for v in row.values():
        if isinstance(v, Fraction):
            scale = lcm(scale, v.denominator)
    out = {}
    for col, v in row.items():
        iv = int(v * scale) if isinstance(v, Fraction) else v * scale
        if iv:
            out[col] = iv
    return out


def _content_reduce(row: dict[Hashable, int]) -> None:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return
    if g > 1:
        for col in row:
            row[col] //= g


class SparseExactRREF:
    """Incrementally maintained reduced row-echelon form over Q.

    Rows are sparse integer vectors indexed by arbitrary hashable column
    keys; ``key`` orders the columns (the pivot of a row is its largest
    column).  Keeping the form fully reduced means every stored row
    touches only its own pivot plus non-pivot columns, which keeps the
    rows short and insertions cheap.
    """

    def __init__(self, key: Optional[Callable[[Hashable], object]] = None):
        self._key = key if key is not None else (lambda c: c)
        self._rows: dict[Hashable, dict[Hashable, int]] = {}
        self._touch: dict[Hashable, set[Hashable]] = {}

    @property
    def rank(self) -> int:
        return len(self._rows)

    def pivot_rows(self) -> list[dict[Hashable, int]]:
        return [dict(row) for row in self._rows.values()]

    def _index(self, row: dict, pivot: Hashable) -> None:
        for col in row:
            self._touch.setdefault(col, set()).add(pivot)

    def _unindex(self, row: dict, pivot: Hashable) -> None:
        for col in row:
            owners = self._touch.get(col)
            if owners:
                owners.discard(pivot)
                if not owners:
                    del self._touch[col]

    @staticmethod
    def _eliminate(target: dict, prow: dict, col: Hashable) -> None:
        a = prow[col]
        b = target[col]
        for c in list(target):
            target[c] *= a
        for c, v in prow.items():
            nv = target.get(c, 0) - v * b
            if nv:
                target[c] = nv
            else:
                target.pop(c, None)
        _content_reduce(target)

    def add_row(self, row: Mapping[Hashable, Fraction | int]) -> bool:
        """Reduce a row against the current form; returns True when it
        increases the rank."""
        r = _integer_row(row)
        if not r:
            return False
        for col in [c for c in r if c in self._rows]:
            if col in r:
                self._eliminate(r, self._rows[col], col)
        if not r:
            return False
        pivot = max(r, key=self._key)
        _content_reduce(r)
        if r[pivot] < 0:
            for c in r:
                r[c] = -r[c]
        for other_pivot in list(self._touch.get(pivot, ())):
            other = self._rows[other_pivot]
            self._unindex(other, other_pivot)
            self._eliminate(other, r, pivot)
            self._index(other, other_pivot)
        self._rows[pivot] = r
        self._index(r, pivot)
        return True


def rational_rank(
    rows: Iterable[Mapping[Hashable, Fraction | int]],
    key: Optional[Callable[[Hashable], object]] = None,
) -> int:
    """Exact rank of a collection of sparse rows over Q."""
    rref = SparseExactRREF(key=key)
    for row in rows:
        rref.add_row(row)
    return rref.rank
