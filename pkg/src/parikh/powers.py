"""Closed-form matrix powers, exact roots, and power membership tests.

The m-th power of a unitriangular matrix has a closed form: entry (i, j)
is a sum over path lengths t of binomial(m, t) times the sum of products
of entries along strictly increasing index paths from i to j with t steps.
Path sums are built by dynamic programming on t, never by enumerating
index tuples.  Everything is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Optional

from .errors import DimensionMismatch
from .matrices import OrderedAlphabet, UnitriangularMatrix, parikh_matrix
from .words import word_power


def _path_sum_tables(rows) -> list[list[list[int]]]:
    """tables[t][i][j] = sum over increasing paths i -> j with exactly t steps
    of the products of traversed entries, for t = 1 .. n-1 (index 0 unused)."""
    n = len(rows)
    base = [[rows[i][j] if j > i else 0 for j in range(n)] for i in range(n)]
    tables = [None, base]
    for t in range(2, n):
        prev = tables[t - 1]
        cur = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + t, n):
                cur[i][j] = sum(prev[i][k] * rows[k][j] for k in range(i + t - 1, j))
        tables.append(cur)
    return tables


def matrix_power(matrix: UnitriangularMatrix, exponent: int) -> UnitriangularMatrix:
    """Closed-form m-th power (m >= 1); agrees with iterated multiplication.

    binomial(m, t) vanishes for t > m, so no case split on small exponents
    is needed.
    """
    if exponent < 1:
        raise ValueError("exponent must be a positive integer")
    n = matrix.dimension
    tables = _path_sum_tables(matrix.rows)
    out = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            out[i][j] = sum(comb(exponent, t) * tables[t][i][j] for t in range(1, j - i + 1))
    return UnitriangularMatrix(out)


def matrix_root(matrix: UnitriangularMatrix, exponent: int) -> Optional[UnitriangularMatrix]:
    """The unique X with X**m equal to ``matrix``, or ``None`` if none exists.

    Entries are recovered diagonal by diagonal: at offset 1 the power scales
    entries by m; at offset d the contribution of already-recovered shorter
    paths is subtracted and the remainder must divide by m into a
    nonnegative integer.  A final exact check guards the reconstruction.
    """
    if exponent < 1:
        raise ValueError("exponent must be a positive integer")
    if exponent == 1:
        return matrix
    n = matrix.dimension
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for d in range(1, n):
        for i in range(n - d):
            j = i + d
            correction = 0
            if d > 1:
                sums = _path_sums_from(rows, i, j)
                correction = sum(comb(exponent, t) * sums[t] for t in range(2, d + 1))
            value = matrix.rows[i][j] - correction
            if value < 0 or value % exponent:
                return None
            rows[i][j] = value // exponent
    candidate = UnitriangularMatrix(rows)
    return candidate if matrix_power(candidate, exponent) == matrix else None


def _path_sums_from(rows, i: int, j: int) -> list[int]:
    """sums[t] = t-step increasing path sum from i to j over ``rows``."""
    d = j - i
    # reach[t][k] = sum over t-step paths i -> k
    reach = [dict() for _ in range(d + 1)]
    reach[1] = {k: rows[i][k] for k in range(i + 1, j + 1)}
    for t in range(2, d + 1):
        cur = {}
        for k in range(i + t, j + 1):
            cur[k] = sum(reach[t - 1].get(l, 0) * rows[l][k] for l in range(i + t - 1, k))
        reach[t] = cur
    return [0] + [reach[t].get(j, 0) for t in range(1, d + 1)]


def binary_power_is_parikh(matrix: UnitriangularMatrix, exponent: int) -> bool:
    """Whether the m-th power of a 3x3 matrix is the image of some word.

    With a, b the second-diagonal entries and c the corner: if a or b is
    zero the power is an image exactly when c is zero; otherwise exactly
    when 2c <= (m+1)ab (kept in integers to stay exact).
    """
    if matrix.dimension != 3:
        raise DimensionMismatch("binary power membership applies to 3x3 matrices only")
    if exponent < 1:
        raise ValueError("exponent must be a positive integer")
    a, b = matrix.rows[0][1], matrix.rows[1][2]
    c = matrix.rows[0][2]
    if a == 0 or b == 0:
        return c == 0
    return 2 * c <= (exponent + 1) * a * b


@dataclass(frozen=True)
class MinPower:
    """Least exponent making the power an image of a word.

    ``power_is_identity`` marks the degenerate all-zero matrix, whose powers
    are all the identity (the image of the empty word only).
    """

    exponent: int
    power_is_identity: bool = False


def min_power_to_parikh(matrix: UnitriangularMatrix) -> Optional[MinPower]:
    """Least m >= 1 whose m-th power is the image of a word, or ``None``.

    For positive a, b the answer is the least m with 2c <= (m+1)ab.  When
    a or b vanishes with c positive no power ever qualifies.  The all-zero
    matrix reports exponent 1 with the identity flag set.
    """
    if matrix.dimension != 3:
        raise DimensionMismatch("binary power membership applies to 3x3 matrices only")
    a, b = matrix.rows[0][1], matrix.rows[1][2]
    c = matrix.rows[0][2]
    if a == 0 and b == 0 and c == 0:
        return MinPower(1, power_is_identity=True)
    if a == 0 or b == 0:
        return MinPower(1) if c == 0 else None
    m = -(-2 * c // (a * b)) - 1  # ceil(2c / ab) - 1
    return MinPower(max(1, m))


@dataclass(frozen=True)
class PowerEquivalenceReport:
    """Per-exponent equality of the matrices of two word powers.

    The outcomes must be uniform: either the powers share a matrix for every
    exponent or for none.  ``uniform`` is False only if that dichotomy were
    violated, which would indicate an implementation bug.
    """

    left: str
    right: str
    max_exponent: int
    outcomes: tuple[bool, ...]

    @property
    def always_equivalent(self) -> bool:
        return all(self.outcomes)

    @property
    def never_equivalent(self) -> bool:
        return not any(self.outcomes)

    @property
    def uniform(self) -> bool:
        return self.always_equivalent or self.never_equivalent

    @property
    def branch(self) -> str:
        if self.always_equivalent:
            return "always equivalent"
        if self.never_equivalent:
            return "never equivalent"
        return "mixed"


def power_equivalence_dichotomy(
    alphabet: OrderedAlphabet, left: str, right: str, max_exponent: int
) -> PowerEquivalenceReport:
    """Check for m = 1..max_exponent whether the m-th powers share a matrix."""
    if max_exponent < 1:
        raise ValueError("max_exponent must be a positive integer")
    outcomes = tuple(
        parikh_matrix(alphabet, word_power(left, m)) == parikh_matrix(alphabet, word_power(right, m))
        for m in range(1, max_exponent + 1)
    )
    return PowerEquivalenceReport(left, right, max_exponent, outcomes)
