"""Canonical right-to-left decompositions of word-image matrices.

A matrix M (the image of a nonempty word) factors as M = A * B**n where B
is a non-identity word image and A is a word image.  The canonical stage
picks n as large as possible; among decompositions at that n the base
weight (second-diagonal sum of B) is extremal: maximal when n > 1,
minimal over constrained splits when n = 1.  Iterating the stage on A
yields the normal form(s) of M; there may be several, and the identity
normalizes to the empty product.

All searches are exhaustive over candidate bases certified as word images,
so everything runs under the enumeration bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from itertools import product
from math import comb
from typing import NamedTuple, Optional

from .errors import (
    BoundExceeded,
    DimensionMismatch,
    NoDecomposition,
    NotAParikhMatrix,
    PreconditionViolated,
)
from .matrices import (
    OrderedAlphabet,
    UnitriangularMatrix,
    _classes_by_vector,
    is_parikh_matrix,
)
from .powers import matrix_power
from .words import DEFAULT_ENUM_BOUND


def second_diagonal_sum(matrix: UnitriangularMatrix) -> int:
    """Sum of the entries just above the main diagonal.

    For the image of a word this is the word's length.
    """
    return sum(matrix.second_diagonal())


def right_divide(
    matrix: UnitriangularMatrix, base: UnitriangularMatrix, exponent: int
) -> Optional[UnitriangularMatrix]:
    """Solve M = A * base**exponent for A, or ``None`` if A leaves the monoid.

    Unitriangular matrices invert exactly over the integers, so A is always
    computable; it is returned only when every entry lands nonnegative.
    """
    if matrix.dimension != base.dimension:
        raise DimensionMismatch("matrix and base must share a dimension")
    if exponent < 1:
        raise ValueError("exponent must be a positive integer")
    n = matrix.dimension
    inv = matrix_power(base, exponent).inverse_rows()
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = 1
        for j in range(i + 1, n):
            value = sum(matrix.rows[i][k] * inv[k][j] for k in range(i, j + 1))
            if value < 0:
                return None
            rows[i][j] = value
    return UnitriangularMatrix(rows)


def _require_parikh(
    alphabet: OrderedAlphabet, matrix: UnitriangularMatrix, bound: int
) -> None:
    if second_diagonal_sum(matrix) > bound:
        raise BoundExceeded(
            f"matrix weight {second_diagonal_sum(matrix)} exceeds enumeration bound {bound}"
        )
    if not is_parikh_matrix(alphabet, matrix, bound):
        raise NotAParikhMatrix(f"{matrix.to_text()} is not the image of any word")


@lru_cache(maxsize=None)
def _bases_with_vector(
    alphabet: OrderedAlphabet, vector: tuple[int, ...], bound: int
) -> tuple[UnitriangularMatrix, ...]:
    """Distinct word-image matrices with the given second diagonal.

    The 3x3 case enumerates corner values directly via the entry test; larger
    dimensions collect the distinct matrices of all words with that vector.
    """
    if len(vector) == 2:
        x, y = vector
        return tuple(
            UnitriangularMatrix(((1, x, z), (0, 1, y), (0, 0, 1))) for z in range(x * y + 1)
        )
    return tuple(
        UnitriangularMatrix(rows) for rows in _classes_by_vector(alphabet, vector, bound)
    )


def _sub_vectors(limits: tuple[int, ...]):
    """All componentwise vectors 0 <= d <= limits, excluding the zero vector."""
    for combo in product(*(range(lim + 1) for lim in limits)):
        if any(combo):
            yield combo


@lru_cache(maxsize=None)
def _decompositions_at(
    alphabet: OrderedAlphabet, matrix: UnitriangularMatrix, exponent: int, bound: int
) -> tuple[tuple[UnitriangularMatrix, UnitriangularMatrix], ...]:
    """All (A, B) with B a non-identity word image, A a word image, and
    M = A * B**exponent."""
    diag = matrix.second_diagonal()
    limits = tuple(entry // exponent for entry in diag)
    found = []
    for vector in _sub_vectors(limits):
        for base in _bases_with_vector(alphabet, vector, bound):
            left = right_divide(matrix, base, exponent)
            if left is not None and is_parikh_matrix(alphabet, left, bound):
                found.append((left, base))
    return tuple(found)


@lru_cache(maxsize=None)
def max_power_exponent(
    alphabet: OrderedAlphabet, matrix: UnitriangularMatrix, bound: int = DEFAULT_ENUM_BOUND
) -> int:
    """Largest n with M = A * B**n for word images A and non-identity B.

    n = 1 always succeeds via B = M, A = identity, so the search terminates.
    Undefined on the identity (no non-identity base fits).
    """
    _require_parikh(alphabet, matrix, bound)
    if matrix.is_identity:
        raise NotAParikhMatrix("the identity has no non-identity right-power decomposition")
    diag = matrix.second_diagonal()
    for exponent in range(max(diag), 0, -1):
        if _decompositions_at(alphabet, matrix, exponent, bound):
            return exponent
    raise AssertionError("unreachable: exponent 1 always decomposes")


@lru_cache(maxsize=None)
def _exponent_one_pool(
    alphabet: OrderedAlphabet, matrix: UnitriangularMatrix, bound: int
) -> tuple[tuple[UnitriangularMatrix, UnitriangularMatrix], ...]:
    """Candidate exponent-1 stages (A, B) with M = A * B.

    A must be a non-identity image carrying a power of its own (its maximal
    exponent exceeds 1).  Empty when no candidate exists at all; the whole
    matrix then stands as its own stage.
    """
    return tuple(
        (left, base)
        for left, base in _decompositions_at(alphabet, matrix, 1, bound)
        if not left.is_identity and max_power_exponent(alphabet, left, bound) != 1
    )


@lru_cache(maxsize=None)
def canonical_base_weight(
    alphabet: OrderedAlphabet, matrix: UnitriangularMatrix, bound: int = DEFAULT_ENUM_BOUND
) -> int:
    """The extremal base weight over decompositions at the maximal exponent.

    With maximal exponent n > 1: the largest second-diagonal sum of B over
    M = A * B**n.  With n = 1: the smallest second-diagonal sum of B over
    the candidate stage pool (splits M = A * B whose left part is a
    non-identity image carrying a power); when the pool is empty the weight
    of M itself is used.
    """
    exponent = max_power_exponent(alphabet, matrix, bound)
    if exponent > 1:
        pairs = _decompositions_at(alphabet, matrix, exponent, bound)
        return max(second_diagonal_sum(base) for _, base in pairs)
    pool = _exponent_one_pool(alphabet, matrix, bound)
    if pool:
        return min(second_diagonal_sum(base) for _, base in pool)
    return second_diagonal_sum(matrix)


@dataclass(frozen=True)
class DecompositionTriplet:
    """One canonical stage: matrix = left * base**exponent."""

    left: UnitriangularMatrix
    base: UnitriangularMatrix
    exponent: int


@lru_cache(maxsize=None)
def canonical_decompositions(
    alphabet: OrderedAlphabet, matrix: UnitriangularMatrix, bound: int = DEFAULT_ENUM_BOUND
) -> tuple[DecompositionTriplet, ...]:
    """All stages (A, B, n) at the maximal exponent whose base weight is
    canonical, ordered by the text encoding of B then A.

    In the exponent-1 case the kept stages come from the same candidate pool
    the weight minimized over (non-identity left parts carrying powers).
    Without that filter a stage could strand a powerless left part, and
    rebuilding a word from it would not parse back to the same factors.
    """
    exponent = max_power_exponent(alphabet, matrix, bound)
    weight = canonical_base_weight(alphabet, matrix, bound)
    if exponent == 1:
        pairs = _exponent_one_pool(alphabet, matrix, bound) or _decompositions_at(
            alphabet, matrix, 1, bound
        )
    else:
        pairs = _decompositions_at(alphabet, matrix, exponent, bound)
    triples = [
        DecompositionTriplet(left, base, exponent)
        for left, base in pairs
        if second_diagonal_sum(base) == weight
    ]
    triples.sort(key=lambda t: (t.base.to_text(), t.left.to_text()))
    return tuple(triples)


@dataclass(frozen=True)
class MatrixNormalForm:
    """Factor sequence B_k**n_k ... B_0**n_0, stored left to right.

    The rightmost factor is the first extracted stage; the empty sequence is
    the form of the identity.
    """

    factors: tuple[tuple[UnitriangularMatrix, int], ...]

    def product(self, dimension: Optional[int] = None) -> UnitriangularMatrix:
        parts = [matrix_power(base, exp) for base, exp in self.factors]
        if parts:
            return reduce(lambda x, y: x * y, parts)
        if dimension is None:
            raise ValueError("empty form needs an explicit dimension")
        return UnitriangularMatrix.identity(dimension)

    def render(self) -> str:
        if not self.factors:
            return "(identity)"
        parts = []
        for base, exp in self.factors:
            text = f"[{base.to_text()}]"
            parts.append(text if exp == 1 else f"{text}^{exp}")
        return " ".join(parts)

    def to_json_dict(self) -> dict:
        return {
            "factors": [
                {"base": base.to_json_dict(), "exp": exp} for base, exp in self.factors
            ]
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "MatrixNormalForm":
        return cls(
            tuple(
                (UnitriangularMatrix.from_json_dict(f["base"]), int(f["exp"]))
                for f in data["factors"]
            )
        )


@lru_cache(maxsize=None)
def matrix_normal_forms(
    alphabet: OrderedAlphabet, matrix: UnitriangularMatrix, bound: int = DEFAULT_ENUM_BOUND
) -> tuple[MatrixNormalForm, ...]:
    """Every normal form of ``matrix``, canonically ordered.

    Recursion over canonical stages: each stage (A, B, n) contributes the
    forms of A extended by the factor B**n; the identity contributes the
    empty form.  The left parts strictly lose weight, so recursion ends.
    """
    _require_parikh(alphabet, matrix, bound)
    if matrix.is_identity:
        return (MatrixNormalForm(()),)
    forms = set()
    for triple in canonical_decompositions(alphabet, matrix, bound):
        for prefix in matrix_normal_forms(alphabet, triple.left, bound):
            forms.add(MatrixNormalForm(prefix.factors + ((triple.base, triple.exponent),)))
    return tuple(sorted(forms, key=lambda f: [(b.to_text(), e) for b, e in f.factors]))


def is_primitive(
    alphabet: OrderedAlphabet, matrix: UnitriangularMatrix, bound: int = DEFAULT_ENUM_BOUND
) -> bool:
    """True iff the only normal form of ``matrix`` is the single factor
    ``matrix`` itself (the identity counts as primitive via its empty form)."""
    forms = matrix_normal_forms(alphabet, matrix, bound)
    if matrix.is_identity:
        return forms == (MatrixNormalForm(()),)
    return forms == (MatrixNormalForm(((matrix, 1),)),)


class BinaryDecomposition(NamedTuple):
    """One solution of the 3x3 stage system M = A * B**n.

    p, q, r are the entries of A; x, y, z the entries of B (top, bottom,
    corner); n the exponent.
    """

    n: int
    p: int
    q: int
    r: int
    x: int
    y: int
    z: int


def binary_decomposition_search(
    matrix: UnitriangularMatrix, mode: str = "complete"
) -> tuple[BinaryDecomposition, ...]:
    """Search 3x3 decompositions M = A * B**n with n as large as possible.

    Descends n from max(u, v) and returns every solution at the first n where
    any exists.  ``faithful`` mode demands both base diagonal entries positive
    and raises :class:`NoDecomposition` when even n = 1 yields nothing;
    ``complete`` mode (default) allows bases with one zero diagonal entry,
    which some canonical stages require, and always succeeds on word images.
    Both modes require positive diagonal entries u, v on the input.
    """
    if matrix.dimension != 3:
        raise DimensionMismatch("the decomposition search applies to 3x3 matrices only")
    if mode not in ("faithful", "complete"):
        raise ValueError("mode must be 'faithful' or 'complete'")
    u, v = matrix.rows[0][1], matrix.rows[1][2]
    t = matrix.rows[0][2]
    if u == 0 or v == 0:
        raise PreconditionViolated("both second-diagonal entries must be positive")
    if t > u * v:
        raise NotAParikhMatrix(f"{matrix.to_text()} is not the image of any word")

    for n in range(max(u, v), 0, -1):
        solutions = []
        for x in range(u // n + 1):
            for y in range(v // n + 1):
                if x == 0 and y == 0:
                    continue
                if mode == "faithful" and (x == 0 or y == 0):
                    continue
                p = u - n * x
                q = v - n * y
                for z in range(x * y + 1):
                    r = t - n * p * y - n * z - comb(n, 2) * x * y
                    if 0 <= r <= p * q:
                        solutions.append(BinaryDecomposition(n, p, q, r, x, y, z))
        if solutions:
            return tuple(sorted(solutions))
    raise NoDecomposition(f"no decomposition of {matrix.to_text()} at any exponent")
