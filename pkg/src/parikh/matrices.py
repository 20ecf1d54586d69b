"""Upper unitriangular nonnegative-integer matrices and the word morphism.

The matrices here form a multiplicative monoid: unit diagonal, zeros below,
arbitrary-precision nonnegative integers above.  A word maps into the monoid
by sending the q-th letter to the identity plus a single 1 at (q, q+1); the
image matrix then counts scattered subwords of consecutive-letter blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .errors import BoundExceeded, DimensionMismatch
from .words import DEFAULT_ENUM_BOUND, OrderedAlphabet, count_subword, enumerate_words

Rows = tuple[tuple[int, ...], ...]


class UnitriangularMatrix:
    """Immutable square matrix with unit diagonal and nonnegative integer
    entries above it.  Entries grow without overflow (Python ints)."""

    __slots__ = ("rows",)

    def __init__(self, rows) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        n = len(rows)
        if n < 2:
            raise ValueError("dimension must be at least 2")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError("matrix must be square")
            for j, x in enumerate(row):
                if j < i and x != 0:
                    raise ValueError("entries below the diagonal must be zero")
                if j == i and x != 1:
                    raise ValueError("diagonal entries must be one")
                if j > i and x < 0:
                    raise ValueError("entries above the diagonal must be nonnegative")
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("UnitriangularMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "UnitriangularMatrix":
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @property
    def dimension(self) -> int:
        return len(self.rows)

    @property
    def is_identity(self) -> bool:
        return all(x == 0 for i, row in enumerate(self.rows) for j, x in enumerate(row) if j > i)

    def second_diagonal(self) -> tuple[int, ...]:
        return tuple(self.rows[i][i + 1] for i in range(self.dimension - 1))

    def __mul__(self, other: "UnitriangularMatrix") -> "UnitriangularMatrix":
        if not isinstance(other, UnitriangularMatrix):
            return NotImplemented
        n = self.dimension
        if other.dimension != n:
            raise DimensionMismatch(f"cannot multiply {n}x{n} by {other.dimension}x{other.dimension}")
        a, b = self.rows, other.rows
        out = [[0] * n for _ in range(n)]
        for i in range(n):
            out[i][i] = 1
            for j in range(i + 1, n):
                out[i][j] = sum(a[i][k] * b[k][j] for k in range(i, j + 1))
        return UnitriangularMatrix(out)

    def inverse_rows(self) -> list[list[int]]:
        """Exact integer inverse, returned as raw rows (entries may be negative).

        Back-substitution column by column; the inverse of a unitriangular
        matrix is unitriangular over the integers but not nonnegative, so it
        is not wrapped in this class.
        """
        n = self.dimension
        inv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        for j in range(n):
            for i in range(j - 1, -1, -1):
                inv[i][j] = -sum(self.rows[i][k] * inv[k][j] for k in range(i + 1, j + 1))
        return inv

    def __eq__(self, other) -> bool:
        return isinstance(other, UnitriangularMatrix) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def to_text(self) -> str:
        """Render as rows separated by ``;`` with ``,`` between entries."""
        return ";".join(",".join(str(x) for x in row) for row in self.rows)

    @classmethod
    def parse(cls, text: str) -> "UnitriangularMatrix":
        """Parse the ``1,2,9;0,1,2;0,0,1`` text format."""
        try:
            rows = tuple(
                tuple(int(part.strip()) for part in row.split(","))
                for row in text.strip().split(";")
            )
        except ValueError as exc:
            raise ValueError(f"bad matrix text {text!r}: {exc}") from None
        return cls(rows)

    def to_json_dict(self) -> dict:
        return {"n": self.dimension, "rows": [list(row) for row in self.rows]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "UnitriangularMatrix":
        mat = cls(tuple(tuple(row) for row in data["rows"]))
        if "n" in data and data["n"] != mat.dimension:
            raise ValueError("declared dimension does not match rows")
        return mat

    def __repr__(self) -> str:
        return f"UnitriangularMatrix({self.to_text()!r})"


def identity(n: int) -> UnitriangularMatrix:
    """Identity of the n-by-n monoid (n >= 2)."""
    return UnitriangularMatrix.identity(n)


def multiply(x: UnitriangularMatrix, y: UnitriangularMatrix) -> UnitriangularMatrix:
    """Monoid product; equivalent to ``x * y``."""
    return x * y


def generator_matrix(alphabet: OrderedAlphabet, letter: str) -> UnitriangularMatrix:
    """Image of a single letter: identity plus one 1 just above the diagonal."""
    q = alphabet.index(letter)
    n = alphabet.size + 1
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    rows[q][q + 1] = 1
    return UnitriangularMatrix(rows)


def parikh_matrix(alphabet: OrderedAlphabet, word: str) -> UnitriangularMatrix:
    """Image of ``word`` under the matrix morphism for this alphabet.

    The empty word maps to the identity; concatenation maps to the matrix
    product.  Computed by streaming the letters (each one is a single
    column update), not by repeated full multiplication.
    """
    if alphabet.size < 2:
        raise ValueError("the matrix morphism needs an alphabet of size at least 2")
    n = alphabet.size + 1
    pos = {ch: i for i, ch in enumerate(alphabet.letters)}
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for ch in word:
        try:
            q = pos[ch]
        except KeyError:
            raise ValueError(f"letter {ch!r} not in alphabet {alphabet.letters}") from None
        for i in range(q + 1):
            rows[i][q + 1] += rows[i][q]
    return UnitriangularMatrix(rows)


def matrix_from_subword_counts(alphabet: OrderedAlphabet, word: str) -> UnitriangularMatrix:
    """Build the same matrix entry by entry from scattered-subword counts.

    Entry (i, j+1) is the count of the block of consecutive alphabet letters
    a_i .. a_j inside ``word``.  Independent route from the morphism product;
    the two must agree on every word.
    """
    if alphabet.size < 2:
        raise ValueError("the matrix morphism needs an alphabet of size at least 2")
    alphabet.check_word(word)
    s = alphabet.size
    n = s + 1
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(s):
        for j in range(i, s):
            block = "".join(alphabet.letters[i : j + 1])
            rows[i][j + 1] = count_subword(word, block)
    return UnitriangularMatrix(rows)


def is_parikh_3x3(matrix: UnitriangularMatrix) -> bool:
    """Membership test for 3x3 matrices: the corner entry must not exceed the
    product of the two second-diagonal entries."""
    if matrix.dimension != 3:
        raise DimensionMismatch("the entry test applies to 3x3 matrices only")
    r = matrix.rows
    return r[0][2] <= r[0][1] * r[1][2]


@lru_cache(maxsize=None)
def _classes_by_vector(
    alphabet: OrderedAlphabet, vector: tuple[int, ...], bound: int
) -> dict[Rows, tuple[str, ...]]:
    """Group all words with the given letter counts by their matrix.

    Keys are matrix rows; values are the words in lexicographic order of the
    declared alphabet (enumeration order), so ``values[0]`` is the least
    witness of its matrix.
    """
    groups: dict[Rows, list[str]] = {}
    for w in enumerate_words(alphabet, vector, bound):
        key = parikh_matrix(alphabet, w).rows
        groups.setdefault(key, []).append(w)
    return {key: tuple(ws) for key, ws in groups.items()}


def _check_alphabet_dimension(alphabet: OrderedAlphabet, matrix: UnitriangularMatrix) -> None:
    if matrix.dimension != alphabet.size + 1:
        raise DimensionMismatch(
            f"matrix dimension {matrix.dimension} does not fit alphabet of size {alphabet.size}"
        )


def find_witness(
    alphabet: OrderedAlphabet,
    matrix: UnitriangularMatrix,
    bound: int = DEFAULT_ENUM_BOUND,
) -> Optional[str]:
    """Lexicographically least word mapping to ``matrix``, or ``None``.

    Bounded search over all words whose letter counts match the second
    diagonal; raises :class:`BoundExceeded` when that diagonal sums past
    ``bound``.
    """
    _check_alphabet_dimension(alphabet, matrix)
    vector = matrix.second_diagonal()
    if sum(vector) > bound:
        raise BoundExceeded(
            f"witness search needs words of length {sum(vector)} > bound {bound}"
        )
    if matrix.dimension == 3 and not is_parikh_3x3(matrix):
        return None
    members = _classes_by_vector(alphabet, vector, bound).get(matrix.rows)
    return members[0] if members else None


def is_parikh_matrix(
    alphabet: OrderedAlphabet,
    matrix: UnitriangularMatrix,
    bound: int = DEFAULT_ENUM_BOUND,
) -> bool:
    """Whether some word maps to ``matrix``.

    3x3 matrices use the exact entry test; larger ones fall back to the
    bounded witness search.
    """
    _check_alphabet_dimension(alphabet, matrix)
    if matrix.dimension == 3:
        return is_parikh_3x3(matrix)
    return find_witness(alphabet, matrix, bound) is not None


def class_members(
    alphabet: OrderedAlphabet,
    matrix: UnitriangularMatrix,
    bound: int = DEFAULT_ENUM_BOUND,
) -> tuple[str, ...]:
    """All words mapping to ``matrix``, lexicographically ordered (may be empty)."""
    _check_alphabet_dimension(alphabet, matrix)
    vector = matrix.second_diagonal()
    if sum(vector) > bound:
        raise BoundExceeded(
            f"class enumeration needs words of length {sum(vector)} > bound {bound}"
        )
    return _classes_by_vector(alphabet, vector, bound).get(matrix.rows, ())


@dataclass(frozen=True)
class ParikhMatrixHandle:
    """A matrix together with its alphabet and an optional witness word.

    Construction re-checks that the witness actually maps to the matrix.
    """

    matrix: UnitriangularMatrix
    alphabet: OrderedAlphabet
    witness: Optional[str] = None

    def __post_init__(self) -> None:
        _check_alphabet_dimension(self.alphabet, self.matrix)
        if self.witness is not None and parikh_matrix(self.alphabet, self.witness) != self.matrix:
            raise ValueError("witness does not map to the matrix")
