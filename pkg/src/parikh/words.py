"""Ordered alphabets, words, and scattered-subword counting.

Words are plain Python strings over a declared ordered alphabet of
single-character letters.  The declared order (not ASCII order) drives
every lexicographic contract in the package and fixes the dimension of
the matrices built from word statistics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BoundExceeded

#: Default cap on the total length of enumerated words.  Operations that
#: would enumerate longer words raise :class:`BoundExceeded` instead of
#: silently grinding; callers raise the bound explicitly when they mean it.
DEFAULT_ENUM_BOUND = 14


@dataclass(frozen=True)
class OrderedAlphabet:
    """A finite alphabet whose total order is the tuple order of ``letters``."""

    letters: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.letters:
            raise ValueError("alphabet must contain at least one letter")
        if any(not isinstance(ch, str) or len(ch) != 1 for ch in self.letters):
            raise ValueError("letters must be single characters")
        if len(set(self.letters)) != len(self.letters):
            raise ValueError("letters must be pairwise distinct")

    @classmethod
    def parse(cls, text: str) -> "OrderedAlphabet":
        """Parse a comma-separated letter list such as ``a,b,c``."""
        return cls(tuple(part.strip() for part in text.split(",")))

    @property
    def size(self) -> int:
        return len(self.letters)

    def index(self, letter: str) -> int:
        try:
            return self.letters.index(letter)
        except ValueError:
            raise ValueError(f"letter {letter!r} not in alphabet {self.letters}") from None

    def check_word(self, word: str) -> str:
        """Return ``word`` unchanged, or raise if it uses foreign letters."""
        allowed = set(self.letters)
        for ch in word:
            if ch not in allowed:
                raise ValueError(f"letter {ch!r} not in alphabet {self.letters}")
        return word

    def sort_key(self, word: str) -> tuple[int, ...]:
        """Key for lexicographic comparison in the declared letter order."""
        return tuple(self.index(ch) for ch in word)


def count_subword(word: str, pattern: str) -> int:
    """Number of occurrences of ``pattern`` as a scattered subword of ``word``.

    Occurrences are index-increasing embeddings; two occurrences differ when
    at least one letter position differs.  The empty pattern occurs exactly
    once in every word.  Runs in O(len(word) * len(pattern)).
    """
    counts = [1] + [0] * len(pattern)
    for ch in word:
        for j in range(len(pattern) - 1, -1, -1):
            if pattern[j] == ch:
                counts[j + 1] += counts[j]
    return counts[len(pattern)]


def parikh_vector(alphabet: OrderedAlphabet, word: str) -> tuple[int, ...]:
    """Letter-count vector of ``word`` in the alphabet's declared order."""
    alphabet.check_word(word)
    return tuple(word.count(ch) for ch in alphabet.letters)


def word_power(word: str, exponent: int) -> str:
    """Concatenate ``word`` with itself ``exponent`` times (exponent >= 1)."""
    if exponent < 1:
        raise ValueError("exponent must be a positive integer")
    return word * exponent


def is_square_free(word: str) -> bool:
    """True iff no factor of ``word`` has the form ``xx`` with ``x`` nonempty.

    Plain scan over all factor pairs; cubic but fine at the word lengths this
    package enumerates.
    """
    n = len(word)
    for start in range(n):
        for half in range(1, (n - start) // 2 + 1):
            if word[start : start + half] == word[start + half : start + 2 * half]:
                return False
    return True


def multinomial(counts: tuple[int, ...]) -> int:
    """Number of distinct arrangements of a multiset with these multiplicities."""
    total = sum(counts)
    result = math.factorial(total)
    for c in counts:
        result //= math.factorial(c)
    return result


def enumerate_words(
    alphabet: OrderedAlphabet,
    counts: tuple[int, ...],
    bound: int = DEFAULT_ENUM_BOUND,
) -> list[str]:
    """All distinct words with the given letter-count vector, in lexicographic
    order of the declared alphabet.

    The output size is the multinomial coefficient of ``counts``.  Raises
    :class:`BoundExceeded` when the total length exceeds ``bound``.
    """
    if len(counts) != alphabet.size:
        raise ValueError("count vector length must match alphabet size")
    if any(c < 0 for c in counts):
        raise ValueError("counts must be nonnegative")
    total = sum(counts)
    if total > bound:
        raise BoundExceeded(f"word length {total} exceeds enumeration bound {bound}")

    out: list[str] = []
    remaining = list(counts)
    buf: list[str] = []

    def extend() -> None:
        if len(buf) == total:
            out.append("".join(buf))
            return
        for i, letter in enumerate(alphabet.letters):
            if remaining[i]:
                remaining[i] -= 1
                buf.append(letter)
                extend()
                buf.pop()
                remaining[i] += 1

    extend()
    return out
