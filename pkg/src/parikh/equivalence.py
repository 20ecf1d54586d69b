"""Equivalence classes of words sharing a matrix, and class-size scans.

Two words are M-equivalent when they map to the same matrix.  Classes are
materialized by exhaustive enumeration over the letter-count vector, so all
operations here live under the enumeration bound.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import product

from .errors import BoundExceeded
from .matrices import OrderedAlphabet, UnitriangularMatrix, _classes_by_vector, parikh_matrix
from .words import DEFAULT_ENUM_BOUND, parikh_vector, word_power


@dataclass(frozen=True)
class EquivalenceClass:
    """All words sharing one matrix, in lexicographic order of the alphabet."""

    alphabet: OrderedAlphabet
    matrix: UnitriangularMatrix
    members: tuple[str, ...]

    @property
    def size(self) -> int:
        return len(self.members)


def equivalence_class(
    alphabet: OrderedAlphabet, word: str, bound: int = DEFAULT_ENUM_BOUND
) -> EquivalenceClass:
    """The class of ``word``: every word with the same matrix.

    Enumerates all arrangements of the letter counts and keeps the ones whose
    matrix matches; ``word`` itself is always a member.
    """
    alphabet.check_word(word)
    if len(word) > bound:
        raise BoundExceeded(f"word length {len(word)} exceeds enumeration bound {bound}")
    matrix = parikh_matrix(alphabet, word)
    vector = parikh_vector(alphabet, word)
    members = _classes_by_vector(alphabet, vector, bound)[matrix.rows]
    return EquivalenceClass(alphabet, matrix, members)


def is_m_unambiguous(alphabet: OrderedAlphabet, word: str, bound: int = DEFAULT_ENUM_BOUND) -> bool:
    """True iff no other word shares this word's matrix."""
    return equivalence_class(alphabet, word, bound).size == 1


@dataclass(frozen=True)
class ClassPowerReport:
    """Sizes of the class of a power against the powered class size.

    ``lhs`` is the size of the class of word**m, ``rhs`` is (class size)**m;
    lhs >= rhs always holds, so a False ``holds`` flags an implementation bug.
    """

    word: str
    exponent: int
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs >= self.rhs


def power_class_inequality(
    alphabet: OrderedAlphabet, word: str, exponent: int, bound: int = DEFAULT_ENUM_BOUND
) -> ClassPowerReport:
    """Compare the class size of ``word**exponent`` with the powered class size."""
    if exponent < 1:
        raise ValueError("exponent must be a positive integer")
    if len(word) * exponent > bound:
        raise BoundExceeded(
            f"power length {len(word) * exponent} exceeds enumeration bound {bound}"
        )
    base_size = equivalence_class(alphabet, word, bound).size
    power_size = equivalence_class(alphabet, word_power(word, exponent), bound).size
    return ClassPowerReport(word, exponent, power_size, base_size**exponent)


@dataclass(frozen=True)
class ScanRecord:
    """One class representative with its class size and power-class size."""

    word: str
    class_size: int
    power_class_size: int
    equality: bool


def conjecture_scan(
    alphabet: OrderedAlphabet,
    exponent: int,
    max_len: int,
    bound: int = DEFAULT_ENUM_BOUND,
) -> tuple[ScanRecord, ...]:
    """Scan all words up to ``max_len`` for |class(w**m)| = |class(w)|**m.

    One record per equivalence class, keyed by its lexicographically least
    member; outcomes are identical within a class, so representatives
    suffice.  Records are ordered by length, then lexicographically.
    """
    if exponent < 1:
        raise ValueError("exponent must be a positive integer")
    if max_len < 1:
        raise ValueError("max_len must be a positive integer")
    if max_len * exponent > bound:
        raise BoundExceeded(
            f"scan needs powers of length {max_len * exponent} > bound {bound}"
        )
    records: list[ScanRecord] = []
    for length in range(1, max_len + 1):
        groups: dict = {}
        for letters in product(alphabet.letters, repeat=length):
            w = "".join(letters)
            key = parikh_matrix(alphabet, w).rows
            if key not in groups:
                groups[key] = [w, 0]
            groups[key][1] += 1
        for rep, size in sorted(groups.values(), key=lambda g: alphabet.sort_key(g[0])):
            power_size = equivalence_class(alphabet, word_power(rep, exponent), bound).size
            records.append(ScanRecord(rep, size, power_size, power_size == size**exponent))
    return tuple(records)


def scan_csv_lines(records: tuple[ScanRecord, ...]) -> list[str]:
    lines = ["word,class_size,power_class_size,equality"]
    for r in records:
        lines.append(f"{r.word},{r.class_size},{r.power_class_size},{str(r.equality).lower()}")
    return lines


def scan_json_lines(records: tuple[ScanRecord, ...]) -> list[str]:
    return [
        json.dumps(
            {
                "word": r.word,
                "class_size": r.class_size,
                "power_class_size": r.power_class_size,
                "equality": r.equality,
            },
            separators=(",", ":"),
        )
        for r in records
    ]
