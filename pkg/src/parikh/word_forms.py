"""Right-to-left normal forms of words and the order on equivalent words.

A nonempty word w splits as w = u * v**n.  The canonical split takes n as
large as possible (the trailing exponent); the base v is then the longest
possible when n > 1.  When n = 1 the base is the shortest suffix whose
remaining prefix itself ends in a genuine power (trailing exponent above 1);
among such splits, ones whose prefix parses down to a clean head (a power or
a single letter) win over ones leaving a longer irreducible chunk.  If no
suffix qualifies the whole word is one factor.  Iterating the split yields
the word's normal form.

Normal forms order M-equivalent words factor by factor from the right, and
the maximal words are the ones whose lifted forms match the matrix-level
normal forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Optional

from .equivalence import EquivalenceClass, equivalence_class
from .errors import EmptyWord, EqualWords, NotMEquivalent
from .matrices import OrderedAlphabet, UnitriangularMatrix, class_members, parikh_matrix
from .matrix_forms import MatrixNormalForm, matrix_normal_forms
from .words import DEFAULT_ENUM_BOUND


def _trailing_repeats(word: str, length: int) -> int:
    """How many times the suffix block of ``length`` letters repeats at the end."""
    block = word[-length:]
    count = 1
    while (count + 1) * length <= len(word) and word.endswith(block * (count + 1)):
        count += 1
    return count


def max_trailing_exponent(word: str) -> int:
    """Largest n with word = u * v**n for some nonempty v."""
    if not word:
        raise EmptyWord("the trailing exponent is undefined on the empty word")
    return max(_trailing_repeats(word, length) for length in range(1, len(word) + 1))


def _has_irreducible_head(prefix: str) -> bool:
    """True when the parse of ``prefix`` ends in a multi-letter exponent-1 factor."""
    base, exp = word_normal_form(prefix).factors[0]
    return exp == 1 and len(base) > 1


def trailing_base_length(word: str) -> int:
    """Length of the canonical base of the trailing power of ``word``.

    Trailing exponent n > 1: the longest base whose n-th power is a suffix.
    Trailing exponent 1: the shortest suffix v of a split w = u * v whose
    prefix u has trailing exponent above 1, preferring splits whose prefix
    parses without an irreducible multi-letter head; the full length when no
    split qualifies.
    """
    if not word:
        raise EmptyWord("the base length is undefined on the empty word")
    n = len(word)
    exponent = max_trailing_exponent(word)
    if exponent > 1:
        for length in range(n // exponent, 0, -1):
            if word.endswith(word[-length:] * exponent):
                return length
        raise AssertionError("unreachable: the exponent certifies some base")
    admissible = [i for i in range(1, n) if max_trailing_exponent(word[:i]) != 1]
    if not admissible:
        return n
    preferred = [i for i in admissible if not _has_irreducible_head(word[:i])]
    pool = preferred or admissible
    return n - max(pool)


@dataclass(frozen=True)
class TrailingPowerSplit:
    """The canonical split word = prefix + base**exponent."""

    prefix: str
    base: str
    exponent: int


def split_trailing_power(word: str) -> TrailingPowerSplit:
    """Canonical trailing-power split; unique because the power is a suffix
    of fixed length."""
    exponent = max_trailing_exponent(word)
    length = trailing_base_length(word)
    cut = len(word) - exponent * length
    return TrailingPowerSplit(word[:cut], word[cut : cut + length], exponent)


@dataclass(frozen=True)
class WordNormalForm:
    """Factor sequence v_k**n_k ... v_0**n_0, stored left to right."""

    factors: tuple[tuple[str, int], ...]

    def expand(self) -> str:
        return "".join(base * exp for base, exp in self.factors)

    def render(self) -> str:
        parts = []
        for base, exp in self.factors:
            text = base if len(base) == 1 else f"({base})"
            parts.append(text if exp == 1 else f"{text}^{exp}")
        return " ".join(parts)

    def to_json_dict(self) -> dict:
        return {"factors": [{"base": base, "exp": exp} for base, exp in self.factors]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "WordNormalForm":
        return cls(tuple((f["base"], int(f["exp"])) for f in data["factors"]))


@lru_cache(maxsize=None)
def word_normal_form(word: str) -> WordNormalForm:
    """Normal form of a nonempty word: iterate the trailing-power split on
    the remaining prefix until it empties; factors collect right to left."""
    if not word:
        raise EmptyWord("the empty word has no normal form")
    reversed_factors = []
    rest = word
    while rest:
        split = split_trailing_power(rest)
        reversed_factors.append((split.base, split.exponent))
        rest = split.prefix
    return WordNormalForm(tuple(reversed(reversed_factors)))


def _factors_precede(
    first: tuple[tuple[str, int], ...], second: tuple[tuple[str, int], ...]
) -> bool:
    """Order on factor sequences, compared from the rightmost factor."""
    for (v, n), (y, m) in zip(reversed(first), reversed(second)):
        if (v, n) == (y, m):
            continue
        if n != m:
            return n < m
        if n == 1:
            return len(v) > len(y)
        return len(v) < len(y)
    raise RuntimeError("distinct words of equal length must diverge factorwise")


def precedes(alphabet: OrderedAlphabet, first: str, second: str) -> bool:
    """The order on two distinct M-equivalent words via their normal forms.

    At the first diverging factor index (from the right): smaller exponent
    precedes; at equal exponent 1 the longer base precedes; at equal
    exponent above 1 the shorter base precedes.  Not every pair is
    comparable.
    """
    if first == second:
        raise EqualWords("the relation is defined on distinct words only")
    if parikh_matrix(alphabet, first) != parikh_matrix(alphabet, second):
        raise NotMEquivalent(f"{first!r} and {second!r} have different matrices")
    return _factors_precede(word_normal_form(first).factors, word_normal_form(second).factors)


def maximal_words(cls: EquivalenceClass) -> tuple[str, ...]:
    """Members of the class dominated by no other member, in lexicographic order."""
    forms = {w: word_normal_form(w).factors for w in cls.members if w}
    if not forms:  # the class of the empty word
        return cls.members
    out = []
    for w in cls.members:
        dominated = any(
            other != w and _factors_precede(forms[w], forms[other]) for other in cls.members
        )
        if not dominated:
            out.append(w)
    return tuple(out)


def lift_to_matrix_form(alphabet: OrderedAlphabet, form: WordNormalForm) -> MatrixNormalForm:
    """Map each word factor to its matrix, preserving bases and exponents."""
    return MatrixNormalForm(
        tuple((parikh_matrix(alphabet, base), exp) for base, exp in form.factors)
    )


@dataclass(frozen=True)
class MaximalLiftReport:
    """Whether a maximal word's lifted normal form is a matrix normal form.

    Vacuously passing when the word is not maximal in its class.
    """

    word: str
    is_maximal: bool
    lifted: Optional[MatrixNormalForm]
    matrix_forms: tuple[MatrixNormalForm, ...]
    matches: Optional[bool]

    @property
    def passed(self) -> bool:
        return (not self.is_maximal) or bool(self.matches)


def check_maximal_lift(
    alphabet: OrderedAlphabet, word: str, bound: int = DEFAULT_ENUM_BOUND
) -> MaximalLiftReport:
    """Verify that lifting a maximal word's normal form lands among the
    normal forms of its matrix."""
    if not word:
        raise EmptyWord("the check is defined on nonempty words")
    cls = equivalence_class(alphabet, word, bound)
    own = word_normal_form(word).factors
    dominated = any(
        other != word and _factors_precede(own, word_normal_form(other).factors)
        for other in cls.members
    )
    if dominated:
        return MaximalLiftReport(word, False, None, (), None)
    lifted = lift_to_matrix_form(alphabet, word_normal_form(word))
    forms = matrix_normal_forms(alphabet, cls.matrix, bound)
    return MaximalLiftReport(word, True, lifted, forms, lifted in forms)


@dataclass(frozen=True)
class ReconstructionCase:
    """One witness choice for one matrix normal form."""

    form: MatrixNormalForm
    witness_choice: tuple[str, ...]
    word: str
    factors_match: bool
    is_maximal: bool

    @property
    def passed(self) -> bool:
        return self.factors_match and self.is_maximal


@dataclass(frozen=True)
class ReconstructionReport:
    """Words rebuilt from matrix normal forms against their own parses.

    For every normal form of the matrix and every choice of witness words for
    its bases, the concatenated word must parse back to exactly that factor
    sequence and be maximal in its class.
    """

    matrix: UnitriangularMatrix
    cases: tuple[ReconstructionCase, ...]

    @property
    def passed(self) -> bool:
        return all(case.passed for case in self.cases)


def check_reconstruction(
    alphabet: OrderedAlphabet, matrix: UnitriangularMatrix, bound: int = DEFAULT_ENUM_BOUND
) -> ReconstructionReport:
    """Exercise every (form, witness-choice) reconstruction for ``matrix``."""
    forms = matrix_normal_forms(alphabet, matrix, bound)
    cases = []
    for form in forms:
        if not form.factors:
            continue
        witness_pools = [class_members(alphabet, base, bound) for base, _ in form.factors]
        for choice in product(*witness_pools):
            expected = tuple(
                (base_word, exp) for base_word, (_, exp) in zip(choice, form.factors)
            )
            word = "".join(base_word * exp for base_word, exp in expected)
            parsed = word_normal_form(word).factors
            cls = equivalence_class(alphabet, word, bound)
            dominated = any(
                other != word and _factors_precede(parsed, word_normal_form(other).factors)
                for other in cls.members
            )
            cases.append(
                ReconstructionCase(form, choice, word, parsed == expected, not dominated)
            )
    return ReconstructionReport(matrix, cases)
