"""Machine-checked verification suites behind the ``verify`` CLI command.

Each suite re-derives one of the package's central facts at desk scale:
entry characterization of the word morphism, the closed-form power against
iterated multiplication, root uniqueness, binary power membership, the
class-size inequality, uniqueness of normal forms for unambiguous words,
the primitivity criterion, and the two bridges between word-level and
matrix-level normal forms.  Random corpora are seeded, so runs are
reproducible.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .equivalence import equivalence_class
from .matrices import (
    OrderedAlphabet,
    UnitriangularMatrix,
    is_parikh_3x3,
    matrix_from_subword_counts,
    parikh_matrix,
)
from .matrix_forms import (
    binary_decomposition_search,
    is_primitive,
    matrix_normal_forms,
    max_power_exponent,
)
from .powers import binary_power_is_parikh, matrix_power, matrix_root
from .word_forms import (
    check_reconstruction,
    lift_to_matrix_form,
    maximal_words,
    word_normal_form,
)
from .words import DEFAULT_ENUM_BOUND, is_square_free

BINARY = OrderedAlphabet(("a", "b"))
TERNARY = OrderedAlphabet(("a", "b", "c"))


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    checks: int
    detail: str = ""


def _random_unitriangular(rng: random.Random, n: int, max_entry: int) -> UnitriangularMatrix:
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            rows[i][j] = rng.randint(0, max_entry)
    return UnitriangularMatrix(rows)


def _binary_words(max_len: int):
    for length in range(1, max_len + 1):
        for tup in product("ab", repeat=length):
            yield "".join(tup)


def _binary_classes(max_len: int) -> dict[UnitriangularMatrix, list[str]]:
    groups: dict[UnitriangularMatrix, list[str]] = {}
    for w in _binary_words(max_len):
        groups.setdefault(parikh_matrix(BINARY, w), []).append(w)
    return groups


def suite_entries(max_len: int, bound: int, seed: int) -> SuiteResult:
    """Morphism image equals the subword-count matrix, on a golden word and
    exhaustively over small binary and random ternary words."""
    checks = 0
    golden = parikh_matrix(TERNARY, "ababcc")
    if golden.rows != ((1, 2, 3, 6), (0, 1, 2, 4), (0, 0, 1, 2), (0, 0, 0, 1)):
        return SuiteResult("entries", False, 1, "golden ternary matrix mismatch")
    checks += 1
    for w in _binary_words(min(max_len, 8)):
        if matrix_from_subword_counts(BINARY, w) != parikh_matrix(BINARY, w):
            return SuiteResult("entries", False, checks, f"mismatch at {w!r}")
        checks += 1
    rng = random.Random(seed)
    for _ in range(200):
        w = "".join(rng.choice("abc") for _ in range(rng.randint(0, 10)))
        if matrix_from_subword_counts(TERNARY, w) != parikh_matrix(TERNARY, w):
            return SuiteResult("entries", False, checks, f"mismatch at {w!r}")
        u = "".join(rng.choice("abc") for _ in range(rng.randint(0, 6)))
        if parikh_matrix(TERNARY, u + w) != parikh_matrix(TERNARY, u) * parikh_matrix(TERNARY, w):
            return SuiteResult("entries", False, checks, f"morphism law broke at {u!r}+{w!r}")
        checks += 2
    return SuiteResult("entries", True, checks)


def _power_corpus(seed: int, count: int = 200):
    rng = random.Random(seed)
    dims = [3, 4, 5, 6]
    return [_random_unitriangular(rng, dims[i % 4], 5) for i in range(count)]


def suite_power_formula(max_len: int, bound: int, seed: int) -> SuiteResult:
    """Closed-form power equals iterated multiplication; plus the symbolic
    3x3 family with linear and quadratic entries."""
    checks = 0
    for X in _power_corpus(seed):
        acc = X
        for m in range(1, 9):
            if matrix_power(X, m) != acc:
                return SuiteResult("power-formula", False, checks, f"{X.to_text()} at m={m}")
            acc = acc * X
            checks += 1
    base = parikh_matrix(BINARY, "abb")
    for m in range(1, 11):
        if matrix_power(base, m).rows != ((1, m, m * m + m), (0, 1, 2 * m), (0, 0, 1)):
            return SuiteResult("power-formula", False, checks, f"symbolic check at m={m}")
        checks += 1
    return SuiteResult("power-formula", True, checks)


def suite_root_injectivity(max_len: int, bound: int, seed: int) -> SuiteResult:
    """Roots of powers recover the original matrix exactly."""
    checks = 0
    for X in _power_corpus(seed):
        for m in (1, 2, 3, 5, 8):
            if matrix_root(matrix_power(X, m), m) != X:
                return SuiteResult("root-injectivity", False, checks, f"{X.to_text()} at m={m}")
            checks += 1
    return SuiteResult("root-injectivity", True, checks)


def suite_binary_power(max_len: int, bound: int, seed: int) -> SuiteResult:
    """The arithmetic membership test for powers agrees with the entry test
    applied to the computed power, and is monotone in the exponent."""
    checks = 0
    for a in range(7):
        for b in range(7):
            for c in range(7):
                X = UnitriangularMatrix(((1, a, c), (0, 1, b), (0, 0, 1)))
                prev = False
                for m in range(1, 7):
                    fast = binary_power_is_parikh(X, m)
                    slow = is_parikh_3x3(matrix_power(X, m))
                    if fast != slow:
                        return SuiteResult(
                            "binary-power", False, checks, f"{X.to_text()} at m={m}"
                        )
                    if prev and not fast:
                        return SuiteResult(
                            "binary-power", False, checks, f"monotonicity broke at {X.to_text()}"
                        )
                    prev = fast
                    checks += 1
    return SuiteResult("binary-power", True, checks)


def suite_class_inequality(max_len: int, bound: int, seed: int) -> SuiteResult:
    """Class size of a power is at least the powered class size, exhaustively."""
    checks = 0
    top = min(max_len, bound // 2, 6)
    for M, ws in _binary_classes(top).items():
        w = ws[0]
        base = len(ws)
        for m in (1, 2):
            power_size = equivalence_class(BINARY, w * m, bound).size
            if power_size < base**m:
                return SuiteResult(
                    "class-inequality", False, checks, f"violated at {w!r} m={m}"
                )
            checks += 1
    return SuiteResult("class-inequality", True, checks)


def suite_unique_normal_form(max_len: int, bound: int, seed: int) -> SuiteResult:
    """Unambiguous words (singleton classes) have exactly one matrix form."""
    checks = 0
    for M, ws in _binary_classes(min(max_len, 9)).items():
        if len(ws) == 1:
            if len(matrix_normal_forms(BINARY, M, bound)) != 1:
                return SuiteResult(
                    "unique-normal-form", False, checks, f"multiple forms for {ws[0]!r}"
                )
            checks += 1
    return SuiteResult("unique-normal-form", True, checks)


def suite_primitive_square_free(max_len: int, bound: int, seed: int) -> SuiteResult:
    """A matrix is primitive exactly when every word in its class is square-free."""
    checks = 0
    groups = _binary_classes(min(max_len, 9))
    groups[parikh_matrix(BINARY, "")] = [""]
    for M, ws in groups.items():
        if is_primitive(BINARY, M, bound) != all(is_square_free(w) for w in ws):
            return SuiteResult(
                "primitive-square-free", False, checks, f"mismatch at {M.to_text()}"
            )
        checks += 1
    return SuiteResult("primitive-square-free", True, checks)


def suite_maximal_lift(max_len: int, bound: int, seed: int) -> SuiteResult:
    """Lifting any maximal word's normal form lands among its matrix's forms;
    the binary decomposition search agrees on the maximal exponent."""
    checks = 0
    for M, ws in _binary_classes(min(max_len, 9)).items():
        forms = set(matrix_normal_forms(BINARY, M, bound))
        cls = equivalence_class(BINARY, ws[0], bound)
        for w in maximal_words(cls):
            if lift_to_matrix_form(BINARY, word_normal_form(w)) not in forms:
                return SuiteResult("maximal-lift", False, checks, f"lift missing for {w!r}")
            checks += 1
        u, v = M.second_diagonal()
        if u > 0 and v > 0:
            found = binary_decomposition_search(M, mode="complete")
            if found[0].n != max_power_exponent(BINARY, M, bound):
                return SuiteResult(
                    "maximal-lift", False, checks, f"exponent mismatch at {M.to_text()}"
                )
            checks += 1
    return SuiteResult("maximal-lift", True, checks)


def suite_reconstruction(max_len: int, bound: int, seed: int) -> SuiteResult:
    """Every witness reconstruction of every matrix form parses back to the
    same factors and is maximal in its class."""
    checks = 0
    for M in _binary_classes(min(max_len, 9)):
        report = check_reconstruction(BINARY, M, bound)
        for case in report.cases:
            if not case.passed:
                return SuiteResult(
                    "reconstruction", False, checks, f"failed for {case.word!r}"
                )
            checks += 1
    return SuiteResult("reconstruction", True, checks)


SUITES = {
    "entries": suite_entries,
    "power-formula": suite_power_formula,
    "root-injectivity": suite_root_injectivity,
    "binary-power": suite_binary_power,
    "class-inequality": suite_class_inequality,
    "unique-normal-form": suite_unique_normal_form,
    "primitive-square-free": suite_primitive_square_free,
    "maximal-lift": suite_maximal_lift,
    "reconstruction": suite_reconstruction,
}


def run_suites(
    names: list[str],
    max_len: int = 8,
    bound: int = DEFAULT_ENUM_BOUND,
    seed: int = 0,
) -> list[SuiteResult]:
    results = []
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
        results.append(SUITES[name](max_len, bound, seed))
    return results
