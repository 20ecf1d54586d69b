import random
from functools import reduce

import pytest
from hypothesis import given, strategies as st

from parikh import (
    DimensionMismatch,
    MinPower,
    OrderedAlphabet,
    UnitriangularMatrix,
    binary_power_is_parikh,
    is_parikh_3x3,
    matrix_power,
    matrix_root,
    min_power_to_parikh,
    parikh_matrix,
    power_equivalence_dichotomy,
)
from parikh.powers import _path_sum_tables

AB = OrderedAlphabet(("a", "b"))


def iterated(X, m):
    return reduce(lambda acc, _: acc * X, range(m - 1), X)


def random_matrix(rng, n, max_entry=5):
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            rows[i][j] = rng.randint(0, max_entry)
    return UnitriangularMatrix(rows)


small_matrices = st.integers(3, 6).flatmap(
    lambda n: st.lists(
        st.integers(0, 5), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2
    ).map(lambda entries: _from_upper(n, entries))
)


def _from_upper(n, entries):
    rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    it = iter(entries)
    for i in range(n):
        for j in range(i + 1, n):
            rows[i][j] = next(it)
    return UnitriangularMatrix(rows)


class TestPathSumTables:
    @given(small_matrices)
    def test_one_step_sums_are_the_entries(self, X):
        tables = _path_sum_tables(X.rows)
        n = X.dimension
        for i in range(n):
            for j in range(i + 1, n):
                assert tables[1][i][j] == X.rows[i][j]

    @given(small_matrices)
    def test_sums_vanish_beyond_the_offset(self, X):
        tables = _path_sum_tables(X.rows)
        n = X.dimension
        for t in range(2, n):
            for i in range(n):
                for j in range(i + 1, min(i + t, n)):
                    assert tables[t][i][j] == 0


class TestMatrixPower:
    def test_symbolic_family(self):
        X = parikh_matrix(AB, "abb")
        for m in range(1, 11):
            assert matrix_power(X, m).rows == ((1, m, m * m + m), (0, 1, 2 * m), (0, 0, 1))

    def test_power_one_is_identity_map(self):
        X = random_matrix(random.Random(7), 5)
        assert matrix_power(X, 1) == X

    def test_rejects_nonpositive_exponent(self):
        with pytest.raises(ValueError):
            matrix_power(parikh_matrix(AB, "ab"), 0)

    @given(small_matrices, st.integers(1, 8))
    def test_agrees_with_iterated_multiplication(self, X, m):
        assert matrix_power(X, m) == iterated(X, m)

    def test_word_power_compatibility(self):
        w = "abba"
        for m in range(1, 5):
            assert matrix_power(parikh_matrix(AB, w), m) == parikh_matrix(AB, w * m)

    def test_huge_exponents_stay_exact(self):
        # entries grow polynomially in the exponent; Python ints keep this exact
        X = parikh_matrix(AB, "abb")
        m = 10**6
        P = matrix_power(X, m)
        assert P.rows == ((1, m, m * m + m), (0, 1, 2 * m), (0, 0, 1))
        assert matrix_root(P, m) == X


class TestMatrixRoot:
    def test_exponent_one_returns_input(self):
        Y = parikh_matrix(AB, "abab")
        assert matrix_root(Y, 1) == Y

    def test_known_round_trip(self):
        X = parikh_matrix(AB, "abb")
        assert matrix_root(matrix_power(X, 3), 3) == X

    def test_indivisible_diagonal_has_no_root(self):
        Y = UnitriangularMatrix.parse("1,1,0;0,1,2;0,0,1")
        assert matrix_root(Y, 2) is None

    def test_nonnegative_constraint_blocks_roots(self):
        # diagonal divides, but the corner correction drives the entry negative
        Y = UnitriangularMatrix.parse("1,2,0;0,1,2;0,0,1")
        assert matrix_root(Y, 2) is None

    @given(small_matrices, st.integers(1, 6))
    def test_round_trip_recovers_original(self, X, m):
        assert matrix_root(matrix_power(X, m), m) == X

    @given(small_matrices, st.integers(2, 5))
    def test_found_roots_reproduce_input(self, Y, m):
        X = matrix_root(Y, m)
        if X is not None:
            assert matrix_power(X, m) == Y


class TestBinaryPowerMembership:
    def test_golden_matrix(self):
        X = UnitriangularMatrix.parse("1,2,9;0,1,2;0,0,1")
        assert [binary_power_is_parikh(X, m) for m in range(1, 5)] == [
            False,
            False,
            False,
            True,
        ]

    def test_zero_diagonal_cases(self):
        X = UnitriangularMatrix.parse("1,0,0;0,1,1;0,0,1")
        assert binary_power_is_parikh(X, 1)
        Y = UnitriangularMatrix.parse("1,0,1;0,1,1;0,0,1")
        assert not binary_power_is_parikh(Y, 99)

    def test_dimension_checked(self):
        with pytest.raises(DimensionMismatch):
            binary_power_is_parikh(UnitriangularMatrix.identity(4), 2)

    def test_consistent_with_entry_test_exhaustively(self):
        for a in range(7):
            for b in range(7):
                for c in range(7):
                    X = UnitriangularMatrix(((1, a, c), (0, 1, b), (0, 0, 1)))
                    for m in range(1, 7):
                        assert binary_power_is_parikh(X, m) == is_parikh_3x3(
                            matrix_power(X, m)
                        )

    @given(st.integers(0, 9), st.integers(0, 9), st.integers(0, 40), st.integers(1, 8))
    def test_monotone_in_exponent(self, a, b, c, m):
        X = UnitriangularMatrix(((1, a, c), (0, 1, b), (0, 0, 1)))
        if binary_power_is_parikh(X, m):
            assert binary_power_is_parikh(X, m + 1)


class TestMinPower:
    def test_golden_matrix_needs_fourth_power(self):
        X = UnitriangularMatrix.parse("1,2,9;0,1,2;0,0,1")
        assert min_power_to_parikh(X) == MinPower(4)

    def test_images_need_no_power(self):
        for w in ["ab", "abba", "babab"]:
            assert min_power_to_parikh(parikh_matrix(AB, w)) == MinPower(1)

    def test_impossible_corner(self):
        X = UnitriangularMatrix.parse("1,0,1;0,1,1;0,0,1")
        assert min_power_to_parikh(X) is None

    def test_all_zero_matrix_reports_identity_power(self):
        result = min_power_to_parikh(UnitriangularMatrix.identity(3))
        assert result == MinPower(1, power_is_identity=True)

    @given(st.integers(0, 8), st.integers(0, 8), st.integers(0, 60))
    def test_result_is_least_qualifying_exponent(self, a, b, c):
        X = UnitriangularMatrix(((1, a, c), (0, 1, b), (0, 0, 1)))
        result = min_power_to_parikh(X)
        if result is None:
            assert not any(binary_power_is_parikh(X, m) for m in range(1, 200))
        else:
            m = result.exponent
            assert binary_power_is_parikh(X, m)
            assert m == 1 or not binary_power_is_parikh(X, m - 1)


class TestPowerEquivalenceDichotomy:
    def test_never_equivalent(self):
        report = power_equivalence_dichotomy(AB, "ab", "ba", 5)
        assert report.never_equivalent and report.uniform
        assert report.branch == "never equivalent"

    def test_always_equivalent(self):
        report = power_equivalence_dichotomy(AB, "abba", "baab", 5)
        assert report.always_equivalent and report.uniform
        assert report.branch == "always equivalent"

    def test_same_word_always_equivalent(self):
        report = power_equivalence_dichotomy(AB, "abab", "abab", 5)
        assert report.always_equivalent

    @given(
        st.text(alphabet="ab", max_size=5),
        st.text(alphabet="ab", max_size=5),
        st.integers(1, 6),
    )
    def test_outcomes_are_uniform(self, v, w, m_max):
        assert power_equivalence_dichotomy(AB, v, w, m_max).uniform
