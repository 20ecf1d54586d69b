import json

import pytest
from hypothesis import given, strategies as st

from parikh import (
    BoundExceeded,
    DimensionMismatch,
    OrderedAlphabet,
    ParikhMatrixHandle,
    UnitriangularMatrix,
    class_members,
    find_witness,
    generator_matrix,
    identity,
    is_parikh_3x3,
    is_parikh_matrix,
    matrix_from_subword_counts,
    parikh_matrix,
    parikh_vector,
)

AB = OrderedAlphabet(("a", "b"))
ABC = OrderedAlphabet(("a", "b", "c"))

words_ab = st.text(alphabet="ab", max_size=10)
words_abc = st.text(alphabet="abc", max_size=7)

EXAMPLE_TERNARY = UnitriangularMatrix(
    ((1, 2, 3, 6), (0, 1, 2, 4), (0, 0, 1, 2), (0, 0, 0, 1))
)


class TestMatrixType:
    def test_validates_shape(self):
        with pytest.raises(ValueError):
            UnitriangularMatrix(((1, 2), (0, 1), (0, 0)))
        with pytest.raises(ValueError):
            UnitriangularMatrix(((1, 2), (1, 1)))
        with pytest.raises(ValueError):
            UnitriangularMatrix(((2, 0), (0, 1)))
        with pytest.raises(ValueError):
            UnitriangularMatrix(((1, -1), (0, 1)))

    def test_identity_and_neutrality(self):
        I3 = identity(3)
        X = UnitriangularMatrix.parse("1,2,9;0,1,2;0,0,1")
        assert I3 * X == X
        assert X * I3 == X

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            identity(3) * identity(4)

    def test_text_round_trip(self):
        text = "1,2,9;0,1,2;0,0,1"
        assert UnitriangularMatrix.parse(text).to_text() == text

    def test_json_round_trip(self):
        X = UnitriangularMatrix.parse("1,2,9;0,1,2;0,0,1")
        data = json.loads(json.dumps(X.to_json_dict()))
        assert UnitriangularMatrix.from_json_dict(data) == X

    def test_inverse_is_exact(self):
        X = UnitriangularMatrix.parse("1,3,5;0,1,2;0,0,1")
        inv = X.inverse_rows()
        n = X.dimension
        product = [
            [sum(X.rows[i][k] * inv[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)
        ]
        assert product == [[1 if i == j else 0 for j in range(n)] for i in range(n)]


class TestMorphism:
    def test_ternary_golden(self):
        assert parikh_matrix(ABC, "ababcc") == EXAMPLE_TERNARY

    def test_empty_word_maps_to_identity(self):
        assert parikh_matrix(ABC, "") == identity(4)

    def test_binary_base_case(self):
        assert parikh_matrix(AB, "abb").rows == ((1, 1, 2), (0, 1, 2), (0, 0, 1))

    def test_generators_do_not_commute(self):
        ga, gb = generator_matrix(AB, "a"), generator_matrix(AB, "b")
        assert ga * gb != gb * ga

    def test_single_letter_alphabet_rejected(self):
        with pytest.raises(ValueError):
            parikh_matrix(OrderedAlphabet(("a",)), "a")

    @given(words_abc, words_abc)
    def test_morphism_law(self, u, v):
        assert parikh_matrix(ABC, u + v) == parikh_matrix(ABC, u) * parikh_matrix(ABC, v)

    @given(words_ab)
    def test_second_diagonal_is_letter_count_vector(self, w):
        assert parikh_matrix(AB, w).second_diagonal() == parikh_vector(AB, w)

    @given(words_ab)
    def test_entry_route_agrees_binary(self, w):
        assert matrix_from_subword_counts(AB, w) == parikh_matrix(AB, w)

    @given(words_abc)
    def test_entry_route_agrees_ternary(self, w):
        assert matrix_from_subword_counts(ABC, w) == parikh_matrix(ABC, w)


class TestMembership:
    def test_entry_test_golden(self):
        assert not is_parikh_3x3(UnitriangularMatrix.parse("1,2,9;0,1,2;0,0,1"))
        assert is_parikh_3x3(UnitriangularMatrix.parse("1,8,60;0,1,8;0,0,1"))
        assert is_parikh_3x3(identity(3))

    def test_entry_test_needs_dimension_three(self):
        with pytest.raises(DimensionMismatch):
            is_parikh_3x3(identity(4))

    def test_witness_of_identity_is_empty_word(self):
        assert find_witness(AB, identity(3)) == ""

    def test_no_witness_when_corner_impossible(self):
        M = UnitriangularMatrix.parse("1,1,1;0,1,0;0,0,1")
        assert find_witness(AB, M) is None
        assert not is_parikh_matrix(AB, M)

    def test_witness_for_large_matrix_with_raised_bound(self):
        M = UnitriangularMatrix.parse("1,8,60;0,1,8;0,0,1")
        with pytest.raises(BoundExceeded):
            find_witness(AB, M)
        w = find_witness(AB, M, bound=16)
        assert w is not None and parikh_matrix(AB, w) == M
        assert "a" * 7 + "b" * 4 + "a" + "b" * 4 in class_members(AB, M, bound=16)

    def test_witness_is_lexicographically_least(self):
        M = parikh_matrix(AB, "abaaba")
        members = class_members(AB, M)
        assert find_witness(AB, M) == min(members)

    def test_alphabet_dimension_checked(self):
        with pytest.raises(DimensionMismatch):
            find_witness(ABC, identity(3))

    def test_witness_search_matches_entry_test_exhaustively(self):
        # corner values run past the membership boundary for every diagonal
        for a in range(7):
            for b in range(7):
                for c in range(a * b + 3):
                    M = UnitriangularMatrix(((1, a, c), (0, 1, b), (0, 0, 1)))
                    assert (find_witness(AB, M) is not None) == is_parikh_3x3(M)


class TestHandle:
    def test_accepts_valid_witness(self):
        M = parikh_matrix(AB, "abb")
        handle = ParikhMatrixHandle(M, AB, "abb")
        assert handle.witness == "abb"

    def test_rejects_wrong_witness(self):
        with pytest.raises(ValueError):
            ParikhMatrixHandle(parikh_matrix(AB, "abb"), AB, "bba")
