"""Parikh matrices of words: subword counting, closed-form powers and roots,
equivalence classes, and right-to-left normal forms of matrices and words."""

from .errors import (
    BoundExceeded,
    DimensionMismatch,
    EmptyWord,
    EqualWords,
    NoDecomposition,
    NotAParikhMatrix,
    NotMEquivalent,
    ParikhError,
    PreconditionViolated,
)
from .words import (
    DEFAULT_ENUM_BOUND,
    OrderedAlphabet,
    count_subword,
    enumerate_words,
    is_square_free,
    multinomial,
    parikh_vector,
    word_power,
)
from .matrices import (
    ParikhMatrixHandle,
    UnitriangularMatrix,
    class_members,
    find_witness,
    generator_matrix,
    identity,
    is_parikh_3x3,
    is_parikh_matrix,
    matrix_from_subword_counts,
    multiply,
    parikh_matrix,
)
from .powers import (
    MinPower,
    PowerEquivalenceReport,
    binary_power_is_parikh,
    matrix_power,
    matrix_root,
    min_power_to_parikh,
    power_equivalence_dichotomy,
)
from .equivalence import (
    ClassPowerReport,
    EquivalenceClass,
    ScanRecord,
    conjecture_scan,
    equivalence_class,
    is_m_unambiguous,
    power_class_inequality,
    scan_csv_lines,
    scan_json_lines,
)
from .matrix_forms import (
    BinaryDecomposition,
    DecompositionTriplet,
    MatrixNormalForm,
    binary_decomposition_search,
    canonical_base_weight,
    canonical_decompositions,
    is_primitive,
    matrix_normal_forms,
    max_power_exponent,
    right_divide,
    second_diagonal_sum,
)
from .word_forms import (
    MaximalLiftReport,
    ReconstructionCase,
    ReconstructionReport,
    TrailingPowerSplit,
    WordNormalForm,
    check_maximal_lift,
    check_reconstruction,
    lift_to_matrix_form,
    max_trailing_exponent,
    maximal_words,
    precedes,
    split_trailing_power,
    trailing_base_length,
    word_normal_form,
)

__version__ = "0.1.0"

__all__ = [
    "BinaryDecomposition",
    "BoundExceeded",
    "ClassPowerReport",
    "DEFAULT_ENUM_BOUND",
    "DecompositionTriplet",
    "DimensionMismatch",
    "EmptyWord",
    "EqualWords",
    "EquivalenceClass",
    "MatrixNormalForm",
    "MaximalLiftReport",
    "MinPower",
    "NoDecomposition",
    "NotAParikhMatrix",
    "NotMEquivalent",
    "OrderedAlphabet",
    "ParikhError",
    "ParikhMatrixHandle",
    "PowerEquivalenceReport",
    "PreconditionViolated",
    "ReconstructionCase",
    "ReconstructionReport",
    "ScanRecord",
    "TrailingPowerSplit",
    "UnitriangularMatrix",
    "WordNormalForm",
    "binary_decomposition_search",
    "binary_power_is_parikh",
    "canonical_base_weight",
    "canonical_decompositions",
    "check_maximal_lift",
    "check_reconstruction",
    "class_members",
    "conjecture_scan",
    "count_subword",
    "enumerate_words",
    "equivalence_class",
    "find_witness",
    "generator_matrix",
    "identity",
    "is_m_unambiguous",
    "is_parikh_3x3",
    "is_parikh_matrix",
    "is_primitive",
    "is_square_free",
    "lift_to_matrix_form",
    "matrix_from_subword_counts",
    "matrix_normal_forms",
    "matrix_power",
    "matrix_root",
    "max_power_exponent",
    "max_trailing_exponent",
    "maximal_words",
    "min_power_to_parikh",
    "multinomial",
    "multiply",
    "parikh_matrix",
    "parikh_vector",
    "power_class_inequality",
    "power_equivalence_dichotomy",
    "precedes",
    "right_divide",
    "scan_csv_lines",
    "scan_json_lines",
    "second_diagonal_sum",
    "split_trailing_power",
    "trailing_base_length",
    "word_normal_form",
    "word_power",
]
