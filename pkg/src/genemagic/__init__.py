"""Genetic-code tables as exact magic squares.

Reconstructs the canonical nucleotide-word tables, renders them under
three numeral notations, and verifies their magic, bimagic, Latin,
Hamming/binomial, entropy, and restriction-enzyme properties with exact
integer and rational arithmetic.
"""

from .encoding import (
    GENETIC_CODE,
    MAX_WORD_LEN,
    GrayPair,
    Notation,
    all_words,
    bit_string,
    complement,
    digit_string,
    encode,
    gray_pair,
    hamming_weight,
    parse_word,
    translate,
    xor_reduce,
)
from .entropy import (
    EntropyReport,
    OrderIndex,
    ProbabilityGrid,
    entropy_term,
    normalize,
    order_index,
    shannon_report,
)
from .enzymes import (
    ANTIPARALLEL_PAIRS,
    ENZYME_TABLE,
    EnzymeRecord,
    antiparallel_check,
    block_locality_check,
    classify,
    orientation_sums,
)
from .errors import (
    DataError,
    DomainError,
    GenemagicError,
    ParseError,
    PreconditionError,
    RangeError,
    ShapeError,
)
from .hamming import (
    FrequencyTable,
    WeightGrid,
    balance_report,
    frequency_distribution,
    monomial,
    weight_grid,
)
from .magic import (
    BlockSums,
    MagicReport,
    NumericGrid,
    analyze,
    block_report,
    divisibility_facts,
    numeric_grid,
    rect_block_report,
)
from .structure import (
    LatinVerdict,
    Region,
    latin_square_check,
    orthogonality_check,
    place_letters,
    place_permutation_report,
    standard_regions,
    xor_letter_grid,
)
from .tables import CANONICAL_IDS, Grid, load_canonical, parse_grid, serialize_grid

__version__ = "0.1.0"

__all__ = [
    "ANTIPARALLEL_PAIRS",
    "CANONICAL_IDS",
    "ENZYME_TABLE",
    "GENETIC_CODE",
    "MAX_WORD_LEN",
    "BlockSums",
    "DataError",
    "DomainError",
    "EntropyReport",
    "EnzymeRecord",
    "FrequencyTable",
    "GenemagicError",
    "GrayPair",
    "Grid",
    "LatinVerdict",
    "MagicReport",
    "Notation",
    "NumericGrid",
    "OrderIndex",
    "ParseError",
    "PreconditionError",
    "ProbabilityGrid",
    "RangeError",
    "Region",
    "ShapeError",
    "WeightGrid",
    "all_words",
    "analyze",
    "antiparallel_check",
    "balance_report",
    "bit_string",
    "block_locality_check",
    "block_report",
    "classify",
    "complement",
    "digit_string",
    "divisibility_facts",
    "encode",
    "entropy_term",
    "frequency_distribution",
    "gray_pair",
    "hamming_weight",
    "latin_square_check",
    "load_canonical",
    "monomial",
    "normalize",
    "numeric_grid",
    "order_index",
    "orientation_sums",
    "orthogonality_check",
    "parse_grid",
    "parse_word",
    "place_letters",
    "place_permutation_report",
    "rect_block_report",
    "serialize_grid",
    "shannon_report",
    "standard_regions",
    "translate",
    "weight_grid",
    "xor_letter_grid",
    "xor_reduce",
]
