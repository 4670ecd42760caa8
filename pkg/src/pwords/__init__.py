"""Integer partitions of every dimension as words, their Hamming flip graphs,
Gray codes on them, and degree / parts-count distribution fits."""

from .errors import (
    BudgetExceededError,
    ContractError,
    DegenerateSampleError,
    InvalidAlphabetError,
    InvalidPartitionError,
    InvalidWordError,
    SearchExhaustedError,
)
from .words import (
    DDimPartition,
    WordSet,
    dominates,
    enumerate_words,
    from_partition,
    symbol_totals,
    to_partition,
    validate,
)
from .graphs import (
    PartitionGraph,
    StructureReport,
    build,
    degree_sequence,
    is_hamiltonian,
    neighbors,
    power,
    proper_coloring,
    structure_report,
)
from .graycode import GrayCode, gray2, gray3, verify
from .analysis import (
    DistributionFit,
    Histogram,
    compare,
    fit,
    lambda_edge_statistic,
    parity_imbalance,
    parts_histogram,
)

__all__ = [
    "BudgetExceededError",
    "ContractError",
    "DDimPartition",
    "DegenerateSampleError",
    "DistributionFit",
    "GrayCode",
    "Histogram",
    "InvalidAlphabetError",
    "InvalidPartitionError",
    "InvalidWordError",
    "PartitionGraph",
    "SearchExhaustedError",
    "StructureReport",
    "WordSet",
    "build",
    "compare",
    "degree_sequence",
    "dominates",
    "enumerate_words",
    "fit",
    "from_partition",
    "gray2",
    "gray3",
    "is_hamiltonian",
    "lambda_edge_statistic",
    "neighbors",
    "parity_imbalance",
    "parts_histogram",
    "power",
    "proper_coloring",
    "structure_report",
    "symbol_totals",
    "to_partition",
    "validate",
    "verify",
]

__version__ = "0.1.0"
