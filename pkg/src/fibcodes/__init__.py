"""Perfect codes in hypercubes and generalized Fibonacci cubes."""
from .avoidance import (
    AvoidanceGraph,
    CapacityError,
    MembershipError,
    cube,
    gamma,
    verify_perfect_in_gamma,
    vertex_count,
)
from .bitword import (
    DimensionError,
    Word,
    WordParseError,
    complement,
    concat,
    contains_substring,
    enumerate_words,
    hamming_distance,
    max_run_ones,
    parity,
    word_from_string,
    xor_add,
)
from .codes import (
    BiasFunction,
    Code,
    CodeStream,
    LemmaPart,
    NotInDomain,
    Status,
    VerificationReport,
    construct_run_avoiding_code,
    example_gamma7_code,
    hamming_code,
    is_code,
    lemma_partition_index,
    run_avoiding_bias,
    run_avoiding_bound,
    run_histogram,
    translate_code,
    vasilev_chunks,
    vasilev_extend,
    verify_perfect_qn,
)
from .search import (
    ScanCell,
    ScanReport,
    SearchOutcome,
    conjecture_scan,
    min_s,
    search_perfect_codes,
)

__version__ = "0.1.0"
