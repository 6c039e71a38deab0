"""Learning preference automata from pairwise comparisons between words.

A preference automaton is a deterministic finite automaton whose states
carry ranks from a partially ordered rank set; it classifies any two
finite words as indifferent, strictly ordered, or incomparable.  This
package learns such automata from labeled word comparisons by
rank-compatible state merging over the sample's prefix tree, decides when
a sample is informative enough for the learner to be provably exact, and
ships brute-force oracles and an experiment runner to cross-check it all.
"""

from .automata import (
    PDFA,
    PNFA,
    ConsistencyReport,
    EquivalenceResult,
    compare_words,
    dump_pdfa,
    dumps_pdfa,
    equivalent,
    is_consistent,
    load_pdfa,
    loads_pdfa,
    to_dot,
)
from .characteristic import (
    CharacteristicReport,
    is_characteristic,
    nucleus,
    shortest_prefixes,
)
from .errors import (
    AlphabetError,
    BlockError,
    BoundsExceededError,
    ClosureConflictError,
    EmptySetError,
    FormatError,
    OrderCycleError,
    PrefdfaError,
    RankingInconsistentError,
    RetryExhaustedError,
    UnreachableStateError,
)
from .experiment import ExperimentConfig, ExperimentRow, rows_to_csv, run_experiment
from .learner import (
    IterationTrace,
    LearnResult,
    Partition,
    deterministic_join,
    determinize,
    join,
    learn_pdfa,
    quotient,
    render_trace,
)
from .oracle import (
    GenerationConfig,
    MCDFAInstance,
    brute_force_mcdfa,
    characteristic_sample,
    draw_words,
    is_canonical,
    label_pairs,
    min_consistent_pdfa,
    random_canonical_pdfa,
    random_pdfa,
    reduce_mcdfa,
)
from .order import PartialOrder, PreferenceCategory, rank_compare
from .prefix_tree import PrefixTree, build_prefix_tree
from .sample import (
    ClosedSample,
    DiagnosticsReport,
    IndifferenceGraph,
    Label,
    PreferenceSample,
    RankPartition,
    close_sample,
    dump_sample,
    dumps_sample,
    indifference_graph,
    load_sample,
    loads_sample,
    rank_partition,
    validate_sample,
)
from .words import Alphabet, Word, format_word, parse_word, shortlex_compare

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "AlphabetError",
    "BlockError",
    "BoundsExceededError",
    "CharacteristicReport",
    "ClosedSample",
    "ClosureConflictError",
    "ConsistencyReport",
    "DiagnosticsReport",
    "EmptySetError",
    "EquivalenceResult",
    "ExperimentConfig",
    "ExperimentRow",
    "FormatError",
    "GenerationConfig",
    "IndifferenceGraph",
    "IterationTrace",
    "Label",
    "LearnResult",
    "MCDFAInstance",
    "OrderCycleError",
    "PDFA",
    "PNFA",
    "PartialOrder",
    "Partition",
    "PreferenceCategory",
    "PreferenceSample",
    "PrefdfaError",
    "PrefixTree",
    "RankPartition",
    "RankingInconsistentError",
    "RetryExhaustedError",
    "UnreachableStateError",
    "Word",
    "brute_force_mcdfa",
    "build_prefix_tree",
    "characteristic_sample",
    "close_sample",
    "compare_words",
    "deterministic_join",
    "determinize",
    "draw_words",
    "dump_pdfa",
    "dump_sample",
    "dumps_pdfa",
    "dumps_sample",
    "equivalent",
    "format_word",
    "indifference_graph",
    "is_canonical",
    "is_characteristic",
    "is_consistent",
    "join",
    "label_pairs",
    "learn_pdfa",
    "load_pdfa",
    "load_sample",
    "loads_pdfa",
    "loads_sample",
    "min_consistent_pdfa",
    "nucleus",
    "parse_word",
    "quotient",
    "random_canonical_pdfa",
    "random_pdfa",
    "rank_compare",
    "rank_partition",
    "reduce_mcdfa",
    "render_trace",
    "rows_to_csv",
    "run_experiment",
    "shortest_prefixes",
    "shortlex_compare",
    "to_dot",
    "validate_sample",
]
