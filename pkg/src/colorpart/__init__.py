"""Enumeration of colored set partitions avoiding colored partition patterns."""

from .avoidance import (
    Sense,
    avoids,
    avoids_all,
    begins_with_ascent,
    contains_colored,
    contains_vincular,
)
from .core import (
    ColoredPartition,
    ColoredPattern,
    PartitionError,
    PatternSyntaxError,
    Permutation,
    VincularPattern,
    canonize_sub,
    color_complement,
    color_reverse,
    parse_blocks,
    parse_pattern,
    parse_pattern_set,
    parse_permutation,
    parse_vincular,
    print_pattern,
    print_pattern_set,
    reduce_word,
)
from .enumeration import (
    AvoidanceSequence,
    WilfClassification,
    avoidance_sequence,
    count_avoiders,
    iter_colored,
    iter_rgs,
    wilf_classify,
)
from .formulas import FormulaEntry, bell, closed_form, kcolor_count, lookup_formula, stirling2

__version__ = "0.1.0"

__all__ = [
    "AvoidanceSequence",
    "ColoredPartition",
    "ColoredPattern",
    "FormulaEntry",
    "PartitionError",
    "PatternSyntaxError",
    "Permutation",
    "Sense",
    "VincularPattern",
    "WilfClassification",
    "avoidance_sequence",
    "avoids",
    "avoids_all",
    "begins_with_ascent",
    "bell",
    "canonize_sub",
    "closed_form",
    "color_complement",
    "color_reverse",
    "contains_colored",
    "contains_vincular",
    "count_avoiders",
    "iter_colored",
    "iter_rgs",
    "kcolor_count",
    "lookup_formula",
    "parse_blocks",
    "parse_pattern",
    "parse_pattern_set",
    "parse_permutation",
    "parse_vincular",
    "print_pattern",
    "print_pattern_set",
    "reduce_word",
    "stirling2",
    "wilf_classify",
]
