"""Linear chord diagrams with a minimum chord length.

Thin wrapper over the compiled core: exact counting (DP and brute-force
oracle), enumeration, the diagonal correspondence maps, recurrence checking
and fitting, and SVG/TikZ figure output.
"""

from ._core import (
    ChordDiagram,
    DomainError,
    ParseError,
    alpha,
    beta,
    check_recurrence,
    check_structural_lemmas,
    class_index,
    classify,
    count_brute,
    count_dp,
    count_dp_stats,
    covers,
    covers_index,
    enumerate_diagrams,
    fit_recurrence,
    insert_middle_chord,
    is_in_min_class,
    min_chord_length,
    oracle_ceiling,
    parse_diagram,
    region_split,
    render_figure,
    row_sequence,
    search_recurrence,
    table,
    to_text,
    verify_theorem,
)

__all__ = [
    "ChordDiagram",
    "DomainError",
    "ParseError",
    "alpha",
    "beta",
    "check_recurrence",
    "check_structural_lemmas",
    "class_index",
    "classify",
    "count_brute",
    "count_dp",
    "count_dp_stats",
    "covers",
    "covers_index",
    "enumerate_diagrams",
    "fit_recurrence",
    "insert_middle_chord",
    "is_in_min_class",
    "min_chord_length",
    "oracle_ceiling",
    "parse_diagram",
    "region_split",
    "render_figure",
    "row_sequence",
    "search_recurrence",
    "table",
    "to_text",
    "verify_theorem",
]
