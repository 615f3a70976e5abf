"""Type A tableau crystals used as ground truth"""

from .crystal import (
    CrystalGraph,
    apply_e,
    apply_f,
    crystal_to_dot,
    eps,
    generate_crystal,
    lowest_element,
    phi_value,
    string_extract,
)
from .harness import sl2_table, verify_corollary, verify_string_transitions
from .tableau import (
    Tableau,
    content,
    evacuation,
    evacuation_by_insertion,
    highest_weight_tableau,
    insertion_tableau,
    reading_word,
    rectify,
    shape_from_weight,
    weight,
)

__all__ = [
    "CrystalGraph",
    "Tableau",
    "apply_e",
    "apply_f",
    "content",
    "crystal_to_dot",
    "eps",
    "evacuation",
    "evacuation_by_insertion",
    "generate_crystal",
    "highest_weight_tableau",
    "insertion_tableau",
    "lowest_element",
    "phi_value",
    "reading_word",
    "rectify",
    "shape_from_weight",
    "sl2_table",
    "string_extract",
    "verify_corollary",
    "verify_string_transitions",
    "weight",
]
