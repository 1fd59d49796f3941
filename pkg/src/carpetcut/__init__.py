"""Exact cut-point analysis of generalized Sierpinski carpets."""

from .adjacency import Contact, cells_intersection_class, neighbor_table, position_neighbor
from .core import (
    Direction,
    GscSpec,
    Point,
    boundary_digit_set,
    corner_in_F,
    fixed_point,
    format_word,
    grid_to_word,
    parse_word,
    relative_position,
    validate_spec,
    word_to_grid,
    words,
)
from .decider import (
    DEFAULT_M,
    Verdict,
    addresses_of,
    check_repetition_certificate,
    corollary_double_check,
    decide_cut_points,
    essential_exists_at_depth,
    find_certificate,
    is_cut_point,
    point_components,
    unique_cutpoint_candidates,
)
from .errors import CarpetError
from .fragility import FragilityWitness, fragility_witness, is_connected_gsc
from .hata import HataGraph, build_hata, chi, essential_cut_vertices, export_graph_text, has_long_tail
from .presets import resolve
from .radix import Cardinality, intersect_class, singleton_value
from .render import render_svg
from .window import WindowState, window_initial, window_step

__version__ = "0.1.0"
