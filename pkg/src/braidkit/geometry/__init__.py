"""Exact geometric oracle: embedded arcs, PL half-twists, minimal position."""

from .diagrams import ArcDiagram, TupleDiagram, code, is_straight, puncture, straight
from .pushes import apply_generator, apply_generator_many, apply_word_chain, realize_arc
from .tighten import (
    crossing_number,
    normalize,
    remove_grid_detours,
    tidy_diagram,
    tighten_system,
)
from .moves import basic_move
from .recognize import arc_from_diagram, realize

__all__ = [
    "arc_from_diagram",
    "realize",
    "ArcDiagram",
    "TupleDiagram",
    "apply_generator",
    "apply_generator_many",
    "apply_word_chain",
    "basic_move",
    "code",
    "crossing_number",
    "is_straight",
    "normalize",
    "puncture",
    "realize_arc",
    "remove_grid_detours",
    "straight",
    "tidy_diagram",
    "tighten_system",
]
