"""Cactus-group actions on highest-weight words via growth diagrams.

The package has three layers: exact q-arithmetic and Hecke seminormal
matrices (qalgebra, hecke), the lattice machinery of weights, crystals,
local moves and growth diagrams (weights, crystal, words, cactus, growth),
and independent classical tableau algorithms used as cross-checks
(oracles).  The cli module binds everything into a command-line tool.
"""

from .weights import CartanContext, Weight, Partition, dom_w, is_dominant, conjugate, strip_check
from .words import HighestWeightWord, StepKind, complete_cell, tau, commutor_prefix, word_from_corners, syt_to_word, word_to_syt
from .cactus import CactusGen, CactusWord, TauGen, perm_image, reduce_to_s1q, parse_cactus_word
from .growth import evacuation, promotion, act, build_cylinder, wall_cross, cylinder_from_path, complete_rectangle
from .crystal import Crystal, build_minuscule, tensor, tensor_power, decompose
from .qalgebra import LaurentPoly, RationalFunction, QMatrix, q_int
from .hecke import SeminormalRep, u_matrix, t_matrix, tau_matrix, jm_matrix, sigma_vv, cactus_matrix

__version__ = "0.1.0"

__all__ = [
    "CartanContext", "Weight", "Partition", "dom_w", "is_dominant", "conjugate", "strip_check",
    "HighestWeightWord", "StepKind", "complete_cell", "tau", "commutor_prefix",
    "word_from_corners", "syt_to_word", "word_to_syt",
    "CactusGen", "CactusWord", "TauGen", "perm_image", "reduce_to_s1q", "parse_cactus_word",
    "evacuation", "promotion", "act", "build_cylinder", "wall_cross", "cylinder_from_path",
    "complete_rectangle",
    "Crystal", "build_minuscule", "tensor", "tensor_power", "decompose",
    "LaurentPoly", "RationalFunction", "QMatrix", "q_int",
    "SeminormalRep", "u_matrix", "t_matrix", "tau_matrix", "jm_matrix", "sigma_vv", "cactus_matrix",
]
