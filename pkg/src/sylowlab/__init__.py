"""Sylow subgroup counts and solvability criteria for finite permutation groups."""
from .kernels import BACKEND
from .permcore import GeneratedGroup, Permutation, parse_cycles, format_cycles
from .sylow import count_sylow, sylow_subgroup
from .gstruct import is_solvable, is_nilpotent, derived_series
from .criterion import vp_profile, check_theorem_1_1, check_theorem_1_3, check_conjecture_1_2

__version__ = "0.1.0"
