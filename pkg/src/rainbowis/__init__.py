"""Rainbow independent sets in graphs of maximum degree two.

Graphs are disjoint unions of paths and cycles (``parse_descriptor("C6+P3")``);
vertices are labelled ``1..|V|`` and colors are 1-based positions in a
:class:`Collection`.
"""

from .cache import ResultCache
from .constructive import gap_vector, solve_two_jump, solve_two_regular, used_fallback
from .errors import (
    ContractViolation,
    DescriptorParseError,
    EmptyFamilyError,
    InvalidCertificateError,
    InvalidGraphError,
    InvalidOrderingError,
    InvalidParameterError,
    InvalidSetError,
    PreconditionError,
    RainbowError,
)
from .fsearch import BReport, FResult, bad_collections, check_B_properties, f_value, is_bad, sweep_B_properties
from .graph import (
    Degree2Graph,
    VertexSet,
    build_cycle,
    build_path,
    closed_neighborhood,
    disjoint_union,
    is_independent,
    parse_descriptor,
)
from .gris import GreedyResult, TraceStep, cycle_deletion_greedy, gris, rainbow_cycle_n_minus_1, rainbow_path
from .indsets import (
    Collection,
    JumpSet,
    count_ind_sets,
    enumerate_ind_sets,
    enumerate_jump_sets,
    jump_collection,
    list_number,
    list_of,
)
from .partition import PartitionResult, h_value, split
from .rainbow import RainbowAssignment, find_rainbow, has_rainbow, verify_rainbow
from .symmetry import CanonicalKey, automorphisms, canonical_key
from .verify import CLAIMS, Cell, Report, verify_theorem_range

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
