"""Unary NFAs as unions of arithmetic progressions and in Chrobak normal form."""
from ._kernels import BACKEND
from .chrobak import (
    ChrobakNfa,
    Cycle,
    cnf_to_nfa,
    cnf_to_progressions,
    convert,
    convert_detailed,
    is_cnf,
    progressions_to_cnf,
)
from .nfa import (
    NormalizedNfa,
    UnaryNfa,
    accepted_up_to,
    member,
    normalize,
    parse_nfa,
    serialize_nfa,
    trim,
)
from .oracle import determinize, example1_graph
from .semilinear import (
    ArithmeticProgression,
    EventuallyPeriodicSet,
    ProgressionSet,
    eps_equal,
    eps_from_progressions,
)

__version__ = "0.1.0"
