"""Polarized double-negation translations and cut-free proof transformations."""

from .syntax import (  # noqa: F401
    Formula, Polarity, antinegate, count_negations, parse_formula, parse_sequent,
    polarity_at, print_formula, substitute, symbols_of,
)
from .translations import Scheme, goal_wrapper, lift_sequent, translate  # noqa: F401
from .calculi import (  # noqa: F401
    CheckReport, FocusedSequent, Handle, ProofNode, Rule, Sequent,
    check_lj, check_lk, check_lkf, end_sequent, height,
)

__version__ = "0.1.0"
