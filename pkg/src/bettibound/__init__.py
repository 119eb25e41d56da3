"""Sharp upper bounds for the Betti numbers of ideals with a given Hilbert function."""

from .errors import BettiError
from .ideal import (
    BettiTable,
    MonomialIdeal,
    beta1_closed_form,
    betti_by_degree,
    bound_for,
    classify,
    closed_form_betti,
    dominates,
    ek_betti,
    graded_basis,
    hilbert,
    lex_ideal,
    minimalize,
    stable_hilbert,
)
from .macaulay import HilbertFunction, MacaulayExpansion, generator_degrees, is_admissible
from .monomial import Monomial
from .monoset import MonomialSet
from .oracle import taylor_betti

__version__ = "0.1.0"
