"""
InvPow

Symbolic set calculus with inverse powersets: hereditarily finite sets,
union normal forms, and the CH, negCH and negCHS cardinality orders.
"""

__version__ = "0.1.0"

from invpow.calculus import ch_card, neg_ch_cmp, neg_chs_cmp, normalize
from invpow.models import HfSet, NormalForm, SetTerm, SymCardinal, Verdict
from invpow.utils import parse, print_normal_form, print_term

__all__ = [
    "__version__",
    "HfSet",
    "SetTerm",
    "NormalForm",
    "SymCardinal",
    "Verdict",
    "parse",
    "print_term",
    "print_normal_form",
    "normalize",
    "ch_card",
    "neg_ch_cmp",
    "neg_chs_cmp",
]
