"""The set calculus: HF sets, term normalization and extended cardinalities."""

from invpow.calculus.cardinality import (
    between_witness,
    ch_card,
    ch_cmp,
    ch_leq,
    degree,
    neg_ch_cmp,
    neg_chs_cmp,
    rho,
    tau,
)
from invpow.calculus.hf_core import (
    PowerDecomposition,
    cardinality_hf,
    enumerate_universe,
    is_member,
    is_powered,
    is_subset_hf,
    make_set,
    numeral,
    powerset,
    strip_power,
    union_hf,
)
from invpow.calculus.term_calculus import (
    apply_inv_pow,
    apply_pow,
    ext_equal,
    ext_subset,
    is_zermelo,
    level_of,
    normalize,
    subset_member,
    to_term,
)

__all__ = [
    "PowerDecomposition",
    "make_set",
    "numeral",
    "is_member",
    "is_subset_hf",
    "powerset",
    "union_hf",
    "is_powered",
    "strip_power",
    "cardinality_hf",
    "enumerate_universe",
    "apply_pow",
    "apply_inv_pow",
    "normalize",
    "to_term",
    "subset_member",
    "is_zermelo",
    "ext_subset",
    "ext_equal",
    "level_of",
    "degree",
    "ch_card",
    "ch_leq",
    "ch_cmp",
    "rho",
    "tau",
    "neg_ch_cmp",
    "neg_chs_cmp",
    "between_witness",
]
