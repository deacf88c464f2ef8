"""Utility modules for InvPow."""

from invpow.utils.expr_lang import parse, parse_normal_form, print_normal_form, print_term

__all__ = ["parse", "print_term", "parse_normal_form", "print_normal_form"]
