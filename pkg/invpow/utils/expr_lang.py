"""
Surface syntax for set terms.

The grammar is ASCII only::

    expr    := expr "u" primary | primary
    primary := "P(" expr ")" | "P^" INT "(" expr ")" | "P^-" INT "(" expr ")"
             | "Pinv(" expr ")" | "{" [expr ("," expr)*] "}" | INT | "N"

Integers are von Neumann numerals. Set literals may only contain Zermelo
subexpressions (literals, numerals, ``P``, ``P^k`` and ``u``); their value is
computed at parse time, so ``{0,1,2}`` and ``3`` parse to the same literal.
"""

import functools
from dataclasses import dataclass
from typing import Optional

import lark
from lark.exceptions import (
    UnexpectedCharacters,
    UnexpectedEOF,
    UnexpectedInput,
    UnexpectedToken,
    VisitError,
)

from invpow.calculus.hf_core import numeral
from invpow.calculus.term_calculus import normalize, to_term
from invpow.config import get_settings
from invpow.errors import ExprSyntaxError, StructuralError
from invpow.models.forms import Finite, NormalForm
from invpow.models.hfset import HfSet
from invpow.models.terms import (
    InvPow,
    NatBase,
    Pow,
    SetTerm,
    UnionOf,
    ZermeloLit,
    inv_pow_n,
    pow_n,
    union_of,
)

GRAMMAR = r"""
?start: expr

?expr: expr "u" primary     -> union
     | primary

?primary: "P" "(" expr ")"             -> pow
        | "P^" INT "(" expr ")"        -> pow_n
        | "P^-" INT "(" expr ")"       -> inv_pow_n
        | "Pinv" "(" expr ")"          -> inv_pow
        | "{" [expr ("," expr)*] "}"   -> set_literal
        | INT                          -> numeral
        | "N"                          -> nat

%import common.INT
%import common.WS
%ignore WS
"""

# Rules that may not occur below a set literal
_NON_ZERMELO = {"inv_pow": "P^-1", "inv_pow_n": "P^-k", "nat": "N"}


@functools.cache
def _parser() -> lark.Lark:
    """Create/retrieve the singleton LALR parser."""
    return lark.Lark(
        GRAMMAR,
        parser="lalr",
        propagate_positions=True,
        maybe_placeholders=False,
    )


@dataclass(frozen=True)
class SourceExpr:
    """Input text together with its position-annotated parse tree."""

    text: str
    tree: lark.Tree

    @property
    def term(self) -> SetTerm:
        try:
            return _TermBuilder().transform(self.tree)
        except VisitError as e:
            raise e.orig_exc from None


def _position(node: lark.Tree) -> tuple[Optional[int], Optional[int]]:
    meta = node.meta
    if getattr(meta, "empty", True):
        return None, None
    return meta.line, meta.column


def _check_set_literals(tree: lark.Tree) -> None:
    for literal in tree.iter_subtrees_topdown():
        if literal.data != "set_literal":
            continue
        for node in literal.iter_subtrees_topdown():
            if node.data in _NON_ZERMELO:
                line, column = _position(node)
                raise StructuralError(
                    f"Set literals may only contain Zermelo sets, found {_NON_ZERMELO[node.data]}",
                    line,
                    column,
                )


def parse_source(text: str) -> SourceExpr:
    """
    Parse ``text`` into a :class:`SourceExpr`.

    Raises:
        ExprSyntaxError: If the text does not match the grammar
        StructuralError: If a set literal contains a non-Zermelo subterm
    """
    try:
        tree = _parser().parse(text)
    except UnexpectedEOF as e:
        line = text.count("\n") + 1
        column = len(text) - (text.rfind("\n") + 1) + 1
        raise ExprSyntaxError("Unexpected end of input", line, column) from e
    except UnexpectedCharacters as e:
        raise ExprSyntaxError(f"Unexpected character {text[e.pos_in_stream]!r}", e.line, e.column) from e
    except UnexpectedToken as e:
        if e.token.type == "$END":
            line = text.count("\n") + 1
            column = len(text) - (text.rfind("\n") + 1) + 1
            raise ExprSyntaxError("Unexpected end of input", line, column) from e
        raise ExprSyntaxError(f"Unexpected token {e.token!r}", e.line, e.column) from e
    except UnexpectedInput as e:
        raise ExprSyntaxError(str(e), e.line, e.column) from e
    _check_set_literals(tree)
    return SourceExpr(text=text, tree=tree)


def parse(text: str) -> SetTerm:
    """
    Parse ``text`` into a set term.

    Example:
        >>> parse("P^-1(P({0,1,2}))")
        InvPow(operand=Pow(operand=ZermeloLit(value=HfSet({{},{{}},{{},{{}}}}))))
    """
    return parse_source(text).term


class _TermBuilder(lark.Transformer):
    """Turns the lark tree into SetTerm nodes."""

    @lark.v_args(inline=True)
    def union(self, left: SetTerm, right: SetTerm) -> SetTerm:
        return union_of(left, right)

    @lark.v_args(inline=True)
    def pow(self, operand: SetTerm) -> SetTerm:
        return Pow(operand)

    @lark.v_args(inline=True)
    def inv_pow(self, operand: SetTerm) -> SetTerm:
        return InvPow(operand)

    @lark.v_args(inline=True)
    def pow_n(self, times: lark.Token, operand: SetTerm) -> SetTerm:
        return pow_n(operand, int(times))

    @lark.v_args(inline=True)
    def inv_pow_n(self, times: lark.Token, operand: SetTerm) -> SetTerm:
        return inv_pow_n(operand, int(times))

    @lark.v_args(inline=True)
    def nat(self) -> SetTerm:
        return NatBase()

    @lark.v_args(inline=True)
    def numeral(self, token: lark.Token) -> SetTerm:
        value = int(token)
        cap = get_settings().numeral_cap
        if value > cap:
            raise StructuralError(
                f"Numeral {value} exceeds the cap of {cap}", token.line, token.column
            )
        return ZermeloLit(numeral(value))

    def set_literal(self, items: list[SetTerm]) -> SetTerm:
        return ZermeloLit(HfSet(_zermelo_value(item) for item in items))


def _zermelo_value(term: SetTerm) -> HfSet:
    part = normalize(term).zermelo
    if not isinstance(part, Finite):
        raise StructuralError("Set literals may only contain finite Zermelo sets")
    return part.value


def print_term(t: SetTerm) -> str:
    """
    Canonical text of a term.

    Consecutive P^-1 nodes print as one ``P^-m``; the output never contains
    whitespace except around ``u``.

    Example:
        >>> print_term(ZermeloLit(numeral(0)))
        '{}'
    """
    # P / P^-1 chains are walked iteratively; towers like P^2000(N) are legal
    opened: list[str] = []
    while isinstance(t, (Pow, InvPow)):
        if isinstance(t, Pow):
            opened.append("P(")
            t = t.operand
            continue
        depth = 0
        while isinstance(t, InvPow):
            depth += 1
            t = t.operand
        opened.append(f"P^-{depth}(")
    if opened:
        return "".join(opened) + print_term(t) + ")" * len(opened)
    if isinstance(t, ZermeloLit):
        return str(t.value)
    if isinstance(t, NatBase):
        return "N"
    if isinstance(t, UnionOf):
        return " u ".join(print_term(part) for part in t.parts)
    raise TypeError(f"Not a set term: {t!r}")


def parse_normal_form(text: str) -> NormalForm:
    """Parse and normalize ``text``."""
    return normalize(parse(text))


def print_normal_form(nf: NormalForm) -> str:
    """Canonical text of a normal form: Zermelo part first, then components."""
    return print_term(to_term(nf))
