"""Tests for the expression parser and canonical printer."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from invpow.audit.generators import generate_terms
from invpow.calculus.hf_core import make_set, numeral
from invpow.errors import ExprSyntaxError, StructuralError
from invpow.models.hfset import EMPTY
from invpow.models.terms import InvPow, NatBase, Pow, UnionOf, ZermeloLit, inv_pow_n, pow_n
from invpow.utils.expr_lang import parse, parse_normal_form, parse_source, print_normal_form, print_term

THREE = "{{},{{}},{{},{{}}}}"


class TestParse:
    def test_numerals_and_literals(self, three):
        assert parse("3") == ZermeloLit(three)
        assert parse("{0,1,2}") == parse("3")
        assert parse("{2,0,1,1}") == parse("3")
        assert parse("{}") == ZermeloLit(EMPTY)
        assert parse("{{}}") == ZermeloLit(numeral(1))

    def test_operators(self, three):
        assert parse("P^-1(P({0,1,2}))") == InvPow(Pow(ZermeloLit(three)))
        assert parse("Pinv(3)") == InvPow(ZermeloLit(three))
        assert parse("P^-2(3)") == InvPow(InvPow(ZermeloLit(three)))
        assert parse("P^2(N)") == Pow(Pow(NatBase()))
        assert parse("P^0(3)") == ZermeloLit(three)

    def test_unions_are_flattened(self, three, singleton_one):
        term = parse("3 u P^-1({1}) u N")
        assert term == UnionOf((ZermeloLit(three), InvPow(ZermeloLit(singleton_one)), NatBase()))

    def test_whitespace_is_ignored(self, three):
        assert parse("  P ( 3 )\n") == Pow(ZermeloLit(three))

    def test_zermelo_subterms_inside_literals(self):
        """{P(1), 0} evaluates P(1) = 2 at parse time."""
        assert parse("{P(1), 0}") == ZermeloLit(make_set([numeral(0), numeral(2)]))
        assert parse("{1 u {2}}") == ZermeloLit(make_set([make_set([numeral(0), numeral(2)])]))


class TestParseErrors:
    def test_unexpected_end(self):
        with pytest.raises(ExprSyntaxError) as exc_info:
            parse("P(3")
        assert exc_info.value.line == 1
        assert exc_info.value.column == 4

    def test_unexpected_character(self):
        with pytest.raises(ExprSyntaxError) as exc_info:
            parse("3 $ 4")
        assert exc_info.value.line == 1
        assert exc_info.value.column == 3
        assert "line 1, column 3" in str(exc_info.value)

    def test_unexpected_token(self):
        with pytest.raises(ExprSyntaxError):
            parse("3 u u 4")
        with pytest.raises(ExprSyntaxError):
            parse("")

    @pytest.mark.parametrize("text", ["{P^-1(3)}", "{Pinv(3)}", "{N}", "{0, {3 u P^-1(3)}}"])
    def test_non_zermelo_inside_literal(self, text):
        with pytest.raises(StructuralError):
            parse(text)

    def test_structural_error_position(self):
        with pytest.raises(StructuralError) as exc_info:
            parse("{P^-1(3)}")
        assert (exc_info.value.line, exc_info.value.column) == (1, 2)

    def test_numeral_cap(self, settings_env):
        parse("12")
        with pytest.raises(StructuralError):
            parse("13")
        settings_env(numeral_cap=20)
        assert parse("13") == ZermeloLit(numeral(13))

    def test_source_keeps_text(self):
        source = parse_source("P(1)")
        assert source.text == "P(1)"
        assert source.term == Pow(ZermeloLit(numeral(1)))


class TestPrint:
    def test_print_term(self):
        assert print_term(parse("P^-2(3) u N")) == f"P^-2({THREE}) u N"
        assert print_term(Pow(NatBase())) == "P(N)"
        assert print_term(ZermeloLit(EMPTY)) == "{}"
        assert print_term(InvPow(Pow(InvPow(NatBase())))) == "P^-1(P(P^-1(N)))"

    def test_print_tall_chains(self):
        tower = pow_n(NatBase(), 2000)
        assert print_term(tower) == "P(" * 2000 + "N" + ")" * 2000
        assert print_term(Pow(inv_pow_n(Pow(NatBase()), 2))) == "P(P^-2(P(N)))"

    def test_print_rejects_non_terms(self):
        with pytest.raises(TypeError):
            print_term("3")  # type: ignore[arg-type]

    @pytest.mark.parametrize(
        "text, expected",
        [
            ("P({0,1})", "{{},{{}},{{{}}},{{},{{}}}}"),
            ("P^-1(P({0,1,2}))", THREE),
            ("3 u P^-1({1})", f"{THREE} u P^-1({{{{{{}}}}}})"),
            ("P^-1({1}) u P^-1(3)", f"P^-1({THREE}) u P^-1({{{{{{}}}}}})"),
            ("P^-1(P(P(N)))", "P(N)"),
            ("N u P^-1(N)", "N u P^-1(N)"),
        ],
    )
    def test_normal_form_printing(self, text, expected):
        assert print_normal_form(parse_normal_form(text)) == expected
        assert parse_normal_form(expected) == parse_normal_form(text)


@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_print_parse_round_trip(seed):
    term = next(generate_terms(seed=seed, rank=3))
    text = print_term(term)
    assert parse(text) == term
    assert print_term(parse(text)) == text
