"""Checks over the surface syntax."""

from invpow.audit.base import CheckRun, register_check
from invpow.audit.generators import generate_terms
from invpow.calculus.cardinality import ch_card
from invpow.models.cardinals import SymCardinal
from invpow.utils.expr_lang import parse, parse_normal_form, print_normal_form, print_term

# (expression, expected canonical normal form or CH-cardinality)
GOLDEN_FORMS = (
    # P({a,b}) with a, b := 0, 1
    ("P({0,1})", "{{},{{}},{{{}}},{{},{{}}}}"),
    # P^-1(P({a,b,c})) with a, b, c := 0, 1, 2
    ("P^-1(P({0,1,2}))", "{{},{{}},{{},{{}}}}"),
)
GOLDEN_CH_CARDS = (("P^-1({1,2,3,4,5})", SymCardinal.beth(0)),)


@register_check("parser-roundtrip", "generated terms over V{rank} (10000 by default)", exhaustive=False)
def check_parser_roundtrip(run: CheckRun) -> None:
    terms = generate_terms(seed=run.rng.randrange(2**32), rank=run.config.rank)
    for _ in range(run.samples(10_000)):
        term = next(terms)
        text = print_term(term)
        reparsed = parse(text)
        run.expect(reparsed == term and print_term(reparsed) == text, term)


@register_check("golden-examples", "worked examples")
def check_golden_examples(run: CheckRun) -> None:
    for text, expected in GOLDEN_FORMS:
        nf = parse_normal_form(text)
        run.expect(print_normal_form(nf) == expected and parse_normal_form(expected) == nf, parse(text))
    for text, cardinal in GOLDEN_CH_CARDS:
        run.expect(ch_card(parse(text)) == cardinal, parse(text))
