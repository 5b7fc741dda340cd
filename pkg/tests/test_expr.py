from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cyclotomic_klr.engine import rewrite
from cyclotomic_klr.expr import (Generator, ParseError, Product, Rational, Sum, evaluate,
                                 format_expr, parse_and_evaluate, parse_element)
from cyclotomic_klr.words import AlgebraElement, Cross, Dot, Idem

CORPUS = [
    ("e(0,1,2) * p2 * p2", 3),
    ("y2*e(0,1) - e(0,1)*y2", 2),
    ("  e( 0 , 1 )  ", 2),
    ("-3/4*e(0,1,3,2)*y4 + 2", 4),
    ("(e(0,1) + y2) * (1 - p1)", 2),
    ("((p1*p1)*p1)", 2),
    ("1/2 - -3", 2),
    ("e(0,1,2,3,4)*p3*p2*p3 - e(0,1,2,3,4)*p2*p3*p2", 5),
]


def test_product_tree():
    tree = parse_element("e(0,1,2) * p2 * p2", 3)
    assert tree == Product((Generator(Idem((0, 1, 2))), Generator(Cross(2)),
                            Generator(Cross(2))))


def test_commuting_difference_rewrites_to_zero():
    assert rewrite(parse_and_evaluate("y2*e(0,1) - e(0,1)*y2", 2)).is_zero()


def test_rationals():
    assert parse_element("-3/6", 2) == Rational(Fraction(-1, 2))
    assert parse_and_evaluate("2/3", 2) == AlgebraElement.one(2) * Fraction(2, 3)


@pytest.mark.parametrize("text, n, offset", [
    ("e(0,1", 2, 6),
    ("e(0,1)+", 2, 8),
    ("e(0,1) e(0,1)", 2, 8),
    ("x", 2, 1),
    ("1/0", 2, 3),
    ("e(0,0)", 2, 1),
    ("y3", 2, 1),
    ("2*p2", 2, 3),
    ("e(0,1,2)", 2, 1),
    ("(e(0,1)", 2, 8),
    ("", 2, 1),
])
def test_errors_report_offsets(text, n, offset):
    with pytest.raises(ParseError) as info:
        parse_element(text, n)
    assert info.value.offset == offset
    assert info.value.position == offset


@pytest.mark.parametrize("text, n", CORPUS)
def test_round_trip_corpus(text, n):
    tree = parse_element(text, n)
    assert parse_element(format_expr(tree), n) == tree


@pytest.mark.parametrize("n", [2, 3, 4])
def test_element_printing_is_parseable(n):
    from cyclotomic_klr.engine import enumerate_basis
    x = AlgebraElement(n, {b.word: Fraction(k - 3, 2) for k, b in enumerate(enumerate_basis(n))})
    x = rewrite(x)
    assert rewrite(parse_and_evaluate(str(x), n)) == x


def trees(n):
    gens = st.sampled_from([Generator(Idem((0,) + tuple(range(1, n)))), Generator(Dot(n)),
                            Generator(Cross(1)), Generator(Dot(1))])
    rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6).map(Rational)
    leaves = st.one_of(gens, rationals)

    def extend(children):
        prods = st.lists(children, min_size=2, max_size=3).map(lambda f: Product(tuple(f)))
        sums = st.lists(st.tuples(st.sampled_from([1, -1]), children), min_size=2,
                        max_size=3).map(lambda t: Sum(((1, t[0][1]),) + tuple(t[1:])))
        return st.one_of(prods, sums)

    return st.recursive(leaves, extend, max_leaves=8)


@given(trees(3))
def test_round_trip_property(tree):
    assert parse_element(format_expr(tree), 3) == tree


@given(trees(2))
def test_evaluation_matches_printed_form(tree):
    assert evaluate(parse_element(format_expr(tree), 2), 2) == evaluate(tree, 2)
