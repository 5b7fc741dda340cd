from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, strategies as st

from cyclotomic_klr.engine import (NormalWord, degree, enumerate_basis, identity, is_canonical,
                                   multiply, normal_form, one_ij, reduced_word, rewrite)
from cyclotomic_klr.errors import InvalidInput, InvalidParameter
from cyclotomic_klr.residues import enumerate_admissible
from cyclotomic_klr.words import AlgebraElement, Cross, Dot, Idem


def el(n, *words):
    """Sum of words, each given as a tuple of generators (coefficient 1)."""
    return AlgebraElement(n, {tuple(w): 1 for w in words})


def E(*seq):
    return Idem(tuple(seq))


# examples

def test_cross_into_inadmissible_dies():
    assert rewrite(el(2, (Cross(1), E(0, 1)))).is_zero()


def test_double_crossing_forward_case():
    x = rewrite(el(3, (Cross(2), Cross(2), E(0, 1, 2))))
    assert x == el(3, (E(0, 1, 2), Dot(3)))


def test_dot_square_dies_at_n2():
    assert rewrite(el(2, (Dot(2), Dot(2), E(0, 1)))).is_zero()


def test_multiply_examples():
    assert multiply(AlgebraElement.e(0, 1, 2), AlgebraElement.e(0, 2, 1)).is_zero()
    a = el(3, (Cross(2), E(0, 1, 2)))
    b = el(3, (Cross(2), E(0, 2, 1)))
    assert multiply(a, b) == el(3, (E(0, 2, 1), Dot(3))) * -1
    beta = el(2, (Dot(2), E(0, 1)))
    assert multiply(beta, beta).is_zero()


def test_mixed_n_is_rejected():
    with pytest.raises(InvalidInput):
        multiply(AlgebraElement.e(0, 1), AlgebraElement.e(0, 1, 2))


def test_one_ij_examples():
    i = (0, 1, 2)
    assert one_ij(i, i) == rewrite(AlgebraElement.e(*i))
    assert one_ij((0, 1, 2), (0, 2, 1)) == rewrite(el(3, (Cross(2), E(0, 2, 1))))
    assert one_ij((0, 1, 2, 3), (0, 3, 2, 1)).is_zero()
    with pytest.raises(InvalidInput):
        one_ij((0, 1, 2), (0, 1, 3))


def test_identity_is_the_unit_element():
    for n in range(2, 5):
        assert rewrite(AlgebraElement.one(n)) == identity(n)


def test_basis_small():
    assert [str(b) for b in enumerate_basis(2)] == ["e(0,1)", "e(0,1)*y2"]
    assert len(enumerate_basis(3)) == 6
    with pytest.raises(InvalidParameter):
        enumerate_basis(1)


@pytest.mark.parametrize("n, dim", [(2, 2), (3, 6), (4, 20), (5, 70), (6, 252)])
def test_basis_count(n, dim):
    assert len(enumerate_basis(n)) == dim


def test_degree_examples():
    assert degree((E(0, 1, 2),)) == 0
    assert degree((Dot(3), E(0, 1, 2))) == 2
    assert degree((Cross(1), E(0, 1))) == 2
    assert degree((E(0, 2, 1), Cross(2), E(0, 1, 2))) == 1
    with pytest.raises(InvalidInput):
        degree((Cross(1),))
    with pytest.raises(InvalidInput):
        degree((E(0, 1, 2), Cross(1), E(0, 1, 2)))


# oracles and properties

def _reduced_words(perm):
    """All reduced words of a permutation given as a tuple, by brute force."""
    perm = list(perm)
    if perm == sorted(perm):
        return [()]
    out = []
    for k in range(1, len(perm)):
        if perm[k - 1] > perm[k]:
            nxt = perm[:]
            nxt[k - 1], nxt[k] = nxt[k], nxt[k - 1]
            out += [(k,) + w for w in _reduced_words(nxt)]
    return out


@pytest.mark.parametrize("n", [3, 4, 5])
def test_reduced_word_is_lex_minimal(n):
    for b in enumerate_basis(n):
        pos = {r: p for p, r in enumerate(b.target)}
        words = _reduced_words([pos[r] for r in b.source])
        assert b.reduced_word == min(words)
        assert len(set(len(w) for w in words)) == 1


@pytest.mark.parametrize("n", range(2, 6))
def test_basis_shape(n):
    for b in enumerate_basis(n):
        gap = abs(b.source[-1] - b.target[-1])
        assert gap <= 1
        assert b.dot == 0 or gap == 0
        assert is_canonical(el(n, b.word))


def generators(n):
    return ([Idem(s) for s in enumerate_admissible(n)] + [Idem((1,) + tuple(
        r for r in range(n) if r != 1))] + [Dot(k) for k in range(1, n + 1)]
            + [Cross(k) for k in range(1, n)])


@st.composite
def elements(draw, n=None):
    n = draw(st.integers(2, 4)) if n is None else n
    words = draw(st.lists(st.lists(st.sampled_from(generators(n)), max_size=5),
                          min_size=1, max_size=3))
    coeffs = draw(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4),
                           min_size=len(words), max_size=len(words)))
    return AlgebraElement(n, {tuple(w): c for w, c in zip(words, coeffs)})


@given(elements())
def test_rewrite_is_idempotent(x):
    y = rewrite(x)
    assert rewrite(y) == y
    assert is_canonical(y)


@given(elements())
def test_normal_form_lies_in_the_basis(x):
    basis = set(enumerate_basis(x.n))
    assert set(normal_form(x)) <= basis


@given(st.integers(2, 4).flatmap(lambda n: st.tuples(elements(n), elements(n), elements(n))))
def test_multiplication_is_associative(xyz):
    x, y, z = xyz
    assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))


@given(st.integers(2, 4).flatmap(lambda n: st.tuples(elements(n), elements(n))))
def test_rewrite_respects_products(xy):
    x, y = xy
    assert rewrite(x * y) == multiply(rewrite(x), rewrite(y))


@given(st.integers(2, 4).flatmap(lambda n: st.tuples(elements(n), elements(n))))
def test_rewrite_is_linear(xy):
    x, y = xy
    assert rewrite(x + y * Fraction(2, 3)) == rewrite(x) + rewrite(y) * Fraction(2, 3)


@given(st.integers(2, 5).flatmap(lambda n: st.tuples(
    st.sampled_from(enumerate_basis(n)), st.sampled_from(enumerate_basis(n)))))
def test_products_of_basis_elements_are_homogeneous(ab):
    a, b = ab
    for nw in normal_form(multiply(el(a.n, a.word), el(b.n, b.word))):
        assert nw.degree == a.degree + b.degree


@pytest.mark.parametrize("n", range(2, 7))
def test_dot_and_loop_facts(n):
    basis = set(enumerate_basis(n))
    for i in enumerate_admissible(n):
        for k in range(1, n):
            assert rewrite(el(n, (Dot(k), Idem(i)))).is_zero()
        assert rewrite(el(n, (Dot(n), Dot(n), Idem(i)))).is_zero()
        assert NormalWord(i, i, 1) in basis
        assert sum(1 for b in basis if b.source == b.target == i) == 2
