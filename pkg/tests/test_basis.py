import pytest

from cyclotomic_klr.basis import (relation_instances, relation_soundness, structure_constants,
                                  verify_ring_axioms)
from cyclotomic_klr.engine import enumerate_basis, multiply, normal_form
from cyclotomic_klr.words import AlgebraElement


def test_n2_table():
    t = structure_constants(2)
    e, beta = t.index[enumerate_basis(2)[0]], t.index[enumerate_basis(2)[1]]
    assert t.product(e, e) == ((e, 1),)
    assert t.product(e, beta) == ((beta, 1),)
    assert t.product(beta, beta) == ()


def test_n3_opposite_crossings_give_dotted_idempotents():
    t = structure_constants(3)
    crossings = [k for k, b in enumerate(t.basis) if b.source != b.target]
    assert len(crossings) == 2
    a, b = crossings
    for x, y in ((a, b), (b, a)):
        ((c, k),) = t.product(x, y)
        assert t.basis[c].dot == 1 and t.basis[c].source == t.basis[x].source
        assert k in (1, -1)


@pytest.mark.parametrize("n", range(2, 6))
def test_table_matches_engine(n):
    t = structure_constants(n)
    for (a, b), terms in list(t.products.items())[:400]:
        x = AlgebraElement(n, {t.basis[a].word: 1})
        y = AlgebraElement(n, {t.basis[b].word: 1})
        expected = {t.index[w]: c for w, c in normal_form(multiply(x, y)).items()}
        assert dict(terms) == expected


@pytest.mark.parametrize("n", [2, 3, 4])
def test_ring_axioms_exhaustive(n):
    report = verify_ring_axioms(n)
    assert report.passed, str(report)
    assert f"{len(structure_constants(n)) ** 3} triples, exhaustive" in str(report)


def test_ring_axioms_sampled_n5():
    report = verify_ring_axioms(5, sample=20000, seed=3)
    assert report.passed, str(report)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_relations_hold_in_every_context(n):
    report = relation_soundness(n, contexts=True)
    assert report.passed, str(report)


@pytest.mark.parametrize("n", [5, 6])
def test_relations_hold(n):
    assert relation_soundness(n, contexts=False).passed


def test_relation_instances_cover_every_colouring():
    labels = [label for label, _ in relation_instances(3)]
    assert sum(1 for s in labels if s.startswith("cyclotomic")) == 6
    assert any(s.startswith("quadratic(2,) e(0, 1, 2)") for s in labels)
