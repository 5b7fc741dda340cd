from dataclasses import replace
from itertools import permutations

import pytest

from cyclotomic_klr.derivations import (check_trace, closure_trace, derive_dot_rules,
                                        derive_dot_square_vanishing, derive_dot_vanishing,
                                        derive_idempotent_vanishing, replay_all,
                                        vanishing_closure)
from cyclotomic_klr.errors import InvalidInput, VerificationFailure
from cyclotomic_klr.relations import color_of_suffix
from cyclotomic_klr.residues import enumerate_admissible, is_admissible
from cyclotomic_klr.words import Cross, Idem


def test_cyclotomic_generator_needs_one_step():
    tr = derive_idempotent_vanishing((1, 0))
    assert len(tr) == 1
    assert tr.steps[0].rule == "cyclotomic_idem"
    assert check_trace(tr)


def test_admissible_sequence_is_rejected():
    with pytest.raises(InvalidInput):
        derive_idempotent_vanishing((0, 2, 1))


def test_offending_strand_moves_to_the_front():
    tr = derive_idempotent_vanishing((0, 2, 1, 3))
    assert check_trace(tr)
    rules = [st.rule for st in tr.steps]
    assert rules == ["quadratic", "cyclotomic_idem"]
    # the killed idempotent is s_1 (0,2,1,3) = (2,0,1,3)
    kill = tr.steps[-1]
    assert kill.prefix == (Cross(1),)
    assert color_of_suffix(kill.suffix) == (2, 0, 1, 3)


@pytest.mark.parametrize("n", range(2, 7))
def test_every_inadmissible_idempotent_has_a_trace(n):
    known = replay_all(derive_dot_rules(n))
    for t in permutations(range(n)):
        if not is_admissible(t):
            check_trace(derive_idempotent_vanishing(t), known)


@pytest.mark.parametrize("n", range(2, 7))
def test_dot_rule_traces_replay(n):
    traces = derive_dot_rules(n)
    known = replay_all(traces)
    for seq in enumerate_admissible(n):
        assert ("dot2", seq) in known
        for k in range(1, n):
            assert ("dot", k, seq) in known


def test_dot_square_at_n2_uses_the_double_edge():
    tr = derive_dot_square_vanishing((0, 1))
    assert tr.steps[0].rule == "quadratic"
    assert check_trace(tr)


def test_small_dot_examples():
    assert check_trace(derive_dot_vanishing((0, 1, 2), 1))
    # neighbour l = 1, where y_1 e(0,1,2) is a cyclotomic generator
    tr = derive_dot_vanishing((0, 1, 2), 2)
    assert [st.rule for st in tr.steps][-1] == "cyclotomic_dot"
    assert check_trace(tr)
    sq = derive_dot_square_vanishing((0, 1, 2))
    assert sq.fact == ("dot2", (0, 1, 2))
    assert ("dot2", (0, 1, 2)) in replay_all(derive_dot_rules(3))


def test_tampered_coefficient_is_caught():
    tr = derive_idempotent_vanishing((0, 2, 1, 3))
    bad = replace(tr, steps=[replace(tr.steps[0], coeff=tr.steps[0].coeff * 2)] + tr.steps[1:])
    with pytest.raises(VerificationFailure):
        check_trace(bad)


def test_wrong_relation_is_caught():
    tr = derive_idempotent_vanishing((0, 2, 1, 3))
    bad = replace(tr, steps=[replace(tr.steps[0], rule="braid")] + tr.steps[1:])
    with pytest.raises(VerificationFailure):
        check_trace(bad)


def test_lemma_needs_a_prior_proof():
    tr = derive_dot_vanishing((0, 1, 2, 3), 3)
    assert ("dot", 2, (0, 1, 2, 3)) in tr.lemmas()
    with pytest.raises(VerificationFailure):
        check_trace(tr, known=frozenset())
    known = {("idem", (0, 2, 1, 3)), ("dot", 2, (0, 1, 2, 3))}
    assert check_trace(tr, known)


@pytest.mark.parametrize("n", range(2, 6))
def test_closure_chains_give_valid_traces(n):
    for t, chain in vanishing_closure(n).items():
        assert check_trace(closure_trace(t, chain))
