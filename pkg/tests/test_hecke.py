import itertools

import pytest

from wgideal.coxeter import cached_system
from wgideal.hecke import (OracleNotApplicable, action_matrix, bar_on_basis, bar_vector,
                           canonical_basis_oracle, oracle_applicable, t_action)
from wgideal.ideals import coset_ideal, full_ideal, ideal_from_generators
from wgideal.laurent import ONE, Q_MINUS_QINV, QINV
from wgideal.wgraph import _apply


def test_t_action_examples(A2):
    s1, s2 = A2.generators
    W_ = full_ideal(A2)
    assert t_action(W_, 0, {0: ONE}) == {s1: ONE}
    assert t_action(W_, 0, {s1: ONE}) == {0: ONE, s1: Q_MINUS_QINV}
    assert t_action(coset_ideal(A2, {1}), 1, {0: ONE}) == {0: -QINV}


def test_bar_examples(A2):
    s1, s2 = A2.generators
    bars = bar_on_basis(full_ideal(A2))
    assert bars[0] == {0: ONE}
    assert bars[s1] == {s1: ONE, 0: -Q_MINUS_QINV}
    s2s1 = A2.multiply(s2, s1)
    assert bars[s2s1] == {s2s1: ONE, s1: -Q_MINUS_QINV, s2: -Q_MINUS_QINV,
                          0: Q_MINUS_QINV * Q_MINUS_QINV}


def test_not_applicable(A3):
    # {e, s2s1 ...}: s3 ascends e out of the ideal while not in J
    ideal = ideal_from_generators(A3, [A3.from_word([1, 0])], {1})
    assert not oracle_applicable(ideal)
    with pytest.raises(OracleNotApplicable, match="oracle not applicable"):
        bar_on_basis(ideal)


@pytest.mark.parametrize("desc", ["A2", "A3", "B3", "G2", "I2(5)"])
def test_relations_and_bar_square(desc):
    W = cached_system(desc)
    for k in range(W.rank + 1):
        for J in itertools.combinations(range(W.rank), k):
            ideal = coset_ideal(W, J)
            mats = {s: action_matrix(ideal, s) for s in range(W.rank)}
            for s in range(W.rank):
                for w in ideal.members:
                    lhs = _apply(mats[s], mats[s][w])
                    rhs = dict(mats[s][w])
                    rhs = {y: a * Q_MINUS_QINV for y, a in rhs.items()}
                    rhs[w] = rhs.get(w, 0 * ONE) + ONE
                    assert lhs == {y: a for y, a in rhs.items() if a}
            for s, t in itertools.combinations(range(W.rank), 2):
                m = W.coxeter_order(s, t)
                for w in ideal.members:
                    x, y = {w: ONE}, {w: ONE}
                    for i in range(m):
                        x = _apply(mats[(s, t)[i % 2]], x)
                        y = _apply(mats[(t, s)[i % 2]], y)
                    assert x == y
            bars = bar_on_basis(ideal)
            for w in ideal.members:
                assert bar_vector(bars, bars[w]) == {w: ONE}


def test_oracle_examples(A2):
    s1, s2 = A2.generators
    table = canonical_basis_oracle(coset_ideal(A2, {1}))
    assert (0, A2.multiply(s2, s1)) not in table  # q_{e,s2s1} = 0
    full = canonical_basis_oracle(full_ideal(A2))
    for w in range(A2.size):
        for s in range(A2.rank):
            sw = A2.left_mul(s, w)
            if A2.length(sw) > A2.length(w):
                assert full[(w, sw)] == ONE
