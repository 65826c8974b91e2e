import itertools

import pytest

from wgideal.cells import cells
from wgideal.coxeter import cached_system
from wgideal.laurent import Q
from wgideal.parabolic import (cell_union_check, deodhar_check, descent_match_check,
                               max_cell_ideal, parabolic_wgraph, run_checks)
from wgideal.wgraph import regular_wgraph


def test_empty_j_gives_regular_graph(A3):
    _, g = parabolic_wgraph(A3, ())
    assert g == regular_wgraph(A3)


def test_full_j_gives_single_vertex(B3):
    _, g = parabolic_wgraph(B3, (0, 1, 2))
    assert g.vertices == (0,) and g.tau[0] == {0, 1, 2} and not g.mu


def test_s3_example(A2):
    model, g = parabolic_wgraph(A2, (1,))
    assert len(g) == 3
    s2s1 = A2.from_word([1, 0])
    s2 = A2.from_word([1])
    reg = regular_wgraph(A2).qtable
    assert model.qtable.p_of(0, s2s1) == -Q == reg.p_of(s2, A2.longest)
    assert A2.left_descents(model.embedding[s2s1]) == g.tau[s2s1] == {0, 1}
    assert model.embedding[s2s1] == A2.longest


def test_s4_descents_example(A3):
    model, _ = parabolic_wgraph(A3, (0, 2))
    assert len(model.dj) == 6
    assert descent_match_check(A3, (0, 2)).passed


@pytest.mark.parametrize("desc", ["A2", "A3", "B3", "G2", "I2(5)", "A1xA2"])
def test_all_checks_all_j(desc):
    W = cached_system(desc)
    for k in range(W.rank + 1):
        for J in itertools.combinations(range(W.rank), k):
            assert deodhar_check(W, J).passed
            assert descent_match_check(W, J).passed
            assert cell_union_check(W, J).passed
            i1 = max_cell_ideal(W, J)
            assert 0 in i1


def test_run_checks_report(A2):
    assert run_checks(A2, ()) == {"deodhar": "pass", "descents": "pass", "cellUnion": "pass",
                                  "maxCellIdeal": ["e"]}
    assert run_checks(A2, (1,))["maxCellIdeal"] == ["e", "1"]
    assert run_checks(A2, (0,))["maxCellIdeal"] == ["e", "2"]
    assert run_checks(A2, (0, 1))["maxCellIdeal"] == ["e"]


def test_identity_cell_is_top(B3):
    for J in [(), (1,), (0, 2)]:
        _, g = parabolic_wgraph(B3, J)
        dec = cells(g)
        assert dec.maximal() == [dec.cell_of[0]]
