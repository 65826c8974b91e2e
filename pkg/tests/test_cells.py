import itertools

import pytest

from wgideal.cells import (cells, extract_subideal, filtration_dimensions, is_closed,
                           preorder_digraph, up_set_ideals)
from wgideal.coxeter import cached_system
from wgideal.ideals import coset_ideal, full_ideal, ideal_from_generators
from wgideal.laurent import Q
from wgideal.wgraph import kl_recursion, regular_wgraph, verify_ideal, wgraph_of_ideal


def closure_cells(g):
    """Cells and their order by Warshall's transitive closure, no graph library."""
    vs = list(g.vertices)
    idx = {v: i for i, v in enumerate(vs)}
    n = len(vs)
    reach = [[i == j for j in range(n)] for i in range(n)]
    for (u, v), m in g.mu.items():
        if m and not g.tau[u] <= g.tau[v]:
            reach[idx[v]][idx[u]] = True
    for k in range(n):
        for i in range(n):
            if reach[i][k]:
                row_k = reach[k]
                row_i = reach[i]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    classes = {}
    for i in range(n):
        key = frozenset(j for j in range(n) if reach[i][j] and reach[j][i])
        classes[key] = True
    parts = [frozenset(vs[j] for j in c) for c in classes]
    below = {(a, b) for a in parts for b in parts
             if a != b and reach[idx[next(iter(b))]][idx[next(iter(a))]]}
    return set(parts), below


def test_preorder_example(A2):
    g = wgraph_of_ideal(coset_ideal(A2, {1}))
    s1, s2s1 = A2.from_word([0]), A2.from_word([1, 0])
    assert set(preorder_digraph(g).edges()) == {(0, s1), (s1, 0), (s1, s2s1)}


def test_cell_examples(A2):
    g = wgraph_of_ideal(coset_ideal(A2, {1}))
    dec = cells(g)
    s1, s2s1 = A2.from_word([0]), A2.from_word([1, 0])
    assert dec.cells == [(0, s1), (s2s1,)]
    assert dec.order == {(1, 0)}
    assert dec.maximal() == [0]
    reg = cells(regular_wgraph(A2))
    w = A2.from_word
    assert reg.sizes() == [1, 2, 2, 1]
    assert set(map(frozenset, reg.cells)) == {
        frozenset({0}), frozenset({w([0]), w([1, 0])}), frozenset({w([1]), w([0, 1])}),
        frozenset({A2.longest})}


def test_closed_examples(A2):
    g = wgraph_of_ideal(coset_ideal(A2, {1}))
    assert is_closed(g, []) and is_closed(g, g.vertices)
    assert is_closed(g, [A2.from_word([1, 0])])
    assert not is_closed(g, [0])
    assert is_closed(regular_wgraph(A2), [A2.longest])


def test_up_set_examples(A2):
    g = wgraph_of_ideal(coset_ideal(A2, {1}))
    dec = cells(g)
    up, strict = up_set_ideals(g, 0, dec)
    assert up.members == (0, A2.from_word([0])) and strict.members == ()
    up, strict = up_set_ideals(g, 1, dec)
    assert up.members == g.vertices and strict.members == (0, A2.from_word([0]))
    single = wgraph_of_ideal(ideal_from_generators(A2, [0], {0}))
    up, strict = up_set_ideals(single, 0)
    assert len(up) == 1 and len(strict) == 0
    assert filtration_dimensions(g, 1, dec) == {
        "submodule_without_cell": 0, "submodule_with_cell": 1, "cell_quotient": 1}


def test_extraction_example(A2):
    ideal0 = coset_ideal(A2, {0})
    qt0 = kl_recursion(ideal0)
    s2, s1s2 = A2.from_word([1]), A2.from_word([0, 1])
    keep = ideal0.restrict([0, s2])
    ext = extract_subideal(ideal0, qt0, keep)
    assert ext.garnir == {(s2, s1s2): Q, (0, s1s2): -Q**2}
    assert ext.induced_r == {(0, 0, s2): Q**2}
    assert ext.wgraph.vertices == (0, s2)


def test_extraction_of_everything_is_identity(B3):
    for J in [(), (0,), (1, 2)]:
        ideal0 = coset_ideal(B3, J)
        qt0 = kl_recursion(ideal0)
        r0 = verify_ideal(ideal0, qt0, check_braid=False).rtable
        ext = extract_subideal(ideal0, qt0, ideal0, r0)
        assert ext.garnir == {}
        assert ext.induced_r == r0
        assert ext.qtable.q == qt0.q


def test_extraction_rejects_open_complement(A2):
    ideal0 = coset_ideal(A2, {1})
    qt0 = kl_recursion(ideal0)
    # keeping {e} removes {s1, s2s1}, which can reach e
    with pytest.raises(ValueError, match="closed"):
        extract_subideal(ideal0, qt0, ideal0.restrict([0]))


@pytest.mark.parametrize("desc", ["A3", "B3", "G2", "I2(7)"])
def test_cells_match_closure_oracle(desc):
    W = cached_system(desc)
    for k in range(W.rank + 1):
        for J in itertools.combinations(range(W.rank), k):
            g = wgraph_of_ideal(coset_ideal(W, J))
            dec = cells(g)
            parts, below = closure_cells(g)
            assert set(map(frozenset, dec.cells)) == parts
            mine = {(frozenset(dec.cells[i]), frozenset(dec.cells[j])) for i, j in dec.order}
            assert mine == below
            assert dec.maximal() == [dec.cell_of[0]]


@pytest.mark.parametrize("desc", ["A3", "B3"])
def test_all_cell_subideals_of_cosets(desc):
    W = cached_system(desc)
    for k in range(W.rank + 1):
        for J in itertools.combinations(range(W.rank), k):
            ideal0 = coset_ideal(W, J)
            g = wgraph_of_ideal(ideal0)
            r0 = verify_ideal(ideal0, g.qtable, check_braid=False).rtable
            dec = cells(g)
            for i in range(len(dec.cells)):
                for sub in up_set_ideals(g, i, dec):
                    if len(sub):
                        ext = extract_subideal(ideal0, g.qtable, sub, r0)
                        assert all(r.is_in_qAplus() for r in ext.garnir.values())
                        assert all(r.is_in_qAplus() for r in ext.induced_r.values())
