"""
Cells of a W-graph, closed subsets, and W-graph sub-ideals.

Arc convention, used everywhere in this package: the preorder digraph has an
arc ``v -> u`` exactly when ``u <-_Gamma v``, i.e. ``tau(u)`` is not a subset
of ``tau(v)`` and ``mu(u, v) != 0``.  Then the vertices reachable from ``v``
are precisely ``{u : u <=_Gamma v}``, and a vertex set is closed iff no arc
leaves it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable

import networkx as nx

from .ideals import Ideal, WA
from .laurent import LaurentPoly, Q, ZERO
from .wgraph import (NotWGraphIdeal, QTable, WGraph, build_wgraph, kl_recursion,
                     verify_ideal)

__all__ = ["CellDecomposition", "SubidealExtraction", "preorder_digraph", "cells",
           "is_closed", "up_set_ideals", "extract_subideal", "filtration_dimensions"]


def preorder_digraph(g: WGraph) -> nx.DiGraph:
    dg = nx.DiGraph()
    dg.add_nodes_from(g.vertices)
    for (u, v), m in g.mu.items():
        if m and not g.tau[u] <= g.tau[v]:
            dg.add_edge(v, u)
    return dg


@dataclass
class CellDecomposition:
    """Cells in canonical order (by first vertex) with their partial order.

    ``order`` holds the strict pairs ``(i, j)`` meaning cell i < cell j, i.e.
    cell i is reachable from cell j in the condensation.
    """
    graph: WGraph = field(repr=False)
    cells: list[tuple[Hashable, ...]]
    cell_of: dict[Hashable, int] = field(repr=False)
    order: set[tuple[int, int]]
    condensation: nx.DiGraph = field(repr=False)

    def leq(self, i: int, j: int) -> bool:
        return i == j or (i, j) in self.order

    def above(self, i: int, strict: bool = False) -> list[int]:
        """Indices of cells ``D`` with ``cell_i <= D``."""
        return [j for j in range(len(self.cells))
                if (i, j) in self.order or (not strict and i == j)]

    def maximal(self) -> list[int]:
        return [i for i in range(len(self.cells))
                if not any((i, j) in self.order for j in range(len(self.cells)))]

    def sizes(self) -> list[int]:
        return [len(c) for c in self.cells]


def cells(g: WGraph) -> CellDecomposition:
    dg = preorder_digraph(g)
    pos = {v: k for k, v in enumerate(g.vertices)}
    comps = [tuple(sorted(c, key=pos.__getitem__)) for c in nx.strongly_connected_components(dg)]
    comps.sort(key=lambda c: pos[c[0]])
    cell_of = {v: i for i, c in enumerate(comps) for v in c}
    cond = nx.DiGraph()
    cond.add_nodes_from(range(len(comps)))
    for v, u in dg.edges():
        a, b = cell_of[v], cell_of[u]
        if a != b:
            cond.add_edge(a, b)
    order = set()
    for j in cond.nodes:
        for i in nx.descendants(cond, j):
            order.add((i, j))
    dec = CellDecomposition(g, comps, cell_of, order, cond)
    if g.ideal is not None and 0 in cell_of:
        top = cell_of[0]
        if dec.maximal() != [top]:
            raise AssertionError("cell of the identity vertex is not the unique maximum")
    return dec


def is_closed(g: WGraph, U: Iterable[Hashable]) -> bool:
    """True iff ``u in U`` and ``v <-_Gamma u`` force ``v in U``."""
    U = set(U)
    for (v, u), m in g.mu.items():
        if u in U and m and v not in U and not g.tau[v] <= g.tau[u]:
            return False
    return True


def up_set_ideals(g: WGraph, cell_index: int, dec: CellDecomposition | None = None
                  ) -> tuple[Ideal, Ideal]:
    """Members in cells at or above the given cell, and strictly above it."""
    if g.ideal is None:
        raise ValueError("graph was not built from an ideal")
    dec = dec or cells(g)
    up = {v for j in dec.above(cell_index) for v in dec.cells[j]}
    strict = up - set(dec.cells[cell_index])
    return g.ideal.restrict(up), g.ideal.restrict(strict)


def filtration_dimensions(g: WGraph, cell_index: int, dec: CellDecomposition | None = None
                          ) -> dict[str, int]:
    """Ranks of the two closed submodules around a cell and of their quotient."""
    dec = dec or cells(g)
    up = {v for j in dec.above(cell_index) for v in dec.cells[j]}
    below = len(g.vertices) - len(up)
    return {"submodule_without_cell": below,
            "submodule_with_cell": below + len(dec.cells[cell_index]),
            "cell_quotient": len(dec.cells[cell_index])}


@dataclass
class SubidealExtraction:
    new_ideal: Ideal
    garnir: dict[tuple[int, int], LaurentPoly]
    induced_r: dict[tuple[int, int, int], LaurentPoly]
    iso_check: dict[int, int]
    qtable: QTable
    wgraph: WGraph


def extract_subideal(ideal0: Ideal, qt0: QTable, keep: Ideal,
                     rtable0: dict[tuple[int, int, int], LaurentPoly] | None = None
                     ) -> SubidealExtraction:
    """Pass to the quotient by the vertices outside ``keep``.

    The images of the removed standard basis vectors are
    ``f(b0_w) = sum_y r_{y,w} b_y`` with
    ``r_{y,w} = q p0_{y,w} + sum_{x removed, y<x<w} q p0_{x,w} r_{y,x}``.
    The weak-ascent coefficients of the new ideal follow from these and from
    ``rtable0`` (those of ``ideal0``); all are checked to lie in qZ[q] and
    compared with a fresh run of the recursion on ``keep``.
    """
    W = ideal0.system
    if keep.j != ideal0.j or not keep.member_set <= ideal0.member_set:
        raise ValueError("keep must be a sub-ideal with the same J")
    if not keep.is_suffix_closed():
        raise ValueError("keep is not an ideal")
    if qt0.p is None:
        raise ValueError("qt0 needs its p-table")
    g0 = build_wgraph(ideal0, qt0)
    removed = [w for w in ideal0.members if w not in keep]
    if not is_closed(g0, removed):
        raise ValueError("complement of the sub-ideal is not a closed subset")
    if rtable0 is None:
        rtable0 = verify_ideal(ideal0, qt0, check_braid=False).rtable

    removed_set = set(removed)
    garnir: dict[tuple[int, int], LaurentPoly] = {}
    by_removed: dict[int, dict[int, LaurentPoly]] = {}
    for w in removed:
        col: dict[int, LaurentPoly] = {}
        lower = W.bruhat_lower(w)
        for y in keep.members:
            if y == w or y not in lower:
                continue
            val = qt0.p_of(y, w).shift(1)
            for x in removed:
                if x != w and x != y and x in lower:
                    rx = by_removed.get(x, {}).get(y)
                    if rx is not None:
                        pxw = qt0.p.get((x, w))
                        if pxw is not None:
                            val = val + (pxw * rx).shift(1)
            if val:
                if not val.is_in_qAplus():
                    raise NotWGraphIdeal(f"internal error: r_{{{y},{w}}} = {val} not in qZ[q]")
                col[y] = val
                garnir[(y, w)] = val
        by_removed[w] = col
        for s in W.left_descents(w):
            sw = W.left_mul(s, w)
            if sw in keep and col.get(sw) != Q:
                raise NotWGraphIdeal(f"internal error: r_{{{sw},{w}}} = {col.get(sw)} != q")

    r0_by: dict[tuple[int, int], list[tuple[int, LaurentPoly]]] = {}
    for (t, y, x), r in rtable0.items():
        r0_by.setdefault((t, x), []).append((y, r))

    # r-polynomials of the new ideal, in the T_s b_w = q b_w - sum r b_y convention
    induced: dict[tuple[int, int, int], LaurentPoly] = {}
    for w in keep.members:
        for s in range(W.rank):
            if keep.classify(w, s) is not WA:
                continue
            sw = W.left_mul(s, w)
            acc: dict[int, LaurentPoly] = {}
            if sw in removed_set:
                acc[w] = Q
                for y, r in by_removed[sw].items():
                    acc[y] = acc.get(y, ZERO) - r
            else:
                for y, r in r0_by.get((s, w), ()):
                    if y in removed_set:
                        for yy, rr in by_removed[y].items():
                            acc[yy] = acc.get(yy, ZERO) + r * rr
                    else:
                        acc[y] = acc.get(y, ZERO) + r
            for y, r in acc.items():
                if not r:
                    continue
                if not r.is_in_qAplus():
                    raise NotWGraphIdeal(f"internal error: r^{s + 1}_{{{y},{w}}} = {r} not in qZ[q]")
                induced[(s, y, w)] = r

    fresh = kl_recursion(keep)
    check = verify_ideal(keep, fresh, check_braid=False)
    new_graph = check.wgraph
    expected = g0.induced(keep.members)
    if new_graph.tau != expected.tau or new_graph.mu != expected.mu:
        raise AssertionError("fresh recursion on the sub-ideal differs from the induced subgraph")
    restricted_q = {k: v for k, v in qt0.q.items() if k[0] in keep and k[1] in keep}
    if fresh.q != restricted_q:
        raise AssertionError("q-polynomials of the sub-ideal differ from the restriction")
    if check.rtable != induced:
        raise AssertionError("weak-ascent polynomials differ between extraction and recursion")
    return SubidealExtraction(keep, garnir, induced, {w: w for w in keep.members},
                              fresh, new_graph)
