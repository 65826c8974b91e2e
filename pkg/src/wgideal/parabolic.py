"""
The ideal ``D_J`` of minimal coset representatives and its place in the
regular W-graph.

``D_J`` taken relative to J gives the induced module on which ``W_J`` acts
by the sign-like character ``T_u -> (-q)^{-l(u)}``.  Its W-graph embeds in
the regular one via ``w -> w * w_J``; the checks here compare the two sides
exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .cells import CellDecomposition, cells
from .coxeter import CoxeterSystem
from .ideals import Ideal, coset_ideal
from .wgraph import QTable, Report, WGraph, regular_wgraph, wgraph_of_ideal

__all__ = ["ParabolicModel", "parabolic_wgraph", "deodhar_check", "descent_match_check",
           "cell_union_check", "max_cell_ideal", "run_checks"]


@dataclass
class ParabolicModel:
    j: frozenset[int]
    dj: tuple[int, ...]
    wj: int
    qtable: QTable
    ideal: Ideal
    embedding: dict[int, int]


def parabolic_wgraph(system: CoxeterSystem, J: Iterable[int]) -> tuple[ParabolicModel, WGraph]:
    J = frozenset(J)
    key = ("parabolic", J)
    hit = system.cache.get(key)
    if hit is not None:
        return hit
    ideal = coset_ideal(system, J)
    g = wgraph_of_ideal(ideal)
    wj = system.longest_element(J)
    emb = {w: system.multiply(w, wj) for w in ideal.members}
    if len(set(emb.values())) != len(emb):
        raise AssertionError("w -> w*w_J is not injective on D_J")
    model = ParabolicModel(J, ideal.members, wj, g.qtable, ideal, emb)
    system.cache[key] = (model, g)
    return model, g


def _regular(system: CoxeterSystem) -> tuple[WGraph, CellDecomposition]:
    g = regular_wgraph(system)
    dec = system.cache.get("regular_cells")
    if dec is None:
        dec = cells(g)
        system.cache["regular_cells"] = dec
    return g, dec


def deodhar_check(system: CoxeterSystem, J: Iterable[int]) -> Report:
    """``p^J_{y,w} == p_{y w_J, w w_J}`` for every pair in ``D_J``."""
    model, _ = parabolic_wgraph(system, J)
    reg = regular_wgraph(system).qtable
    rep = Report()
    emb = model.embedding
    members = model.dj
    for w in members:
        for y in members:
            if y == w or not system.bruhat_leq(y, w):
                continue
            left = model.qtable.p_of(y, w)
            right = reg.p_of(emb[y], emb[w])
            ok = left == right
            rep.record("deodhar", ok, None if ok else
                       f"y={system.word_str(y)}, w={system.word_str(w)}: {left} != {right}")
            if not ok:
                return rep
    rep.record("deodhar", True)
    return rep


def descent_match_check(system: CoxeterSystem, J: Iterable[int]) -> Report:
    """``L(w w_J) == SD(w) | WD(w)`` for every ``w`` in ``D_J``."""
    model, g = parabolic_wgraph(system, J)
    rep = Report()
    for w in model.dj:
        lhs = system.left_descents(model.embedding[w])
        ok = lhs == g.tau[w]
        rep.record("descents", ok, None if ok else
                   f"w={system.word_str(w)}: {sorted(lhs)} != {sorted(g.tau[w])}")
    return rep


def cell_union_check(system: CoxeterSystem, J: Iterable[int]) -> Report:
    """``D_J w_J`` is a union of left cells, equals ``{w : w <=_Gamma w_J}``,
    and ``c^J_w -> c_{w w_J}`` is a tau- and mu-preserving isomorphism onto
    the full subgraph."""
    model, g = parabolic_wgraph(system, J)
    reg, dec = _regular(system)
    rep = Report()
    image = set(model.embedding.values())
    union_ok = all(set(c) <= image or not (set(c) & image) for c in dec.cells)
    rep.record("cellUnion", union_ok, None if union_ok else "D_J w_J cuts through a cell")
    top = dec.cell_of[model.wj]
    down = {v for i, c in enumerate(dec.cells) if dec.leq(i, top) for v in c}
    rep.record("cellUnion", down == image, None if down == image else
               "D_J w_J differs from the down-set of w_J")
    emb = model.embedding
    sub = reg.induced(image)
    mapped = g.relabel(emb.__getitem__, order=sub.vertices)
    iso = mapped.tau == sub.tau and mapped.mu == sub.mu
    rep.record("isomorphism", iso, None if iso else "embedding does not preserve tau and mu")
    return rep


def max_cell_ideal(system: CoxeterSystem, J: Iterable[int]) -> Ideal:
    """Members of the maximal cell of ``Gamma(C_J)``, as an ideal relative to J.

    Also asserts that the left cell containing ``w_J`` is ``I_1 * w_J``.
    """
    model, g = parabolic_wgraph(system, J)
    dec = cells(g)
    top = dec.cell_of[0]
    i1 = model.ideal.restrict(dec.cells[top])
    if 0 not in i1:
        raise AssertionError("maximal-cell ideal does not contain the identity")
    _, rdec = _regular(system)
    left_cell = set(rdec.cells[rdec.cell_of[model.wj]])
    if left_cell != {model.embedding[w] for w in i1.members}:
        raise AssertionError("left cell of w_J is not I_1 * w_J")
    return i1


def run_checks(system: CoxeterSystem, J: Iterable[int],
               which: Iterable[str] = ("deodhar", "descents", "cellUnion", "maxCellIdeal")) -> dict:
    """JSON-ready report for one J."""
    J = frozenset(J)
    out: dict = {}
    which = list(which)
    if "deodhar" in which:
        out["deodhar"] = "pass" if deodhar_check(system, J).passed else "fail"
    if "descents" in which:
        out["descents"] = "pass" if descent_match_check(system, J).passed else "fail"
    if "cellUnion" in which:
        out["cellUnion"] = "pass" if cell_union_check(system, J).passed else "fail"
    if "maxCellIdeal" in which:
        try:
            i1 = max_cell_ideal(system, J)
            out["maxCellIdeal"] = [system.word_str(w) for w in i1.members]
        except AssertionError as exc:
            out["maxCellIdeal"] = f"fail: {exc}"
    return out
