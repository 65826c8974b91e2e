"""
JSON and DOT forms of W-graphs, ideals and cell decompositions.

Generator indices are 1-based in every external format and 0-based inside
the package; the conversion happens here and nowhere else.  Vertex ids are
positions in the canonical vertex order.  JSON text is always written with
sorted keys so equal objects print byte-identically.
"""

from __future__ import annotations

import json
from typing import Any

import networkx as nx

from .cells import CellDecomposition
from .coxeter import CoxeterSystem, cached_system
from .ideals import Ideal, ideal_from_generators
from .wgraph import WGraph

__all__ = ["dumps", "word_out", "word_in", "gens_out", "gens_in",
           "wgraph_to_json", "wgraph_from_json", "ideal_to_json", "ideal_from_json",
           "cells_to_json", "cells_from_json", "wgraph_to_dot", "cells_to_dot",
           "wgraph_to_text", "cells_to_text"]


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def gens_out(J) -> list[int]:
    return sorted(s + 1 for s in J)


def gens_in(J) -> frozenset[int]:
    return frozenset(int(s) - 1 for s in J)


def word_out(system: CoxeterSystem, w) -> list[int]:
    return [s + 1 for s in system.word(w)]


def word_in(system: CoxeterSystem, word) -> int:
    return system.from_word(int(s) - 1 for s in word)


def _tableau_cls():
    from .typea import Tableau
    return Tableau


# -- W-graphs ----------------------------------------------------------------

def wgraph_to_json(g: WGraph) -> dict:
    W = g.system
    pos = {v: k for k, v in enumerate(g.vertices)}
    Tableau = _tableau_cls()
    verts = []
    for v in g.vertices:
        entry = {"id": pos[v], "word": word_out(W, v), "tau": gens_out(g.tau[v])}
        lab = g.labels.get(v)
        if isinstance(lab, Tableau):
            entry["tableau"] = lab.to_json()
        verts.append(entry)
    edges = [{"u": pos[u], "v": pos[v], "mu": m} for u, v, m in g.edges()]
    return {"group": W.descriptor, "j": gens_out(g.j), "vertices": verts, "edges": edges}


def wgraph_from_json(data: dict | str, system: CoxeterSystem | None = None) -> WGraph:
    """Rebuild a graph whose vertices are group elements (given by their words)."""
    if isinstance(data, str):
        data = json.loads(data)
    W = system or cached_system(data["group"])
    Tableau = _tableau_cls()
    verts, tau, labels = [], {}, {}
    for entry in sorted(data["vertices"], key=lambda e: e["id"]):
        w = word_in(W, entry["word"])
        verts.append(w)
        tau[w] = gens_in(entry["tau"])
        if "tableau" in entry:
            labels[w] = Tableau(tuple(tuple(r) for r in entry["tableau"]))
    mu = {(verts[e["u"]], verts[e["v"]]): int(e["mu"]) for e in data["edges"]}
    return WGraph(W, tuple(verts), tau, mu, gens_in(data["j"]), labels=labels)


def _tau_label(tau) -> str:
    return "{" + ",".join(map(str, gens_out(tau))) + "}"


def wgraph_to_dot(g: WGraph, name: str = "W") -> str:
    """Undirected when mu is symmetric; tau-sets label vertices, mu labels edges."""
    W = g.system
    pos = {v: k for k, v in enumerate(g.vertices)}
    sym = all(g.mu.get((v, u)) == m for (u, v), m in g.mu.items())
    Tableau = _tableau_cls()
    lines = [f'{"graph" if sym else "digraph"} "{name}" {{']
    for v in g.vertices:
        lab = g.labels.get(v)
        head = str(lab) if isinstance(lab, Tableau) else W.word_str(v)
        lines.append(f'  {pos[v]} [label="{head}\\n{_tau_label(g.tau[v])}"];')
    arrow = "--" if sym else "->"
    for u, v, m in g.edges():
        if sym and pos[u] > pos[v]:
            continue
        lines.append(f'  {pos[u]} {arrow} {pos[v]} [label="{m}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def wgraph_to_text(g: WGraph) -> str:
    W = g.system
    Tableau = _tableau_cls()
    out = [f"group {W.descriptor}  J={gens_out(g.j)}  vertices={len(g.vertices)}"]
    pos = {v: k for k, v in enumerate(g.vertices)}
    for v in g.vertices:
        lab = g.labels.get(v)
        name = str(lab) if isinstance(lab, Tableau) else W.word_str(v)
        nbrs = " ".join(f"{pos[u]}:{m}" for (a, u), m in sorted(g.mu.items(), key=lambda e: pos[e[0][1]])
                        if a == v)
        out.append(f"{pos[v]:>4}  {name:<16} tau={_tau_label(g.tau[v]):<10} mu {nbrs}".rstrip())
    return "\n".join(out) + "\n"


# -- ideals -------------------------------------------------------------------

def ideal_to_json(ideal: Ideal) -> dict:
    W = ideal.system
    return {"generators": [word_out(W, w) for w in ideal.generators],
            "j": gens_out(ideal.j),
            "members": [word_out(W, w) for w in ideal.members]}


def ideal_from_json(data: dict | str, system: CoxeterSystem) -> Ideal:
    if isinstance(data, str):
        data = json.loads(data)
    ideal = ideal_from_generators(system, [word_in(system, wd) for wd in data["generators"]],
                                  gens_in(data["j"]))
    members = [word_in(system, wd) for wd in data.get("members", ())]
    if members and sorted(members) != list(ideal.members):
        raise ValueError("members do not match the ideal generated by the generators")
    return ideal


# -- cells --------------------------------------------------------------------

def cells_to_json(dec: CellDecomposition) -> dict:
    pos = {v: k for k, v in enumerate(dec.graph.vertices)}
    return {"cells": [[pos[v] for v in c] for c in dec.cells],
            "order": [list(p) for p in sorted(dec.order)]}


def cells_from_json(data: dict | str, g: WGraph) -> CellDecomposition:
    """Attach a stored decomposition to its graph (vertex ids are positions)."""
    if isinstance(data, str):
        data = json.loads(data)
    cl = [tuple(g.vertices[k] for k in c) for c in data["cells"]]
    order = {(int(i), int(j)) for i, j in data["order"]}
    cond = nx.DiGraph()
    cond.add_nodes_from(range(len(cl)))
    cond.add_edges_from((j, i) for i, j in order)
    cell_of = {v: i for i, c in enumerate(cl) for v in c}
    return CellDecomposition(g, cl, cell_of, order, cond)


def cells_to_dot(dec: CellDecomposition, name: str = "cells") -> str:
    """Hasse diagram of the cell order, arcs pointing from larger to smaller cells."""
    W = dec.graph.system
    lines = [f'digraph "{name}" {{']
    for i, c in enumerate(dec.cells):
        members = " ".join(W.word_str(v) for v in c)
        lines.append(f'  c{i} [label="{i}: {members}"];')
    for i, j in sorted(dec.order):
        if any((i, k) in dec.order and (k, j) in dec.order for k in range(len(dec.cells))):
            continue
        lines.append(f"  c{j} -> c{i};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cells_to_text(dec: CellDecomposition) -> str:
    W = dec.graph.system
    out = []
    for i, c in enumerate(dec.cells):
        below = [a for a, b in sorted(dec.order) if b == i]
        out.append(f"{i:>3}  [{', '.join(W.word_str(v) for v in c)}]  above {below}")
    return "\n".join(out) + "\n"
