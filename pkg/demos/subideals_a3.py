# Cutting the regular W-graph of S4 along its cells.
from wgideal import build_system, full_ideal, verify_ideal, ideal_from_generators, NotWGraphIdeal
from wgideal.cells import cells, up_set_ideals, extract_subideal

W = build_system("A3")
ideal = full_ideal(W)
ver = verify_ideal(ideal)
g = ver.wgraph
dec = cells(g)
print(len(dec.cells), "cells, sizes", dec.sizes())

for i, c in enumerate(dec.cells):
    up, _ = up_set_ideals(g, i, dec)
    ext = extract_subideal(ideal, ver.qtable, up, ver.rtable)
    gens = [W.word_str(w) for w in up.generators]
    print(f"cell {i} {[W.word_str(v) for v in c]}: ideal on {gens}, {len(up)} elements, "
          f"{len(ext.induced_r)} weak-ascent polynomials")
    for (s, y, w), r in list(ext.induced_r.items())[:2]:
        print(f"    T{s + 1} b_{W.word_str(w)}: r at {W.word_str(y)} = {r}")

# not every ideal works: the recursion runs, the braid check objects
bad = ideal_from_generators(W, [W.from_word([1, 0])], {1})
try:
    verify_ideal(bad)
except NotWGraphIdeal as exc:
    print("rejected:", exc)
