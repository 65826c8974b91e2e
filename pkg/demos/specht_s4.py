# Specht W-graphs for the partitions of 4, vertices labelled by standard tableaux.
from wgideal.typea import (partitions, specht_wgraph, specht_basis_action, hook_length,
                           special_tableaux)

for lam in partitions(4):
    mod = specht_wgraph(lam)  # also checks it against the regular left cell of w_J
    g = mod.tableau_graph()
    print(lam, "dim", len(g.vertices), "hook formula", hook_length(lam))
    for t in g.vertices:
        nbrs = [str(u) for (a, u), m in g.mu.items() if a == t]
        print("   ", t, "tau", sorted(s + 1 for s in g.tau[t]), "edges to", nbrs)

# action of the generators on the tableau basis for (3,1)
lam = (3, 1)
sp = special_tableaux(lam)
print("column tableau", sp.column_tableau, "row tableau", sp.row_tableau,
      "J =", sorted(s + 1 for s in sp.j))
for (s, t), a in sorted(specht_basis_action(lam).items(), key=lambda kv: (str(kv[0][1]), kv[0][0])):
    terms = " + ".join(f"({c}) b[{u}]" for u, c in a.image.items())
    print(f"T{s + 1} b[{t}] = {terms}   [{a.case.value}]")
