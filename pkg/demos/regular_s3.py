# Kazhdan-Lusztig data for S3 built from the whole group as an ideal.
from wgideal import build_system, full_ideal, kl_recursion, wgraph_of_ideal, cells
from wgideal.hecke import canonical_basis_oracle

W = build_system("A2")
ideal = full_ideal(W)
qt = kl_recursion(ideal)

# q and p for every Bruhat pair y < w
for (y, w), v in sorted(qt.q.items()):
    print(f"{W.word_str(y):>6} < {W.word_str(w):<6} q = {str(v):<6} p = {qt.p_of(y, w)}")

# brute force bar-invariant basis, same numbers
print("oracle agrees:", canonical_basis_oracle(ideal) == qt.q)

g = wgraph_of_ideal(ideal)
for v in g.vertices:
    print(W.word_str(v), "tau =", sorted(s + 1 for s in g.tau[v]))

dec = cells(g)
print("left cells:", [[W.word_str(v) for v in c] for c in dec.cells])
print("order (i below j):", sorted(dec.order))
