# The module induced from the sign-like character of a parabolic subgroup of B3.
from wgideal import build_system, regular_wgraph
from wgideal.parabolic import parabolic_wgraph, run_checks, max_cell_ideal

W = build_system("B3")
J = {0, 2}  # s1 and s3, 0-based here
model, g = parabolic_wgraph(W, J)
print(f"|D_J| = {len(model.dj)}, w_J = {W.word_str(model.wj)}")

# p^J against the regular table after right multiplication by w_J
reg = regular_wgraph(W).qtable
shown = 0
for (y, w), p in sorted(model.qtable.p.items()):
    if p.min_degree() > 0 and shown < 5:
        print(W.word_str(y), W.word_str(w), "p^J =", p,
              " regular:", reg.p_of(model.embedding[y], model.embedding[w]))
        shown += 1

print(run_checks(W, J))
print("maximal cell ideal:", [W.word_str(w) for w in max_cell_ideal(W, J).members])

# every J at once
for k in range(8):
    J = {i for i in range(3) if k >> i & 1}
    rep = run_checks(W, J, ("deodhar", "descents", "cellUnion"))
    print(sorted(s + 1 for s in J), rep)
