"""
Type A: partitions, tableaux, Robinson-Schensted and Specht-module W-graphs.

The group of type ``A_{n-1}`` is identified with the symmetric group on
``1..n`` by sending generator ``i`` (0-based) to the transposition
``(i+1, i+2)``.  Permutations act on the left, ``(xy)(k) = x(y(k))``, and are
written in one-line form ``(w(1), ..., w(n))``.  A permutation acts on a
tableau by replacing each entry ``k`` with ``w(k)``.

For a partition ``lam`` the Specht W-graph comes from the ideal generated by
the permutation ``v`` carrying the column-filled tableau to the row-filled
one, taken relative to the column stabilizer ``J`` of the column-filled
tableau.  Its vertices are the standard tableaux ``w * column_tableau``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator, NamedTuple, Sequence

from .cells import extract_subideal
from .coxeter import CoxeterSystem, cached_system
from .ideals import Ideal, SA, SD, WD, EdgeClass, ideal_from_generators
from .laurent import LaurentPoly, ONE, Q, QINV, Q_MINUS_QINV
from .parabolic import _regular, parabolic_wgraph
from .wgraph import Report, WGraph, kl_recursion, verify_ideal, build_wgraph

__all__ = [
    "Tableau", "partitions", "validate_partition", "conjugate", "hook_length",
    "symmetric_group", "permutation", "element_of", "row_tableau", "column_tableau",
    "special_tableaux", "std_enumerate", "std_backtrack", "ideal_lambda", "rs",
    "rstlambda_check", "SpechtModule", "specht_wgraph", "specht_basis_action",
    "same_shape_cell_check",
]

Partition = tuple[int, ...]


def validate_partition(lam: Iterable[int]) -> Partition:
    lam = tuple(int(x) for x in lam)
    if any(x < 1 for x in lam):
        raise ValueError(f"partition parts must be positive: {lam}")
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"partition must be weakly decreasing: {lam}")
    return lam


def partitions(n: int, largest: int | None = None) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order."""
    if n == 0:
        yield ()
        return
    largest = n if largest is None else largest
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def conjugate(lam: Sequence[int]) -> Partition:
    return tuple(sum(1 for x in lam if x >= i) for i in range(1, (lam[0] if lam else 0) + 1))


def hook_length(lam: Sequence[int]) -> int:
    """Number of standard tableaux of shape ``lam`` by the hook length formula."""
    lam = validate_partition(lam)
    conj = conjugate(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return math.factorial(sum(lam)) // hooks


@dataclass(frozen=True)
class Tableau:
    """A bijective filling of a Young diagram with ``1..n``, stored by rows."""
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        validate_partition(len(r) for r in self.rows)
        entries = sorted(x for r in self.rows for x in r)
        if entries != list(range(1, len(entries) + 1)):
            raise ValueError("tableau entries must be exactly 1..n")

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def n(self) -> int:
        return sum(self.shape)

    def position(self, k: int) -> tuple[int, int]:
        for i, r in enumerate(self.rows):
            if k in r:
                return i, r.index(k)
        raise KeyError(k)

    def act(self, perm: Sequence[int]) -> Tableau:
        """``(w t)(box) = w(t(box))`` for a one-line permutation ``w``."""
        return Tableau(tuple(tuple(perm[x - 1] for x in r) for r in self.rows))

    def transpose(self) -> Tableau:
        conj = conjugate(self.shape)
        return Tableau(tuple(tuple(self.rows[i][j] for i in range(conj[j])) for j in range(len(conj))))

    def is_row_standard(self) -> bool:
        return all(a < b for r in self.rows for a, b in zip(r, r[1:]))

    def is_column_standard(self) -> bool:
        return all(self.rows[i][j] < self.rows[i + 1][j]
                   for i in range(len(self.rows) - 1) for j in range(len(self.rows[i + 1])))

    def is_standard(self) -> bool:
        return self.is_row_standard() and self.is_column_standard()

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __str__(self) -> str:
        return "/".join(",".join(map(str, r)) for r in self.rows)


def row_tableau(lam: Sequence[int]) -> Tableau:
    """Entries ``1..n`` filled row by row."""
    lam = validate_partition(lam)
    rows, k = [], 1
    for part in lam:
        rows.append(tuple(range(k, k + part)))
        k += part
    return Tableau(tuple(rows))


def column_tableau(lam: Sequence[int]) -> Tableau:
    """Entries ``1..n`` filled column by column: transpose of the conjugate's row tableau."""
    return row_tableau(conjugate(validate_partition(lam))).transpose()


# -- the symmetric group as a Coxeter system ---------------------------------------

def symmetric_group(n: int) -> CoxeterSystem:
    return cached_system(f"A{n - 1}")


def _perms(system: CoxeterSystem) -> tuple[list[tuple[int, ...]], dict[tuple[int, ...], int]]:
    hit = system.cache.get("perms")
    if hit is None:
        n = system.rank + 1
        perms: list = [None] * system.size
        perms[0] = tuple(range(1, n + 1))
        for w in range(1, system.size):
            i = system.word(w)[0]
            rest = perms[system.left_mul(i, w)]
            # s_i o rest swaps the values i+1 and i+2
            perms[w] = tuple(i + 2 if x == i + 1 else i + 1 if x == i + 2 else x for x in rest)
        hit = (perms, {p: w for w, p in enumerate(perms)})
        system.cache["perms"] = hit
    return hit


def permutation(system: CoxeterSystem, w) -> tuple[int, ...]:
    return _perms(system)[0][int(w)]


def element_of(system: CoxeterSystem, perm: Sequence[int]) -> int:
    return _perms(system)[1][tuple(perm)]


class SpecialTableaux(NamedTuple):
    row_tableau: Tableau
    column_tableau: Tableau
    j: frozenset[int]
    v: int


def special_tableaux(lam: Sequence[int], system: CoxeterSystem | None = None) -> SpecialTableaux:
    lam = validate_partition(lam)
    n = sum(lam)
    system = system or symmetric_group(n)
    if system.rank != n - 1:
        raise ValueError(f"rank mismatch: partition of {n} needs type A{n - 1}")
    up, low = row_tableau(lam), column_tableau(lam)
    J = frozenset(i for i in range(n - 1) if low.position(i + 1)[1] == low.position(i + 2)[1])
    v = [0] * n
    for r_up, r_low in zip(up.rows, low.rows):
        for a, b in zip(r_up, r_low):
            v[b - 1] = a
    return SpecialTableaux(up, low, J, element_of(system, v))


def ideal_lambda(lam: Sequence[int], system: CoxeterSystem | None = None) -> Ideal:
    lam = validate_partition(lam)
    system = system or symmetric_group(sum(lam))
    sp = special_tableaux(lam, system)
    return ideal_from_generators(system, [sp.v], sp.j)


def std_enumerate(lam: Sequence[int], system: CoxeterSystem | None = None) -> list[Tableau]:
    """Standard tableaux as ``w * column_tableau`` for ``w`` below ``v`` in weak order."""
    lam = validate_partition(lam)
    system = system or symmetric_group(sum(lam))
    low = column_tableau(lam)
    ideal = ideal_lambda(lam, system)
    out = [low.act(permutation(system, w)) for w in ideal.members]
    if not all(t.is_standard() for t in out):
        raise AssertionError("non-standard tableau in the weak-order ideal")
    return out


def std_backtrack(lam: Sequence[int]) -> list[Tableau]:
    """Standard tableaux by placing ``1..n`` one at a time on outer corners."""
    lam = validate_partition(lam)
    n = sum(lam)
    rows: list[list[int]] = [[] for _ in lam]
    out = []

    def fill(k: int) -> None:
        if k > n:
            out.append(Tableau(tuple(tuple(r) for r in rows)))
            return
        for i in range(len(lam)):
            if len(rows[i]) < lam[i] and (i == 0 or len(rows[i - 1]) > len(rows[i])):
                rows[i].append(k)
                fill(k + 1)
                rows[i].pop()

    fill(1)
    return out


def rs(perm: Sequence[int]) -> tuple[Tableau, Tableau]:
    """Row insertion of ``w(1), ..., w(n)``; returns (insertion, recording)."""
    P: list[list[int]] = []
    Q_: list[list[int]] = []
    for k, x in enumerate(perm, start=1):
        row = 0
        while True:
            if row == len(P):
                P.append([x])
                Q_.append([k])
                break
            r = P[row]
            bump = next((i for i, y in enumerate(r) if y > x), None)
            if bump is None:
                r.append(x)
                Q_[row].append(k)
                break
            r[bump], x = x, r[bump]
            row += 1
    return Tableau(tuple(map(tuple, P))), Tableau(tuple(map(tuple, Q_)))


def rstlambda_check(lam: Sequence[int], system: CoxeterSystem | None = None) -> Report:
    """``Q(w) = column_tableau`` iff ``w = v w_J`` with ``v`` in the ideal, and then ``P(w) = v * column_tableau``."""
    lam = validate_partition(lam)
    system = system or symmetric_group(sum(lam))
    sp = special_tableaux(lam, system)
    ideal = ideal_lambda(lam, system)
    wj = system.longest_element(sp.j)
    expected = {system.multiply(v, wj): v for v in ideal.members}
    rep = Report()
    for w in range(system.size):
        P, Qt = rs(permutation(system, w))
        hit = Qt == sp.column_tableau
        ok = hit == (w in expected)
        if ok and hit:
            ok = P == sp.column_tableau.act(permutation(system, expected[w]))
        rep.record("rstlambda", ok, None if ok else f"w={permutation(system, w)}")
    return rep


# -- Specht W-graphs --------------------------------------------------------------

@dataclass
class SpechtModule:
    partition: Partition
    system: CoxeterSystem = field(repr=False)
    ideal: Ideal = field(repr=False)
    graph: WGraph = field(repr=False)
    tableau_of: dict[int, Tableau] = field(repr=False)
    wj: int = 0

    def tableau_graph(self) -> WGraph:
        """The same graph with vertices relabeled by standard tableaux."""
        return self.graph.relabel(self.tableau_of.__getitem__)


def specht_wgraph(lam: Sequence[int], system: CoxeterSystem | None = None,
                  check: bool = True) -> SpechtModule:
    """W-graph of ``(I_lam, J_lam)``, optionally checked against the regular left cell."""
    lam = validate_partition(lam)
    system = system or symmetric_group(sum(lam))
    sp = special_tableaux(lam, system)
    ideal = ideal_lambda(lam, system)
    g = build_wgraph(ideal, kl_recursion(ideal))
    low = sp.column_tableau
    tab_of = {w: low.act(permutation(system, w)) for w in ideal.members}
    for w, t in tab_of.items():
        g.labels[w] = t
    wj = system.longest_element(sp.j)
    mod = SpechtModule(lam, system, ideal, g, tab_of, wj)
    if check:
        rep = specht_cell_isomorphism(mod)
        if not rep.passed:
            raise AssertionError("; ".join(rep.failures))
    return mod


def specht_cell_isomorphism(mod: SpechtModule) -> Report:
    """Compare with the regular-graph left cell containing ``w_J`` under ``w -> w w_J``."""
    system = mod.system
    reg, dec = _regular(system)
    cell = dec.cells[dec.cell_of[mod.wj]]
    emb = {w: system.multiply(w, mod.wj) for w in mod.ideal.members}
    rep = Report()
    same = set(emb.values()) == set(cell)
    rep.record("cell", same, None if same else "I_lam * w_J is not the left cell of w_J")
    if same:
        sub = reg.induced(cell)
        mapped = mod.graph.relabel(emb.__getitem__, order=sub.vertices)
        iso = mapped.tau == sub.tau and mapped.mu == sub.mu
        rep.record("isomorphism", iso, None if iso else "tau or mu differ from the left cell")
    return rep


@dataclass
class TableauAction:
    """``T_s b_t`` for one generator and one standard tableau.

    ``image`` is the full expansion in the tableau basis.  In the weak-ascent
    case ``r`` holds the ``r^{(s)}_{u,t}`` of ``T_s b_t = q b_t - sum_{u<t} r_{u,t} b_u``.
    """
    case: EdgeClass
    image: dict[Tableau, LaurentPoly]
    r: dict[Tableau, LaurentPoly] = field(default_factory=dict)


def specht_basis_action(lam: Sequence[int], system: CoxeterSystem | None = None
                        ) -> dict[tuple[int, Tableau], TableauAction]:
    """The action on ``(b_t)`` with ``b_{column_tableau}`` the image of ``b^J_1``.

    Weak-ascent coefficients come from the quotient of the ``D_J`` module by
    the cells outside ``I_lam``, and are cross-checked against the action
    recovered from the W-graph of ``I_lam`` directly.
    """
    lam = validate_partition(lam)
    system = system or symmetric_group(sum(lam))
    sp = special_tableaux(lam, system)
    ideal = ideal_lambda(lam, system)
    model, _ = parabolic_wgraph(system, sp.j)
    # D_J has no weak ascents, so its own r-table is empty
    ext = extract_subideal(model.ideal, model.qtable, ideal.restrict(ideal.members),
                           rtable0={})
    direct = verify_ideal(ideal, ext.qtable)
    if direct.rtable != ext.induced_r:
        raise AssertionError("extraction and direct recursion disagree on r-polynomials")
    low = sp.column_tableau
    tab = {w: low.act(permutation(system, w)) for w in ideal.members}
    out: dict[tuple[int, Tableau], TableauAction] = {}
    for w in ideal.members:
        t = tab[w]
        for s in range(system.rank):
            cls = ideal.classify(w, s)
            sw = system.left_mul(s, w)
            if cls is SA:
                act = TableauAction(cls, {tab[sw]: ONE})
            elif cls is SD:
                act = TableauAction(cls, {tab[sw]: ONE, t: Q_MINUS_QINV})
            elif cls is WD:
                act = TableauAction(cls, {t: -QINV})
            else:
                rs_ = {y: r for (s2, y, w2), r in ext.induced_r.items() if s2 == s and w2 == w}
                if w in rs_:
                    raise AssertionError(f"diagonal coefficient of T_{s + 1} b_t is not q")
                for y, r in rs_.items():
                    if not r.is_in_qAplus() or not system.bruhat_lt(y, w):
                        raise AssertionError(f"r^({s + 1})_{{u,t}} = {r} at u={tab[y]}, t={t}")
                image = {t: Q}
                image.update({tab[y]: -r for y, r in rs_.items()})
                act = TableauAction(cls, image, {tab[y]: r for y, r in rs_.items()})
            out[(s, t)] = act
    _check_generation(system, sp, ideal, tab, out)
    return out


def _check_generation(system, sp, ideal, tab, action) -> None:
    """``b_{w t_low} = T_w b_{t_low}`` and ``T_s b_{t_low} = -q^-1 b_{t_low}`` for s in J."""
    low = sp.column_tableau
    for s in sp.j:
        if action[(s, low)].image != {low: -QINV}:
            raise AssertionError(f"T_{s + 1} does not act by -q^-1 on b of the column tableau")
    for w in ideal.members:
        vec = {low: ONE}
        for s in reversed(system.word(w)):
            new: dict = {}
            for t, a in vec.items():
                for u, c in action[(s, t)].image.items():
                    new[u] = new.get(u, LaurentPoly()) + a * c
            vec = {u: a for u, a in new.items() if a}
        if vec != {tab[w]: ONE}:
            raise AssertionError(f"T_w b_low != b_(w t_low) for w={permutation(system, w)}")


def same_shape_cell_check(n: int) -> Report:
    """Left cells ``{w : Q(w) = t}`` of one shape are isomorphic W-graphs.

    The bijection between the cells of ``t`` and ``t'`` keeps the insertion
    tableau: ``w <-> w'`` with ``P(w) = P(w')``.
    """
    system = symmetric_group(n)
    reg, dec = _regular(system)
    by_pq = {}
    for w in range(system.size):
        P, Qt = rs(permutation(system, w))
        by_pq[(P, Qt)] = w
    rep = Report()
    cell_sets = {frozenset(c) for c in dec.cells}
    by_q: dict[Tableau, list[int]] = {}
    for (P, Qt), w in by_pq.items():
        by_q.setdefault(Qt, []).append(w)
    ok = {frozenset(v) for v in by_q.values()} == cell_sets
    rep.record("rs_cells", ok, None if ok else "cells differ from the RS partition by Q")
    for lam in partitions(n):
        tabs = std_backtrack(lam)
        base = tabs[0]
        for other in tabs[1:]:
            f = {by_pq[(P, base)]: by_pq[(P, other)] for P in tabs}
            src = reg.induced(f.keys())
            dst = reg.induced(f.values())
            mapped = src.relabel(f.__getitem__, order=dst.vertices)
            iso = mapped.tau == dst.tau and mapped.mu == dst.mu
            rep.record("same_shape", iso, None if iso else f"cells of {base} and {other} differ")
    return rep
