"""
W-graphs from W-graph ideals.

Given an ideal with its set J, :func:`kl_recursion` fills the table of
polynomials ``q_{y,w}`` relating the standard basis to the bar-invariant
basis (``b_w = c_w + q * sum_{y<w} q_{y,w} c_y``), one length stratum at a
time.  The constant terms give the edge weights of the W-graph; the
tau-invariant of ``c_w`` is the descent set ``SD(w) | WD(w)``.

:func:`verify_ideal` goes back the other way: from the W-graph action it
recovers ``T_s b_w`` on the standard basis and checks each case, including
that the weak-ascent coefficients ``r^s_{y,w}`` are divisible by ``q``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable, Hashable, Iterable

from . import hecke
from .coxeter import CoxeterSystem
from .ideals import Ideal, SA, SD, WA, WD
from .laurent import LaurentPoly, ONE, Q, QINV, Q_MINUS_QINV, ZERO

__all__ = ["NotWGraphIdeal", "QTable", "WGraph", "Report", "IdealVerification",
           "kl_recursion", "invert_q_to_p", "build_wgraph", "wgraph_of_ideal",
           "module_matrices", "verify_wgraph", "verify_ideal", "audit_descent_choice",
           "regular_wgraph"]


class NotWGraphIdeal(ValueError):
    """A certificate failed while building or verifying a W-graph ideal."""


@dataclass
class QTable:
    """Sparse ``q_{y,w}``, ``p_{y,w}`` and ``mu_{y,w}`` for Bruhat pairs ``y < w``.

    Only nonzero entries are stored; lookups of anything else give zero.
    ``p`` is None until :func:`invert_q_to_p` has run.
    """
    ideal: Ideal
    q: dict[tuple[int, int], LaurentPoly]
    mu: dict[tuple[int, int], int]
    p: dict[tuple[int, int], LaurentPoly] | None = None

    def q_of(self, y: int, w: int) -> LaurentPoly:
        return self.q.get((y, w), ZERO)

    def p_of(self, y: int, w: int) -> LaurentPoly:
        if self.p is None:
            raise ValueError("p-table not computed; call invert_q_to_p first")
        return self.p.get((y, w), ZERO)

    def mu_of(self, y: int, w: int) -> int:
        return self.mu.get((y, w), 0)


def _first_descent(descents: Iterable[int]) -> int:
    return min(descents)


def kl_recursion(ideal: Ideal, choose: Callable[[frozenset[int], int], int] | None = None,
                 with_p: bool = True) -> QTable:
    """Compute ``q_{y,w}`` for all Bruhat pairs in the ideal.

    ``choose(descents, z)`` picks the generator ``s`` with ``z = s*w`` used to
    reach ``z``; the default is the least left descent.
    """
    W = ideal.system
    members = ideal.members
    qtab: dict[tuple[int, int], LaurentPoly] = {}
    mu: dict[tuple[int, int], int] = {}
    mu_up: dict[int, dict[int, int]] = {y: {} for y in members}
    member_set = ideal.member_set

    for z in members:
        if z == 0:
            continue
        desc = W.left_descents(z)
        s = choose(desc, z) if choose else min(desc)
        if s not in desc:
            raise ValueError("descent choice must be a left descent")
        w = W.left_mul(s, z)
        lower_w = W.bruhat_lower(w)
        for y in sorted(W.bruhat_lower(z) & member_set):
            if y == z:
                continue
            if y == w:
                val = ONE
            else:
                cls = ideal.classify(y, s)
                qyw = qtab.get((y, w), ZERO) if y in lower_w else ZERO
                if cls is SA or cls is WA:
                    val = qyw.shift(1)
                else:
                    val = ZERO
                    if qyw:
                        c = qyw.constant_term()
                        val = -(qyw - c).shift(-1)
                    if cls is SD:
                        val = val + qtab.get((W.left_mul(s, y), w), ZERO)
                    for x, m in mu_up[y].items():
                        if x != w and x in lower_w and not ideal.classify(x, s).is_descent:
                            qxw = qtab.get((x, w))
                            if qxw is not None:
                                val = val + qxw * m
            if not val:
                continue
            if not val.is_polynomial():
                raise NotWGraphIdeal(f"ideal is not a W-graph ideal: q_{{{y},{z}}} = {val}")
            qtab[(y, z)] = val
            c = val.constant_term()
            if c:
                mu[(y, z)] = c
                mu_up[y][z] = c
    table = QTable(ideal, qtab, mu)
    return invert_q_to_p(table) if with_p else table


def invert_q_to_p(qt: QTable) -> QTable:
    """Fill ``p_{y,w} = q_{y,w} - sum_{y<x<w} q * p_{y,x} * q_{x,w}``."""
    W = qt.ideal.system
    members = qt.ideal.members
    # q entries grouped by the upper index, for the sum over x
    q_into: dict[int, list[tuple[int, LaurentPoly]]] = {w: [] for w in members}
    for (x, w), v in qt.q.items():
        q_into[w].append((x, v))
    p: dict[tuple[int, int], LaurentPoly] = {}
    p_from: dict[int, dict[int, LaurentPoly]] = {y: {} for y in members}
    for w in members:
        for y in sorted(W.bruhat_lower(w) & qt.ideal.member_set):
            if y == w:
                continue
            val = qt.q.get((y, w), ZERO)
            py = p_from[y]
            for x, qxw in q_into[w]:
                if x != y:
                    pyx = py.get(x)
                    if pyx is not None:
                        val = val - (pyx * qxw).shift(1)
            if val:
                p[(y, w)] = val
                py[w] = val
    return replace(qt, p=p)


def audit_descent_choice(ideal: Ideal) -> bool:
    """Recompute with the greatest descent and with an alternating choice."""
    base = kl_recursion(ideal, with_p=False)
    others = [
        kl_recursion(ideal, choose=lambda d, z: max(d), with_p=False),
        kl_recursion(ideal, choose=lambda d, z: sorted(d)[z % len(d)], with_p=False),
    ]
    return all(o.q == base.q for o in others)


# -- W-graphs -----------------------------------------------------------------

@dataclass(eq=False)
class WGraph:
    """Vertices with tau-invariants and integer weights ``mu[(u, v)]``.

    ``mu`` holds nonzero weights only, keyed by ordered pairs; graphs built
    from ideals are symmetric.  ``vertices`` fixes the canonical order.
    """
    system: CoxeterSystem
    vertices: tuple[Hashable, ...]
    tau: dict[Hashable, frozenset[int]]
    mu: dict[tuple[Hashable, Hashable], int]
    j: frozenset[int] = frozenset()
    ideal: Ideal | None = None
    qtable: QTable | None = None
    labels: dict[Hashable, object] = field(default_factory=dict)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WGraph):
            return NotImplemented
        return (self.vertices == other.vertices and self.tau == other.tau
                and self.mu == other.mu and self.j == other.j
                and self.system.coxeter_matrix == other.system.coxeter_matrix)

    def __len__(self) -> int:
        return len(self.vertices)

    def weight(self, u, v) -> int:
        return self.mu.get((u, v), 0)

    def edges(self) -> list[tuple[Hashable, Hashable, int]]:
        pos = {v: i for i, v in enumerate(self.vertices)}
        return sorted(((u, v, m) for (u, v), m in self.mu.items()),
                      key=lambda e: (pos[e[0]], pos[e[1]]))

    def induced(self, keep: Iterable[Hashable]) -> WGraph:
        """Full subgraph on ``keep``, tau and mu inherited."""
        keep = set(keep)
        verts = tuple(v for v in self.vertices if v in keep)
        return WGraph(self.system, verts, {v: self.tau[v] for v in verts},
                      {(u, v): m for (u, v), m in self.mu.items() if u in keep and v in keep},
                      self.j, labels={v: self.labels[v] for v in verts if v in self.labels})

    def relabel(self, f: Callable[[Hashable], Hashable], order: Iterable[Hashable] | None = None) -> WGraph:
        verts = tuple(f(v) for v in self.vertices)
        if order is not None:
            verts = tuple(order)
        return WGraph(self.system, verts, {f(v): t for v, t in self.tau.items()},
                      {(f(u), f(v)): m for (u, v), m in self.mu.items()}, self.j)


def build_wgraph(ideal: Ideal, qt: QTable) -> WGraph:
    """tau from the ideal's descents, mu symmetric from the constant terms."""
    mu: dict[tuple[int, int], int] = {}
    for (y, w), m in qt.mu.items():
        mu[(y, w)] = m
        mu[(w, y)] = m
    tau = {w: ideal.descents(w) for w in ideal.members}
    return WGraph(ideal.system, ideal.members, tau, mu, ideal.j, ideal, qt)


def wgraph_of_ideal(ideal: Ideal) -> WGraph:
    return build_wgraph(ideal, kl_recursion(ideal))


def regular_wgraph(system: CoxeterSystem) -> WGraph:
    """The Kazhdan-Lusztig W-graph of the regular module, cached on the system."""
    hit = system.cache.get("regular_wgraph")
    if hit is None:
        from .ideals import full_ideal
        hit = wgraph_of_ideal(full_ideal(system))
        system.cache["regular_wgraph"] = hit
    return hit


Matrix = dict  # column vertex -> {row vertex: LaurentPoly}


def module_matrices(g: WGraph) -> dict[int, Matrix]:
    """Matrix of each ``T_s`` on the vertex basis, column by column."""
    incoming: dict[Hashable, list[tuple[Hashable, int]]] = {v: [] for v in g.vertices}
    for (u, v), m in g.mu.items():
        incoming[v].append((u, m))
    mats = {}
    for s in range(g.system.rank):
        cols: Matrix = {}
        for v in g.vertices:
            if s in g.tau[v]:
                cols[v] = {v: -QINV}
            else:
                col = {v: Q}
                for u, m in incoming[v]:
                    if s in g.tau[u]:
                        col[u] = col.get(u, ZERO) + m
                cols[v] = {u: a for u, a in col.items() if a}
        mats[s] = cols
    return mats


def _apply(mat: Matrix, vec: dict) -> dict:
    out: dict = {}
    for v, a in vec.items():
        for u, c in mat[v].items():
            x = out.get(u)
            x = a * c if x is None else x + a * c
            if x:
                out[u] = x
            else:
                out.pop(u)
    return out


@dataclass
class Report:
    """Verdict plus the first failure found by each named check."""
    passed: bool = True
    checks: dict[str, bool] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    def record(self, name: str, ok: bool, detail: str | None = None) -> None:
        self.checks[name] = self.checks.get(name, True) and ok
        if not ok:
            self.passed = False
            if detail:
                self.failures.append(f"{name}: {detail}")

    def merge(self, other: Report, prefix: str = "") -> None:
        for k, v in other.checks.items():
            self.record(prefix + k, v)
        self.failures.extend(prefix + f for f in other.failures)
        self.passed = self.passed and other.passed

    def as_dict(self) -> dict:
        return {"passed": self.passed, "checks": dict(sorted(self.checks.items())),
                "failures": list(self.failures)}


def verify_wgraph(g: WGraph, mats: dict[int, Matrix] | None = None) -> Report:
    """Check the quadratic and braid relations as exact matrix identities."""
    W = g.system
    mats = mats or module_matrices(g)
    rep = Report()
    for s in range(W.rank):
        bad = None
        for v in g.vertices:
            mv = mats[s][v]
            lhs = _apply(mats[s], mv)
            rhs = {u: a * Q_MINUS_QINV for u, a in mv.items()}
            rhs[v] = rhs.get(v, ZERO) + ONE
            rhs = {u: a for u, a in rhs.items() if a}
            if lhs != rhs:
                bad = v
                break
        rep.record("quadratic", bad is None,
                   None if bad is None else f"T_{s + 1}^2 fails on vertex {bad!r}")
    for s in range(W.rank):
        for t in range(s + 1, W.rank):
            m = W.coxeter_order(s, t)
            bad = None
            for v in g.vertices:
                x, y = {v: ONE}, {v: ONE}
                for k in range(m):
                    x = _apply(mats[(s, t)[k % 2]], x)
                    y = _apply(mats[(t, s)[k % 2]], y)
                if x != y:
                    diff = sorted(set(x) | set(y), key=repr)
                    row = next(u for u in diff if x.get(u, ZERO) != y.get(u, ZERO))
                    bad = (v, row)
                    break
            rep.record("braid", bad is None, None if bad is None else
                       f"generators ({s + 1},{t + 1}) differ at column {bad[0]!r}, row {bad[1]!r}")
    return rep


# -- verification of the ideal module ----------------------------------------------

@dataclass
class IdealVerification:
    qtable: QTable
    rtable: dict[tuple[int, int, int], LaurentPoly]
    report: Report
    wgraph: WGraph


def b_action(ideal: Ideal, qt: QTable, g: WGraph,
             mats: dict[int, Matrix] | None = None) -> dict[tuple[int, int], dict[int, LaurentPoly]]:
    """``T_s b_w`` in the b-basis, recovered from the W-graph action."""
    mats = mats or module_matrices(g)
    members = ideal.members
    b_in_c = {w: {w: ONE} for w in members}
    for (y, w), v in qt.q.items():
        b_in_c[w][y] = v.shift(1)
    c_in_b = {w: {w: ONE} for w in members}
    for (y, w), v in qt.p.items():
        c_in_b[w][y] = -v.shift(1)
    out = {}
    for s in range(ideal.system.rank):
        for w in members:
            tc = _apply(mats[s], b_in_c[w])
            out[(s, w)] = _apply(c_in_b, tc)
    return out


def verify_ideal(ideal: Ideal, qt: QTable | None = None, check_braid: bool = True) -> IdealVerification:
    """Run the recursion, build the graph, and check every case of the b-action.

    Raises :class:`NotWGraphIdeal` with a witness if a weak-ascent coefficient
    falls outside qZ[q] or any other case has the wrong shape.
    """
    W = ideal.system
    qt = qt or kl_recursion(ideal)
    if qt.p is None:
        qt = invert_q_to_p(qt)
    g = build_wgraph(ideal, qt)
    mats = module_matrices(g)
    rep = verify_wgraph(g, mats) if check_braid else Report()
    action = b_action(ideal, qt, g, mats)
    rtable: dict[tuple[int, int, int], LaurentPoly] = {}
    for (s, w), vec in action.items():
        cls = ideal.classify(w, s)
        sw = W.left_mul(s, w)
        if cls is SA:
            expected = {sw: ONE}
        elif cls is SD:
            expected = {sw: ONE, w: Q_MINUS_QINV}
        elif cls is WD:
            expected = {w: -QINV}
        else:
            expected = None
        if expected is not None:
            ok = vec == expected
            rep.record(f"case_{cls.value}", ok,
                       None if ok else f"T_{s + 1} b_{w} = {_fmt(vec)}, expected {_fmt(expected)}")
            if not ok:
                raise NotWGraphIdeal(f"not a W-graph ideal: {rep.failures[-1]}")
            continue
        for y in sorted(set(vec) | {w}):
            r = (Q if y == w else ZERO) - vec.get(y, ZERO)
            if not r:
                continue
            if not r.is_in_qAplus() or y not in ideal or not W.bruhat_lt(y, sw):
                rep.record("divisibility", False,
                           f"w={w}, s={s + 1}, y={y}: r = {r}")
                raise NotWGraphIdeal(f"not a W-graph ideal: witness (w={w}, s={s + 1}, y={y}, r={r})")
            rtable[(s, y, w)] = r
        rep.record("divisibility", True)
    if hecke.oracle_applicable(ideal):
        bars = hecke.bar_on_basis(ideal)
        c_in_b = {w: {w: ONE} for w in ideal.members}
        for (y, w), v in qt.p.items():
            c_in_b[w][y] = -v.shift(1)
        bad = next((w for w in ideal.members
                    if hecke.bar_vector(bars, c_in_b[w]) != c_in_b[w]), None)
        rep.record("bar_invariance", bad is None,
                   None if bad is None else f"c_{bad} is not bar-invariant")
    if not rep.passed:
        raise NotWGraphIdeal("not a W-graph ideal: " + "; ".join(rep.failures))
    return IdealVerification(qt, rtable, rep, g)


def _fmt(vec: dict) -> str:
    return "{" + ", ".join(f"{k}: {v}" for k, v in sorted(vec.items())) + "}"
