"""
Brute-force canonical basis for the modules where the T-action is explicit.

When the ideal is the whole group (J empty) or a set ``D_J`` of minimal
coset representatives (relative to J), every generator acts on the standard
basis ``b_w`` by one of three closed formulas, with no unknown weak-ascent
polynomials.  On these modules the bar involution can be expanded directly
from ``bar(T_s) = T_s - (q - q^-1)`` and the bar-invariant basis found by
triangular correction.

Nothing here is shared with the recursion in :mod:`wgideal.wgraph`; the two
are compared entry by entry in the test suite.
"""

from __future__ import annotations

from .ideals import Ideal
from .laurent import LaurentPoly, ONE, QINV, Q_MINUS_QINV

__all__ = ["OracleNotApplicable", "NoCanonicalBasis", "t_action", "action_matrix",
           "bar_on_basis", "bar_vector", "canonical_basis_oracle", "oracle_applicable"]

Vector = dict  # element index -> LaurentPoly, no zero entries


class OracleNotApplicable(ValueError):
    """The T-action on the b-basis does not close for this ideal."""


class NoCanonicalBasis(ArithmeticError):
    """Triangular correction hit a coefficient that is not of the required form."""


def oracle_applicable(ideal: Ideal) -> bool:
    W = ideal.system
    for w in ideal.members:
        for s in range(W.rank):
            if s in W.left_descents(w) or W.left_mul(s, w) in ideal:
                continue
            if not W.conjugate_is_in(w, s, ideal.j):
                return False
    return True


def _require(ideal: Ideal) -> None:
    key = ("oracle_ok", ideal.members, ideal.j)
    cache = ideal.system.cache
    if key not in cache:
        cache[key] = oracle_applicable(ideal)
    if not cache[key]:
        raise OracleNotApplicable("oracle not applicable: the T-action does not close on this ideal")


def _add(v: Vector, k: int, a: LaurentPoly) -> None:
    if not a:
        return
    x = v.get(k)
    x = a if x is None else x + a
    if x:
        v[k] = x
    else:
        v.pop(k, None)


def _t_basis(ideal: Ideal, s: int, w: int) -> Vector:
    W = ideal.system
    sw = W.left_mul(s, w)
    if W.length(sw) < W.length(w):
        return {sw: ONE, w: Q_MINUS_QINV}
    if sw in ideal:
        return {sw: ONE}
    # outside the ideal, so w^-1 s w lies in J once the oracle is applicable
    return {w: -QINV}


def t_action(ideal: Ideal, s: int, v: Vector) -> Vector:
    """Apply ``T_s`` to a vector given in the b-basis."""
    _require(ideal)
    out: Vector = {}
    for w, a in v.items():
        for y, c in _t_basis(ideal, s, w).items():
            _add(out, y, a * c)
    return out


def action_matrix(ideal: Ideal, s: int) -> dict[int, Vector]:
    """Columns of ``T_s`` on the b-basis."""
    _require(ideal)
    return {w: _t_basis(ideal, s, w) for w in ideal.members}


def bar_on_basis(ideal: Ideal) -> dict[int, Vector]:
    """``bar(b_w) = bar(T_{s1}) ... bar(T_{sk}) b_1`` along the ShortLex word of w."""
    _require(ideal)
    W = ideal.system
    rows: dict[int, Vector] = {}
    for w in ideal.members:
        v: Vector = {0: ONE}
        for s in reversed(W.word(w)):
            tv = t_action(ideal, s, v)
            for y, a in v.items():
                _add(tv, y, -(Q_MINUS_QINV * a))
            v = tv
        rows[w] = v
    return rows


def bar_vector(bars: dict[int, Vector], v: Vector) -> Vector:
    """Semilinear extension of a bar matrix to an arbitrary vector."""
    out: Vector = {}
    for w, a in v.items():
        ab = a.bar()
        for y, c in bars[w].items():
            _add(out, y, ab * c)
    return out


def canonical_basis_oracle(ideal: Ideal, bars: dict[int, Vector] | None = None
                           ) -> dict[tuple[int, int], LaurentPoly]:
    """Nonzero ``q_{y,w}`` with ``b_w = c_w + q * sum_{y<w} q_{y,w} c_y``.

    For each w in increasing (length, ShortLex) order, ``bar(b_w) - b_w`` is
    rewritten in the already-known c-basis; its coefficient at ``c_y`` must be
    ``bar(a) - a`` for a unique ``a`` in qZ[q], and then ``q_{y,w} = a / q``.
    """
    W = ideal.system
    if bars is None:
        bars = bar_on_basis(ideal)
    table: dict[tuple[int, int], LaurentPoly] = {}
    below: dict[int, list[tuple[int, LaurentPoly]]] = {}
    for w in ideal.members:
        defect = dict(bars[w])
        _add(defect, w, -ONE)
        in_c: Vector = {}
        for y, a in defect.items():
            _add(in_c, y, a)
            for x, qxy in below.get(y, ()):
                _add(in_c, x, a * qxy.shift(1))
        col = []
        for y, d in sorted(in_c.items()):
            if y == w or not W.bruhat_leq(y, w):
                raise NoCanonicalBasis(f"no canonical basis: defect of b_{w} reaches c_{y}")
            if d.constant_term() or d.bar() != -d:
                raise NoCanonicalBasis(f"no canonical basis: coefficient {d} at (y={y}, w={w})")
            a = -d.positive_part()
            qyw = a.shift(-1)
            if not qyw.is_polynomial():
                raise NoCanonicalBasis(f"no canonical basis: q_{{{y},{w}}} = {qyw}")
            table[(y, w)] = qyw
            col.append((y, qyw))
        # q_{y,w} = 0 entries are absent; b_w = c_w + sum q*q_{y,w} c_y
        below[w] = col
    return table
