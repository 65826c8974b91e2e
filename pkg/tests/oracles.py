"""Independent reference computations used only by the tests."""

from __future__ import annotations

import itertools


def compose(x, y):
    """(x o y)(k) = x(y(k)) on one-line tuples with values 1..n."""
    return tuple(x[y[k] - 1] for k in range(len(y)))


def transposition(n, i):
    """s_i = (i+1, i+2) for a 0-based generator index."""
    p = list(range(1, n + 1))
    p[i], p[i + 1] = p[i + 1], p[i]
    return tuple(p)


def perm_of_word(n, word):
    # left to right product s_{a1} s_{a2} ... s_{ak}
    p = tuple(range(1, n + 1))
    for i in word:
        p = compose(p, transposition(n, i))
    return p


def inversions(p):
    return sum(1 for a, b in itertools.combinations(range(len(p)), 2) if p[a] > p[b])


def bruhat_leq_perm(x, w):
    """Ehresmann tableau criterion: sorted prefixes of x are dominated by those of w."""
    n = len(x)
    for k in range(1, n):
        a = sorted(x[:k])
        b = sorted(w[:k])
        if any(u > v for u, v in zip(a, b)):
            return False
    return True


def subword_products(system, word):
    """Every product of a subword; equals the Bruhat interval below a reduced word."""
    out = {0}
    for s in reversed(word):
        out |= {system.left_mul(s, x) for x in out}
    return out


# -- classical Kazhdan-Lusztig polynomials, integer coefficient lists in u = q^2

def _padd(a, b, shift=0, scale=1):
    out = list(a)
    need = len(b) + shift
    if len(out) < need:
        out += [0] * (need - len(out))
    for i, c in enumerate(b):
        out[i + shift] += scale * c
    while out and out[-1] == 0:
        out.pop()
    return out


def classical_kl(system):
    """P_{x,w} by the standard recursion on a left descent; dict (x, w) -> coefficient list."""
    W = system
    P = {}
    mu = {}
    order = sorted(range(W.size), key=W.length)
    for w in order:
        P[(w, w)] = [1]
        if w == 0:
            continue
        s = min(W.left_descents(w))
        v = W.left_mul(s, w)
        lw = W.length(w)
        below = [z for z in order if W.length(z) < lw and W.bruhat_leq(z, w)]
        for x in below:
            sx = W.left_mul(s, x)
            c = 1 if W.length(sx) < W.length(x) else 0
            # P_{x,w} = u^{1-c} P_{sx,v} + u^c P_{x,v} - sum_z mu(z,v) u^{(l(w)-l(z))/2} P_{x,z}
            acc = _padd([], P.get((sx, v), []), 1 - c)
            acc = _padd(acc, P.get((x, v), []), c)
            for z in below:
                if W.length(W.left_mul(s, z)) > W.length(z):
                    continue
                m = mu.get((z, v), 0)
                if m and (x, z) in P:
                    acc = _padd(acc, P[(x, z)], (lw - W.length(z)) // 2, -m)
            if acc:
                P[(x, w)] = acc
        for x in below:
            d = lw - W.length(x)
            coeffs = P.get((x, w), [])
            if d % 2 == 1 and len(coeffs) > (d - 1) // 2:
                mu[(x, w)] = coeffs[(d - 1) // 2]
    return P
