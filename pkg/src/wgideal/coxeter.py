"""
Finite Coxeter groups enumerated in full.

A :class:`CoxeterSystem` holds every element of a finite Coxeter group,
indexed ``0 .. |W|-1`` in ShortLex order (by length, then by the
lexicographically least reduced word), together with left and right Cayley
tables.  Generators are numbered ``0 .. rank-1`` internally.

Crystallographic groups are enumerated as the orbit of a regular point under
the integer reflection action given by a Cartan matrix; dihedral groups use
alternating-word normal forms, so any ``m`` is allowed there.

>>> W = build_system("A2")
>>> W.size, W.length(W.longest)
(6, 3)
>>> [W.word(w) for w in range(W.size)]
[(), (0,), (1,), (0, 1), (1, 0), (0, 1, 0)]
"""

from __future__ import annotations

import json
import math
import operator
import re
from collections import deque
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Callable, Hashable, Iterable, Sequence

import numpy as np

__all__ = [
    "CoxeterSystem", "Element", "build_system", "parse_descriptor",
    "coxeter_matrix_for", "UnsupportedGroupError", "GroupTooLargeError",
    "DEFAULT_SIZE_CAP", "cached_system",
]

DEFAULT_SIZE_CAP = 40320


class UnsupportedGroupError(ValueError):
    """The descriptor names an infinite or non-crystallographic group."""


class GroupTooLargeError(RuntimeError):
    """The group exceeds the configured enumeration cap."""


@dataclass(frozen=True)
class Element:
    """A group element as seen from outside: index, length and ShortLex word.

    ``Element`` implements ``__index__`` so it can be passed anywhere an
    element index is accepted.
    """
    index: int
    length: int
    word: tuple[int, ...]

    def __index__(self) -> int:
        return self.index


# -- descriptors ------------------------------------------------------------

def _path_matrix(n: int, labels: dict[tuple[int, int], int]) -> list[list[int]]:
    m = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for (i, j), v in labels.items():
        m[i][j] = m[j][i] = v
    return m


def coxeter_matrix_for(kind: str, rank: int, m: int | None = None) -> list[list[int]]:
    """Coxeter matrix for an irreducible type in Bourbaki numbering."""
    kind = kind.upper()
    n = rank
    if kind == "A":
        return _path_matrix(n, {(i, i + 1): 3 for i in range(n - 1)})
    if kind == "B" or kind == "C":
        if n < 2:
            raise UnsupportedGroupError(f"type {kind} needs rank >= 2")
        labels = {(i, i + 1): 3 for i in range(n - 2)}
        labels[(n - 2, n - 1)] = 4
        return _path_matrix(n, labels)
    if kind == "D":
        if n < 4:
            raise UnsupportedGroupError("type D needs rank >= 4")
        labels = {(i, i + 1): 3 for i in range(n - 2)}
        labels[(n - 3, n - 1)] = 3
        return _path_matrix(n, labels)
    if kind == "E":
        if n not in (6, 7, 8):
            raise UnsupportedGroupError("type E needs rank 6, 7 or 8")
        labels = {(0, 2): 3, (1, 3): 3, (2, 3): 3}
        labels.update({(i, i + 1): 3 for i in range(3, n - 1)})
        return _path_matrix(n, labels)
    if kind == "F":
        if n != 4:
            raise UnsupportedGroupError("type F needs rank 4")
        return _path_matrix(4, {(0, 1): 3, (1, 2): 4, (2, 3): 3})
    if kind == "G":
        if n != 2:
            raise UnsupportedGroupError("type G needs rank 2")
        return _path_matrix(2, {(0, 1): 6})
    if kind == "I":
        if m is None or m < 2:
            raise UnsupportedGroupError("I2(m) needs m >= 2")
        return _path_matrix(2, {(0, 1): m})
    if kind == "H":
        raise UnsupportedGroupError("non-crystallographic unsupported (type H)")
    raise UnsupportedGroupError(f"unknown Coxeter type {kind!r}")


_TYPE_RE = re.compile(r"^\s*([A-Za-z])\s*(\d+)\s*(?:\(\s*(\d+)\s*\))?\s*$")


def _block_sum(blocks: Sequence[list[list[int]]]) -> list[list[int]]:
    n = sum(len(b) for b in blocks)
    out = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, v in enumerate(row):
                out[off + i][off + j] = v
        off += len(b)
    return out


def parse_descriptor(descriptor: str) -> tuple[list[list[int]], str]:
    """Parse ``"A3"``, ``"I2(7)"``, ``"A2xB3"`` or ``"matrix:[[1,3],[3,1]]"``.

    Returns the Coxeter matrix and a normalized type tag.  Entries ``0`` or
    ``-1`` (or the string ``"inf"``) in a matrix mean an infinite order.
    """
    text = descriptor.strip()
    if text.lower().startswith("matrix:"):
        raw = json.loads(text.split(":", 1)[1].replace("inf", "0"))
        return [[int(v) for v in row] for row in raw], "matrix"
    blocks = []
    tags = []
    for part in re.split(r"\s*[x×]\s*", text):
        m = _TYPE_RE.match(part)
        if not m:
            raise UnsupportedGroupError(f"cannot parse group descriptor {descriptor!r}")
        kind, rank, order = m.group(1).upper(), int(m.group(2)), m.group(3)
        if kind == "I":
            if rank != 2 or order is None:
                raise UnsupportedGroupError(f"dihedral descriptor must look like I2(m): {part!r}")
            blocks.append(coxeter_matrix_for("I", 2, int(order)))
            tags.append(f"I2({int(order)})")
        else:
            if order is not None:
                raise UnsupportedGroupError(f"unexpected order in {part!r}")
            blocks.append(coxeter_matrix_for(kind, rank))
            tags.append(f"{kind}{rank}")
    return _block_sum(blocks), "x".join(tags)


# -- classification -----------------------------------------------------------

def _components(m: Sequence[Sequence[int]]) -> list[list[int]]:
    n = len(m)
    seen: set[int] = set()
    comps = []
    for start in range(n):
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if j not in seen and m[i][j] != 2:
                    seen.add(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def _component_order(m: Sequence[Sequence[int]], comp: list[int]) -> tuple[str, int]:
    """Type name and group order of a connected finite Coxeter graph."""
    n = len(comp)
    if n == 1:
        return "A1", 2
    if n == 2:
        k = m[comp[0]][comp[1]]
        return f"I2({k})", 2 * k
    edges = {(i, j): m[i][j] for i in comp for j in comp if i < j and m[i][j] > 2}
    labels = sorted(edges.values())
    degree = {i: sum(1 for e in edges if i in e) for i in comp}
    fact = math.factorial
    if labels.count(4) == 1 and all(v in (3, 4) for v in labels):
        # B_n, or F4 when the 4-edge sits in the middle of a 4-path
        (a, b), = [e for e, v in edges.items() if v == 4]
        if n == 4 and degree[a] == 2 and degree[b] == 2:
            return "F4", 1152
        return f"B{n}", 2 ** n * fact(n)
    if all(v == 3 for v in labels):
        branch = [i for i in comp if degree[i] == 3]
        if not branch:
            return f"A{n}", fact(n + 1)
        c = branch[0]
        arms = []
        for nb in (j for j in comp if (min(c, j), max(c, j)) in edges):
            length, prev, cur = 1, c, nb
            while True:
                nxt = [j for j in comp if j != prev and (min(cur, j), max(cur, j)) in edges]
                if not nxt:
                    break
                prev, cur = cur, nxt[0]
                length += 1
            arms.append(length)
        arms.sort()
        if arms[:2] == [1, 1]:
            return f"D{n}", 2 ** (n - 1) * fact(n)
        return f"E{n}", {6: 51840, 7: 2903040, 8: 696729600}[n]
    raise UnsupportedGroupError("unrecognized finite Coxeter graph")


def _check_finite(m: Sequence[Sequence[int]]) -> None:
    n = len(m)
    for i in range(n):
        for j in range(n):
            v = m[i][j]
            if i == j and v != 1:
                raise UnsupportedGroupError("diagonal Coxeter matrix entries must be 1")
            if i != j and (v != m[j][i]):
                raise UnsupportedGroupError("Coxeter matrix must be symmetric")
            if i != j and v <= 0:
                raise UnsupportedGroupError("infinite group unsupported")
            if i != j and v == 1:
                raise UnsupportedGroupError("off-diagonal Coxeter matrix entries must be >= 2")
    if n == 0:
        return
    form = np.array([[-math.cos(math.pi / m[i][j]) for j in range(n)] for i in range(n)])
    if np.linalg.eigvalsh(form).min() <= 1e-9:
        raise UnsupportedGroupError("infinite group unsupported")
    if n > 2:
        for comp in _components(m):
            for i in comp:
                for j in comp:
                    if i != j and m[i][j] not in (2, 3, 4, 6):
                        raise UnsupportedGroupError("non-crystallographic unsupported")


def _cartan_matrix(m: Sequence[Sequence[int]]) -> list[list[int]]:
    n = len(m)
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            v = m[i][j]
            if v == 3:
                a[i][j] = a[j][i] = -1
            elif v == 4:
                a[i][j], a[j][i] = -1, -2
            elif v == 6:
                a[i][j], a[j][i] = -1, -3
    return a


# -- enumeration ------------------------------------------------------------

def _cartan_action(m: Sequence[Sequence[int]]):
    a = _cartan_matrix(m)
    n = len(m)

    def act(x: tuple[int, ...], i: int) -> tuple[int, ...]:
        xi = x[i]
        if not xi:
            return x
        row = a[i]
        return tuple(x[j] - xi * row[j] for j in range(n))

    return (1,) * n, act


def _dihedral_action(k: int):
    # state (first letter, length) with the longest element stored as (0, k)
    def act(x: tuple[int, int], i: int) -> tuple[int, int]:
        first, length = x
        if length == 0:
            return (i, 1)
        if length == k:
            return (1 - i, k - 1)
        if first == i:
            return (1 - i, length - 1) if length > 1 else (0, 0)
        return (i, length + 1) if length + 1 < k else (0, k)

    return (0, 0), act


def _enumerate(rank: int, start: Hashable, act: Callable, cap: int):
    """Breadth-first closure of ``start`` under left multiplication."""
    index = {start: 0}
    states = [start]
    dist = [0]
    queue = deque([0])
    left: list[list[int]] = [[-1] * rank]
    while queue:
        w = queue.popleft()
        x = states[w]
        for i in range(rank):
            y = act(x, i)
            v = index.get(y)
            if v is None:
                v = len(states)
                if v >= cap:
                    raise GroupTooLargeError(f"group has more than {cap} elements")
                index[y] = v
                states.append(y)
                dist.append(dist[w] + 1)
                left.append([-1] * rank)
                queue.append(v)
            left[w][i] = v
    return left, dist


class CoxeterSystem:
    """A finite Coxeter group with all elements enumerated.

    Element indices are sorted by ``(length, ShortLex word)``; index 0 is
    the identity.  Most methods accept element indices or :class:`Element`.
    """

    def __init__(self, coxeter_matrix: Sequence[Sequence[int]], type_tag: str = "matrix",
                 descriptor: str | None = None, size_cap: int = DEFAULT_SIZE_CAP):
        m = [list(map(int, row)) for row in coxeter_matrix]
        _check_finite(m)
        self.rank = len(m)
        self.coxeter_matrix = tuple(tuple(row) for row in m)
        self.components = _components(m)
        comp_types = [_component_order(m, c) for c in self.components]
        self.expected_order = reduce(operator.mul, (o for _, o in comp_types), 1)
        if type_tag == "matrix":
            names = [t for t, _ in comp_types]
            type_tag = names[0] if len(names) == 1 else "x".join(names) if names else "A0"
        self.type_tag = type_tag
        self.descriptor = descriptor or type_tag
        if self.expected_order > size_cap:
            raise GroupTooLargeError(
                f"|W| = {self.expected_order} exceeds the size cap {size_cap}")

        if self.rank == 2 and m[0][1] not in (2, 3, 4, 6):
            start, act = _dihedral_action(m[0][1])
        else:
            start, act = _cartan_action(m)
        left, dist = _enumerate(self.rank, start, act, size_cap)
        if len(left) != self.expected_order:
            raise AssertionError(f"enumerated {len(left)} elements, expected {self.expected_order}")

        # ShortLex words: first letter is the least left descent
        order = sorted(range(len(left)), key=dist.__getitem__)
        words: list[tuple[int, ...]] = [()] * len(left)
        for w in order:
            if dist[w] == 0:
                continue
            i = next(i for i in range(self.rank) if dist[left[w][i]] < dist[w])
            words[w] = (i,) + words[left[w][i]]
        perm = sorted(range(len(left)), key=lambda w: (dist[w], words[w]))
        new_of = [0] * len(left)
        for new, old in enumerate(perm):
            new_of[old] = new

        self.size = len(left)
        self._words = [words[old] for old in perm]
        self._lengths = [dist[old] for old in perm]
        self._left = [tuple(new_of[v] for v in left[old]) for old in perm]
        self._index_of_word = {wd: i for i, wd in enumerate(self._words)}

        right = [None] * self.size
        right[0] = tuple(self._left[0])
        inv = [0] * self.size
        for w in range(1, self.size):
            i = self._words[w][0]
            rest = self._left[w][i]
            right[w] = tuple(self._left[right[rest][t]][i] for t in range(self.rank))
            inv[w] = right[inv[rest]][i]
        self._right = right
        self._inverse = inv
        self._ldesc = [frozenset(i for i in range(self.rank)
                                 if self._lengths[self._left[w][i]] < self._lengths[w])
                       for w in range(self.size)]
        self._rdesc = [frozenset(i for i in range(self.rank)
                                 if self._lengths[right[w][i]] < self._lengths[w])
                       for w in range(self.size)]
        self.generators = tuple(self._left[0])
        self.longest = max(range(self.size), key=self._lengths.__getitem__)
        self._bruhat_memo: dict[tuple[int, int], bool] = {}
        self._bruhat_lower: dict[int, frozenset[int]] = {}
        self.cache: dict = {}

    def __repr__(self) -> str:
        return f"CoxeterSystem({self.descriptor!r}, |W|={self.size})"

    # -- elements ---------------------------------------------------------------

    @property
    def identity(self) -> int:
        return 0

    def element(self, w) -> Element:
        w = operator.index(w)
        return Element(w, self._lengths[w], self._words[w])

    def elements(self) -> list[Element]:
        return [self.element(w) for w in range(self.size)]

    def length(self, w) -> int:
        return self._lengths[operator.index(w)]

    def word(self, w) -> tuple[int, ...]:
        return self._words[operator.index(w)]

    def from_word(self, word: Iterable[int]) -> int:
        """Element represented by ``s_{i1} s_{i2} ... s_{ik}`` (any word)."""
        w = 0
        for i in reversed(list(word)):
            if not 0 <= i < self.rank:
                raise ValueError(f"generator index {i} out of range")
            w = self._left[w][i]
        return w

    def index_of_reduced_word(self, word: Sequence[int]) -> int | None:
        """Index of the element whose ShortLex word is ``word``, else None."""
        return self._index_of_word.get(tuple(word))

    def canonicalize(self, word: Iterable[int]) -> tuple[int, ...]:
        return self._words[self.from_word(word)]

    def left_mul(self, s: int, w) -> int:
        return self._left[operator.index(w)][s]

    def right_mul(self, w, s: int) -> int:
        return self._right[operator.index(w)][s]

    def multiply(self, x, y) -> int:
        x, y = operator.index(x), operator.index(y)
        for i in reversed(self._words[x]):
            y = self._left[y][i]
        return y

    def inverse(self, w) -> int:
        return self._inverse[operator.index(w)]

    def coxeter_order(self, s: int, t: int) -> int:
        return self.coxeter_matrix[s][t]

    # -- descents and orders ------------------------------------------------

    def left_descents(self, w) -> frozenset[int]:
        return self._ldesc[operator.index(w)]

    def right_descents(self, w) -> frozenset[int]:
        return self._rdesc[operator.index(w)]

    def bruhat_leq(self, y, w) -> bool:
        """Bruhat order by the lifting recursion, memoized on pairs."""
        y, w = operator.index(y), operator.index(w)
        ly, lw = self._lengths[y], self._lengths[w]
        if y == w or ly == 0:
            return True
        if ly >= lw:
            return False
        key = (y, w)
        hit = self._bruhat_memo.get(key)
        if hit is not None:
            return hit
        s = self._words[w][0]
        sw = self._left[w][s]
        if s in self._ldesc[y]:
            res = self.bruhat_leq(self._left[y][s], sw)
        else:
            res = self.bruhat_leq(y, sw)
        self._bruhat_memo[key] = res
        return res

    def bruhat_lower(self, w) -> frozenset[int]:
        """All ``y <= w`` in Bruhat order, via ``[e,w] = [e,sw] u s[e,sw]``."""
        w = operator.index(w)
        hit = self._bruhat_lower.get(w)
        if hit is not None:
            return hit
        # iterative along the ShortLex word to avoid deep recursion
        chain = []
        x = w
        while x not in self._bruhat_lower and x != 0:
            chain.append(x)
            x = self._left[x][self._words[x][0]]
        if x == 0:
            self._bruhat_lower[0] = frozenset((0,))
        for x in reversed(chain):
            s = self._words[x][0]
            below = self._bruhat_lower[self._left[x][s]]
            left_s = self._left
            self._bruhat_lower[x] = below | frozenset(left_s[y][s] for y in below)
        return self._bruhat_lower[w]

    def bruhat_lt(self, y, w) -> bool:
        return y != w and self.bruhat_leq(y, w)

    def left_weak_leq(self, y, w) -> bool:
        """True iff ``y`` is a suffix of some reduced expression of ``w``."""
        y, w = operator.index(y), operator.index(w)
        return self.length(self.multiply(w, self._inverse[y])) == self._lengths[w] - self._lengths[y]

    # -- parabolic data ---------------------------------------------------------

    def _gen_set(self, J: Iterable[int]) -> frozenset[int]:
        J = frozenset(J)
        if any(not 0 <= t < self.rank for t in J):
            raise ValueError(f"generator set {sorted(J)} not contained in S")
        return J

    def min_coset_reps(self, J: Iterable[int]) -> list[int]:
        """``D_J``: elements ``w`` with ``l(wt) > l(w)`` for every ``t`` in J."""
        J = self._gen_set(J)
        return [w for w in range(self.size) if not (self._rdesc[w] & J)]

    def parabolic_subgroup(self, J: Iterable[int]) -> list[int]:
        J = sorted(self._gen_set(J))
        seen = {0}
        queue = deque([0])
        while queue:
            w = queue.popleft()
            for t in J:
                v = self._left[w][t]
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        return sorted(seen)

    def longest_element(self, J: Iterable[int]) -> int:
        """``w_J``: climb inside ``W_J`` until every ``t`` in J is a descent."""
        J = sorted(self._gen_set(J))
        w = 0
        while True:
            for t in J:
                if t not in self._ldesc[w]:
                    w = self._left[w][t]
                    break
            else:
                return w

    def is_generator(self, w) -> int | None:
        """The generator index if ``w`` is a simple reflection, else None."""
        w = operator.index(w)
        return self._words[w][0] if self._lengths[w] == 1 else None

    def conjugate_is_in(self, w, s: int, J: Iterable[int]) -> bool:
        """Whether ``w^-1 s w`` is a simple reflection lying in J."""
        w = operator.index(w)
        c = self.multiply(self._inverse[w], self._left[w][s])
        t = self.is_generator(c)
        return t is not None and t in set(J)

    def word_str(self, w, one_based: bool = True) -> str:
        wd = self.word(w)
        if not wd:
            return "e"
        off = 1 if one_based else 0
        return ".".join(str(i + off) for i in wd)


def build_system(descriptor, rank: int | None = None, size_cap: int = DEFAULT_SIZE_CAP) -> CoxeterSystem:
    """Build a system from ``"B3"``, ``("B", 3)``, ``"I2(5)"`` or a Coxeter matrix."""
    if isinstance(descriptor, str) and rank is not None:
        descriptor = f"{descriptor}{rank}"
    elif isinstance(descriptor, tuple) and len(descriptor) == 2 and isinstance(descriptor[0], str):
        descriptor = f"{descriptor[0]}{descriptor[1]}"
    if isinstance(descriptor, str):
        matrix, tag = parse_descriptor(descriptor)
        return CoxeterSystem(matrix, tag, descriptor=descriptor.strip(), size_cap=size_cap)
    matrix = [list(row) for row in descriptor]
    text = "matrix:" + json.dumps(matrix, separators=(",", ":"))
    return CoxeterSystem(matrix, "matrix", descriptor=text, size_cap=size_cap)


@lru_cache(maxsize=32)
def cached_system(descriptor: str) -> CoxeterSystem:
    """Shared instance per descriptor, so per-system caches are reused."""
    return build_system(descriptor)
