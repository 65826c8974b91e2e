"""
Ideals of the left weak order and the strong/weak ascent-descent split.

An ideal is a suffix-closed set of group elements, carried together with a
set ``J`` of generators that ascend on the right of every member.  For a
member ``w`` each generator ``s`` falls in exactly one of four classes:

* strong descent  -- ``sw < w``
* strong ascent   -- ``sw > w`` and ``sw`` in the ideal
* weak descent    -- ``sw`` outside the ideal and ``w^-1 s w`` in J
* weak ascent     -- ``sw`` outside the ideal and ``w^-1 s w`` not in J
"""

from __future__ import annotations

import enum
import operator
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .coxeter import CoxeterSystem

__all__ = ["EdgeClass", "Ideal", "ideal_from_generators", "full_ideal",
           "coset_ideal", "pos", "classify"]


class EdgeClass(enum.Enum):
    STRONG_ASCENT = "SA"
    STRONG_DESCENT = "SD"
    WEAK_ASCENT = "WA"
    WEAK_DESCENT = "WD"

    @property
    def is_descent(self) -> bool:
        return self in (EdgeClass.STRONG_DESCENT, EdgeClass.WEAK_DESCENT)


SA, SD, WA, WD = (EdgeClass.STRONG_ASCENT, EdgeClass.STRONG_DESCENT,
                  EdgeClass.WEAK_ASCENT, EdgeClass.WEAK_DESCENT)


@dataclass(frozen=True, eq=False)
class Ideal:
    system: CoxeterSystem = field(repr=False)
    members: tuple[int, ...]
    j: frozenset[int]
    _member_set: frozenset[int] = field(init=False, repr=False)
    _classes: dict = field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(set(self.members))))
        object.__setattr__(self, "j", frozenset(self.j))
        object.__setattr__(self, "_member_set", frozenset(self.members))
        object.__setattr__(self, "_classes", {})

    def __contains__(self, w) -> bool:
        return operator.index(w) in self._member_set

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return (self.system is other.system and self.members == other.members
                and self.j == other.j)

    def __hash__(self) -> int:
        return hash((id(self.system), self.members, self.j))

    @property
    def member_set(self) -> frozenset[int]:
        return self._member_set

    @property
    def generators(self) -> tuple[int, ...]:
        """The maximal members for the left weak order."""
        W = self.system
        return tuple(w for w in self.members
                     if not any(W.left_mul(s, w) in self._member_set
                                for s in range(W.rank) if s not in W.left_descents(w)))

    def classify(self, w, s: int) -> EdgeClass:
        w = operator.index(w)
        key = (w, s)
        hit = self._classes.get(key)
        if hit is not None:
            return hit
        if w not in self._member_set:
            raise ValueError(f"element {w} is not in the ideal")
        W = self.system
        if s in W.left_descents(w):
            c = SD
        elif W.left_mul(s, w) in self._member_set:
            c = SA
        elif W.conjugate_is_in(w, s, self.j):
            c = WD
        else:
            c = WA
        self._classes[key] = c
        return c

    def descents(self, w) -> frozenset[int]:
        """``SD(w) | WD(w)``, the tau-invariant of ``c_w``."""
        return frozenset(s for s in range(self.system.rank) if self.classify(w, s).is_descent)

    def ascents(self, w) -> frozenset[int]:
        return frozenset(s for s in range(self.system.rank) if not self.classify(w, s).is_descent)

    def classes(self, w) -> dict[int, EdgeClass]:
        return {s: self.classify(w, s) for s in range(self.system.rank)}

    def restrict(self, members: Iterable[int]) -> Ideal:
        """A sub-ideal with the same J; raises if not suffix-closed."""
        sub = Ideal(self.system, tuple(members), self.j)
        if not sub.member_set <= self.member_set:
            raise ValueError("not a subset of the ideal")
        check_suffix_closed(sub)
        return sub

    def is_suffix_closed(self) -> bool:
        W = self.system
        return all(W.left_mul(s, w) in self._member_set
                   for w in self.members for s in W.left_descents(w))


def check_suffix_closed(ideal: Ideal) -> None:
    if not ideal.is_suffix_closed():
        raise ValueError("member set is not closed under taking suffixes")


def pos(system: CoxeterSystem, X: Iterable[int]) -> frozenset[int]:
    """Largest J with every ``x`` in X a minimal left coset representative for W_J."""
    X = list(X)
    return frozenset(s for s in range(system.rank)
                     if all(s not in system.right_descents(x) for x in X))


def _closure(system: CoxeterSystem, gens: Iterable[int]) -> set[int]:
    seen = set()
    queue = deque(operator.index(g) for g in gens)
    while queue:
        w = queue.popleft()
        if w in seen:
            continue
        seen.add(w)
        for s in system.left_descents(w):
            queue.append(system.left_mul(s, w))
    return seen


def ideal_from_generators(system: CoxeterSystem, gens: Iterable, J: Iterable[int] = ()) -> Ideal:
    """Suffix closure of ``gens``, checked against ``J <= Pos``."""
    members = _closure(system, gens)
    J = frozenset(J)
    if not J <= pos(system, members):
        raise ValueError("J not positive on ideal")
    return Ideal(system, tuple(members), J)


def full_ideal(system: CoxeterSystem) -> Ideal:
    return Ideal(system, tuple(range(system.size)), frozenset())


def coset_ideal(system: CoxeterSystem, J: Iterable[int]) -> Ideal:
    """``D_J`` as an ideal relative to J."""
    J = frozenset(J)
    return Ideal(system, tuple(system.min_coset_reps(J)), J)


def classify(ideal: Ideal, w, s: int) -> EdgeClass:
    return ideal.classify(w, s)
