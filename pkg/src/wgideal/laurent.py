"""
Integer Laurent polynomials in one indeterminate ``q``.

Values are immutable and stored sparsely as ``{exponent: coefficient}`` with
no zero coefficients, so the zero polynomial is the empty map.

>>> q = LaurentPoly.q()
>>> str((q - q**-1) * (q - q**-1))
'q^-2 - 2 + q^2'
>>> (q + 1).bar() == q**-1 + 1
True
"""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Union

__all__ = ["LaurentPoly", "Q", "ZERO", "ONE", "Q_MINUS_QINV", "bar_involute",
           "is_in_qAplus", "constant_term"]

Scalar = Union[int, "LaurentPoly"]


class LaurentPoly:
    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] | int = ()):
        if isinstance(coeffs, int):
            self._c = {0: coeffs} if coeffs else {}
        else:
            items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
            c: dict[int, int] = {}
            for e, a in items:
                a = c.get(e, 0) + a
                if a:
                    c[e] = a
                else:
                    c.pop(e, None)
            self._c = c
        self._hash = None

    @classmethod
    def _raw(cls, c: dict[int, int]) -> LaurentPoly:
        # c must already be free of zero coefficients
        p = object.__new__(cls)
        p._c = c
        p._hash = None
        return p

    @classmethod
    def q(cls, e: int = 1, coeff: int = 1) -> LaurentPoly:
        """The monomial ``coeff * q**e``."""
        return cls._raw({e: coeff} if coeff else {})

    # -- inspection ---------------------------------------------------------

    @property
    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def terms(self) -> list[tuple[int, int]]:
        """``(exponent, coefficient)`` pairs, exponents ascending."""
        return sorted(self._c.items())

    def __getitem__(self, e: int) -> int:
        return self._c.get(e, 0)

    def __bool__(self) -> bool:
        return bool(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def min_degree(self) -> int | None:
        return min(self._c) if self._c else None

    def max_degree(self) -> int | None:
        return max(self._c) if self._c else None

    def constant_term(self) -> int:
        return self._c.get(0, 0)

    def is_polynomial(self) -> bool:
        """True iff ``self`` lies in Z[q] (no negative exponents)."""
        return all(e >= 0 for e in self._c)

    def is_in_qAplus(self) -> bool:
        """True iff every exponent is at least 1, i.e. ``self`` lies in qZ[q]."""
        return all(e >= 1 for e in self._c)

    # -- ring structure -----------------------------------------------------

    @staticmethod
    def _coerce(other) -> LaurentPoly | None:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly(other)
        return None

    def __add__(self, other: Scalar) -> LaurentPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o._c:
            return self
        c = dict(self._c)
        for e, a in o._c.items():
            a += c.get(e, 0)
            if a:
                c[e] = a
            else:
                del c[e]
        return LaurentPoly._raw(c)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({e: -a for e, a in self._c.items()})

    def __sub__(self, other: Scalar) -> LaurentPoly:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Scalar) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other: Scalar) -> LaurentPoly:
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentPoly._raw({e: a * other for e, a in self._c.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self._c or not other._c:
            return ZERO
        c: dict[int, int] = {}
        for e1, a1 in self._c.items():
            for e2, a2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + a1 * a2
        return LaurentPoly._raw({e: a for e, a in c.items() if a})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if len(self._c) == 1:
            ((e, a),) = self._c.items()
            if k < 0 and a not in (1, -1):
                raise ValueError("only monomials with unit coefficient are invertible")
            return LaurentPoly._raw({e * k: a ** k if k >= 0 else a ** (-k)})
        if k < 0:
            raise ValueError("only monomials are invertible in Z[q, q^-1]")
        result = ONE
        for _ in range(k):
            result = result * self
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``q**k``."""
        if not k:
            return self
        return LaurentPoly._raw({e + k: a for e, a in self._c.items()})

    def bar(self) -> LaurentPoly:
        """The ring involution ``q -> q^-1``."""
        return LaurentPoly._raw({-e: a for e, a in self._c.items()})

    def positive_part(self) -> LaurentPoly:
        """Terms with exponent >= 1."""
        return LaurentPoly._raw({e: a for e, a in self._c.items() if e > 0})

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    # -- text form ----------------------------------------------------------

    def __str__(self) -> str:
        if not self._c:
            return "0"
        out = []
        for e, a in self.terms():
            mag = abs(a)
            if e == 0:
                body = str(mag)
            else:
                mono = "q" if e == 1 else f"q^{e}"
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not out:
                out.append(("-" if a < 0 else "") + body)
            else:
                out.append(("- " if a < 0 else "+ ") + body)
        return " ".join(out)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    _TERM = re.compile(r"([+-])?\s*(\d+)?\s*(\*)?\s*(q(?:\^(-?\d+))?)?")

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Inverse of ``str``; also accepts ``2q`` and unicode minus signs."""
        s = text.replace("−", "-").replace(" ", "")
        if s in ("", "0"):
            return ZERO
        c: dict[int, int] = {}
        pos = 0
        while pos < len(s):
            m = cls._TERM.match(s, pos)
            if not m or m.end() == pos or not (m.group(2) or m.group(4)):
                raise ValueError(f"cannot parse Laurent polynomial: {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            a = int(m.group(2)) if m.group(2) else 1
            if m.group(4):
                e = int(m.group(5)) if m.group(5) is not None else 1
            else:
                e = 0
            c[e] = c.get(e, 0) + sign * a
            pos = m.end()
        return LaurentPoly({e: a for e, a in c.items() if a})


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})
Q = LaurentPoly._raw({1: 1})
QINV = LaurentPoly._raw({-1: 1})
Q_MINUS_QINV = LaurentPoly._raw({1: 1, -1: -1})


def bar_involute(p: LaurentPoly) -> LaurentPoly:
    return p.bar()


def is_in_qAplus(p: LaurentPoly) -> bool:
    return p.is_in_qAplus()


def constant_term(p: LaurentPoly) -> int:
    return p.constant_term()
