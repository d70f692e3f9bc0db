"""Exact Laurent polynomials in the HOMFLYPT variables (l, m)."""

from __future__ import annotations

import json
from typing import Iterable, Mapping

Gauss = tuple[int, int]  # a + b*i


def gmul(x: Gauss, y: Gauss) -> Gauss:
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def ipow(k: int) -> Gauss:
    """i**k for any integer k."""
    return ((1, 0), (0, 1), (-1, 0), (0, -1))[k % 4]


class LaurentPoly2:
    """Sparse integer Laurent polynomial in ``l`` and ``m``.

    Terms are stored as ``{(l_exp, m_exp): coeff}`` with no zero coefficients.
    Instances are treated as immutable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean = {}
        for (a, b), c in (terms or {}).items():
            if c:
                clean[(int(a), int(b))] = int(c)
        self._terms = clean
        self._hash = None

    @classmethod
    def const(cls, c: int) -> "LaurentPoly2":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, l_exp: int, m_exp: int, c: int = 1) -> "LaurentPoly2":
        return cls({(l_exp, m_exp): c})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly2.const(other)
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other) -> "LaurentPoly2":
        if isinstance(other, int):
            other = LaurentPoly2.const(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPoly2(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly2":
        return LaurentPoly2({k: -c for k, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly2":
        if isinstance(other, int):
            other = LaurentPoly2.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly2":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly2":
        if isinstance(other, int):
            return LaurentPoly2({k: c * other for k, c in self._terms.items()})
        out: dict[tuple[int, int], int] = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return LaurentPoly2(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly2":
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials have Laurent inverses")
            ((a, b), c), = self._terms.items()
            if c not in (1, -1):
                raise ValueError("monomial coefficient is not a unit")
            return LaurentPoly2({(-a * -n, -b * -n): c ** -n})
        result = LaurentPoly2.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # degrees -----------------------------------------------------------------

    def l_degrees(self) -> tuple[int, int]:
        """(max, min) exponent of ``l``."""
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        ls = [a for a, _ in self._terms]
        return max(ls), min(ls)

    def m_degrees(self) -> tuple[int, int]:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        ms = [b for _, b in self._terms]
        return max(ms), min(ms)

    def mirror(self) -> "LaurentPoly2":
        """Substitute l -> 1/l."""
        return LaurentPoly2({(-a, b): c for (a, b), c in self._terms.items()})

    # serialization ----------------------------------------------------------

    def to_list(self) -> list[list[int]]:
        return [[a, b, c] for (a, b), c in sorted(self._terms.items())]

    @classmethod
    def from_list(cls, rows: Iterable[Iterable[int]]) -> "LaurentPoly2":
        out: dict[tuple[int, int], int] = {}
        for a, b, c in rows:
            out[(a, b)] = out.get((a, b), 0) + c
        return cls(out)

    def to_json(self) -> str:
        return json.dumps(self.to_list(), separators=(",", ":"))

    def __repr__(self) -> str:
        return f"LaurentPoly2({self.pretty()})"

    def pretty(self) -> str:
        """Group by powers of m, highest first, as in ``-l m^3 + (2l^3 + ...) m``."""
        if not self._terms:
            return "0"
        by_m: dict[int, dict[int, int]] = {}
        for (a, b), c in self._terms.items():
            by_m.setdefault(b, {})[a] = c
        chunks = []
        for b in sorted(by_m, reverse=True):
            coeff = _univariate(by_m[b], "l")
            mono = "" if b == 0 else ("m" if b == 1 else f"m^{b}")
            if not mono:
                chunks.append(f"({coeff})" if len(by_m[b]) > 1 else coeff)
            elif len(by_m[b]) > 1:
                chunks.append(f"({coeff}) {mono}")
            elif coeff in ("1", "-1"):
                chunks.append(("-" if coeff == "-1" else "") + mono)
            else:
                chunks.append(f"{coeff} {mono}")
        out = " + ".join(chunks)
        return out.replace("+ -", "- ")


def _univariate(terms: Mapping[int, int], var: str) -> str:
    parts = []
    for e in sorted(terms, reverse=True):
        c = terms[e]
        mono = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{c}{mono}")
    return " + ".join(parts).replace("+ -", "- ")


L = LaurentPoly2.monomial(1, 0)
M = LaurentPoly2.monomial(0, 1)
ONE = LaurentPoly2.const(1)
# value of one extra split unknot component: -(l + 1/l)/m
DELTA = LaurentPoly2({(1, -1): -1, (-1, -1): -1})


class GaussLaurent:
    """Univariate Laurent polynomial in ``A`` with Gaussian-integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, Gauss] | None = None):
        self.terms = {e: c for e, c in (terms or {}).items() if c != (0, 0)}

    def __add__(self, other: "GaussLaurent") -> "GaussLaurent":
        out = dict(self.terms)
        for e, c in other.terms.items():
            a = out.get(e, (0, 0))
            out[e] = (a[0] + c[0], a[1] + c[1])
        return GaussLaurent(out)

    def __mul__(self, other: "GaussLaurent") -> "GaussLaurent":
        out: dict[int, Gauss] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                a = out.get(e1 + e2, (0, 0))
                p = gmul(c1, c2)
                out[e1 + e2] = (a[0] + p[0], a[1] + p[1])
        return GaussLaurent(out)

    def scale(self, c: Gauss) -> "GaussLaurent":
        return GaussLaurent({e: gmul(v, c) for e, v in self.terms.items()})

    def shift(self, k: int) -> "GaussLaurent":
        return GaussLaurent({e + k: v for e, v in self.terms.items()})

    def divide_one_minus_a4(self) -> "GaussLaurent":
        """Exact division by (1 - A^4); raises if there is a remainder."""
        if not self.terms:
            return GaussLaurent()
        lo, hi = min(self.terms), max(self.terms)
        q: dict[int, Gauss] = {}
        # f = g - A^4 g  =>  g_e = f_e + g_{e-4}
        for e in range(lo, hi - 3):
            f = self.terms.get(e, (0, 0))
            g4 = q.get(e - 4, (0, 0))
            q[e] = (f[0] + g4[0], f[1] + g4[1])
        check = GaussLaurent(q) * GaussLaurent({0: (1, 0), 4: (-1, 0)})
        if check.terms != self.terms:
            raise ArithmeticError("not divisible by 1 - A^4")
        return GaussLaurent(q)

    def at_i(self) -> Gauss:
        re_, im_ = 0, 0
        for e, c in self.terms.items():
            v = gmul(c, ipow(e))
            re_ += v[0]
            im_ += v[1]
        return (re_, im_)
