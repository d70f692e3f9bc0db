"""HOMFLYPT polynomials by skein recursion toward descending diagrams.

Convention: ``l P(L+) + l^-1 P(L-) + m P(L0) = 0`` and ``P(unknot) = 1``.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field

from tkt.laurent import DELTA, L, M, ONE, GaussLaurent, LaurentPoly2, gmul, ipow
from tkt.linkdiag import (
    LinkDiagram,
    canonical_key,
    components,
    simplify,
    smooth,
    split_pieces,
    switch,
)

DEFAULT_NODE_CAP = 10**7

# coefficients for solving the skein relation for the crossing that is present
_POS_SWITCH = -(L ** -2)  # P(L+) = -l^-2 P(L-) - l^-1 m P(L0)
_POS_SMOOTH = -(L ** -1) * M
_NEG_SWITCH = -(L ** 2)  # P(L-) = -l^2 P(L+) - l m P(L0)
_NEG_SMOOTH = -L * M


class ResourceCapExceeded(RuntimeError):
    """The skein tree grew past the configured node cap."""


@dataclass
class SkeinStats:
    nodes: int = 0
    memo_hits: int = 0
    max_depth: int = 0


def node_cap_from_env() -> int:
    raw = os.environ.get("TKT_NODE_CAP")
    return int(raw) if raw else DEFAULT_NODE_CAP


def _descending_plan(D: LinkDiagram) -> tuple[list[int], int]:
    """Crossings to switch (in order) to make ``D`` descending, and its component count.

    Every component gets the basepoint that needs the fewest self-switches;
    components are ordered top to bottom to minimise the inter-component ones
    (all orders are tried for up to five components).
    """
    nxt = D.successor()
    r, comp = components(D)
    r -= D.unknots
    heads = {a: D.head(a) for a in comp}
    members: dict[int, list[int]] = {}
    for a in sorted(comp):
        members.setdefault(comp[a], []).append(a)

    def walk(start: int) -> list[tuple[int, bool]]:
        out = []
        a = start
        while True:
            i, p = heads[a]
            out.append((i, p % 2 == 1))
            a = nxt[a]
            if a == start:
                return out

    best_self: dict[int, tuple[int, list[int]]] = {}
    for k, arcs in members.items():
        choice = None
        for s in arcs:
            seen = set()
            bad = []
            for i, over in walk(s):
                x = D.crossings[i]
                if comp[x[0]] != comp[x[1]]:
                    continue
                if i not in seen:
                    seen.add(i)
                    if not over:
                        bad.append(i)
            if choice is None or len(bad) < len(choice[1]):
                choice = (s, bad)
        best_self[k] = choice

    mixed = [
        i for i, x in enumerate(D.crossings) if comp[x[0]] != comp[x[1]]
    ]

    def inter(order: tuple[int, ...]) -> list[int]:
        rank = {c: n for n, c in enumerate(order)}
        bad = []
        for i in mixed:
            x = D.crossings[i]
            under, over = comp[x[0]], comp[x[1]]
            if rank[over] > rank[under]:
                bad.append(i)
        return bad

    comps = sorted(members)
    orders = itertools.permutations(comps) if len(comps) <= 5 else [tuple(comps)]
    order = min(orders, key=lambda o: (len(inter(o)), o))
    plan = []
    for k in order:
        plan.extend(best_self[k][1])
    plan.extend(inter(order))
    return plan, r


class HomflyEngine:
    """Memoised skein evaluator; the memo table persists across calls."""

    def __init__(self, node_cap: int | None = None):
        self.node_cap = node_cap_from_env() if node_cap is None else node_cap
        self.memo: dict[str, LaurentPoly2] = {}
        self.stats = SkeinStats()

    def __call__(self, D: LinkDiagram) -> LaurentPoly2:
        P = self._eval(D, 0)
        if P.is_zero():
            raise AssertionError("skein engine produced the zero polynomial")
        return P

    def _eval(self, D: LinkDiagram, depth: int) -> LaurentPoly2:
        D = simplify(D)
        key = canonical_key(D)
        hit = self.memo.get(key)
        if hit is not None:
            self.stats.memo_hits += 1
            return hit
        self.stats.nodes += 1
        self.stats.max_depth = max(self.stats.max_depth, depth)
        if self.stats.nodes > self.node_cap:
            raise ResourceCapExceeded(
                f"skein tree exceeded {self.node_cap} nodes"
            )
        P = self._expand(D, depth)
        return self.memo.setdefault(key, P)

    def _expand(self, D: LinkDiagram, depth: int) -> LaurentPoly2:
        if not D.crossings:
            return DELTA ** (D.unknots - 1)
        pieces = split_pieces(D)
        if len(pieces) > 1 or D.unknots:
            P = DELTA ** (len(pieces) + D.unknots - 1)
            for idx in pieces:
                sub = LinkDiagram._trusted(
                    tuple(D.crossings[i] for i in idx), tuple(D.signs[i] for i in idx)
                )
                P = P * self._eval(sub, depth + 1)
            return P
        plan, r = _descending_plan(D)
        total = LaurentPoly2()
        coef = ONE
        cur = D
        for i in plan:
            if cur.signs[i] > 0:
                a, b = _POS_SWITCH, _POS_SMOOTH
            else:
                a, b = _NEG_SWITCH, _NEG_SMOOTH
            total = total + coef * b * self._eval(smooth(cur, i), depth + 1)
            coef = coef * a
            cur = switch(cur, i)
        return total + coef * DELTA ** (r - 1)


_default_engine: HomflyEngine | None = None


def homfly(D: LinkDiagram, engine: HomflyEngine | None = None) -> LaurentPoly2:
    """HOMFLYPT polynomial of an oriented diagram.

    Uses a shared module-level engine unless one is passed in; raises
    :class:`ResourceCapExceeded` rather than truncating.
    """
    global _default_engine
    if engine is None:
        if _default_engine is None or _default_engine.node_cap != node_cap_from_env():
            _default_engine = HomflyEngine()
        engine = _default_engine
    return engine(D)


# --- specialisations ----------------------------------------------------------


def jones_at_i(P: LaurentPoly2) -> tuple[int, int]:
    """Evaluate V(A) = P(i A^4, i(A^-2 - A^2)) at A = i, exactly.

    The substitution makes m vanish at A = i, so the negative powers of m are
    cleared symbolically first: with k = -min(m-degree) the numerator is
    divisible by (A^-2 - A^2)^k = A^(-2k) (1 - A^4)^k.
    """
    _, mmin = P.m_degrees()
    k = max(0, -mmin)
    diff = GaussLaurent({-2: (1, 0), 2: (-1, 0)})  # A^-2 - A^2
    num = GaussLaurent()
    for (a, b), c in P.items():
        term = GaussLaurent({4 * a: gmul((c, 0), ipow(a + b))})
        for _ in range(b + k):
            term = term * diff
        num = num + term
    num = num.shift(2 * k)
    for _ in range(k):
        num = num.divide_one_minus_a4()
    return num.at_i()


def jones_check(D: LinkDiagram, engine: HomflyEngine | None = None) -> tuple[int, int]:
    """V_D at A = sqrt(-1) as a Gaussian integer; must equal (-2)^(r-1)."""
    P = homfly(D, engine)
    r, _ = components(D)
    value = jones_at_i(P)
    expected = ((-2) ** (r - 1), 0)
    if value != expected:
        raise AssertionError(f"V(i) = {value}, expected {expected} for r = {r}")
    return value


def ell_degrees(P: LaurentPoly2) -> tuple[int, int]:
    """(E, e): maximal and minimal powers of l."""
    return P.l_degrees()


def conway(P: LaurentPoly2) -> dict[int, int]:
    """Conway polynomial coefficients {z-power: coeff} via l = i, m = -i z."""
    out: dict[int, tuple[int, int]] = {}
    for (a, b), c in P.items():
        if b < 0:
            raise ValueError("negative m-power: not a knot polynomial")
        v = gmul(gmul((c, 0), ipow(a)), ipow(-b))
        s = out.get(b, (0, 0))
        out[b] = (s[0] + v[0], s[1] + v[1])
    if any(v[1] for v in out.values()):
        raise ValueError("non-real Conway coefficients")
    return {b: v[0] for b, v in out.items() if v[0]}


def alexander_genus_lb(P: LaurentPoly2) -> int:
    """Half the t-breadth of the Alexander polynomial, a lower bound on genus."""
    z = conway(P)
    if not z:
        raise ValueError("vanishing Alexander polynomial: not a knot")
    return max(z) // 2


# --- twist families with wrapping number 2, winding number 0 --------------------


def twist_closed_form(P0: LaurentPoly2, Pinf: LaurentPoly2, n: int) -> LaurentPoly2:
    """(-l^2)^n P0 + (sum_{j<n} (-l^2)^j) (-l m) Pinf."""
    if n < 0:
        raise ValueError("n must be non-negative")
    step = -(L ** 2)
    geo = LaurentPoly2()
    power = ONE
    for _ in range(n):
        geo = geo + power
        power = power * step
    return power * P0 + geo * (-L * M) * Pinf


class HypothesisViolated(ValueError):
    """The degree hypothesis E[P0] != -1 + E[Pinf] fails."""


def twist_degrees(P0: LaurentPoly2, Pinf: LaurentPoly2, n: int) -> tuple[int, int]:
    """Predicted (E, e) of P(K_n) from the degrees of P0 and Pinf."""
    E0, e0 = P0.l_degrees()
    Ei, ei = Pinf.l_degrees()
    if E0 == Ei - 1:
        raise HypothesisViolated(f"E[P0] = {E0} equals -1 + E[Pinf]")
    if n < 0:
        raise ValueError("n must be non-negative")
    E = 2 * n + max(E0, Ei - 1)
    e = min(2 * n + e0, 1 + ei)
    return E, e


@dataclass
class Thm51Verdict:
    applicable: bool
    E0: int
    E_inf: int
    conclusions: dict = field(default_factory=dict)


def thm51_check(P0: LaurentPoly2, Pinf: LaurentPoly2) -> Thm51Verdict:
    """Degree test for stable braid index 1 and stable crossing number 2."""
    E0, _ = P0.l_degrees()
    Ei, _ = Pinf.l_degrees()
    ok = E0 != Ei - 1
    concl = {"b_s": 1, "c_s": 2} if ok else {}
    return Thm51Verdict(ok, E0, Ei, concl)
