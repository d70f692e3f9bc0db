"""Oriented link diagrams encoded as PD codes.

A crossing is a 4-tuple of arc labels listed counterclockwise starting at the
incoming under-strand, so position 0 is the under-strand going in and
position 2 the under-strand going out.  The over-strand runs either from
position 3 to position 1 (a positive crossing) or from 1 to 3 (negative).
Crossingless circles, which PD tuples cannot express, are carried in a
separate counter.
"""

from __future__ import annotations

import json
import re
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Sequence

Crossing = tuple[int, int, int, int]


class PDError(ValueError):
    """Raised for malformed or inconsistent diagram input."""


def is_incoming(pos: int, sign: int) -> bool:
    """Whether the arc at position ``pos`` of a crossing with ``sign`` enters it."""
    if pos == 0:
        return True
    if pos == 2:
        return False
    if pos == 3:
        return sign > 0
    return sign < 0


def over_positions(sign: int) -> tuple[int, int]:
    """(incoming, outgoing) positions of the over-strand."""
    return (3, 1) if sign > 0 else (1, 3)


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple[Crossing, ...] = ()
    signs: tuple[int, ...] = ()
    unknots: int = 0

    def __post_init__(self):
        crossings = tuple(tuple(int(a) for a in x) for x in self.crossings)
        object.__setattr__(self, "crossings", crossings)
        object.__setattr__(self, "signs", tuple(int(s) for s in self.signs))
        if len(self.crossings) != len(self.signs):
            raise PDError("one sign per crossing is required")
        if any(len(x) != 4 for x in self.crossings):
            raise PDError("every crossing needs exactly four arcs")
        if any(s not in (1, -1) for s in self.signs):
            raise PDError("crossing signs must be +1 or -1")
        if self.unknots < 0:
            raise PDError("negative unknot count")
        counts: dict[int, int] = defaultdict(int)
        for x in self.crossings:
            for a in x:
                counts[a] += 1
        bad = sorted(a for a, k in counts.items() if k != 2)
        if bad:
            raise PDError(f"arcs {bad} do not appear exactly twice")
        ins: dict[int, int] = defaultdict(int)
        for x, s in zip(self.crossings, self.signs):
            for p, a in enumerate(x):
                ins[a] += is_incoming(p, s)
        bad = sorted(a for a, k in ins.items() if k != 1)
        if bad:
            raise PDError(f"inconsistent orientation on arcs {bad}")

    @classmethod
    def _trusted(cls, crossings, signs, unknots: int = 0) -> "LinkDiagram":
        """Build without validation; for internal operations that preserve validity."""
        D = object.__new__(cls)
        object.__setattr__(D, "crossings", tuple(crossings))
        object.__setattr__(D, "signs", tuple(signs))
        object.__setattr__(D, "unknots", unknots)
        return D

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def arcs(self) -> list[int]:
        return sorted({a for x in self.crossings for a in x})

    def __len__(self) -> int:
        return len(self.crossings)

    def head(self, arc: int) -> tuple[int, int]:
        """(crossing index, position) where ``arc`` ends."""
        return self._ends()[arc][0]

    def tail(self, arc: int) -> tuple[int, int]:
        """(crossing index, position) where ``arc`` starts."""
        return self._ends()[arc][1]

    def _ends(self) -> dict[int, list]:
        cached = self.__dict__.get("_ends_cache")
        if cached is None:
            cached = defaultdict(lambda: [None, None])
            for i, (x, s) in enumerate(zip(self.crossings, self.signs)):
                for p, a in enumerate(x):
                    cached[a][0 if is_incoming(p, s) else 1] = (i, p)
            cached = dict(cached)
            object.__setattr__(self, "_ends_cache", cached)
        return cached

    def successor(self) -> dict[int, int]:
        """Map each arc to the arc that follows it along the orientation."""
        nxt = {}
        for a, (h, _) in self._ends().items():
            i, p = h
            nxt[a] = self.crossings[i][(p + 2) % 4]
        return nxt

    def relabeled(self) -> "LinkDiagram":
        """Copy with arc labels renumbered 1..k in order of first appearance."""
        mapping: dict[int, int] = {}
        for x in self.crossings:
            for a in x:
                if a not in mapping:
                    mapping[a] = len(mapping) + 1
        return LinkDiagram._trusted(
            tuple(tuple(mapping[a] for a in x) for x in self.crossings),
            self.signs,
            self.unknots,
        )


def unknot(k: int = 1) -> LinkDiagram:
    """Crossingless diagram of the ``k``-component unlink."""
    return LinkDiagram((), (), k)


# --- parsing -----------------------------------------------------------------


def _infer_signs(crossings: Sequence[Crossing]) -> list[int]:
    """Solve for over-strand directions so that every arc has one head and one tail.

    Each crossing's over direction is a binary unknown; every arc contributes an
    XOR constraint between its two occurrences.  Components that pass only over
    are left undetermined by the constraints and are oriented so that arc
    labels increase along the strand where possible.
    """
    occ: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for i, x in enumerate(crossings):
        for p, a in enumerate(x):
            occ[a].append((i, p))
    bad = sorted(a for a, v in occ.items() if len(v) != 2)
    if bad:
        raise PDError(f"arcs {bad} do not appear exactly twice")

    # incoming(i, p) = const  or  (var_i == +1) xor flip
    def term(i: int, p: int):
        if p == 0:
            return None, True
        if p == 2:
            return None, False
        return i, p == 3  # incoming iff sign>0 for pos 3, iff sign<0 for pos 1

    n = len(crossings)
    adj: list[list[tuple[int, bool]]] = [[] for _ in range(n)]
    fixed: dict[int, bool] = {}
    for a, ((i, p), (j, q)) in occ.items():
        vi, ci = term(i, p)
        vj, cj = term(j, q)
        # incoming(i,p) != incoming(j,q)
        if vi is None and vj is None:
            if ci == cj:
                raise PDError(f"inconsistent orientation on arc {a}")
        elif vi is None or vj is None:
            v, c = (vj, cj) if vi is None else (vi, ci)
            const = ci if vi is None else cj
            # positive(v) xor (not c) == incoming; need incoming == not const
            want = (not const) == c
            if fixed.get(v, want) != want:
                raise PDError(f"inconsistent orientation on arc {a}")
            fixed[v] = want
        else:
            # (pos_i == ci) != (pos_j == cj)  ->  pos_i xor pos_j == (ci == cj)
            rel = ci == cj
            adj[vi].append((vj, rel))
            adj[vj].append((vi, rel))

    value: dict[int, bool] = {}

    def propagate(start: int, val: bool):
        stack = [(start, val)]
        while stack:
            v, b = stack.pop()
            if v in value:
                if value[v] != b:
                    raise PDError("inconsistent orientation")
                continue
            value[v] = b
            for w, rel in adj[v]:
                stack.append((w, b != rel))

    for v, b in sorted(fixed.items()):
        propagate(v, b)
    for v in range(n):
        if v not in value:
            a, b, c, d = crossings[v]
            propagate(v, b == d + 1 or (b < d and b != d - 1))
    return [1 if value[i] else -1 for i in range(n)]


def from_pd(crossings: Iterable[Sequence[int]], unknots: int = 0) -> LinkDiagram:
    """Build a diagram from PD tuples, inferring orientation and signs."""
    xs = [tuple(int(a) for a in x) for x in crossings]
    if any(len(x) != 4 for x in xs):
        raise PDError("every crossing needs exactly four arcs")
    signs = _infer_signs(xs)
    return LinkDiagram(tuple(xs), tuple(signs), unknots).relabeled()


_PD_RE = re.compile(r"^PD\[(.*)\](?:;U=(\d+))?$")
_X_RE = re.compile(r"X\(([^()]*)\)")


def parse_pd(text: str) -> LinkDiagram:
    """Parse ``PD[X(a,b,c,d),...]`` with an optional ``;U=k`` suffix.

    ``PD[]`` with no suffix is the unknot.
    """
    s = re.sub(r"\s+", "", text)
    m = _PD_RE.match(s)
    if not m:
        raise PDError(f"not a PD code: {text!r}")
    body, u = m.group(1), m.group(2)
    crossings = []
    rest = _X_RE.sub("", body).replace(",", "")
    if rest:
        raise PDError(f"unexpected characters in PD code: {rest!r}")
    for xm in _X_RE.finditer(body):
        parts = xm.group(1).split(",")
        if len(parts) != 4 or not all(p.lstrip("-").isdigit() for p in parts):
            raise PDError(f"bad crossing X({xm.group(1)})")
        crossings.append(tuple(int(p) for p in parts))
    if u is not None:
        k = int(u)
    else:
        k = 0 if crossings else 1
    return from_pd(crossings, k)


def format_pd(D: LinkDiagram) -> str:
    body = ",".join("X(%d,%d,%d,%d)" % x for x in D.crossings)
    out = f"PD[{body}]"
    if D.unknots and (D.crossings or D.unknots != 1):
        out += f";U={D.unknots}"
    return out


def from_json(obj: dict | str) -> LinkDiagram:
    if isinstance(obj, str):
        obj = json.loads(obj)
    try:
        xs = obj["crossings"]
    except (KeyError, TypeError):
        raise PDError("diagram JSON needs a 'crossings' list") from None
    k = obj.get("unknot_components", 0 if xs else 1)
    return from_pd(xs, int(k))


def to_json(D: LinkDiagram) -> dict:
    return {"crossings": [list(x) for x in D.crossings], "unknot_components": D.unknots}


def load_diagram(path: str) -> LinkDiagram:
    """Read a diagram file in either the PD text or the JSON format."""
    with open(path) as fh:
        text = fh.read().strip()
    if text.startswith("{"):
        return from_json(text)
    return parse_pd(text)


# --- basic invariants of the diagram ------------------------------------------


def components(D: LinkDiagram) -> tuple[int, dict[int, int]]:
    """Number of components and the component index of every arc.

    Crossingless circles count toward the total but own no arcs.
    """
    nxt = D.successor()
    comp: dict[int, int] = {}
    k = 0
    for a in D.arcs:
        if a in comp:
            continue
        b = a
        while b not in comp:
            comp[b] = k
            b = nxt[b]
        k += 1
    return k + D.unknots, comp


def writhe(D: LinkDiagram) -> int:
    return sum(D.signs)


def mirror(D: LinkDiagram) -> LinkDiagram:
    """Swap over and under at every crossing."""
    xs = []
    for (a, b, c, d), s in zip(D.crossings, D.signs):
        xs.append((d, a, b, c) if s > 0 else (b, c, d, a))
    return LinkDiagram(tuple(xs), tuple(-s for s in D.signs), D.unknots)


def disjoint_union(D1: LinkDiagram, D2: LinkDiagram) -> LinkDiagram:
    shift = max(D1.arcs, default=0)
    xs = D1.crossings + tuple(tuple(a + shift for a in x) for x in D2.crossings)
    return LinkDiagram(xs, D1.signs + D2.signs, D1.unknots + D2.unknots)


def switch(D: LinkDiagram, i: int) -> LinkDiagram:
    """Change crossing ``i`` from over to under, keeping orientations."""
    a, b, c, d = D.crossings[i]
    s = D.signs[i]
    new = (d, a, b, c) if s > 0 else (b, c, d, a)
    xs = D.crossings[:i] + (new,) + D.crossings[i + 1:]
    signs = D.signs[:i] + (-s,) + D.signs[i + 1:]
    return LinkDiagram._trusted(xs, signs, D.unknots)


def _excise(D: LinkDiagram, drop: set[int], joins: list[tuple[int, int]]) -> LinkDiagram:
    """Delete crossings ``drop`` and splice strands.

    Each join ``(a, b)`` says the strand arriving along arc ``a`` now continues
    directly as arc ``b``; ``b`` is renamed ``a`` everywhere.  A join of an arc
    with itself closes a crossingless circle.
    """
    xs = [list(x) for i, x in enumerate(D.crossings) if i not in drop]
    signs = [s for i, s in enumerate(D.signs) if i not in drop]
    pending = [list(j) for j in joins]
    unknots = D.unknots
    for k, (a, b) in enumerate(pending):
        if a == b:
            unknots += 1
            continue
        for x in xs:
            for p in range(4):
                if x[p] == b:
                    x[p] = a
        for j in pending[k + 1:]:
            j[0] = a if j[0] == b else j[0]
            j[1] = a if j[1] == b else j[1]
    return LinkDiagram._trusted(tuple(tuple(x) for x in xs), tuple(signs), unknots)


def smooth(D: LinkDiagram, i: int) -> LinkDiagram:
    """Orientation-respecting smoothing of crossing ``i``."""
    x = D.crossings[i]
    o_in, o_out = over_positions(D.signs[i])
    return _excise(D, {i}, [(x[0], x[o_out]), (x[o_in], x[2])])


# --- Reidemeister I / II ------------------------------------------------------


def _find_r1(D: LinkDiagram):
    for i, (x, s) in enumerate(zip(D.crossings, D.signs)):
        for p in range(4):
            if x[p] == x[(p + 1) % 4]:
                q, r = (p + 2) % 4, (p + 3) % 4
                if is_incoming(q, s):
                    return i, [(x[q], x[r])]
                return i, [(x[r], x[q])]
    return None


def _find_r2(D: LinkDiagram):
    where: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for i, x in enumerate(D.crossings):
        for p, a in enumerate(x):
            where[a].append((i, p))

    def other(i: int, p: int) -> tuple[int, int]:
        u, v = where[D.crossings[i][p]]
        return v if u == (i, p) else u

    for i, xi in enumerate(D.crossings):
        for p in range(4):
            # bigon face with corners (i, p) and (j, q), as in faces()
            j, q = other(i, (p + 1) % 4)
            if j == i or other(j, (q + 1) % 4) != (i, p):
                continue
            xj = D.crossings[j]
            e_a, e_b = xi[p], xi[(p + 1) % 4]
            if e_a == e_b:
                continue
            e1, e2 = (e_a, e_b) if p % 2 == 1 else (e_b, e_a)  # e1 at odd slot of i
            pj1, pj2 = xj.index(e1), xj.index(e2)
            if pj1 % 2 != 1 or pj2 % 2 != 0:
                continue  # alternating bigon
            joins = []
            for e, pi, pj in ((e1, xi.index(e1), pj1), (e2, xi.index(e2), pj2)):
                oi = xi[(pi + 2) % 4]
                oj = xj[(pj + 2) % 4]
                if is_incoming(pi, D.signs[i]):
                    joins.append((oj, oi))  # j -> e -> i
                else:
                    joins.append((oi, oj))
            return {i, j}, joins
    return None


def simplify(D: LinkDiagram) -> LinkDiagram:
    """Exhaustively remove Reidemeister I kinks and II bigons."""
    while True:
        r1 = _find_r1(D)
        if r1 is not None:
            i, joins = r1
            D = _excise(D, {i}, joins)
            continue
        r2 = _find_r2(D)
        if r2 is not None:
            drop, joins = r2
            D = _excise(D, drop, joins)
            continue
        return D.relabeled()


# --- faces and canonical form -----------------------------------------------


def faces(D: LinkDiagram) -> list[list[tuple[int, int]]]:
    """Faces as cycles of corners.

    Corner ``(i, p)`` is the region between positions ``p`` and ``p+1`` at
    crossing ``i``; it lies to the left of the arc at ``(i, p)`` when that arc
    leaves the crossing.
    """
    where: dict[int, list[tuple[int, int]]] = defaultdict(list)
    for i, x in enumerate(D.crossings):
        for p, a in enumerate(x):
            where[a].append((i, p))

    def other(i: int, p: int) -> tuple[int, int]:
        a, b = where[D.crossings[i][p]]
        return b if a == (i, p) else a

    seen = set()
    out = []
    for i in range(len(D.crossings)):
        for p in range(4):
            if (i, p) in seen:
                continue
            face = []
            cur = (i, p)
            while cur not in seen:
                seen.add(cur)
                face.append(cur)
                cur = other(cur[0], (cur[1] + 1) % 4)
            out.append(face)
    return out


def face_index(D: LinkDiagram) -> dict[tuple[int, int], int]:
    return {corner: k for k, f in enumerate(faces(D)) for corner in f}


def split_pieces(D: LinkDiagram) -> list[list[int]]:
    """Crossing indices grouped into pieces joined by shared arcs."""
    n = len(D.crossings)
    parent = list(range(n))

    def find(u):
        while parent[u] != u:
            parent[u] = parent[parent[u]]
            u = parent[u]
        return u

    first: dict[int, int] = {}
    for i, x in enumerate(D.crossings):
        for a in x:
            if a in first:
                parent[find(i)] = find(first[a])
            else:
                first[a] = i
    groups: dict[int, list[int]] = defaultdict(list)
    for i in range(n):
        groups[find(i)].append(i)
    return sorted(groups.values())


def _encode(D: LinkDiagram, idx: list[int], start: int, nxt: dict[int, int]) -> tuple:
    label: dict[int, int] = {}
    order: list[int] = []
    seen_x: set[int] = set()
    arc = start
    while True:
        while arc not in label:
            label[arc] = len(label) + 1
            i = D.head(arc)[0]  # traversal order, independent of crossing indices
            if i not in seen_x:
                seen_x.add(i)
                order.append(i)
            arc = nxt[arc]
        for i in order:
            free = [a for a in D.crossings[i] if a not in label]
            if free:
                arc = free[0]
                break
        else:
            break
    rows = sorted(
        (tuple(label[a] for a in D.crossings[i]), D.signs[i]) for i in idx
    )
    return tuple(rows)


def _start_candidates(D: LinkDiagram, arcs: list[int], nxt: dict[int, int]):
    """Start arcs whose signed Gauss word (read from the start) is minimal.

    The word records, at each arc head, the crossing position, its sign and
    the distance to the other visit of that crossing (-1 on another
    component); it is relabeling invariant, so restricting to minimisers
    keeps the key canonical.  Returns the candidates and whether the piece
    is a single component, in which case equal words give equal encodings.
    """
    comps: list[list[int]] = []
    seen: set[int] = set()
    for a in arcs:
        if a in seen:
            continue
        cyc = []
        while a not in seen:
            seen.add(a)
            cyc.append(a)
            a = nxt[a]
        comps.append(cyc)
    best = None
    cands: list[int] = []
    for cyc in comps:
        n = len(cyc)
        visits: dict[int, list[int]] = defaultdict(list)
        heads = []
        for k, a in enumerate(cyc):
            i, p = D.head(a)
            visits[i].append(k)
            heads.append((i, p))
        word = []
        for k, (i, p) in enumerate(heads):
            v = visits[i]
            gap = -1 if len(v) == 1 else ((v[1] - k) if v[0] == k else (v[0] - k)) % n
            word.append((p, D.signs[i], gap))
        for k in range(n):
            rot = (n, tuple(word[k:] + word[:k]))
            if best is None or rot < best:
                best, cands = rot, [(cyc[k], rot)]
            elif rot == best:
                cands.append((cyc[k], rot))
    return [a for a, _ in cands], len(comps) == 1


def canonical_key(D: LinkDiagram) -> str:
    """Relabeling-invariant string key for a diagram."""
    nxt = D.successor()
    pieces = []
    for idx in split_pieces(D):
        arcs = sorted({a for i in idx for a in D.crossings[i]})
        starts, single = _start_candidates(D, arcs, nxt)
        if single:
            starts = starts[:1]
        pieces.append(min(_encode(D, idx, a, nxt) for a in starts))
    pieces.sort()
    body = ";".join(
        ",".join("%d.%d.%d.%d%s" % (*x, "+" if s > 0 else "-") for x, s in piece)
        for piece in pieces
    )
    return f"{body}|{D.unknots}"
