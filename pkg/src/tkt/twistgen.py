"""Twist regions, the twisted diagrams D_n, and the band resolution K_inf."""

from __future__ import annotations

import json
from dataclasses import dataclass

from tkt.linkdiag import LinkDiagram, PDError, components, face_index, load_diagram


@dataclass(frozen=True)
class TwistRegion:
    """Strands met by a chord across the twisting disk, in order along it.

    ``direction`` is +1 when the strand crosses the chord the same way as the
    disk co-orientation.
    """

    strands: tuple[tuple[int, int], ...]

    def __post_init__(self):
        strands = tuple((int(a), int(d)) for a, d in self.strands)
        object.__setattr__(self, "strands", strands)
        if len(strands) < 2:
            raise PDError("a twist region needs at least two strands")
        if any(d not in (1, -1) for _, d in strands):
            raise PDError("strand directions must be +1 or -1")
        arcs = [a for a, _ in strands]
        if len(set(arcs)) != len(arcs):
            raise PDError("twist region strands must be distinct arcs")

    @property
    def eta(self) -> int:
        return len(self.strands)

    @property
    def omega(self) -> int:
        return abs(sum(d for _, d in self.strands))

    @property
    def arcs(self) -> list[int]:
        return [a for a, _ in self.strands]


@dataclass(frozen=True)
class TwistFamily:
    base: LinkDiagram
    region: TwistRegion

    def __post_init__(self):
        missing = set(self.region.arcs) - set(self.base.arcs)
        if missing:
            raise PDError(f"region arcs {sorted(missing)} are not in the diagram")


def region_from_json(obj: dict | str) -> TwistRegion:
    if isinstance(obj, str):
        obj = json.loads(obj)
    return TwistRegion(tuple(tuple(s) for s in obj["strands"]))


def region_to_json(R: TwistRegion) -> dict:
    return {"strands": [list(s) for s in R.strands]}


def load_family(diagram_path: str, region_path: str) -> TwistFamily:
    with open(region_path) as fh:
        region = region_from_json(fh.read())
    return TwistFamily(load_diagram(diagram_path), region)


def region_stats(F: TwistFamily) -> tuple[int, int, bool]:
    """(region width eta, winding omega, coherent)."""
    eta, omega = F.region.eta, F.region.omega
    return eta, omega, omega == eta


def _local_frame(F: TwistFamily) -> list[int]:
    """Strand directions in an orientation-preserving local frame.

    Consecutive strands must share the face the chord passes through.  The
    frame has x increasing along the strand list; if the supplied
    co-orientation makes it left-handed all directions are flipped, which
    leaves eta, omega and coherence unchanged.
    """
    D = F.base
    fi = face_index(D)

    def sides(arc: int) -> tuple[int, int]:
        i, p = D.tail(arc)
        return fi[(i, p)], fi[(i, (p - 1) % 4)]  # (left, right)

    strands = F.region.strands
    for flip in (1, -1):
        ok = True
        for (a, da), (b, db) in zip(strands, strands[1:]):
            la, ra = sides(a)
            lb, rb = sides(b)
            plus_a = ra if da * flip > 0 else la
            minus_b = lb if db * flip > 0 else rb
            if plus_a != minus_b:
                ok = False
                break
        if ok:
            return [d * flip for _, d in strands]
    raise PDError("region strands are not consecutive along a chord of the diagram")


def _tangle_word(eta: int, n: int) -> list[tuple[int, bool]]:
    """Geometric crossings (left position, over-from-bottom-left) of n full twists."""
    word = []
    if n >= 0:
        for _ in range(n * eta):
            word.extend((j, True) for j in range(eta - 1))
    else:
        for _ in range(-n * eta):
            word.extend((j, False) for j in reversed(range(eta - 1)))
    return word


def oriented_crossing(
    labels: list[int], incoming: list[bool], over_is_diagonal_02: bool
) -> tuple[tuple[int, int, int, int], int]:
    """PD tuple and sign from four endpoints listed counterclockwise.

    Endpoints 0 and 2 form one strand, 1 and 3 the other; the flag says which
    of the two passes over.
    """
    under = (1, 3) if over_is_diagonal_02 else (0, 2)
    over = (0, 2) if over_is_diagonal_02 else (1, 3)
    u = under[0] if incoming[under[0]] else under[1]
    o = over[0] if incoming[over[0]] else over[1]
    tup = tuple(labels[(u + k) % 4] for k in range(4))
    sign = 1 if (o - u) % 4 == 3 else -1
    return tup, sign


def insert_braid_tangle(
    D: LinkDiagram,
    strands: list[int],
    dirs: list[int],
    word: list[tuple[int, bool]],
) -> tuple[LinkDiagram, list[int]]:
    """Cut ``strands`` along a chord and splice in a geometric braid tangle.

    ``dirs[j]`` is +1 when strand j runs from the bottom of the tangle to the
    top.  The word must induce the identity permutation.  Returns the new
    diagram and, per strand, the label of the arc leaving the bottom of the
    tangle region (suitable for a chord just below it).
    """
    xs = [list(x) for x in D.crossings]
    signs = list(D.signs)
    fresh = max(D.arcs, default=0)

    def new_label() -> int:
        nonlocal fresh
        fresh += 1
        return fresh

    eta = len(strands)
    bottom, top = [], []
    for s, d in zip(strands, dirs):
        h = new_label()
        i, p = D.head(s)
        xs[i][p] = h
        bottom.append(s if d > 0 else h)
        top.append(h if d > 0 else s)

    frontier = list(bottom)
    ident = list(range(eta))
    new_xs = []
    for j, over_bl in word:
        a, b = ident[j], ident[j + 1]
        tl, tr = new_label(), new_label()
        labels = [frontier[j], frontier[j + 1], tr, tl]
        incoming = [dirs[a] > 0, dirs[b] > 0, dirs[a] < 0, dirs[b] < 0]
        new_xs.append(oriented_crossing(labels, incoming, over_bl))
        frontier[j], frontier[j + 1] = tl, tr
        ident[j], ident[j + 1] = b, a
    if ident != list(range(eta)):
        raise ValueError("tangle word must be a pure braid")
    rename = {f: t for f, t in zip(frontier, top) if f != t}
    for tup, sign in new_xs:
        xs.append([rename.get(a, a) for a in tup])
        signs.append(sign)
    out = LinkDiagram(tuple(tuple(x) for x in xs), tuple(signs), D.unknots)
    return out, bottom


def twist_with_region(F: TwistFamily, n: int) -> tuple[LinkDiagram, TwistFamily]:
    """D_n together with the family whose chord sits just below the new twists."""
    if n == 0:
        return F.base, F
    dirs = _local_frame(F)
    word = _tangle_word(F.region.eta, n)
    D, bottom = insert_braid_tangle(F.base, F.region.arcs, dirs, word)
    region = TwistRegion(tuple((b, d) for b, (_, d) in zip(bottom, F.region.strands)))
    return D, TwistFamily(D, region)


def twist(F: TwistFamily, n: int) -> LinkDiagram:
    """Diagram D_n with n full twists (right-handed for n > 0) in the region."""
    return twist_with_region(F, n)[0]


def resolve(F: TwistFamily) -> LinkDiagram:
    """Band the two oppositely oriented region strands together (K_inf)."""
    eta, omega, _ = region_stats(F)
    if eta != 2 or omega != 0:
        raise PDError(f"resolution needs eta = 2, omega = 0 (got {eta}, {omega})")
    _local_frame(F)
    D = F.base
    (s1, _), (s2, _) = F.region.strands
    xs = [list(x) for x in D.crossings]
    i1, p1 = D.head(s1)
    i2, p2 = D.head(s2)
    xs[i1][p1] = s2
    xs[i2][p2] = s1
    return LinkDiagram(tuple(tuple(x) for x in xs), D.signs, D.unknots)


def crossing_ub_sequence(F: TwistFamily, N: int) -> list[int]:
    """c(D_n) for n = 0..N."""
    if N < 0:
        raise ValueError("N must be non-negative")
    eta = F.region.eta
    c0 = F.base.crossing_count
    return [c0 + n * eta * (eta - 1) for n in range(N + 1)]


def mirror_family(F: TwistFamily) -> TwistFamily:
    """Mirror image of the base with the same region.

    Mirroring swaps over and under but keeps the plane and orientations, so
    the chord and directions carry over unchanged; labels are preserved by
    :func:`tkt.linkdiag.mirror`.
    """
    from tkt.linkdiag import mirror

    return TwistFamily(mirror(F.base), F.region)


def check_knot_base(F: TwistFamily) -> None:
    r, _ = components(F.base)
    if r != 1:
        raise PDError(f"twist family base must be a knot (has {r} components)")
