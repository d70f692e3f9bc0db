"""Braid words, their closures, and twisting in closed-braid normal form.

A family is given by two N-braids and the numbers p, q of strands meeting the
twisting disk on either side of the braid axis: p braid strands going up
between the two braids and the q innermost return strands of the closure
going down.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from tkt.linkdiag import LinkDiagram, PDError
from tkt.twistgen import _tangle_word, oriented_crossing


@dataclass(frozen=True)
class BraidWord:
    strands: int
    word: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(int(g) for g in self.word))
        if self.strands < 1:
            raise PDError("a braid needs at least one strand")
        for g in self.word:
            if g == 0 or abs(g) >= self.strands:
                raise PDError(f"generator {g} out of range for {self.strands} strands")

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise PDError("strand counts differ")
        return BraidWord(self.strands, self.word + other.word)

    def permutation(self) -> list[int]:
        """Position reached at the top by the strand starting at each position."""
        pos = list(range(self.strands))  # pos[strand] = lane
        at = list(range(self.strands))  # at[lane] = strand
        for g in self.word:
            j = abs(g) - 1
            a, b = at[j], at[j + 1]
            at[j], at[j + 1] = b, a
            pos[a], pos[b] = j + 1, j
        return pos

    def cycle_count(self) -> int:
        perm = self.permutation()
        seen = set()
        k = 0
        for s in range(self.strands):
            if s in seen:
                continue
            k += 1
            while s not in seen:
                seen.add(s)
                s = perm[s]
        return k


def braid_from_json(obj: dict | str) -> BraidWord:
    if isinstance(obj, str):
        obj = json.loads(obj)
    return BraidWord(int(obj["strands"]), tuple(obj["word"]))


def braid_to_json(b: BraidWord) -> dict:
    return {"strands": b.strands, "word": list(b.word)}


def lane_diagram(
    dirs: list[int],
    word: list[tuple[int, bool]],
    caps: dict[int, int] | None = None,
) -> LinkDiagram:
    return _lane_build(dirs, word, caps)[0]


def _lane_build(
    dirs: list[int],
    word: list[tuple[int, bool]],
    caps: dict[int, int] | None = None,
    mark: int | None = None,
) -> tuple[LinkDiagram, list[int]]:
    """Diagram of vertical lanes carrying a geometric braid-like tangle.

    ``dirs[j]`` is +1 if the strand entering lane ``j`` at the bottom runs up.
    Each word entry ``(j, over_bl)`` crosses lanes j and j+1, with the strand
    from the bottom-left passing over when ``over_bl``.  Lanes listed in
    ``caps`` (j -> k) are joined by nested caps at the top and cups at the
    bottom; every other lane is closed around the outside to itself, as in a
    braid closure.
    """
    caps = dict(caps or {})
    width = len(dirs)
    paired = {}
    for j, k in caps.items():
        paired[j], paired[k] = k, j

    parent: dict[int, int] = {}

    def find(a: int) -> int:
        while parent.setdefault(a, a) != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    fresh = 0

    def new_label() -> int:
        nonlocal fresh
        fresh += 1
        return fresh

    bottom = [0] * width
    for j in range(width):
        if j in paired and paired[j] < j:
            bottom[j] = bottom[paired[j]]
        else:
            bottom[j] = new_label()

    frontier = list(bottom)
    ident = list(range(width))
    raw = []
    marked: list[int] = []
    for step, (j, over_bl) in enumerate(word):
        if step == mark:
            marked = list(frontier)
        a, b = ident[j], ident[j + 1]
        tl, tr = new_label(), new_label()
        labels = [frontier[j], frontier[j + 1], tr, tl]
        incoming = [dirs[a] > 0, dirs[b] > 0, dirs[a] < 0, dirs[b] < 0]
        raw.append(oriented_crossing(labels, incoming, over_bl))
        frontier[j], frontier[j + 1] = tl, tr
        ident[j], ident[j + 1] = b, a
    if mark is not None and mark >= len(word):
        marked = list(frontier)

    for j in range(width):
        if j in paired:
            k = paired[j]
            parent[find(frontier[j])] = find(frontier[k])
        else:
            parent[find(frontier[j])] = find(bottom[j])

    used = set()
    xs, signs = [], []
    for tup, s in raw:
        t = tuple(find(a) for a in tup)
        used.update(t)
        xs.append(t)
        signs.append(s)
    all_labels = {find(a) for a in range(1, fresh + 1)}
    unknots = len(all_labels - used)
    mapping: dict[int, int] = {}
    for t in xs:
        for a in t:
            mapping.setdefault(a, len(mapping) + 1)
    D = LinkDiagram(
        tuple(tuple(mapping[a] for a in t) for t in xs), tuple(signs), unknots
    )
    return D, [mapping.get(find(a), 0) for a in marked]


def _braid_geometric(word: tuple[int, ...], offset: int = 0) -> list[tuple[int, bool]]:
    return [(abs(g) - 1 + offset, g > 0) for g in word]


def closure(beta: BraidWord) -> LinkDiagram:
    """Closure of a braid with strands running up; sigma_i is a positive crossing."""
    return lane_diagram([1] * beta.strands, _braid_geometric(beta.word))


@dataclass(frozen=True)
class BraidFamily:
    beta1: BraidWord
    beta2: BraidWord
    p: int
    q: int

    def __post_init__(self):
        N = self.beta1.strands
        if self.beta2.strands != N:
            raise PDError("beta1 and beta2 must have the same strand count")
        if self.p < 0 or self.q < 0:
            raise PDError("p and q must be non-negative")
        if self.p > N or self.q > N:
            raise PDError("p and q cannot exceed the strand count")
        if self.p + self.q < 2:
            raise PDError("the twisting disk must meet at least two strands")

    @property
    def strands(self) -> int:
        return self.beta1.strands

    @property
    def eta(self) -> int:
        return self.p + self.q

    @property
    def omega(self) -> int:
        return abs(self.p - self.q)


def family_from_json(obj: dict | str) -> BraidFamily:
    if isinstance(obj, str):
        obj = json.loads(obj)
    return BraidFamily(
        braid_from_json(obj["beta1"]),
        braid_from_json(obj["beta2"]),
        int(obj["p"]),
        int(obj["q"]),
    )


def family_to_json(fam: BraidFamily) -> dict:
    return {
        "beta1": braid_to_json(fam.beta1),
        "beta2": braid_to_json(fam.beta2),
        "p": fam.p,
        "q": fam.q,
    }


def family_twist_region(fam: BraidFamily):
    """The n = 0 diagram as a :class:`TwistFamily` whose region sits between beta1 and beta2."""
    from tkt.twistgen import TwistFamily, TwistRegion

    N, p, q = fam.strands, fam.p, fam.q
    dirs = [1] * N + [-1] * q
    caps = {N - 1 - t: N + t for t in range(q)}
    word = _braid_geometric(fam.beta1.word) + _braid_geometric(fam.beta2.word)
    D, marked = _lane_build(dirs, word, caps, mark=len(fam.beta1.word))
    lanes = range(N - p, N + q)
    if any(marked[j] == 0 for j in lanes):
        raise PDError("twist region runs along a crossingless component")
    return TwistFamily(D, TwistRegion(tuple((marked[j], dirs[j]) for j in lanes)))


def family_diagram(fam: BraidFamily, n: int) -> LinkDiagram:
    """Diagram-side D_n: n full twists on the chord through both strand groups.

    Lanes 0..N-1 carry the braid; lanes N..N+q-1 are the innermost return
    strands (lane N is the return of strand N-1) joined to their braid lanes by
    caps and cups.  The twists sit between beta1 and beta2 on lanes
    N-p..N+q-1.
    """
    N, p, q = fam.strands, fam.p, fam.q
    dirs = [1] * N + [-1] * q
    caps = {N - 1 - t: N + t for t in range(q)}
    word = _braid_geometric(fam.beta1.word)
    word += [(j + N - p, o) for j, o in _tangle_word(p + q, n)]
    word += _braid_geometric(fam.beta2.word)
    return lane_diagram(dirs, word, caps)


# --- braid words for the twisted family -----------------------------------------


def _full_twist(start: int, k: int, power: int = 1) -> list[int]:
    """Delta^2 on strands start..start+k-1 (1-based generator indices)."""
    if k < 2 or power == 0:
        return []
    w = [g for _ in range(k) for g in range(start, start + k - 1)] * abs(power)
    return w if power > 0 else _inverse(w)


def _inverse(w: list[int]) -> list[int]:
    return [-g for g in reversed(w)]


def _band_cross(start: int, a: int, b: int) -> list[int]:
    """Group of a strands moves right over the next b strands."""
    return [g for i in reversed(range(a)) for g in range(start + i, start + i + b)]


def _band_twist(start: int, a: int, b: int) -> list[int]:
    """Full twist of an a-group around the adjacent b-group, groups kept untwisted."""
    return (
        _full_twist(start, a + b)
        + _full_twist(start, a, -1)
        + _full_twist(start + a, b, -1)
    )


def braid_family(beta1: BraidWord, beta2: BraidWord, p: int, q: int, n: int) -> BraidWord:
    """Closed-braid form of K_n on N + n*q strands.

    The p up-strands at the right of the braid get n internal full twists and
    then one loop: under the q-groups already added, a negative band twist
    with the newest q-group, and back over.  After beta2 the q innermost
    strands cross over the n*q new strands before closing up.
    """
    fam = BraidFamily(beta1, beta2, p, q)
    if n < 0:
        raise PDError("braid_family needs n >= 0")
    N = fam.strands
    s = N - p + 1
    w1 = _full_twist(s, p, n)
    if q and n:
        m = (n - 1) * q
        w1 += [-g for g in _band_cross(s, p, m)]
        w1 += _inverse(_band_twist(s + m, p, q))
        w1 += [-g for g in _band_cross(s, m, p)]
    w2 = _band_cross(N - q + 1, q, n * q) if q and n else []
    return BraidWord(N + n * q, beta1.word + tuple(w1) + beta2.word + tuple(w2))


def braid_family_of(fam: BraidFamily, n: int) -> BraidWord:
    return braid_family(fam.beta1, fam.beta2, fam.p, fam.q, n)


def braid_index_ub_sequence(fam: BraidFamily, n_max: int) -> list[int]:
    """Strand counts N + n*q for n = 0..n_max."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    return [fam.strands + n * fam.q for n in range(n_max + 1)]
