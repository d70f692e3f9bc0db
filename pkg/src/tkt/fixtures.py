"""Small named diagrams and twist families used by tests, scripts and the CLI docs."""

from __future__ import annotations

from tkt.braids import BraidFamily, BraidWord, closure, family_twist_region
from tkt.laurent import LaurentPoly2
from tkt.linkdiag import LinkDiagram, parse_pd, unknot
from tkt.twistgen import TwistFamily, resolve

# figure-eight knot with a meridian, as a polynomial in (l, m)
FIG8_MERIDIAN_HOMFLY = LaurentPoly2.from_list(
    [
        [1, 3, -1],
        [3, 1, 2], [1, 1, 2], [-1, 1, 1],
        [5, -1, -1], [3, -1, -2], [1, -1, -2], [-1, -1, -1],
    ]
)


def hopf() -> LinkDiagram:
    return parse_pd("PD[X(4,1,3,2),X(2,3,1,4)]")


def trefoil() -> LinkDiagram:
    """Standard table PD code; this one is the left-handed trefoil (writhe -3)."""
    return parse_pd("PD[X(1,4,2,5),X(3,6,4,1),X(5,2,6,3)]")


def figure_eight() -> LinkDiagram:
    return parse_pd("PD[X(4,2,5,1),X(8,6,1,5),X(6,3,7,4),X(2,7,3,8)]")


def torus_2(k: int) -> LinkDiagram:
    """Closure of sigma_1^k."""
    return closure(BraidWord(2, (1,) * k))


def clasp_braid_family() -> BraidFamily:
    """Unknot with a clasp whose banding is the figure-eight plus a meridian."""
    return BraidFamily(BraidWord(3, (-2, -2)), BraidWord(3, (-1, 2, -1, 2)), 1, 1)


def clasp_family() -> TwistFamily:
    return family_twist_region(clasp_braid_family())


def clasp_resolution() -> LinkDiagram:
    return resolve(clasp_family())


def coherent_pair_braid_family() -> BraidFamily:
    """Two parallel strands of the unknot; D_n closes sigma_1^(2n+1)."""
    return BraidFamily(BraidWord(2, (1,)), BraidWord(2, ()), 2, 0)


def coherent_pair_family() -> TwistFamily:
    return family_twist_region(coherent_pair_braid_family())


def cable_braid_family(q: int = 3, p: int = 1) -> BraidFamily:
    """Torus knots T(q, p + qn): twists on all q strands of (sigma_1...sigma_{q-1})^p."""
    word = tuple(g for _ in range(p) for g in range(1, q))
    return BraidFamily(BraidWord(q, word), BraidWord(q, ()), q, 0)


def cable_family(q: int = 3, p: int = 1) -> TwistFamily:
    return family_twist_region(cable_braid_family(q, p))


def named_diagrams() -> dict[str, LinkDiagram]:
    return {
        "unknot": unknot(),
        "hopf": hopf(),
        "trefoil": trefoil(),
        "figure_eight": figure_eight(),
        "torus_2_5": torus_2(5),
        "fig8_meridian": clasp_resolution(),
    }


def named_families() -> dict[str, tuple[TwistFamily, BraidFamily]]:
    return {
        "clasp": (clasp_family(), clasp_braid_family()),
        "coherent_pair": (coherent_pair_family(), coherent_pair_braid_family()),
        "cable3": (cable_family(3), cable_braid_family(3)),
    }
