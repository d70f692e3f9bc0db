"""Integer bounds on crossing number, braid index and genus for twist families."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from tkt.laurent import LaurentPoly2
from tkt.linkdiag import LinkDiagram, components, over_positions


@dataclass(frozen=True)
class SeifertData:
    s: int
    chi: int
    canonical_genus: int | None  # only defined for knots


def seifert_data(D: LinkDiagram) -> SeifertData:
    """Seifert circle count, Euler characteristic of the Seifert surface, canonical genus."""
    nxt: dict[int, int] = {}
    for x, sign in zip(D.crossings, D.signs):
        o_in, o_out = over_positions(sign)
        # under-in continues along the over-out arc and vice versa
        nxt[x[0]] = x[o_out]
        nxt[x[o_in]] = x[2]
    seen: set[int] = set()
    s = D.unknots
    for a in nxt:
        if a in seen:
            continue
        s += 1
        while a not in seen:
            seen.add(a)
            a = nxt[a]
    c = D.crossing_count
    chi = s - c
    r, _ = components(D)
    g = (c - s + 1) // 2 if r == 1 else None
    return SeifertData(s, chi, g)


def mfw_lb(P: LaurentPoly2) -> int:
    """Braid index lower bound ceil((E - e) / 2) + 1."""
    if P.is_zero():
        raise ValueError("zero polynomial")
    E, e = P.l_degrees()
    return -((e - E) // 2) + 1


def ohyama_lb(b: int) -> int:
    if b < 1:
        raise ValueError(f"braid index bound must be >= 1 (got {b})")
    return 2 * b - 2


def diao_lb(g_lb: int, b_lb: int) -> int:
    if g_lb < 0 or b_lb < 1:
        raise ValueError("need g_lb >= 0 and b_lb >= 1")
    return max(0, 2 * g_lb - 1 + b_lb)


# --- meridional norm -------------------------------------------------------------


@dataclass(frozen=True)
class NormBounds:
    lower: int
    upper: int
    exact: bool

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError("lower bound exceeds upper bound")
        if self.exact and self.lower != self.upper:
            raise ValueError("exact bounds must coincide")

    def values(self) -> list[int]:
        """Admissible norms; they share the parity of the bounds."""
        return list(range(self.lower, self.upper + 1, 2))


def _check_pair(eta: int, omega: int, what: str = "") -> None:
    if eta < 0 or omega < 0:
        raise ValueError(f"{what}wrapping and winding numbers must be non-negative")
    if omega > eta:
        raise ValueError(f"{what}winding number {omega} exceeds wrapping number {eta}")
    if (eta - omega) % 2:
        raise ValueError(f"{what}wrapping and winding numbers must have equal parity")


def meridional_norm_bounds(eta: int, omega: int) -> NormBounds:
    _check_pair(eta, omega)
    if eta < 2:
        raise ValueError("wrapping number must be at least 2")
    if omega == eta or eta == omega + 2:
        return NormBounds(eta - 1, eta - 1, True)
    return NormBounds(omega + 1, eta - 1, False)


@dataclass(frozen=True)
class GenusSlope:
    lower: int
    upper: int
    exact: bool
    intercept: int | None
    note: str = "for sufficiently large n"

    def predict(self, n: int) -> tuple[int, int] | None:
        """Range of 2g(K_n) when the intercept is known."""
        if self.intercept is None:
            return None
        return self.intercept + n * self.lower, self.intercept + n * self.upper


def genus_slope_report(omega: int, x: NormBounds, G_hint: int | None = None) -> GenusSlope:
    """Slope of 2g(K_n) = G + n*omega*x over the admissible norms."""
    if omega < 0:
        raise ValueError("winding number must be non-negative")
    return GenusSlope(omega * x.lower, omega * x.upper, x.exact or omega == 0, G_hint)


# --- satellites ------------------------------------------------------------------


@dataclass(frozen=True)
class SatelliteData:
    eta_k: int
    omega_k: int
    eta_P: int
    omega_P: int

    def __post_init__(self):
        _check_pair(self.eta_k, self.omega_k, "companion: ")
        _check_pair(self.eta_P, self.omega_P, "pattern: ")

    @property
    def eta_K(self) -> int:
        return self.eta_k * self.eta_P

    @property
    def omega_K(self) -> int:
        return self.omega_k * self.omega_P


def satellite_wrap_wind(d: SatelliteData) -> tuple[int, int]:
    return d.eta_K, d.omega_K


@dataclass(frozen=True)
class SatelliteVerdict:
    applicable: bool
    omega_k_positive: bool
    omega_P_threshold: bool
    eta_P_at_least_2: bool
    slope_inequality: bool | None
    square_clause: bool
    reason: str = ""

    @property
    def hypotheses(self) -> bool:
        return self.omega_k_positive and self.omega_P_threshold and self.eta_P_at_least_2


def satellite_slope_check(d: SatelliteData) -> SatelliteVerdict:
    """Evaluate the satellite hypotheses and the eventual crossing inequalities.

    Thresholds use exact rationals.  The slope inequality compares
    omega_K * x_K (smallest admissible norm) against eta_k(eta_k - 1).
    """
    if d.omega_k == 0:
        return SatelliteVerdict(
            False, False, False, d.eta_P >= 2, None, False,
            "companion winding number 0: hypotheses unsatisfiable",
        )
    thresh = d.omega_P >= Fraction(d.eta_k, d.omega_k)
    eta_ok = d.eta_P >= 2
    ineq = None
    if d.eta_K >= 2:
        x = meridional_norm_bounds(d.eta_K, d.omega_K)
        ineq = d.omega_K * x.lower > d.eta_k * (d.eta_k - 1)
    hyp = thresh and eta_ok
    square = hyp and bool(ineq) and d.omega_k == d.eta_k and d.omega_P >= 2
    reason = "" if hyp else "hypotheses fail"
    return SatelliteVerdict(True, True, thresh, eta_ok, ineq, square, reason)
