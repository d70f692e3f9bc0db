"""Per-n reports for twist families: bounds, slope estimates and verdicts."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from tkt.bounds import (
    diao_lb,
    meridional_norm_bounds,
    mfw_lb,
    ohyama_lb,
    seifert_data,
)
from tkt.braids import BraidFamily, braid_family_of, closure
from tkt.laurent import LaurentPoly2
from tkt.linkdiag import PDError
from tkt.skein import (
    HomflyEngine,
    HypothesisViolated,
    ResourceCapExceeded,
    alexander_genus_lb,
    homfly,
    thm51_check,
    twist_closed_form,
)
from tkt.twistgen import (
    TwistFamily,
    check_knot_base,
    crossing_ub_sequence,
    mirror_family,
    region_stats,
    resolve,
    twist,
)

COLUMNS = (
    "n", "c_ub", "s", "g_c", "E", "e",
    "mfw_lb", "ohyama_lb", "alex_g_lb", "diao_lb", "braid_ub",
)
LOWER_CROSSING = ("ohyama_lb", "diao_lb")
DIRECT_WINDOW = 4
BRAID_CHECK_WINDOW = 3


@dataclass(frozen=True)
class Row:
    n: int
    c_ub: int
    s: int
    g_c: int
    E: int
    e: int
    mfw_lb: int
    ohyama_lb: int
    alex_g_lb: int
    diao_lb: int
    braid_ub: int


@dataclass
class StableReport:
    eta: int
    omega: int
    mode: str
    rows: list[Row] = field(default_factory=list)
    slopes: dict = field(default_factory=dict)
    verdicts: dict = field(default_factory=dict)
    capped_at: int | None = None

    def column(self, name: str) -> list[int]:
        return [getattr(r, name) for r in self.rows]

    def to_dict(self) -> dict:
        return {
            "eta": self.eta,
            "omega": self.omega,
            "mode": self.mode,
            "capped_at": self.capped_at,
            "rows": [asdict(r) for r in self.rows],
            "slopes": self.slopes,
            "verdicts": self.verdicts,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "StableReport":
        return cls(
            d["eta"], d["omega"], d["mode"],
            [Row(**r) for r in d["rows"]],
            d["slopes"], d["verdicts"], d["capped_at"],
        )


def slope_estimate(seq: list[int]) -> tuple[Fraction, int] | None:
    """Eventual constant difference and the index where it starts, or None.

    At least two consecutive equal differences are required.
    """
    if len(seq) < 3:
        raise ValueError("need at least three values")
    diffs = [b - a for a, b in zip(seq, seq[1:])]
    last = diffs[-1]
    if diffs[-2] != last:
        return None
    onset = len(diffs) - 1
    while onset > 0 and diffs[onset - 1] == last:
        onset -= 1
    return Fraction(last), onset


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _row(n: int, D, P: LaurentPoly2, c_ub: int, braid_ub: int | None) -> Row:
    sd = seifert_data(D)
    E, e = P.l_degrees()
    b = mfw_lb(P)
    g = alexander_genus_lb(P)
    ub = sd.s if braid_ub is None else min(sd.s, braid_ub)
    return Row(n, c_ub, sd.s, sd.canonical_genus, E, e, b, ohyama_lb(b), g, diao_lb(g, b), ub)


def _check_sandwich(r: Row) -> None:
    for name in LOWER_CROSSING:
        if getattr(r, name) > r.c_ub:
            raise AssertionError(f"{name} = {getattr(r, name)} exceeds c_ub = {r.c_ub} at n = {r.n}")
    if r.mfw_lb > r.braid_ub:
        raise AssertionError(f"mfw_lb exceeds braid_ub at n = {r.n}")
    if 2 * r.alex_g_lb > 2 * r.g_c:
        raise AssertionError(f"genus lower bound exceeds canonical genus at n = {r.n}")


def family_report(
    F: TwistFamily,
    N: int,
    mode: str = "diagram",
    braid: BraidFamily | None = None,
    engine: HomflyEngine | None = None,
) -> StableReport:
    """Rows for n = 0..N (or 0..-N by mirroring when N < 0), slopes and verdicts.

    ``mode`` chooses where HOMFLYPT comes from: ``diagram`` twists the PD
    diagram, ``braid`` closes the braid-family words, ``both`` uses the
    diagram and cross-checks the braid closures for small n.  Braid modes
    also bound the braid index by N + n q.
    """
    if mode not in ("diagram", "braid", "both"):
        raise ValueError(f"unknown mode {mode!r}")
    if abs(N) < 2:
        raise ValueError("N must be at least 2 in absolute value")
    if mode != "diagram" and braid is None:
        raise PDError(f"mode {mode!r} needs a braid family")
    check_knot_base(F)
    if N < 0:
        if mode != "diagram":
            raise PDError("negative twists are only supported in diagram mode")
        rep = family_report(mirror_family(F), -N, mode, None, engine)
        return _mirror_report(rep)

    eta, omega, _ = region_stats(F)
    if engine is None:
        engine = HomflyEngine()
    rep = StableReport(eta, omega, mode)
    c_ubs = crossing_ub_sequence(F, N)
    closed = None
    if eta == 2 and omega == 0:
        closed = (homfly(F.base, engine), homfly(resolve(F), engine))

    for n in range(N + 1):
        try:
            D = twist(F, n)
            if D.crossing_count != c_ubs[n]:
                raise AssertionError("twisted diagram has an unexpected crossing count")
            P = _homfly_at(F, n, mode, braid, engine, closed, D)
        except ResourceCapExceeded:
            rep.capped_at = n
            break
        bub = None if braid is None else braid.strands + n * braid.q
        row = _row(n, D, P, c_ubs[n], bub)
        _check_sandwich(row)
        rep.rows.append(row)
    if not rep.rows:
        raise ResourceCapExceeded("no rows computed before the node cap")
    _fill_slopes_and_verdicts(rep, closed)
    return rep


def _homfly_at(F, n, mode, braid, engine, closed, D) -> LaurentPoly2:
    if mode == "braid":
        return homfly(closure(braid_family_of(braid, n)), engine)
    if closed is not None and n > DIRECT_WINDOW:
        P = twist_closed_form(closed[0], closed[1], n)
    else:
        P = homfly(D, engine)
        if closed is not None and P != twist_closed_form(closed[0], closed[1], n):
            raise AssertionError(f"closed form disagrees with the skein engine at n = {n}")
    if mode == "both" and n <= BRAID_CHECK_WINDOW:
        Pb = homfly(closure(braid_family_of(braid, n)), engine)
        if Pb != P:
            raise AssertionError(f"braid closure disagrees with the diagram at n = {n}")
    return P


def _fill_slopes_and_verdicts(rep: StableReport, closed) -> None:
    eta, omega = rep.eta, rep.omega
    slopes = {}
    if len(rep.rows) >= 3:
        for name in COLUMNS[1:]:
            est = slope_estimate(rep.column(name))
            slopes[name] = (
                {"slope": _fmt(est[0]), "onset": rep.rows[est[1]].n}
                if est else "not stabilized"
            )
    rep.slopes = slopes

    def slope(name):
        v = slopes.get(name)
        return Fraction(v["slope"]) if isinstance(v, dict) else None

    verdicts = {}
    target = eta * (eta - 1)
    upper = slope("c_ub")
    lowers = [s for s in (slope(n) for n in LOWER_CROSSING) if s is not None]
    lower = max(lowers) if lowers else None
    verdicts["c_s"] = _agree(lower, upper)
    verdicts["c_s_vs_eta_eta_minus_1"] = (
        f"consistent with eta(eta-1) = {target}" if lower is not None and lower == target == upper
        else f"upper slope {_fmt(upper) if upper is not None else '?'} vs eta(eta-1) = {target}; lower slope {_fmt(lower) if lower is not None else '?'}"
    )
    verdicts["b_s"] = _agree(slope("mfw_lb"), slope("braid_ub"))
    if eta >= 2:
        x = meridional_norm_bounds(eta, omega)
        g = slope("alex_g_lb")
        lo, hi = omega * x.lower, omega * x.upper
        if g is None:
            verdicts["genus"] = "alex_g_lb not stabilized"
        elif lo <= 2 * g <= hi:
            verdicts["genus"] = f"2g slope {_fmt(2 * g)} consistent with omega*x in [{lo}, {hi}]"
        else:
            verdicts["genus"] = f"2g lower-bound slope {_fmt(2 * g)} outside omega*x in [{lo}, {hi}]"
    if closed is not None:
        try:
            v = thm51_check(*closed)
            verdicts["degree_test"] = (
                {"applicable": True, "E0": v.E0, "E_inf": v.E_inf, **v.conclusions}
                if v.applicable else {"applicable": False, "E0": v.E0, "E_inf": v.E_inf}
            )
        except HypothesisViolated as exc:  # pragma: no cover - thm51_check does not raise
            verdicts["degree_test"] = {"applicable": False, "reason": str(exc)}
    rep.verdicts = verdicts


def _agree(lower: Fraction | None, upper: Fraction | None) -> dict:
    if lower is None or upper is None:
        return {"status": "not stabilized"}
    if lower == upper:
        return {
            "status": f"upper and lower slopes agree at value {_fmt(lower)}",
            "value": _fmt(lower),
        }
    return {"status": f"consistent with a slope in [{_fmt(lower)}, {_fmt(upper)}]",
            "lower": _fmt(lower), "upper": _fmt(upper)}


def _mirror_report(rep: StableReport) -> StableReport:
    """Relabel a report for the mirror family as the report for negative twists.

    Mirroring sends l to 1/l, so (E, e) becomes (-e, -E); the rest is unchanged.
    """
    rows = [
        Row(-r.n, r.c_ub, r.s, r.g_c, -r.e, -r.E, r.mfw_lb, r.ohyama_lb,
            r.alex_g_lb, r.diao_lb, r.braid_ub)
        for r in rep.rows
    ]
    out = StableReport(rep.eta, rep.omega, rep.mode, rows, {}, {}, rep.capped_at)
    if rep.capped_at is not None:
        out.capped_at = -rep.capped_at
    _fill_slopes_and_verdicts(out, None)
    # slopes are per unit |n|
    out.verdicts["direction"] = "negative twists, computed on the mirror family"
    return out


# --- emission --------------------------------------------------------------------


def to_csv(rep: StableReport) -> str:
    if not rep.rows:
        raise ValueError("empty report")
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(COLUMNS)
    for r in rep.rows:
        w.writerow([getattr(r, c) for c in COLUMNS])
    return buf.getvalue()


def to_json(rep: StableReport) -> str:
    if not rep.rows:
        raise ValueError("empty report")
    return json.dumps(rep.to_dict(), sort_keys=True, indent=2) + "\n"


def emit(rep: StableReport, fmt: str, path: str) -> None:
    if fmt == "csv":
        text = to_csv(rep)
    elif fmt == "json":
        text = to_json(rep)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    with open(path, "w", newline="\n") as fh:
        fh.write(text)
