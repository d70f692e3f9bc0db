from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tkt.bounds import (
    NormBounds,
    SatelliteData,
    diao_lb,
    genus_slope_report,
    meridional_norm_bounds,
    mfw_lb,
    ohyama_lb,
    satellite_slope_check,
    satellite_wrap_wind,
    seifert_data,
)
from tkt.braids import BraidWord, closure
from tkt.fixtures import FIG8_MERIDIAN_HOMFLY, coherent_pair_family, trefoil
from tkt.laurent import ONE
from tkt.linkdiag import unknot
from tkt.skein import homfly
from tkt.twistgen import twist


def test_seifert_examples():
    sd = seifert_data(unknot())
    assert (sd.s, sd.chi, sd.canonical_genus) == (1, 1, 0)
    sd = seifert_data(closure(BraidWord(2, (1, 1, 1))))
    assert (sd.s, sd.chi, sd.canonical_genus) == (2, -1, 1)
    F = coherent_pair_family()
    assert {seifert_data(twist(F, n)).s for n in range(6)} == {seifert_data(F.base).s}


@given(st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=10))
def test_seifert_invariants(word):
    D = closure(BraidWord(4, tuple(word)))
    sd = seifert_data(D)
    assert sd.s >= 1 and sd.chi == sd.s - D.crossing_count
    # a braid closure's Seifert circles are its strands
    assert sd.s == 4


def test_mfw_and_friends():
    assert mfw_lb(ONE) == 1
    assert mfw_lb(homfly(trefoil())) == 2
    assert mfw_lb(homfly(trefoil()).mirror()) == 2
    assert mfw_lb(FIG8_MERIDIAN_HOMFLY) == 4
    assert [ohyama_lb(b) for b in (1, 2, 5)] == [0, 2, 8]
    with pytest.raises(ValueError):
        ohyama_lb(0)
    assert diao_lb(0, 1) == 0 and diao_lb(1, 2) == 3
    assert [diao_lb(n, 2) for n in range(1, 5)] == [3, 5, 7, 9]


def test_norm_table():
    assert meridional_norm_bounds(3, 3) == NormBounds(2, 2, True)
    assert meridional_norm_bounds(6, 6) == NormBounds(5, 5, True)
    x = meridional_norm_bounds(6, 2)
    assert (x.lower, x.upper, x.exact) == (3, 5, False) and 3 in x.values()
    assert meridional_norm_bounds(4, 2).exact  # eta = omega + 2
    for bad in ((3, 2), (2, 4), (1, 1), (-2, 0)):
        with pytest.raises(ValueError):
            meridional_norm_bounds(*bad)


def test_norm_parity_scan():
    for eta in range(2, 13):
        for omega in range(eta % 2, eta + 1, 2):
            x = meridional_norm_bounds(eta, omega)
            assert x.lower <= x.upper
            assert all((v + 1) % 2 == eta % 2 for v in x.values())


def test_genus_slope():
    g = genus_slope_report(3, meridional_norm_bounds(3, 3))
    assert (g.lower, g.upper, g.exact) == (6, 6, True)
    g = genus_slope_report(1, NormBounds(8, 8, True), G_hint=0)
    assert g.lower == 8 and g.predict(2) == (16, 16)
    assert genus_slope_report(0, meridional_norm_bounds(4, 0)).upper == 0


def oracle(eta_k, omega_k, eta_P, omega_P):
    """Direct evaluation of the satellite hypotheses and inequalities."""
    if omega_k == 0:
        return None
    eta_K, omega_K = eta_k * eta_P, omega_k * omega_P
    hyp = Fraction(omega_P) >= Fraction(eta_k, omega_k) and eta_P >= 2
    if eta_K == omega_K or eta_K == omega_K + 2:
        x_min = eta_K - 1
    else:
        x_min = omega_K + 1
    ineq = omega_K * x_min > eta_k * (eta_k - 1)
    return hyp, ineq


def test_satellite_examples():
    d = SatelliteData(3, 3, 3, 1)
    assert satellite_wrap_wind(d) == (9, 3)
    v = satellite_slope_check(d)
    assert v.hypotheses and v.slope_inequality and not v.square_clause
    v = satellite_slope_check(SatelliteData(2, 2, 3, 3))
    assert v.hypotheses and v.slope_inequality and v.square_clause
    v = satellite_slope_check(SatelliteData(3, 1, 2, 2))
    assert not v.omega_P_threshold and not v.hypotheses
    v = satellite_slope_check(SatelliteData(2, 0, 2, 2))
    assert not v.applicable
    assert satellite_wrap_wind(SatelliteData(1, 1, 4, 4)) == (4, 4)
    with pytest.raises(ValueError):
        SatelliteData(2, 1, 3, 1)


pairs = st.integers(0, 6).flatmap(lambda e: st.tuples(st.just(e), st.sampled_from(list(range(e % 2, e + 1, 2)))))


@given(pairs, pairs)
def test_satellite_against_oracle(kp, Pp):
    (eta_k, omega_k), (eta_P, omega_P) = kp, Pp
    d = SatelliteData(eta_k, omega_k, eta_P, omega_P)
    v = satellite_slope_check(d)
    expect = oracle(eta_k, omega_k, eta_P, omega_P)
    if expect is None:
        assert not v.applicable
        return
    if d.eta_K < 2:
        return
    assert (v.hypotheses, v.slope_inequality) == expect
