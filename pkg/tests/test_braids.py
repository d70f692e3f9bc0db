import random

import pytest
from hypothesis import given, settings, strategies as st

from tests.conftest import random_family
from tkt.braids import (
    BraidFamily,
    BraidWord,
    braid_family,
    braid_family_of,
    braid_from_json,
    braid_index_ub_sequence,
    braid_to_json,
    closure,
    family_diagram,
    family_from_json,
    family_to_json,
    family_twist_region,
)
from tkt.fixtures import clasp_braid_family, cable_braid_family, coherent_pair_braid_family
from tkt.linkdiag import PDError, components, unknot, writhe
from tkt.skein import homfly
from tkt.twistgen import twist


def test_closure_examples():
    assert homfly(closure(BraidWord(1, ()))) == homfly(unknot())
    T = closure(BraidWord(2, (1, 1, 1)))
    assert components(T)[0] == 1 and writhe(T) == 3 and T.crossing_count == 3
    assert components(closure(BraidWord(2, (1, 1))))[0] == 2


@given(st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), max_size=10))
def test_closure_counts(word):
    b = BraidWord(4, tuple(word))
    D = closure(b)
    assert D.crossing_count == len(word)
    assert components(D)[0] == b.cycle_count()


def test_word_validation():
    with pytest.raises(PDError):
        BraidWord(2, (2,))
    with pytest.raises(PDError):
        BraidWord(3, (0,))
    with pytest.raises(PDError):
        BraidFamily(BraidWord(2, ()), BraidWord(3, ()), 1, 1)
    with pytest.raises(PDError):
        BraidFamily(BraidWord(2, ()), BraidWord(2, ()), 3, 0)
    with pytest.raises(PDError):
        braid_family(BraidWord(2, (1,)), BraidWord(2, ()), 1, 1, -1)


def test_json_round_trip():
    b = BraidWord(3, (1, -2))
    assert braid_from_json(braid_to_json(b)) == b
    fam = clasp_braid_family()
    assert family_from_json(family_to_json(fam)) == fam


def test_n_zero_is_concatenation():
    fam = clasp_braid_family()
    assert braid_family_of(fam, 0) == fam.beta1 * fam.beta2


def test_strand_counts():
    for fam in (clasp_braid_family(), coherent_pair_braid_family(), cable_braid_family(3)):
        seq = braid_index_ub_sequence(fam, 5)
        assert seq == [fam.strands + n * fam.q for n in range(6)]
        for n in range(4):
            assert braid_family_of(fam, n).strands == seq[n]
    assert braid_index_ub_sequence(BraidFamily(BraidWord(3, ()), BraidWord(3, ()), 1, 1), 3) == [3, 4, 5, 6]


@pytest.mark.parametrize(
    "fam", [clasp_braid_family(), coherent_pair_braid_family(), cable_braid_family(3)],
    ids=["clasp", "coherent_pair", "cable3"],
)
def test_packaged_families_semantic(fam):
    F = family_twist_region(fam)
    for n in range(4):
        assert homfly(closure(braid_family_of(fam, n))) == homfly(twist(F, n))


@settings(max_examples=10)
@given(st.sampled_from([(1, 1, 2), (1, 1, 3), (2, 1, 3), (1, 2, 3), (2, 0, 2), (3, 0, 3)]), st.integers(0, 10**6))
def test_random_families_semantic(shape, seed):
    p, q, N = shape
    fam = random_family(random.Random(seed), N, p, q, 2, 4)
    for n in range(3):
        assert homfly(closure(braid_family_of(fam, n))) == homfly(family_diagram(fam, n))
