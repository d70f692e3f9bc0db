import random

import pytest
from hypothesis import given, settings, strategies as st

from tkt.braids import BraidWord, closure
from tkt.fixtures import figure_eight, hopf, named_diagrams, trefoil
from tkt.linkdiag import (
    LinkDiagram,
    PDError,
    canonical_key,
    components,
    disjoint_union,
    format_pd,
    from_json,
    from_pd,
    mirror,
    parse_pd,
    simplify,
    smooth,
    split_pieces,
    switch,
    to_json,
    unknot,
    writhe,
)

braid_words = st.lists(st.sampled_from([1, -1, 2, -2, 3, -3]), min_size=0, max_size=9)


def shuffled(D: LinkDiagram, seed: int) -> LinkDiagram:
    """Same diagram with arcs renamed and crossings reordered."""
    rng = random.Random(seed)
    arcs = D.arcs
    new = list(range(100, 100 + len(arcs)))
    rng.shuffle(new)
    ren = dict(zip(arcs, new))
    order = list(range(D.crossing_count))
    rng.shuffle(order)
    return LinkDiagram(
        tuple(tuple(ren[a] for a in D.crossings[i]) for i in order),
        tuple(D.signs[i] for i in order),
        D.unknots,
    )


def test_parse_examples():
    assert parse_pd("PD[]").unknots == 1
    assert components(parse_pd("PD[]"))[0] == 1
    T = parse_pd("PD[X(1,4,2,5), X(3,6,4,1), X(5,2,6,3)]")
    assert T.crossing_count == 3 and components(T)[0] == 1
    assert parse_pd("PD[];U=3").unknots == 3
    assert parse_pd("PD[X(1,1,2,2)];U=1").unknots == 1


@pytest.mark.parametrize(
    "text",
    ["PD[X(1,4,2,5),X(3,6,4,1)]", "PD[X(1,2,3)]", "X(1,2,3,4)", "PD[X(1,2,3,4)]"],
)
def test_parse_errors(text):
    with pytest.raises(PDError):
        parse_pd(text)


def test_inconsistent_orientation_rejected():
    with pytest.raises(PDError):
        LinkDiagram(((1, 2, 3, 4), (3, 2, 1, 4)), (1, 1))


def test_table_trefoil_is_left_handed():
    assert writhe(trefoil()) == -3
    assert writhe(closure(BraidWord(2, (1, 1, 1)))) == 3
    assert writhe(mirror(closure(BraidWord(2, (1, 1, 1))))) == -3


def test_components_and_union():
    assert components(hopf())[0] == 2
    assert components(disjoint_union(unknot(), unknot()))[0] == 2
    assert components(disjoint_union(trefoil(), hopf()))[0] == 3


def test_json_and_text_round_trip():
    for D in named_diagrams().values():
        assert canonical_key(from_json(to_json(D))) == canonical_key(D)
        assert canonical_key(parse_pd(format_pd(D))) == canonical_key(D)


def test_mirror_involution():
    for D in named_diagrams().values():
        assert canonical_key(mirror(mirror(D))) == canonical_key(D)
        M = mirror(D)
        assert M.signs == tuple(-s for s in D.signs)
        assert components(M)[0] == components(D)[0]


def test_switch_and_smooth_counts():
    D = figure_eight()
    for i in range(D.crossing_count):
        S = switch(D, i)
        assert S.signs[i] == -D.signs[i]
        assert switch(S, i) == D
        assert smooth(D, i).crossing_count == D.crossing_count - 1
    # smoothing a knot crossing gives two components
    assert components(smooth(trefoil(), 0))[0] == 2


def test_simplify_examples():
    kink = parse_pd("PD[X(1,1,2,2)]")
    assert simplify(kink) == unknot()
    # sigma_1 sigma_1^-1 closes to a two-component unlink
    D = closure(BraidWord(2, (1, -1)))
    S = simplify(D)
    assert S.crossing_count == 0 and S.unknots == 2
    # reduced diagrams are left alone
    assert simplify(figure_eight()).crossing_count == 4


def test_split_pieces():
    D = disjoint_union(trefoil(), figure_eight())
    assert [len(p) for p in split_pieces(D)] == [3, 4]


@settings(max_examples=150)
@given(braid_words, st.integers(0, 10**6))
def test_canonical_key_ignores_labels(word, seed):
    D = closure(BraidWord(4, tuple(word)))
    assert canonical_key(shuffled(D, seed)) == canonical_key(D)


@given(braid_words)
def test_canonical_key_separates_mirror_of_chiral(word):
    D = closure(BraidWord(4, tuple(word)))
    if canonical_key(D) == canonical_key(mirror(D)):
        # only possible when the diagram is isomorphic to its mirror
        assert sorted(D.signs) == sorted(-s for s in D.signs)


def test_from_pd_relabels():
    D = from_pd([(10, 40, 20, 50), (30, 60, 40, 10), (50, 20, 60, 30)])
    assert D.arcs == [1, 2, 3, 4, 5, 6]
