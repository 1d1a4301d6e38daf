from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from strandlab.errors import InvalidInput
from strandlab.mct import (
    MixedCobinaryTree,
    check_mct,
    cmatrix_of_mct,
    isomorphic,
    mct_to_oriented,
    realize,
    region_contains,
    segments_meet,
)
from strandlab.quiver import CMatrix
from strandlab.signs import SignVector, all_sign_vectors
from strandlab.strands import OrientedDiagram, OrientedStrand, cmatrix_of_oriented, iter_oriented_D_arrow


def tree(eps, heights, edges):
    return MixedCobinaryTree(tuple(F(h) for h in heights), tuple(edges), SignVector.parse(eps))


def od(eps, *pairs):
    return OrientedDiagram(tuple(OrientedStrand(a, b) for a, b in pairs), SignVector.parse(eps))


# signs at 0 and 4 do not constrain this tree
FIG_B = [(eps, (0, 1, -1, 0, 1), [(0, 1), (1, 3), (2, 3), (3, 4)]) for eps in ["---++", "+--+-", "---+-", "+--++"]]


@pytest.mark.parametrize("eps, heights, edges", FIG_B)
def test_tree_with_two_minus_vertices(eps, heights, edges):
    T = tree(eps, heights, edges)
    assert check_mct(T) is None
    assert mct_to_oriented(T) == od(eps, (0, 1), (3, 1), (2, 3), (3, 4))


def test_monotone_staircase():
    T = tree("-+--", (0, 1, 2, 3), [(0, 1), (1, 2), (2, 3)])
    assert check_mct(T) is None
    assert mct_to_oriented(T) == od("-+--", (0, 1), (1, 2), (2, 3))
    assert cmatrix_of_mct(T).tolist() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert region_contains(T, (F(-5), F(0), F(1, 3), F(7)))
    assert not region_contains(T, (0, 2, 1, 3))


def test_staircase_realization():
    T = realize(od("+-+-", (0, 1), (1, 2), (2, 3)))
    assert T.edges == ((0, 1), (1, 2), (2, 3))
    assert list(T.heights) == sorted(T.heights)


def test_horizontal_edge_is_rejected():
    bad = check_mct(tree("---", (0, 0, 1), [(0, 1), (1, 2)]))
    assert bad is not None and bad.condition == "horizontal"
    with pytest.raises(InvalidInput):
        mct_to_oriented(tree("---", (0, 0, 1), [(0, 1), (1, 2)]))


def test_region_needs_distinct_heights():
    T = tree("-+--", (0, 1, 2, 3), [(0, 1), (1, 2), (2, 3)])
    with pytest.raises(InvalidInput):
        region_contains(T, (0, 1, 1, 3))


def test_worked_oriented_diagram_to_tree():
    eps = "++-+-"
    d = od(eps, (0, 2), (2, 3), (3, 1), (3, 4))
    T = realize(d)
    assert set(T.edges) == {(0, 2), (2, 3), (1, 3), (3, 4)}
    y = T.heights
    assert y[0] < y[2] < y[3] < y[1] and y[3] < y[4]
    C = CMatrix(((1, 1, 0, 0), (0, 0, 1, 0), (0, -1, -1, 0), (0, 0, 0, 1)))
    assert cmatrix_of_mct(T).same_up_to_row_order(C)
    drawn = tree(eps, (F(-1, 2), 1, 0, F(1, 2), 1), [(0, 2), (2, 3), (1, 3), (3, 4)])
    assert isomorphic(T, drawn)


def test_segments_meet():
    assert segments_meet((0, 0), (2, 2), (0, 2), (2, 0))
    assert not segments_meet((0, 0), (1, 1), (2, 2), (3, 0))
    assert segments_meet((0, 0), (2, 0), (1, 0), (3, 0))


@pytest.mark.parametrize("n", range(1, 5))
def test_realize_round_trips(n):
    for eps in all_sign_vectors(n):
        trees = []
        for d in iter_oriented_D_arrow(eps):
            T = realize(d)
            assert check_mct(T) is None
            assert mct_to_oriented(T) == d
            assert region_contains(T, T.heights)
            assert cmatrix_of_mct(T).same_up_to_row_order(cmatrix_of_oriented(d))
            trees.append(T)
        for a in range(len(trees)):
            for b in range(a + 1, len(trees)):
                assert not isomorphic(trees[a], trees[b])


ARROWS = [d for n in range(1, 5) for eps in all_sign_vectors(n) for d in iter_oriented_D_arrow(eps)]


@settings(max_examples=300, deadline=None)
@given(st.sampled_from(ARROWS), st.data())
def test_every_point_of_the_region_gives_a_tree(d, data):
    # heights with y_source < y_target along every strand
    n = d.eps.n
    y = {0: F(0)}
    pending = list(d.strands)
    while pending:
        for o in list(pending):
            step = F(data.draw(st.integers(1, 50)), data.draw(st.integers(1, 7)))
            if o.source in y and o.target not in y:
                y[o.target] = y[o.source] + step
            elif o.target in y and o.source not in y:
                y[o.source] = y[o.target] - step
            else:
                continue
            pending.remove(o)
    heights = tuple(y[i] for i in range(n + 1))
    T = MixedCobinaryTree(heights, tuple(sorted(o.strand.endpoints() for o in d.strands)), d.eps)
    assert check_mct(T) is None
    assert isomorphic(T, realize(d))
