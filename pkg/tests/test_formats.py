from fractions import Fraction

import pytest

from strandlab import formats as fmt
from strandlab.chains import iter_merge_chains
from strandlab.errors import InvalidInput
from strandlab.mct import realize
from strandlab.posets import poset_of_diagram
from strandlab.quiver import build_framed_type_a, enumerate_c_matrices, mutate_sequence
from strandlab.reps import enumerate_exceptional_sequences
from strandlab.signs import SignVector
from strandlab.strands import enumerate_diagrams, enumerate_labeled, iter_oriented_D_arrow

EPS = SignVector.parse("+-+-")


def test_codecs_round_trip():
    B = mutate_sequence(build_framed_type_a(EPS), [1, 3, 2])
    assert fmt.quiver_from_json(fmt.quiver_to_json(B, EPS)) == (B, EPS)
    for xi in enumerate_exceptional_sequences(EPS, 3):
        assert fmt.ces_from_json(fmt.ces_to_json(xi, EPS)) == (xi, EPS)
    for d in enumerate_diagrams(EPS, 3):
        strands, eps = fmt.diagram_from_json(fmt.diagram_to_json(d))
        assert tuple(strands) == d.strands and eps == EPS
        P = poset_of_diagram(d)
        Q = fmt.poset_from_json(fmt.poset_to_json(P))
        assert set(Q.covers) == {((a.a, a.b), (b.a, b.b)) for a, b in P.covers}
    for ld in enumerate_labeled(EPS, 2):
        assert fmt.labeled_from_json(fmt.labeled_to_json(ld)) == ld
    for od in iter_oriented_D_arrow(EPS):
        assert fmt.oriented_from_json(fmt.oriented_to_json(od)) == od
        T = realize(od)
        assert fmt.mct_from_json(fmt.mct_to_json(T)) == T
    for C in enumerate_c_matrices(EPS):
        assert fmt.cmatrix_from_json(fmt.cmatrix_to_json(C, EPS)) == (C, EPS)
    eps = SignVector.constant(3, "-")
    for chain in iter_merge_chains(4, 3):
        assert fmt.chain_from_json(fmt.chain_to_json(chain, eps)) == (chain, eps)


def test_heights_are_exact():
    obj = {"epsilon": "-+-", "heights": ["1/3", 2, "-5/2"], "edges": [[0, 1], [1, 2]]}
    assert fmt.mct_from_json(obj).heights == (Fraction(1, 3), Fraction(2), Fraction(-5, 2))
    with pytest.raises(InvalidInput):
        fmt.mct_from_json({**obj, "heights": [0.5, 1, 2]})


@pytest.mark.parametrize(
    "reader, obj",
    [
        (fmt.quiver_from_json, {"n": 3, "epsilon": "--", "matrix": [[0, 1]]}),
        (fmt.ces_from_json, {"epsilon": "--"}),
        (fmt.cmatrix_from_json, {"epsilon": "---", "cmatrix": [[1, 0]]}),
        (fmt.labeled_from_json, {"epsilon": "--", "labeled": [[0, 1]]}),
        (fmt.labeled_from_json, {"epsilon": "--", "labeled": [[0, 5, 1]]}),
        (fmt.oriented_from_json, {"epsilon": "--", "oriented": [{"from": 0, "to": 3}]}),
        (fmt.diagram_from_json, {"epsilon": "--", "strands": [[0, True]]}),
        (fmt.chain_from_json, {"epsilon": "--", "chain": [[[1], [3]]]}),
    ],
)
def test_malformed_records(reader, obj):
    with pytest.raises(InvalidInput):
        reader(obj)
