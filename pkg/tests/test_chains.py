import pytest

from strandlab.chains import (
    NoncrossingPartition,
    PartitionChain,
    chain_of_labeled_diagram,
    chain_problem,
    crossing_blocks,
    is_noncrossing,
    iter_merge_chains,
    labeled_diagram_of_chain,
)
from strandlab.errors import InvalidInput, UnsupportedOrientation
from strandlab.signs import SignVector
from strandlab.strands import LabeledDiagram, Strand, enumerate_labeled

NC = NoncrossingPartition


def test_crossing_blocks():
    assert crossing_blocks([(1, 3), (2, 4)]) == ((1, 3), (2, 4))
    assert crossing_blocks([(1, 4), (2, 3)]) is None
    assert crossing_blocks([(1, 2, 5), (3, 4)]) is None
    assert crossing_blocks([(1, 3, 5), (2, 6)]) is not None
    assert not is_noncrossing(NC(4, ((1, 3), (2, 4))))


def test_partition_validation():
    with pytest.raises(InvalidInput):
        NC(3, ((1, 2),))
    with pytest.raises(InvalidInput):
        NC(3, ((1, 2), (2, 3)))


def test_single_strand_chain():
    for sign in "+-":
        eps = SignVector.constant(4, sign)
        ld = LabeledDiagram(((Strand(1, 3), 1),), eps)
        C = chain_of_labeled_diagram(ld)
        assert C.tolist() == [[[1], [2], [3], [4], [5]], [[1], [2, 4], [3], [5]]]
        assert labeled_diagram_of_chain(C, sign) == ld


def test_first_merge_is_short_chord():
    C = PartitionChain((NC.singletons(3), NC(3, ((1, 2), (3,)))))
    assert labeled_diagram_of_chain(C) == LabeledDiagram(((Strand(0, 1), 1),), SignVector.parse("---"))


def test_invalid_chains_are_rejected():
    bad_start = PartitionChain((NC(3, ((1, 2), (3,))),))
    assert "step 1" in chain_problem(bad_start)
    jump = PartitionChain((NC.singletons(3), NC(3, ((1, 2, 3),))))
    assert "step 2" in chain_problem(jump)
    crossing = PartitionChain((NC.singletons(4), NC(4, ((1, 3), (2,), (4,))), NC(4, ((1, 3), (2, 4)))))
    assert "crossing" in chain_problem(crossing)
    with pytest.raises(InvalidInput):
        labeled_diagram_of_chain(crossing)


def test_mixed_signs_rejected():
    ld = LabeledDiagram(((Strand(0, 1), 1),), SignVector.parse("-+"))
    with pytest.raises(UnsupportedOrientation):
        chain_of_labeled_diagram(ld)


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("sign", "+-")
def test_chain_maps_are_inverse(n, sign):
    eps = SignVector.constant(n, sign)
    for k in range(1, n + 1):
        labeled = enumerate_labeled(eps, k)
        chains = list(iter_merge_chains(n + 1, k))
        assert len(labeled) == len(chains)
        for ld in labeled:
            C = chain_of_labeled_diagram(ld)
            assert chain_problem(C) is None
            assert all(is_noncrossing(p) for p in C.partitions)
            assert labeled_diagram_of_chain(C, sign) == ld
        for C in chains:
            assert chain_of_labeled_diagram(labeled_diagram_of_chain(C, sign)) == C


@pytest.mark.parametrize("n", range(1, 6))
def test_maximal_chain_count(n):
    assert sum(1 for _ in iter_merge_chains(n + 1, n)) == (n + 1) ** (n - 1)
