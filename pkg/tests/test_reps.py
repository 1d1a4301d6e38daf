from itertools import permutations

import pytest

from strandlab.errors import InvalidInput, NotACollection, ResourceLimit
from strandlab.oracles import hom_ext_linear_algebra
from strandlab.quiver import CMatrix
from strandlab.reps import (
    IntervalRep,
    all_intervals,
    enumerate_exceptional_sequences,
    euler_form,
    hom_ext,
    interval_of_vector,
    is_exceptional_pair,
    is_exceptional_sequence,
    order_collection,
    verify_speyer_thomas,
)
from strandlab.signs import SignVector, all_sign_vectors
from strandlab.strands import good_labelings, is_good_labeling, phi_tilde

X = IntervalRep


def test_interval_dimension_vector():
    assert X(1, 3).dim_vector(4) == (0, 1, 1, 0)
    with pytest.raises(InvalidInput):
        X(2, 2)


def test_interval_of_vector_reads_signs():
    assert interval_of_vector((0, -1, -1, 0)) == (X(1, 3), -1)
    with pytest.raises(InvalidInput):
        interval_of_vector((1, 0, 1))


@pytest.mark.parametrize("n", range(1, 7))
def test_case_tables_match_linear_algebra(n):
    for eps in all_sign_vectors(n):
        for U in all_intervals(n):
            for V in all_intervals(n):
                p = hom_ext(U, V, eps)
                assert (p.hom, p.ext) == hom_ext_linear_algebra(U, V, eps), (str(eps), U, V)


def test_euler_form_examples():
    eps = "-+-+-"
    for U in all_intervals(4):
        assert euler_form(U.dim_vector(4), U.dim_vector(4), eps) == 1
    assert euler_form(X(0, 1).dim_vector(4), X(2, 4).dim_vector(4), eps) == 0
    p = hom_ext(X(0, 2), X(1, 3), eps)
    assert euler_form(X(0, 2).dim_vector(4), X(1, 3).dim_vector(4), eps) == p.hom - p.ext
    with pytest.raises(InvalidInput):
        euler_form((1, 0), (1, 0, 0), eps)


def test_interlaced_hom_needs_two_minus_signs():
    # U = X(i, j), V = X(k, l) with i < k < j < l
    for eps in all_sign_vectors(4):
        h = hom_ext(X(0, 2), X(1, 3), eps).hom
        assert h == int(eps[1] == "-" and eps[2] == "-")


def test_touching_intervals():
    for eps in all_sign_vectors(4):
        U, V = X(0, 2), X(2, 4)
        assert hom_ext(U, V, eps).hom == 0 and hom_ext(V, U, eps).hom == 0
        assert hom_ext(U, V, eps).ext == int(eps[2] == "+")
        assert hom_ext(V, U, eps).ext == int(eps[2] == "-")


def test_exceptional_pair_examples():
    eps = SignVector.parse("-+-+-")
    assert not is_exceptional_pair(X(1, 2), X(1, 2), eps)
    assert is_exceptional_pair(X(0, 1), X(2, 4), eps) and is_exceptional_pair(X(2, 4), X(0, 1), eps)
    # minus at the shared point 2
    assert is_exceptional_pair(X(2, 4), X(0, 2), eps)
    assert not is_exceptional_pair(X(0, 2), X(2, 4), eps)


def test_hom_vanishes_in_one_direction():
    for n in range(1, 9):
        for eps in [SignVector.constant(n, "-"), SignVector(tuple("+-" * n)[: n + 1])]:
            for U in all_intervals(n):
                for V in all_intervals(n):
                    if U != V:
                        assert hom_ext(U, V, eps).hom == 0 or hom_ext(V, U, eps).hom == 0


def test_sequence_counts():
    assert enumerate_exceptional_sequences("-+", 1) == [(X(0, 1),)]
    assert len(enumerate_exceptional_sequences("---", 2)) == 3
    for eps in all_sign_vectors(3):
        assert len(enumerate_exceptional_sequences(eps, 3)) == 16


def test_sequence_bound():
    with pytest.raises(ResourceLimit):
        enumerate_exceptional_sequences(SignVector.constant(8, "-"), 8)


def test_prefixes_and_suffixes_stay_exceptional():
    for eps in all_sign_vectors(3):
        for xi in enumerate_exceptional_sequences(eps, 3):
            for a in range(len(xi) + 1):
                assert is_exceptional_sequence(xi[:a], eps)
                assert is_exceptional_sequence(xi[a:], eps)


def test_order_collection():
    eps = SignVector.parse("-+-++")
    assert order_collection({X(1, 3)}, eps) == (X(1, 3),)
    d1 = {X(0, 1), X(0, 2), X(2, 3), X(2, 4)}
    xi = order_collection(d1, eps)
    assert is_exceptional_sequence(xi, eps)
    assert is_good_labeling(phi_tilde(xi, eps))
    assert xi == (X(2, 4), X(2, 3), X(0, 2), X(0, 1))


def test_order_collection_rejects_crossing_pair():
    eps = SignVector.parse("-+++-")
    with pytest.raises(NotACollection) as err:
        order_collection({X(1, 3), X(2, 4)}, eps)
    assert set(err.value.pair) == {X(1, 3), X(2, 4)}


def _brute_witness(C, eps):
    n = len(C)
    for sigma in permutations(range(n)):
        rows = [C[s] for s in sigma]
        signs = [1 if max(r) > 0 else -1 for r in rows]
        if signs != sorted(signs):
            continue
        reps = [interval_of_vector(r)[0] for r in rows]
        if is_exceptional_sequence(reps, eps):
            return True
    return False


def test_speyer_thomas_examples():
    eps = SignVector.parse("++-+-")
    I = tuple(tuple(int(i == j) for j in range(4)) for i in range(4))
    assert verify_speyer_thomas(CMatrix(I), eps).ok
    assert verify_speyer_thomas(CMatrix(tuple(tuple(-x for x in r) for r in I)), eps).ok
    C = ((1, 1, 0, 0), (0, 0, 1, 0), (0, -1, -1, 0), (0, 0, 0, 1))
    v = verify_speyer_thomas(CMatrix(C), eps)
    assert v.ok and _brute_witness(C, eps)
    with pytest.raises(InvalidInput):
        verify_speyer_thomas(CMatrix(((1, 0, 1), (0, 1, 0), (0, 0, 1))), "----")


def test_good_labelings_of_d1_are_sequences():
    eps = SignVector.parse("-+-++")
    from strandlab.strands import Diagram, Strand

    d = Diagram((Strand(0, 1), Strand(0, 2), Strand(2, 3), Strand(2, 4)), eps)
    labs = list(good_labelings(d))
    assert labs
    seqs = {xi for xi in enumerate_exceptional_sequences(eps, 4) if set(xi) == {X(0, 1), X(0, 2), X(2, 3), X(2, 4)}}
    assert {phi_tilde(xi, eps) for xi in seqs} == set(labs)
