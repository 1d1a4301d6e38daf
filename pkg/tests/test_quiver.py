import random

import pytest
from hypothesis import given, settings, strategies as st

from strandlab.errors import InvalidInput, InvalidVertex, ResourceLimit
from strandlab.quiver import (
    ExchangeMatrix,
    build_coframed_type_a,
    build_framed_type_a,
    c_matrix,
    canonical_form,
    canonical_form_bruteforce,
    check_reddening_terminal,
    colors,
    enumerate_c_matrices,
    explore_exchange_graph,
    frozen_isomorphic,
    mutate,
    mutate_sequence,
    random_maximal_green_sequence,
    random_reddening_sequence,
)
from strandlab.signs import SignVector, all_sign_vectors

WORKED = ExchangeMatrix(((0, 2, 0, 0), (-2, 0, 1, 0), (0, -1, 0, -1)))


def test_worked_mutation_at_vertex_two():
    assert mutate(WORKED, 2).tolist() == [[0, -2, 2, 0], [2, 0, -1, 0], [-2, 1, 0, -1]]


def test_mutation_rejects_frozen_vertex():
    with pytest.raises(InvalidVertex):
        mutate(WORKED, 4)
    with pytest.raises(InvalidVertex):
        mutate(WORKED, 0)


def test_mutable_part_must_be_skew_symmetric():
    with pytest.raises(InvalidInput):
        ExchangeMatrix(((0, 1), (1, 0)))


def test_framed_and_coframed_blocks():
    eps = SignVector.parse("++-+-")
    B = build_framed_type_a(eps)
    assert [list(r) for r in B.frozen_block()] == [[int(i == j) for j in range(4)] for i in range(4)]
    # arrow i -> i+1 for a plus sign at i, reversed for minus
    assert B.entry(1, 2) == 1 and B.entry(2, 3) == -1 and B.entry(3, 4) == 1
    Bc = build_coframed_type_a(eps)
    assert [list(r) for r in Bc.frozen_block()] == [[-int(i == j) for j in range(4)] for i in range(4)]


def test_worked_cmatrix_after_two_mutations():
    R = mutate_sequence(build_framed_type_a("++-+-"), [2, 3])
    assert c_matrix(R).tolist() == [[1, 1, 0, 0], [0, 0, 1, 0], [0, -1, -1, 0], [0, 0, 0, 1]]


@st.composite
def states(draw):
    n = draw(st.integers(1, 5))
    eps = draw(st.text(alphabet="+-", min_size=n + 1, max_size=n + 1))
    seq = draw(st.lists(st.integers(1, n), max_size=8))
    return mutate_sequence(build_framed_type_a(eps), seq)


@settings(max_examples=200, deadline=None)
@given(states(), st.data())
def test_mutation_is_an_involution(B, data):
    k = data.draw(st.integers(1, B.n))
    assert mutate(mutate(B, k), k) == B


@settings(max_examples=200, deadline=None)
@given(states())
def test_canonical_form_agrees_with_bruteforce(B):
    C1, _ = canonical_form(B)
    C2, _ = canonical_form_bruteforce(B)
    assert C1 == C2


@settings(max_examples=100, deadline=None)
@given(states(), st.randoms(use_true_random=False))
def test_canonical_form_ignores_relabeling(B, rnd):
    perm = list(range(B.n))
    rnd.shuffle(perm)
    rows = [[B.rows[perm[i]][perm[j]] for j in range(B.n)] + list(B.rows[perm[i]][B.n:]) for i in range(B.n)]
    P = ExchangeMatrix(tuple(map(tuple, rows)))
    assert canonical_form(P)[0] == canonical_form(B)[0]
    assert frozen_isomorphic(P, B)


def test_involution_and_skew_symmetry_exhaustive_small():
    for n in range(1, 5):
        for eps in all_sign_vectors(n):
            for B in explore_exchange_graph(eps).states:
                for k in range(1, n + 1):
                    M = mutate(B, k)
                    assert mutate(M, k) == B
                    assert all(M.rows[i][j] == -M.rows[j][i] for i in range(n) for j in range(n))


@pytest.mark.parametrize("n, size", [(1, 2), (2, 5), (3, 14), (4, 42)])
def test_exchange_graph_sizes_are_catalan(n, size):
    for eps in all_sign_vectors(n):
        G = explore_exchange_graph(eps)
        assert len(G.states) == size
        # n-regular
        assert len(G.edges) == size * n


def test_exploration_budget():
    with pytest.raises(ResourceLimit):
        explore_exchange_graph("-----", max_nodes=10)


def test_colors_of_framed_and_coframed():
    assert colors(build_framed_type_a("-+-")) == ["green", "green"]
    assert colors(build_coframed_type_a("-+-")) == ["red", "red"]


def test_reddening_verdicts():
    eps = "+-+-"
    v = check_reddening_terminal(build_coframed_type_a(eps), eps)
    assert v.is_terminal and v.ok and v.permutation == (1, 2, 3)
    v = check_reddening_terminal(build_framed_type_a(eps), eps)
    assert not v.is_terminal
    assert "green" in v.message


def test_reddening_reports_bad_terminal_state():
    # all red, but the c-matrix is not -I
    R = ExchangeMatrix(((0, 0, -1, -1), (0, 0, 0, -1)))
    v = check_reddening_terminal(R, "---")
    assert v.is_terminal and not v.ok and v.counterexample_row == 1


def test_single_mutation_turns_vertex_red():
    R = mutate(build_framed_type_a("-+-+"), 1)
    assert colors(R)[0] == "red"


def test_random_sequences_end_all_red():
    rng = random.Random(7)
    for eps in ["---", "+-+", "-++-", "+-+-+"]:
        seq = random_maximal_green_sequence(eps, rng)
        R = mutate_sequence(build_framed_type_a(eps), seq)
        assert all(c == "red" for c in colors(R))
        assert check_reddening_terminal(R, eps).ok
        seq = random_reddening_sequence(eps, rng)
        if seq is not None:
            assert check_reddening_terminal(mutate_sequence(build_framed_type_a(eps), seq), eps).ok


def test_cmatrix_rows_are_sign_coherent():
    for eps in all_sign_vectors(3):
        for C in enumerate_c_matrices(eps):
            for row in C.rows:
                assert all(x >= 0 for x in row) or all(x <= 0 for x in row)
