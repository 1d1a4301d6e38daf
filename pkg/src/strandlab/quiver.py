"""Exact integer quiver mutation, framed type-A quivers and their exchange graphs.

An ice quiver is stored only as its ``n x m`` exchange matrix: rows are the
mutable vertices ``1..n``, columns ``1..n`` the mutable block and columns
``n+1..m`` the frozen vertices.  Vertex numbers in the public API are 1-based.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterable, Sequence

from .errors import InvalidInput, InvalidVertex, ResourceLimit
from .signs import SignVector

DEFAULT_MAX_NODES = 10**6
MAX_NODES_ENV = "STRANDLAB_MAX_NODES"
EXPLORATION_BOUND = 8

Matrix = tuple[tuple[int, ...], ...]


def _freeze(rows: Iterable[Iterable[int]]) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


@dataclass(frozen=True)
class ExchangeMatrix:
    """Integer ``n x m`` matrix whose leading ``n x n`` block is skew-symmetric."""

    rows: Matrix

    def __post_init__(self):
        rows = _freeze(self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise InvalidInput("exchange matrix needs at least one mutable row")
        n, m = len(rows), len(rows[0])
        if any(len(r) != m for r in rows):
            raise InvalidInput("exchange matrix rows have unequal lengths")
        if m < n:
            raise InvalidInput(f"exchange matrix has {m} columns, fewer than its {n} rows")
        for i in range(n):
            for j in range(i, n):
                if rows[i][j] != -rows[j][i]:
                    raise InvalidInput(
                        f"mutable block not skew-symmetric at ({i + 1},{j + 1}): "
                        f"{rows[i][j]} vs {rows[j][i]}"
                    )

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def m(self) -> int:
        return len(self.rows[0])

    @property
    def frozen_count(self) -> int:
        return self.m - self.n

    def entry(self, i: int, j: int) -> int:
        """``b_ij`` with 1-based indices."""
        return self.rows[i - 1][j - 1]

    def mutable_block(self) -> Matrix:
        return tuple(row[: self.n] for row in self.rows)

    def frozen_block(self) -> Matrix:
        return tuple(row[self.n :] for row in self.rows)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


# The mutation state of a framed quiver is just its exchange matrix.
IceQuiver = ExchangeMatrix


@dataclass(frozen=True)
class CMatrix:
    """Rows are c-vectors, kept in mutable-vertex order unless stated otherwise."""

    rows: Matrix

    def __post_init__(self):
        object.__setattr__(self, "rows", _freeze(self.rows))

    @property
    def n(self) -> int:
        return len(self.rows)

    def sorted_rows(self) -> "CMatrix":
        return CMatrix(tuple(sorted(self.rows)))

    def same_up_to_row_order(self, other: "CMatrix") -> bool:
        return sorted(self.rows) == sorted(other.rows)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def row_sign(row: Sequence[int]) -> int:
    """+1 / -1 for a sign-coherent nonzero row, 0 otherwise."""
    if any(x > 0 for x in row) and not any(x < 0 for x in row):
        return 1
    if any(x < 0 for x in row) and not any(x > 0 for x in row):
        return -1
    return 0


def _check_eps(eps) -> SignVector:
    try:
        return SignVector.parse(eps)
    except InvalidInput:
        raise
    except Exception as exc:  # pragma: no cover - defensive
        raise InvalidInput(str(exc)) from exc


def type_a_mutable_block(eps) -> Matrix:
    """Exchange matrix of ``Q_eps``: arrow ``i -> i+1`` iff ``eps_i = +``."""
    eps = _check_eps(eps)
    n = eps.n
    b = [[0] * n for _ in range(n)]
    for i in range(1, n):
        s = 1 if eps.is_plus(i) else -1
        b[i - 1][i] = s
        b[i][i - 1] = -s
    return _freeze(b)


def build_framed_type_a(eps) -> ExchangeMatrix:
    """Framed quiver: ``Q_eps`` plus one arrow ``i -> n+i`` per mutable vertex."""
    block = type_a_mutable_block(eps)
    n = len(block)
    return ExchangeMatrix(
        tuple(block[i] + tuple(1 if j == i else 0 for j in range(n)) for i in range(n))
    )


def build_coframed_type_a(eps) -> ExchangeMatrix:
    """Coframed quiver: ``Q_eps`` plus one arrow ``n+i -> i`` per mutable vertex."""
    block = type_a_mutable_block(eps)
    n = len(block)
    return ExchangeMatrix(
        tuple(block[i] + tuple(-1 if j == i else 0 for j in range(n)) for i in range(n))
    )


def mutate(B: ExchangeMatrix, k: int) -> ExchangeMatrix:
    """Matrix mutation at the mutable vertex ``k`` (1-based)."""
    if not isinstance(k, int) or isinstance(k, bool):
        raise InvalidVertex(f"vertex must be an integer, got {k!r}")
    n, m = B.n, B.m
    if not 1 <= k <= m:
        raise InvalidVertex(f"vertex {k} out of range 1..{n}")
    if k > n:
        raise InvalidVertex(f"vertex {k} is frozen; mutable vertices are 1..{n}")
    kk = k - 1
    old = B.rows
    new = []
    for i in range(n):
        bik = old[i][kk]
        row = []
        for j in range(m):
            if i == kk or j == kk:
                row.append(-old[i][j])
            else:
                bkj = old[kk][j]
                row.append(old[i][j] + (abs(bik) * bkj + bik * abs(bkj)) // 2)
        new.append(tuple(row))
    return ExchangeMatrix(tuple(new))


def mutate_sequence(B: ExchangeMatrix, seq: Iterable[int]) -> ExchangeMatrix:
    """Apply ``mu_{seq[0]}`` first, then ``mu_{seq[1]}`` and so on."""
    for k in seq:
        B = mutate(B, k)
    return B


def c_matrix(R: ExchangeMatrix) -> CMatrix:
    """Frozen columns of a state reached from a framed quiver with ``m = 2n``."""
    return CMatrix(R.frozen_block())


def _permuted(rows: Matrix, n: int, perm: Sequence[int]) -> Matrix:
    # Row a of the result is row perm[a]; mutable columns follow the same permutation.
    return tuple(
        tuple(rows[perm[a]][perm[b]] for b in range(n)) + rows[perm[a]][n:]
        for a in range(n)
    )


def _key(rows: Matrix, n: int) -> tuple:
    # all frozen parts first so that distinct c-vectors pin the minimiser down
    return tuple(row[n:] for row in rows) + tuple(row[:n] for row in rows)


def canonical_form_bruteforce(B: ExchangeMatrix) -> tuple[ExchangeMatrix, tuple[int, ...]]:
    """Lexicographic minimum over all ``n!`` simultaneous row/column permutations."""
    n = B.n
    best = None
    best_perm = None
    for perm in permutations(range(n)):
        cand = _permuted(B.rows, n, perm)
        k = _key(cand, n)
        if best is None or k < best[0]:
            best = (k, cand)
            best_perm = perm
    return ExchangeMatrix(best[1]), best_perm


def canonical_form(B: ExchangeMatrix) -> tuple[ExchangeMatrix, tuple[int, ...]]:
    """Frozen-isomorphism representative of ``B`` and the permutation producing it.

    ``perm[a]`` is the original (0-based) row placed at position ``a``.  When the
    frozen parts of the rows are pairwise distinct (always the case for states
    reached from a framed quiver) sorting by them already gives the minimum.
    """
    n = B.n
    frozen = [row[n:] for row in B.rows]
    if len(set(frozen)) < n:
        return canonical_form_bruteforce(B)
    perm = tuple(sorted(range(n), key=lambda a: frozen[a]))
    return ExchangeMatrix(_permuted(B.rows, n, perm)), perm


def frozen_isomorphic(A: ExchangeMatrix, B: ExchangeMatrix) -> bool:
    if (A.n, A.m) != (B.n, B.m):
        return False
    return canonical_form(A)[0] == canonical_form(B)[0]


def max_nodes_from_env(default: int = DEFAULT_MAX_NODES) -> int:
    raw = os.environ.get(MAX_NODES_ENV)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        raise InvalidInput(f"{MAX_NODES_ENV} must be an integer, got {raw!r}") from None
    if value < 1:
        raise InvalidInput(f"{MAX_NODES_ENV} must be positive, got {value}")
    return value


@dataclass
class ExchangeGraph:
    """Frozen-isomorphism classes reachable from a framed quiver.

    ``states[0]`` is the framed quiver itself, later states follow BFS layers,
    each layer sorted by canonical key.  ``edges`` holds ``(a, b, k)``: mutating
    state ``a`` (in its canonical labelling) at vertex ``k`` lands on state ``b``.
    """

    epsilon: SignVector
    states: list[ExchangeMatrix]
    edges: list[tuple[int, int, int]] = field(default_factory=list)

    def c_matrices(self) -> list[CMatrix]:
        return [c_matrix(s) for s in self.states]


def explore_exchange_graph(eps, max_nodes: int | None = None, bound: int = EXPLORATION_BOUND) -> ExchangeGraph:
    """Breadth-first search of the exchange graph of the framed quiver of ``Q_eps``."""
    eps = _check_eps(eps)
    if eps.n > bound:
        raise ResourceLimit(f"n={eps.n} exceeds the exploration bound {bound}", budget=bound)
    budget = max_nodes_from_env() if max_nodes is None else max_nodes
    start = canonical_form(build_framed_type_a(eps))[0]
    index = {start.rows: 0}
    states = [start]
    edges = []
    layer = [start]
    while layer:
        found = {}
        for state in layer:
            for k in range(1, eps.n + 1):
                nxt = canonical_form(mutate(state, k))[0]
                if nxt.rows not in index:
                    found[nxt.rows] = nxt
        layer = sorted(found.values(), key=lambda s: _key(s.rows, s.n))
        for state in layer:
            if len(states) >= budget:
                raise ResourceLimit(
                    f"exchange graph exploration exceeded the node budget of {budget}", budget=budget
                )
            index[state.rows] = len(states)
            states.append(state)
    for a, state in enumerate(states):
        for k in range(1, eps.n + 1):
            edges.append((a, index[canonical_form(mutate(state, k))[0].rows], k))
    return ExchangeGraph(eps, states, edges)


def enumerate_c_matrices(eps, max_nodes: int | None = None, bound: int = EXPLORATION_BOUND) -> list[CMatrix]:
    """Distinct c-matrices of ``Q_eps`` with rows sorted, in sorted order."""
    graph = explore_exchange_graph(eps, max_nodes=max_nodes, bound=bound)
    return sorted({c_matrix(s).sorted_rows() for s in graph.states}, key=lambda c: c.rows)


def vertex_color(R: ExchangeMatrix, i: int) -> str:
    """``"green"`` unless some frozen vertex has an arrow into ``i``."""
    if not isinstance(i, int) or not 1 <= i <= R.m:
        raise InvalidVertex(f"vertex {i!r} out of range 1..{R.n}")
    if i > R.n:
        raise InvalidVertex(f"vertex {i} is frozen")
    row = R.rows[i - 1]
    return "red" if any(x < 0 for x in row[R.n :]) else "green"


def colors(R: ExchangeMatrix) -> list[str]:
    return [vertex_color(R, i) for i in range(1, R.n + 1)]


@dataclass(frozen=True)
class ReddeningVerdict:
    is_terminal: bool
    ok: bool
    permutation: tuple[int, ...] | None = None
    counterexample_row: int | None = None
    frozen_isomorphic_to_coframed: bool | None = None
    message: str = ""

    def to_dict(self) -> dict:
        return {
            "is_terminal": self.is_terminal,
            "ok": self.ok,
            "permutation": None if self.permutation is None else list(self.permutation),
            "counterexample_row": self.counterexample_row,
            "frozen_isomorphic_to_coframed": self.frozen_isomorphic_to_coframed,
            "message": self.message,
        }


def check_reddening_terminal(R: ExchangeMatrix, eps) -> ReddeningVerdict:
    """Check that an all-red state has c-matrix ``-I`` and is the coframed quiver.

    ``permutation[i]`` is the (1-based) row of ``R`` holding ``-e_{i+1}``.
    Violations are reported in the verdict, never raised.
    """
    eps = _check_eps(eps)
    if R.n != eps.n or R.m != 2 * eps.n:
        raise InvalidInput(f"state has shape {R.n}x{R.m}, expected {eps.n}x{2 * eps.n}")
    if any(c == "green" for c in colors(R)):
        return ReddeningVerdict(False, True, message="not terminal: some vertex is green")
    n = R.n
    C = c_matrix(R).rows
    perm = [None] * n
    for r, row in enumerate(C):
        nz = [j for j, x in enumerate(row) if x != 0]
        if len(nz) != 1 or row[nz[0]] != -1 or perm[nz[0]] is not None:
            return ReddeningVerdict(
                True, False, counterexample_row=r + 1, message=f"row {r + 1} = {list(row)} breaks -I"
            )
        perm[nz[0]] = r + 1
    iso = frozen_isomorphic(R, build_coframed_type_a(eps))
    return ReddeningVerdict(
        True,
        iso,
        permutation=tuple(perm),
        frozen_isomorphic_to_coframed=iso,
        message="" if iso else "c-matrix is -I but the state is not the coframed quiver",
    )


def random_reddening_sequence(eps, rng: random.Random, max_steps: int = 200) -> list[int] | None:
    """Random mutation walk from the framed quiver, stopped at the first all-red state."""
    eps = _check_eps(eps)
    R = build_framed_type_a(eps)
    seq: list[int] = []
    for _ in range(max_steps):
        k = rng.randint(1, eps.n)
        R = mutate(R, k)
        seq.append(k)
        if all(c == "red" for c in colors(R)):
            return seq
    return None


def random_maximal_green_sequence(eps, rng: random.Random) -> list[int]:
    """Mutate at uniformly chosen green vertices until none is left."""
    eps = _check_eps(eps)
    R = build_framed_type_a(eps)
    seq: list[int] = []
    while True:
        greens = [i for i, c in enumerate(colors(R), 1) if c == "green"]
        if not greens:
            return seq
        k = rng.choice(greens)
        R = mutate(R, k)
        seq.append(k)
