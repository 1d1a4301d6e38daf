"""Independent brute-force computations used to cross-check the main algorithms."""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import permutations, product

from .reps import IntervalRep, euler_form
from .signs import SignVector


def _rank(rows: list[list[Fraction]]) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][col] != 0:
                f = rows[r][col] / rows[rank][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def hom_dimension_linear_algebra(U: IntervalRep, V: IntervalRep, eps) -> int:
    """``dim Hom(U, V)`` as the solution space of the commutativity equations.

    Unknowns are the scalars ``theta_v`` on vertices in both supports; each
    arrow ``a: s -> t`` demands ``theta_t * U_a = V_a * theta_s``.
    """
    eps = SignVector.parse(eps)
    n = eps.n
    common = [v for v in range(1, n + 1) if U.i < v <= U.j and V.i < v <= V.j]
    if not common:
        return 0
    col = {v: c for c, v in enumerate(common)}
    inU = lambda v: U.i < v <= U.j
    inV = lambda v: V.i < v <= V.j
    eqs = []
    for v in range(1, n):
        s, t = (v, v + 1) if eps.is_plus(v) else (v + 1, v)
        row = [Fraction(0)] * len(common)
        # U_a is the identity when both ends lie in supp U, else zero; same for V
        if inU(s) and inU(t) and t in col:
            row[col[t]] += 1
        if inV(s) and inV(t) and s in col:
            row[col[s]] -= 1
        if any(row):
            eqs.append(row)
    return len(common) - (_rank(eqs) if eqs else 0)


def hom_ext_linear_algebra(U: IntervalRep, V: IntervalRep, eps) -> tuple[int, int]:
    hom = hom_dimension_linear_algebra(U, V, eps)
    n = SignVector.parse(eps).n
    return hom, hom - euler_form(U.dim_vector(n), V.dim_vector(n), eps)


def prufer_leaf_counts(N: int) -> dict[int, int]:
    """Labeled trees on ``N`` vertices by number of leaves, via Pruefer sequences.

    A vertex is a leaf exactly when its label does not occur in the sequence.
    """
    if N == 1:
        return {0: 1}
    if N == 2:
        return {2: 1}
    counts = Counter(N - len(set(seq)) for seq in product(range(N), repeat=N - 2))
    return dict(sorted(counts.items()))


def linear_extensions_bruteforce(elements, covers) -> int:
    pos_needed = list(covers)
    total = 0
    for perm in permutations(elements):
        where = {x: k for k, x in enumerate(perm)}
        if all(where[lo] < where[hi] for lo, hi in pos_needed):
            total += 1
    return total
