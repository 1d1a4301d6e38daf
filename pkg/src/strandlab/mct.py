"""Mixed cobinary trees: straight-line trees on abscissae 0..n, in exact arithmetic."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InvalidInput, InvariantError
from .quiver import CMatrix
from .signs import SignVector
from .strands import OrientedDiagram, OrientedStrand, _UnionFind, is_in_D_arrow


def _as_fraction(y) -> Fraction:
    if isinstance(y, float):
        raise InvalidInput("heights must be exact (int, Fraction or rational string), not float")
    try:
        return Fraction(y)
    except (ValueError, TypeError):
        raise InvalidInput(f"bad height {y!r}") from None


@dataclass(frozen=True)
class MixedCobinaryTree:
    heights: tuple[Fraction, ...]
    edges: tuple[tuple[int, int], ...]
    eps: SignVector

    def __post_init__(self):
        object.__setattr__(self, "eps", SignVector.parse(self.eps))
        object.__setattr__(self, "heights", tuple(_as_fraction(y) for y in self.heights))
        edges = []
        for e in self.edges:
            i, j = e
            if not (isinstance(i, int) and isinstance(j, int)):
                raise InvalidInput(f"edge endpoints must be integers, got {e!r}")
            edges.append((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", tuple(sorted(edges)))
        if len(self.heights) != self.eps.n + 1:
            raise InvalidInput(f"need {self.eps.n + 1} heights, got {len(self.heights)}")

    @property
    def n(self) -> int:
        return self.eps.n

    def point(self, i: int) -> tuple[Fraction, Fraction]:
        return Fraction(i), self.heights[i]

    def slope_signs(self) -> dict[tuple[int, int], int]:
        return {(i, j): (1 if self.heights[j] > self.heights[i] else -1) for i, j in self.edges}


@dataclass(frozen=True)
class MCTViolation:
    condition: str
    message: str

    def __bool__(self) -> bool:
        return False


def _height_on(edge: tuple[int, int], x: int, y: Sequence[Fraction]) -> Fraction:
    a, b = edge
    return y[a] + (y[b] - y[a]) * Fraction(x - a, b - a)


def _orient(p, q, r) -> int:
    v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (v > 0) - (v < 0)


def _on_segment(p, q, r) -> bool:
    # r collinear with p, q: is it inside the bounding box?
    return min(p[0], q[0]) <= r[0] <= max(p[0], q[0]) and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])


def segments_meet(p1, p2, q1, q2) -> bool:
    o1, o2 = _orient(p1, p2, q1), _orient(p1, p2, q2)
    o3, o4 = _orient(q1, q2, p1), _orient(q1, q2, p2)
    if o1 != o2 and o3 != o4:
        return True
    return (
        (o1 == 0 and _on_segment(p1, p2, q1))
        or (o2 == 0 and _on_segment(p1, p2, q2))
        or (o3 == 0 and _on_segment(q1, q2, p1))
        or (o4 == 0 and _on_segment(q1, q2, p2))
    )


def check_mct(T: MixedCobinaryTree) -> MCTViolation | None:
    """First violated condition, or None when ``T`` is a mixed cobinary tree."""
    n, y, eps = T.n, T.heights, T.eps
    if len(T.edges) != n or len(set(T.edges)) != n:
        return MCTViolation("tree", f"need {n} distinct edges, got {len(T.edges)}")
    uf = _UnionFind(n + 1)
    for i, j in T.edges:
        if i == j or j > n or i < 0:
            return MCTViolation("tree", f"bad edge ({i},{j})")
        if not uf.union(i, j):
            return MCTViolation("tree", f"edge ({i},{j}) closes a cycle")
    for i, j in T.edges:
        if y[i] == y[j]:
            return MCTViolation("horizontal", f"edge ({i},{j}) is horizontal")
    for v in range(n + 1):
        for e in T.edges:
            if e[0] < v < e[1]:
                z = _height_on(e, v, y)
                if eps.is_plus(v) and not y[v] > z:
                    return MCTViolation("above", f"+ vertex {v} is not above edge {e}")
                if not eps.is_plus(v) and not y[v] < z:
                    return MCTViolation("below", f"- vertex {v} is not below edge {e}")
    for v in range(n + 1):
        up = {-1: 0, 1: 0}
        down = {-1: 0, 1: 0}
        for i, j in T.edges:
            if v not in (i, j):
                continue
            w = j if v == i else i
            side = 1 if w > v else -1
            (up if y[w] > y[v] else down)[side] += 1
        many, few = (up, down) if eps.is_plus(v) else (down, up)
        if sum(few.values()) > 1:
            return MCTViolation("degree", f"vertex {v} has more than one {'descending' if eps.is_plus(v) else 'ascending'} edge")
        if many[-1] > 1 or many[1] > 1:
            return MCTViolation("degree", f"vertex {v} has two {'ascending' if eps.is_plus(v) else 'descending'} edges on one side")
    for e, f in combinations(T.edges, 2):
        shared = set(e) & set(f)
        p1, p2 = T.point(e[0]), T.point(e[1])
        q1, q2 = T.point(f[0]), T.point(f[1])
        if shared:
            (c,) = shared
            u = T.point(e[0] if e[1] == c else e[1])
            w = T.point(f[0] if f[1] == c else f[1])
            # sharing a vertex: overlap only if collinear and pointing the same way
            cp = T.point(c)
            if _orient(cp, u, w) == 0 and (u[0] - cp[0]) * (w[0] - cp[0]) > 0:
                return MCTViolation("segments", f"edges {e} and {f} overlap")
        elif segments_meet(p1, p2, q1, q2):
            return MCTViolation("segments", f"edges {e} and {f} meet away from their endpoints")
    return None


def is_valid_mct(T: MixedCobinaryTree) -> bool:
    return check_mct(T) is None


def mct_to_oriented(T: MixedCobinaryTree) -> OrientedDiagram:
    """Each edge points from its lower endpoint to its higher one."""
    bad = check_mct(T)
    if bad is not None:
        raise InvalidInput(f"not a mixed cobinary tree ({bad.condition}): {bad.message}")
    y = T.heights
    strands = [OrientedStrand(i, j) if y[i] < y[j] else OrientedStrand(j, i) for i, j in T.edges]
    return OrientedDiagram(tuple(strands), T.eps)


def realize(od: OrientedDiagram) -> MixedCobinaryTree:
    """Straight-line tree whose heights satisfy ``y_from < y_to`` on every strand.

    Heights are longest-path levels of the constraint digraph, plus ``i/(n+2)``
    to make them pairwise distinct.
    """
    n = od.eps.n
    preds: dict[int, list[int]] = {v: [] for v in range(n + 1)}
    for o in od.strands:
        if max(o.source, o.target) > n:
            raise InvalidInput(f"{o!r} does not fit n={n}")
        preds[o.target].append(o.source)
    level: dict[int, int] = {}
    visiting: set[int] = set()

    def depth(v: int) -> int:
        if v in level:
            return level[v]
        if v in visiting:
            raise InvalidInput("orientation constraints are cyclic")
        visiting.add(v)
        level[v] = max((depth(u) + 1 for u in preds[v]), default=0)
        visiting.discard(v)
        return level[v]

    heights = tuple(depth(v) + Fraction(v, n + 2) for v in range(n + 1))
    T = MixedCobinaryTree(heights, tuple((o.source, o.target) for o in od.strands), od.eps)
    if is_in_D_arrow(od):
        bad = check_mct(T)
        if bad is not None:
            raise InvariantError(f"realization is not a mixed cobinary tree: {bad.message}")
    return T


def cmatrix_of_mct(T: MixedCobinaryTree) -> CMatrix:
    """One row per edge ``(i1, i2)``: the slope sign times ``e_{i1+1} + ... + e_{i2}``."""
    n = T.n
    signs = T.slope_signs()
    return CMatrix(tuple(tuple(signs[(a, b)] if a < v <= b else 0 for v in range(1, n + 1)) for a, b in T.edges))


def isomorphic(T1: MixedCobinaryTree, T2: MixedCobinaryTree) -> bool:
    """Same edges, same slope signs."""
    return T1.eps == T2.eps and T1.edges == T2.edges and T1.slope_signs() == T2.slope_signs()


def region_contains(T: MixedCobinaryTree, y: Iterable) -> bool:
    heights = tuple(_as_fraction(v) for v in y)
    if len(set(heights)) != len(heights):
        raise InvalidInput("heights must be pairwise distinct")
    if len(heights) != T.n + 1:
        raise InvalidInput(f"need {T.n + 1} heights, got {len(heights)}")
    other = MixedCobinaryTree(heights, T.edges, T.eps)
    return is_valid_mct(other) and isomorphic(T, other)
