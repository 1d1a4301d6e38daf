"""Posets of strand diagrams, linear extensions, rotation and poset realization."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

from .errors import InvalidInput, InvariantError, ResourceLimit, UnsupportedOrientation
from .signs import SignVector
from .strands import (
    DIAGRAM_BOUND,
    Diagram,
    Strand,
    clockwise_from,
    good_labelings,
    iter_diagrams,
    shared_endpoint,
)

LINEXT_BOUND = 12
TREES_BOUND = 7


@dataclass(frozen=True)
class Poset:
    """A finite poset given by its elements and cover pairs ``(lower, upper)``."""

    elements: tuple
    covers: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        elements = tuple(self.elements)
        if len(set(elements)) != len(elements):
            raise InvalidInput("poset elements must be distinct")
        object.__setattr__(self, "elements", elements)
        covers = frozenset(tuple(c) for c in self.covers)
        known = set(elements)
        for lo, hi in covers:
            if lo not in known or hi not in known or lo == hi:
                raise InvalidInput(f"bad cover pair ({lo!r}, {hi!r})")
        object.__setattr__(self, "covers", covers)

    def __len__(self) -> int:
        return len(self.elements)

    def index(self) -> dict:
        return {x: a for a, x in enumerate(self.elements)}

    def upper_covers(self, x) -> list:
        return [hi for lo, hi in self.covers if lo == x]

    def lower_covers(self, x) -> list:
        return [lo for lo, hi in self.covers if hi == x]

    def up_masks(self) -> list[int]:
        """``mask[a]``: bitset of elements strictly above element ``a``."""
        return _closure(len(self.elements), [(self.index()[lo], self.index()[hi]) for lo, hi in self.covers])

    def relabel(self, mapping: dict) -> "Poset":
        return Poset(tuple(mapping[x] for x in self.elements), frozenset((mapping[a], mapping[b]) for a, b in self.covers))

    def dual(self) -> "Poset":
        return Poset(self.elements, frozenset((hi, lo) for lo, hi in self.covers))


DiagramPoset = Poset


def _closure(m: int, pairs: Iterable[tuple[int, int]]) -> list[int]:
    above = [0] * m
    for lo, hi in pairs:
        above[lo] |= 1 << hi
    # Warshall on bitsets
    for k in range(m):
        bit = 1 << k
        for a in range(m):
            if above[a] & bit:
                above[a] |= above[k]
    for a in range(m):
        if above[a] >> a & 1:
            raise InvalidInput("order relation has a cycle")
    return above


def _reduction(m: int, above: list[int]) -> list[tuple[int, int]]:
    covers = []
    for a in range(m):
        for b in range(m):
            if above[a] >> b & 1:
                # b covers a unless some c lies strictly between
                if not any(above[a] >> c & 1 and above[c] >> b & 1 for c in range(m)):
                    covers.append((a, b))
    return covers


def poset_from_relations(elements: Sequence[Hashable], relations: Iterable[tuple]) -> Poset:
    """Poset generated by ``lower < upper`` pairs; the covers are the transitive reduction."""
    elements = tuple(elements)
    idx = {x: a for a, x in enumerate(elements)}
    try:
        pairs = [(idx[lo], idx[hi]) for lo, hi in relations]
    except KeyError as exc:
        raise InvalidInput(f"relation mentions unknown element {exc.args[0]!r}") from None
    above = _closure(len(elements), pairs)
    return Poset(elements, frozenset((elements[a], elements[b]) for a, b in _reduction(len(elements), above)))


def _raw_clockwise_pairs(d: Diagram) -> list[tuple[Strand, Strand]]:
    out = []
    for s in d.strands:
        for t in d.strands:
            if s != t and shared_endpoint(s, t) is not None and clockwise_from(t, s, d.eps):
                out.append((s, t))
    return out


def poset_of_diagram(d: Diagram) -> Poset:
    """``s < t`` whenever ``t`` is clockwise from ``s`` at a common point, closed transitively."""
    return poset_from_relations(d.strands, _raw_clockwise_pairs(d))


def covers_by_definition(d: Diagram) -> frozenset:
    """Cover pairs straight from the definition: ``t`` clockwise from ``s`` with no strand in between."""
    raw = set(_raw_clockwise_pairs(d))
    out = set()
    for s, t in raw:
        if not any((s, u) in raw and (u, t) in raw for u in d.strands if u not in (s, t)):
            out.add((s, t))
    return frozenset(out)


def count_linear_extensions(P: Poset, bound: int = LINEXT_BOUND) -> int:
    """Number of linear extensions, by dynamic programming over down-sets."""
    m = len(P)
    if m > bound:
        raise ResourceLimit(f"poset has {m} elements, above the bound {bound}", budget=bound)
    if m == 0:
        return 1
    idx = P.index()
    below = [0] * m
    for lo, hi in P.covers:
        below[idx[hi]] |= 1 << idx[lo]
    _closure(m, [(idx[lo], idx[hi]) for lo, hi in P.covers])  # rejects cycles
    ways = {0: 1}
    full = (1 << m) - 1
    # process down-sets in order of size; each is extended by one minimal element of the rest
    frontier = {0}
    for _ in range(m):
        nxt: dict[int, int] = {}
        for mask in frontier:
            w = ways[mask]
            for a in range(m):
                if not mask >> a & 1 and below[a] & ~mask == 0:
                    nm = mask | 1 << a
                    nxt[nm] = nxt.get(nm, 0) + w
        ways.update(nxt)
        frontier = set(nxt)
    return ways[full]


def _require_constant(eps: SignVector) -> None:
    if not eps.is_constant():
        raise UnsupportedOrientation(f"rotation needs a constant sign vector, got {eps}")


def rotate_strand(s: Strand, N: int, steps: int = 1) -> Strand:
    return Strand((s.a - steps) % N, (s.b - steps) % N)


def rotate(d: Diagram, steps: int = 1) -> Diagram:
    """Shift every endpoint down by ``steps`` modulo ``n+1``."""
    _require_constant(d.eps)
    N = d.n + 1
    return Diagram(tuple(rotate_strand(s, N, steps) for s in d.strands), d.eps)


@dataclass(frozen=True)
class PosetRealization:
    ok: bool
    diagram: Diagram | None = None
    mapping: dict | None = None
    failed_condition: str | None = None
    message: str = ""

    def to_dict(self) -> dict:
        out = {"ok": self.ok, "failed_condition": self.failed_condition, "message": self.message}
        if self.diagram is not None:
            out["epsilon"] = str(self.diagram.eps)
            out["strands"] = [[self.mapping[x].a, self.mapping[x].b] for x in sorted(self.mapping, key=repr)]
        return out


def check_realizable(P: Poset) -> tuple[str | None, str]:
    """Which of the three conditions fails: degree, acyclic Hasse graph, connected."""
    m = len(P)
    if m == 0:
        return "iii", "empty poset"
    for x in P.elements:
        if len(P.upper_covers(x)) > 2 or len(P.lower_covers(x)) > 2:
            return "i", f"{x!r} has more than two covers or covers more than two elements"
    idx = P.index()
    parent = list(range(m))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for lo, hi in sorted(P.covers, key=lambda c: (idx[c[0]], idx[c[1]])):
        ra, rb = find(idx[lo]), find(idx[hi])
        if ra == rb:
            return "ii", f"the Hasse diagram has a cycle through ({lo!r}, {hi!r})"
        parent[ra] = rb
    if len({find(a) for a in range(m)}) > 1:
        return "iii", "the Hasse diagram is disconnected"
    return None, ""


# A chord layout: number of points and element -> (p, q) chord.  Built for the
# all-minus orientation, where at a point p the chord with the smaller forward
# offset (q - p) mod N is the more clockwise one.
_Layout = tuple[int, dict]


def _offset(p: int, q: int, N: int) -> int:
    return (q - p) % N


def _clockwise_most_endpoint(layout: _Layout, y) -> int:
    N, chords = layout
    for p in chords[y]:
        q = chords[y][1] if p == chords[y][0] else chords[y][0]
        mine = _offset(p, q, N)
        others = [
            _offset(p, c[1] if c[0] == p else c[0], N) for z, c in chords.items() if z != y and p in c
        ]
        if all(mine < o for o in others):
            return p
    raise InvariantError(f"{y!r} is not clockwise-most at either endpoint")


def _rotate_layout(layout: _Layout, p: int, target: int) -> _Layout:
    N, chords = layout
    shift = target - p
    return N, {x: ((a + shift) % N, (b + shift) % N) for x, (a, b) in chords.items()}


def _build(P: Poset, members: list) -> _Layout:
    if len(members) == 1:
        return 2, {members[0]: (0, 1)}
    inside = set(members)
    order = {x: a for a, x in enumerate(P.elements)}
    maximal = [x for x in members if not any(h in inside for h in P.upper_covers(x))]
    x = min(maximal, key=order.__getitem__)
    below = [y for y in P.lower_covers(x) if y in inside]
    rest = [z for z in members if z != x]
    if len(below) == 1:
        (y,) = below
        N, chords = _build(P, rest)
        p = _clockwise_most_endpoint((N, chords), y)
        bump = lambda v: v + 1 if v > p else v
        chords = {z: (bump(a), bump(b)) for z, (a, b) in chords.items()}
        chords[x] = (p, p + 1)
        return N + 1, chords
    y, z = sorted(below, key=order.__getitem__)
    comp_y = _component(P, rest, y)
    comp_z = [w for w in rest if w not in comp_y]
    N1, c1 = _build(P, comp_y)
    N2, c2 = _build(P, comp_z)
    N1, c1 = _rotate_layout((N1, c1), _clockwise_most_endpoint((N1, c1), y), N1 - 1)
    N2, c2 = _rotate_layout((N2, c2), _clockwise_most_endpoint((N2, c2), z), N2 - 1)
    N = N1 + N2
    chords = dict(c1)
    chords.update({w: (a + N1, b + N1) for w, (a, b) in c2.items()})
    chords[x] = (N1 - 1, N - 1)
    return N, chords


def _component(P: Poset, members: list, start) -> list:
    inside = set(members)
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for lo, hi in P.covers:
            for a, b in ((lo, hi), (hi, lo)):
                if a == u and b in inside and b not in seen:
                    seen.add(b)
                    stack.append(b)
    return [w for w in members if w in seen]


def realize_poset(P: Poset, sign: str = "-") -> PosetRealization:
    """Find a full chord diagram whose poset is ``P``, or name the failed condition.

    Removes a maximal element ``x``, realizes the rest, and puts ``x`` back as
    a chord that is clockwise-most at the points it shares with the chords it
    covers.  For the all-plus orientation the dual poset is realized, since
    reversing every sign reverses the clockwise order.
    """
    sign = SignVector.parse(sign + sign)[0]
    P = poset_from_relations(P.elements, P.covers)
    cond, msg = check_realizable(P)
    if cond is not None:
        return PosetRealization(False, failed_condition=cond, message=msg)
    work = P if sign == "-" else P.dual()
    N, chords = _build(work, list(work.elements))
    eps = SignVector.constant(N - 1, sign)
    mapping = {x: Strand(*chords[x]) for x in P.elements}
    d = Diagram(tuple(mapping.values()), eps)
    got = poset_of_diagram(d)
    if got.covers != frozenset((mapping[a], mapping[b]) for a, b in P.covers):
        raise InvariantError("realized diagram has a different poset")
    return PosetRealization(True, d, mapping)


def short_chord_count(d: Diagram) -> int:
    """Number of ``i`` in ``0..n`` with ``c(i, i+1 mod n+1)`` in ``d``."""
    N = d.n + 1
    present = set(d.strands)
    return sum(Strand(min(i, (i + 1) % N), max(i, (i + 1) % N)) in present for i in range(N))


def count_trees_with_leaves(n: int, r: int, sign: str = "-", bound: int = TREES_BOUND) -> int:
    """Sum of linear-extension counts over full chord diagrams with ``r`` short chords."""
    if n < 1:
        raise InvalidInput("n must be at least 1")
    if n > bound:
        raise ResourceLimit(f"n={n} exceeds the tree-count bound {bound}", budget=bound)
    eps = SignVector.constant(n, sign)
    total = 0
    for d in iter_diagrams(eps, n, bound=max(bound, DIAGRAM_BOUND)):
        if short_chord_count(d) == r:
            total += count_linear_extensions(poset_of_diagram(d))
    return total


def leaf_distribution(n: int, sign: str = "-", bound: int = TREES_BOUND) -> dict[int, int]:
    if n > bound:
        raise ResourceLimit(f"n={n} exceeds the tree-count bound {bound}", budget=bound)
    eps = SignVector.constant(n, sign)
    out: dict[int, int] = {}
    for d in iter_diagrams(eps, n, bound=max(bound, DIAGRAM_BOUND)):
        r = short_chord_count(d)
        out[r] = out.get(r, 0) + count_linear_extensions(poset_of_diagram(d))
    return dict(sorted(out.items()))


def good_labeling_count(d: Diagram) -> int:
    return sum(1 for _ in good_labelings(d))
