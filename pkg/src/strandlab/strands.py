"""Strands on n+1 signed points, strand diagrams, labelings and orientations.

Strands are index pairs only.  Whether two strands cross, and which of two
strands meeting at a point is clockwise from the other, are closed-form rules
in the signs of the points involved.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import InvalidInput, InvariantError, ResourceLimit
from .quiver import CMatrix
from .reps import IntervalRep, interval_of_vector, is_exceptional_sequence, first_bad_pair
from .signs import SignVector

DIAGRAM_BOUND = 7


@dataclass(frozen=True, order=True)
class Strand:
    a: int
    b: int

    def __post_init__(self):
        a, b = self.a, self.b
        if not (isinstance(a, int) and isinstance(b, int)) or a == b or min(a, b) < 0:
            raise InvalidInput(f"strand needs two distinct nonnegative endpoints, got ({a!r}, {b!r})")
        if a > b:
            object.__setattr__(self, "a", b)
            object.__setattr__(self, "b", a)

    def endpoints(self) -> tuple[int, int]:
        return self.a, self.b

    def other(self, p: int) -> int:
        return self.b if p == self.a else self.a

    def __repr__(self) -> str:
        return f"c({self.a},{self.b})"


def all_strands(n: int) -> list[Strand]:
    return [Strand(a, b) for a in range(n) for b in range(a + 1, n + 1)]


def phi(X: IntervalRep) -> Strand:
    return Strand(X.i, X.j)


def phi_inverse(s: Strand) -> IntervalRep:
    return IntervalRep(s.a, s.b)


def _fits(eps: SignVector, strands: Iterable[Strand]) -> None:
    for s in strands:
        if s.b > eps.n:
            raise InvalidInput(f"{s!r} does not fit on {eps.n + 1} points")


def crosses(s1: Strand, s2: Strand, eps) -> bool:
    """True when the two strands cannot be drawn without meeting in their interiors."""
    eps = SignVector.parse(eps)
    if s1 == s2:
        return False
    i, j = s1.a, s1.b
    k, l = s2.a, s2.b
    if len({i, j, k, l}) < 4:
        return False
    if k < i:
        i, j, k, l = k, l, i, j
    if j < k:
        return False
    if l > j:  # interlaced i < k < j < l
        return eps[k] == eps[j]
    return eps[k] != eps[l]  # nested i < k < l < j


def shared_endpoint(s1: Strand, s2: Strand) -> int | None:
    common = set(s1.endpoints()) & set(s2.endpoints())
    if len(common) != 1:
        return None
    return common.pop()


def clockwise_from(s1: Strand, s2: Strand, eps) -> bool:
    """Is ``s1`` clockwise from ``s2`` around their unique common endpoint?"""
    eps = SignVector.parse(eps)
    p = shared_endpoint(s1, s2)
    if p is None:
        return False
    x, y = s1.other(p), s2.other(p)
    plus = eps.is_plus
    if x > p and y < p:
        return not plus(p)
    if x < p and y > p:
        return plus(p)
    if x > p:  # common left endpoint
        a = min(x, y)
        return (not plus(a)) if x == a else plus(a)
    b = max(x, y)  # common right endpoint
    return plus(b) if x == b else not plus(b)


@dataclass(frozen=True)
class DiagramViolation:
    kind: str  # "crossing", "cycle", "duplicate", "range"
    strands: tuple[Strand, ...]
    message: str

    def __bool__(self) -> bool:
        return False

    def to_dict(self) -> dict:
        return {"kind": self.kind, "strands": [[s.a, s.b] for s in self.strands], "message": self.message}


@dataclass(frozen=True)
class Diagram:
    strands: tuple[Strand, ...]
    eps: SignVector

    def __post_init__(self):
        object.__setattr__(self, "eps", SignVector.parse(self.eps))
        object.__setattr__(self, "strands", tuple(sorted(set(self.strands))))

    @property
    def n(self) -> int:
        return self.eps.n

    def __len__(self) -> int:
        return len(self.strands)

    def __iter__(self) -> Iterator[Strand]:
        return iter(self.strands)

    def at(self, p: int) -> list[Strand]:
        return [s for s in self.strands if p in s.endpoints()]


class _UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        self.parent[rx] = ry
        return True


def validate_diagram(strands: Iterable[Strand], eps) -> Diagram | DiagramViolation:
    """Return the diagram, or a report of the first crossing pair or cycle."""
    eps = SignVector.parse(eps)
    strands = list(strands)
    for s in strands:
        if s.b > eps.n:
            return DiagramViolation("range", (s,), f"{s!r} does not fit on {eps.n + 1} points")
    if len(set(strands)) != len(strands):
        dup = next(s for s in strands if strands.count(s) > 1)
        return DiagramViolation("duplicate", (dup,), f"{dup!r} appears twice")
    ordered = sorted(strands)
    for s, t in combinations(ordered, 2):
        if crosses(s, t, eps):
            return DiagramViolation("crossing", (s, t), f"{s!r} and {t!r} cross")
    uf = _UnionFind(eps.n + 1)
    seen: list[Strand] = []
    for s in ordered:
        if not uf.union(s.a, s.b):
            cycle = _cycle_through(seen, s)
            return DiagramViolation("cycle", tuple(cycle), f"strands {cycle} form a cycle")
        seen.append(s)
    return Diagram(tuple(ordered), eps)


def _cycle_through(forest: list[Strand], closing: Strand) -> list[Strand]:
    # path from closing.a to closing.b inside the forest, plus the closing strand
    adj: dict[int, list[Strand]] = {}
    for s in forest:
        adj.setdefault(s.a, []).append(s)
        adj.setdefault(s.b, []).append(s)
    prev: dict[int, Strand | None] = {closing.a: None}
    stack = [closing.a]
    while stack:
        p = stack.pop()
        for s in adj.get(p, []):
            q = s.other(p)
            if q not in prev:
                prev[q] = s
                stack.append(q)
    path = []
    p = closing.b
    while prev[p] is not None:
        s = prev[p]
        path.append(s)
        p = s.other(p)
    return sorted(path + [closing])


def is_diagram(strands: Iterable[Strand], eps) -> bool:
    return isinstance(validate_diagram(strands, eps), Diagram)


def clockwise_order_at(strands: Sequence[Strand], p: int, eps) -> list[Strand]:
    """Strands through ``p`` from counterclockwise-most to clockwise-most.

    Asserts that the pairwise rule is a strict total order on them.
    """
    eps = SignVector.parse(eps)
    here = sorted(s for s in strands if p in s.endpoints())
    for s, t in combinations(here, 2):
        if clockwise_from(s, t, eps) == clockwise_from(t, s, eps):
            raise InvariantError(f"clockwise rule does not compare {s!r} and {t!r} at {p}")
    # rank = how many strands a strand is clockwise from
    ranked = sorted(here, key=lambda s: sum(clockwise_from(s, t, eps) for t in here if t != s))
    for lo, hi in zip(ranked, ranked[1:]):
        if not clockwise_from(hi, lo, eps):
            raise InvariantError(f"clockwise rule is not transitive at point {p}")
    return ranked


@dataclass(frozen=True)
class LabeledDiagram:
    pairs: tuple[tuple[Strand, int], ...]
    eps: SignVector

    def __post_init__(self):
        object.__setattr__(self, "eps", SignVector.parse(self.eps))
        object.__setattr__(self, "pairs", tuple(sorted(self.pairs, key=lambda p: p[1])))

    @property
    def strands(self) -> tuple[Strand, ...]:
        return tuple(s for s, _ in self.pairs)

    def label(self, s: Strand) -> int:
        for t, lab in self.pairs:
            if t == s:
                return lab
        raise KeyError(s)

    def diagram(self) -> Diagram:
        return Diagram(self.strands, self.eps)

    def __len__(self) -> int:
        return len(self.pairs)


def is_good_labeling(ld: LabeledDiagram) -> bool:
    """Labels are ``1..k`` and grow towards the clockwise side at every point."""
    k = len(ld.pairs)
    if sorted(lab for _, lab in ld.pairs) != list(range(1, k + 1)):
        return False
    if not is_diagram(ld.strands, ld.eps):
        return False
    labels = dict(ld.pairs)
    for p in range(ld.eps.n + 1):
        order = clockwise_order_at(ld.strands, p, ld.eps)
        if any(labels[s] > labels[t] for s, t in zip(order, order[1:])):
            return False
    return True


def phi_tilde(seq: Sequence[IntervalRep], eps) -> LabeledDiagram:
    """The ``l``-th term of a length-``k`` sequence becomes a strand labeled ``k+1-l``."""
    eps = SignVector.parse(eps)
    bad = first_bad_pair(seq, eps)
    if bad is not None:
        a, b = bad
        raise InvalidInput(f"not an exceptional sequence: ({seq[a]!r}, {seq[b]!r}) at positions {a + 1}, {b + 1}")
    k = len(seq)
    return LabeledDiagram(tuple((phi(X), k - pos) for pos, X in enumerate(seq)), eps)


def phi_tilde_inverse(ld: LabeledDiagram) -> tuple[IntervalRep, ...]:
    if not is_good_labeling(ld):
        raise InvalidInput("labeling is not good")
    seq = tuple(phi_inverse(s) for s, _ in sorted(ld.pairs, key=lambda p: -p[1]))
    if not is_exceptional_sequence(seq, ld.eps):
        raise InvariantError("good labeling mapped to a non-exceptional sequence")
    return seq


def _check_bound(eps: SignVector, k: int, bound: int) -> None:
    if not 1 <= k <= eps.n:
        raise InvalidInput(f"strand count k={k} must lie in 1..{eps.n}")
    if eps.n > bound:
        raise ResourceLimit(f"n={eps.n} exceeds the diagram bound {bound}", budget=bound)


def iter_diagrams(eps, k: int, bound: int = DIAGRAM_BOUND) -> Iterator[Diagram]:
    """k-strand diagrams in lexicographic order of their sorted strand lists."""
    eps = SignVector.parse(eps)
    _check_bound(eps, k, bound)
    pool = all_strands(eps.n)
    chosen: list[Strand] = []

    def extend(start: int, uf_parent: list[int]):
        if len(chosen) == k:
            yield Diagram(tuple(chosen), eps)
            return
        for idx in range(start, len(pool)):
            if len(pool) - idx < k - len(chosen):
                break
            s = pool[idx]
            if any(crosses(s, t, eps) for t in chosen):
                continue
            uf = _UnionFind(0)
            uf.parent = list(uf_parent)
            if not uf.union(s.a, s.b):
                continue
            chosen.append(s)
            yield from extend(idx + 1, uf.parent)
            chosen.pop()

    yield from extend(0, list(range(eps.n + 1)))


def enumerate_diagrams(eps, k: int | None = None, bound: int = DIAGRAM_BOUND) -> list[Diagram]:
    eps = SignVector.parse(eps)
    return list(iter_diagrams(eps, eps.n if k is None else k, bound))


def good_labelings(d: Diagram) -> Iterator[LabeledDiagram]:
    """All good labelings of ``d``, by backtracking over label assignments."""
    strands = list(d.strands)
    k = len(strands)
    # must_exceed[a] = indices b with label(a) > label(b) required
    must_exceed: list[set[int]] = [set() for _ in range(k)]
    for a, b in combinations(range(k), 2):
        if shared_endpoint(strands[a], strands[b]) is None:
            continue
        if clockwise_from(strands[a], strands[b], d.eps):
            must_exceed[a].add(b)
        else:
            must_exceed[b].add(a)
    labels = [0] * k

    def assign(lab: int):
        if lab > k:
            yield LabeledDiagram(tuple((strands[a], labels[a]) for a in range(k)), d.eps)
            return
        for a in range(k):
            if labels[a] == 0 and all(labels[b] != 0 for b in must_exceed[a]):
                labels[a] = lab
                yield from assign(lab + 1)
                labels[a] = 0

    yield from assign(1)


def iter_labeled(eps, k: int, bound: int = DIAGRAM_BOUND) -> Iterator[LabeledDiagram]:
    for d in iter_diagrams(eps, k, bound):
        yield from good_labelings(d)


def enumerate_labeled(eps, k: int | None = None, bound: int = DIAGRAM_BOUND) -> list[LabeledDiagram]:
    eps = SignVector.parse(eps)
    return list(iter_labeled(eps, eps.n if k is None else k, bound))


@dataclass(frozen=True, order=True)
class OrientedStrand:
    source: int
    target: int

    def __post_init__(self):
        if not (isinstance(self.source, int) and isinstance(self.target, int)):
            raise InvalidInput("oriented strand endpoints must be integers")
        if self.source == self.target or min(self.source, self.target) < 0:
            raise InvalidInput(f"bad oriented strand {self.source}->{self.target}")

    @property
    def strand(self) -> Strand:
        return Strand(self.source, self.target)

    @property
    def sign(self) -> int:
        return 1 if self.source < self.target else -1

    def __repr__(self) -> str:
        return f"c({self.source}->{self.target})"


@dataclass(frozen=True)
class OrientedDiagram:
    strands: tuple[OrientedStrand, ...]
    eps: SignVector = field(compare=True)

    def __post_init__(self):
        object.__setattr__(self, "eps", SignVector.parse(self.eps))
        object.__setattr__(self, "strands", tuple(sorted(set(self.strands), key=lambda o: (o.strand, o.source))))
        under = [o.strand for o in self.strands]
        if len(set(under)) != len(under):
            raise InvalidInput("an oriented diagram cannot hold both orientations of one strand")

    def underlying(self) -> Diagram:
        return Diagram(tuple(o.strand for o in self.strands), self.eps)


def is_in_D_arrow(od: OrientedDiagram) -> bool:
    return arrow_violation(od) is None


def arrow_violation(od: OrientedDiagram) -> str | None:
    """Why ``od`` fails the local shape test, or None if it passes.

    The diagram has to be full and valid.

    At a ``+`` point at most one strand leaves to each side and at most one
    arrives; at a ``-`` point at most one arrives from each side and at most
    one leaves.  When the lone strand of a point shares a side with one of the
    other two, it has to sit below it (``+``) or above it (``-``).
    """
    eps = od.eps
    if len(od.strands) != eps.n:
        return f"has {len(od.strands)} strands, a full diagram has {eps.n}"
    bad = validate_diagram([o.strand for o in od.strands], eps)
    if not isinstance(bad, Diagram):
        return bad.message
    for p in range(eps.n + 1):
        plus = eps.is_plus(p)
        # "paired" strands may be two (one per side); the "lone" one at most one
        paired = {-1: [], 1: []}
        lone = []
        for o in od.strands:
            if p not in (o.source, o.target):
                continue
            far = o.target if o.source == p else o.source
            side = 1 if far > p else -1
            outgoing = o.source == p
            if outgoing == plus:
                paired[side].append(o.strand)
            else:
                lone.append((side, o.strand))
        mark = "+" if plus else "-"
        if len(paired[-1]) > 1 or len(paired[1]) > 1:
            verb = "leave" if plus else "arrive at"
            return f"two strands {verb} point {p} ({mark}) on the same side"
        if len(lone) > 1:
            verb = "arrive at" if plus else "leave"
            return f"two strands {verb} point {p} ({mark})"
        for side, s in lone:
            for t in paired[side]:
                # clockwise means lower on the right and upper on the left
                s_lower = clockwise_from(s, t, eps) if side > 0 else clockwise_from(t, s, eps)
                if s_lower != plus:
                    where = "below" if plus else "above"
                    return f"at point {p} ({mark}) {s!r} has to pass {where} {t!r}"
    return None


def oriented_of_cmatrix(C, eps) -> OrientedDiagram:
    """Row ``+-dim X_{i1,i2}`` becomes the strand ``c(i1,i2)``, pointing right iff positive."""
    eps = SignVector.parse(eps)
    rows = [tuple(r) for r in getattr(C, "rows", C)]
    if any(len(r) != eps.n for r in rows):
        raise InvalidInput(f"c-matrix rows must have length {eps.n}")
    out = []
    for r in rows:
        X, s = interval_of_vector(r)
        out.append(OrientedStrand(X.i, X.j) if s > 0 else OrientedStrand(X.j, X.i))
    if len({o.strand for o in out}) != len(out):
        raise InvalidInput("c-matrix has two rows on the same interval")
    return OrientedDiagram(tuple(out), eps)


def cmatrix_of_oriented(od: OrientedDiagram) -> CMatrix:
    n = od.eps.n
    rows = []
    for o in sorted(od.strands, key=lambda o: o.strand):
        s = o.strand
        rows.append(tuple(o.sign if s.a < v <= s.b else 0 for v in range(1, n + 1)))
    return CMatrix(tuple(rows))


def iter_oriented_D_arrow(eps, bound: int = DIAGRAM_BOUND) -> Iterator[OrientedDiagram]:
    """Every full oriented diagram passing ``is_in_D_arrow``, by brute force over orientations."""
    eps = SignVector.parse(eps)
    for d in iter_diagrams(eps, eps.n, bound):
        for mask in range(1 << len(d.strands)):
            od = OrientedDiagram(
                tuple(
                    OrientedStrand(s.a, s.b) if not (mask >> t) & 1 else OrientedStrand(s.b, s.a)
                    for t, s in enumerate(d.strands)
                ),
                eps,
            )
            if is_in_D_arrow(od):
                yield od
