"""Interval representations of type-A quivers, Hom/Ext tables and exceptional sequences.

The indecomposable ``X_{i,j}`` (``0 <= i < j <= n``) has dimension vector
``e_{i+1} + ... + e_j``.  Hom and Ext^1 between two of them are read off from
closed-form case tables in the endpoints and the signs; every evaluation is
cross-checked against the Euler form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import InvalidInput, InvariantError, NotACollection, ResourceLimit
from .signs import SignVector

SEQUENCE_BOUND = 7


@dataclass(frozen=True, order=True)
class IntervalRep:
    i: int
    j: int

    def __post_init__(self):
        if not (isinstance(self.i, int) and isinstance(self.j, int)) or not 0 <= self.i < self.j:
            raise InvalidInput(f"interval needs integers 0 <= i < j, got ({self.i!r}, {self.j!r})")

    def dim_vector(self, n: int) -> tuple[int, ...]:
        if self.j > n:
            raise InvalidInput(f"X_{{{self.i},{self.j}}} does not live over n={n}")
        return tuple(1 if self.i < v <= self.j else 0 for v in range(1, n + 1))

    def support(self) -> range:
        return range(self.i + 1, self.j + 1)

    def __repr__(self) -> str:
        return f"X({self.i},{self.j})"


ExceptionalSequence = tuple[IntervalRep, ...]


@dataclass(frozen=True)
class HomExtProfile:
    hom: int
    ext: int


def all_intervals(n: int) -> list[IntervalRep]:
    return [IntervalRep(i, j) for i in range(n) for j in range(i + 1, n + 1)]


def interval_of_vector(vec: Sequence[int]) -> tuple[IntervalRep, int]:
    """Split ``+-(0..0 1..1 0..0)`` into its interval and sign."""
    nz = [v for v, x in enumerate(vec, 1) if x != 0]
    if not nz:
        raise InvalidInput(f"zero vector {list(vec)} is not +-dim of an interval")
    a, b = nz[0], nz[-1]
    s = vec[a - 1]
    if s not in (1, -1) or b - a + 1 != len(nz) or any(vec[v - 1] != s for v in nz):
        raise InvalidInput(f"{list(vec)} is not +-dim of an interval representation")
    return IntervalRep(a - 1, b), s


def _check(eps, *reps: IntervalRep) -> SignVector:
    eps = SignVector.parse(eps)
    for r in reps:
        if r.j > eps.n:
            raise InvalidInput(f"{r!r} does not fit n={eps.n}")
    return eps


def euler_form(x: Sequence[int], y: Sequence[int], eps) -> int:
    """``sum x_v y_v - sum over arrows a of x_{s(a)} y_{t(a)}`` for ``Q_eps``."""
    eps = SignVector.parse(eps)
    n = eps.n
    if len(x) != n or len(y) != n:
        raise InvalidInput(f"vectors must have length n={n}, got {len(x)} and {len(y)}")
    total = sum(a * b for a, b in zip(x, y))
    for v in range(1, n):
        # arrow between v and v+1: v -> v+1 when eps_v = +
        src, tgt = (v, v + 1) if eps.is_plus(v) else (v + 1, v)
        total -= x[src - 1] * y[tgt - 1]
    return total


def _table(U: IntervalRep, V: IntervalRep, eps: SignVector) -> tuple[int, int]:
    i, j = U.i, U.j
    k, l = V.i, V.j
    minus = lambda p: not eps.is_plus(p)
    plus = eps.is_plus
    if (i, j) == (k, l):
        return 1, 0
    # disjoint supports, not touching
    if j < k or l < i:
        return 0, 0
    # touching: U ends where V starts, or the other way round
    if j == k:
        return 0, int(plus(j))
    if l == i:
        return 0, int(minus(i))
    # common left endpoint; the shorter strand ends at the inner point s
    if i == k:
        s = min(j, l)
        if j < l:  # U short
            return int(minus(s)), 0
        return int(plus(s)), 0
    # common right endpoint; the shorter strand starts at the inner point b
    if j == l:
        b = max(i, k)
        if i > k:  # U short
            return int(plus(b)), 0
        return int(minus(b)), 0
    # interlaced with U to the left: i < k < j < l
    if i < k < j < l:
        return int(minus(k) and minus(j)), int(plus(k) and plus(j))
    # interlaced with V to the left: k < i < l < j
    if k < i < l < j:
        return int(plus(i) and plus(l)), int(minus(i) and minus(l))
    # V nested in U: i < k < l < j
    if i < k and l < j:
        return int(minus(k) and plus(l)), int(plus(k) and minus(l))
    # U nested in V: k < i < j < l
    return int(plus(i) and minus(j)), int(minus(i) and plus(j))


def hom_ext(U: IntervalRep, V: IntervalRep, eps) -> HomExtProfile:
    """``dim Hom(U, V)`` and ``dim Ext^1(U, V)`` over ``Q_eps``."""
    eps = _check(eps, U, V)
    hom, ext = _table(U, V, eps)
    n = eps.n
    chi = euler_form(U.dim_vector(n), V.dim_vector(n), eps)
    if hom - ext != chi:
        raise InvariantError(f"hom-ext={hom - ext} but <{U!r},{V!r}>={chi} for eps={eps}")
    return HomExtProfile(hom, ext)


def is_exceptional_pair(U: IntervalRep, V: IntervalRep, eps) -> bool:
    """``(U, V)`` is exceptional iff ``Hom(V, U) = 0`` and ``Ext^1(V, U) = 0``."""
    eps = _check(eps, U, V)
    hom, ext = _table(V, U, eps)
    return hom == 0 and ext == 0


def is_exceptional_sequence(seq: Sequence[IntervalRep], eps) -> bool:
    eps = _check(eps, *seq)
    return all(
        is_exceptional_pair(seq[a], seq[b], eps) for a in range(len(seq)) for b in range(a + 1, len(seq))
    )


def first_bad_pair(seq: Sequence[IntervalRep], eps) -> tuple[int, int] | None:
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            if not is_exceptional_pair(seq[a], seq[b], eps):
                return a, b
    return None


def iter_exceptional_sequences(eps, k: int, bound: int = SEQUENCE_BOUND) -> Iterator[ExceptionalSequence]:
    """Depth-first enumeration in lexicographic order of interval tuples."""
    eps = SignVector.parse(eps)
    n = eps.n
    if not 1 <= k <= n:
        raise InvalidInput(f"length k={k} must lie in 1..{n}")
    if n > bound:
        raise ResourceLimit(f"n={n} exceeds the exceptional-sequence bound {bound}", budget=bound)
    reps = all_intervals(n)
    N = len(reps)
    ok = [[a != b and is_exceptional_pair(reps[a], reps[b], eps) for b in range(N)] for a in range(N)]
    stack: list[int] = []

    def extend():
        if len(stack) == k:
            yield tuple(reps[a] for a in stack)
            return
        for b in range(N):
            if all(ok[a][b] for a in stack):
                stack.append(b)
                yield from extend()
                stack.pop()

    yield from extend()


def enumerate_exceptional_sequences(eps, k: int | None = None, bound: int = SEQUENCE_BOUND) -> list[ExceptionalSequence]:
    eps = SignVector.parse(eps)
    return list(iter_exceptional_sequences(eps, eps.n if k is None else k, bound))


def order_collection(coll: Iterable[IntervalRep], eps) -> ExceptionalSequence:
    """Order an exceptional collection into an exceptional sequence.

    Each step takes the smallest remaining ``E`` such that ``(E, W)`` is
    exceptional for every other remaining ``W``.
    """
    items = sorted(set(coll))
    eps = _check(eps, *items)
    for a in range(len(items)):
        for b in range(a + 1, len(items)):
            U, V = items[a], items[b]
            if not is_exceptional_pair(U, V, eps) and not is_exceptional_pair(V, U, eps):
                raise NotACollection(f"neither order of ({U!r}, {V!r}) is exceptional", pair=(U, V))
    remaining = list(items)
    out = []
    while remaining:
        for E in remaining:
            if all(is_exceptional_pair(E, W, eps) for W in remaining if W != E):
                break
        else:
            E = remaining[0]
            W = next(W for W in remaining if W != E and not is_exceptional_pair(E, W, eps))
            raise NotACollection(f"no exceptional ordering: stuck at ({E!r}, {W!r})", pair=(E, W))
        out.append(E)
        remaining.remove(E)
    return tuple(out)


@dataclass(frozen=True)
class SpeyerThomasVerdict:
    ok: bool
    sigma: tuple[int, ...] | None
    reps: tuple[IntervalRep, ...]
    signs: tuple[int, ...]
    message: str = ""

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "sigma": None if self.sigma is None else list(self.sigma),
            "reps": [[r.i, r.j] for r in self.reps],
            "signs": list(self.signs),
            "message": self.message,
        }


def verify_speyer_thomas(C, eps) -> SpeyerThomasVerdict:
    """Look for an ordering of the rows of ``C`` forming a complete exceptional sequence.

    Negative rows must come first, and same-sign rows must have no Hom between
    them in either direction.  ``sigma`` lists 1-based row indices in order.
    """
    eps = SignVector.parse(eps)
    rows = [tuple(r) for r in getattr(C, "rows", C)]
    if len(rows) != eps.n or any(len(r) != eps.n for r in rows):
        raise InvalidInput(f"c-matrix must be {eps.n}x{eps.n}")
    parsed = [interval_of_vector(r) for r in rows]
    reps = tuple(p[0] for p in parsed)
    signs = tuple(p[1] for p in parsed)
    n = eps.n
    for a in range(n):
        for b in range(n):
            if a != b and signs[a] == signs[b] and _table(reps[a], reps[b], eps)[0] != 0:
                return SpeyerThomasVerdict(
                    False, None, reps, signs, f"Hom(V_{a + 1}, V_{b + 1}) != 0 for same-sign rows"
                )
    order: list[int] = []
    used = [False] * n

    def search() -> bool:
        if len(order) == n:
            return True
        seen_positive = any(signs[a] > 0 for a in order)
        for b in range(n):
            if used[b] or (seen_positive and signs[b] < 0):
                continue
            if all(is_exceptional_pair(reps[a], reps[b], eps) for a in order):
                used[b] = True
                order.append(b)
                if search():
                    return True
                order.pop()
                used[b] = False
        return False

    if search():
        return SpeyerThomasVerdict(True, tuple(a + 1 for a in order), reps, signs)
    return SpeyerThomasVerdict(False, None, reps, signs, "no ordering forms a complete exceptional sequence")
