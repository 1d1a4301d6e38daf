"""Noncrossing partitions of [m] and the merge chains matching good-labeled chord diagrams.

Point ``i`` of the diagram corresponds to the element ``i+1`` of ``[n+1]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import InvalidInput, InvariantError, UnsupportedOrientation
from .signs import SignVector
from .strands import LabeledDiagram, Strand, is_good_labeling


@dataclass(frozen=True)
class NoncrossingPartition:
    """A set partition of ``{1..m}``; blocks are kept as sorted tuples in sorted order."""

    m: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(sorted(tuple(sorted(b)) for b in self.blocks))
        flat = [x for b in blocks for x in b]
        if any(len(b) == 0 for b in blocks) or sorted(flat) != list(range(1, self.m + 1)):
            raise InvalidInput(f"{[list(b) for b in blocks]} is not a set partition of [1..{self.m}]")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def singletons(cls, m: int) -> "NoncrossingPartition":
        return cls(m, tuple((i,) for i in range(1, m + 1)))

    def block_of(self, x: int) -> tuple[int, ...]:
        for b in self.blocks:
            if x in b:
                return b
        raise KeyError(x)

    def merge(self, x: int, y: int) -> "NoncrossingPartition":
        bx, by = self.block_of(x), self.block_of(y)
        if bx == by:
            raise InvalidInput(f"{x} and {y} already share a block")
        rest = [b for b in self.blocks if b not in (bx, by)]
        return NoncrossingPartition(self.m, tuple(rest) + (bx + by,))

    def tolist(self) -> list[list[int]]:
        return [list(b) for b in self.blocks]


def crossing_blocks(blocks: Iterable[Sequence[int]]) -> tuple[tuple, tuple] | None:
    """Two blocks with ``a < b < c < d``, ``a, c`` in one and ``b, d`` in the other."""
    blocks = [tuple(sorted(b)) for b in blocks]
    for k1 in range(len(blocks)):
        for k2 in range(k1 + 1, len(blocks)):
            tags = [t for _, t in sorted([(x, 1) for x in blocks[k1]] + [(x, 2) for x in blocks[k2]])]
            # a 1,2,1,2 pattern exists iff the tag sequence switches at least three times
            if sum(a != b for a, b in zip(tags, tags[1:])) >= 3:
                return blocks[k1], blocks[k2]
    return None


def is_noncrossing(p: NoncrossingPartition) -> bool:
    return crossing_blocks(p.blocks) is None


@dataclass(frozen=True)
class PartitionChain:
    partitions: tuple[NoncrossingPartition, ...]

    def __len__(self) -> int:
        return len(self.partitions)

    def tolist(self) -> list:
        return [p.tolist() for p in self.partitions]


def chain_problem(chain: PartitionChain) -> str | None:
    """First reason ``chain`` is not a merge chain of noncrossing partitions, or None."""
    parts = chain.partitions
    if not parts:
        return "empty chain"
    m = parts[0].m
    if parts[0] != NoncrossingPartition.singletons(m):
        return "step 1: chain must start at the all-singletons partition"
    for step, (prev, cur) in enumerate(zip(parts, parts[1:]), start=2):
        if cur.m != m:
            return f"step {step}: partition of a different ground set"
        gone = [b for b in prev.blocks if b not in cur.blocks]
        new = [b for b in cur.blocks if b not in prev.blocks]
        if len(gone) != 2 or len(new) != 1 or tuple(sorted(gone[0] + gone[1])) != new[0]:
            return f"step {step}: does not merge exactly two blocks"
        if not is_noncrossing(cur):
            return f"step {step}: partition is crossing"
    return None


def _require_constant(eps: SignVector) -> None:
    if not eps.is_constant():
        raise UnsupportedOrientation(f"partition chains need a constant sign vector, got {eps}")


def chain_of_labeled_diagram(ld: LabeledDiagram) -> PartitionChain:
    """Start from singletons and merge the blocks of ``i+1`` and ``j+1`` for each chord, by label."""
    _require_constant(ld.eps)
    if not is_good_labeling(ld):
        raise InvalidInput("labeling is not good")
    m = ld.eps.n + 1
    parts = [NoncrossingPartition.singletons(m)]
    for s, _ in ld.pairs:
        nxt = parts[-1].merge(s.a + 1, s.b + 1)
        bad = crossing_blocks(nxt.blocks)
        if bad is not None:
            raise InvariantError(f"merge produced crossing blocks {bad}")
        parts.append(nxt)
    return PartitionChain(tuple(parts))


def _run_ends(b1: Sequence[int], b2: Sequence[int], m: int, forward: bool) -> tuple[int, int]:
    """Last element of each block's run before the other block begins, reading cyclically."""
    order = list(range(1, m + 1)) if forward else list(range(m, 0, -1))
    tag = {x: 1 for x in b1}
    tag.update({x: 2 for x in b2})
    seq = [x for x in order if x in tag]
    ends = {}
    for pos, x in enumerate(seq):
        nxt = seq[(pos + 1) % len(seq)]
        if tag[nxt] != tag[x]:
            if tag[x] in ends:
                raise InvalidInput("the two merged blocks interleave")
            ends[tag[x]] = x
    return ends[1], ends[2]


def labeled_diagram_of_chain(chain: PartitionChain, sign: str = "-") -> LabeledDiagram:
    """Inverse of :func:`chain_of_labeled_diagram`.

    For the merge of blocks ``B1`` and ``B2`` the chord joins ``s-1`` and
    ``t-1``, where ``s`` (resp. ``t``) is the last element of ``B1`` (resp.
    ``B2``) met before the other block, reading ``1..m`` cyclically upward
    (all-minus) or downward (all-plus).
    """
    problem = chain_problem(chain)
    if problem is not None:
        raise InvalidInput(problem)
    m = chain.partitions[0].m
    if m < 2:
        raise InvalidInput("need at least two points")
    eps = SignVector.constant(m - 1, sign)
    pairs = []
    for label, (prev, cur) in enumerate(zip(chain.partitions, chain.partitions[1:]), start=1):
        b1, b2 = [b for b in prev.blocks if b not in cur.blocks]
        s, t = _run_ends(b1, b2, m, forward=(eps[0] == "-"))
        pairs.append((Strand(s - 1, t - 1), label))
    ld = LabeledDiagram(tuple(pairs), eps)
    if not is_good_labeling(ld):
        raise InvariantError("reconstructed labeling is not good")
    return ld


def iter_merge_chains(m: int, k: int) -> Iterator[PartitionChain]:
    """Every chain of ``k`` merges from singletons through noncrossing partitions of ``[m]``."""
    if not 0 <= k <= m - 1:
        raise InvalidInput(f"a chain on [1..{m}] has at most {m - 1} merges")
    start = NoncrossingPartition.singletons(m)

    def extend(parts):
        if len(parts) == k + 1:
            yield PartitionChain(tuple(parts))
            return
        blocks = parts[-1].blocks
        for a in range(len(blocks)):
            for b in range(a + 1, len(blocks)):
                nxt = parts[-1].merge(blocks[a][0], blocks[b][0])
                if is_noncrossing(nxt):
                    yield from extend(parts + [nxt])

    yield from extend([start])
