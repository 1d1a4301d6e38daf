"""JSON encodings of every object the CLI reads or writes."""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .chains import NoncrossingPartition, PartitionChain
from .errors import InvalidInput
from .mct import MixedCobinaryTree
from .posets import Poset
from .quiver import CMatrix, ExchangeMatrix
from .reps import IntervalRep
from .signs import SignVector
from .strands import Diagram, LabeledDiagram, OrientedDiagram, OrientedStrand, Strand


def dumps(obj: Any) -> str:
    return json.dumps(obj, ensure_ascii=False)


def _get(obj: dict, key: str):
    if not isinstance(obj, dict) or key not in obj:
        raise InvalidInput(f"record is missing the field {key!r}")
    return obj[key]


def _int(x) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise InvalidInput(f"expected an integer, got {x!r}")
    return x


def eps_from_json(obj: dict) -> SignVector:
    text = _get(obj, "epsilon")
    if not isinstance(text, str):
        raise InvalidInput("epsilon must be a string over {+,-}")
    return SignVector.parse(text)


def quiver_to_json(B: ExchangeMatrix, eps) -> dict:
    return {"n": B.n, "epsilon": str(SignVector.parse(eps)), "matrix": B.tolist()}


def quiver_from_json(obj: dict) -> tuple[ExchangeMatrix, SignVector]:
    eps = eps_from_json(obj)
    n = _int(_get(obj, "n"))
    B = ExchangeMatrix(tuple(tuple(_int(x) for x in row) for row in _get(obj, "matrix")))
    if B.n != n or eps.n != n:
        raise InvalidInput(f"n={n} disagrees with the matrix ({B.n} rows) or epsilon (n={eps.n})")
    return B, eps


def rep_to_json(X: IntervalRep) -> dict:
    return {"i": X.i, "j": X.j}


def rep_from_json(obj) -> IntervalRep:
    if isinstance(obj, (list, tuple)) and len(obj) == 2:
        return IntervalRep(_int(obj[0]), _int(obj[1]))
    return IntervalRep(_int(_get(obj, "i")), _int(_get(obj, "j")))


def ces_to_json(seq, eps) -> dict:
    return {"epsilon": str(SignVector.parse(eps)), "ces": [rep_to_json(X) for X in seq]}


def ces_from_json(obj: dict) -> tuple[tuple[IntervalRep, ...], SignVector]:
    return tuple(rep_from_json(x) for x in _get(obj, "ces")), eps_from_json(obj)


def collection_to_json(coll, eps) -> dict:
    return {"epsilon": str(SignVector.parse(eps)), "collection": [rep_to_json(X) for X in sorted(coll)]}


def strand_from_json(x) -> Strand:
    if not isinstance(x, (list, tuple)) or len(x) != 2:
        raise InvalidInput(f"a strand is [a, b], got {x!r}")
    return Strand(_int(x[0]), _int(x[1]))


def diagram_to_json(d: Diagram) -> dict:
    return {"epsilon": str(d.eps), "strands": [[s.a, s.b] for s in d.strands]}


def diagram_from_json(obj: dict) -> tuple[list[Strand], SignVector]:
    return [strand_from_json(x) for x in _get(obj, "strands")], eps_from_json(obj)


def labeled_to_json(ld: LabeledDiagram) -> dict:
    return {"epsilon": str(ld.eps), "labeled": [[s.a, s.b, lab] for s, lab in ld.pairs]}


def labeled_from_json(obj: dict) -> LabeledDiagram:
    pairs = []
    for x in _get(obj, "labeled"):
        if not isinstance(x, (list, tuple)) or len(x) != 3:
            raise InvalidInput(f"a labeled strand is [a, b, label], got {x!r}")
        pairs.append((Strand(_int(x[0]), _int(x[1])), _int(x[2])))
    ld = LabeledDiagram(tuple(pairs), eps_from_json(obj))
    for s in ld.strands:
        if s.b > ld.eps.n:
            raise InvalidInput(f"{s!r} does not fit on {ld.eps.n + 1} points")
    return ld


def oriented_to_json(od: OrientedDiagram) -> dict:
    return {"epsilon": str(od.eps), "oriented": [{"from": o.source, "to": o.target} for o in od.strands]}


def oriented_from_json(obj: dict) -> OrientedDiagram:
    eps = eps_from_json(obj)
    strands = []
    for x in _get(obj, "oriented"):
        o = OrientedStrand(_int(_get(x, "from")), _int(_get(x, "to")))
        if max(o.source, o.target) > eps.n:
            raise InvalidInput(f"{o!r} does not fit on {eps.n + 1} points")
        strands.append(o)
    return OrientedDiagram(tuple(strands), eps)


def cmatrix_to_json(C: CMatrix, eps) -> dict:
    return {"epsilon": str(SignVector.parse(eps)), "cmatrix": C.tolist()}


def cmatrix_from_json(obj: dict) -> tuple[CMatrix, SignVector]:
    eps = eps_from_json(obj)
    rows = tuple(tuple(_int(x) for x in row) for row in _get(obj, "cmatrix"))
    if len(rows) != eps.n or any(len(r) != eps.n for r in rows):
        raise InvalidInput(f"cmatrix must be {eps.n}x{eps.n}")
    return CMatrix(rows), eps


def _fraction_text(q: Fraction) -> str:
    return str(q)


def mct_to_json(T: MixedCobinaryTree) -> dict:
    return {
        "epsilon": str(T.eps),
        "heights": [_fraction_text(y) for y in T.heights],
        "edges": [[i, j] for i, j in T.edges],
    }


def mct_from_json(obj: dict) -> MixedCobinaryTree:
    heights = []
    for y in _get(obj, "heights"):
        if isinstance(y, float):
            raise InvalidInput("heights must be rational strings or integers, not floats")
        try:
            heights.append(Fraction(y))
        except (ValueError, TypeError):
            raise InvalidInput(f"bad height {y!r}") from None
    edges = []
    for e in _get(obj, "edges"):
        if not isinstance(e, (list, tuple)) or len(e) != 2:
            raise InvalidInput(f"an edge is [i, j], got {e!r}")
        edges.append((_int(e[0]), _int(e[1])))
    return MixedCobinaryTree(tuple(heights), tuple(edges), eps_from_json(obj))


def _element_to_json(x):
    if isinstance(x, Strand):
        return [x.a, x.b]
    return x


def _element_from_json(x):
    return tuple(x) if isinstance(x, list) else x


def poset_to_json(P: Poset) -> dict:
    order = {x: k for k, x in enumerate(P.elements)}
    covers = sorted(P.covers, key=lambda c: (order[c[0]], order[c[1]]))
    return {
        "elements": [_element_to_json(x) for x in P.elements],
        "covers": [[_element_to_json(lo), _element_to_json(hi)] for lo, hi in covers],
    }


def poset_from_json(obj: dict) -> Poset:
    elements = tuple(_element_from_json(x) for x in _get(obj, "elements"))
    covers = []
    for c in _get(obj, "covers"):
        if not isinstance(c, (list, tuple)) or len(c) != 2:
            raise InvalidInput(f"a cover is [lower, upper], got {c!r}")
        covers.append((_element_from_json(c[0]), _element_from_json(c[1])))
    try:
        return Poset(elements, frozenset(covers))
    except TypeError:
        raise InvalidInput("poset elements must be numbers, strings or lists") from None


def partition_to_json(p: NoncrossingPartition) -> list:
    return p.tolist()


def chain_to_json(chain: PartitionChain, eps) -> dict:
    return {"epsilon": str(SignVector.parse(eps)), "chain": chain.tolist()}


def chain_from_json(obj: dict) -> tuple[PartitionChain, SignVector]:
    eps = eps_from_json(obj)
    m = eps.n + 1
    parts = []
    for p in _get(obj, "chain"):
        if not isinstance(p, list):
            raise InvalidInput("a partition is a list of blocks")
        parts.append(NoncrossingPartition(m, tuple(tuple(_int(x) for x in b) for b in p)))
    return PartitionChain(tuple(parts)), eps
