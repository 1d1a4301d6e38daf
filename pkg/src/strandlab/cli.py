"""Command-line interface.

Exit codes: 0 success, 1 a verification found a counterexample, 2 bad usage
or input, 3 a conversion whose input lies outside the image of the target.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import deque
from typing import Callable, Iterator

from . import formats as fmt
from .chains import chain_of_labeled_diagram, iter_merge_chains, labeled_diagram_of_chain
from .errors import ResourceLimit, StrandlabError
from .export import dot_exchange_graph, dot_poset, svg_diagram, svg_mct
from .mct import cmatrix_of_mct, mct_to_oriented, realize
from .posets import count_linear_extensions, count_trees_with_leaves, poset_of_diagram, realize_poset
from .quiver import (
    build_framed_type_a,
    c_matrix,
    check_reddening_terminal,
    colors,
    enumerate_c_matrices,
    explore_exchange_graph,
    mutate_sequence,
)
from .reps import iter_exceptional_sequences, verify_speyer_thomas
from .signs import SignVector
from .strands import (
    Diagram,
    arrow_violation,
    cmatrix_of_oriented,
    iter_diagrams,
    iter_labeled,
    iter_oriented_D_arrow,
    oriented_of_cmatrix,
    phi_tilde,
    phi_tilde_inverse,
    validate_diagram,
)
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_OUT_OF_IMAGE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class OutOfImage(Exception):
    pass


def _read_json(path: str):
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc.msg} (line {exc.lineno})") from None


def _emit(record) -> None:
    sys.stdout.write(fmt.dumps(record) + "\n")


def _eps(args) -> SignVector:
    if not getattr(args, "epsilon", None):
        raise UsageError("--epsilon is required")
    return SignVector.parse(args.epsilon)


# enumerate -----------------------------------------------------------------


def _enum_records(target: str, eps: SignVector, k: int | None) -> Iterator[dict]:
    n = eps.n
    k = n if k is None else k
    if target == "ces":
        for xi in iter_exceptional_sequences(eps, k):
            yield fmt.ces_to_json(xi, eps)
    elif target == "collections":
        seen = sorted({tuple(sorted(xi)) for xi in iter_exceptional_sequences(eps, k)})
        for coll in seen:
            yield fmt.collection_to_json(coll, eps)
    elif target == "diagrams":
        for d in iter_diagrams(eps, k):
            yield fmt.diagram_to_json(d)
    elif target == "labeled":
        for ld in iter_labeled(eps, k):
            yield fmt.labeled_to_json(ld)
    elif target == "oriented":
        for od in iter_oriented_D_arrow(eps):
            yield fmt.oriented_to_json(od)
    elif target == "cmatrices":
        for C in enumerate_c_matrices(eps):
            yield fmt.cmatrix_to_json(C, eps)
    elif target == "mcts":
        for od in iter_oriented_D_arrow(eps):
            yield fmt.mct_to_json(realize(od))
    elif target == "chains":
        if not eps.is_constant():
            raise UsageError("chains need a constant sign vector")
        for C in iter_merge_chains(n + 1, k):
            yield fmt.chain_to_json(C, eps)
    else:
        raise UsageError(f"unknown target {target!r}")


ENUM_TARGETS = ["ces", "collections", "diagrams", "labeled", "oriented", "cmatrices", "mcts", "chains"]


def cmd_enumerate(args) -> int:
    eps = _eps(args)
    count = 0
    for rec in _enum_records(args.target, eps, args.k):
        _emit(rec)
        count += 1
    _emit({"summary": {"target": args.target, "epsilon": str(eps), "count": count}})
    return EXIT_OK


def cmd_cmats(args) -> int:
    args.target, args.k = "cmatrices", None
    return cmd_enumerate(args)


# mutation --------------------------------------------------------------------


def _parse_seq(text: str | None) -> list[int]:
    if not text:
        return []
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise UsageError(f"--seq must be comma-separated integers, got {text!r}") from None


def _load_state(args):
    if args.input:
        B, eps = fmt.quiver_from_json(_read_json(args.input))
    else:
        eps = _eps(args)
        B = build_framed_type_a(eps)
    return mutate_sequence(B, _parse_seq(args.seq)), eps


def cmd_mutate(args) -> int:
    B, eps = _load_state(args)
    rec = fmt.quiver_to_json(B, eps)
    if B.m == 2 * B.n:
        rec["cmatrix"] = c_matrix(B).tolist()
        rec["colors"] = colors(B)
    _emit(rec)
    return EXIT_OK


def cmd_reddening_check(args) -> int:
    B, eps = _load_state(args)
    verdict = check_reddening_terminal(B, eps)
    _emit(verdict.to_dict())
    return EXIT_OK if verdict.ok else EXIT_FAILED


# convert ---------------------------------------------------------------------


def _to_labeled_from_ces(obj):
    xi, eps = fmt.ces_from_json(obj)
    return fmt.labeled_to_json(phi_tilde(xi, eps))


def _to_ces_from_labeled(obj):
    ld = fmt.labeled_from_json(obj)
    return fmt.ces_to_json(phi_tilde_inverse(ld), ld.eps)


def _to_oriented_from_cmatrix(obj):
    C, eps = fmt.cmatrix_from_json(obj)
    od = oriented_of_cmatrix(C, eps)
    bad = validate_diagram([o.strand for o in od.strands], eps)
    if not isinstance(bad, Diagram):
        raise StrandlabError(f"rows do not form a diagram: {bad.message}")
    why = arrow_violation(od)
    if why is not None:
        raise OutOfImage(f"not a c-matrix: its oriented diagram fails the local rule: {why}")
    return fmt.oriented_to_json(od)


def _require_arrow(od):
    bad = validate_diagram([o.strand for o in od.strands], od.eps)
    if not isinstance(bad, Diagram):
        raise StrandlabError(f"not a diagram: {bad.message}")
    why = arrow_violation(od)
    if why is not None:
        raise OutOfImage(f"oriented diagram fails the local rule: {why}")


def _to_cmatrix_from_oriented(obj):
    od = fmt.oriented_from_json(obj)
    _require_arrow(od)
    return fmt.cmatrix_to_json(cmatrix_of_oriented(od), od.eps)


def _to_mct_from_oriented(obj):
    od = fmt.oriented_from_json(obj)
    _require_arrow(od)
    return fmt.mct_to_json(realize(od))


def _to_oriented_from_mct(obj):
    return fmt.oriented_to_json(mct_to_oriented(fmt.mct_from_json(obj)))


def _to_cmatrix_from_mct(obj):
    T = fmt.mct_from_json(obj)
    mct_to_oriented(T)  # validates
    return fmt.cmatrix_to_json(cmatrix_of_mct(T), T.eps)


def _to_chain_from_labeled(obj):
    ld = fmt.labeled_from_json(obj)
    if not ld.eps.is_constant():
        raise OutOfImage("partition chains exist only for constant sign vectors")
    return fmt.chain_to_json(chain_of_labeled_diagram(ld), ld.eps)


def _to_labeled_from_chain(obj):
    chain, eps = fmt.chain_from_json(obj)
    if not eps.is_constant():
        raise UsageError("partition chains need a constant sign vector")
    return fmt.labeled_to_json(labeled_diagram_of_chain(chain, eps[0]))


CONVERSIONS: dict[tuple[str, str], Callable[[dict], dict]] = {
    ("ces", "labeled"): _to_labeled_from_ces,
    ("labeled", "ces"): _to_ces_from_labeled,
    ("cmatrix", "oriented"): _to_oriented_from_cmatrix,
    ("oriented", "cmatrix"): _to_cmatrix_from_oriented,
    ("oriented", "mct"): _to_mct_from_oriented,
    ("mct", "oriented"): _to_oriented_from_mct,
    ("mct", "cmatrix"): _to_cmatrix_from_mct,
    ("labeled", "chain"): _to_chain_from_labeled,
    ("chain", "labeled"): _to_labeled_from_chain,
}
KINDS = sorted({k for pair in CONVERSIONS for k in pair})


def conversion_path(src: str, dst: str) -> list[tuple[str, str]]:
    """Shortest chain of conversion edges from ``src`` to ``dst``."""
    prev = {src: None}
    queue = deque([src])
    while queue:
        u = queue.popleft()
        for a, b in sorted(CONVERSIONS):
            if a == u and b not in prev:
                prev[b] = a
                queue.append(b)
    if dst not in prev:
        raise UsageError(f"no conversion from {src} to {dst}")
    path = []
    node = dst
    while prev[node] is not None:
        path.append((prev[node], node))
        node = prev[node]
    return path[::-1]


def convert(obj: dict, src: str, dst: str) -> dict:
    for edge in conversion_path(src, dst):
        obj = CONVERSIONS[edge](obj)
    return obj


def cmd_convert(args) -> int:
    if args.src == args.dst:
        raise UsageError("--from and --to are the same")
    _emit(convert(_read_json(args.input), args.src, args.dst))
    return EXIT_OK


# verify / count / export -------------------------------------------------------


def cmd_verify(args) -> int:
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}")
    epsilons = None
    if args.epsilon and not args.all_epsilon:
        epsilons = [args.epsilon]
    n = args.n if args.n is not None else (SignVector.parse(args.epsilon).n if args.epsilon else None)
    if n is None:
        raise UsageError("give --n or --epsilon")
    verdict = run_suite(args.suite, n, epsilons)
    _emit(verdict.to_dict())
    return EXIT_OK if verdict.ok else EXIT_FAILED


def cmd_count(args) -> int:
    if args.target == "trees":
        if args.n is None:
            raise UsageError("count trees needs --n")
        rs = [args.r] if args.r is not None else list(range(0, args.n + 2))
        out = {str(r): count_trees_with_leaves(args.n, r) for r in rs}
        _emit({"target": "trees", "n": args.n, "by_leaves": out})
    elif args.target == "linext":
        if not args.input:
            raise UsageError("count linext needs --input with a poset or diagram")
        obj = _read_json(args.input)
        if "strands" in obj:
            strands, eps = fmt.diagram_from_json(obj)
            d = validate_diagram(strands, eps)
            if not isinstance(d, Diagram):
                raise UsageError(d.message)
            P = poset_of_diagram(d)
        else:
            P = fmt.poset_from_json(obj)
        _emit({"target": "linext", "count": count_linear_extensions(P)})
    elif args.target == "realize":
        if not args.input:
            raise UsageError("count realize needs --input with a poset")
        result = realize_poset(fmt.poset_from_json(_read_json(args.input)), args.sign)
        _emit(result.to_dict())
        return EXIT_OK if result.ok else EXIT_FAILED
    else:
        eps = _eps(args)
        count = sum(1 for _ in _enum_records(args.target, eps, args.k))
        _emit({"target": args.target, "epsilon": str(eps), "count": count})
    return EXIT_OK


def cmd_speyer_thomas(args) -> int:
    C, eps = fmt.cmatrix_from_json(_read_json(args.input))
    verdict = verify_speyer_thomas(C, eps)
    _emit(verdict.to_dict())
    return EXIT_OK if verdict.ok else EXIT_FAILED


def cmd_export(args) -> int:
    if args.exchange_graph:
        if args.format != "dot":
            raise UsageError("the exchange graph exports only as dot")
        text = dot_exchange_graph(explore_exchange_graph(_eps(args)))
    else:
        if not args.input:
            raise UsageError("export needs --input (or --exchange-graph)")
        obj = _read_json(args.input)
        text = _export_record(obj, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _export_record(obj: dict, form: str) -> str:
    if not isinstance(obj, dict):
        raise UsageError("export input must be a JSON object")
    if "covers" in obj:
        if form != "dot":
            raise UsageError("posets export only as dot")
        return dot_poset(fmt.poset_from_json(obj))
    if "heights" in obj:
        if form != "svg":
            raise UsageError("trees export only as svg")
        T = fmt.mct_from_json(obj)
        mct_to_oriented(T)
        return svg_mct(T)
    if "labeled" in obj:
        d = fmt.labeled_from_json(obj)
        under = d.diagram()
    elif "oriented" in obj:
        d = fmt.oriented_from_json(obj)
        under = d.underlying()
    elif "strands" in obj:
        strands, eps = fmt.diagram_from_json(obj)
        d = under = validate_diagram(strands, eps)
        if not isinstance(d, Diagram):
            raise UsageError(d.message)
    else:
        raise UsageError("cannot tell what kind of record this is")
    checked = validate_diagram(under.strands, under.eps)
    if not isinstance(checked, Diagram):
        raise UsageError(checked.message)
    if form == "svg":
        return svg_diagram(d)
    return dot_poset(poset_of_diagram(checked))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="strandlab", description="Exceptional sequences of type-A quivers and their combinatorial models.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_state(sp):
        sp.add_argument("--epsilon", help="sign string over {+,-} of length n+1; starts from the framed quiver")
        sp.add_argument("--input", help="quiver JSON file ('-' for stdin) instead of --epsilon")
        sp.add_argument("--seq", help="comma-separated mutable vertices, applied left to right")

    sp = sub.add_parser("mutate", help="apply a mutation sequence and print the resulting quiver")
    with_state(sp)
    sp.set_defaults(func=cmd_mutate)

    sp = sub.add_parser("reddening-check", help="check an all-red state against the coframed quiver")
    with_state(sp)
    sp.set_defaults(func=cmd_reddening_check)

    sp = sub.add_parser("cmats", help="list the c-matrices of Q_epsilon as NDJSON")
    sp.add_argument("--epsilon", required=True)
    sp.set_defaults(func=cmd_cmats)

    sp = sub.add_parser("enumerate", help="stream one model's objects as NDJSON")
    sp.add_argument("--target", required=True, help="|".join(ENUM_TARGETS))
    sp.add_argument("--epsilon", required=True)
    sp.add_argument("--k", type=int, help="number of terms or strands (default n)")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("convert", help="convert a record between models")
    sp.add_argument("--from", dest="src", required=True, choices=KINDS)
    sp.add_argument("--to", dest="dst", required=True, choices=KINDS)
    sp.add_argument("--input", required=True, help="JSON file, '-' for stdin")
    sp.set_defaults(func=cmd_convert)

    sp = sub.add_parser("verify", help="run an exhaustive cross-check suite")
    sp.add_argument("--suite", required=True, help="|".join(SUITES))
    sp.add_argument("--n", type=int)
    sp.add_argument("--epsilon")
    sp.add_argument("--all-epsilon", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("count", help="count objects, trees by leaves, linear extensions, or realize a poset")
    sp.add_argument("--target", required=True, help="|".join(ENUM_TARGETS + ["trees", "linext", "realize"]))
    sp.add_argument("--epsilon")
    sp.add_argument("--k", type=int)
    sp.add_argument("--n", type=int)
    sp.add_argument("--r", type=int)
    sp.add_argument("--sign", default="-", choices=["+", "-"])
    sp.add_argument("--input")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("speyer-thomas", help="order the rows of a c-matrix into a complete exceptional sequence")
    sp.add_argument("--input", required=True)
    sp.set_defaults(func=cmd_speyer_thomas)

    sp = sub.add_parser("export", help="render a record as SVG or DOT")
    sp.add_argument("--format", required=True, choices=["svg", "dot"])
    sp.add_argument("--input")
    sp.add_argument("--exchange-graph", action="store_true", help="DOT of the exchange graph of --epsilon")
    sp.add_argument("--epsilon")
    sp.add_argument("--output")
    sp.set_defaults(func=cmd_export)
    return p


def _glue_sign_values(argv: list[str]) -> list[str]:
    # "--epsilon ---" would otherwise be read as an option named "---", and argparse
    # drops a bare "--" value; the unicode minus is an accepted alias for "-"
    out = []
    k = 0
    while k < len(argv):
        a = argv[k]
        if a == "--epsilon" and k + 1 < len(argv) and set(argv[k + 1]) <= set("+-−") and argv[k + 1]:
            out.append("--epsilon=" + argv[k + 1].replace("-", "\u2212"))
            k += 2
            continue
        out.append(a)
        k += 1
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = _glue_sign_values(sys.argv[1:] if argv is None else list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except OutOfImage as exc:
        print(f"strandlab: out of image: {exc}", file=sys.stderr)
        return EXIT_OUT_OF_IMAGE
    except (UsageError, ResourceLimit, StrandlabError) as exc:
        print(f"strandlab: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
