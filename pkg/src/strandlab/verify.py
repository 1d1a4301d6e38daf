"""Exhaustive cross-checks between the five models, one suite per statement."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable

from .chains import chain_of_labeled_diagram, chain_problem, iter_merge_chains, labeled_diagram_of_chain
from .errors import InvalidInput
from .mct import check_mct, cmatrix_of_mct, mct_to_oriented, realize, region_contains
from .oracles import linear_extensions_bruteforce, prufer_leaf_counts
from .posets import count_linear_extensions, leaf_distribution, poset_of_diagram
from .quiver import check_reddening_terminal, colors, enumerate_c_matrices, explore_exchange_graph
from .reps import all_intervals, enumerate_exceptional_sequences, is_exceptional_pair, verify_speyer_thomas
from .signs import SignVector, all_sign_vectors
from .strands import (
    cmatrix_of_oriented,
    clockwise_from,
    crosses,
    enumerate_diagrams,
    good_labelings,
    iter_oriented_D_arrow,
    phi,
    phi_tilde,
    phi_tilde_inverse,
    shared_endpoint,
    enumerate_labeled,
    oriented_of_cmatrix,
)


@dataclass
class Verdict:
    suite: str
    ok: bool = True
    checked: int = 0
    first_failure: dict | None = None
    epsilons: list[str] = field(default_factory=list)

    def fail(self, **witness) -> None:
        if self.ok:
            self.ok = False
            self.first_failure = witness

    def check(self, cond: bool, **witness) -> None:
        self.checked += 1
        if not cond:
            self.fail(**witness)

    def to_dict(self) -> dict:
        out = {"suite": self.suite, "ok": self.ok, "checked": self.checked, "epsilons": self.epsilons}
        if self.first_failure is not None:
            out["first_failure"] = self.first_failure
        return out


def _pair_classification(eps: SignVector, v: Verdict) -> None:
    for U, V in combinations(all_intervals(eps.n), 2):
        fwd, back = is_exceptional_pair(U, V, eps), is_exceptional_pair(V, U, eps)
        s, t = phi(U), phi(V)
        geo = (
            crosses(s, t, eps),
            clockwise_from(s, t, eps),
            clockwise_from(t, s, eps),
            shared_endpoint(s, t) is None and not crosses(s, t, eps),
        )
        hom = (not fwd and not back, fwd and not back, back and not fwd, fwd and back)
        v.check(geo == hom, epsilon=str(eps), pair=[[U.i, U.j], [V.i, V.j]], geometric=list(geo), homological=list(hom))


def _esbij(eps: SignVector, v: Verdict) -> None:
    for k in range(1, eps.n + 1):
        seqs = enumerate_exceptional_sequences(eps, k)
        labeled = enumerate_labeled(eps, k)
        images = {phi_tilde(xi, eps) for xi in seqs}
        v.check(
            len(seqs) == len(labeled) and images == set(labeled),
            epsilon=str(eps), k=k, sequences=len(seqs), labeled=len(labeled),
        )
        for ld in labeled:
            v.check(phi_tilde(phi_tilde_inverse(ld), ld.eps) == ld, epsilon=str(eps), labeled=[[s.a, s.b, l] for s, l in ld.pairs])


def _ecbij(eps: SignVector, v: Verdict) -> None:
    for k in range(1, eps.n + 1):
        collections = {frozenset(phi(X) for X in xi) for xi in enumerate_exceptional_sequences(eps, k)}
        diagrams = {frozenset(d.strands) for d in enumerate_diagrams(eps, k)}
        v.check(collections == diagrams, epsilon=str(eps), k=k, collections=len(collections), diagrams=len(diagrams))


def _cmat(eps: SignVector, v: Verdict) -> None:
    cmats = enumerate_c_matrices(eps)
    ods = [oriented_of_cmatrix(C, eps) for C in cmats]
    arrow = set(iter_oriented_D_arrow(eps))
    v.check(len(set(ods)) == len(cmats), epsilon=str(eps), problem="map from c-matrices is not injective")
    v.check(set(ods) == arrow, epsilon=str(eps), cmatrices=len(cmats), oriented=len(arrow))
    for C, od in zip(cmats, ods):
        T = realize(od)
        v.check(
            mct_to_oriented(T) == od
            and cmatrix_of_oriented(od).same_up_to_row_order(C)
            and cmatrix_of_mct(T).same_up_to_row_order(C),
            epsilon=str(eps), cmatrix=C.tolist(),
        )
        v.check(verify_speyer_thomas(C, eps).ok, epsilon=str(eps), cmatrix=C.tolist(), problem="no exceptional ordering")


def _mct(eps: SignVector, v: Verdict) -> None:
    for od in iter_oriented_D_arrow(eps):
        T = realize(od)
        bad = check_mct(T)
        v.check(bad is None, epsilon=str(eps), problem=None if bad is None else bad.message)
        v.check(mct_to_oriented(T) == od and region_contains(T, T.heights), epsilon=str(eps), edges=[list(e) for e in T.edges])


def _linext(eps: SignVector, v: Verdict) -> None:
    for d in enumerate_diagrams(eps, eps.n):
        P = poset_of_diagram(d)
        dp = count_linear_extensions(P)
        labelings = sum(1 for _ in good_labelings(d))
        brute = linear_extensions_bruteforce(P.elements, P.covers) if len(P) <= 8 else dp
        v.check(dp == labelings == brute, epsilon=str(eps), strands=[[s.a, s.b] for s in d.strands], dp=dp, labelings=labelings)


def _trees(eps: SignVector, v: Verdict) -> None:
    n = eps.n
    got = leaf_distribution(n, eps[0])
    want = prufer_leaf_counts(n + 1)
    v.check(got == want, epsilon=str(eps), diagrams=got, pruefer=want)


def _chains(eps: SignVector, v: Verdict) -> None:
    n = eps.n
    for k in range(1, n + 1):
        labeled = enumerate_labeled(eps, k)
        chains = list(iter_merge_chains(n + 1, k))
        v.check(len(labeled) == len(chains), epsilon=str(eps), k=k, labeled=len(labeled), chains=len(chains))
        for ld in labeled:
            C = chain_of_labeled_diagram(ld)
            v.check(chain_problem(C) is None and labeled_diagram_of_chain(C, eps[0]) == ld, epsilon=str(eps), labeled=[[s.a, s.b, l] for s, l in ld.pairs])
        for C in chains:
            v.check(chain_of_labeled_diagram(labeled_diagram_of_chain(C, eps[0])) == C, epsilon=str(eps), chain=C.tolist())
    v.check(len(list(iter_merge_chains(n + 1, n))) == (n + 1) ** (n - 1), epsilon=str(eps), problem="maximal chain count")


def _reddening(eps: SignVector, v: Verdict) -> None:
    G = explore_exchange_graph(eps)
    terminal = 0
    for R in G.states:
        if all(c == "red" for c in colors(R)):
            terminal += 1
            verdict = check_reddening_terminal(R, eps)
            v.check(verdict.ok, epsilon=str(eps), state=[list(r) for r in R.rows], message=verdict.message)
    v.check(terminal == 1, epsilon=str(eps), all_red_states=terminal)


@dataclass(frozen=True)
class Suite:
    run: Callable[[SignVector, Verdict], None]
    bound: int
    constant_only: bool = False


SUITES: dict[str, Suite] = {
    "maintech": Suite(_pair_classification, 8),
    "esbij": Suite(_esbij, 5),
    "ecbij": Suite(_ecbij, 5),
    "cmat": Suite(_cmat, 5),
    "mct": Suite(_mct, 5),
    "linext": Suite(_linext, 6),
    "trees": Suite(_trees, 7, constant_only=True),
    "chains": Suite(_chains, 5, constant_only=True),
    "reddening": Suite(_reddening, 5),
}


def run_suite(name: str, n: int, epsilons: Iterable | None = None) -> Verdict:
    """Run suite ``name`` over the given sign vectors (all of length n+1 by default)."""
    if name not in SUITES:
        raise InvalidInput(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    suite = SUITES[name]
    if not 1 <= n <= suite.bound:
        raise InvalidInput(f"suite {name} runs for 1 <= n <= {suite.bound}, got n={n}")
    if epsilons is None:
        eps_list = list(all_sign_vectors(n))
        if suite.constant_only:
            eps_list = [e for e in eps_list if e.is_constant()]
    else:
        eps_list = [SignVector.parse(e) for e in epsilons]
    for e in eps_list:
        if e.n != n:
            raise InvalidInput(f"epsilon {e} has n={e.n}, expected n={n}")
        if suite.constant_only and not e.is_constant():
            raise InvalidInput(f"suite {name} needs a constant sign vector, got {e}")
    v = Verdict(name, epsilons=[str(e) for e in eps_list])
    for e in eps_list:
        suite.run(e, v)
    return v
