"""Excising words padded by short one-tape-silent circuits.

Given a dictionary ``L`` and a Nivat presentation of ``R_ε``, determinize
the relation's automaton into ``W`` with ``k`` states.  A silent circuit
at ``q`` is a nonempty loop ``q --y--> q`` of length at most ``k`` whose
image on one tape is empty.  Accepted inner words whose run contains such
a loop pad the *other* tape with a detour that represents the identity, so
their image on that other tape is never a shortest representative.
Removing those images from ``L`` gives ``K``; restricting the relation to
``K × K`` gives an inner automaton in which every factor longer than ``k``
writes on both tapes.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import automata as fa
from . import bimorphism as bim
from .automata import Dfa, Nfa
from .bimorphism import FIRST, SECOND, TAPES, NivatBimorphism
from .groups import GroupOracle
from .report import FAIL, INCONCLUSIVE, PASS, Report
from .structure import EPS, QuasiAutomaticStructure, coverage


class PruningError(ValueError):
    pass


@dataclass(frozen=True)
class PruningResult:
    k: int
    K: Nfa
    h_pruned: NivatBimorphism
    source: Nfa
    W: Dfa
    per_state_debris: dict = field(default_factory=dict, compare=False)

    def debris_sizes(self) -> dict:
        """Per-state count of debris automaton states, ``(first, second)``."""
        return {q: tuple(d.n_states if d is not None else 0 for d in pair)
                for q, pair in sorted(self.per_state_debris.items())}


def _check_state(W: Nfa, q: int):
    if not 0 <= q < W.n_states:
        raise PruningError(f"state {q} is not a state of W")


def silent_circuits(bm: NivatBimorphism, q: int, tape: str, k: int) -> Nfa:
    """Loops ``q --y--> q`` with ``0 < |y| <= k`` built only from letters silent on ``tape``."""
    W = bm.h
    _check_state(W, q)
    silent = set(bm.silent_letters(tape))
    # state (s, i): at W-state s after i silent letters
    index = {}

    def sid(s, i):
        return index.setdefault((s, i), len(index))

    sid(q, 0)
    trans = set()
    frontier = {q}
    for i in range(k):
        nxt = set()
        for s in sorted(frontier):
            for b, s2 in W.out_edges(s):
                if b in silent:
                    trans.add((sid(s, i), b, sid(s2, i + 1)))
                    nxt.add(s2)
        frontier = nxt
    finals = {i for (s, n), i in index.items() if s == q and n > 0}
    return fa.trim(Nfa(W.alphabet, len(index), trans, 0, finals))


def debris_language(bm: NivatBimorphism, q: int, tape: str, k: int) -> Nfa:
    """Accepted inner words whose run passes a short ``tape``-silent circuit at ``q``.

    Prefix and suffix range over all of ``B*`` so that circuits at either
    end of the run are caught too.
    """
    W = bm.h
    _check_state(W, q)
    circuits = silent_circuits(bm, q, tape, k)
    if fa.is_empty(circuits):
        return fa.empty(W.alphabet)
    into_q = W.with_finals({q})
    from_q = W.with_initial(q)
    return fa.concat(fa.concat(into_q, circuits), from_q)


def prune(L: Nfa, r_eps: NivatBimorphism) -> PruningResult:
    if L.alphabet != r_eps.outer:
        raise PruningError("dictionary and relation use different alphabets")
    W = fa.trim(fa.minimize(r_eps.h))
    k = W.n_states
    on_W = r_eps.with_h(W)
    removed = fa.empty(L.alphabet)
    debris = {}
    for q in range(W.n_states):
        # L(q): first-tape-silent circuits, their padding lands on the second tape
        left = debris_language(on_W, q, FIRST, k)
        right = debris_language(on_W, q, SECOND, k)
        kept = []
        for lang, tape in ((left, SECOND), (right, FIRST)):
            if fa.is_empty(lang):
                kept.append(None)
                continue
            kept.append(lang)
            removed = fa.union(removed, bim.image(on_W.with_h(lang), tape))
        if kept != [None, None]:
            debris[q] = tuple(kept)
    K = fa.trim(fa.minimize(fa.difference(L, removed)))
    if fa.is_empty(K):
        raise PruningError(
            "pruning removed every word of the dictionary; debris at states "
            f"{sorted(debris)} covers L, so the relation cannot be R_ε of this dictionary")
    h_pruned = bim.restrict_ranges(on_W, K, K)
    return PruningResult(k, K, h_pruned, L, W, debris)


def prune_structure(s: QuasiAutomaticStructure) -> PruningResult:
    return prune(s.dictionary, s.relations[EPS])


def long_silent_factor_language(bm: NivatBimorphism, tape: str, k: int) -> Nfa:
    """``B* S^(k+1) B*`` where ``S`` are the letters silent on ``tape``."""
    B = bm.inner
    silent = bm.silent_letters(tape)
    n = k + 2
    trans = {(0, b, 0) for b in B} | {(n - 1, b, n - 1) for b in B}
    trans |= {(i, b, i + 1) for i in range(k + 1) for b in silent}
    return Nfa(B, n, trans, 0, {n - 1})


def verify_factor_property(res) -> bool:
    """Exact check that no accepted inner word has a silent factor longer than ``k``.

    ``res`` is a :class:`PruningResult`, or a ``(bimorphism, k)`` pair.
    """
    bm, k = (res.h_pruned, res.k) if isinstance(res, PruningResult) else res
    return all(fa.is_empty(fa.intersect(bm.h, long_silent_factor_language(bm, t, k)))
               for t in TAPES)


def verify_K_dictionary(res: PruningResult, oracle: GroupOracle, n: int, word_cap: int) -> Report:
    """Ball-coverage evidence that ``K`` still maps onto the group.

    An element missed by ``K`` is a failure when the original dictionary
    does represent it within ``word_cap`` (a shortest representative can
    never be pruned); otherwise the check cannot decide and says so.
    """
    rep = coverage(oracle, res.K, n, word_cap)
    if rep.ok:
        return Report("verify_K_dictionary", PASS, rep.details)
    before = {w["element"] for w in coverage(oracle, res.source, n, word_cap).witnesses}
    lost = [w for w in rep.witnesses if w["element"] not in before]
    status = FAIL if lost else INCONCLUSIVE
    details = dict(rep.details, lost_by_pruning=len(lost))
    return Report("verify_K_dictionary", status, details, rep.witnesses)
