"""Length-ratio bound and departure functions for pruned dictionaries.

For a pruned relation with factor bound ``k``, every pair ``(u, v)`` of
``R_ε`` on ``K`` satisfies ``|u| <= 2k|v|``.  Combined with a trim
deterministic recognizer of ``K`` with ``c`` states and the table

    m(q, q', g) = min{|w| : q·w = q', w represents g}

this yields the departure function

    D(n) = 2cℓ + ℓ · max{m(q, q', g) : |g| <= n},   ℓ = 2k,

with missing table entries counted as 0.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from . import automata as fa
from . import bimorphism as bim
from .automata import Dfa, Nfa, format_word
from .groups import GroupOracle
from .pruning import PruningResult
from .report import FAIL, PASS, VACUOUS, Report


def length_ratio_bound(k: int) -> int:
    if k < 1:
        raise ValueError("factor bound k must be at least 1")
    return 2 * k


def verify_length_ratio(res, ell: int, max_b_len: int) -> Report:
    """Check ``|u| <= ℓ|v|`` and ``|v| <= ℓ|u|`` on all pairs from inner words up to ``max_b_len``.

    ``res`` may be a :class:`PruningResult` or a bare bimorphism.
    """
    rel = res.h_pruned if isinstance(res, PruningResult) else res
    pairs = bim.enumerate_pairs(rel, max_b_len)
    bad = [{"u": format_word(u), "v": format_word(v)}
           for u, v in pairs if len(u) > ell * len(v) or len(v) > ell * len(u)]
    worst = max((max(len(u), len(v)) / max(1, min(len(u), len(v))) for u, v in pairs), default=0)
    return Report("verify_length_ratio", FAIL if bad else PASS,
                  {"ell": ell, "max_b_len": max_b_len, "pairs": len(pairs),
                   "worst_ratio": round(worst, 6)}, bad)


@dataclass(frozen=True)
class MTable:
    """Minimal path lengths ``m(q, q', g)`` with a witness word per entry."""

    entries: dict
    ball_bound: int
    depth_cap: int
    exact: bool

    def value(self, q: int, q2: int, g) -> int:
        hit = self.entries.get((q, q2, g))
        return 0 if hit is None else hit[0]

    def witness(self, q: int, q2: int, g):
        hit = self.entries.get((q, q2, g))
        return None if hit is None else hit[1]


def m_table(K_dfa: Dfa, oracle: GroupOracle, n: int, depth_cap: int) -> MTable:
    """Breadth-first search over ``(state, element)`` from every source state.

    Values found are exact shortest lengths.  The table is flagged exact
    when each search either exhausted its configuration space or found
    every triple with ``|g| <= n``; otherwise entries beyond ``depth_cap``
    may be missing and ``D`` is only a lower estimate.
    """
    if depth_cap < 1:
        raise ValueError("depth_cap must be positive")
    ball = oracle.ball(n)
    ball_set = set(ball)
    e = oracle.identity()
    entries = {}
    exact = True
    for q in range(K_dfa.n_states):
        start = (q, e)
        seen = {start: ()}
        layer = [start]
        exhausted = False
        for _ in range(depth_cap):
            nxt = []
            for s, g in layer:
                w = seen[(s, g)]
                for a, s2 in K_dfa.out_edges(s):
                    cfg = (s2, oracle.multiply(g, oracle.generator_map[a]))
                    if cfg not in seen:
                        seen[cfg] = w + (a,)
                        nxt.append(cfg)
            if not nxt:
                exhausted = True
                break
            layer = nxt
        found = 0
        for (s, g), w in seen.items():
            if g in ball_set:
                entries[(q, s, g)] = (len(w), w)
                found += 1
        if not exhausted and found < K_dfa.n_states * len(ball):
            exact = False
    return MTable(entries, n, depth_cap, exact)


@dataclass(frozen=True)
class DepartureTable:
    c: int
    k: int
    ell: int
    m: MTable
    K_dfa: Dfa
    norms: dict = field(repr=False)

    @property
    def ball_bound(self) -> int:
        return self.m.ball_bound

    @property
    def exact(self) -> bool:
        return self.m.exact

    def max_m(self, n: int) -> int:
        if n > self.ball_bound:
            raise ValueError(f"table only covers |g| <= {self.ball_bound}")
        return max((length for (_, _, g), (length, _) in self.m.entries.items()
                    if self.norms[g] <= n), default=0)

    def D(self, n: int) -> int:
        return 2 * self.c * self.ell + self.ell * self.max_m(n)

    def values(self) -> list[int]:
        return [self.D(n) for n in range(self.ball_bound + 1)]

    def report(self) -> Report:
        return Report("departure_function", PASS,
                      {"c": self.c, "k": self.k, "ell": self.ell, "ball_bound": self.ball_bound,
                       "depth_cap": self.m.depth_cap,
                       "D": {n: d for n, d in enumerate(self.values())},
                       "estimate": "exact" if self.exact else "lower-bound"})


def recognizer(K: Nfa) -> Dfa:
    """Trim minimal deterministic recognizer; every state is accessible and coaccessible."""
    return fa.trim(fa.minimize(K))


def departure_function(res: PruningResult, oracle: GroupOracle, n: int, depth_cap: int) -> DepartureTable:
    K_dfa = recognizer(res.K)
    table = m_table(K_dfa, oracle, n, depth_cap)
    norms = {g: oracle.norm(g) for (_, _, g) in table.entries}
    return DepartureTable(K_dfa.n_states, res.k, length_ratio_bound(res.k), table, K_dfa, norms)


def verify_departure(K: Nfa, oracle: GroupOracle, table: DepartureTable, n: int,
                     max_word_len: int) -> Report:
    """Every factor ``y`` of a ``K``-word with ``|y| > D(n)`` has norm at least ``n``."""
    bound = table.D(n)
    checked = 0
    min_norm = None
    bad = []
    for w in fa.enumerate_words(K, max_word_len):
        if len(w) <= bound:
            continue
        prefix = [oracle.identity()]
        for a in w:
            prefix.append(oracle.multiply(prefix[-1], oracle.generator_map[a]))
        for i in range(len(w)):
            for j in range(i + bound + 1, len(w) + 1):
                checked += 1
                d = oracle.element_distance(prefix[i], prefix[j])
                min_norm = d if min_norm is None else min(min_norm, d)
                if d < n:
                    bad.append({"word": format_word(w), "x": format_word(w[:i]),
                                "y": format_word(w[i:j]), "norm": d})
    details = {"n": n, "D(n)": bound, "max_word_len": max_word_len,
               "factorizations": checked, "min_norm": min_norm}
    if bad:
        status = FAIL
    elif checked == 0:
        status = VACUOUS
        details["vacuous_reason"] = "no K-word within the cap has a factor longer than D(n)"
    else:
        status = PASS
    return Report("verify_departure", status, details, bad)


def shortest_path(dfa: Dfa, source: int, targets) -> tuple:
    """A shortest word leading ``source`` into ``targets``, in shortlex order."""
    targets = set(targets)
    seen = {source: ()}
    queue = deque([source])
    while queue:
        s = queue.popleft()
        if s in targets:
            return seen[s]
        for a, s2 in dfa.out_edges(s):
            if s2 not in seen:
                seen[s2] = seen[s] + (a,)
                queue.append(s2)
    raise ValueError(f"no path from {source} to {sorted(targets)}")


def replay_departure_chain(res: PruningResult, oracle: GroupOracle, table: DepartureTable,
                           x: Sequence[str], y: Sequence[str], z: Sequence[str]) -> dict | None:
    """Recompute the inequality chain bounding ``|y|`` by ``D(|y|_G)`` for ``xyz ∈ K``.

    Picks ``x'``, ``z'`` as shortest connecting words and ``y'`` as the
    table witness for ``m(q1, q2, p(y))``, then evaluates

        |y| <= |x'yz'| <= ℓ|x'y'z'| <= 2cℓ + ℓ|y'| <= D(|y|_G).

    Returns ``None`` when ``|y|_G`` lies beyond the table's ball.
    """
    K_dfa = table.K_dfa
    x, y, z = tuple(x), tuple(y), tuple(z)
    if not fa.accepts(K_dfa, x + y + z):
        raise ValueError("xyz is not a word of K")
    q1 = K_dfa.run(x)
    q2 = K_dfa.run(y, start=q1)
    g = oracle.evaluate(y)
    norm = oracle.norm(g)
    if norm > table.ball_bound:
        return None
    y2 = table.m.witness(q1, q2, g)
    if y2 is None:
        return None
    x2 = shortest_path(K_dfa, K_dfa.initial, {q1})
    z2 = shortest_path(K_dfa, q2, K_dfa.finals)
    u, v = x2 + y + z2, x2 + y2 + z2
    c, ell = table.c, table.ell
    chain = [len(y), len(u), ell * len(v), 2 * c * ell + ell * len(y2), table.D(norm)]
    return {
        "x'": x2, "y'": y2, "z'": z2, "norm": norm, "chain": chain,
        "padding_within_c": len(x2) <= c and len(z2) <= c,
        "pair_in_relation": bim.contains_pair(res.h_pruned, u, v),
        "holds": all(a <= b for a, b in zip(chain, chain[1:])),
    }
