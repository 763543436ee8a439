"""Cayley-graph checks on dictionaries: Lipschitz Hausdorff and weakly Lipschitz.

Pairs of dictionary words at distance at most 1 are generated through the
group oracle, not through the stored relations, so these checks are
independent of the relation automata.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Sequence

from . import automata as fa
from .automata import format_word
from .groups import GroupOracle
from .report import FAIL, PASS, VACUOUS, Report


@dataclass(frozen=True)
class Rewriting:
    """Aligned spelling ``u = a_1…a_n``, ``v = b_1…b_n`` with ``a_i, b_i`` in ``A ∪ {ε}``."""

    pairs: tuple

    @property
    def source(self):
        return tuple(a for a, _ in self.pairs if a)

    @property
    def target(self):
        return tuple(b for _, b in self.pairs if b)

    def __str__(self):
        return " ".join(f"({a or 'ε'},{b or 'ε'})" for a, b in self.pairs)


def prefix_elements(oracle: GroupOracle, w: Sequence[str]) -> list:
    """Elements of all prefixes of ``w``, the empty prefix first."""
    out = [oracle.identity()]
    for a in w:
        out.append(oracle.multiply(out[-1], oracle.generator_map[a]))
    return out


def one_sided_hausdorff(oracle: GroupOracle, u, v) -> int:
    """``max_p min_q d(p, q)`` over prefixes ``p`` of ``u`` and ``q`` of ``v``."""
    pu, pv = prefix_elements(oracle, u), prefix_elements(oracle, v)
    return max(min(oracle.element_distance(p, q) for q in pv) for p in pu)


def hausdorff_prefix_distance(oracle: GroupOracle, u, v) -> int:
    return max(one_sided_hausdorff(oracle, u, v), one_sided_hausdorff(oracle, v, u))


def close_pairs(s, max_len: int):
    """Dictionary word pairs ``(u, v)`` with ``d(u, v) <= 1``, in shortlex order."""
    o = s.oracle
    words = fa.enumerate_words(s.dictionary, max_len)
    values = [o.evaluate(w) for w in words]
    for u, gu in zip(words, values):
        for v, gv in zip(words, values):
            if o.element_distance(gu, gv) <= 1:
                yield u, v


def check_lipschitz_hausdorff(s, max_len: int) -> tuple[int, Report]:
    worst = 0
    worst_pair = None
    forward = backward = 0
    n_pairs = 0
    o = s.oracle
    for u, v in close_pairs(s, max_len):
        n_pairs += 1
        f, b = one_sided_hausdorff(o, u, v), one_sided_hausdorff(o, v, u)
        forward, backward = max(forward, f), max(backward, b)
        if max(f, b) > worst or worst_pair is None:
            worst, worst_pair = max(f, b), (u, v)
    details = {"max_len": max_len, "pairs": n_pairs, "k_observed": worst,
               "one_sided": {"u_to_v": forward, "v_to_u": backward}}
    if worst_pair is not None:
        details["worst_pair"] = f"{format_word(worst_pair[0])} / {format_word(worst_pair[1])}"
    return worst, Report("check_lipschitz_hausdorff", PASS if n_pairs else VACUOUS, details)


def weak_lipschitz_witness(oracle: GroupOracle, u, v, k: int) -> Rewriting | None:
    """Search for an aligned rewriting whose prefix displacements stay within ``k``.

    States are consumed-prefix lengths ``(i, j)``; the displacement
    ``p(u[:i])⁻¹ p(v[:j])`` is a function of the state, so restricting to
    cells with norm <= ``k`` is exact.  Breadth-first search tries the
    diagonal move first, which favours short, balanced rewritings.
    """
    u, v = tuple(u), tuple(v)
    pu, pv = prefix_elements(oracle, u), prefix_elements(oracle, v)

    def allowed(i, j):
        return oracle.element_distance(pu[i], pv[j]) <= k

    goal = (len(u), len(v))
    if not allowed(0, 0) or not allowed(*goal):
        return None
    parent = {(0, 0): None}
    queue = deque([(0, 0)])
    while queue:
        i, j = queue.popleft()
        if (i, j) == goal:
            break
        for di, dj in ((1, 1), (1, 0), (0, 1)):
            cell = (i + di, j + dj)
            if cell[0] > len(u) or cell[1] > len(v) or cell in parent:
                continue
            if allowed(*cell):
                parent[cell] = (i, j)
                queue.append(cell)
    if goal not in parent:
        return None
    steps = []
    cell = goal
    while parent[cell] is not None:
        prev = parent[cell]
        a = u[prev[0]] if cell[0] > prev[0] else ""
        b = v[prev[1]] if cell[1] > prev[1] else ""
        steps.append((a, b))
        cell = prev
    return Rewriting(tuple(reversed(steps)))


def minimal_weak_k(oracle: GroupOracle, u, v) -> int:
    """Smallest ``k`` admitting a witness, found by incrementing ``k``."""
    k = 0
    while weak_lipschitz_witness(oracle, u, v, k) is None:
        k += 1
    return k


def check_weak_lipschitz(s, k: int | None, max_len: int) -> Report:
    """Every close pair has a rewriting at bound ``k``; also reports the minimal sufficient ``k``.

    With ``k=None`` the check runs at the minimal ``k`` it finds.
    """
    o = s.oracle
    pairs = list(close_pairs(s, max_len))
    minimal = {p: minimal_weak_k(o, *p) for p in pairs}
    k_min = max(minimal.values(), default=0)
    bound = k_min if k is None else k
    bad = [{"u": format_word(u), "v": format_word(v), "needs": m}
           for (u, v), m in minimal.items() if m > bound]
    if bad:
        status = FAIL
    else:
        status = PASS if pairs else VACUOUS
    return Report("check_weak_lipschitz", status,
                  {"k": bound, "minimal_k": k_min, "max_len": max_len, "pairs": len(pairs)}, bad)


def weak_implies_hausdorff_check(s, k: int, max_len: int) -> Report:
    """Per pair: a rewriting at bound ``k`` forces Hausdorff prefix distance <= ``k``."""
    o = s.oracle
    with_witness = 0
    bad = []
    for u, v in close_pairs(s, max_len):
        rw = weak_lipschitz_witness(o, u, v, k)
        if rw is None:
            continue
        with_witness += 1
        h = hausdorff_prefix_distance(o, u, v)
        if h > k:
            bad.append({"u": format_word(u), "v": format_word(v), "hausdorff": h,
                        "rewriting": str(rw)})
    if bad:
        status = FAIL
    else:
        status = PASS if with_witness else VACUOUS
    return Report("weak_implies_hausdorff_check", status,
                  {"k": k, "max_len": max_len, "pairs_with_witness": with_witness}, bad)
