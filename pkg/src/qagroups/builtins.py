"""Hand-built quasi-automatic structures used as a worked-example corpus."""

from __future__ import annotations

from . import automata as fa
from . import bimorphism as bim
from .automata import Alphabet, Nfa
from .bimorphism import FIRST, SECOND, NivatBimorphism, TapeLetter
from .groups import FiniteTableGroup, FreeAbelianGroup, FreeGroup, TrivialGroup
from .structure import EPS, QuasiAutomaticStructure

BUILTINS = ("trivial", "z_shortlex", "z2_table", "free_group_rank1")


def full_relation_a_plus() -> NivatBimorphism:
    """``a+ × a+`` as ``x+ y+`` where x writes a on tape one and y on tape two."""
    outer = Alphabet(("a",))
    inner = Alphabet(("x", "y"))
    h = Nfa(inner, 3, {(0, "x", 1), (1, "x", 1), (1, "y", 2), (2, "y", 2)}, 0, {2})
    return NivatBimorphism(outer, [TapeLetter("x", FIRST, "a"), TapeLetter("y", SECOND, "a")], h)


def trivial() -> QuasiAutomaticStructure:
    A = Alphabet(("a",))
    full = full_relation_a_plus()
    return QuasiAutomaticStructure(TrivialGroup(A), fa.parse_regex(A, "a+"),
                                   {EPS: full, "a": full}, "trivial")


def _z_successor(outer, branches):
    table = []
    for rows in branches:
        table.extend(rows)
    return bim.from_pair_transitions(outer, table, "start", {"end"})


def z_shortlex() -> QuasiAutomaticStructure:
    """Z = <a, b> with b = a⁻¹; the identity is represented by ``ab``."""
    A = Alphabet(("a", "b"))
    oracle = FreeAbelianGroup(A, 1, {"a": (1,), "b": (-1,)})
    L = fa.minimize(fa.parse_regex(A, "a+|b+|ab"))
    r_a = _z_successor(A, [
        # (a^n, a^n+1)
        [("start", "a", "a", "A"), ("A", "a", "a", "A"), ("A", None, "a", "end")],
        # (ab, a)
        [("start", "a", "a", "AB"), ("AB", "b", None, "end")],
        # (b, ab)
        [("start", "b", "a", "B"), ("B", None, "b", "end")],
        # (b^m+1, b^m), m >= 1
        [("start", "b", "b", "BB"), ("BB", "b", "b", "BB"), ("BB", "b", None, "end")],
    ])
    rels = {EPS: bim.identity_relation(L), "a": r_a, "b": bim.inverse(r_a)}
    return QuasiAutomaticStructure(oracle, L, rels, "z_shortlex")


def _parity_relation(target: int) -> NivatBimorphism:
    """``{(a^i, a^j) : i, j >= 1, i + j ≡ target (mod 2)}`` as ``x^i y^j``."""
    outer = Alphabet(("a",))
    inner = Alphabet(("x", "y"))
    # 0 start, 1 odd x-count, 2 even x-count, 3 total even, 4 total odd
    trans = {(0, "x", 1), (1, "x", 2), (2, "x", 1),
             (1, "y", 3), (2, "y", 4), (3, "y", 4), (4, "y", 3)}
    h = Nfa(inner, 5, trans, 0, {3 if target == 0 else 4})
    return NivatBimorphism(outer, [TapeLetter("x", FIRST, "a"), TapeLetter("y", SECOND, "a")], h)


def z2_table() -> QuasiAutomaticStructure:
    """Z/2 by multiplication table with dictionary ``a+``; pruning leaves ``{a, aa}``."""
    A = Alphabet(("a",))
    oracle = FiniteTableGroup(A, [[0, 1], [1, 0]], {"a": 1})
    return QuasiAutomaticStructure(oracle, fa.parse_regex(A, "a+"),
                                   {EPS: _parity_relation(0), "a": _parity_relation(1)}, "z2_table")


def free_group_rank1() -> QuasiAutomaticStructure:
    """Free group on one generator; the identity has two representatives ``ab`` and ``ba``."""
    A = Alphabet(("a", "b"))
    oracle = FreeGroup(A, 1, {"a": (1,), "b": (-1,)})
    L = fa.minimize(fa.parse_regex(A, "a+|b+|ab|ba"))
    swap = bim.from_pair_transitions(A, [
        ("s", "a", "b", "ab"), ("ab", "b", "a", "f"),
        ("s", "b", "a", "ba"), ("ba", "a", "b", "f"),
    ], "s", {"f"})
    r_eps = bim.relation_union(bim.identity_relation(L), swap)
    r_a = _z_successor(A, [
        [("start", "a", "a", "A"), ("A", "a", "a", "A"), ("A", None, "a", "end")],
        [("start", "a", "a", "AB"), ("AB", "b", None, "end")],
        [("start", "b", "a", "BA"), ("BA", "a", None, "end")],
        [("start", "b", "a", "B1"), ("B1", None, "b", "end")],
        [("start", "b", "b", "B2"), ("B2", None, "a", "end")],
        [("start", "b", "b", "BB"), ("BB", "b", "b", "BB"), ("BB", "b", None, "end")],
    ])
    rels = {EPS: r_eps, "a": r_a, "b": bim.inverse(r_a)}
    return QuasiAutomaticStructure(oracle, L, rels, "free_group_rank1")


def builtin(name: str) -> QuasiAutomaticStructure:
    try:
        factory = {
            "trivial": trivial,
            "z_shortlex": z_shortlex,
            "z2_table": z2_table,
            "free_group_rank1": free_group_rank1,
        }[name]
    except KeyError:
        raise ValueError(f"unknown builtin {name!r}; choose from {', '.join(BUILTINS)}") from None
    return factory()
