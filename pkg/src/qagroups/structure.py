"""Quasi-automatic structures: a dictionary plus one relation per letter and ε."""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from typing import Mapping

from . import automata as fa
from . import bimorphism as bim
from .automata import Nfa, format_word
from .bimorphism import NivatBimorphism
from .groups import GroupOracle
from .report import FAIL, PASS, Report

# Relation key for the empty letter; R_ε relates words representing the same element.
EPS = ""


def relation_label(a: str) -> str:
    return "eps" if a == EPS else a


class StructureError(ValueError):
    pass


@dataclass(frozen=True)
class QuasiAutomaticStructure:
    oracle: GroupOracle
    dictionary: Nfa
    relations: Mapping[str, NivatBimorphism]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        alphabet = self.oracle.alphabet
        if self.dictionary.alphabet != alphabet:
            raise StructureError("dictionary alphabet differs from the generator alphabet")
        if fa.accepts(self.dictionary, ()):
            raise StructureError("a dictionary is a subset of A+; it must not contain the empty word")
        expected = {EPS, *alphabet}
        if set(self.relations) != expected:
            missing = sorted(relation_label(a) for a in expected - set(self.relations))
            extra = sorted(relation_label(a) for a in set(self.relations) - expected)
            raise StructureError(f"relation keys wrong: missing {missing}, unexpected {extra}")
        for a, r in self.relations.items():
            if r.outer != alphabet:
                raise StructureError(f"relation {relation_label(a)} is over the wrong alphabet")

    @property
    def alphabet(self):
        return self.oracle.alphabet

    def keys(self):
        """``ε`` first, then the generators in alphabet order."""
        return (EPS,) + self.alphabet.symbols


def validate(s: QuasiAutomaticStructure, max_len: int) -> Report:
    """Two-sided check of ``R_a = {(u, v) ∈ L×L : ua ∼ v}`` on words up to ``max_len``."""
    o = s.oracle
    words = fa.enumerate_words(s.dictionary, max_len)
    values = [o.evaluate(w) for w in words]
    witnesses = []
    counts = {}
    for a in s.keys():
        rel = s.relations[a]
        step = o.identity() if a == EPS else o.generator_map[a]
        label = relation_label(a)
        pairs = bim.pairs_within(rel, max_len, max_len)
        unsound = 0
        for u, v in pairs:
            problem = None
            if not fa.accepts(s.dictionary, u):
                problem = "first component not in dictionary"
            elif not fa.accepts(s.dictionary, v):
                problem = "second component not in dictionary"
            elif not o.equivalent(u + (() if a == EPS else (a,)), v):
                problem = "components not related"
            if problem:
                unsound += 1
                witnesses.append({"kind": "soundness", "relation": label,
                                  "u": format_word(u), "v": format_word(v), "problem": problem})
        incomplete = 0
        for u, gu in zip(words, values):
            target = o.multiply(gu, step)
            for v, gv in zip(words, values):
                if gv == target and not bim.contains_pair(rel, u, v):
                    incomplete += 1
                    witnesses.append({"kind": "completeness", "relation": label,
                                      "u": format_word(u), "v": format_word(v)})
        counts[label] = {"pairs": len(pairs), "unsound": unsound, "missing": incomplete}
    return Report("validate", FAIL if witnesses else PASS,
                  {"max_len": max_len, "dictionary_words": len(words), "relations": counts},
                  witnesses)


def check_onto(s: QuasiAutomaticStructure, n: int, word_cap: int) -> Report:
    """Every element of ``ball(n)`` has a dictionary representative of length <= ``word_cap``."""
    return coverage(s.oracle, s.dictionary, n, word_cap)


def coverage(o: GroupOracle, dictionary: Nfa, n: int, word_cap: int) -> Report:
    covered = {o.evaluate(w) for w in fa.enumerate_words(dictionary, word_cap)}
    ball = o.ball(n)
    missed = [g for g in ball if g not in covered]
    return Report("check_onto", FAIL if missed else PASS,
                  {"ball_radius": n, "word_cap": word_cap, "ball_size": len(ball),
                   "missed": len(missed)},
                  [{"element": o.format(g)} for g in missed])


def restrict_to(s: QuasiAutomaticStructure, K: Nfa, coverage_check=(2, 8)) -> QuasiAutomaticStructure:
    """Restrict the dictionary to ``K ⊆ L`` and every relation to ``K × K``.

    Warns, rather than fails, when ``K`` visibly loses representatives of
    small elements; ``coverage_check`` is the ``(radius, word_cap)`` of that check.
    """
    if not fa.is_subset(K, s.dictionary):
        raise StructureError("K is not a sublanguage of the dictionary")
    if fa.is_empty(K):
        raise StructureError("K is empty and cannot be a dictionary")
    rels = {a: bim.restrict_ranges(r, K, K) for a, r in s.relations.items()}
    out = QuasiAutomaticStructure(s.oracle, fa.trim(K), rels, s.name)
    if coverage_check is not None:
        rep = check_onto(out, *coverage_check)
        if not rep.ok:
            warnings.warn(f"restricted dictionary misses {rep.details['missed']} elements "
                          f"of ball({coverage_check[0]})", stacklevel=2)
    return out
