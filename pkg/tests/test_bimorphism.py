import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qagroups import automata as fa
from qagroups import bimorphism as bim
from qagroups.automata import Alphabet, Nfa
from qagroups.bimorphism import FIRST, SECOND, NivatBimorphism, TapeLetter
from qagroups.builtins import BUILTINS, builtin, full_relation_a_plus

from conftest import A1, AB, brute_accepts

XY = Alphabet(("x", "y"))
LETTERS = [TapeLetter("x", FIRST, "a"), TapeLetter("y", SECOND, "a")]


def xy_relation(regex):
    return NivatBimorphism(A1, LETTERS, fa.parse_regex(XY, regex))


def brute_pairs(bm, max_b_len):
    """Images of every accepted inner word, by exhaustive search over B^{<=n}."""
    out = set()
    for n in range(max_b_len + 1):
        for w in itertools.product(bm.inner.symbols, repeat=n):
            if brute_accepts(bm.h, w):
                out.add((bm.alpha(w), bm.beta(w)))
    return out


def a(n):
    return ("a",) * n


class TestEvalWord:
    def test_examples(self):
        bm = xy_relation("x")
        assert bim.eval_word(bm, ()) == ((), ())
        assert bim.eval_word(bm, "xy") == (a(1), a(1))
        assert bim.eval_word(bm, "xxy") == (a(2), a(1))

    def test_unknown_letter(self):
        with pytest.raises(fa.AutomatonError):
            bim.eval_word(xy_relation("x"), "z")

    @given(st.lists(st.sampled_from("xy"), max_size=6), st.lists(st.sampled_from("xy"), max_size=6))
    def test_morphism(self, w, y):
        bm = xy_relation("x")
        u1, v1 = bim.eval_word(bm, w)
        u2, v2 = bim.eval_word(bm, y)
        assert bim.eval_word(bm, w + y) == (u1 + u2, v1 + v2)


class TestEnumeratePairs:
    def test_empty(self):
        assert bim.enumerate_pairs(xy_relation("∅"), 5) == []

    def test_synchronous(self):
        bm = xy_relation("(xy)+")
        assert set(bim.enumerate_pairs(bm, 4)) == brute_pairs(bm, 4) == {(a(1), a(1)), (a(2), a(2))}

    def test_full(self):
        bm = xy_relation("x+y+")
        assert set(bim.enumerate_pairs(bm, 3)) == brute_pairs(bm, 3) == {
            (a(1), a(1)), (a(2), a(1)), (a(1), a(2))}


class TestContainsPair:
    def test_identity(self):
        bm = xy_relation("(xy)+")
        assert bim.contains_pair(bm, "aa", "aa")
        assert not bim.contains_pair(bm, "aa", "a")

    def test_full(self):
        assert bim.contains_pair(full_relation_a_plus(), "a", "aaa")

    @pytest.mark.parametrize("name", BUILTINS)
    def test_agrees_with_enumeration(self, name):
        s = builtin(name)
        for key, rel in s.relations.items():
            pairs = set(bim.enumerate_pairs(rel, 6))
            for n in range(7):
                for k in range(n + 1):
                    for u in itertools.product(s.alphabet.symbols, repeat=k):
                        for v in itertools.product(s.alphabet.symbols, repeat=n - k):
                            assert bim.contains_pair(rel, u, v) == ((u, v) in pairs)


class TestImages:
    def test_synchronous_first(self):
        img = bim.image_first(xy_relation("(xy)+"))
        assert set(fa.enumerate_words(img, 5)) == {a(n) for n in range(1, 6)}

    def test_silent_image_is_epsilon(self):
        img = bim.image_first(xy_relation("y+"))
        assert fa.enumerate_words(img, 5) == [()]

    def test_empty(self):
        assert fa.is_empty(bim.image_second(xy_relation("∅")))

    @pytest.mark.parametrize("name", BUILTINS)
    def test_projection_of_pairs(self, name):
        for rel in builtin(name).relations.values():
            pairs = bim.enumerate_pairs(rel, 8)
            for tape, img in ((0, bim.image_first(rel)), (1, bim.image_second(rel))):
                got = set(fa.enumerate_words(img, 3))
                assert got == {p[tape] for p in pairs if len(p[tape]) <= 3}


class TestRestrictRanges:
    def test_full_ranges(self):
        bm = full_relation_a_plus()
        plus = fa.parse_regex(A1, "a+")
        assert set(bim.enumerate_pairs(bim.restrict_ranges(bm, plus, plus), 8)) == set(
            bim.enumerate_pairs(bm, 8))

    def test_to_singletons(self):
        single = fa.parse_regex(A1, "a")
        r = bim.restrict_ranges(full_relation_a_plus(), single, single)
        assert bim.enumerate_pairs(r, 8) == [(a(1), a(1))]

    def test_empty_range(self):
        r = bim.restrict_ranges(full_relation_a_plus(), fa.empty(A1), fa.parse_regex(A1, "a+"))
        assert fa.is_empty(r.h)

    def test_alphabet_mismatch(self):
        with pytest.raises(fa.AlphabetMismatch):
            bim.restrict_ranges(full_relation_a_plus(), fa.parse_regex(AB, "a"), fa.parse_regex(A1, "a"))

    @pytest.mark.parametrize("ku_text,kv_text", [("aa|aaa", "a+"), ("a(aa)*", "(aa)+"), ("a", "∅")])
    def test_equals_filtered_enumeration(self, ku_text, kv_text):
        ku, kv = fa.parse_regex(A1, ku_text), fa.parse_regex(A1, kv_text)
        bm = full_relation_a_plus()
        expected = {(u, v) for u, v in bim.enumerate_pairs(bm, 8)
                    if fa.accepts(ku, u) and fa.accepts(kv, v)}
        assert set(bim.enumerate_pairs(bim.restrict_ranges(bm, ku, kv), 8)) == expected


class TestFromPairTransitions:
    def test_single_two_payload_transition(self):
        bm = bim.from_pair_transitions(A1, [("q0", "a", "a", "q1")], "q0", {"q1"})
        assert len(bm.inner) == 2
        assert bim.enumerate_pairs(bm, 4) == [(a(1), a(1))]

    def test_first_tape_only(self):
        bm = bim.from_pair_transitions(AB, [(0, "a", None, 1), (1, "b", None, 1)], 0, {1})
        assert all(v == () and u for u, v in bim.enumerate_pairs(bm, 5))

    def test_unreachable_finals(self):
        bm = bim.from_pair_transitions(A1, [], 0, {5})
        assert bim.enumerate_pairs(bm, 5) == []

    def test_double_empty_rejected(self):
        with pytest.raises(ValueError):
            bim.from_pair_transitions(A1, [(0, None, None, 1)], 0, {1})


def test_inverse_swaps_tapes():
    r = builtin("z_shortlex").relations["a"]
    inv = bim.inverse(r)
    assert set(bim.enumerate_pairs(inv, 8)) == {(v, u) for u, v in bim.enumerate_pairs(r, 8)}


def test_pairs_within_matches_inner_enumeration():
    rel = builtin("free_group_rank1").relations[""]
    bounded = set(bim.pairs_within(rel, 4, 4))
    by_words = {(u, v) for u, v in bim.enumerate_pairs(rel, 8) if len(u) <= 4 and len(v) <= 4}
    assert bounded == by_words
