import random
from collections import deque

import pytest

from qagroups.automata import Alphabet
from qagroups.groups import (CapExceeded, FiniteTableGroup, FreeAbelianGroup, FreeGroup,
                             GroupOracleError, TrivialGroup)

AB = Alphabet(("a", "b"))
ABCD = Alphabet(("a", "b", "c", "d"))


def z():
    return FreeAbelianGroup(AB, 1, {"a": (1,), "b": (-1,)})


def z2():
    return FiniteTableGroup(Alphabet(("g",)), [[0, 1], [1, 0]], {"g": 1})


def s3():
    """Symmetric group on 3 points; a transposition and a 3-cycle with its inverse."""
    import itertools
    perms = list(itertools.permutations(range(3)))
    idx = {p: i for i, p in enumerate(perms)}
    table = [[idx[tuple(p[q[i]] for i in range(3))] for q in perms] for p in perms]
    return FiniteTableGroup(Alphabet(("a", "b", "c")), table,
                            {"a": idx[(1, 0, 2)], "b": idx[(1, 2, 0)], "c": idx[(2, 0, 1)]})


def backends():
    return {
        "trivial": TrivialGroup(AB),
        "z": z(),
        "z2": z2(),
        "s3": s3(),
        "free1": FreeGroup(AB, 1, {"a": (1,), "b": (-1,)}),
        "free2": FreeGroup(ABCD, 2, {"a": (1,), "b": (-1,), "c": (2,), "d": (-2,)}),
        "z2_rank": FreeAbelianGroup(ABCD, 2, {"a": (1, 0), "b": (-1, 0), "c": (0, 1), "d": (0, -1)}),
    }


def bfs_norms(o, radius):
    """Independent Cayley-graph BFS."""
    dist = {o.identity(): 0}
    queue = deque([o.identity()])
    while queue:
        g = queue.popleft()
        if dist[g] == radius:
            continue
        for a in o.alphabet:
            h = o.multiply(g, o.generator_map[a])
            if h not in dist:
                dist[h] = dist[g] + 1
                queue.append(h)
    return dist


class TestEvaluate:
    def test_examples(self):
        assert z().evaluate("aab") == (1,)
        assert TrivialGroup(AB).evaluate("abba") == ()
        assert FreeGroup(AB, 1, {"a": (1,), "b": (-1,)}).evaluate("abab") == ()

    def test_unknown_symbol(self):
        with pytest.raises(GroupOracleError):
            z().evaluate("ac")

    def test_missing_generator_image(self):
        with pytest.raises(GroupOracleError):
            FreeAbelianGroup(AB, 1, {"a": (1,)})


class TestEquivalent:
    def test_examples(self):
        assert z().equivalent("aab", "a")
        assert not z().equivalent("a", "b")
        free = FreeGroup(AB, 2, {"a": (1,), "b": (2,)})
        assert not free.equivalent("ab", "ba")


class TestNorm:
    def test_examples(self):
        assert z().norm((3,)) == 3
        for o in backends().values():
            assert o.norm(o.identity()) == 0
        assert z2().norm(1) == 1

    def test_nonstandard_falls_back_to_search(self):
        o = FreeAbelianGroup(AB, 1, {"a": (2,), "b": (-1,)})
        assert not o.standard
        assert o.norm((3,)) == 3  # aab
        assert o.norm((-2,)) == 2

    def test_cap(self):
        o = FreeAbelianGroup(AB, 1, {"a": (2,), "b": (-2,)}, cap=10)
        with pytest.raises(CapExceeded):
            o.norm((3,))

    def test_not_generated_in_finite_group(self):
        o = FiniteTableGroup(Alphabet(("g",)), [[0, 1], [1, 0]], {"g": 0})
        with pytest.raises(GroupOracleError):
            o.norm(1)

    @pytest.mark.parametrize("name", list(backends()))
    def test_matches_bfs(self, name):
        o = backends()[name]
        for g, d in bfs_norms(o, 4).items():
            assert o.norm(g) == d


class TestBall:
    def test_examples(self):
        assert z().ball(1) == [(-1,), (0,), (1,)]
        assert TrivialGroup(AB).ball(7) == [()]
        free = FreeGroup(AB, 1, {"a": (1,), "b": (-1,)})
        assert set(free.ball(2)) == {(-1, -1), (-1,), (), (1,), (1, 1)}

    def test_cap(self):
        with pytest.raises(CapExceeded):
            FreeGroup(AB, 1, {"a": (1,), "b": (-1,)}, cap=5).ball(6)

    @pytest.mark.parametrize("name", list(backends()))
    def test_frontier_consistent_with_norm(self, name):
        o = backends()[name]
        for n in range(4):
            assert set(o.ball(n)) == {g for g in o.ball(n + 1) if o.norm(g) <= n}


class TestDistance:
    def test_examples(self):
        assert z().distance("aa", "aaa") == 1
        assert z().distance("ab", "ab") == 0
        assert z().distance("a", "b") == 2

    @pytest.mark.parametrize("name", list(backends()))
    def test_metric(self, name):
        o = backends()[name]
        rng = random.Random(name)
        syms = o.alphabet.symbols
        for _ in range(120):
            u, v, w = ("".join(rng.choice(syms) for _ in range(rng.randint(0, 6))) for _ in range(3))
            assert o.distance(u, u) == 0
            assert o.distance(u, v) == o.distance(v, u)
            assert o.distance(u, w) <= o.distance(u, v) + o.distance(v, w)
            # morphism
            assert o.evaluate(u + v) == o.multiply(o.evaluate(u), o.evaluate(v))


@pytest.mark.parametrize("name", list(backends()))
def test_norm_symmetric_and_subadditive(name):
    o = backends()[name]
    ball = o.ball(4)
    for g in ball:
        assert o.norm(g) == o.norm(o.inverse(g))
    for g in ball[:12]:
        for h in ball[:12]:
            assert o.norm(o.multiply(g, h)) <= o.norm(g) + o.norm(h)


def test_table_validation():
    with pytest.raises(GroupOracleError):
        FiniteTableGroup(Alphabet(("g",)), [[0, 1], [1]], {"g": 1})
    with pytest.raises(GroupOracleError):
        FiniteTableGroup(Alphabet(("g",)), [[1, 1], [1, 1]], {"g": 1})
