import itertools
import random

import pytest

from qagroups.automata import Alphabet, Nfa

AB = Alphabet(("a", "b"))
A1 = Alphabet(("a",))


def all_words(alphabet, max_len):
    for n in range(max_len + 1):
        yield from itertools.product(alphabet.symbols, repeat=n)


def brute_accepts(x: Nfa, w) -> bool:
    """Depth-first path search straight from the transition set."""
    def walk(state, i):
        if i == len(w):
            return state in x.finals
        return any(walk(q, i + 1) for p, a, q in x.transitions if p == state and a == w[i])
    return walk(x.initial, 0)


def brute_language(x: Nfa, max_len: int) -> set:
    """Spell out every path from the initial state, one letter per level."""
    level = {(x.initial, ())}
    out = set()
    for n in range(max_len + 1):
        out |= {w for q, w in level if q in x.finals}
        if n == max_len:
            break
        level = {(q, w + (a,)) for p, w in level for p2, a, q in x.transitions if p2 == p}
    return out


def random_nfa(rng: random.Random, alphabet=AB, max_states=5) -> Nfa:
    n = rng.randint(1, max_states)
    density = rng.random() * 0.6
    trans = {(p, a, q) for p in range(n) for a in alphabet for q in range(n) if rng.random() < density}
    finals = {q for q in range(n) if rng.random() < 0.4}
    return Nfa(alphabet, n, trans, rng.randrange(n), finals)


def words(*texts):
    return [tuple(t) for t in texts]


@pytest.fixture
def rng():
    return random.Random(20261014)


def pytest_terminal_summary(terminalreporter):
    import sys
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(mod.RESULTS, key=lambda s: (int(s.rstrip("ab")), s)):
        terminalreporter.write_line(mod.RESULTS[label])
