"""Rational relations in Nivat form.

A relation ``R ⊆ A* × A*`` is presented by an inner alphabet ``B``, an
automaton ``h`` over ``B`` and two alphabetic morphisms.  Each inner letter
writes exactly one outer symbol on exactly one of the two tapes, so the
"silent on one tape, not both" condition holds by construction.

Because each inner letter emits exactly one symbol, a pair ``(u, v)`` can
only come from inner words of length ``|u| + |v|``.  Bounded searches
below rely on this.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import automata as fa
from .automata import Alphabet, AlphabetMismatch, Nfa, Word

FIRST = "first"
SECOND = "second"
TAPES = (FIRST, SECOND)


def other_tape(tape: str) -> str:
    return SECOND if tape == FIRST else FIRST


def letter_name(payload: str, tape: str) -> str:
    """Canonical inner-letter name: ``a/`` writes a on the first tape, ``/a`` on the second."""
    return f"{payload}/" if tape == FIRST else f"/{payload}"


@dataclass(frozen=True)
class TapeLetter:
    symbol: str
    emits_on: str
    payload: str

    def __post_init__(self):
        if self.emits_on not in TAPES:
            raise ValueError(f"tape must be {FIRST!r} or {SECOND!r}, got {self.emits_on!r}")

    def image(self, tape: str) -> Word:
        return (self.payload,) if tape == self.emits_on else ()


class NivatBimorphism:
    """The relation ``{(α(w), β(w)) : w ∈ L(h)}``."""

    def __init__(self, outer: Alphabet, letters: Iterable[TapeLetter], h: Nfa):
        letters = tuple(letters)
        self.outer = outer
        self.letters = {t.symbol: t for t in letters}
        if len(self.letters) != len(letters):
            raise ValueError("duplicate inner letter")
        self.inner = Alphabet(tuple(t.symbol for t in letters))
        if h.alphabet != self.inner:
            raise AlphabetMismatch("h must be an automaton over the inner alphabet")
        for t in letters:
            if t.payload not in outer:
                raise AlphabetMismatch(f"payload {t.payload!r} not in outer alphabet")
        self.h = h

    def with_h(self, h: Nfa) -> "NivatBimorphism":
        return NivatBimorphism(self.outer, self.letters.values(), h)

    def silent_letters(self, tape: str) -> tuple[str, ...]:
        """Inner letters whose image on ``tape`` is empty."""
        return tuple(b for b, t in self.letters.items() if t.emits_on != tape)

    def project(self, w: Sequence[str], tape: str) -> Word:
        out = []
        for b in w:
            t = self.letters.get(b)
            if t is None:
                raise fa.AutomatonError(f"unknown inner letter {b!r}")
            if t.emits_on == tape:
                out.append(t.payload)
        return tuple(out)

    def alpha(self, w):
        return self.project(w, FIRST)

    def beta(self, w):
        return self.project(w, SECOND)

    def __repr__(self):
        lets = ", ".join(f"{t.symbol}:{t.emits_on}:{t.payload}" for t in self.letters.values())
        return f"NivatBimorphism([{lets}], {self.h!r})"


def eval_word(bm: NivatBimorphism, w: Sequence[str]) -> tuple[Word, Word]:
    return bm.alpha(w), bm.beta(w)


def pair_key(alphabet: Alphabet, pair) -> tuple:
    u, v = pair
    return alphabet.word_key(u) + alphabet.word_key(v)


def enumerate_pairs(bm: NivatBimorphism, max_b_len: int) -> list[tuple[Word, Word]]:
    """Images of all accepted inner words of length <= ``max_b_len``."""
    pairs = {eval_word(bm, w) for w in fa.enumerate_words(bm.h, max_b_len)}
    return sorted(pairs, key=lambda p: pair_key(bm.outer, p))


def pairs_within(bm: NivatBimorphism, max_u: int, max_v: int) -> list[tuple[Word, Word]]:
    """All pairs of the relation with ``|u| <= max_u`` and ``|v| <= max_v``.

    Explores configurations ``(state, u, v)`` instead of inner words, which
    stays small when ``h`` has many inner words per pair.
    """
    h = fa.trim(bm.h)
    start = (h.initial, (), ())
    seen = {start}
    queue = deque([start])
    found = set()
    while queue:
        q, u, v = queue.popleft()
        if q in h.finals:
            found.add((u, v))
        for b, q2 in h.out_edges(q):
            t = bm.letters[b]
            if t.emits_on == FIRST:
                if len(u) == max_u:
                    continue
                cfg = (q2, u + (t.payload,), v)
            else:
                if len(v) == max_v:
                    continue
                cfg = (q2, u, v + (t.payload,))
            if cfg not in seen:
                seen.add(cfg)
                queue.append(cfg)
    return sorted(found, key=lambda p: pair_key(bm.outer, p))


def contains_pair(bm: NivatBimorphism, u: Sequence[str], v: Sequence[str]) -> bool:
    """Exact membership test.

    Searches the product of ``h`` with the position automata of ``α⁻¹(u)``
    and ``β⁻¹(v)``; states are ``(h-state, i, j)`` with ``i <= |u|`` and
    ``j <= |v|``.
    """
    u = bm.outer.word(u)
    v = bm.outer.word(v)
    h = bm.h
    start = (h.initial, 0, 0)
    seen = {start}
    todo = [start]
    while todo:
        q, i, j = todo.pop()
        if i == len(u) and j == len(v) and q in h.finals:
            return True
        for b, q2 in h.out_edges(q):
            t = bm.letters[b]
            if t.emits_on == FIRST:
                if i < len(u) and u[i] == t.payload:
                    cfg = (q2, i + 1, j)
                else:
                    continue
            elif j < len(v) and v[j] == t.payload:
                cfg = (q2, i, j + 1)
            else:
                continue
            if cfg not in seen:
                seen.add(cfg)
                todo.append(cfg)
    return False


def image(bm: NivatBimorphism, tape: str) -> Nfa:
    """Automaton over the outer alphabet for the projection of L(h) onto ``tape``."""
    trans = []
    for p, b, q in bm.h.transitions:
        t = bm.letters[b]
        trans.append((p, t.payload if t.emits_on == tape else None, q))
    return fa.from_eps_transitions(bm.outer, bm.h.n_states, trans, bm.h.initial, bm.h.finals)


def image_first(bm: NivatBimorphism) -> Nfa:
    return image(bm, FIRST)


def image_second(bm: NivatBimorphism) -> Nfa:
    return image(bm, SECOND)


def restrict_ranges(bm: NivatBimorphism, ku: Nfa, kv: Nfa) -> NivatBimorphism:
    """The relation of ``bm`` intersected with ``L(ku) × L(kv)``.

    ``ku`` advances on first-tape letters and ``kv`` on second-tape letters;
    each stays put on letters silent for its tape.
    """
    if ku.alphabet != bm.outer or kv.alphabet != bm.outer:
        raise AlphabetMismatch("range automata must be over the outer alphabet")
    h = bm.h
    start = (h.initial, ku.initial, kv.initial)
    index = {start: 0}
    queue = deque([start])
    trans = set()
    while queue:
        cfg = queue.popleft()
        q, s, r = cfg
        for b, q2 in h.out_edges(q):
            t = bm.letters[b]
            if t.emits_on == FIRST:
                targets = [(q2, s2, r) for s2 in ku.successors(s, t.payload)]
            else:
                targets = [(q2, s, r2) for r2 in kv.successors(r, t.payload)]
            for nxt in targets:
                if nxt not in index:
                    index[nxt] = len(index)
                    queue.append(nxt)
                trans.add((index[cfg], b, index[nxt]))
    finals = {i for (q, s, r), i in index.items()
              if q in h.finals and s in ku.finals and r in kv.finals}
    return bm.with_h(fa.trim(Nfa(bm.inner, len(index), trans, 0, finals)))


def from_pair_transitions(outer: Alphabet, table, initial, finals) -> NivatBimorphism:
    """Convert a two-tape transition table into Nivat form.

    ``table`` holds ``(state, a, b, state)`` rows where ``a`` is written on
    the first tape and ``b`` on the second; either may be ``None`` but not
    both.  A row with two payloads is split through a fresh intermediate
    state.  State ids may be any hashable values.
    """
    states = {initial: 0}

    def sid(s):
        if s not in states:
            states[s] = len(states)
        return states[s]

    rows = []
    for p, a, b, q in table:
        if a is None and b is None:
            raise ValueError(f"transition {(p, a, b, q)} writes on neither tape")
        rows.append((sid(p), a, b, sid(q)))
    fins = {sid(f) for f in finals}

    used = set()
    for _, a, b, _ in rows:
        if a is not None:
            used.add((outer.index(a), 0, a))
        if b is not None:
            used.add((outer.index(b), 1, b))
    letters = [TapeLetter(letter_name(sym, TAPES[tape]), TAPES[tape], sym)
               for _, tape, sym in sorted(used)]
    if not letters:
        # An empty relation still needs an inner alphabet.
        letters = [TapeLetter(letter_name(outer.symbols[0], FIRST), FIRST, outer.symbols[0])]
    inner = Alphabet(tuple(t.symbol for t in letters))

    n = len(states)
    trans = set()
    for p, a, b, q in rows:
        if a is not None and b is not None:
            mid = n
            n += 1
            trans.add((p, letter_name(a, FIRST), mid))
            trans.add((mid, letter_name(b, SECOND), q))
        elif a is not None:
            trans.add((p, letter_name(a, FIRST), q))
        else:
            trans.add((p, letter_name(b, SECOND), q))
    return NivatBimorphism(outer, letters, fa.trim(Nfa(inner, n, trans, 0, fins)))


def identity_relation(dictionary: Nfa) -> NivatBimorphism:
    """Synchronous Nivat form of ``{(w, w) : w ∈ L(dictionary)}``."""
    table = [(p, a, a, q) for p, a, q in sorted(dictionary.transitions)]
    return from_pair_transitions(dictionary.alphabet, table, dictionary.initial, dictionary.finals)


def inverse(bm: NivatBimorphism) -> NivatBimorphism:
    """The relation with its two tapes swapped, using canonical letter names."""
    rename = {}
    letters = {}
    for t in bm.letters.values():
        tape = other_tape(t.emits_on)
        name = letter_name(t.payload, tape)
        rename[t.symbol] = name
        letters[name] = TapeLetter(name, tape, t.payload)
    order = sorted(letters.values(), key=lambda t: (bm.outer.index(t.payload), TAPES.index(t.emits_on)))
    inner = Alphabet(tuple(t.symbol for t in order))
    trans = {(p, rename[b], q) for p, b, q in bm.h.transitions}
    h = Nfa(inner, bm.h.n_states, trans, bm.h.initial, bm.h.finals)
    return NivatBimorphism(bm.outer, order, fa.trim(h))


def relation_union(x: NivatBimorphism, y: NivatBimorphism) -> NivatBimorphism:
    """Union of two relations whose shared letter names agree."""
    if x.outer != y.outer:
        raise AlphabetMismatch("outer alphabets differ")
    letters = dict(x.letters)
    for name, t in y.letters.items():
        if letters.setdefault(name, t) != t:
            raise ValueError(f"inner letter {name!r} means different things in the two relations")
    inner = Alphabet(tuple(letters))
    hx = fa.with_alphabet(x.h, inner)
    hy = fa.with_alphabet(y.h, inner)
    return NivatBimorphism(x.outer, letters.values(), fa.union(hx, hy))
