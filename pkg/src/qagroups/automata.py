"""Finite automata over small finite alphabets.

Automata here never carry epsilon moves.  States are dense integers
``0 .. n_states - 1`` and there is exactly one initial state.  Every
operation returns a fresh immutable automaton with states numbered in a
deterministic order, so results are reproducible given the same inputs.

Words are tuples of symbol names.  Any sequence of names is accepted as
input, so plain strings work when all symbols are single characters.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

Word = tuple[str, ...]


class AutomatonError(ValueError):
    """Malformed automaton or illegal operation."""


class AlphabetMismatch(AutomatonError):
    pass


@dataclass(frozen=True)
class Alphabet:
    symbols: tuple[str, ...]

    def __post_init__(self):
        symbols = tuple(self.symbols)
        object.__setattr__(self, "symbols", symbols)
        if not symbols:
            raise AutomatonError("alphabet must be nonempty")
        if len(set(symbols)) != len(symbols):
            raise AutomatonError(f"duplicate symbols in alphabet {symbols!r}")
        for s in symbols:
            if not isinstance(s, str) or not s or any(c.isspace() for c in s):
                raise AutomatonError(f"bad symbol name {s!r}")
        object.__setattr__(self, "_index", {s: i for i, s in enumerate(symbols)})

    def __iter__(self):
        return iter(self.symbols)

    def __len__(self):
        return len(self.symbols)

    def __contains__(self, symbol):
        return symbol in self._index

    def index(self, symbol: str) -> int:
        try:
            return self._index[symbol]
        except KeyError:
            raise AutomatonError(f"symbol {symbol!r} not in alphabet {self.symbols}") from None

    def word(self, w: Sequence[str]) -> Word:
        """Validate ``w`` against this alphabet and return it as a tuple."""
        w = tuple(w)
        for s in w:
            self.index(s)
        return w

    def word_key(self, w: Sequence[str]) -> tuple:
        """Sort key for length-lexicographic (shortlex) order."""
        return (len(w), tuple(self._index[s] for s in w))


def format_word(w: Sequence[str]) -> str:
    if not w:
        return "ε"
    if all(len(s) == 1 for s in w):
        return "".join(w)
    return " ".join(w)


@dataclass(frozen=True)
class Nfa:
    """Epsilon-free automaton ``(Q, T, q0, F)`` with ``Q = range(n_states)``."""

    alphabet: Alphabet
    n_states: int
    transitions: frozenset
    initial: int = 0
    finals: frozenset = frozenset()
    _delta: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        trans = frozenset((int(p), a, int(q)) for p, a, q in self.transitions)
        finals = frozenset(int(f) for f in self.finals)
        object.__setattr__(self, "transitions", trans)
        object.__setattr__(self, "finals", finals)
        n = self.n_states
        if n < 1:
            raise AutomatonError("an automaton needs at least one state")
        if not 0 <= self.initial < n:
            raise AutomatonError(f"initial state {self.initial} out of range")
        for f in finals:
            if not 0 <= f < n:
                raise AutomatonError(f"final state {f} out of range")
        delta: dict = {}
        for p, a, q in trans:
            if not (0 <= p < n and 0 <= q < n):
                raise AutomatonError(f"transition {(p, a, q)} leaves the state set")
            if a not in self.alphabet:
                raise AutomatonError(f"transition {(p, a, q)} uses unknown symbol")
            delta.setdefault((p, a), []).append(q)
        for key in delta:
            delta[key] = tuple(sorted(delta[key]))
        object.__setattr__(self, "_delta", delta)

    def successors(self, state: int, symbol: str) -> tuple[int, ...]:
        return self._delta.get((state, symbol), ())

    def step(self, states: Iterable[int], symbol: str) -> frozenset:
        out = set()
        for s in states:
            out.update(self._delta.get((s, symbol), ()))
        return frozenset(out)

    def out_edges(self, state: int):
        """Outgoing ``(symbol, target)`` pairs in alphabet then target order."""
        for a in self.alphabet:
            for q in self._delta.get((state, a), ()):
                yield a, q

    def with_initial(self, q: int) -> "Nfa":
        return Nfa(self.alphabet, self.n_states, self.transitions, q, self.finals)

    def with_finals(self, finals: Iterable[int]) -> "Nfa":
        return Nfa(self.alphabet, self.n_states, self.transitions, self.initial, frozenset(finals))

    def is_deterministic(self) -> bool:
        return all(len(v) == 1 for v in self._delta.values())

    def __repr__(self):
        return (f"{type(self).__name__}(states={self.n_states}, "
                f"transitions={len(self.transitions)}, finals={sorted(self.finals)})")


@dataclass(frozen=True, repr=False)
class Dfa(Nfa):
    """An :class:`Nfa` with at most one transition per (state, symbol)."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_deterministic():
            raise AutomatonError("transition relation is not deterministic")

    def next(self, state: int, symbol: str):
        succ = self._delta.get((state, symbol))
        return succ[0] if succ else None

    def run(self, w: Sequence[str], start=None):
        q = self.initial if start is None else start
        for a in w:
            q = self.next(q, a)
            if q is None:
                return None
        return q


# -- construction helpers ---------------------------------------------------

def empty(alphabet: Alphabet) -> Nfa:
    return Nfa(alphabet, 1, frozenset(), 0, frozenset())


def epsilon(alphabet: Alphabet) -> Nfa:
    return Nfa(alphabet, 1, frozenset(), 0, frozenset({0}))


def literal(alphabet: Alphabet, w: Sequence[str]) -> Nfa:
    w = alphabet.word(w)
    trans = {(i, a, i + 1) for i, a in enumerate(w)}
    return Nfa(alphabet, len(w) + 1, trans, 0, {len(w)})


def from_words(alphabet: Alphabet, words: Iterable[Sequence[str]]) -> Nfa:
    """Prefix-tree automaton for a finite language."""
    nodes = {(): 0}
    trans = set()
    finals = set()
    for w in words:
        w = alphabet.word(w)
        for i in range(len(w)):
            if w[: i + 1] not in nodes:
                nodes[w[: i + 1]] = len(nodes)
            trans.add((nodes[w[:i]], w[i], nodes[w[: i + 1]]))
        finals.add(nodes[w])
    return Nfa(alphabet, len(nodes), trans, 0, finals)


def universal(alphabet: Alphabet, nonempty: bool = False) -> Nfa:
    """``A*``, or ``A+`` when ``nonempty``."""
    if nonempty:
        trans = {(p, a, 1) for p in (0, 1) for a in alphabet}
        return Nfa(alphabet, 2, trans, 0, {1})
    return Nfa(alphabet, 1, {(0, a, 0) for a in alphabet}, 0, {0})


def from_eps_transitions(alphabet: Alphabet, n_states: int, transitions, initial: int,
                         finals: Iterable[int]) -> Nfa:
    """Build an epsilon-free automaton from transitions whose symbol may be ``None``.

    Epsilon moves are eliminated by closure: ``p --a--> r`` whenever ``p``
    reaches some ``q`` by epsilon moves and ``q --a--> r``.
    """
    eps: dict[int, set] = {}
    labelled = []
    for p, a, q in transitions:
        if a is None:
            eps.setdefault(p, set()).add(q)
        else:
            labelled.append((p, a, q))
    closure = []
    for p in range(n_states):
        seen = {p}
        todo = [p]
        while todo:
            s = todo.pop()
            for t in eps.get(s, ()):
                if t not in seen:
                    seen.add(t)
                    todo.append(t)
        closure.append(seen)
    by_source: dict[int, list] = {}
    for p, a, q in labelled:
        by_source.setdefault(p, []).append((a, q))
    finals = set(finals)
    trans = set()
    new_finals = set()
    for p in range(n_states):
        if closure[p] & finals:
            new_finals.add(p)
        for s in closure[p]:
            for a, q in by_source.get(s, ()):
                trans.add((p, a, q))
    return trim(Nfa(alphabet, n_states, trans, initial, new_finals))


def _check_same(x: Nfa, y: Nfa):
    if x.alphabet != y.alphabet:
        raise AlphabetMismatch(f"alphabets differ: {x.alphabet.symbols} vs {y.alphabet.symbols}")


def with_alphabet(x: Nfa, alphabet: Alphabet) -> Nfa:
    """Reinterpret ``x`` over a larger alphabet."""
    for a in x.alphabet:
        if a not in alphabet:
            raise AlphabetMismatch(f"{a!r} missing from target alphabet")
    return Nfa(alphabet, x.n_states, x.transitions, x.initial, x.finals)


def _renumber(alphabet, n_states, initial, transitions, finals, cls=Nfa):
    """Renumber states by breadth-first order from the initial state.

    States unreachable from the initial state are dropped.
    """
    out: dict[int, list] = {}
    for p, a, q in transitions:
        out.setdefault(p, []).append((alphabet.index(a), q, a))
    order = {initial: 0}
    queue = deque([initial])
    while queue:
        p = queue.popleft()
        for _, q, _ in sorted(out.get(p, ())):
            if q not in order:
                order[q] = len(order)
                queue.append(q)
    trans = {(order[p], a, order[q]) for p, a, q in transitions if p in order and q in order}
    fin = {order[f] for f in finals if f in order}
    return cls(alphabet, len(order), trans, 0, fin)


# -- boolean and rational operations -----------------------------------------

def union(x: Nfa, y: Nfa) -> Nfa:
    _check_same(x, y)
    ox, oy = 1, 1 + x.n_states
    trans = {(p + ox, a, q + ox) for p, a, q in x.transitions}
    trans |= {(p + oy, a, q + oy) for p, a, q in y.transitions}
    trans |= {(0, a, q + ox) for a, q in x.out_edges(x.initial)}
    trans |= {(0, a, q + oy) for a, q in y.out_edges(y.initial)}
    finals = {f + ox for f in x.finals} | {f + oy for f in y.finals}
    if x.initial in x.finals or y.initial in y.finals:
        finals.add(0)
    return trim(Nfa(x.alphabet, 1 + x.n_states + y.n_states, trans, 0, finals))


def concat(x: Nfa, y: Nfa) -> Nfa:
    _check_same(x, y)
    o = x.n_states
    trans = set(x.transitions)
    trans |= {(p + o, a, q + o) for p, a, q in y.transitions}
    starts = list(y.out_edges(y.initial))
    for f in x.finals:
        trans |= {(f, a, q + o) for a, q in starts}
    finals = {f + o for f in y.finals}
    if y.initial in y.finals:
        finals |= x.finals
    return trim(Nfa(x.alphabet, x.n_states + y.n_states, trans, x.initial, finals))


def plus(x: Nfa) -> Nfa:
    trans = set(x.transitions)
    starts = list(x.out_edges(x.initial))
    for f in x.finals:
        trans |= {(f, a, q) for a, q in starts}
    return trim(Nfa(x.alphabet, x.n_states, trans, x.initial, x.finals))


def star(x: Nfa) -> Nfa:
    return union(epsilon(x.alphabet), plus(x))


def intersect(x: Nfa, y: Nfa) -> Nfa:
    _check_same(x, y)
    start = (x.initial, y.initial)
    index = {start: 0}
    queue = deque([start])
    trans = set()
    while queue:
        p, q = queue.popleft()
        for a in x.alphabet:
            for p2 in x.successors(p, a):
                for q2 in y.successors(q, a):
                    if (p2, q2) not in index:
                        index[(p2, q2)] = len(index)
                        queue.append((p2, q2))
                    trans.add((index[(p, q)], a, index[(p2, q2)]))
    finals = {i for (p, q), i in index.items() if p in x.finals and q in y.finals}
    return trim(Nfa(x.alphabet, len(index), trans, 0, finals))


def determinize(x: Nfa) -> Dfa:
    """Subset construction; only reachable nonempty subsets are built."""
    if isinstance(x, Dfa):
        return _renumber(x.alphabet, x.n_states, x.initial, x.transitions, x.finals, Dfa)
    start = frozenset({x.initial})
    index = {start: 0}
    queue = deque([start])
    trans = set()
    while queue:
        subset = queue.popleft()
        for a in x.alphabet:
            nxt = x.step(subset, a)
            if not nxt:
                continue
            if nxt not in index:
                index[nxt] = len(index)
                queue.append(nxt)
            trans.add((index[subset], a, index[nxt]))
    finals = {i for s, i in index.items() if s & x.finals}
    return Dfa(x.alphabet, len(index), trans, 0, finals)


def complete(x: Dfa) -> Dfa:
    """Add an explicit sink so every (state, symbol) has a successor."""
    missing = [(p, a) for p in range(x.n_states) for a in x.alphabet if x.next(p, a) is None]
    if not missing:
        return x
    sink = x.n_states
    trans = set(x.transitions) | {(p, a, sink) for p, a in missing}
    trans |= {(sink, a, sink) for a in x.alphabet}
    return Dfa(x.alphabet, x.n_states + 1, trans, x.initial, x.finals)


def complement(x: Nfa) -> Dfa:
    """Automaton for ``A* \\ L(x)``; complete, not trimmed."""
    d = complete(determinize(x))
    return Dfa(d.alphabet, d.n_states, d.transitions, d.initial,
               set(range(d.n_states)) - d.finals)


def difference(x: Nfa, y: Nfa) -> Nfa:
    _check_same(x, y)
    return intersect(x, complement(y))


def minimize(x: Nfa) -> Dfa:
    """Minimal trim deterministic automaton (Moore partition refinement).

    The sink introduced by completion is removed again, so the result is
    partial; the empty language gives a single non-final state.
    """
    d = complete(determinize(x))
    n = d.n_states
    block = [1 if q in d.finals else 0 for q in range(n)]
    n_blocks = len(set(block))
    while True:
        sigs = {}
        new_block = []
        for q in range(n):
            sig = (block[q],) + tuple(block[d.next(q, a)] for a in d.alphabet)
            new_block.append(sigs.setdefault(sig, len(sigs)))
        block = new_block
        if len(sigs) == n_blocks:
            break
        n_blocks = len(sigs)
    trans = {(block[p], a, block[q]) for p, a, q in d.transitions}
    finals = {block[f] for f in d.finals}
    quotient = Dfa(d.alphabet, n_blocks, trans, block[d.initial], finals)
    return trim(quotient)


def _reachable(x: Nfa, sources, backward=False):
    adj: dict[int, list] = {}
    for p, _, q in x.transitions:
        if backward:
            adj.setdefault(q, []).append(p)
        else:
            adj.setdefault(p, []).append(q)
    seen = set(sources)
    todo = list(seen)
    while todo:
        s = todo.pop()
        for t in adj.get(s, ()):
            if t not in seen:
                seen.add(t)
                todo.append(t)
    return seen


def accessible(x: Nfa) -> set:
    return _reachable(x, [x.initial])


def coaccessible(x: Nfa) -> set:
    return _reachable(x, x.finals, backward=True)


def trim(x: Nfa) -> Nfa:
    """Keep only states on some initial-to-final path (and the initial state)."""
    useful = accessible(x) & coaccessible(x)
    useful.add(x.initial)
    trans = {(p, a, q) for p, a, q in x.transitions if p in useful and q in useful}
    cls = Dfa if isinstance(x, Dfa) else Nfa
    return _renumber(x.alphabet, x.n_states, x.initial, trans, x.finals & useful, cls)


def is_empty(x: Nfa) -> bool:
    return not (accessible(x) & x.finals)


def accepts(x: Nfa, w: Sequence[str]) -> bool:
    current = frozenset({x.initial})
    for a in x.alphabet.word(w):
        current = x.step(current, a)
        if not current:
            return False
    return bool(current & x.finals)


def enumerate_words(x: Nfa, max_len: int) -> list[Word]:
    """All accepted words of length <= ``max_len`` in shortlex order."""
    t = trim(x)
    out = []
    layer = [((), frozenset({t.initial}))]
    for length in range(max_len + 1):
        for w, states in layer:
            if states & t.finals:
                out.append(w)
        if length == max_len:
            break
        nxt = []
        for w, states in layer:
            for a in t.alphabet:
                s2 = t.step(states, a)
                if s2:
                    nxt.append((w + (a,), s2))
        layer = nxt
    return out


def is_subset(x: Nfa, y: Nfa) -> bool:
    return is_empty(difference(x, y))


def equivalent(x: Nfa, y: Nfa) -> bool:
    """Language equality via emptiness of both differences."""
    return is_subset(x, y) and is_subset(y, x)


# -- a small regular-expression front end --------------------------------------

def parse_regex(alphabet: Alphabet, text: str) -> Nfa:
    """Compile a regular expression over single-character symbols.

    Supports juxtaposition, ``|``, ``*``, ``+``, ``?``, parentheses, ``()``
    for the empty word and ``∅`` for the empty language.  Whitespace is
    ignored.
    """
    src = [c for c in text if not c.isspace()]
    pos = 0

    def peek():
        return src[pos] if pos < len(src) else None

    def alt():
        nonlocal pos
        node = cat()
        while peek() == "|":
            pos += 1
            node = union(node, cat())
        return node

    def cat():
        node = epsilon(alphabet)
        while peek() is not None and peek() not in "|)":
            node = concat(node, rep())
        return node

    def rep():
        nonlocal pos
        node = atom()
        while peek() is not None and peek() in "*+?":
            op = src[pos]
            pos += 1
            if op == "*":
                node = star(node)
            elif op == "+":
                node = plus(node)
            else:
                node = union(epsilon(alphabet), node)
        return node

    def atom():
        nonlocal pos
        c = peek()
        if c is None:
            raise AutomatonError(f"unexpected end of regex {text!r}")
        pos += 1
        if c == "(":
            node = alt()
            if peek() != ")":
                raise AutomatonError(f"unbalanced parenthesis in {text!r}")
            pos += 1
            return node
        if c == "∅":
            return empty(alphabet)
        if c in alphabet:
            return literal(alphabet, (c,))
        raise AutomatonError(f"unexpected {c!r} in regex {text!r}")

    result = alt()
    if pos != len(src):
        raise AutomatonError(f"trailing input in regex {text!r}")
    return result
