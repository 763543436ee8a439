"""Word-problem backends for small groups.

Each oracle evaluates words over a generating alphabet to canonical group
elements, so equality of elements is equality in the group.  Norms are
word lengths with respect to the generator images; the Cayley graph is
built by right multiplication.

Elements are plain hashable values:

* trivial group: ``()``
* finite table: an ``int`` row index
* free abelian group of rank d: a length-d ``tuple`` of ints
* free group of rank r: a freely reduced ``tuple`` of nonzero ints, where
  ``i`` stands for the i-th free generator and ``-i`` for its inverse
"""

from __future__ import annotations

from collections import deque
from typing import Hashable, Mapping, Sequence

from .automata import Alphabet

DEFAULT_CAP = 64


class GroupOracleError(ValueError):
    pass


class CapExceeded(GroupOracleError):
    """A breadth-first search hit its configured depth cap."""


class GroupOracle:
    """Base class; subclasses supply ``identity``, ``multiply`` and ``inverse``."""

    backend = "abstract"

    def __init__(self, alphabet: Alphabet, generator_map: Mapping[str, Hashable], cap: int = DEFAULT_CAP):
        self.alphabet = alphabet
        missing = [a for a in alphabet if a not in generator_map]
        if missing:
            raise GroupOracleError(f"generators without images: {missing}")
        extra = [a for a in generator_map if a not in alphabet]
        if extra:
            raise GroupOracleError(f"images for unknown generators: {extra}")
        self.generator_map = {a: self.canonical(generator_map[a]) for a in alphabet}
        self.cap = cap
        self._norms = {self.identity(): 0}
        self._bfs_frontier = [self.identity()]
        self._bfs_depth = 0

    # subclasses -----------------------------------------------------------
    def identity(self):
        raise NotImplementedError

    def multiply(self, g, h):
        raise NotImplementedError

    def inverse(self, g):
        raise NotImplementedError

    def canonical(self, g):
        return g

    def closed_form_norm(self, g):
        """Exact norm without search, or ``None`` when not available."""
        return None

    def format(self, g) -> str:
        return str(g)

    def sort_key(self, g):
        return g

    # shared machinery -------------------------------------------------------
    def evaluate(self, w: Sequence[str]):
        """Canonical form of the element a word represents; the empty word gives the identity."""
        g = self.identity()
        for a in w:
            try:
                g = self.multiply(g, self.generator_map[a])
            except KeyError:
                raise GroupOracleError(f"unknown generator {a!r}") from None
        return g

    def equivalent(self, u: Sequence[str], v: Sequence[str]) -> bool:
        return self.evaluate(u) == self.evaluate(v)

    def _grow(self):
        """Extend the breadth-first norm table by one layer."""
        if self._bfs_depth >= self.cap:
            raise CapExceeded(f"Cayley graph search exceeded depth cap {self.cap}")
        nxt = []
        for g in self._bfs_frontier:
            for a in self.alphabet:
                h = self.multiply(g, self.generator_map[a])
                if h not in self._norms:
                    self._norms[h] = self._bfs_depth + 1
                    nxt.append(h)
        self._bfs_frontier = nxt
        self._bfs_depth += 1
        return bool(nxt)

    def norm(self, g) -> int:
        g = self.canonical(g)
        n = self.closed_form_norm(g)
        if n is not None:
            return n
        while g not in self._norms:
            if not self._grow():
                raise GroupOracleError(f"element {self.format(g)} is not generated")
        return self._norms[g]

    def ball(self, n: int) -> list:
        """Elements of norm at most ``n`` in a deterministic order."""
        if n > self.cap:
            raise CapExceeded(f"ball radius {n} exceeds cap {self.cap}")
        seen = {self.identity()}
        frontier = [self.identity()]
        for _ in range(n):
            nxt = []
            for g in frontier:
                for a in self.alphabet:
                    h = self.multiply(g, self.generator_map[a])
                    if h not in seen:
                        seen.add(h)
                        nxt.append(h)
            frontier = nxt
        return sorted(seen, key=self.sort_key)

    def distance(self, u: Sequence[str], v: Sequence[str]) -> int:
        return self.norm(self.multiply(self.inverse(self.evaluate(u)), self.evaluate(v)))

    def element_distance(self, g, h) -> int:
        return self.norm(self.multiply(self.inverse(g), h))

    def __repr__(self):
        gens = ", ".join(f"{a}->{self.format(g)}" for a, g in self.generator_map.items())
        return f"{type(self).__name__}({gens})"


class TrivialGroup(GroupOracle):
    backend = "trivial"

    def __init__(self, alphabet: Alphabet, cap: int = DEFAULT_CAP):
        super().__init__(alphabet, {a: () for a in alphabet}, cap)

    def identity(self):
        return ()

    def multiply(self, g, h):
        return ()

    def inverse(self, g):
        return ()

    def closed_form_norm(self, g):
        return 0

    def format(self, g):
        return "e"


class FiniteTableGroup(GroupOracle):
    """Group given by a full multiplication table ``table[i][j] = i·j``."""

    backend = "finite_table"

    def __init__(self, alphabet: Alphabet, table: Sequence[Sequence[int]],
                 generator_map: Mapping[str, int], cap: int = DEFAULT_CAP):
        self.table = tuple(tuple(int(x) for x in row) for row in table)
        order = len(self.table)
        if order == 0 or any(len(row) != order for row in self.table):
            raise GroupOracleError("multiplication table must be square and nonempty")
        if any(not 0 <= x < order for row in self.table for x in row):
            raise GroupOracleError("multiplication table entry out of range")
        ids = [e for e in range(order)
               if all(self.table[e][x] == x and self.table[x][e] == x for x in range(order))]
        if not ids:
            raise GroupOracleError("multiplication table has no identity")
        self._identity = ids[0]
        self._inverse = {}
        for g in range(order):
            inv = [h for h in range(order) if self.table[g][h] == self._identity]
            if not inv:
                raise GroupOracleError(f"element {g} has no inverse")
            self._inverse[g] = inv[0]
        super().__init__(alphabet, generator_map, cap)
        for g in self.generator_map.values():
            if not 0 <= g < order:
                raise GroupOracleError(f"generator image {g} out of range")

    @property
    def order(self):
        return len(self.table)

    def identity(self):
        return self._identity

    def multiply(self, g, h):
        return self.table[g][h]

    def inverse(self, g):
        return self._inverse[g]

    def canonical(self, g):
        return int(g)

    def format(self, g):
        return f"g{g}"


class FreeAbelianGroup(GroupOracle):
    backend = "free_abelian"

    def __init__(self, alphabet: Alphabet, rank: int, generator_map: Mapping[str, Sequence[int]],
                 cap: int = DEFAULT_CAP):
        self.rank = rank
        for a, g in generator_map.items():
            if len(tuple(g)) != rank:
                raise GroupOracleError(f"image of {a!r} must have {rank} coordinates")
        super().__init__(alphabet, generator_map, cap)
        units = set()
        for i in range(rank):
            for s in (1, -1):
                units.add(tuple(s if j == i else 0 for j in range(rank)))
        # L1 norm is exact when the images are exactly the signed unit vectors.
        self.standard = set(self.generator_map.values()) == units

    def identity(self):
        return (0,) * self.rank

    def multiply(self, g, h):
        return tuple(x + y for x, y in zip(g, h))

    def inverse(self, g):
        return tuple(-x for x in g)

    def canonical(self, g):
        return tuple(int(x) for x in g)

    def closed_form_norm(self, g):
        return sum(abs(x) for x in g) if self.standard else None

    def format(self, g):
        if self.rank == 1:
            return f"{g[0]:+d}" if g[0] else "0"
        return "(" + ",".join(str(x) for x in g) + ")"


def free_reduce(word: Sequence[int]) -> tuple[int, ...]:
    out: list[int] = []
    for x in word:
        if x == 0:
            raise GroupOracleError("free group letters are nonzero integers")
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


class FreeGroup(GroupOracle):
    backend = "free_group"

    def __init__(self, alphabet: Alphabet, rank: int, generator_map: Mapping[str, Sequence[int]],
                 cap: int = DEFAULT_CAP):
        self.rank = rank
        for a, g in generator_map.items():
            if any(not 1 <= abs(x) <= rank for x in g):
                raise GroupOracleError(f"image of {a!r} uses a letter outside rank {rank}")
        super().__init__(alphabet, generator_map, cap)
        letters = {(i,) for i in range(1, rank + 1)} | {(-i,) for i in range(1, rank + 1)}
        self.standard = set(self.generator_map.values()) == letters

    def identity(self):
        return ()

    def multiply(self, g, h):
        return free_reduce(g + h)

    def inverse(self, g):
        return tuple(-x for x in reversed(g))

    def canonical(self, g):
        return free_reduce(tuple(int(x) for x in g))

    def closed_form_norm(self, g):
        return len(g) if self.standard else None

    def format(self, g):
        if not g:
            return "ε"
        return "".join(f"x{abs(x)}" + ("⁻¹" if x < 0 else "") for x in g)

    def sort_key(self, g):
        return (len(g), g)
