"""Line-oriented text format for quasi-automatic structures.

A file is a sequence of blocks, each closed by ``end``; ``#`` starts a
comment.  Example::

    name z_shortlex
    oracle free_abelian 1
    gen a 1
    gen b -1
    end
    dictionary
    states 3
    initial 0
    finals 1 2
    trans 0 a 1
    end
    relation eps
    letter a/ first a
    letter /a second a
    states 3
    initial 0
    finals 2
    trans 0 a/ 1
    end
    relation a pairs
    initial s
    finals f
    pair s a a t
    pair t - a f
    end

Oracle backends: ``trivial`` (``gen a`` lines), ``finite_table N``
(``gen a i`` and ``N`` lines ``row ...`` of the row-major table),
``free_abelian d`` (``gen a x1 .. xd``) and ``free_group r`` (``gen a``
followed by the image as signed letter indices).  Relation blocks come in
Nivat form (``letter`` lines plus an automaton) or as a two-tape table
(``pairs``, with ``-`` for an empty tape).
"""

from __future__ import annotations

from . import bimorphism as bim
from .automata import Alphabet, AutomatonError, Nfa
from .bimorphism import TAPES, NivatBimorphism, TapeLetter
from .groups import (FiniteTableGroup, FreeAbelianGroup, FreeGroup, GroupOracle,
                     GroupOracleError, TrivialGroup)
from .structure import EPS, QuasiAutomaticStructure, StructureError, relation_label

BACKENDS = ("trivial", "finite_table", "free_abelian", "free_group")


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _blocks(text: str):
    """Yield ``(header_tokens, header_line, [(tokens, line), ...])``; top-level lines alone."""
    current = None
    for n, raw in enumerate(text.splitlines(), 1):
        toks = raw.split("#", 1)[0].split()
        if not toks:
            continue
        if current is None:
            if toks[0] == "name":
                yield toks, n, None
            elif toks[0] in ("oracle", "dictionary", "relation"):
                current = (toks, n, [])
            else:
                raise FormatError(f"unexpected {toks[0]!r} outside a block", n)
        elif toks == ["end"]:
            yield current
            current = None
        else:
            current[2].append((toks, n))
    if current is not None:
        raise FormatError(f"block {' '.join(current[0])!r} is not closed by 'end'", current[1])


def _int(tok: str, line: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise FormatError(f"expected an integer, got {tok!r}", line) from None


def _parse_oracle(header, hline, body) -> GroupOracle:
    if len(header) < 2 or header[1] not in BACKENDS:
        raise FormatError(f"oracle backend must be one of {', '.join(BACKENDS)}", hline)
    backend = header[1]
    param = None
    if backend != "trivial":
        if len(header) != 3:
            raise FormatError(f"oracle {backend} needs one integer parameter", hline)
        param = _int(header[2], hline)
    gens: dict[str, list] = {}
    rows = []
    for toks, n in body:
        if toks[0] == "gen" and len(toks) >= 2:
            if toks[1] in gens:
                raise FormatError(f"generator {toks[1]!r} declared twice", n)
            gens[toks[1]] = [_int(t, n) for t in toks[2:]]
        elif toks[0] == "row" and backend == "finite_table":
            rows.append([_int(t, n) for t in toks[1:]])
        else:
            raise FormatError(f"unexpected {' '.join(toks)!r} in oracle block", n)
    if not gens:
        raise FormatError("oracle block declares no generators", hline)
    try:
        A = Alphabet(tuple(gens))
        if backend == "trivial":
            if any(gens.values()):
                raise FormatError("trivial generators take no image", hline)
            return TrivialGroup(A)
        if backend == "finite_table":
            if len(rows) != param:
                raise FormatError(f"expected {param} table rows, got {len(rows)}", hline)
            images = {}
            for a, img in gens.items():
                if len(img) != 1:
                    raise FormatError(f"finite_table generator {a!r} needs one element index", hline)
                images[a] = img[0]
            return FiniteTableGroup(A, rows, images)
        if backend == "free_abelian":
            return FreeAbelianGroup(A, param, {a: tuple(v) for a, v in gens.items()})
        return FreeGroup(A, param, {a: tuple(v) for a, v in gens.items()})
    except (GroupOracleError, AutomatonError) as exc:
        raise FormatError(str(exc), hline) from None


def _parse_automaton(alphabet: Alphabet, lines, hline, what: str) -> Nfa:
    n_states = initial = None
    finals = []
    trans = []
    for toks, n in lines:
        key = toks[0]
        if key == "states" and len(toks) == 2:
            n_states = _int(toks[1], n)
        elif key == "initial" and len(toks) == 2:
            initial = _int(toks[1], n)
        elif key == "finals":
            finals = [_int(t, n) for t in toks[1:]]
        elif key == "trans" and len(toks) == 4:
            if toks[2] not in alphabet:
                raise FormatError(f"symbol {toks[2]!r} not in alphabet", n)
            trans.append((_int(toks[1], n), toks[2], _int(toks[3], n)))
        else:
            raise FormatError(f"unexpected {' '.join(toks)!r} in {what}", n)
    if n_states is None or initial is None:
        raise FormatError(f"{what} needs 'states' and 'initial' lines", hline)
    try:
        return Nfa(alphabet, n_states, trans, initial, finals)
    except AutomatonError as exc:
        raise FormatError(f"{what}: {exc}", hline) from None


def _parse_relation(A: Alphabet, header, hline, body) -> tuple[str, NivatBimorphism]:
    if len(header) not in (2, 3) or (len(header) == 3 and header[2] not in ("nivat", "pairs")):
        raise FormatError("relation header is 'relation <letter|eps> [nivat|pairs]'", hline)
    key = EPS if header[1] == "eps" else header[1]
    if key != EPS and key not in A:
        raise FormatError(f"relation for unknown generator {header[1]!r}", hline)
    form = header[2] if len(header) == 3 else "nivat"
    if form == "pairs":
        initial = None
        finals = []
        table = []
        for toks, n in body:
            if toks[0] == "initial" and len(toks) == 2:
                initial = toks[1]
            elif toks[0] == "finals":
                finals = toks[1:]
            elif toks[0] == "pair" and len(toks) == 5:
                a = None if toks[2] == "-" else toks[2]
                b = None if toks[3] == "-" else toks[3]
                for sym in (a, b):
                    if sym is not None and sym not in A:
                        raise FormatError(f"symbol {sym!r} not in alphabet", n)
                if a is None and b is None:
                    raise FormatError("pair transition writes on neither tape", n)
                table.append((toks[1], a, b, toks[4]))
            else:
                raise FormatError(f"unexpected {' '.join(toks)!r} in pairs relation", n)
        if initial is None:
            raise FormatError("pairs relation needs an 'initial' line", hline)
        return key, bim.from_pair_transitions(A, table, initial, finals)
    letters = []
    rest = []
    for toks, n in body:
        if toks[0] == "letter":
            if len(toks) != 4 or toks[2] not in TAPES or toks[3] not in A:
                raise FormatError("letter line is 'letter <name> first|second <symbol>'", n)
            letters.append(TapeLetter(toks[1], toks[2], toks[3]))
        else:
            rest.append((toks, n))
    if not letters:
        raise FormatError("nivat relation declares no letters", hline)
    try:
        inner = Alphabet(tuple(t.symbol for t in letters))
    except AutomatonError as exc:
        raise FormatError(str(exc), hline) from None
    h = _parse_automaton(inner, rest, hline, f"relation {header[1]}")
    return key, NivatBimorphism(A, letters, h)


def loads(text: str) -> QuasiAutomaticStructure:
    name = ""
    oracle = None
    dictionary = None
    relations = {}
    pending = []
    for header, hline, body in _blocks(text):
        kind = header[0]
        if kind == "name":
            name = " ".join(header[1:])
        elif kind == "oracle":
            if oracle is not None:
                raise FormatError("second oracle block", hline)
            oracle = _parse_oracle(header, hline, body)
        else:
            pending.append((header, hline, body))
    if oracle is None:
        raise FormatError("missing oracle block")
    for header, hline, body in pending:
        if header[0] == "dictionary":
            if dictionary is not None:
                raise FormatError("second dictionary block", hline)
            if len(header) != 1:
                raise FormatError("dictionary header takes no arguments", hline)
            dictionary = _parse_automaton(oracle.alphabet, body, hline, "dictionary")
        else:
            key, rel = _parse_relation(oracle.alphabet, header, hline, body)
            if key in relations:
                raise FormatError(f"second relation block for {relation_label(key)}", hline)
            relations[key] = rel
    if dictionary is None:
        raise FormatError("missing dictionary block")
    for key in (EPS,) + oracle.alphabet.symbols:
        if key not in relations:
            raise FormatError(f"missing relation block for {relation_label(key)!r}")
    try:
        return QuasiAutomaticStructure(oracle, dictionary, relations, name)
    except StructureError as exc:
        raise FormatError(str(exc)) from None


def load(path) -> QuasiAutomaticStructure:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def _dump_automaton(x: Nfa) -> list[str]:
    lines = [f"states {x.n_states}", f"initial {x.initial}",
             "finals" + "".join(f" {f}" for f in sorted(x.finals))]
    key = x.alphabet.index
    for p, a, q in sorted(x.transitions, key=lambda t: (t[0], key(t[1]), t[2])):
        lines.append(f"trans {p} {a} {q}")
    return lines


def _dump_oracle(o: GroupOracle) -> list[str]:
    if isinstance(o, TrivialGroup):
        return ["oracle trivial"] + [f"gen {a}" for a in o.alphabet] + ["end"]
    if isinstance(o, FiniteTableGroup):
        lines = [f"oracle finite_table {o.order}"]
        lines += [f"gen {a} {o.generator_map[a]}" for a in o.alphabet]
        lines += ["row " + " ".join(str(x) for x in row) for row in o.table]
        return lines + ["end"]
    if isinstance(o, FreeAbelianGroup):
        lines = [f"oracle free_abelian {o.rank}"]
    elif isinstance(o, FreeGroup):
        lines = [f"oracle free_group {o.rank}"]
    else:
        raise FormatError(f"cannot serialize oracle {type(o).__name__}")
    lines += [f"gen {a} " + " ".join(str(x) for x in o.generator_map[a]) for a in o.alphabet]
    return [line.rstrip() for line in lines] + ["end"]


def dumps(s: QuasiAutomaticStructure) -> str:
    lines = []
    if s.name:
        lines.append(f"name {s.name}")
    lines += _dump_oracle(s.oracle)
    lines += ["dictionary"] + _dump_automaton(s.dictionary) + ["end"]
    for key in s.keys():
        rel = s.relations[key]
        lines.append(f"relation {relation_label(key)}")
        lines += [f"letter {t.symbol} {t.emits_on} {t.payload}" for t in rel.letters.values()]
        lines += _dump_automaton(rel.h) + ["end"]
    return "\n".join(lines) + "\n"
