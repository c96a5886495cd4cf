"""Text formats for automata and DAGs, and the JSON form of classification reports.

DFA file::

    dfa
    states <n>
    alphabet <name> <name> ...
    start <q>
    final <q> ...
    trans <q> <letter> <q'>        # exactly once per (state, letter)

DAG file::

    dag
    vertices <n>
    edge <i> <j>                   # 1 <= i < j <= n, no duplicates

``#`` starts a comment and blank lines are ignored.  Header lines must appear
in the order shown.
"""

from __future__ import annotations

from typing import Optional

from .automaton import Dfa, PatternWitness, PATTERN_IDS, Word
from .constructions import Dag
from .errors import InputError


def _lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield number, line.split()


def _int(token: str, number: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise InputError(f"{what} must be an integer, got {token!r}", number) from None


def _expect(lines, keyword, min_args, max_args=None):
    try:
        number, tokens = next(lines)
    except StopIteration:
        raise InputError(f"unexpected end of input, expected {keyword!r}") from None
    if tokens[0] != keyword:
        raise InputError(f"expected {keyword!r}, got {tokens[0]!r}", number)
    args = tokens[1:]
    if len(args) < min_args or (max_args is not None and len(args) > max_args):
        raise InputError(f"wrong number of arguments for {keyword!r}", number)
    return number, args


def parse_dfa(text: str) -> Dfa:
    dfas = parse_dfa_stream(text)
    if len(dfas) != 1:
        raise InputError(f"expected one automaton, found {len(dfas)}")
    return dfas[0]


def parse_dfa_stream(text: str) -> list[Dfa]:
    """Parse zero or more concatenated DFA files."""
    lines = _lines(text)
    result = []
    peeked = next(lines, None)
    while peeked is not None:
        number, tokens = peeked
        if tokens != ["dfa"]:
            raise InputError(f"expected 'dfa' header, got {' '.join(tokens)!r}", number)
        dfa, peeked = _parse_one(lines)
        result.append(dfa)
    return result


def _parse_one(lines):
    number, args = _expect(lines, "states", 1, 1)
    n = _int(args[0], number, "state count")
    if n < 1:
        raise InputError("state count must be positive", number)
    number, alphabet = _expect(lines, "alphabet", 1)
    if len(set(alphabet)) != len(alphabet):
        raise InputError("duplicate letter names", number)
    index = {name: i for i, name in enumerate(alphabet)}
    number, args = _expect(lines, "start", 1, 1)
    start = _int(args[0], number, "start state")
    if not 0 <= start < n:
        raise InputError(f"start state {start} out of range", number)
    number, args = _expect(lines, "final", 0)
    finals = set()
    for token in args:
        q = _int(token, number, "final state")
        if not 0 <= q < n:
            raise InputError(f"final state {q} out of range", number)
        finals.add(q)

    table: dict[tuple[int, int], int] = {}
    peeked = None
    for number, tokens in lines:
        if tokens[0] != "trans":
            peeked = (number, tokens)
            break
        if len(tokens) != 4:
            raise InputError("trans needs a state, a letter and a state", number)
        q = _int(tokens[1], number, "state")
        target = _int(tokens[3], number, "state")
        if not (0 <= q < n and 0 <= target < n):
            raise InputError("state out of range", number)
        if tokens[2] not in index:
            raise InputError(f"unknown letter {tokens[2]!r}", number)
        key = (q, index[tokens[2]])
        if key in table:
            raise InputError(f"duplicate transition for state {q} on {tokens[2]!r}", number)
        table[key] = target
    if len(table) != n * len(alphabet):
        missing = next((q, a) for q in range(n) for a in alphabet if (q, index[a]) not in table)
        raise InputError(f"automaton is incomplete: no transition for state {missing[0]} on {missing[1]!r}")
    delta = [[table[q, a] for a in range(len(alphabet))] for q in range(n)]
    return Dfa(n, alphabet, delta, start, finals), peeked


def serialize_dfa(dfa: Dfa) -> str:
    out = [
        "dfa",
        f"states {dfa.state_count}",
        "alphabet " + " ".join(dfa.alphabet),
        f"start {dfa.start}",
        " ".join(["final"] + [str(q) for q in sorted(dfa.finals)]),
    ]
    for q, row in enumerate(dfa.delta):
        for a, target in enumerate(row):
            out.append(f"trans {q} {dfa.alphabet[a]} {target}")
    return "\n".join(out) + "\n"


def parse_dag(text: str) -> Dag:
    lines = _lines(text)
    _expect(lines, "dag", 0, 0)
    number, args = _expect(lines, "vertices", 1, 1)
    n = _int(args[0], number, "vertex count")
    edges = set()
    for number, tokens in lines:
        if tokens[0] != "edge" or len(tokens) != 3:
            raise InputError("expected 'edge <i> <j>'", number)
        i = _int(tokens[1], number, "vertex")
        j = _int(tokens[2], number, "vertex")
        if not 1 <= i < j <= n:
            raise InputError(f"edge ({i}, {j}) violates 1 <= i < j <= {n}", number)
        if (i, j) in edges:
            raise InputError(f"duplicate edge ({i}, {j})", number)
        edges.add((i, j))
    return Dag(n, frozenset(edges))


def serialize_dag(g: Dag) -> str:
    out = ["dag", f"vertices {g.vertex_count}"]
    out += [f"edge {i} {j}" for i, j in sorted(g.edges)]
    return "\n".join(out) + "\n"


def word_to_json(dfa: Dfa, w: Optional[Word]):
    if w is None:
        return None
    return {"letters": dfa.format_word(w), "indices": list(w)}


def witness_to_json(dfa: Dfa, w: Optional[PatternWitness]):
    if w is None:
        return None
    return {
        "pattern": w.pattern_id,
        "p": w.p,
        "q": w.q,
        "x": word_to_json(dfa, w.x),
        "y": word_to_json(dfa, w.y),
    }


def report_to_json(report, indices=None) -> dict:
    """Fixed key set; ``indices`` maps class kind to minimal k (or None) when given."""
    dfa = report.reduced
    return {
        "reduced_states": report.reduced_states,
        "finite": report.is_finite,
        "cofinite": report.is_cofinite,
        "definite": report.is_definite,
        "reverse_definite": report.is_reverse_definite,
        "generalized_definite": report.is_generalized_definite,
        "witnesses": {pid: witness_to_json(dfa, report.witnesses[pid]) for pid in PATTERN_IDS},
        "indices": indices,
    }
