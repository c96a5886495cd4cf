"""Complete DFAs, words, transformations and the right action of words on states.

States are the integers ``0..n-1``; letters are indices into ``Dfa.alphabet``.
A word is a tuple of letter indices and a transformation is a tuple ``t`` with
``t[q]`` the image of ``q``.  Composition is left-to-right: ``compose(f, g)``
first applies ``f`` and then ``g``, matching the right action ``q.(uv) = (q.u).v``.
"""

from __future__ import annotations

from itertools import product
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import DimensionError, InputError

Word = tuple[int, ...]
Transformation = tuple[int, ...]

EPSILON: Word = ()


@dataclass(frozen=True)
class Dfa:
    state_count: int
    alphabet: tuple[str, ...]
    delta: tuple[tuple[int, ...], ...]
    start: int
    finals: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(self.alphabet))
        object.__setattr__(self, "delta", tuple(tuple(row) for row in self.delta))
        object.__setattr__(self, "finals", frozenset(self.finals))
        n = self.state_count
        if n < 1:
            raise InputError("an automaton needs at least one state")
        if not self.alphabet:
            raise InputError("the alphabet must be nonempty")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise InputError("alphabet names must be distinct")
        for name in self.alphabet:
            if not isinstance(name, str) or not name or any(c.isspace() for c in name):
                raise InputError(f"invalid letter name {name!r}")
        if len(self.delta) != n:
            raise InputError(f"transition table has {len(self.delta)} rows, expected {n}")
        k = len(self.alphabet)
        for q, row in enumerate(self.delta):
            if len(row) != k:
                raise InputError(f"state {q} has {len(row)} transitions, expected {k}")
            for target in row:
                if not 0 <= target < n:
                    raise InputError(f"transition from state {q} leaves the state set")
        if not 0 <= self.start < n:
            raise InputError(f"start state {self.start} out of range")
        for q in self.finals:
            if not 0 <= q < n:
                raise InputError(f"final state {q} out of range")

    @classmethod
    def from_transitions(cls, state_count, alphabet, transitions, start, finals) -> "Dfa":
        """Build from a ``{(state, letter_name): state}`` mapping; it must be complete."""
        alphabet = tuple(alphabet)
        rows = []
        for q in range(state_count):
            row = []
            for name in alphabet:
                if (q, name) not in transitions:
                    raise InputError(f"missing transition for state {q} on {name!r}")
                row.append(transitions[q, name])
            rows.append(row)
        return cls(state_count, alphabet, rows, start, finals)

    @property
    def states(self) -> range:
        return range(self.state_count)

    def word(self, text: str) -> Word:
        """Parse ``text`` into letter indices.

        Whitespace-separated names are used when ``text`` contains spaces;
        otherwise every character is one letter (single-character alphabets).
        """
        index = {name: i for i, name in enumerate(self.alphabet)}
        if text.strip() in index:
            return (index[text.strip()],)
        tokens = text.split() if (" " in text.strip()) else list(text.strip())
        try:
            return tuple(index[t] for t in tokens)
        except KeyError as exc:
            raise InputError(f"unknown letter {exc.args[0]!r}") from None

    def format_word(self, w: Sequence[int]) -> str:
        return " ".join(self.alphabet[a] for a in w)

    def accepts(self, w: Sequence[int]) -> bool:
        return act(self, self.start, w) in self.finals


@dataclass(frozen=True)
class PatternWitness:
    """Concrete instantiation ``(p, q, x, y)`` of one of the forbidden patterns."""

    pattern_id: str
    p: int
    q: int
    x: Word
    y: Optional[Word] = None

    def __post_init__(self):
        if self.pattern_id not in PATTERN_IDS:
            raise InputError(f"unknown pattern {self.pattern_id!r}")
        object.__setattr__(self, "x", tuple(self.x))
        if self.y is not None:
            object.__setattr__(self, "y", tuple(self.y))
        if self.p == self.q:
            raise InputError("pattern states must differ")
        if not self.x or self.y == ():
            raise InputError("pattern words must be nonempty")


PATTERN_IDS = ("Pf", "Pd", "Pr", "Pg")


def act(dfa: Dfa, q: int, w: Iterable[int]) -> int:
    delta = dfa.delta
    for a in w:
        q = delta[q][a]
    return q


def identity(n: int) -> Transformation:
    return tuple(range(n))


def transformation_of(dfa: Dfa, w: Sequence[int]) -> Transformation:
    """The map ``q -> q.w``; the empty word yields the identity."""
    t = identity(dfa.state_count)
    for a in w:
        t = letter_step(dfa, t, a)
    return t


def letter_transformations(dfa: Dfa) -> list[Transformation]:
    return [tuple(row[a] for row in dfa.delta) for a in range(len(dfa.alphabet))]


def letter_step(dfa: Dfa, t: Transformation, a: int) -> Transformation:
    delta = dfa.delta
    return tuple(delta[s][a] for s in t)


def compose(f: Sequence[int], g: Sequence[int]) -> Transformation:
    """``q -> g[f[q]]``."""
    if len(f) != len(g):
        raise DimensionError(f"cannot compose maps of sizes {len(f)} and {len(g)}")
    return tuple(g[s] for s in f)


def reachable_set(dfa: Dfa, source: int) -> set[int]:
    seen = {source}
    stack = [source]
    delta = dfa.delta
    while stack:
        q = stack.pop()
        for target in delta[q]:
            if target not in seen:
                seen.add(target)
                stack.append(target)
    return seen


def bfs_order(dfa: Dfa, source: int) -> list[int]:
    """States reachable from ``source`` in BFS discovery order (letters in alphabet order)."""
    order = [source]
    seen = {source}
    i = 0
    while i < len(order):
        for target in dfa.delta[order[i]]:
            if target not in seen:
                seen.add(target)
                order.append(target)
        i += 1
    return order


def renumber(dfa: Dfa, order: Sequence[int]) -> Dfa:
    """Restrict to the states in ``order`` (closed under transitions), numbered by position."""
    new_id = {q: i for i, q in enumerate(order)}
    delta = [[new_id[t] for t in dfa.delta[q]] for q in order]
    finals = [new_id[q] for q in order if q in dfa.finals]
    return Dfa(len(order), dfa.alphabet, delta, new_id[dfa.start], finals)


def connected_part(dfa: Dfa) -> Dfa:
    return renumber(dfa, bfs_order(dfa, dfa.start))


def complement(dfa: Dfa) -> Dfa:
    return Dfa(dfa.state_count, dfa.alphabet, dfa.delta, dfa.start, set(dfa.states) - dfa.finals)


def shortest_word(dfa: Dfa, source: int, target: int, nonempty: bool = False) -> Optional[Word]:
    """Shortest, then lexicographically least, word leading ``source`` to ``target``.

    With ``nonempty`` the empty word is excluded, so ``source == target`` asks
    for a cycle word.  Returns None when no such word exists.
    """
    if source == target and not nonempty:
        return EPSILON
    parent: dict[int, tuple[int, int]] = {}
    frontier = [source]
    while frontier:
        nxt = []
        for q in frontier:
            for a, r in enumerate(dfa.delta[q]):
                if r in parent or (r == source and target != source):
                    continue
                parent[r] = (q, a)
                if r == target:
                    return _unwind(parent, source, target)
                nxt.append(r)
        frontier = nxt
    return None


def _unwind(parent, source, target) -> Word:
    letters = []
    node = target
    while True:
        prev, a = parent[node]
        letters.append(a)
        node = prev
        if node == source:
            break
    return tuple(reversed(letters))


def cycle_word(dfa: Dfa, q: int) -> Optional[Word]:
    """Shortest lex-least nonempty word fixing ``q``, or None when ``q`` is on no cycle."""
    return shortest_word(dfa, q, q, nonempty=True)


def words_of_length(alphabet_size: int, length: int) -> Iterable[Word]:
    return product(range(alphabet_size), repeat=length)


def words_up_to(alphabet_size: int, max_len: int) -> Iterable[Word]:
    for length in range(max_len + 1):
        yield from words_of_length(alphabet_size, length)
