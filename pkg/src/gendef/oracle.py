"""Semantic deciders for k-definiteness, finiteness, and exhaustive DFA enumeration.

These work straight from the language definitions and never look at the
forbidden patterns, so they serve as ground truth for ``patterns``.

The word quantifiers are moved to states as follows.  Let ``sep_k(u, v)`` hold
when some word of length exactly ``k`` leads ``u`` and ``v`` to states of
different finality; ``sep_0`` compares finality and ``sep_j(u, v)`` holds iff
``sep_{j-1}(u.a, v.a)`` for some letter ``a``.

* k-definite: ``xy in L <=> y in L`` for all x and all y of length k.  The
  state ``q0.x`` ranges over every reachable state ``p``, so the condition is
  ``not sep_k(p, q0)`` for all reachable ``p``.
* k-reverse definite: ``xy in L <=> x in L`` for x of length k.  Writing
  ``s = q0.x``, membership of ``x`` is the finality of ``s`` and ``s.y`` ranges
  over the states reachable from ``s``; all of them must share that finality.
* k-generalized definite: ``x1 y x2 in L <=> x1 x2 in L``.  With ``s = q0.x1``
  (exactly k letters) and ``p = s.y`` reachable from ``s``, the condition is
  ``not sep_k(s, p)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from string import ascii_lowercase
from typing import Iterator, Optional

import numpy as np

from .automaton import Dfa, act, reachable_set, words_of_length, words_up_to
from .errors import PreconditionError, ResourceLimitError

KINDS = ("definite", "reverse_definite", "generalized_definite")
DEFAULT_MAX_K = 32


@dataclass(frozen=True)
class IndexReport:
    class_kind: str
    minimal_k: Optional[int]
    searched_up_to: int


class _Tables:
    """Per-automaton arrays shared by the k-deciders."""

    def __init__(self, dfa: Dfa):
        n = dfa.state_count
        self.dfa = dfa
        self.delta = np.asarray(dfa.delta, dtype=np.int64)
        self.final = np.zeros(n, dtype=bool)
        self.final[list(dfa.finals)] = True
        self.reach = np.zeros((n, n), dtype=bool)
        for s in range(n):
            self.reach[s, list(reachable_set(dfa, s))] = True

    def sep0(self) -> np.ndarray:
        return self.final[:, None] ^ self.final[None, :]

    def sep_step(self, sep: np.ndarray) -> np.ndarray:
        out = np.zeros_like(sep)
        for a in range(self.delta.shape[1]):
            col = self.delta[:, a]
            out |= sep[np.ix_(col, col)]
        return out

    def layer0(self) -> np.ndarray:
        layer = np.zeros(self.dfa.state_count, dtype=bool)
        layer[self.dfa.start] = True
        return layer

    def layer_step(self, layer: np.ndarray) -> np.ndarray:
        out = np.zeros_like(layer)
        out[self.delta[layer].ravel()] = True
        return out

    def passes(self, kind: str, sep: np.ndarray, layer: np.ndarray) -> bool:
        if kind == "definite":
            start = self.dfa.start
            return not (sep[start] & self.reach[start]).any()
        if kind == "generalized_definite":
            return not (sep[layer] & self.reach[layer]).any()
        if kind == "reverse_definite":
            rows = self.reach[layer]
            want = self.final[layer]
            return bool(((self.final[None, :] == want[:, None]) | ~rows).all())
        raise PreconditionError(f"unknown class kind {kind!r}")


def _check_k(dfa: Dfa, kind: str, k: int) -> bool:
    if k < 0:
        raise PreconditionError("k must be nonnegative")
    tables = _Tables(dfa)
    sep, layer = tables.sep0(), tables.layer0()
    for _ in range(k):
        sep = tables.sep_step(sep)
        layer = tables.layer_step(layer)
    return tables.passes(kind, sep, layer)


def is_k_generalized_definite(dfa: Dfa, k: int) -> bool:
    return _check_k(dfa, "generalized_definite", k)


def is_k_definite(dfa: Dfa, k: int) -> bool:
    return _check_k(dfa, "definite", k)


def is_k_reverse_definite(dfa: Dfa, k: int) -> bool:
    return _check_k(dfa, "reverse_definite", k)


def definiteness_index(dfa: Dfa, kind: str, max_k: int = DEFAULT_MAX_K) -> IndexReport:
    """Least k <= max_k for which the language is k-<kind>, if any."""
    if kind not in KINDS:
        raise PreconditionError(f"unknown class kind {kind!r}")
    if max_k < 0:
        raise PreconditionError("max_k must be nonnegative")
    tables = _Tables(dfa)
    sep, layer = tables.sep0(), tables.layer0()
    for k in range(max_k + 1):
        if tables.passes(kind, sep, layer):
            return IndexReport(kind, k, max_k)
        sep = tables.sep_step(sep)
        layer = tables.layer_step(layer)
    return IndexReport(kind, None, max_k)


def is_finite_language(dfa: Dfa) -> bool:
    """No state that is both reachable and co-reachable lies on a cycle."""
    reach = reachable_set(dfa, dfa.start)
    useful = [q for q in reach if any(f in dfa.finals for f in reachable_set(dfa, q))]
    for q in useful:
        if any(q in reachable_set(dfa, r) for r in dfa.delta[q]):
            return False
    return True


def word_level_check(dfa: Dfa, kind: str, k: int, max_len: int, budget: int = 10**7) -> bool:
    """Literal quantifier enumeration of the class definition, ``y`` (or ``x`` for
    definite) bounded by ``max_len``.  Only refutations are conclusive."""
    if kind not in KINDS:
        raise PreconditionError(f"unknown class kind {kind!r}")
    sigma = len(dfa.alphabet)
    free = sum(sigma**i for i in range(max_len + 1))
    fixed = sigma ** (2 * k if kind == "generalized_definite" else k)
    if free * fixed > budget:
        raise ResourceLimitError(f"{free * fixed} word combinations exceed the budget of {budget}")
    accepts = dfa.accepts
    if kind == "definite":
        return all(
            accepts(x + y) == accepts(y)
            for y in words_of_length(sigma, k)
            for x in words_up_to(sigma, max_len)
        )
    if kind == "reverse_definite":
        return all(
            accepts(x + y) == accepts(x)
            for x in words_of_length(sigma, k)
            for y in words_up_to(sigma, max_len)
        )
    for x1 in words_of_length(sigma, k):
        s = act(dfa, dfa.start, x1)
        for x2 in words_of_length(sigma, k):
            base = act(dfa, s, x2) in dfa.finals
            for y in words_up_to(sigma, max_len):
                if (act(dfa, act(dfa, s, y), x2) in dfa.finals) != base:
                    return False
    return True


def letter_names(alphabet_size: int) -> tuple[str, ...]:
    if alphabet_size <= len(ascii_lowercase):
        return tuple(ascii_lowercase[:alphabet_size])
    return tuple(f"a{i}" for i in range(alphabet_size))


def enumerate_dfas(n: int, alphabet_size: int, budget: int = 10**6) -> Iterator[Dfa]:
    """Every complete DFA on states ``0..n-1`` with start 0: transition tables in
    lexicographic order, final sets by bitmask within each table."""
    if n < 1 or alphabet_size < 1:
        raise PreconditionError("need at least one state and one letter")
    total = n ** (n * alphabet_size) * 2**n
    if total > budget:
        raise ResourceLimitError(f"{total} automata exceed the enumeration budget of {budget}")
    names = letter_names(alphabet_size)
    for flat in product(range(n), repeat=n * alphabet_size):
        delta = [flat[q * alphabet_size:(q + 1) * alphabet_size] for q in range(n)]
        for mask in range(2**n):
            yield Dfa(n, names, delta, 0, [q for q in range(n) if mask >> q & 1])


def count_dfas(n: int, alphabet_size: int) -> int:
    return n ** (n * alphabet_size) * 2**n
