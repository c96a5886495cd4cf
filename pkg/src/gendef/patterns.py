"""Forbidden patterns Pf, Pd, Pr, Pg: admission with witnesses, and language classification.

A pattern is admitted when distinct states ``p, q`` and nonempty words exist with

* Pf: ``p.x = p`` and ``q.y = q``
* Pd: ``p.x = p`` and ``q.x = q``
* Pr: ``p.x = p`` and ``p.y = q``
* Pg: ``p.x = p``, ``q.x = q`` and ``p.y = q``

A reduced automaton avoids Pf iff its language is finite or cofinite, Pd iff it
is definite, Pr iff reverse definite and Pg iff generalized definite.

Pairs of states ``(p, q)`` with ``p.x = p`` and ``q.x = q`` for a common
``x`` are exactly the pairs on a cycle of the pair automaton.  That graph has
``n^2`` nodes; it is handled with numpy arrays and scipy's strongly connected
components so the generalized-definite test stays quadratic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .automaton import (
    Dfa,
    PatternWitness,
    Word,
    act,
    cycle_word,
    reachable_set,
    shortest_word,
    transformation_of,
)
from .components import ComponentGraph, component_graph
from .errors import PreconditionError
from .minimize import minimize, separating_word
from .semigroup import DEFAULT_LIMIT, enumerate_semigroup, is_idempotent, is_non_permutational, power, restrict


@dataclass(frozen=True)
class ClassReport:
    is_finite: bool
    is_cofinite: bool
    is_definite: bool
    is_reverse_definite: bool
    is_generalized_definite: bool
    witnesses: dict[str, Optional[PatternWitness]]
    reduced_states: int
    # witnesses refer to the states and letters of this automaton
    reduced: Dfa = field(repr=False, compare=False)


class ProductAutomaton:
    """The pair automaton ``(p, q).a = (p.a, q.a)`` with pair id ``p * n + q``."""

    def __init__(self, dfa: Dfa):
        self.dfa = dfa
        n = dfa.state_count
        delta = np.asarray(dfa.delta, dtype=np.int64)
        self.table = delta[:, None, :] * n + delta[None, :, :]
        self.table = self.table.reshape(n * n, len(dfa.alphabet))

    def pair_of(self, pair_id: int) -> tuple[int, int]:
        return divmod(pair_id, self.dfa.state_count)

    def pair_id(self, p: int, q: int) -> int:
        return p * self.dfa.state_count + q

    @property
    def base(self) -> Dfa:
        """The pair automaton as a Dfa; start ``(q0, q0)``, final where both coordinates are."""
        n = self.dfa.state_count
        finals = [p * n + q for p in self.dfa.finals for q in self.dfa.finals]
        return Dfa(n * n, self.dfa.alphabet, self.table.tolist(), self.pair_id(self.dfa.start, self.dfa.start), finals)


class _PairCycles:
    """Cycle structure of the pair automaton restricted to pairs over ``keep``.

    Pairs with a coordinate outside ``keep`` are dropped, which is exact for
    cycle questions as long as ``keep`` contains every state lying on a cycle.
    """

    def __init__(self, dfa: Dfa, keep: list[int]):
        n = dfa.state_count
        k = len(dfa.alphabet)
        self.states = np.asarray(keep, dtype=np.int64)
        m = self.m = len(keep)
        local = np.full(n, -1, dtype=np.int64)
        local[self.states] = np.arange(m)
        dtype = np.int32 if m * m < 2**31 else np.int64
        succ = np.empty((m * m, k), dtype=dtype)
        delta = np.asarray(dfa.delta, dtype=np.int64)
        for a in range(k):
            la = local[delta[self.states, a]]
            grid = la[:, None] * m + la[None, :]
            grid[(la < 0)[:, None] | (la < 0)[None, :]] = -1
            succ[:, a] = grid.ravel()
        self.succ = succ

        valid = succ >= 0
        counts = valid.sum(axis=1)
        indptr = np.zeros(m * m + 1, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])
        indices = succ[valid]
        graph = csr_matrix((np.ones(indices.size, dtype=np.int8), indices, indptr), shape=(m * m, m * m))
        _, labels = connected_components(graph, directed=True, connection="strong")
        sizes = np.bincount(labels)
        self_loop = (succ == np.arange(m * m, dtype=dtype)[:, None]).any(axis=1)
        on_cycle = (sizes[labels] > 1) | self_loop
        on_cycle = on_cycle.reshape(m, m)
        np.fill_diagonal(on_cycle, False)
        self.on_cycle = on_cycle
        self._words: dict[tuple[int, int], Word] = {}

    def first_pair(self, mask: np.ndarray) -> Optional[tuple[int, int]]:
        """Smallest ``(p, q)`` in original numbering with ``mask`` set (local m x m)."""
        hits = np.flatnonzero(mask)
        if hits.size == 0:
            return None
        i, j = divmod(int(hits[0]), self.m)
        return int(self.states[i]), int(self.states[j])

    def cycle_word(self, p: int, q: int) -> Word:
        """Shortest, then lex-least, nonempty word fixing both ``p`` and ``q``."""
        if (p, q) not in self._words:
            self._words[p, q] = self._search_cycle_word(p, q)
        return self._words[p, q]

    def _search_cycle_word(self, p: int, q: int) -> Word:
        index = {int(s): i for i, s in enumerate(self.states)}
        source = index[p] * self.m + index[q]
        k = self.succ.shape[1]
        parent = np.full(self.m * self.m, -1, dtype=np.int64)
        letter = np.zeros(self.m * self.m, dtype=np.int64)
        earliest = np.empty(self.m * self.m, dtype=np.int64)
        frontier = np.array([source], dtype=np.int64)
        while frontier.size:
            cand = self.succ[frontier].ravel().astype(np.int64)
            par = np.repeat(frontier, k)
            let = np.tile(np.arange(k), frontier.size)
            ok = cand >= 0
            cand, par, let = cand[ok], par[ok], let[ok]
            # keep the first occurrence of each pair, in (frontier, letter) order
            order = np.arange(cand.size)
            earliest[cand] = cand.size
            np.minimum.at(earliest, cand, order)
            first = earliest[cand] == order
            cand, par, let = cand[first], par[first], let[first]
            fresh = parent[cand] == -1
            cand, par, let = cand[fresh], par[fresh], let[fresh]
            parent[cand] = par
            letter[cand] = let
            if parent[source] != -1:
                word = []
                node = source
                while True:
                    word.append(int(letter[node]))
                    node = int(parent[node])
                    if node == source:
                        return tuple(reversed(word))
            frontier = cand
        raise PreconditionError(f"pair ({p}, {q}) lies on no cycle")


def _pair_cycles(dfa: Dfa, cg: ComponentGraph) -> _PairCycles:
    return _PairCycles(dfa, cg.nontrivial_states())


def admits_pf(dfa: Dfa, cg: Optional[ComponentGraph] = None) -> Optional[PatternWitness]:
    cg = cg or component_graph(dfa)
    looping = cg.nontrivial_states()
    if len(looping) < 2:
        return None
    p, q = looping[0], looping[1]
    return PatternWitness("Pf", p, q, cycle_word(dfa, p), cycle_word(dfa, q))


def admits_pr(dfa: Dfa, cg: Optional[ComponentGraph] = None) -> Optional[PatternWitness]:
    cg = cg or component_graph(dfa)
    for p in cg.nontrivial_states():
        c = cg.class_of[p]
        if len(cg.members[c]) == 1 and cg.is_sink[c]:
            continue
        q = min(reachable_set(dfa, p) - {p})
        return PatternWitness("Pr", p, q, cycle_word(dfa, p), shortest_word(dfa, p, q))
    return None


def admits_pd(dfa: Dfa, cg: Optional[ComponentGraph] = None, pairs: Optional[_PairCycles] = None) -> Optional[PatternWitness]:
    cg = cg or component_graph(dfa)
    pairs = pairs or _pair_cycles(dfa, cg)
    found = pairs.first_pair(pairs.on_cycle)
    if found is None:
        return None
    p, q = found
    return PatternWitness("Pd", p, q, pairs.cycle_word(p, q))


def admits_pg(dfa: Dfa, cg: Optional[ComponentGraph] = None, pairs: Optional[_PairCycles] = None) -> Optional[PatternWitness]:
    """Pg admission following the quadratic procedure.

    (a) A nontrivial component that is not a sink gives a witness directly.
    (b) Otherwise look for two states of one sink on a common cycle of the
        pair automaton.
    """
    cg = cg or component_graph(dfa)
    leaky = [
        q for q in cg.nontrivial_states() if not cg.is_sink[cg.class_of[q]]
    ]
    if leaky:
        return _pg_from_leaky_component(dfa, cg, leaky[0])
    pairs = pairs or _pair_cycles(dfa, cg)
    comp = np.asarray(cg.class_of)[pairs.states]
    found = pairs.first_pair(pairs.on_cycle & (comp[:, None] == comp[None, :]))
    if found is None:
        return None
    p, q = found
    return PatternWitness("Pg", p, q, pairs.cycle_word(p, q), shortest_word(dfa, p, q))


def _pg_from_leaky_component(dfa: Dfa, cg: ComponentGraph, p: int) -> PatternWitness:
    u = cycle_word(dfa, p)
    reach = reachable_set(dfa, p)
    sink = min(
        (c for c in range(cg.component_count) if cg.is_sink[c] and cg.members[c][0] in reach),
        key=lambda c: cg.members[c][0],
    )
    members = cg.members[sink]
    t = transformation_of(dfa, u)
    # u^|C| is constant on the sink C whenever u is non-permutational there
    exponent = len(members)
    image = power(t, exponent)
    fixed = sorted(q for q in members if image[q] == q)
    if not fixed:
        # u permutes part of the sink; an idempotent power still has fixed points there
        exponent = 1
        while not is_idempotent(power(t, exponent)):
            exponent += 1
        image = power(t, exponent)
        fixed = sorted(q for q in members if image[q] == q)
    q = fixed[0]
    return PatternWitness("Pg", p, q, u * exponent, shortest_word(dfa, p, q))


def validate_witness(dfa: Dfa, w: PatternWitness) -> bool:
    n = dfa.state_count
    k = len(dfa.alphabet)
    words = [w.x] if w.y is None else [w.x, w.y]
    if not (0 <= w.p < n and 0 <= w.q < n) or w.p == w.q:
        return False
    if any(not word or any(not 0 <= a < k for a in word) for word in words):
        return False
    p, q, x, y = w.p, w.q, w.x, w.y
    if w.pattern_id == "Pd":
        return y is None and act(dfa, p, x) == p and act(dfa, q, x) == q
    if y is None:
        return False
    if w.pattern_id == "Pf":
        return act(dfa, p, x) == p and act(dfa, q, y) == q
    if w.pattern_id == "Pr":
        return act(dfa, p, x) == p and act(dfa, p, y) == q
    return act(dfa, p, x) == p and act(dfa, q, x) == q and act(dfa, p, y) == q


def classify(dfa: Dfa) -> ClassReport:
    """Minimize, then decide all four patterns on the reduced automaton."""
    reduced = minimize(dfa).reduced
    cg = component_graph(reduced)
    pairs = _pair_cycles(reduced, cg)
    witnesses = {
        "Pf": admits_pf(reduced, cg),
        "Pd": admits_pd(reduced, cg, pairs),
        "Pr": admits_pr(reduced, cg),
        "Pg": admits_pg(reduced, cg, pairs),
    }
    finite = cofinite = False
    if witnesses["Pf"] is None:
        # the single state on a cycle is the one singleton sink
        (s,) = cg.nontrivial_states()
        finite = s not in reduced.finals
        cofinite = not finite
    return ClassReport(
        is_finite=finite,
        is_cofinite=cofinite,
        is_definite=witnesses["Pd"] is None,
        is_reverse_definite=witnesses["Pr"] is None,
        is_generalized_definite=witnesses["Pg"] is None,
        witnesses=witnesses,
        reduced_states=reduced.state_count,
        reduced=reduced,
    )


def check_condition_ii(dfa: Dfa, limit: int = DEFAULT_LIMIT) -> bool:
    """Every nontrivial component is a sink and every semigroup element is
    non-permutational on every sink.  Uses the full transition semigroup."""
    cg = component_graph(dfa)
    if any(not cg.is_trivial[c] and not cg.is_sink[c] for c in range(cg.component_count)):
        return False
    sg = enumerate_semigroup(dfa, limit)
    sink_sets = [cg.members[c] for c in range(cg.component_count) if cg.is_sink[c]]
    return all(is_non_permutational(restrict(t, members)) for members in sink_sets for t in sg)


def non_k_gd_counterexample(dfa: Dfa, w: PatternWitness, k: int) -> tuple[Word, Word]:
    """Two words sharing their length-``k`` prefix and suffix but not membership.

    With ``u`` leading the start to ``p`` and ``s`` separating ``p`` from ``q``
    these are ``u x^k x^k s`` and ``u x^k y x^k s``.
    """
    if w.pattern_id != "Pg" or not validate_witness(dfa, w):
        raise PreconditionError("not a valid Pg witness for this automaton")
    if k < 1:
        raise PreconditionError("k must be at least 1")
    u = shortest_word(dfa, dfa.start, w.p)
    s = separating_word(dfa, w.p, w.q)
    if u is None or s is None:
        raise PreconditionError("automaton is not reduced")
    xk = w.x * k
    return u + xk + xk + s, u + xk + w.y + xk + s

