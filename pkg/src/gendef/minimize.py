"""Reduced (minimal) automata via Hopcroft partition refinement, and separating words."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .automaton import EPSILON, Dfa, Word, bfs_order, reachable_set


@dataclass(frozen=True)
class MinimizationResult:
    reduced: Dfa
    # original state -> reduced state, for the states reachable from the start
    class_of: dict[int, int]


def _hopcroft(dfa: Dfa, states: list[int]) -> dict[int, int]:
    """Coarsest partition of ``states`` (closed under delta) compatible with finality."""
    k = len(dfa.alphabet)
    delta = dfa.delta
    inverse = [dict() for _ in range(k)]
    for p in states:
        for a in range(k):
            inverse[a].setdefault(delta[p][a], []).append(p)

    finals = [q for q in states if q in dfa.finals]
    others = [q for q in states if q not in dfa.finals]
    blocks: list[set[int]] = [set(b) for b in (finals, others) if b]
    block_of = {}
    for i, b in enumerate(blocks):
        for q in b:
            block_of[q] = i

    pending = set()
    if len(blocks) == 2:
        smaller = 0 if len(blocks[0]) <= len(blocks[1]) else 1
        pending = {(smaller, a) for a in range(k)}
    work = sorted(pending)

    while work:
        splitter, a = work.pop()
        if (splitter, a) not in pending:
            continue
        pending.discard((splitter, a))
        preimage = set()
        inv = inverse[a]
        for q in blocks[splitter]:
            preimage.update(inv.get(q, ()))
        touched: dict[int, set[int]] = {}
        for p in preimage:
            touched.setdefault(block_of[p], set()).add(p)
        for y, inside in touched.items():
            if len(inside) == len(blocks[y]):
                continue
            blocks[y] -= inside
            new = len(blocks)
            blocks.append(inside)
            for p in inside:
                block_of[p] = new
            for c in range(k):
                if (y, c) in pending:
                    add = (new, c)
                else:
                    add = (new, c) if len(inside) <= len(blocks[y]) else (y, c)
                if add not in pending:
                    pending.add(add)
                    work.append(add)
    return block_of


def minimize(dfa: Dfa) -> MinimizationResult:
    """Reduced automaton of L(dfa), states numbered in BFS order from the start."""
    states = bfs_order(dfa, dfa.start)
    block_of = _hopcroft(dfa, states)

    # BFS over the quotient fixes the canonical numbering
    rep = {}
    for q in states:
        rep.setdefault(block_of[q], q)
    order = [block_of[dfa.start]]
    number = {order[0]: 0}
    i = 0
    while i < len(order):
        q = rep[order[i]]
        for target in dfa.delta[q]:
            b = block_of[target]
            if b not in number:
                number[b] = len(order)
                order.append(b)
        i += 1

    delta = [[number[block_of[t]] for t in dfa.delta[rep[b]]] for b in order]
    finals = [number[b] for b in order if rep[b] in dfa.finals]
    reduced = Dfa(len(order), dfa.alphabet, delta, 0, finals)
    return MinimizationResult(reduced, {q: number[block_of[q]] for q in states})


def separating_word(dfa: Dfa, p: int, q: int) -> Optional[Word]:
    """Shortest, then lexicographically least, word separating ``p`` and ``q``.

    None when the two states are equivalent.
    """
    finals = dfa.finals
    if (p in finals) != (q in finals):
        return EPSILON
    if p == q:
        return None
    delta = dfa.delta
    parent = {(p, q): None}
    frontier = [(p, q)]
    while frontier:
        nxt = []
        for pair in frontier:
            u, v = pair
            for a, (ua, va) in enumerate(zip(delta[u], delta[v])):
                child = (ua, va)
                if child in parent or ua == va:
                    continue
                parent[child] = (pair, a)
                if (ua in finals) != (va in finals):
                    letters = []
                    node = child
                    while parent[node] is not None:
                        node, letter = parent[node]
                        letters.append(letter)
                    return tuple(reversed(letters))
                nxt.append(child)
        frontier = nxt
    return None


def is_reduced(dfa: Dfa) -> bool:
    if len(reachable_set(dfa, dfa.start)) != dfa.state_count:
        return False
    return minimize(dfa).reduced.state_count == dfa.state_count
