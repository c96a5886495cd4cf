"""Transition semigroups, fixed-point structure, idempotent factors and syntactic complexity search."""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from itertools import permutations, product
from typing import Optional, Sequence

from .automaton import Dfa, Transformation, Word, compose, identity, letter_transformations
from .errors import ConsistencyError, DimensionError, NotDefiniteError, PreconditionError, ResourceLimitError

DEFAULT_LIMIT = 10**6
INT64_MAX = 2**63 - 1


@dataclass(frozen=True)
class TransitionSemigroup:
    elements: tuple[Transformation, ...]
    shortest_word: tuple[Word, ...]
    generator_count: int

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


@dataclass(frozen=True)
class FixedPointPartition:
    parts: dict[int, tuple[Transformation, ...]]

    def sizes(self) -> dict[int, int]:
        return {p: len(ts) for p, ts in self.parts.items()}


def enumerate_semigroup(dfa: Dfa, limit: int = DEFAULT_LIMIT) -> TransitionSemigroup:
    """BFS closure of the letter maps under right multiplication by letters.

    Elements are discovered in order of their shortest, then lex-least, word.
    Raises ResourceLimitError as soon as more than ``limit`` elements are found.
    """
    if limit < 1:
        raise PreconditionError("limit must be positive")
    gens = letter_transformations(dfa)
    seen: dict[Transformation, int] = {}
    elements: list[Transformation] = []
    words: list[Word] = []

    def add(t, w):
        seen[t] = len(elements)
        elements.append(t)
        words.append(w)
        if len(elements) > limit:
            raise ResourceLimitError(f"transition semigroup has more than {limit} elements")

    layer = []
    for a, g in enumerate(gens):
        if g not in seen:
            add(g, (a,))
            layer.append(len(elements) - 1)
    while layer:
        nxt = []
        for i in layer:
            t = elements[i]
            for a, g in enumerate(gens):
                s = compose(t, g)
                if s not in seen:
                    add(s, words[i] + (a,))
                    nxt.append(len(elements) - 1)
        layer = nxt
    return TransitionSemigroup(tuple(elements), tuple(words), len(gens))


def power(t: Sequence[int], e: int) -> Transformation:
    """``t`` composed with itself ``e >= 1`` times."""
    result = None
    base = tuple(t)
    while e:
        if e & 1:
            result = base if result is None else compose(result, base)
        e >>= 1
        if e:
            base = compose(base, base)
    return identity(len(t)) if result is None else result


def is_non_permutational(t: Sequence[int]) -> bool:
    return len(set(power(t, len(t)))) == 1


def is_idempotent(t: Sequence[int]) -> bool:
    return compose(t, t) == tuple(t)


def fixed_points(t: Sequence[int]) -> set[int]:
    return {q for q, image in enumerate(t) if image == q}


def restrict(t: Sequence[int], subset: Sequence[int]) -> Transformation:
    """``t`` on a ``t``-closed ``subset``, relabelled by position in ``subset``."""
    pos = {q: i for i, q in enumerate(subset)}
    return tuple(pos[t[q]] for q in subset)


def fixed_point_partition(sg: TransitionSemigroup) -> FixedPointPartition:
    parts: dict[int, list[Transformation]] = {}
    for t in sg.elements:
        fix = fixed_points(t)
        if len(fix) != 1:
            if not fix and is_non_permutational(t):
                raise ConsistencyError(f"non-permutational {t} has no fixed point")
            raise NotDefiniteError(f"element {t} has {len(fix)} fixed points")
        parts.setdefault(fix.pop(), []).append(t)
    for p, ts in parts.items():
        members = set(ts)
        for s in ts:
            for t in ts:
                if compose(s, t) not in members:
                    raise ConsistencyError(f"elements fixing {p} are not closed under product")
    return FixedPointPartition({p: tuple(ts) for p, ts in sorted(parts.items())})


def acyclic_order_for(sg: TransitionSemigroup, p: int) -> list[int]:
    """Linear order of the states, increasing, in which every ``t`` fixing ``p`` moves
    each other state strictly upwards; ``p`` comes last."""
    part = fixed_point_partition(sg).parts.get(p)
    if not part:
        raise PreconditionError(f"no semigroup element has {p} as its fixed point")
    n = len(part[0])
    succ: dict[int, set[int]] = {q: set() for q in range(n) if q != p}
    indegree = dict.fromkeys(succ, 0)
    for t in part:
        for q in succ:
            r = t[q]
            if r == p or r in succ[q]:
                continue
            if r == q:
                raise ConsistencyError(f"{t} fixes both {p} and {q}")
            succ[q].add(r)
            indegree[r] += 1
    heap = [q for q, d in indegree.items() if d == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        q = heapq.heappop(heap)
        order.append(q)
        for r in sorted(succ[q]):
            indegree[r] -= 1
            if indegree[r] == 0:
                heapq.heappush(heap, r)
    if len(order) != n - 1:
        raise ConsistencyError(f"graph of elements fixing {p} has a cycle")
    return order + [p]


def find_idempotent_factor(seq: Sequence[Sequence[int]]) -> Optional[tuple[int, int]]:
    """Least ``(j, k)``, 1-based, with the product ``f_j ... f_k`` idempotent."""
    if not seq:
        raise PreconditionError("sequence must be nonempty")
    n = len(seq[0])
    if any(len(f) != n for f in seq):
        raise DimensionError("transformations of different sizes")
    for j in range(len(seq)):
        prod = tuple(seq[j])
        for k in range(j, len(seq)):
            if k > j:
                prod = compose(prod, seq[k])
            if is_idempotent(prod):
                return j + 1, k + 1
    return None


def ramsey_triangle_bound(c: int) -> int:
    """Vertex count forcing a monochromatic triangle in any ``c``-colouring of a
    complete graph, by R(1) = 3 and R(c) = c (R(c-1) - 1) + 2."""
    if c < 1:
        raise PreconditionError("need at least one colour")
    r = 3
    for i in range(2, c + 1):
        r = i * (r - 1) + 2
        if r > INT64_MAX:
            raise ResourceLimitError(f"triangle Ramsey bound for {c} colours exceeds 64 bits")
    return r


def m_bound(set_size: int) -> int:
    """Product length guaranteeing an idempotent factor among maps of a ``set_size`` set."""
    if set_size < 1:
        raise PreconditionError("set size must be positive")
    colours = set_size**set_size
    if colours > INT64_MAX:
        raise ResourceLimitError(f"{set_size}^{set_size} exceeds 64 bits")
    return ramsey_triangle_bound(colours)


def definite_lower_bound(n: int) -> int:
    """floor(e * (n-1)!), the known lower bound on syntactic complexity of definite languages."""
    # for m >= 1 the tail of e*m! = sum m!/i! beyond i = m lies in (0, 1)
    m = n - 1
    if m == 0:
        return 2
    return sum(math.factorial(m) // math.factorial(i) for i in range(m + 1))


SEARCH_MAX_STATES = 4


def search_max_syntactic_complexity(n: int, limit: int = DEFAULT_LIMIT) -> tuple[int, Dfa]:
    """Largest transition semigroup of a reduced ``n``-state automaton recognizing a
    definite language, over all alphabets.

    A semigroup qualifies when all its elements are non-permutational and some
    start state and final set make the automaton reduced.  Reducibility survives
    adding elements, so only maximal non-permutational subsemigroups of the full
    transformation monoid need to be examined.  The search
    walks closed sets up to relabelling of states.
    """
    if n < 1:
        raise PreconditionError("n must be positive")
    if n > SEARCH_MAX_STATES:
        raise ResourceLimitError(f"exhaustive search is capped at {SEARCH_MAX_STATES} states")

    maps = list(product(range(n), repeat=n))
    code = {t: i for i, t in enumerate(maps)}
    table = [[code[compose(f, g)] for g in maps] for f in maps]
    nonperm = [is_non_permutational(t) for t in maps]
    candidates = [i for i in range(len(maps)) if nonperm[i]]
    conj = []
    for perm in permutations(range(n)):
        # relabel state q as perm[q]
        conj.append([code[tuple(perm[t[perm.index(j)]] for j in range(n))] for t in maps])

    def canonical(elements):
        return min(sum(1 << c[e] for e in elements) for c in conj)

    def close(elements, extra):
        """Closure of ``elements | {extra}``; None once a permutational map appears."""
        if not nonperm[extra]:
            return None
        result = set(elements)
        result.add(extra)
        work = [extra]
        while work:
            x = work.pop()
            for y in list(result):
                for z in (table[x][y], table[y][x]):
                    if z not in result:
                        if not nonperm[z]:
                            return None
                        result.add(z)
                        work.append(z)
                        if len(result) > limit:
                            raise ResourceLimitError(f"semigroup exceeds {limit} elements")
        return frozenset(result)

    seen = set()
    best: tuple[int, frozenset, tuple] = (0, frozenset(), ())
    stack = [(frozenset(), (), frozenset())]
    while stack:
        elements, gens, forbidden = stack.pop()
        key = canonical(elements)
        if key in seen:
            continue
        seen.add(key)
        children = []
        blocked = set(forbidden)
        for g in candidates:
            if g in elements or g in blocked:
                continue
            closed = close(elements, g)
            if closed is None:
                blocked.add(g)
            else:
                children.append((closed, gens + (g,)))
        if not children and elements:
            if len(elements) > best[0] and _reducible([maps[e] for e in elements], n) is not None:
                best = (len(elements), elements, gens)
        frozen_block = frozenset(blocked)
        for closed, child_gens in children:
            stack.append((closed, child_gens, frozen_block))

    size, elements, gens = best
    start, finals = _reducible([maps[e] for e in elements], n)
    letters = sorted(maps[g] for g in gens)
    names = [",".join(map(str, t)) for t in letters]
    delta = [[t[q] for t in letters] for q in range(n)]
    return size, Dfa(n, names, delta, start, finals)


def _reducible(elements, n):
    """Some ``(start, finals)`` making the automaton with these transitions reduced."""
    for start in range(n):
        reached = {start} | {t[start] for t in elements}
        if len(reached) != n:
            continue
        for mask in range(1 << n):
            finals = {q for q in range(n) if mask >> q & 1}
            if _separates_all(elements, finals, n):
                return start, finals
    return None


def _separates_all(elements, finals, n):
    for p in range(n):
        for q in range(p + 1, n):
            if (p in finals) != (q in finals):
                continue
            if not any((t[p] in finals) != (t[q] in finals) for t in elements):
                return False
    return True
