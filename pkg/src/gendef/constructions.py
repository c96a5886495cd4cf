"""DAG reachability reduction and the definite automaton built from a generalized definite one."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod

from .automaton import Dfa
from .components import component_graph
from .errors import ConsistencyError, InputError, PreconditionError, ResourceLimitError, ReverseDefiniteCaseError
from .minimize import is_reduced
from .patterns import admits_pd, admits_pg
from .semigroup import DEFAULT_LIMIT, enumerate_semigroup


@dataclass(frozen=True)
class Dag:
    """Vertices ``1..vertex_count``; every edge ``(i, j)`` has ``i < j``."""

    vertex_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset((int(i), int(j)) for i, j in self.edges))
        if self.vertex_count < 1:
            raise InputError("a DAG needs at least one vertex")
        for i, j in self.edges:
            if not 1 <= i < j <= self.vertex_count:
                raise InputError(f"edge ({i}, {j}) violates 1 <= i < j <= {self.vertex_count}")

    def neighbours(self, i: int) -> list[int]:
        return sorted(j for (s, j) in self.edges if s == i)


def dag_reachable(g: Dag, source: int = 1, target: int | None = None) -> bool:
    target = g.vertex_count if target is None else target
    adjacency: dict[int, list[int]] = {}
    for i, j in g.edges:
        adjacency.setdefault(i, []).append(j)
    seen = {source}
    stack = [source]
    while stack:
        v = stack.pop()
        for w in adjacency.get(v, ()):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return target in seen


def reduce_dag_reach(g: Dag) -> Dfa:
    """Automaton on states ``1..n+1`` over letters ``1..n`` (stored shifted to 0-based
    ids, letter names are the 1-based numbers) that admits Pg iff ``n`` is
    reachable from ``1``.

    ``delta(i, j)`` is ``n+1`` when ``i = n+1``, ``j = n`` or (``i < n`` and
    ``j`` exceeds the outdegree of ``i``); ``1`` when ``i = n`` and ``j < n``;
    otherwise the ``j``-th neighbour of ``i``.
    """
    n = g.vertex_count
    if n < 2:
        raise PreconditionError("the reduction needs at least two vertices")
    nbrs = {i: g.neighbours(i) for i in range(1, n + 1)}
    delta = []
    for i in range(1, n + 2):
        row = []
        for j in range(1, n + 1):
            if i == n + 1 or j == n or (i < n and len(nbrs[i]) < j):
                target = n + 1
            elif i == n and j < n:
                target = 1
            else:
                target = nbrs[i][j - 1]
            row.append(target - 1)
        delta.append(row)
    return Dfa(n + 1, [str(j) for j in range(1, n + 1)], delta, 0, [n])


@dataclass(frozen=True)
class SinkPartition:
    # states of trivial components, each letter maps a state to a later one or into a sink
    q0_states: tuple[int, ...]
    # sink state sets ordered by size, ties by smallest member
    sinks: tuple[tuple[int, ...], ...]

    def order(self) -> list[int]:
        return list(self.q0_states) + [q for s in self.sinks for q in s]


def sink_partition(dfa: Dfa) -> SinkPartition:
    cg = component_graph(dfa)
    if admits_pg(dfa, cg) is not None:
        raise PreconditionError("automaton admits Pg; it is not generalized definite")
    q0 = tuple(cg.members[c][0] for c in range(cg.component_count) if cg.is_trivial[c])
    sinks = sorted(
        (cg.members[c] for c in range(cg.component_count) if cg.is_sink[c]),
        key=lambda s: (len(s), s[0]),
    )
    return SinkPartition(q0, tuple(sinks))


def definitize(dfa: Dfa, limit: int = DEFAULT_LIMIT) -> Dfa:
    """Reduced automaton on the same states recognizing a definite language whose
    transition semigroup is at least as large as that of ``dfa``.

    One letter per source-tupled map ``[f0, f1, ..., fc]``: ``f0`` sends each
    trivial-component state to any later state in the canonical order, each
    smaller sink is mapped arbitrarily into the largest sink ``Qc``, and ``fc``
    is the restriction to ``Qc`` of some element of the transition semigroup.
    Letters are named by their image lists and sorted by name.
    """
    if not is_reduced(dfa):
        raise PreconditionError("definitize needs a reduced automaton")
    part = sink_partition(dfa)
    largest = part.sinks[-1]
    if len(largest) == 1:
        raise ReverseDefiniteCaseError("all sinks are singletons (reverse definite case)")
    order = part.order()
    position = {q: i for i, q in enumerate(order)}
    n = dfa.state_count
    smaller = [q for s in part.sinks[:-1] for q in s]

    sg = enumerate_semigroup(dfa, limit)
    on_largest = sorted({tuple(t[q] for q in largest) for t in sg})

    size = prod(n - 1 - position[q] for q in part.q0_states)
    size *= len(largest) ** len(smaller) * len(on_largest)
    if size > limit:
        raise ResourceLimitError(f"constructed alphabet would have {size} letters (limit {limit})")

    elevating = [order[position[q] + 1:] for q in part.q0_states]
    letters = []
    for f0 in product(*elevating):
        for fi in product(largest, repeat=len(smaller)):
            for fc in on_largest:
                image = [0] * n
                for q, r in zip(part.q0_states, f0):
                    image[q] = r
                for q, r in zip(smaller, fi):
                    image[q] = r
                for q, r in zip(largest, fc):
                    image[q] = r
                letters.append(tuple(image))
    named = sorted((",".join(map(str, t)), t) for t in letters)
    names = [name for name, _ in named]
    delta = [[t[q] for _, t in named] for q in range(n)]
    result = Dfa(n, names, delta, dfa.start, dfa.finals)

    if not is_reduced(result):
        raise ConsistencyError("constructed automaton is not reduced")
    if admits_pd(result) is not None:
        raise ConsistencyError("constructed automaton admits Pd")
    if len(enumerate_semigroup(result, limit)) < len(sg):
        raise ConsistencyError("constructed automaton has a smaller transition semigroup")
    return result
