"""Strongly connected components of an automaton and its component graph.

Component ids follow a topological order of the quotient DAG: every edge goes
from a lower id to a higher one, or stays inside its component.
"""

from __future__ import annotations

from dataclasses import dataclass

from .automaton import Dfa


@dataclass(frozen=True)
class ComponentGraph:
    component_count: int
    class_of: tuple[int, ...]
    members: tuple[tuple[int, ...], ...]
    edges: frozenset[tuple[int, int, int]]
    is_trivial: tuple[bool, ...]
    is_sink: tuple[bool, ...]

    def nontrivial_states(self) -> list[int]:
        return [q for q, c in enumerate(self.class_of) if not self.is_trivial[c]]


def strongly_connected(n: int, successors) -> list[list[int]]:
    """Tarjan's algorithm without recursion; SCCs come out in reverse topological order."""
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    result: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        call = [(root, iter(successors(root)))]
        while call:
            v, it = call[-1]
            advanced = False
            for w in it:
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    call.append((w, iter(successors(w))))
                    advanced = True
                    break
                if on_stack[w] and index[w] < low[v]:
                    low[v] = index[w]
            if advanced:
                continue
            call.pop()
            if call:
                parent = call[-1][0]
                if low[v] < low[parent]:
                    low[parent] = low[v]
            if low[v] == index[v]:
                scc = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    scc.append(w)
                    if w == v:
                        break
                result.append(sorted(scc))
    return result


def component_graph(dfa: Dfa) -> ComponentGraph:
    delta = dfa.delta
    sccs = strongly_connected(dfa.state_count, lambda q: delta[q])
    sccs.reverse()
    class_of = [0] * dfa.state_count
    for cid, scc in enumerate(sccs):
        for q in scc:
            class_of[q] = cid

    edges = set()
    trivial = []
    sink = []
    for cid, scc in enumerate(sccs):
        closed = True
        for q in scc:
            for a, r in enumerate(delta[q]):
                edges.add((cid, a, class_of[r]))
                if class_of[r] != cid:
                    closed = False
        sink.append(closed)
        trivial.append(len(scc) == 1 and all(r != scc[0] for r in delta[scc[0]]))
    return ComponentGraph(
        len(sccs),
        tuple(class_of),
        tuple(tuple(s) for s in sccs),
        frozenset(edges),
        tuple(trivial),
        tuple(sink),
    )


def sinks(cg: ComponentGraph) -> list[int]:
    return [c for c in range(cg.component_count) if cg.is_sink[c]]


def same_component(cg: ComponentGraph, p: int, q: int) -> bool:
    return cg.class_of[p] == cg.class_of[q]


def to_dot(cg: ComponentGraph, dfa: Dfa) -> str:
    """DOT text for the component graph; parallel edges are merged into one label."""
    lines = ["digraph components {", "  rankdir=LR;"]
    for c, members in enumerate(cg.members):
        flags = []
        if cg.is_trivial[c]:
            flags.append("trivial")
        if cg.is_sink[c]:
            flags.append("sink")
        label = "{" + ",".join(map(str, members)) + "}"
        if flags:
            label += "\\n" + " ".join(flags)
        lines.append(f'  c{c} [label="{label}"];')
    labels: dict[tuple[int, int], list[str]] = {}
    for src, a, dst in sorted(cg.edges):
        labels.setdefault((src, dst), []).append(dfa.alphabet[a])
    for (src, dst), names in sorted(labels.items()):
        text = ",".join(names).replace('"', '\\"')
        lines.append(f'  c{src} -> c{dst} [label="{text}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
