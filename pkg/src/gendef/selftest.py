"""Agreement checks between the pattern deciders and the independent oracles,
run over every small DFA (and a seeded sample at four states)."""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .automaton import Dfa, complement
from .components import component_graph
from .constructions import definitize
from .errors import ConsistencyError, PreconditionError, ReverseDefiniteCaseError
from .minimize import is_reduced, minimize
from .oracle import definiteness_index, enumerate_dfas, is_finite_language, letter_names
from .patterns import (
    _pair_cycles,
    admits_pd,
    admits_pf,
    admits_pg,
    admits_pr,
    check_condition_ii,
    non_k_gd_counterexample,
    validate_witness,
)
from .semigroup import enumerate_semigroup, fixed_point_partition, fixed_points, is_non_permutational, restrict
from .fileformat import serialize_dfa

MAX_K = 32
SAMPLE_AT_FOUR = 1000

PROPERTIES = (
    "generalized definite: Pg avoided <=> sink structure <=> index found",
    "definite: Pd avoided <=> all non-permutational <=> one sink rest trivial <=> index found",
    "finite/cofinite: Pf avoided <=> finite or cofinite",
    "reverse definite: Pr avoided <=> index found",
    "class lattice and witness validity",
    "Pg counterexample words, k = 1..4",
    "fixed points and |T_p| <= (n-1)!, |T| <= n!",
    "definitize: reduced, avoids Pd, semigroup not smaller",
)


class PropertyFailure(Exception):
    def __init__(self, prop: str, dfa: Dfa, detail: str):
        super().__init__(f"{prop}: {detail}")
        self.prop = prop
        self.dfa = dfa
        self.detail = detail


@dataclass
class Tally:
    checked: dict[str, int] = field(default_factory=lambda: dict.fromkeys(PROPERTIES, 0))
    applicable: dict[str, int] = field(default_factory=lambda: dict.fromkeys(PROPERTIES, 0))


def instances(max_states: int, seed: int = 0) -> Iterable[Dfa]:
    for n in range(1, min(max_states, 3) + 1):
        for k in (1, 2):
            yield from enumerate_dfas(n, k)
    if max_states >= 4:
        rng = random.Random(seed)
        for _ in range(SAMPLE_AT_FOUR):
            yield random_dfa(rng, 4, 2)


def random_dfa(rng: random.Random, n: int, alphabet_size: int) -> Dfa:
    delta = [[rng.randrange(n) for _ in range(alphabet_size)] for _ in range(n)]
    finals = [q for q in range(n) if rng.random() < 0.5]
    return Dfa(n, letter_names(alphabet_size), delta, 0, finals)


def _factorial(n):
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def check_instance(dfa: Dfa, tally: Tally, cache: dict) -> None:
    """Raise PropertyFailure on the first violated property."""
    gd = definiteness_index(dfa, "generalized_definite", MAX_K).minimal_k is not None
    d = definiteness_index(dfa, "definite", MAX_K).minimal_k is not None
    rd = definiteness_index(dfa, "reverse_definite", MAX_K).minimal_k is not None
    finite_or_cofinite = is_finite_language(dfa) or is_finite_language(complement(dfa))

    reduced = minimize(dfa).reduced
    key = serialize_dfa(reduced)
    if key not in cache:
        cache[key] = _reduced_facts(reduced, tally)
    facts = cache[key]

    def need(prop, ok, detail):
        tally.checked[prop] += 1
        if not ok:
            raise PropertyFailure(prop, dfa, detail)

    p = PROPERTIES
    need(p[0], (facts["pg"] is None) == facts["cond_ii"] == gd,
         f"Pg avoided={facts['pg'] is None}, sink structure={facts['cond_ii']}, index found={gd}")
    need(p[1], (facts["pd"] is None) == facts["all_nonperm"] == facts["one_sink"] == d,
         f"Pd avoided={facts['pd'] is None}, non-permutational={facts['all_nonperm']}, "
         f"sink condition={facts['one_sink']}, index found={d}")
    need(p[2], (facts["pf"] is None) == finite_or_cofinite,
         f"Pf avoided={facts['pf'] is None}, finite or cofinite={finite_or_cofinite}")
    need(p[3], (facts["pr"] is None) == rd, f"Pr avoided={facts['pr'] is None}, index found={rd}")
    for prop in p[4:]:
        if facts[prop] is not None:
            need(prop, False, facts[prop])
        tally.checked[prop] += 1


def _reduced_facts(reduced: Dfa, tally: Tally) -> dict:
    cg = component_graph(reduced)
    pairs = _pair_cycles(reduced, cg)
    pf, pd = admits_pf(reduced, cg), admits_pd(reduced, cg, pairs)
    pr, pg = admits_pr(reduced, cg), admits_pg(reduced, cg, pairs)
    sg = enumerate_semigroup(reduced)
    sink_ids = [c for c in range(cg.component_count) if cg.is_sink[c]]
    others_trivial = all(cg.is_trivial[c] for c in range(cg.component_count) if not cg.is_sink[c])
    one_sink = (
        len(sink_ids) == 1
        and others_trivial
        and all(is_non_permutational(restrict(t, cg.members[sink_ids[0]])) for t in sg)
    )
    facts = {
        "pf": pf, "pd": pd, "pr": pr, "pg": pg,
        "cond_ii": check_condition_ii(reduced),
        "all_nonperm": all(is_non_permutational(t) for t in sg),
        "one_sink": one_sink,
    }
    p = PROPERTIES
    n = reduced.state_count

    problem = None
    witnesses = {"Pf": pf, "Pd": pd, "Pr": pr, "Pg": pg}
    for pid, w in witnesses.items():
        if w is not None and not validate_witness(reduced, w):
            problem = f"{pid} witness {w} does not validate"
    if pf is None and (pd is not None or pr is not None):
        problem = "Pf avoided but Pd or Pr admitted"
    if pd is None and pg is not None:
        problem = "Pd avoided but Pg admitted"
    facts[p[4]] = problem
    tally.applicable[p[4]] += 1

    problem = None
    if pg is not None:
        tally.applicable[p[5]] += 1
        for k in range(1, 5):
            w1, w2 = non_k_gd_counterexample(reduced, pg, k)
            if w1[:k] != w2[:k] or w1[-k:] != w2[-k:] or reduced.accepts(w1) == reduced.accepts(w2):
                problem = f"counterexample words fail at k={k}"
    facts[p[5]] = problem

    problem = None
    if pd is None:
        tally.applicable[p[6]] += 1
        if any(len(fixed_points(t)) != 1 for t in sg):
            problem = "an element does not have exactly one fixed point"
        else:
            sizes = fixed_point_partition(sg).sizes()
            if max(sizes.values()) > _factorial(n - 1) or len(sg) > _factorial(n):
                problem = f"|T_p| sizes {sizes}, |T| = {len(sg)} exceed the bounds"
    facts[p[6]] = problem

    problem = None
    if pg is None:
        b = None
        try:
            b = definitize(reduced)
        except ReverseDefiniteCaseError:
            pass
        except (ConsistencyError, PreconditionError) as exc:
            tally.applicable[p[7]] += 1
            problem = str(exc)
        if b is not None:
            tally.applicable[p[7]] += 1
            if not is_reduced(b) or admits_pd(b) is not None or len(enumerate_semigroup(b)) < len(sg):
                problem = "definitize postcondition violated"
    facts[p[7]] = problem
    return facts


def run_selftest(max_states: int, out: Callable[[str], None] = print) -> int:
    """Exit status 0 when every property holds, 1 with a counterexample otherwise."""
    tally = Tally()
    cache: dict = {}
    sizes: Counter = Counter()
    try:
        for dfa in instances(max_states):
            check_instance(dfa, tally, cache)
            sizes[dfa.state_count, len(dfa.alphabet)] += 1
    except PropertyFailure as failure:
        out(f"FAIL {failure.prop}")
        out(f"  {failure.detail}")
        out("counterexample:")
        out(serialize_dfa(failure.dfa).rstrip("\n"))
        return 1
    for (n, k), count in sorted(sizes.items()):
        how = "sampled" if n == 4 else "all"
        out(f"instances n={n} |alphabet|={k}: {count} ({how})")
    out(f"instances: {sum(sizes.values())} automata, {len(cache)} distinct reduced automata")
    for prop in PROPERTIES:
        line = f"ok  {prop}: checked {tally.checked[prop]}"
        if prop in PROPERTIES[4:]:
            line += f" (applicable to {tally.applicable[prop]} reduced automata)"
        out(line)
    return 0


def first_failure(dfas: Iterable[Dfa]) -> Optional[PropertyFailure]:
    tally, cache = Tally(), {}
    try:
        for dfa in dfas:
            check_instance(dfa, tally, cache)
    except PropertyFailure as failure:
        return failure
    return None
