"""Acceptance criteria, one test each.  Every test prints a single PASS/FAIL line;
pytest repeats them in its summary.

Run ``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import math
import random
import sys
import time
from functools import lru_cache
from itertools import product

import numpy as np

from gendef import (
    Dag,
    Dfa,
    admits_pd,
    admits_pf,
    admits_pg,
    admits_pr,
    check_condition_ii,
    classify,
    component_graph,
    dag_reachable,
    definiteness_index,
    definitize,
    enumerate_dfas,
    enumerate_semigroup,
    find_idempotent_factor,
    fixed_point_partition,
    is_finite_language,
    is_non_permutational,
    is_reduced,
    m_bound,
    minimize,
    non_k_gd_counterexample,
    reduce_dag_reach,
    search_max_syntactic_complexity,
    sink_partition,
)
from gendef.automaton import complement
from gendef.oracle import letter_names
from gendef.semigroup import fixed_points, restrict

K_MAX = 32
SAMPLE_AT_FOUR = 1000


# lines are also echoed in the pytest terminal summary (see conftest)
RESULTS: list[str] = []


def report(number: int, ok: bool, detail: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {detail}"
    RESULTS.append(line)
    print(line, flush=True)


def exhaustive():
    """Every complete DFA with at most three states over one or two letters."""
    for n in (1, 2, 3):
        for k in (1, 2):
            yield from enumerate_dfas(n, k)


def sampled_four(seed: int = 2024):
    rng = random.Random(seed)
    for _ in range(SAMPLE_AT_FOUR):
        delta = [[rng.randrange(4) for _ in range(2)] for _ in range(4)]
        yield Dfa(4, letter_names(2), delta, 0, [q for q in range(4) if rng.random() < 0.5])


@lru_cache(maxsize=None)
def reduced_facts(reduced: Dfa) -> dict:
    cg = component_graph(reduced)
    sg = enumerate_semigroup(reduced)
    sink_ids = [c for c in range(cg.component_count) if cg.is_sink[c]]
    return {
        "pf": admits_pf(reduced),
        "pd": admits_pd(reduced),
        "pr": admits_pr(reduced),
        "pg": admits_pg(reduced),
        "cond_ii": check_condition_ii(reduced),
        "all_nonperm": all(is_non_permutational(t) for t in sg),
        "sink_condition": len(sink_ids) == 1
        and all(cg.is_trivial[c] for c in range(cg.component_count) if not cg.is_sink[c])
        and all(is_non_permutational(restrict(t, cg.members[sink_ids[0]])) for t in sg),
        "semigroup": sg,
    }


def oracle_verdicts(dfa: Dfa) -> dict:
    return {
        kind: definiteness_index(dfa, kind, K_MAX).minimal_k is not None
        for kind in ("definite", "reverse_definite", "generalized_definite")
    }


def test_criterion_1_generalized_definite_equivalence():
    t0 = time.perf_counter()
    bad, total, n3 = [], 0, 0
    for dfa in exhaustive():
        facts = reduced_facts(minimize(dfa).reduced)
        gd = oracle_verdicts(dfa)["generalized_definite"]
        if not ((facts["pg"] is None) == facts["cond_ii"] == gd):
            bad.append(dfa)
        total += 1
        n3 += dfa.state_count == 3 and len(dfa.alphabet) == 2
    elapsed = time.perf_counter() - t0
    ok = not bad and n3 == 5832 and elapsed < 300
    report(1, ok, f"{total} automata ({n3} with n=3, |alphabet|=2), {len(bad)} disagreements, {elapsed:.1f}s (< 300s)")
    assert ok, bad[:3]


def test_criterion_2_definite_characterization():
    bad, total = [], 0
    for dfa in exhaustive():
        facts = reduced_facts(minimize(dfa).reduced)
        d = oracle_verdicts(dfa)["definite"]
        if not ((facts["pd"] is None) == facts["all_nonperm"] == facts["sink_condition"] == d):
            bad.append(dfa)
        total += 1
    report(2, not bad, f"{total} automata, four-way definite equivalence, {len(bad)} disagreements")
    assert not bad, bad[:3]


def test_criterion_3_pf_and_pr():
    bad_f, bad_r, total = [], [], 0
    for dfa in exhaustive():
        facts = reduced_facts(minimize(dfa).reduced)
        fin = is_finite_language(dfa) or is_finite_language(complement(dfa))
        if (facts["pf"] is None) != fin:
            bad_f.append(dfa)
        if (facts["pr"] is None) != oracle_verdicts(dfa)["reverse_definite"]:
            bad_r.append(dfa)
        total += 1
    ok = not bad_f and not bad_r
    report(3, ok, f"{total} automata, Pf disagreements {len(bad_f)}, Pr disagreements {len(bad_r)}")
    assert ok, (bad_f[:3], bad_r[:3])


def test_criterion_4_dag_reduction():
    t0 = time.perf_counter()
    rng = random.Random(4)
    bad, reachable_count, total = 0, 0, 0
    for n in (4, 8, 12):
        for _ in range(100):
            p = rng.choice([0.1, 0.2, 0.3, 0.5])
            g = Dag(n, {(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if rng.random() < p})
            reachable = dag_reachable(g)
            dfa = reduce_dag_reach(g)
            unminimized = admits_pg(dfa) is not None
            minimal = admits_pg(minimize(dfa).reduced) is not None
            gd = classify(dfa).is_generalized_definite
            if not (reachable == (not gd) == unminimized == minimal):
                bad += 1
            reachable_count += reachable
            total += 1
    elapsed = time.perf_counter() - t0
    ok = bad == 0 and elapsed < 10
    report(4, ok, f"{total} DAGs ({reachable_count} reachable), {bad} disagreements, {elapsed:.2f}s (< 10s)")
    assert ok


def test_criterion_5_definitize():
    seen, built, violations = set(), 0, []
    for dfa in exhaustive():
        a = minimize(dfa).reduced
        if a in seen:
            continue
        seen.add(a)
        if admits_pg(a) is not None or len(sink_partition(a).sinks[-1]) == 1:
            continue
        try:
            b = definitize(a)
        except Exception as exc:  # any failure here is a violation
            violations.append((a, repr(exc)))
            continue
        built += 1
        if not is_reduced(b) or admits_pd(b) is not None or len(enumerate_semigroup(b)) < len(enumerate_semigroup(a)):
            violations.append((a, "postcondition"))
    ok = not violations and built > 0
    report(5, ok, f"{built} generalized definite reduced automata with a non-singleton largest sink, {len(violations)} violations")
    assert ok, violations[:3]


def test_criterion_6_fixed_points_and_bounds():
    violations, checked, largest = [], 0, {}
    seen = set()
    for dfa in list(exhaustive()) + list(sampled_four()):
        a = minimize(dfa).reduced
        if a in seen:
            continue
        seen.add(a)
        facts = reduced_facts(a)
        if facts["pd"] is not None:
            continue
        sg = facts["semigroup"]
        n = a.state_count
        checked += 1
        largest[n] = max(largest.get(n, 0), len(sg))
        if any(len(fixed_points(t)) != 1 for t in sg):
            violations.append((a, "fixed points"))
            continue
        sizes = fixed_point_partition(sg).sizes()
        if max(sizes.values()) > math.factorial(n - 1) or len(sg) > math.factorial(n):
            violations.append((a, sizes))
    size, _ = search_max_syntactic_complexity(3)
    ok = not violations and 5 <= size <= 6
    report(6, ok, f"{checked} definite reduced automata (n <= 3 all, n = 4 sampled), {len(violations)} violations, "
                  f"largest |T| by n {dict(sorted(largest.items()))}, search(3) = {size} in [5, 6]")
    assert ok, violations[:3]


def test_criterion_7_idempotent_factor():
    maps = list(product(range(2), repeat=2))
    rng = random.Random(7)
    length = m_bound(2)
    failures = sum(
        find_idempotent_factor([rng.choice(maps) for _ in range(length)]) is None for _ in range(10_000)
    )
    constants = {(0, 0), (1, 1)}
    guaranteed = [
        s for s in product(maps, repeat=4)
        if any(t in constants for t in s) or any(s[i] == s[i + 1] for i in range(3))
    ]
    short_failures = sum(find_idempotent_factor(list(s)) is None for s in guaranteed)
    ok = length == 66 and failures == 0 and short_failures == 0
    report(7, ok, f"10000 random sequences of length {length}: {failures} failures; "
                  f"{len(guaranteed)} length-4 sequences with a constant or square: {short_failures} failures")
    assert ok


def _time_classify(dfa: Dfa, repeats: int) -> float:
    best = math.inf
    for _ in range(repeats):
        t0 = time.perf_counter()
        classify(dfa)
        best = min(best, time.perf_counter() - t0)
    return best


def test_criterion_8_quadratic_time():
    sizes = [2**e for e in range(6, 13)]
    times = []
    for n in sizes:
        rng = random.Random(n)
        delta = [[rng.randrange(n) for _ in range(2)] for _ in range(n)]
        dfa = Dfa(n, letter_names(2), delta, 0, [q for q in range(n) if rng.random() < 0.5])
        times.append(_time_classify(dfa, 3 if n <= 1024 else 1))
    slope = float(np.polyfit(np.log(sizes), np.log(times), 1)[0])
    ok = slope <= 2.3 and times[-1] < 60
    pairs = ", ".join(f"{n}:{t:.3f}s" for n, t in zip(sizes, times))
    report(8, ok, f"log-log slope {slope:.2f} (<= 2.3), n=4096 in {times[-1]:.1f}s (< 60s) [{pairs}]")
    assert ok


def test_criterion_9_counterexample_words():
    failures, witnesses = 0, 0
    seen = set()
    for dfa in exhaustive():
        a = minimize(dfa).reduced
        if a in seen:
            continue
        seen.add(a)
        w = reduced_facts(a)["pg"]
        if w is None:
            continue
        witnesses += 1
        for k in (1, 2, 3, 4):
            u, v = non_k_gd_counterexample(a, w, k)
            if u[:k] != v[:k] or u[-k:] != v[-k:] or dfa.accepts(u) == dfa.accepts(v):
                failures += 1
    report(9, failures == 0, f"{witnesses} Pg witnesses x k = 1..4, {failures} failures")
    assert failures == 0


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
