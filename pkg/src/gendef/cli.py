"""Command-line front end.

Exit codes: 0 success, 1 self-test or consistency failure, 2 input error,
3 resource limit, 4 precondition violation.  ``-`` reads standard input.
"""

from __future__ import annotations

import argparse
import csv
import json
import random
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from .components import component_graph, to_dot
from .constructions import dag_reachable, definitize, reduce_dag_reach
from .errors import ConsistencyError, InputError, NotDefiniteError, PreconditionError, ResourceLimitError
from .fileformat import parse_dag, parse_dfa, report_to_json, serialize_dfa
from .minimize import minimize
from .oracle import DEFAULT_MAX_K, KINDS, definiteness_index
from .patterns import classify
from .semigroup import DEFAULT_LIMIT, enumerate_semigroup, fixed_point_partition, fixed_points, is_non_permutational
from .selftest import random_dfa, run_selftest

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3
EXIT_PRECONDITION = 4


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except UnicodeDecodeError:
        raise InputError(f"{path} is not UTF-8 text") from None


def _write(text: str, out: Optional[str]) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _indices(dfa, max_k: int) -> dict:
    return {kind: definiteness_index(dfa, kind, max_k).minimal_k for kind in KINDS}


def cmd_classify(args) -> int:
    dfa = parse_dfa(_read(args.file))
    report = classify(dfa)
    indices = _indices(dfa, args.max_k) if args.max_k is not None else None
    if args.json:
        print(json.dumps(report_to_json(report, indices), indent=2))
        return EXIT_OK
    reduced = report.reduced
    print(f"reduced states: {report.reduced_states}")
    print(f"finite: {_yes(report.is_finite)}")
    print(f"cofinite: {_yes(report.is_cofinite)}")
    print(f"definite: {_yes(report.is_definite)}")
    print(f"reverse definite: {_yes(report.is_reverse_definite)}")
    print(f"generalized definite: {_yes(report.is_generalized_definite)}")
    for pid, w in report.witnesses.items():
        if w is None:
            print(f"{pid}: avoided")
            continue
        line = f"{pid}: p={w.p} q={w.q} x=\"{reduced.format_word(w.x)}\""
        if w.y is not None:
            line += f" y=\"{reduced.format_word(w.y)}\""
        print(line)
    if indices is not None:
        for kind, k in indices.items():
            print(f"index {kind}: {'absent' if k is None else k} (searched up to {args.max_k})")
    return EXIT_OK


def cmd_minimize(args) -> int:
    dfa = parse_dfa(_read(args.file))
    _write(serialize_dfa(minimize(dfa).reduced), args.output)
    return EXIT_OK


def cmd_components(args) -> int:
    dfa = parse_dfa(_read(args.file))
    cg = component_graph(dfa)
    if args.dot:
        _write(to_dot(cg, dfa), args.output)
        return EXIT_OK
    lines = []
    for c in range(cg.component_count):
        flags = [f for f, on in (("trivial", cg.is_trivial[c]), ("sink", cg.is_sink[c])) if on]
        members = " ".join(map(str, cg.members[c]))
        lines.append(f"component {c}: {{{members}}} {' '.join(flags)}".rstrip())
    _write("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def cmd_semigroup(args) -> int:
    reduced = minimize(parse_dfa(_read(args.file))).reduced
    sg = enumerate_semigroup(reduced, args.limit)
    print(f"|T| = {len(sg)}")
    for t, w in zip(sg.elements, sg.shortest_word):
        print(
            f"  {reduced.format_word(w)}: map {' '.join(map(str, t))}; "
            f"fixed points {len(fixed_points(t))}; non-permutational {_yes(is_non_permutational(t))}"
        )
    try:
        sizes = fixed_point_partition(sg).sizes()
    except NotDefiniteError:
        print("T_p: undefined (some element is permutational)")
    else:
        print("T_p sizes: " + ", ".join(f"p={p}: {s}" for p, s in sorted(sizes.items())))
    return EXIT_OK


def cmd_index(args) -> int:
    dfa = parse_dfa(_read(args.file))
    reports = [definiteness_index(dfa, kind, args.max_k) for kind in KINDS]
    if args.json:
        payload = {r.class_kind: {"minimal_k": r.minimal_k, "searched_up_to": r.searched_up_to} for r in reports}
        print(json.dumps(payload, indent=2))
        return EXIT_OK
    for r in reports:
        found = "absent" if r.minimal_k is None else f"k={r.minimal_k}"
        print(f"{r.class_kind}: {found} (searched up to {r.searched_up_to})")
    return EXIT_OK


def cmd_definitize(args) -> int:
    dfa = parse_dfa(_read(args.file))
    reduced = minimize(dfa).reduced
    _write(serialize_dfa(definitize(reduced, args.limit)), args.output)
    return EXIT_OK


def cmd_dagreach(args) -> int:
    g = parse_dag(_read(args.file))
    reachable = dag_reachable(g)
    gd = classify(reduce_dag_reach(g)).is_generalized_definite
    consistent = reachable != gd
    print(f"reachable: {_yes(reachable)}; generalized definite: {_yes(gd)}; "
          f"{'consistent' if consistent else 'INCONSISTENT'}")
    return EXIT_OK if consistent else EXIT_FAILURE


def cmd_gen(args) -> int:
    if args.states < 1 or args.alphabet_size < 1 or args.count < 0:
        raise InputError("--states and --alphabet-size must be positive, --count nonnegative")
    rng = random.Random(args.seed)
    text = "".join(serialize_dfa(random_dfa(rng, args.states, args.alphabet_size)) for _ in range(args.count))
    _write(text, args.output)
    return EXIT_OK


def cmd_selftest(args) -> int:
    if not 1 <= args.max_states <= 4:
        raise PreconditionError("--max-states must be between 1 and 4")
    return run_selftest(args.max_states)


def cmd_bench(args) -> int:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["n", "alphabet_size", "reduced_states", "seconds"])
    for n in args.sizes:
        dfa = random_dfa(random.Random(args.seed + n), n, args.alphabet_size)
        t0 = time.perf_counter()
        report = classify(dfa)
        writer.writerow([n, args.alphabet_size, report.reduced_states, f"{time.perf_counter() - t0:.4f}"])
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gendef", description="Classify DFAs into definite-like language classes.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_file(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("file", help="input file, or - for standard input")
        return p

    p = with_file("classify", "decide finite, cofinite, definite, reverse definite, generalized definite")
    p.add_argument("--json", action="store_true")
    p.add_argument("--max-k", type=int, default=None, help="also report minimal k up to this bound")
    p.set_defaults(func=cmd_classify)

    p = with_file("minimize", "write the reduced automaton")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_minimize)

    p = with_file("components", "list strongly connected components")
    p.add_argument("--dot", action="store_true", help="emit the component graph in DOT")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_components)

    p = with_file("semigroup", "transition semigroup of the reduced automaton")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    p.set_defaults(func=cmd_semigroup)

    p = with_file("index", "minimal k for each class by the separability oracle")
    p.add_argument("--max-k", type=int, default=DEFAULT_MAX_K)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_index)

    p = with_file("definitize", "definite automaton with at least as large a semigroup")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_definitize)

    p = with_file("dagreach", "check the DAG reachability reduction on one instance")
    p.set_defaults(func=cmd_dagreach)

    p = sub.add_parser("gen", help="seeded random complete DFAs")
    p.add_argument("--states", type=int, required=True)
    p.add_argument("--alphabet-size", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("selftest", help="cross-check deciders against oracles on small automata")
    p.add_argument("--max-states", type=int, default=3)
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("bench", help="time classify on random automata, CSV output")
    p.add_argument("--sizes", type=int, nargs="+", default=[64, 128, 256, 512, 1024])
    p.add_argument("--alphabet-size", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except PreconditionError as exc:
        print(f"precondition: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ConsistencyError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return EXIT_FAILURE
