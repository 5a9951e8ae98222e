"""Command-line front end.

Exit codes: 0 success, 2 bad input or usage, 3 a guard was exceeded,
4 a verification found a mismatch, 5 a cycle search ran out of budget.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import random
import sys
from pathlib import Path

from . import cycles, homology, reduction
from .corpus import random_corpus
from .errors import (
    CombinationBudgetExceeded,
    InvalidSize,
    MissingPathEdge,
    ParseError,
    SearchBudgetExceeded,
    StarClusterError,
    TooLarge,
)
from .hypergraph import (
    Hypergraph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    lk_expand,
    normalize,
    path_graph,
    random_hypergraph,
    tight_path,
)
from .verify import SUITES

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_GUARD = 3
EXIT_VERIFY = 4
EXIT_BUDGET = 5

log = logging.getLogger("starcluster")


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


def _ints(text: str) -> list[int]:
    return [int(t) for t in text.split(",") if t]


def parse_generator(spec: str, seed: int | None = None) -> Hypergraph:
    """Build a hypergraph from ``name:args``; ``a+b`` is a disjoint union.

    Names: cycle:n, path:n, complete:n, tightpath:n,k,
    random:n,density[,lo-hi] (needs a seed).
    """
    parts = spec.split("+")
    if len(parts) > 1:
        out = parse_generator(parts[0], seed)
        for p in parts[1:]:
            out = disjoint_union(out, parse_generator(p, seed))
        return out
    name, _, args = spec.partition(":")
    try:
        if name == "cycle":
            return cycle_graph(*_ints(args))
        if name == "path":
            return path_graph(*_ints(args))
        if name == "complete":
            return complete_graph(*_ints(args))
        if name == "tightpath":
            n, k = _ints(args)
            return tight_path(n, k)
        if name == "random":
            fields = args.split(",")
            n, density = int(fields[0]), float(fields[1])
            lo, hi = 2, 3
            if len(fields) > 2:
                lo, hi = (int(x) for x in fields[2].split("-"))
            if seed is None:
                raise CliError("random generators need --seed", EXIT_PARSE)
            return random_hypergraph(n, (lo, min(hi, n)), density, seed)
    except (ValueError, TypeError, InvalidSize) as exc:
        raise CliError(f"bad generator spec {spec!r}: {exc}", EXIT_PARSE) from exc
    raise CliError(f"unknown generator {name!r}", EXIT_PARSE)


def load_input(args) -> Hypergraph:
    if args.gen and args.input:
        raise CliError("give either --input or --gen, not both", EXIT_PARSE)
    if args.gen:
        return parse_generator(args.gen, args.seed)
    if args.input:
        text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
        fmt = args.format
        if fmt is None:
            fmt = "json" if text.lstrip().startswith("{") else "text"
        try:
            return Hypergraph.from_json(text) if fmt == "json" else Hypergraph.from_text(text)
        except ParseError as exc:
            raise CliError(f"cannot parse {args.input}: {exc}", EXIT_PARSE) from exc
    raise CliError("no input: use --input PATH or --gen SPEC", EXIT_PARSE)


def render_hypergraph(h: Hypergraph, fmt: str | None) -> str:
    return h.to_json() if fmt == "json" else h.to_text().rstrip("\n")


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print("\n".join(lines))


def _profile_lines(p: homology.HomologyProfile) -> list[str]:
    tors = ", ".join(f"dim {d}: {t}" for d, t in p.torsion.items()) or "none"
    return [
        p.betti_string(),
        f"torsion: {tors}",
        f"reduced euler characteristic: {p.euler}",
        f"total betti: {p.total}",
    ]


# -- commands ---------------------------------------------------------------


def cmd_gen(args) -> int:
    if args.kind == "lk":
        if not args.base or args.k is None:
            raise CliError("gen lk needs --base SPEC and --k K", EXIT_PARSE)
        base = parse_generator(args.base, args.seed)
        path = _ints(args.path) if args.path else list(base.vertices[: 2 * args.k - 2])
        try:
            h = lk_expand(base, path, args.k)
        except (MissingPathEdge, InvalidSize) as exc:
            raise CliError(str(exc), EXIT_PARSE) from exc
    else:
        h = parse_generator(args.kind, args.seed)
    print(render_hypergraph(h, args.format))
    return EXIT_OK


def cmd_normalize(args) -> int:
    h = load_input(args)
    report = normalize(h)
    if args.json:
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(render_hypergraph(report.resulting, args.format))
        print(f"# removed superset edges: {[list(e) for e in report.removed_superset_edges]}")
        print(f"# removed singleton vertices: {list(report.removed_singleton_vertices)}")
    return EXIT_OK


def cmd_betti(args) -> int:
    h = load_input(args)
    p = homology.betti(h, args.max_vertices)
    payload = p.to_dict() | {"total": p.total}
    _emit(args, payload, _profile_lines(p))
    return EXIT_OK


def cmd_cycles(args) -> int:
    h = normalize(load_input(args)).resulting
    induced = {}
    for v in h.vertices:
        c = cycles.vertex_in_induced_3cycle(h, v)
        induced[v] = c.to_dict() if c else None
    payload: dict = {"induced_3_cycles": {str(v): c for v, c in induced.items()}}
    lines = [
        "induced 3-cycles: "
        + (", ".join(str(v) for v, c in induced.items() if c) or "none")
    ]
    code = EXIT_OK
    try:
        witness = cycles.has_ternary_berge_cycle(h, args.budget)
        payload["ternary_cycle"] = witness.to_dict() if witness else None
        lines.append(
            f"ternary cycle: length {witness.length}: {witness}" if witness else "ternary cycle: none"
        )
    except SearchBudgetExceeded:
        payload["ternary_cycle"] = "unknown"
        lines.append("ternary cycle: unknown (budget exhausted)")
        code = EXIT_BUDGET
    try:
        t = cycles.disjoint_ternary_packing(h, args.limit, args.budget)
        payload["t"] = t
        lines.append(f"t = {t}")
    except SearchBudgetExceeded as exc:
        payload["t"] = "unknown"
        payload["t_lower_bound"] = exc.partial
        lines.append(f"t = unknown (at least {exc.partial})")
        code = EXIT_BUDGET
    _emit(args, payload, lines)
    return code


def _trace_lines(trace: reduction.ReductionTrace) -> list[str]:
    lines = []
    for m in trace.steps:
        if m.kind == "Normalize" and not m.argument.changed:
            continue
        arg = m.argument
        if m.kind == "Normalize":
            arg = f"drop vertices {list(arg.removed_singleton_vertices)}, edges {list(arg.removed_superset_edges)}"
        elif isinstance(arg, frozenset):
            arg = sorted(arg)
        lines.append(f"{m.kind:<9} {arg}  -> |V|={m.vertex_count} |E|={m.edge_count}")
    lines.append(f"suspensions: {trace.suspensions}")
    lines.append(f"verdict: {trace.verdict}")
    return lines


def cmd_reduce(args) -> int:
    h = load_input(args)
    trace = reduction.reduce_pipeline(h, args.strategy, args.tuple_cap)
    payload = trace.to_dict()
    lines = _trace_lines(trace)
    code = EXIT_OK
    verdict = trace.verdict
    if verdict.kind == "Residual":
        fallback = homology.betti(verdict.residual, args.max_vertices)
        payload["residual_homology"] = fallback.to_dict()
        lines.append("residual homology: " + fallback.betti_string())
    if args.verify:
        before = homology.betti(h, args.max_vertices)
        if verdict.kind == "Residual":
            expected = homology.betti(verdict.residual, args.max_vertices).shifted(trace.suspensions)
        elif verdict.kind == "Sphere":
            expected = {verdict.dimension: 1}
        else:
            expected = {}
        ok = before.nonzero() == expected
        payload["verified"] = ok
        lines.append(f"input homology:    {before.betti_string()}")
        lines.append(f"predicted nonzero: {expected}")
        lines.append("verification: " + ("passed" if ok else "FAILED"))
        if not ok:
            code = EXIT_VERIFY
    _emit(args, payload, lines)
    return code


def cmd_graphify(args) -> int:
    h = normalize(load_input(args)).resulting
    graph, s = reduction.graphify(h)
    if args.json:
        print(json.dumps({"graph": graph.to_dict(), "suspensions": s}, indent=2))
    else:
        print(render_hypergraph(graph, args.format))
        print(f"# suspensions: {s}")
    return EXIT_OK


def cmd_search(args) -> int:
    """Sample random hypergraphs, keep the ternary-free ones, track total Betti."""
    rng = random.Random(args.seed)
    samples = ternary_free = skipped = 0
    max_total = None
    violations = []
    for _ in range(args.count):
        n = rng.randint(3, args.max_n)
        density = rng.uniform(0.05, 0.3)
        h = random_hypergraph(n, (2, min(3, n)), density, seed=rng.getrandbits(32))
        samples += 1
        try:
            if cycles.has_ternary_berge_cycle(h, args.budget) is not None:
                continue
        except SearchBudgetExceeded:
            skipped += 1
            continue
        ternary_free += 1
        total = homology.betti(h, args.max_vertices).total
        max_total = total if max_total is None else max(max_total, total)
        if total > 1:
            violations.append(h.to_dict())
    payload = {
        "samples": samples,
        "ternary_free": ternary_free,
        "skipped_budget": skipped,
        "max_total_betti": max_total,
        "violations": violations,
    }
    lines = [
        f"samples: {samples}",
        f"ternary-free: {ternary_free}",
        f"skipped (budget): {skipped}",
        f"max total betti: {max_total if max_total is not None else '-'}",
        f"violations: {len(violations)}",
    ]
    lines += ["  " + json.dumps(v) for v in violations]
    _emit(args, payload, lines)
    return EXIT_VERIFY if violations else EXIT_OK


def cmd_verify(args) -> int:
    corpus = list(random_corpus(args.count, args.seed, n_range=(3, args.max_n)))
    results = {}
    for name, check in SUITES.items():
        failures = []
        for h in corpus:
            failures.extend(check(h))
        results[name] = failures
    payload = {name: {"failures": f} for name, f in results.items()} | {"instances": len(corpus)}
    lines = [f"instances: {len(corpus)}"]
    for name, failures in results.items():
        lines.append(f"{'PASS' if not failures else 'FAIL'} {name} ({len(failures)} failures)")
        lines += ["  " + f for f in failures[:10]]
    _emit(args, payload, lines)
    return EXIT_VERIFY if any(results.values()) else EXIT_OK


# -- argument parsing ---------------------------------------------------------


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="hypergraph file ('-' for stdin)")
    common.add_argument("--gen", help="generator spec, e.g. cycle:6 or tightpath:6,3")
    common.add_argument("--format", choices=("text", "json"), help="hypergraph file format")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, help="seed for randomized generators")
    common.add_argument("--max-vertices", type=_positive, default=homology.DEFAULT_MAX_VERTICES)
    common.add_argument("--tuple-cap", type=_positive, default=reduction.DEFAULT_TUPLE_CAP)
    common.add_argument("--budget", type=_positive, default=cycles.DEFAULT_BUDGET)
    common.add_argument("--strategy", choices=("lex", "greedy"), default="lex")

    parser = argparse.ArgumentParser(
        prog="starcluster",
        description="Star-cluster reductions of hypergraph independence complexes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", parents=[common], help="print a generated hypergraph")
    p.add_argument("kind", help="generator spec, or 'lk' for the tight-path expansion")
    p.add_argument("--k", type=int)
    p.add_argument("--base", help="generator spec of the hypergraph to expand")
    p.add_argument("--path", help="comma-separated a_1..a_{2k-2} (default: first 2k-2 vertices)")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("normalize", parents=[common], help="normalize and report removals")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("betti", parents=[common], help="reduced homology of I(H)")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("cycles", parents=[common], help="induced 3-cycles, ternary cycles, t(H)")
    p.add_argument("--limit", type=_positive, default=None, help="stop packing at this many")
    p.set_defaults(func=cmd_cycles)

    p = sub.add_parser("reduce", parents=[common], help="run the star-cluster pipeline")
    p.add_argument("--verify", action="store_true", help="check the suspension shift by homology")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("graphify", parents=[common], help="turn big edges into gadgets")
    p.set_defaults(func=cmd_graphify)

    p = sub.add_parser("search", parents=[common], help="total Betti of ternary-free samples")
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--max-n", type=_positive, default=9)
    p.set_defaults(func=cmd_search, seed=0)

    p = sub.add_parser("verify", parents=[common], help="run the oracle identity suites")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-n", type=_positive, default=8)
    p.set_defaults(func=cmd_verify, seed=0)
    return parser


def _configure_logging() -> None:
    level = os.environ.get("STARCLUSTER_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def main(argv=None) -> int:
    _configure_logging()
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except TooLarge as exc:
        print(f"error: guard --max-vertices: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except CombinationBudgetExceeded as exc:
        print(f"error: guard --tuple-cap: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except SearchBudgetExceeded as exc:
        print(f"error: guard --budget: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (OSError, StarClusterError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
