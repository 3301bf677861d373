"""Command-line interface.

Commands: construct (emit a representation for a named construction),
verify (check a representation against a target graph), clique (run one of
the clique algorithms), bench (approximation-ratio table on seeded random
instances) and convert (graph format conversion).

Exit codes: 0 success, 1 verification found mismatches, 2 usage or input
errors, 3 degenerate input (a construction got an edgeless graph),
4 brute-force oracle limit exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from dataclasses import dataclass

from . import constructions, gadgets
from .approx import approx_clique_t, exact_clique_2track, stab_weight_scan
from .errors import (
    EmptyEdgeSetError,
    MultintError,
    OracleSizeExceededError,
    WrongKindError,
)
from .corpus import random_representation, random_weights
from .gadgets import QParams
from .graph import (
    DEFAULT_ORACLE_LIMIT,
    Graph,
    Label,
    complement,
    graph_from_edgelist,
    graph_from_json_dict,
    graph_to_dot,
    graph_to_edgelist,
    graph_to_json_dict,
    subdivide,
)
from .representation import (
    Kind,
    Representation,
    coord_to_json,
    intersection_graph,
    representation_from_json_dict,
    representation_to_json_dict,
    verify_representation,
)
from .solvers import max_weight_clique_bruteforce

ORACLE_LIMIT_ENV = "MULTINT_ORACLE_LIMIT"


@dataclass(frozen=True)
class RunConfig:
    """Execution knobs shared by the commands."""

    seed: int = 0
    oracle_limit: int | None = None

    def resolved_oracle_limit(self) -> int:
        if self.oracle_limit is not None:
            return self.oracle_limit
        env = os.environ.get(ORACLE_LIMIT_ENV)
        if env is not None:
            try:
                return int(env)
            except ValueError as exc:
                raise ValueError(f"{ORACLE_LIMIT_ENV} must be an integer, got {env!r}") from exc
        return DEFAULT_ORACLE_LIMIT


class _UsageError(Exception):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _load_graph(path: str, fmt: str) -> Graph:
    text = _read_text(path)
    if fmt == "auto":
        fmt = "json" if text.lstrip().startswith("{") else "edgelist"
    if fmt == "json":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise _UsageError(f"{path}: not valid JSON: {exc}") from exc
        return graph_from_json_dict(data)
    return graph_from_edgelist(text)


def _load_representation(path: str) -> Representation:
    try:
        data = json.loads(_read_text(path))
    except json.JSONDecodeError as exc:
        raise _UsageError(f"{path}: not valid JSON: {exc}") from exc
    return representation_from_json_dict(data)


def _json_block(data: dict) -> str:
    return json.dumps(data, indent=2) + "\n"


# Constructions over an input graph: id -> (builder, subdivision arity).
_GRAPH_CONSTRUCTORS = {
    "co-subd4-2i": (constructions.rep_co_subd4_2interval, 4),
    "co-subd2-u3i": (constructions.rep_co_subd2_unit3interval, 2),
    "co-subd2-3t": (constructions.rep_co_subd2_3track, 2),
    "co-subd2-u4t": (constructions.rep_co_subd2_unit4track, 2),
    "co-subd2-u2ci": (constructions.rep_co_subd2_unit2circular_interval, 2),
    "co-subd2-2ct": (constructions.rep_co_subd2_2circular_track, 2),
}
_GADGET_CONSTRUCTORS = {
    "q-u2i": gadgets.rep_co_q_unit2interval,
    "q-u3t": gadgets.rep_co_q_unit3track,
}
CONSTRUCTOR_IDS = (*_GRAPH_CONSTRUCTORS, *_GADGET_CONSTRUCTORS, "k5-u2ct")


def cmd_construct(args: argparse.Namespace) -> int:
    name = args.name
    if name in _GRAPH_CONSTRUCTORS:
        if args.graph is None:
            raise _UsageError(f"construction {name} needs an input graph")
        g = _load_graph(args.graph, args.format)
        builder, arity = _GRAPH_CONSTRUCTORS[name]
        rep = builder(g)
        target = complement(subdivide(g, arity))
    elif name in _GADGET_CONSTRUCTORS:
        if args.w is None or args.l is None:
            raise _UsageError(f"construction {name} needs --w and --l")
        params = QParams(args.w, args.l, args.spacing or 0)
        rep = _GADGET_CONSTRUCTORS[name](params)
        target = complement(gadgets.build_q(params))
    else:
        rep = constructions.k5_unit_2circular_track()
        target = complement(Graph([Label("x", i) for i in range(1, 6)], []))
    _write_text(args.output, _json_block(representation_to_json_dict(rep)))
    if args.target is not None:
        _write_text(args.target, _json_block(graph_to_json_dict(target)))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    rep = _load_representation(args.representation)
    target = _load_graph(args.graph, args.format)
    report = verify_representation(rep, target)
    payload = {
        "ok": report.ok,
        "missing_edges": [[str(u), str(v)] for u, v in report.missing_edges],
        "extra_edges": [[str(u), str(v)] for u, v in report.extra_edges],
        "unit_length": None if report.unit_length is None else coord_to_json(report.unit_length),
    }
    _write_text(args.output, _json_block(payload))
    return 0 if report.ok else 1


def _load_weights(path: str | None, vertices) -> dict[Label, int]:
    if path is None:
        return {v: 1 for v in vertices}
    data = json.loads(_read_text(path))
    if not isinstance(data, dict):
        raise _UsageError("weights file must be a JSON object of label -> weight")
    weights = {Label.parse(k): int(v) for k, v in data.items()}
    missing = set(vertices) - set(weights)
    if missing:
        raise _UsageError(f"weights missing for: {', '.join(str(v) for v in sorted(missing))}")
    return weights


def cmd_clique(args: argparse.Namespace, config: RunConfig) -> int:
    text = _read_text(args.input)
    try:
        data = json.loads(text)
        is_json = True
    except json.JSONDecodeError:
        is_json = False
    rep = None
    if is_json and isinstance(data, dict) and "kind" in data:
        rep = representation_from_json_dict(data)
        g = intersection_graph(rep)
    elif is_json:
        g = graph_from_json_dict(data)
    else:
        g = graph_from_edgelist(text)
    weights = _load_weights(args.weights, g.sorted_vertices)
    limit = config.resolved_oracle_limit()

    payload: dict = {"algo": args.algo}
    ratio_basis = None
    if args.algo == "exact":
        res = max_weight_clique_bruteforce(g, weights, oracle_limit=limit)
    elif rep is None:
        raise _UsageError(f"--algo {args.algo} needs a representation input")
    elif args.algo == "scan":
        point, res = stab_weight_scan(rep, weights)
        payload["stab"] = {"site": point.site, "coordinate": coord_to_json(point.coordinate)}
        ratio_basis = res.weight
    elif args.algo == "t-approx":
        res = approx_clique_t(rep, weights)
        ratio_basis = res.weight
    else:
        res = exact_clique_2track(rep, weights)
    payload["weight"] = res.weight
    payload["members"] = [str(v) for v in res.sorted_members]
    if ratio_basis is not None and g.n <= limit:
        opt = max_weight_clique_bruteforce(g, weights, oracle_limit=limit)
        payload["ratio"] = round(opt.weight / ratio_basis, 6) if ratio_basis else 1.0
    _write_text(args.output, _json_block(payload))
    return 0


def cmd_bench(args: argparse.Namespace, config: RunConfig) -> int:
    rng = random.Random(config.seed)
    kind = Kind.TRACK if args.kind == "track" else Kind.INTERVAL
    limit = config.resolved_oracle_limit()
    lines = ["instance,opt,scan,t_approx,scan_ratio,t_ratio"]
    for instance in range(1, args.instances + 1):
        rep = random_representation(rng, kind, args.t, args.n)
        weights = random_weights(rng, rep.vertices, args.max_weight)
        g = intersection_graph(rep)
        opt = max_weight_clique_bruteforce(g, weights, oracle_limit=limit).weight
        scan = stab_weight_scan(rep, weights)[1].weight
        t_approx = approx_clique_t(rep, weights).weight
        lines.append(
            f"{instance},{opt},{scan},{t_approx},{opt / scan:.6f},{opt / t_approx:.6f}"
        )
    _write_text(args.output, "\n".join(lines) + "\n")
    return 0


def cmd_convert(args: argparse.Namespace) -> int:
    g = _load_graph(args.input, args.format)
    if args.to == "json":
        out = _json_block(graph_to_json_dict(g))
    elif args.to == "edgelist":
        out = graph_to_edgelist(g)
    else:
        out = graph_to_dot(g)
    _write_text(args.output, out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multint",
        description="Constructions and clique algorithms for multiple-interval graphs.",
    )
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized commands")
    parser.add_argument(
        "--oracle-limit",
        type=int,
        default=None,
        help=f"max vertices for brute-force solves (default {DEFAULT_ORACLE_LIMIT}, "
        f"or ${ORACLE_LIMIT_ENV})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="emit a representation for a named construction")
    p.add_argument("name", choices=CONSTRUCTOR_IDS)
    p.add_argument("graph", nargs="?", help="input graph file (JSON or edge list)")
    p.add_argument("--format", choices=("auto", "json", "edgelist"), default="auto")
    p.add_argument("--w", type=int, default=None, help="gadget width")
    p.add_argument("--l", type=int, default=None, help="gadget length")
    p.add_argument("--spacing", type=int, default=None, help="gadget coordinate spacing N")
    p.add_argument("--target", default=None, help="also write the target graph to this file")
    p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("verify", help="check a representation against a target graph")
    p.add_argument("representation")
    p.add_argument("graph")
    p.add_argument("--format", choices=("auto", "json", "edgelist"), default="auto")
    p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("clique", help="maximum weighted clique")
    p.add_argument("input", help="graph or representation file")
    p.add_argument(
        "--algo", choices=("exact", "scan", "t-approx", "2track-exact"), default="exact"
    )
    p.add_argument("--weights", default=None, help="JSON file of label -> integer weight")
    p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("bench", help="approximation ratios on seeded random instances")
    p.add_argument("--t", type=int, default=2)
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--instances", type=int, default=20)
    p.add_argument("--kind", choices=("interval", "track"), default="interval")
    p.add_argument("--max-weight", type=int, default=10)
    p.add_argument("-o", "--output", default=None)

    p = sub.add_parser("convert", help="convert a graph between formats")
    p.add_argument("input")
    p.add_argument("--format", choices=("auto", "json", "edgelist"), default="auto")
    p.add_argument("--to", choices=("json", "edgelist", "dot"), required=True)
    p.add_argument("-o", "--output", default=None)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    config = RunConfig(seed=args.seed, oracle_limit=args.oracle_limit)
    try:
        if args.command == "construct":
            return cmd_construct(args)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "clique":
            return cmd_clique(args, config)
        if args.command == "bench":
            return cmd_bench(args, config)
        return cmd_convert(args)
    except EmptyEdgeSetError as exc:
        print(f"multint: degenerate input: {exc}", file=sys.stderr)
        return 3
    except OracleSizeExceededError as exc:
        print(f"multint: {exc}", file=sys.stderr)
        return 4
    except (WrongKindError, _UsageError) as exc:
        print(f"multint: {exc}", file=sys.stderr)
        return 2
    except (MultintError, ValueError, OSError) as exc:
        print(f"multint: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    main()
