"""Command-line surface: indices, blocks, cnk, rewrite, minimize, enumerate,
verify.

Exit statuses: 0 success, 1 usage or input-parse error, 2 precondition
violation, 3 verification completed and found at least one disagreement with
the reference closed forms.  Output is deterministic for a given command line
regardless of the worker count.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import IO

from .errors import (
    EmptyGraph,
    GraphError,
    MalformedEncoding,
    UnsupportedSize,
)
from .extremal import (
    has_mismatch,
    minimize,
    reports_to_csv,
    reports_to_json,
    verify_range,
)
from .canon import enumerate_connected
from .graphs import Graph, emit_g6, parse_g6
from .indices import zagreb_m1, zagreb_m2
from .rewrites import SITE_ARITY, RewriteKind, RewriteSite, apply_site
from .structure import construct_cnk, decompose, in_vnk, pendant_structure
from .errors import AcyclicGraph

THREADS_ENV = "ZAGREB_THREADS"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise _UsageError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="zagreb", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("indices", help="vertex/edge counts and both Zagreb indices")
    p.add_argument("graph", help="graph6 string, or - to read one line from stdin")

    p = sub.add_parser("blocks", help="block decomposition and pendant structure")
    p.add_argument("graph")

    p = sub.add_parser("cnk", help="emit the tadpole C(n,k) as graph6")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("rewrite", help="apply one rewrite at an explicit site")
    p.add_argument(
        "--op",
        required=True,
        choices=[k.value for k in RewriteKind],
    )
    p.add_argument(
        "--site",
        required=True,
        help="comma-separated vertex ids in the kind's documented order",
    )
    p.add_argument("graph")

    p = sub.add_parser("minimize", help="greedy index minimization")
    p.add_argument("--no-preserve-k", action="store_true")
    p.add_argument("--trace", action="store_true")
    p.add_argument("graph")

    p = sub.add_parser("enumerate", help="stream connected graphs as graph6 lines")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None,
                   help="restrict to graphs with k cut vertices and a cycle")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--limit", type=int, default=9,
                   help="raise the enumeration size cap (default 9)")

    p = sub.add_parser("verify", help="exhaustive check of the closed-form minima")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--limit", type=int, default=9)

    return parser


def _threads(args: argparse.Namespace) -> int:
    value = getattr(args, "threads", None)
    if value is None:
        value = int(os.environ.get(THREADS_ENV, "1"))
    if value < 1:
        raise _UsageError(f"worker count must be >= 1, got {value}")
    return value


def _read_graph(token: str, stdin: IO[str]) -> Graph:
    if token == "-":
        token = stdin.readline()
    return parse_g6(token)


def _g6_str(g: Graph) -> str:
    return emit_g6(g).decode("ascii")


def _cmd_indices(args, stdin, stdout) -> int:
    g = _read_graph(args.graph, stdin)
    print(
        json.dumps({"n": g.n, "m": g.m, "m1": zagreb_m1(g), "m2": zagreb_m2(g)}),
        file=stdout,
    )
    return 0


def _cmd_blocks(args, stdin, stdout) -> int:
    g = _read_graph(args.graph, stdin)
    deco = decompose(g)
    payload = {
        "cut_vertices": sorted(deco.cut_vertices),
        "blocks": [sorted(b) for b in deco.blocks],
        "endblock_flags": list(deco.endblock_flags),
        "block_cut_tree": [list(edge) for edge in deco.block_cut_tree],
    }
    try:
        pend = pendant_structure(g)
        payload["pendant_trees"] = [
            {"anchor": t.anchor, "vertices": sorted(t.vertices)}
            for t in pend.pendant_trees
        ]
        payload["pendant_paths"] = [
            {"anchor": p.anchor, "vertices": list(p.vertices), "length": p.length}
            for p in pend.pendant_paths
        ]
    except AcyclicGraph:
        payload["pendant_trees"] = None
        payload["pendant_paths"] = None
    print(json.dumps(payload), file=stdout)
    return 0


def _cmd_cnk(args, stdin, stdout) -> int:
    print(_g6_str(construct_cnk(args.n, args.k)), file=stdout)
    return 0


def _cmd_rewrite(args, stdin, stdout) -> int:
    kind = RewriteKind(args.op)
    try:
        vertices = tuple(int(tok) for tok in args.site.split(","))
    except ValueError as exc:
        raise _UsageError(f"--site must be comma-separated integers: {exc}") from exc
    if len(vertices) != SITE_ARITY[kind]:
        raise _UsageError(
            f"--op {kind.value} takes {SITE_ARITY[kind]} site vertices, "
            f"got {len(vertices)}"
        )
    g = _read_graph(args.graph, stdin)
    outcome = apply_site(g, RewriteSite(kind, vertices))
    print(
        json.dumps(
            {
                "graph6": _g6_str(outcome.result),
                "delta_m1": outcome.delta_m1,
                "delta_m2": outcome.delta_m2,
                "k_before": outcome.k_before,
                "k_after": outcome.k_after,
                "m_before": outcome.m_before,
                "m_after": outcome.m_after,
            }
        ),
        file=stdout,
    )
    return 0


def _cmd_minimize(args, stdin, stdout) -> int:
    g = _read_graph(args.graph, stdin)
    trace = minimize(g, preserve_k=not args.no_preserve_k)
    if args.trace:
        for step in trace.steps:
            print(
                f"{step.kind.value}\tdelta_m1={step.delta_m1}"
                f"\tdelta_m2={step.delta_m2}\tk={step.k_after}",
                file=stdout,
            )
        print(f"terminated\t{trace.terminated_reason}", file=stdout)
    print(_g6_str(trace.final), file=stdout)
    return 0


def _cmd_enumerate(args, stdin, stdout, stderr) -> int:
    workers = _threads(args)
    want_k = args.k
    emitted = 0

    def consumer(g: Graph) -> None:
        nonlocal emitted
        if want_k is None or in_vnk(g, args.n, want_k):
            emitted += 1
            print(_g6_str(g), file=stdout)

    enumerate_connected(args.n, consumer, workers=workers, size_limit=args.limit)
    print(emitted, file=stderr)
    return 0


def _cmd_verify(args, stdin, stdout) -> int:
    workers = _threads(args)
    reports = verify_range(args.n_max, workers=workers, size_limit=args.limit)
    if args.format == "csv":
        stdout.write(reports_to_csv(reports))
    else:
        stdout.write(reports_to_json(reports))
    return 3 if any(has_mismatch(r) for r in reports) else 0


def run(
    argv: list[str],
    stdin: IO[str] | None = None,
    stdout: IO[str] | None = None,
    stderr: IO[str] | None = None,
) -> int:
    stdin = stdin if stdin is not None else sys.stdin
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "indices":
            return _cmd_indices(args, stdin, stdout)
        if args.command == "blocks":
            return _cmd_blocks(args, stdin, stdout)
        if args.command == "cnk":
            return _cmd_cnk(args, stdin, stdout)
        if args.command == "rewrite":
            return _cmd_rewrite(args, stdin, stdout)
        if args.command == "minimize":
            return _cmd_minimize(args, stdin, stdout)
        if args.command == "enumerate":
            return _cmd_enumerate(args, stdin, stdout, stderr)
        return _cmd_verify(args, stdin, stdout)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return 1
    except (MalformedEncoding, UnsupportedSize, EmptyGraph) as exc:
        print(f"parse error: {exc}", file=stderr)
        return 1
    except GraphError as exc:
        print(f"precondition violated: {exc}", file=stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
