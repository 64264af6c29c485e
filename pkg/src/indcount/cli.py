"""Command-line front end.

    indcount count     --pattern H.txt --graph G.txt [--json] [--workers N]
    indcount oracle    --pattern H.txt --graph G.txt [--json]
    indcount enumerate --graph G.txt -k K [--list] [--json]
    indcount selftest  [--json]

Graph files: '#' starts a comment line, the first other line is "p <n>",
every following line is an edge "<u> <v>" with 0 <= u, v < n.
Exit codes: 0 ok, 1 usage or parse error, 2 internal invariant breach,
3 self-test failure.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from typing import Optional, TextIO

from . import kernels
from .graph import Graph, GraphError, build_graph
from .linear_extractor import SingularMatrixError
from .oracle import brute_force_ind
from .pipeline import InvariantError, count_induced
from .subgraph_enum import enumerate_connected_subsets

EXIT_OK, EXIT_USAGE, EXIT_INTERNAL, EXIT_SELFTEST = 0, 1, 2, 3


class GraphFormatError(ValueError):
    pass


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    graph_path: Optional[str] = None
    pattern_path: Optional[str] = None
    k: Optional[int] = None
    json: bool = False
    parallel: int = 1
    list_subsets: bool = False

    def validate(self) -> None:
        needs = {"count": ("graph_path", "pattern_path"), "oracle": ("graph_path", "pattern_path"),
                 "enumerate": ("graph_path", "k"), "selftest": ()}
        if self.command not in needs:
            raise UsageError(f"unknown command {self.command!r}")
        for attr in needs[self.command]:
            if getattr(self, attr) is None:
                flag = {"graph_path": "--graph", "pattern_path": "--pattern", "k": "-k"}[attr]
                raise UsageError(f"{self.command} requires {flag}")
        if self.k is not None and self.k < 1:
            raise UsageError("-k must be >= 1")
        if self.parallel < 1:
            raise UsageError("--workers must be >= 1")


def parse_graph_file(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "p":
                raise GraphFormatError(f"line {lineno}: expected header 'p <n>', got {raw!r}")
            n = _nonneg(fields[1], lineno)
            continue
        if len(fields) != 2:
            raise GraphFormatError(f"line {lineno}: expected '<u> <v>', got {raw!r}")
        u, v = _nonneg(fields[0], lineno), _nonneg(fields[1], lineno)
        if u >= n or v >= n:
            raise GraphFormatError(f"line {lineno}: vertex label >= declared n={n}")
        edges.append((u, v))
    if n is None:
        raise GraphFormatError("missing header 'p <n>'")
    try:
        return build_graph(n, edges)
    except GraphError as exc:
        raise GraphFormatError(str(exc)) from None


def _nonneg(token: str, lineno: int) -> int:
    if not token.isdigit():
        raise GraphFormatError(f"line {lineno}: {token!r} is not a nonnegative integer")
    return int(token)


def format_graph(G: Graph) -> str:
    lines = [f"p {G.n}"] + [f"{u} {v}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def _read_graph(path: str) -> Graph:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_graph_file(fh.read())
    except OSError as exc:
        raise GraphFormatError(f"{path}: {exc.strerror}") from None
    except GraphFormatError as exc:
        raise GraphFormatError(f"{path}: {exc}") from None


def selftest(out: TextIO, as_json: bool = False) -> bool:
    """Cross-check the pipeline against the brute-force oracle, and the
    compiled kernel against the Python kernel, on a fixed small matrix."""
    from .corpus import host_corpus, small_patterns

    patterns = small_patterns(4)
    hosts = host_corpus(count=40, seed=7)
    failures = []
    t0 = time.perf_counter()
    for hi, G in enumerate(hosts):
        for H in patterns:
            fast = count_induced(H, G).count
            slow = brute_force_ind(H, G)
            if fast != slow:
                failures.append({"host": hi, "pattern": H.edges(), "m": H.n, "count": fast, "oracle": slow})
    kernel_ok = _kernel_agreement(hosts)
    report = {
        "kernel": kernels.IMPLEMENTATION,
        "instances": len(hosts) * len(patterns),
        "mismatches": failures,
        "kernel_agreement": kernel_ok,
        "elapsed": round(time.perf_counter() - t0, 3),
        "passed": not failures and kernel_ok,
    }
    if as_json:
        out.write(json.dumps(report, indent=2) + "\n")
    else:
        out.write(f"kernel: {report['kernel']}\n")
        out.write(f"{'PASS' if not failures else 'FAIL'} count vs oracle on {report['instances']} instances\n")
        for f in failures:
            out.write(f"  mismatch: {f}\n")
        out.write(f"{'PASS' if kernel_ok else 'FAIL'} compiled and Python kernels agree\n")
    return report["passed"]


def _kernel_agreement(hosts) -> bool:
    compiled = kernels.compiled_kernel()
    if compiled is None:
        return True
    py = kernels.python_kernel
    for G in hosts:
        if G.n == 0:
            continue
        T = enumerate_connected_subsets(G, 4)
        w = [1 if len(S) == 1 else 2 if len(S) == 2 else 0 for S in T.subsets]
        a = py.fill_table(py.prepare(T.subsets, T.ids, G.adjacency), w, 4)
        b = compiled.fill_table(compiled.prepare(T.subsets, T.ids, G.adjacency), w, 4)
        if a != b:
            return False
    return True


def run(config: RunConfig, out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        config.validate()
        if config.command == "selftest":
            return EXIT_OK if selftest(out, config.json) else EXIT_SELFTEST
        G = _read_graph(config.graph_path)
        if config.command == "enumerate":
            T = enumerate_connected_subsets(G, config.k)
            counts = T.counts()
            if config.json:
                doc = {"n": G.n, "k": config.k, "counts": {str(i + 1): c for i, c in enumerate(counts)},
                       "total": len(T)}
                if config.list_subsets:
                    doc["subsets"] = [list(S) for S in T.subsets]
                out.write(json.dumps(doc) + "\n")
            else:
                for i, c in enumerate(counts):
                    out.write(f"{i + 1}:{c}\n")
                if config.list_subsets:
                    for S in T.subsets:
                        out.write(" ".join(map(str, S)) + "\n")
            return EXIT_OK
        H = _read_graph(config.pattern_path)
        if config.command == "count":
            res = count_induced(H, G, workers=config.parallel)
            payload = res.as_dict()
        else:
            t0 = time.perf_counter()
            c = brute_force_ind(H, G)
            payload = {"count": str(c), "n": G.n, "m": H.n, "method": "brute-force",
                       "timings": {"total": time.perf_counter() - t0}}
        if config.json:
            out.write(json.dumps(payload) + "\n")
        else:
            out.write(f"{payload['count']}\n")
        return EXIT_OK
    except (UsageError, GraphFormatError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (InvariantError, SingularMatrixError, ArithmeticError, LookupError, AssertionError) as exc:
        err.write(f"internal error: {exc}\n")
        return EXIT_INTERNAL


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="indcount", description="Exact induced subgraph counts in bounded-degree graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, pattern=True):
        p.add_argument("--graph", dest="graph_path", help="host graph file")
        if pattern:
            p.add_argument("--pattern", dest="pattern_path", help="pattern graph file")
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("count", help="count induced copies with the polynomial method")
    common(p)
    p.add_argument("--workers", type=int, default=1, dest="parallel", help="worker processes for evaluations")
    p = sub.add_parser("oracle", help="count induced copies by brute force")
    common(p)
    p = sub.add_parser("enumerate", help="count connected induced subsets by size")
    common(p, pattern=False)
    p.add_argument("-k", type=int, help="size bound")
    p.add_argument("--list", action="store_true", dest="list_subsets", help="also print the subsets")
    p = sub.add_parser("selftest", help="cross-validate against the brute-force oracle")
    p.add_argument("--json", action="store_true")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config = RunConfig(**vars(args))
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
