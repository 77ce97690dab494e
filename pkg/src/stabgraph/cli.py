"""Command-line front end.

Subcommands:

* ``convert --from F --to T -i FILE [-o FILE]``: move between the matrix,
  graph and circuit text formats; ``--to dot`` renders the graph for
  Graphviz.
* ``apply -i FILE --script "H:0 S:2 CZ:0,1" [-o FILE] [--reduced]``:
  run a gate script over a graph.  With ``--reduced`` the input must be
  reduced and every intermediate graph stays reduced.
* ``reduce -i FILE [-o FILE]``: rewrite a graph into reduced form.
* ``equiv FILE1 FILE2``: decide whether two graphs describe the same
  state up to global phase.
* ``verify [--n N] [--seed S] [--cases C]``: audit every rewrite rule
  against the dense simulator on random graphs and print a pass table.

Exit codes: 0 success (and "equivalent" for equiv), 1 not equivalent or a
failed verify, 2 unreadable or malformed input, 3 violated semantic
invariant, 4 malformed gate script.
"""

from __future__ import annotations

import argparse
import re
import sys
from typing import Optional, Sequence

from .audit import audit_rules, format_report
from .circuit import circuit_from_graph, graph_from_circuit
from .convert import generator_matrix_from_graph, graph_from_generator_matrix
from .equivalence import graphs_equivalent, to_reduced
from .graph import StabilizerGraph
from .textio import (
    ParseError,
    format_circuit,
    format_generator_matrix,
    format_graph,
    graph_to_dot,
    parse_circuit,
    parse_generator_matrix,
    parse_graph,
)
from .transforms import GateApplication, apply_sequence

FORMATS = ("matrix", "graph", "circuit")


class ScriptError(Exception):
    """Malformed --script token."""


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(path: Optional[str], text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _load_graph(fmt: str, text: str) -> StabilizerGraph:
    if fmt == "matrix":
        return graph_from_generator_matrix(parse_generator_matrix(text))
    if fmt == "circuit":
        return graph_from_circuit(parse_circuit(text))
    return parse_graph(text)


def _cmd_convert(args: argparse.Namespace) -> int:
    text = _read(args.input)
    src, dst = args.src_fmt, args.dst_fmt
    if src == dst:
        # Round trip through the parser: normalizes line order.
        parsed = {
            "matrix": parse_generator_matrix,
            "graph": parse_graph,
            "circuit": parse_circuit,
        }[src](text)
        emit = {
            "matrix": format_generator_matrix,
            "graph": format_graph,
            "circuit": format_circuit,
        }[src]
        _write(args.output, emit(parsed))
        return 0
    g = _load_graph(src, text)
    if dst == "graph":
        out = format_graph(g)
    elif dst == "circuit":
        out = format_circuit(circuit_from_graph(g))
    elif dst == "matrix":
        out = format_generator_matrix(generator_matrix_from_graph(g))
    else:  # dot
        out = graph_to_dot(g)
    _write(args.output, out)
    return 0


_TOKEN_RE = re.compile(r"(?:(H|S|Z):(\d+)|CZ:(\d+),(\d+))\Z")


def parse_script(script: str, n: int) -> list[GateApplication]:
    """Parse whitespace-separated tokens H:<j>, S:<j>, Z:<j>, CZ:<i>,<j>."""
    gates: list[GateApplication] = []
    for tok in script.split():
        m = _TOKEN_RE.match(tok)
        if m is None:
            raise ScriptError(f"bad script token {tok!r}")
        if m.group(1):
            j = int(m.group(2))
            if j >= n:
                raise ScriptError(f"token {tok!r}: qubit {j} out of range for n={n}")
            gates.append((m.group(1), (j,)))
        else:
            i, j = int(m.group(3)), int(m.group(4))
            if i >= n or j >= n:
                raise ScriptError(f"token {tok!r}: qubit out of range for n={n}")
            if i == j:
                raise ScriptError(f"token {tok!r}: CZ qubits must differ")
            gates.append(("CZ", (i, j)))
    return gates


def _cmd_apply(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.input))
    gates = parse_script(args.script, g.n)
    out = apply_sequence(g, gates, reduced=args.reduced)
    _write(args.output, format_graph(out))
    return 0


def _cmd_reduce(args: argparse.Namespace) -> int:
    g = parse_graph(_read(args.input))
    _write(args.output, format_graph(to_reduced(g)))
    return 0


def _cmd_equiv(args: argparse.Namespace) -> int:
    g1 = parse_graph(_read(args.graph1))
    g2 = parse_graph(_read(args.graph2))
    if graphs_equivalent(g1, g2):
        print("equivalent")
        return 0
    print("not equivalent")
    return 1


def _cmd_verify(args: argparse.Namespace) -> int:
    reports = audit_rules(max_n=args.n, graphs=args.cases, seed=args.seed)
    sys.stdout.write(format_report(reports))
    return 0 if all(r.passed for r in reports) else 1


def _parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="stabgraph",
        description="Stabilizer states as decorated graphs.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="convert between representations")
    p.add_argument("--from", dest="src_fmt", required=True, choices=FORMATS)
    p.add_argument("--to", dest="dst_fmt", required=True, choices=FORMATS + ("dot",))
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("apply", help="apply a gate script to a graph")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--script", required=True, help="e.g. 'H:0 S:2 CZ:0,1'")
    p.add_argument("-o", "--output")
    p.add_argument("--reduced", action="store_true", help="stay in reduced form")
    p.set_defaults(func=_cmd_apply)

    p = sub.add_parser("reduce", help="rewrite a graph into reduced form")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_reduce)

    p = sub.add_parser("equiv", help="decide equivalence of two graphs")
    p.add_argument("graph1")
    p.add_argument("graph2")
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("verify", help="audit the rules against the simulator")
    p.add_argument("--n", type=int, default=6, help="largest graph size")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=200, help="graphs per family")
    p.set_defaults(func=_cmd_verify)
    return top


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except ScriptError as exc:
        print(f"script error: {exc}", file=sys.stderr)
        return 4
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
