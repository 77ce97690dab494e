"""Text formats for matrices, graphs and circuits, plus DOT export.

Matrix format: one generator per line, a sign character (+ or -) followed
by one letter from IXYZ per qubit, e.g.::

    +XX
    +ZZ

Graph format: a ``nodes <n>`` header, one ``node <id> <solid|hollow>``
line per node with optional ``loop`` and ``neg`` flags, and ``edge <i> <j>``
lines with i < j::

    nodes 2
    node 0 solid
    node 1 hollow neg
    edge 0 1

Circuit format: a ``qubits <n>`` header followed by ``CZ <i> <j>``,
``Z <i>``, ``S <i>`` and ``H <i>`` lines; the layer structure is implied
and duplicate gate lines are rejected::

    qubits 2
    CZ 0 1
    H 1

Malformed text raises ``ParseError`` with 1-based line/column positions.
Semantic problems (anticommuting rows, wrong row count and so on) raise
``ValueError`` from the constructors instead.  Formatters emit canonical
ordering, so parse/format round trips are byte-identical.
"""

from __future__ import annotations

import re
from typing import Optional

from .circuit import GraphFormCircuit
from .graph import StabilizerGraph
from .pauli import GeneratorMatrix, PauliString

_SIGN_CHARS = {"+": 1, "-": -1, "−": -1}
_LETTER_BITS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}


class ParseError(ValueError):
    """Malformed input text, with a 1-based line/column position."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


def _significant_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        if raw.strip():
            yield lineno, raw


def _tokens(raw: str) -> list[tuple[str, int]]:
    return [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", raw)]


def _int_token(tok: str, col: int, lineno: int, what: str) -> int:
    if not tok.isdigit():
        raise ParseError(f"{what} must be a non-negative integer, got {tok!r}", lineno, col)
    return int(tok)


# --- generator matrices -----------------------------------------------------


def parse_generator_matrix(text: str) -> GeneratorMatrix:
    rows: list[PauliString] = []
    width = None
    for lineno, raw in _significant_lines(text):
        line = raw.strip()
        col0 = raw.index(line[0]) + 1
        sign = _SIGN_CHARS.get(line[0])
        if sign is None:
            raise ParseError(f"row must start with '+' or '-', got {line[0]!r}", lineno, col0)
        body = line[1:]
        if not body:
            raise ParseError("row has a sign but no Pauli letters", lineno, col0 + 1)
        if width is None:
            width = len(body)
        elif len(body) != width:
            raise ParseError(f"expected {width} letters, got {len(body)}", lineno, col0 + 1)
        x = z = 0
        for i, ch in enumerate(body):
            bits = _LETTER_BITS.get(ch)
            if bits is None:
                raise ParseError(f"bad Pauli letter {ch!r}", lineno, col0 + 1 + i)
            x |= bits[0] << i
            z |= bits[1] << i
        rows.append(PauliString(width, x, z, sign))
    if not rows:
        raise ParseError("no generator rows", 1, 1)
    return GeneratorMatrix(width, tuple(rows))


def format_generator_matrix(mat: GeneratorMatrix) -> str:
    return "".join(row.label() + "\n" for row in mat.rows)


# --- graphs -----------------------------------------------------------------


def parse_graph(text: str) -> StabilizerGraph:
    lines = _significant_lines(text)
    try:
        lineno, raw = next(lines)
    except StopIteration:
        raise ParseError("empty graph description", 1, 1) from None
    toks = _tokens(raw)
    if toks[0][0] != "nodes":
        raise ParseError(f"expected 'nodes <n>' header, got {toks[0][0]!r}", lineno, toks[0][1])
    if len(toks) != 2:
        raise ParseError("header must be exactly 'nodes <n>'", lineno, toks[-1][1])
    n = _int_token(toks[1][0], toks[1][1], lineno, "node count")
    if n < 1:
        raise ParseError("node count must be positive", lineno, toks[1][1])

    seen: dict[int, bool] = {}
    hollow = [False] * n
    loop = [False] * n
    neg = [False] * n
    adj = [0] * n

    def node_id(tok: str, col: int, lineno: int) -> int:
        j = _int_token(tok, col, lineno, "node id")
        if j >= n:
            raise ParseError(f"node id {j} out of range for nodes {n}", lineno, col)
        return j

    for lineno, raw in lines:
        toks = _tokens(raw)
        kind, col = toks[0]
        if kind == "node":
            if len(toks) < 3:
                raise ParseError("node line needs an id and a fill", lineno, col)
            j = node_id(toks[1][0], toks[1][1], lineno)
            if j in seen:
                raise ParseError(f"duplicate node line for id {j}", lineno, toks[1][1])
            seen[j] = True
            fill, fcol = toks[2]
            if fill not in ("solid", "hollow"):
                raise ParseError(f"fill must be 'solid' or 'hollow', got {fill!r}", lineno, fcol)
            hollow[j] = fill == "hollow"
            for flag, col2 in toks[3:]:
                if flag == "loop" and not loop[j]:
                    loop[j] = True
                elif flag == "neg" and not neg[j]:
                    neg[j] = True
                else:
                    raise ParseError(f"bad or repeated node flag {flag!r}", lineno, col2)
        elif kind == "edge":
            if len(toks) != 3:
                raise ParseError("edge line must be 'edge <i> <j>'", lineno, col)
            i = node_id(toks[1][0], toks[1][1], lineno)
            j = node_id(toks[2][0], toks[2][1], lineno)
            if i >= j:
                raise ParseError(f"edge endpoints must satisfy i < j, got {i} {j}", lineno, toks[1][1])
            if (adj[i] >> j) & 1:
                raise ParseError(f"duplicate edge {i} {j}", lineno, toks[1][1])
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        else:
            raise ParseError(f"expected 'node' or 'edge', got {kind!r}", lineno, col)

    missing = [j for j in range(n) if j not in seen]
    if missing:
        raise ParseError(f"missing node line(s) for id(s) {missing}", 1, 1)
    return StabilizerGraph(n, tuple(hollow), tuple(loop), tuple(neg), tuple(adj))


def format_graph(g: StabilizerGraph) -> str:
    out = [f"nodes {g.n}"]
    for j in range(g.n):
        parts = [f"node {j}", "hollow" if g.hollow[j] else "solid"]
        if g.loop[j]:
            parts.append("loop")
        if g.neg[j]:
            parts.append("neg")
        out.append(" ".join(parts))
    for i, j in g.edges():
        out.append(f"edge {i} {j}")
    return "\n".join(out) + "\n"


def graph_to_dot(g: StabilizerGraph) -> str:
    out = ["graph stabilizer {", "  node [shape=circle];"]
    for j in range(g.n):
        attrs = []
        if not g.hollow[j]:
            attrs += ["style=filled", "fillcolor=black", "fontcolor=white"]
        if g.neg[j]:
            attrs.append(f'label="{j}−"')
        out.append(f"  {j} [{', '.join(attrs)}];" if attrs else f"  {j};")
    for i, j in g.edges():
        out.append(f"  {i} -- {j};")
    for j in range(g.n):
        if g.loop[j]:
            out.append(f"  {j} -- {j};")
    out.append("}")
    return "\n".join(out) + "\n"


# --- circuits ---------------------------------------------------------------


def parse_circuit(text: str) -> GraphFormCircuit:
    lines = _significant_lines(text)
    try:
        lineno, raw = next(lines)
    except StopIteration:
        raise ParseError("empty circuit description", 1, 1) from None
    toks = _tokens(raw)
    if toks[0][0] != "qubits":
        raise ParseError(f"expected 'qubits <n>' header, got {toks[0][0]!r}", lineno, toks[0][1])
    if len(toks) != 2:
        raise ParseError("header must be exactly 'qubits <n>'", lineno, toks[-1][1])
    n = _int_token(toks[1][0], toks[1][1], lineno, "qubit count")
    if n < 1:
        raise ParseError("qubit count must be positive", lineno, toks[1][1])

    cz: set[tuple[int, int]] = set()
    singles = {"Z": set(), "S": set(), "H": set()}

    def qubit(tok: str, col: int, lineno: int) -> int:
        q = _int_token(tok, col, lineno, "qubit")
        if q >= n:
            raise ParseError(f"qubit {q} out of range for qubits {n}", lineno, col)
        return q

    for lineno, raw in lines:
        toks = _tokens(raw)
        kind, col = toks[0]
        if kind == "CZ":
            if len(toks) != 3:
                raise ParseError("CZ line must be 'CZ <i> <j>'", lineno, col)
            i = qubit(toks[1][0], toks[1][1], lineno)
            j = qubit(toks[2][0], toks[2][1], lineno)
            if i == j:
                raise ParseError("CZ qubits must differ", lineno, toks[1][1])
            pair = (min(i, j), max(i, j))
            if pair in cz:
                raise ParseError(f"duplicate gate line CZ {pair[0]} {pair[1]}", lineno, col)
            cz.add(pair)
        elif kind in singles:
            if len(toks) != 2:
                raise ParseError(f"{kind} line must be '{kind} <i>'", lineno, col)
            q = qubit(toks[1][0], toks[1][1], lineno)
            if q in singles[kind]:
                raise ParseError(f"duplicate gate line {kind} {q}", lineno, col)
            singles[kind].add(q)
        else:
            raise ParseError(f"unknown gate line {kind!r}", lineno, col)
    return GraphFormCircuit(
        n,
        cz=frozenset(cz),
        z_set=frozenset(singles["Z"]),
        s_set=frozenset(singles["S"]),
        h_set=frozenset(singles["H"]),
    )


def format_circuit(c: GraphFormCircuit) -> str:
    out = [f"qubits {c.n}"]
    for i, j in sorted(c.cz):
        out.append(f"CZ {i} {j}")
    for name, group in (("Z", c.z_set), ("S", c.s_set), ("H", c.h_set)):
        for q in sorted(group):
            out.append(f"{name} {q}")
    return "\n".join(out) + "\n"
