"""Three-layer preparation circuits and their stabilizer generators.

Every decorated graph denotes the circuit

    layer 1: H on every qubit of |0...0>
    layer 2: CZ on every edge
    layer 3: per qubit, Z^a then S^b then H^c

where a = 1 on nodes with a negative sign, b = 1 on nodes with a loop and
c = 1 on hollow nodes.  The mapping between graphs and such circuits is a
bijection, and ``generators_from_circuit`` writes down the circuit's
stabilizer generators in closed form: for node j with decorations
(a, b, c) and neighbors N(j),

    g_j = (-1)^(a + b*c) * F_j * prod_{k in N(j)} (X_k if k hollow else Z_k)

with F_j = Y_j when b = 1, else Z_j when c = 1, else X_j.

``generators_by_conjugation`` rebuilds the same generators a second way,
by conjugating the plain graph-state generators X_j Z_N(j) through the
third layer gate by gate.  The two routes are kept separate on purpose so
they can be checked against each other and against the dense simulator.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Tuple

from .graph import StabilizerGraph, _bits
from .pauli import PauliString, conjugate


@dataclass(frozen=True)
class GraphFormCircuit:
    """The canonical three-layer form: H layer, CZ layer, local layer."""

    n: int
    cz: FrozenSet[Tuple[int, int]]
    z_set: FrozenSet[int]
    s_set: FrozenSet[int]
    h_set: FrozenSet[int]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"need at least one qubit, got n={self.n}")
        for i, j in self.cz:
            if not (0 <= i < j < self.n):
                raise ValueError(f"cz pair ({i}, {j}) must satisfy 0 <= i < j < n")
        for name in ("z_set", "s_set", "h_set"):
            for j in getattr(self, name):
                if not 0 <= j < self.n:
                    raise ValueError(f"{name} index {j} out of range")


def graph_from_circuit(c: GraphFormCircuit) -> StabilizerGraph:
    """Read the decorations off a three-layer circuit."""
    return StabilizerGraph.build(
        c.n, edges=c.cz, hollow=c.h_set, loops=c.s_set, neg=c.z_set
    )


def circuit_from_graph(g: StabilizerGraph) -> GraphFormCircuit:
    """Write the graph as its preparation circuit (inverse of the above)."""
    return GraphFormCircuit(
        g.n,
        cz=frozenset(g.edges()),
        z_set=frozenset(j for j in range(g.n) if g.neg[j]),
        s_set=frozenset(j for j in range(g.n) if g.loop[j]),
        h_set=frozenset(j for j in range(g.n) if g.hollow[j]),
    )


def generators_from_circuit(c: GraphFormCircuit) -> tuple[PauliString, ...]:
    """Closed-form stabilizer generators, one per qubit."""
    g = graph_from_circuit(c)
    gens = []
    for j in range(g.n):
        a, b, cc = g.neg[j], g.loop[j], g.hollow[j]
        if b:
            x, z = 1 << j, 1 << j
        elif cc:
            x, z = 0, 1 << j
        else:
            x, z = 1 << j, 0
        for k in _bits(g.adj[j]):
            if g.hollow[k]:
                x |= 1 << k
            else:
                z |= 1 << k
        sign = -1 if (a + (b and cc)) % 2 else 1
        gens.append(PauliString(g.n, x, z, sign))
    return tuple(gens)


def generators_by_conjugation(c: GraphFormCircuit) -> tuple[PauliString, ...]:
    """Same generators via explicit conjugation through the third layer."""
    g = graph_from_circuit(c)
    gens = []
    for j in range(g.n):
        p = PauliString(g.n, 1 << j, g.adj[j], 1)
        for q in sorted(c.z_set):
            p = conjugate(p, "Z", q)
        for q in sorted(c.s_set):
            p = conjugate(p, "S", q)
        for q in sorted(c.h_set):
            p = conjugate(p, "H", q)
        gens.append(p)
    return tuple(gens)
