"""Shared helpers for the test suite.

Everything here is deliberately independent of the package's own rewrite
machinery: the dense matrices are built from first principles with numpy
krons so they can serve as an oracle for the bit-twiddling code under
test.  Qubit 0 is the leftmost tensor factor (most significant bit of
the amplitude index), matching the package convention.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterable, Iterator, List, Tuple

import numpy as np

from stabgraph import PauliString, StabilizerGraph

ONE_QUBIT = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.diag([1.0 + 0j, -1.0]),
    "H": np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2.0),
    "S": np.diag([1.0 + 0j, 1j]),
}


def gate_unitary(n: int, gate: str, *targets: int) -> np.ndarray:
    """Full 2^n x 2^n unitary for a named gate on the given qubits."""
    if gate == "CZ":
        a, b = targets
        idx = np.arange(2**n)
        hit = ((idx >> (n - 1 - a)) & 1) & ((idx >> (n - 1 - b)) & 1)
        return np.diag(np.where(hit == 1, -1.0 + 0j, 1.0 + 0j))
    (q,) = targets
    full = np.eye(1, dtype=complex)
    for c in range(n):
        full = np.kron(full, ONE_QUBIT[gate] if c == q else ONE_QUBIT["I"])
    return full


def pauli_matrix(p: PauliString) -> np.ndarray:
    """Dense matrix of a signed Pauli string, built letter by letter."""
    full = np.eye(1, dtype=complex)
    for q in range(p.n):
        full = np.kron(full, ONE_QUBIT[p.letter(q)])
    return p.sign * full


def adjacency_masks(n: int, edges: Iterable[Tuple[int, int]]) -> Tuple[int, ...]:
    adj = [0] * n
    for i, j in edges:
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    return tuple(adj)


def decorations(
    n: int, edges: List[Tuple[int, int]], *, reduced: bool = False
) -> Iterator[StabilizerGraph]:
    """Every decoration of a fixed edge set; 8^n graphs, fewer if reduced.

    With ``reduced=True`` only decorations valid in reduced form are
    produced: no loops on hollow nodes and no edge between two hollow
    nodes.
    """
    adj = adjacency_masks(n, edges)
    for hollow in itertools.product((False, True), repeat=n):
        if reduced and any(hollow[i] and hollow[j] for i, j in edges):
            continue
        for loop in itertools.product((False, True), repeat=n):
            if reduced and any(h and l for h, l in zip(hollow, loop)):
                continue
            for neg in itertools.product((False, True), repeat=n):
                yield StabilizerGraph(n, hollow, loop, neg, adj)


def random_edge_sets(n: int, count: int, seed: int) -> List[List[Tuple[int, int]]]:
    """``count`` independent edge sets on n nodes, each edge a fair coin."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        out.append(
            [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
        )
    return out


def scrambled_group(n: int, seed: int):
    """A valid generator matrix with no special row structure.

    Starts from the closed-form generators of a random graph (known
    good), then mixes rows by multiplication and shuffles them, which
    preserves the group but destroys any echelon shape.
    """
    from stabgraph import (
        GeneratorMatrix,
        generator_matrix_from_graph,
        multiply,
        random_graph,
    )

    rng = random.Random(seed)
    rows = list(generator_matrix_from_graph(random_graph(n, seed)).rows)
    for _ in range(2 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        if i != j:
            rows[i] = multiply(rows[i], rows[j])
    rng.shuffle(rows)
    return GeneratorMatrix(n, tuple(rows))
