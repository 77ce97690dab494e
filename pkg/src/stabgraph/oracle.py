"""Brute-force statevector cross-checks for the graph engine.

Everything here works on dense complex amplitude vectors so that graph
rewrites, closed-form generators and conversions can all be validated
against plain linear algebra.  Qubit 0 is the most significant bit of the
amplitude index, i.e. basis state |q0 q1 ... q_{n-1}> sits at index
q0*2^(n-1) + ... + q_{n-1}.

Simulation is deliberately independent of the rewrite rules: circuits are
executed gate by gate and nothing in this module consults the closed-form
generator formulas.  Sizes are capped (default 12 qubits) because vectors
grow as 2^n.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .circuit import GraphFormCircuit, circuit_from_graph
from .graph import StabilizerGraph
from .pauli import GATE_ARITY, PauliString

MAX_QUBITS = 12
DEFAULT_TOL = 1e-9
_INV_SQRT2 = 2.0**-0.5


@dataclass(frozen=True, eq=False)
class Statevector:
    """A normalized dense state on n qubits (2^n complex amplitudes)."""

    amps: np.ndarray

    def __post_init__(self) -> None:
        amps = np.asarray(self.amps, dtype=complex)
        object.__setattr__(self, "amps", amps)
        if amps.ndim != 1 or amps.size == 0 or amps.size & (amps.size - 1):
            raise ValueError("amplitude count must be a power of two")
        if abs(np.linalg.norm(amps) - 1.0) > DEFAULT_TOL:
            raise ValueError("state is not normalized")

    @property
    def n(self) -> int:
        return self.amps.size.bit_length() - 1


def _qubit_bit(n: int, q: int) -> np.ndarray:
    idx = np.arange(1 << n)
    return (idx >> (n - 1 - q)) & 1


def apply_gate_dense(v: Statevector, gate: str, *targets: int) -> Statevector:
    """Apply H, S, Z or CZ to a dense state."""
    arity = GATE_ARITY.get(gate)
    if arity is None:
        raise ValueError(f"unknown gate {gate!r}")
    if len(targets) != arity:
        raise ValueError(f"{gate} takes {arity} target(s), got {len(targets)}")
    n = v.n
    for t in targets:
        if not 0 <= t < n:
            raise ValueError(f"target {t} out of range for n={n}")
    amps = v.amps.copy()
    if gate == "H":
        (t,) = targets
        tens = amps.reshape([2] * n)
        lo = tens.take(0, axis=t)
        hi = tens.take(1, axis=t)
        tens = np.stack(((lo + hi) * _INV_SQRT2, (lo - hi) * _INV_SQRT2), axis=t)
        amps = tens.reshape(-1)
    elif gate == "S":
        (t,) = targets
        amps[_qubit_bit(n, t) == 1] *= 1j
    elif gate == "Z":
        (t,) = targets
        amps[_qubit_bit(n, t) == 1] *= -1
    else:  # CZ
        a, b = targets
        if a == b:
            raise ValueError("CZ targets must differ")
        amps[(_qubit_bit(n, a) & _qubit_bit(n, b)) == 1] *= -1
    return Statevector(amps)


def statevector_from_circuit(
    c: GraphFormCircuit, max_qubits: int = MAX_QUBITS
) -> Statevector:
    """Execute the three-layer circuit on |0...0>."""
    n = c.n
    if n > max_qubits:
        raise ValueError(f"n={n} exceeds the dense-simulation cap of {max_qubits}")
    # Layer 1 analytically: uniform superposition.
    amps = np.full(1 << n, _INV_SQRT2**n, dtype=complex)
    # Layers 2 and 3 up to the terminal Hadamards are diagonal.
    for a, b in sorted(c.cz):
        amps[(_qubit_bit(n, a) & _qubit_bit(n, b)) == 1] *= -1
    for q in sorted(c.z_set):
        amps[_qubit_bit(n, q) == 1] *= -1
    for q in sorted(c.s_set):
        amps[_qubit_bit(n, q) == 1] *= 1j
    v = Statevector(amps)
    for q in sorted(c.h_set):
        v = apply_gate_dense(v, "H", q)
    return v


def statevector_from_graph(
    g: StabilizerGraph, max_qubits: int = MAX_QUBITS
) -> Statevector:
    return statevector_from_circuit(circuit_from_graph(g), max_qubits)


def apply_pauli(v: Statevector, p: PauliString) -> Statevector:
    """Act with a signed Pauli operator on a dense state."""
    n = v.n
    if p.n != n:
        raise ValueError(f"size mismatch: state has {n} qubits, operator {p.n}")
    idx = np.arange(1 << n)
    parity = np.zeros(1 << n, dtype=np.int64)
    x_idx = 0
    for q in range(n):
        pos = n - 1 - q
        if (p.z >> q) & 1:
            parity ^= (idx >> pos) & 1
        if (p.x >> q) & 1:
            x_idx |= 1 << pos
    overall = p.sign * (1, 1j, -1, -1j)[(p.x & p.z).bit_count() % 4]
    out = np.empty_like(v.amps)
    out[idx ^ x_idx] = overall * np.where(parity, -1.0, 1.0) * v.amps
    return Statevector(out)


def states_equal_up_to_global_phase(
    v1: Statevector, v2: Statevector, tol: float = DEFAULT_TOL
) -> bool:
    """True when |<v1|v2>| >= 1 - tol."""
    if v1.n != v2.n:
        raise ValueError(f"size mismatch: {v1.n} vs {v2.n}")
    return abs(np.vdot(v1.amps, v2.amps)) >= 1.0 - tol


def stabilizer_check(
    v: Statevector, gens: Iterable[PauliString], tol: float = DEFAULT_TOL
) -> bool:
    """True when every generator fixes the state: g|v> == |v> within tol."""
    for g in gens:
        if np.max(np.abs(apply_pauli(v, g).amps - v.amps)) > tol:
            return False
    return True


def random_graph(n: int, seed: int) -> StabilizerGraph:
    """Deterministic random graph: each decoration bit and edge is a coin."""
    if n < 1:
        raise ValueError(f"need at least one node, got n={n}")
    rng = random.Random(seed)
    hollow = tuple(rng.random() < 0.5 for _ in range(n))
    loop = tuple(rng.random() < 0.5 for _ in range(n))
    neg = tuple(rng.random() < 0.5 for _ in range(n))
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < 0.5:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return StabilizerGraph(n, hollow, loop, neg, tuple(adj))


def random_reduced_graph(n: int, seed: int) -> StabilizerGraph:
    """Like random_graph, then repaired so the reduced invariant holds:
    loops are cleared from hollow nodes and hollow-hollow edges removed."""
    g = random_graph(n, seed)
    loop = tuple(g.loop[j] and not g.hollow[j] for j in range(n))
    adj = list(g.adj)
    for i in range(n):
        if g.hollow[i]:
            for j in range(i + 1, n):
                if g.hollow[j] and (adj[i] >> j) & 1:
                    adj[i] ^= 1 << j
                    adj[j] ^= 1 << i
    return StabilizerGraph(n, g.hollow, loop, g.neg, tuple(adj))
