"""Tests for the dense statevector reference implementation.

The oracle must itself be trustworthy, so it is pinned here against
hand-written amplitudes and against the kron-built unitaries from
``tests/helpers.py`` — a third, entirely independent construction.
"""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import gate_unitary, pauli_matrix
from stabgraph import (
    PauliString,
    StabilizerGraph,
    Statevector,
    apply_gate_dense,
    apply_pauli,
    circuit_from_graph,
    is_reduced,
    random_graph,
    random_reduced_graph,
    stabilizer_check,
    statevector_from_circuit,
    statevector_from_graph,
    states_equal_up_to_global_phase,
)

G = StabilizerGraph.build
INV_SQRT2 = 1 / np.sqrt(2.0)


class TestStatevectorType:
    def test_rejects_unnormalized(self):
        with pytest.raises(ValueError):
            Statevector(np.array([1.0, 1.0], dtype=complex))

    def test_rejects_non_power_of_two(self):
        with pytest.raises(ValueError):
            Statevector(np.array([1.0, 0, 0], dtype=complex))

    def test_qubit_count_cap(self):
        with pytest.raises(ValueError):
            statevector_from_graph(StabilizerGraph.empty(13))


class TestGraphStates:
    def test_plus_state(self):
        v = statevector_from_graph(G(1))
        assert np.allclose(v.amps, [INV_SQRT2, INV_SQRT2])

    def test_zero_and_one(self):
        assert np.allclose(statevector_from_graph(G(1, hollow=[0])).amps, [1, 0])
        assert np.allclose(
            statevector_from_graph(G(1, hollow=[0], neg=[0])).amps, [0, 1]
        )

    def test_loop_gives_s_plus(self):
        v = statevector_from_graph(G(1, loops=[0]))
        assert np.allclose(v.amps, [INV_SQRT2, INV_SQRT2 * 1j])

    def test_qubit_zero_is_the_most_significant_bit(self):
        # |1> on qubit 0 and |+> on qubit 1: weight must sit on the
        # upper half of the amplitude vector.
        v = statevector_from_graph(G(2, hollow=[0], neg=[0]))
        assert np.allclose(v.amps, [0, 0, INV_SQRT2, INV_SQRT2])

    def test_bell(self):
        v = statevector_from_graph(G(2, edges=[(0, 1)], hollow=[1]))
        assert np.allclose(v.amps, [INV_SQRT2, 0, 0, INV_SQRT2])

    def test_ghz(self):
        v = statevector_from_graph(G(3, edges=[(0, 1), (0, 2)], hollow=[1, 2]))
        expect = np.zeros(8)
        expect[0] = expect[7] = INV_SQRT2
        assert np.allclose(v.amps, expect)

    def test_graph_and_circuit_routes_agree(self):
        for seed in range(40):
            g = random_graph(4, seed)
            assert np.allclose(
                statevector_from_graph(g).amps,
                statevector_from_circuit(circuit_from_graph(g)).amps,
            )


class TestApplyGateDense:
    @pytest.mark.parametrize("gate", ["H", "S", "Z"])
    def test_single_qubit_against_kron(self, gate):
        for seed in range(10):
            g = random_graph(3, seed)
            v = statevector_from_graph(g)
            for q in range(3):
                expect = gate_unitary(3, gate, q) @ v.amps
                assert np.allclose(apply_gate_dense(v, gate, q).amps, expect)

    def test_cz_against_kron(self):
        for seed in range(10):
            v = statevector_from_graph(random_graph(3, seed))
            for a in range(3):
                for b in range(3):
                    if a != b:
                        expect = gate_unitary(3, "CZ", a, b) @ v.amps
                        assert np.allclose(
                            apply_gate_dense(v, "CZ", a, b).amps, expect
                        )

    def test_rejects_unknown_gate(self):
        v = statevector_from_graph(G(1))
        with pytest.raises(ValueError):
            apply_gate_dense(v, "T", 0)


class TestApplyPauli:
    def test_against_dense_matrix(self):
        for label in ("+X", "-Y", "+Z"):
            p = PauliString.from_label(label)
            for amps in ([1, 0], [0, 1], [INV_SQRT2, INV_SQRT2 * 1j]):
                v = Statevector(np.array(amps, dtype=complex))
                expect = pauli_matrix(p) @ v.amps
                assert np.allclose(apply_pauli(v, p).amps, expect)

    def test_multi_qubit_string(self):
        p = PauliString.from_label("-XZY")
        v = statevector_from_graph(random_graph(3, seed=5))
        assert np.allclose(apply_pauli(v, p).amps, pauli_matrix(p) @ v.amps)

    @settings(max_examples=60)
    @given(st.integers(0, 10**6))
    def test_pauli_squares_to_identity(self, seed):
        import random as _random

        rng = _random.Random(seed)
        n = rng.randrange(1, 5)
        p = PauliString(
            n, rng.getrandbits(n), rng.getrandbits(n), rng.choice((1, -1))
        )
        v = statevector_from_graph(random_graph(n, seed))
        assert np.allclose(apply_pauli(apply_pauli(v, p), p).amps, v.amps)


class TestComparisons:
    def test_global_phase_is_ignored(self):
        v = statevector_from_graph(G(2, edges=[(0, 1)]))
        w = Statevector(v.amps * np.exp(0.37j))
        assert states_equal_up_to_global_phase(v, w)

    def test_orthogonal_states_differ(self):
        assert not states_equal_up_to_global_phase(
            statevector_from_graph(G(1, hollow=[0])),
            statevector_from_graph(G(1, hollow=[0], neg=[0])),
        )

    def test_tolerance_is_honoured(self):
        v = statevector_from_graph(G(1))
        w = Statevector(np.array([np.sqrt(1 - 1e-4), np.sqrt(1e-4)], dtype=complex))
        assert not states_equal_up_to_global_phase(v, w)
        assert states_equal_up_to_global_phase(v, w, tol=0.5)

    def test_stabilizer_check(self):
        v = statevector_from_graph(G(2, edges=[(0, 1)], hollow=[1]))
        good = [PauliString.from_label("+XX"), PauliString.from_label("+ZZ")]
        bad = [PauliString.from_label("-XX")]
        assert stabilizer_check(v, good)
        assert not stabilizer_check(v, bad)


class TestRandomGraphs:
    def test_deterministic_in_the_seed(self):
        assert random_graph(5, 123) == random_graph(5, 123)
        assert random_graph(5, 123) != random_graph(5, 124)

    def test_reduced_sampler_is_reduced(self):
        for seed in range(120):
            assert is_reduced(random_reduced_graph(4, seed))

    def test_samplers_cover_decorations(self):
        seen_hollow = seen_loop = seen_neg = False
        for seed in range(40):
            g = random_graph(4, seed)
            seen_hollow |= any(g.hollow)
            seen_loop |= any(g.loop)
            seen_neg |= any(g.neg)
        assert seen_hollow and seen_loop and seen_neg
