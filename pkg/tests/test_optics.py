import itertools
import math

import numpy as np
import pytest

from _oracles import naive_permanent
from hardysim.fock import FockState, apply_creation, norm_sq, vacuum
from hardysim.optics import (BeamSplitter, InterferometerNetwork, PhaseShifter, compose,
                             element_unitary, evolve, evolve_two_photon_direct, permanent,
                             random_network)


def random_two_photon_state(rng, n_modes=4):
    occs = [occ for occ in itertools.product(range(3), repeat=n_modes) if sum(occ) == 2]
    picks = rng.choice(len(occs), size=4, replace=False)
    terms = {occs[k]: complex(rng.normal(), rng.normal()) for k in picks}
    state = FockState(n_modes, terms)
    return state * (1 / math.sqrt(norm_sq(state)))


class TestElementUnitary:
    def test_transmitting(self):
        np.testing.assert_allclose(element_unitary(BeamSplitter(0, 1, math.pi / 2), 2), np.eye(2), atol=1e-15)

    def test_reflecting(self):
        np.testing.assert_allclose(element_unitary(BeamSplitter(0, 1, 0), 2), [[0, 1j], [1j, 0]])

    def test_phase_sign(self):
        np.testing.assert_allclose(element_unitary(PhaseShifter(0, math.pi / 2), 2), [[-1j, 0], [0, 1]],
                                   atol=1e-15)

    def test_invalid_modes(self):
        with pytest.raises(ValueError):
            element_unitary(BeamSplitter(0, 3, 0.1), 2)
        with pytest.raises(ValueError):
            BeamSplitter(1, 1, 0.1)

    def test_splitting_ratios(self):
        bs = BeamSplitter(0, 1, 0.3)
        assert bs.transmittance + bs.reflectivity == pytest.approx(1.0)
        assert bs.transmittance == pytest.approx(math.sin(0.3) ** 2)


class TestCompose:
    def test_two_balanced_splitters(self):
        bs = BeamSplitter(0, 1, math.pi / 4)
        V = element_unitary(bs, 2)
        total = compose(InterferometerNetwork(2, (bs, bs)))
        np.testing.assert_allclose(total, V @ V, atol=1e-15)
        np.testing.assert_allclose(total, [[0, 1j], [1j, 0]], atol=1e-15)

    def test_order_is_first_element_first(self):
        bs, ps = BeamSplitter(0, 1, 0.4), PhaseShifter(0, 1.1)
        total = compose(InterferometerNetwork(2, (bs, ps)))
        np.testing.assert_allclose(total, element_unitary(ps, 2) @ element_unitary(bs, 2))

    def test_identity_network(self):
        net = InterferometerNetwork(3, (PhaseShifter(0, 0.0), BeamSplitter(1, 2, math.pi / 2)))
        np.testing.assert_allclose(compose(net), np.eye(3), atol=1e-15)

    def test_empty_network(self):
        with pytest.raises(ValueError):
            compose(InterferometerNetwork(2, ()))

    def test_network_rejects_bad_modes(self):
        with pytest.raises(ValueError):
            InterferometerNetwork(2, (PhaseShifter(5, 0.1),))

    def test_unitarity_random(self, rng):
        for _ in range(100):
            net = random_network(rng, int(rng.integers(2, 6)), int(rng.integers(1, 13)))
            V = compose(net)
            assert np.abs(V @ V.conj().T - np.eye(net.n_modes)).max() <= 1e-12


class TestPermanent:
    @pytest.mark.parametrize("matrix, expected", [
        (np.eye(2), 1),
        (np.ones((2, 2)), 2),
        (np.ones((3, 3)), 6),
        ([[4.2]], 4.2),
    ])
    def test_small(self, matrix, expected):
        assert permanent(matrix) == pytest.approx(expected)

    def test_non_square(self):
        with pytest.raises(ValueError):
            permanent(np.ones((2, 3)))

    def test_against_permutation_sum(self, rng):
        for n in range(1, 7):
            for _ in range(5):
                A = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
                ref = naive_permanent(A)
                assert abs(permanent(A) - ref) <= 1e-10 * max(1.0, abs(ref))


class TestEvolve:
    def test_single_photon_balanced(self):
        V = element_unitary(BeamSplitter(0, 1, math.pi / 4), 2)
        out = evolve(V, FockState.basis((1, 0)))
        assert out[(1, 0)] == pytest.approx(1 / math.sqrt(2))
        assert out[(0, 1)] == pytest.approx(1j / math.sqrt(2))

    def test_hong_ou_mandel(self):
        V = element_unitary(BeamSplitter(0, 1, math.pi / 4), 2)
        out = evolve(V, FockState.basis((1, 1)))
        assert abs(out.get((1, 1))) <= 1e-14
        assert out[(2, 0)] == pytest.approx(1j / math.sqrt(2))
        assert out[(0, 2)] == pytest.approx(1j / math.sqrt(2))

    def test_hong_ou_mandel_brute_force(self):
        # a† -> (a† + i b†)/√2, b† -> (i a† + b†)/√2, expanded by hand
        s = 1 / math.sqrt(2)
        expected = {(2, 0): 1j * s * s * math.sqrt(2), (0, 2): 1j * s * s * math.sqrt(2),
                    (1, 1): s * s + (1j * s) ** 2}
        out = evolve(element_unitary(BeamSplitter(0, 1, math.pi / 4), 2), FockState.basis((1, 1)))
        for occ, amp in expected.items():
            assert abs(out.get(occ) - amp) <= 1e-14

    def test_vacuum_passes_through(self, rng):
        V = compose(random_network(rng, 3, 5))
        assert dict(evolve(V, vacuum(3))) == {(0, 0, 0): 1}

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            evolve(np.eye(3), vacuum(2))

    def test_norm_and_photon_number_conserved(self, rng):
        for _ in range(50):
            V = compose(random_network(rng, 4, 10))
            psi = random_two_photon_state(rng)
            out = evolve(V, psi)
            assert abs(norm_sq(out) - norm_sq(psi)) <= 1e-12
            assert out.photon_numbers() == {2}

    def test_three_photons_norm(self, rng):
        V = compose(random_network(rng, 4, 12))
        psi = FockState.basis((2, 0, 1, 0))
        assert abs(norm_sq(evolve(V, psi)) - 1) <= 1e-12


class TestDirectExpansion:
    def test_identity(self):
        assert dict(evolve_two_photon_direct(np.eye(4), (0, 2))) == {(1, 0, 1, 0): 1}

    def test_identity_double_occupation(self):
        out = evolve_two_photon_direct(np.eye(3), (0, 0))
        assert out[(2, 0, 0)] == pytest.approx(math.sqrt(2))

    def test_invalid_modes(self):
        with pytest.raises(ValueError):
            evolve_two_photon_direct(np.eye(4), (0, 4))
        with pytest.raises(ValueError):
            evolve_two_photon_direct(np.eye(4), (0, 1, 2))

    @pytest.mark.parametrize("modes", [(0, 2), (1, 1), (3, 0)])
    def test_matches_permanent_route(self, rng, modes):
        for _ in range(100):
            V = compose(random_network(rng, 4, 12))
            state = vacuum(4)
            for m in modes:
                state = apply_creation(state, m)
            a, b = evolve(V, state), evolve_two_photon_direct(V, modes)
            for occ in set(a) | set(b):
                assert abs(a.get(occ) - b.get(occ)) <= 1e-12
