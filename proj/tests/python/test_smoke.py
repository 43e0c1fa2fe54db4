"""Smoke tests for the planarsq python module."""

import math

import numpy as np
import pytest

import planarsq as pq


def test_bound_values():
    assert pq.cj_exact(0.5).c_exact == pytest.approx(0.25, abs=1e-10)
    assert pq.cj_exact(1.0).c_exact == pytest.approx(7.0 / 16.0, abs=1e-10)
    assert pq.cj_exact(10.0).c_exact == pytest.approx(2.445, abs=1e-3)
    assert pq.cj_exact(50.0).c_exact == pytest.approx(7.503, abs=1e-3)


def test_direct_matches_exact():
    exact = pq.cj_exact(1.5).c_exact
    assert pq.cj_direct(1.5, restarts=5) == pytest.approx(exact, rel=1e-6)


def test_asymptotic_fit():
    assert pq.cj_asymptotic(5.0) == pytest.approx(1.48293, abs=1e-4)
    with pytest.raises(ValueError):
        pq.cj_asymptotic(0.0)


def test_state_and_moments_numpy_interop():
    result = pq.cj_exact(2.0)
    amp = result.optimal_state.amplitudes
    assert amp.dtype == np.complex128
    assert np.linalg.norm(amp) == pytest.approx(1.0, abs=1e-12)
    m = result.optimal_moments
    assert m.planar_sum == pytest.approx(result.c_exact, abs=1e-9)
    assert m.mean[1] == pytest.approx(0.0, abs=1e-10)

    up = pq.SpinState.basis_state(2.0, 2.0)
    assert pq.moments(up).planar_sum == pytest.approx(2.0, abs=1e-12)


def test_rotation_invariance():
    state = pq.cj_exact(3.0).optimal_state
    rotated = pq.rotate_about_z(state, 0.7)
    assert pq.moments(rotated).planar_sum == pytest.approx(
        pq.moments(state).planar_sum, abs=1e-10
    )


def test_operator_set():
    ops = pq.build_operator_set(0.5)
    jx = ops.jx()
    assert jx[0, 1] == pytest.approx(0.5)
    assert np.allclose(ops.jz(), np.diag([-0.5, 0.5]))


def test_bec_critical_point():
    ratio, planar = pq.critical_coupling(20)
    assert planar == pytest.approx(pq.cj_exact(10.0).c_exact, rel=1e-6)
    gs = pq.bec_ground_state(20, -1.0, -20.0 / ratio)
    assert pq.moments(gs).planar_sum == pytest.approx(planar, rel=1e-6)


def test_variance_scan():
    points = pq.variance_scan(10, -3.0, -1.0, 5)
    assert len(points) == 5
    assert points[0].ratio == -3.0
    for p in points:
        assert p.planar_sum == pytest.approx(p.var_x + p.var_y)


def test_phase_noise():
    m = pq.cj_exact(50.0).optimal_moments
    dphi = pq.phase_uncertainty(m, math.pi / 2)
    assert dphi < 0.1  # beats the coherent 1/sqrt(N)
    with pytest.raises(pq.InsensitivePointError):
        pq.phase_uncertainty(m, 0.0)
    assert pq.noise_bound(m) == pytest.approx(m.planar_sum)


def test_output_distribution():
    state = pq.SpinState.basis_state(1.0, 1.0)
    dist = pq.output_distribution(state, phi=0.3, theta=0.1)
    assert dist.probabilities.sum() == pytest.approx(1.0, abs=1e-12)
    assert set(np.round(dist.outcomes).tolist()) == {-2.0, 0.0, 2.0}


def test_entanglement_witness():
    singlet = pq.singlet_state(0.5)
    signs = pq.SignConfig.all_plus(2)
    assert pq.s2(singlet, signs) == pytest.approx(0.0, abs=1e-10)
    assert pq.witness(0.0, 2, 1.0) == "Entangled"
    assert pq.werner_s2_closed(0.5, 2, 1.0) == pytest.approx(1.0)
    assert pq.noise_threshold(0.5) == pytest.approx(0.5, abs=1e-10)
    rho = pq.werner_state(0.5, 2, 0.3)
    assert rho.is_density
    assert pq.s2(rho, signs) == pytest.approx(0.3, abs=1e-10)


def test_invalid_spin_raises():
    with pytest.raises(ValueError):
        pq.cj_exact(0.3)
