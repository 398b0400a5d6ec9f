import numpy as np
import pytest
from oracles import boost_matrix, einstein_add, equal_up_to_sign, polar_wigner_angle

from geobch.errors import SuperluminalError
from geobch.kinematics import (
    boost_boost_decompose,
    boost_rotation_split,
    boost_rotor,
    compose_half_velocities,
    compose_velocities,
    full_velocity,
    ga3_vector,
    half_velocity,
    rapidity_to_half_velocity,
    wigner_angle,
    wigner_rho,
)
from geobch.rotors import bch, biv_exp, rotor_log, tanh
from geobch.spacetime import (
    LorentzGenerator,
    bivector_to_generator,
    generator_to_bivector,
    rotor_to_matrix,
    split_even,
    unsplit,
)


def random_velocity(rng, vmax=0.99):
    v = rng.normal(size=3)
    return v / np.linalg.norm(v) * rng.uniform(0, vmax)


def test_half_velocity_examples():
    assert np.array_equal(half_velocity([0, 0, 0]), [0, 0, 0])
    assert np.allclose(half_velocity([0.6, 0, 0]), [1 / 3, 0, 0], atol=1e-16)
    rng = np.random.default_rng(50)
    for _ in range(50):
        b = random_velocity(rng)
        w = half_velocity(b)
        assert np.allclose(full_velocity(w), b, atol=1e-15)
        assert np.linalg.norm(w) == pytest.approx(np.tanh(0.5 * np.arctanh(np.linalg.norm(b))))


@pytest.mark.parametrize("beta", [[1.0, 0, 0], [0.8, 0.8, 0], [np.nan, 0, 0]])
def test_superluminal_rejected(beta):
    with pytest.raises((SuperluminalError, ValueError)):
        half_velocity(beta)


def test_composition_examples():
    w = np.array([1 / 3, 0, 0])
    assert np.array_equal(compose_half_velocities(w, [0, 0, 0]), w)
    assert np.allclose(compose_half_velocities(w, w), [0.6, 0, 0], atol=1e-15)
    assert full_velocity(compose_half_velocities(w, w))[0] == pytest.approx(1.2 / 1.36, abs=1e-15)
    perp = compose_half_velocities(w, [0, 1 / 3, 0])
    assert np.allclose(full_velocity(perp), einstein_add([0.6, 0, 0], [0, 0.6, 0]), atol=1e-15)


def test_composition_matches_velocity_addition():
    rng = np.random.default_rng(51)
    for _ in range(200):
        b1, b2 = random_velocity(rng), random_velocity(rng)
        got = compose_velocities(b1, b2)["beta"]
        assert np.allclose(got, einstein_add(b1, b2), atol=1e-12)


def test_both_orders_give_the_same_speed():
    rng = np.random.default_rng(52)
    for _ in range(50):
        w1, w2 = half_velocity(random_velocity(rng)), half_velocity(random_velocity(rng))
        a, b = full_velocity(compose_half_velocities(w1, w2)), full_velocity(compose_half_velocities(w2, w1))
        assert np.linalg.norm(a) == pytest.approx(np.linalg.norm(b), abs=1e-12)
    assert not np.allclose(a, b)


def test_wigner_angle_formula():
    w1, w2 = np.array([1 / 3, 0, 0]), np.array([0, 1 / 3, 0])
    theta, plane = wigner_angle(w1, w2)
    assert theta == pytest.approx(2 * np.arctan(1 / 9), abs=1e-15)
    assert plane["e12"] == pytest.approx(1.0)
    # printed form in terms of magnitudes and the angle between the boosts
    rng = np.random.default_rng(53)
    for _ in range(20):
        w1, w2 = half_velocity(random_velocity(rng)), half_velocity(random_velocity(rng))
        a, b = np.linalg.norm(w1), np.linalg.norm(w2)
        phi = np.arccos(w1 @ w2 / (a * b))
        assert wigner_angle(w1, w2)[0] == pytest.approx(2 * np.arctan(a * b * np.sin(phi) / (1 + a * b * np.cos(phi))))


def test_wigner_angle_parallel_and_swapped():
    assert wigner_angle([0.2, 0, 0], [0.5, 0, 0]) == (0.0, None)
    w1, w2 = np.array([0.1, 0.3, 0]), np.array([0, -0.2, 0.4])
    t12, p12 = wigner_angle(w1, w2)
    t21, p21 = wigner_angle(w2, w1)
    assert t12 == pytest.approx(t21) and p12.allclose(-p21, atol=1e-15)


def test_wigner_angle_against_polar_decomposition():
    rng = np.random.default_rng(54)
    for _ in range(100):
        b1, b2 = random_velocity(rng, 0.95), random_velocity(rng, 0.95)
        lorentz = boost_matrix(b1) @ boost_matrix(b2)
        theta = compose_velocities(b1, b2)["wigner_angle"]
        assert theta == pytest.approx(polar_wigner_angle(lorentz), abs=1e-9)


def test_small_velocity_limit():
    b = 0.01
    phi = 1.1
    b1, b2 = np.array([b, 0, 0]), b * np.array([np.cos(phi), np.sin(phi), 0])
    theta = compose_velocities(b1, b2)["wigner_angle"]
    assert theta == pytest.approx(polar_wigner_angle(boost_matrix(b1) @ boost_matrix(b2)), rel=1e-6)
    assert theta == pytest.approx(0.5 * b * b * np.sin(phi), rel=1e-3)


def test_decomposition_reconstructs_product():
    rng = np.random.default_rng(55)
    for _ in range(200):
        xi1, xi2 = rng.uniform(-1, 1, 3) * 1.7, rng.uniform(-1, 1, 3) * 1.7
        pair = boost_boost_decompose(xi1, xi2)
        direct = boost_rotor(xi1) * boost_rotor(xi2)
        assert equal_up_to_sign(pair.boost * pair.rotation, direct) < 1e-10
        assert (ga3_vector(pair.w) ^ pair.rho).norm() < 1e-10
        if pair.plane is not None:
            # the boost generator's spatial direction lies in the rotation plane
            assert (ga3_vector(pair.w) ^ split_even(pair.plane)).norm() < 1e-10


def test_decomposition_degenerate_cases():
    xi = np.array([0.4, -0.2, 0.1])
    pair = boost_boost_decompose(xi, np.zeros(3))
    assert pair.boost.allclose(boost_rotor(xi), atol=1e-14)
    assert pair.rotation.allclose(pair.rotation * 0 + 1.0, atol=1e-15)
    pair = boost_boost_decompose([0.3, 0, 0], [0.5, 0, 0])
    assert pair.wigner_angle == 0.0 and pair.plane is None
    assert pair.boost.allclose(boost_rotor([0.8, 0, 0]), atol=1e-14)


def test_coplanar_tanh_identity():
    # tanh of the generator of B R equals w + rho + w rho when w ^ rho = 0
    rng = np.random.default_rng(56)
    for _ in range(50):
        pair = boost_boost_decompose(rng.uniform(-1, 1, 3), rng.uniform(-1, 1, 3))
        sigma_b = generator_to_bivector(bivector_to_generator(rotor_log(pair.boost)))
        sigma_r = rotor_log(pair.rotation)
        t = split_even(tanh(bch(sigma_b, sigma_r)))
        w, rho = ga3_vector(pair.w), pair.rho
        assert t.allclose(w + rho + w * rho, atol=1e-10)


def test_consistency_with_bch_core():
    rng = np.random.default_rng(57)
    for _ in range(100):
        xi1, xi2 = rng.uniform(-1, 1, 3), rng.uniform(-1, 1, 3)
        sigma = bch(unsplit(ga3_vector(0.5 * xi1)), unsplit(ga3_vector(0.5 * xi2)))
        t = split_even(tanh(sigma))
        w1, w2 = rapidity_to_half_velocity(xi1), rapidity_to_half_velocity(xi2)
        w = compose_half_velocities(w1, w2)
        rho = wigner_rho(w1, w2)
        # bivector part of tanh is rho; vector part is w(1 + rho)
        assert t.grade(2).allclose(rho, atol=1e-10)
        assert t.grade(1).allclose((ga3_vector(w) * (1.0 + rho)).grade(1), atol=1e-10)
        assert 2 * np.arctan(t.grade(2).norm()) == pytest.approx(wigner_angle(w1, w2)[0], abs=1e-10)


def test_boost_rotation_split_of_general_rotor():
    rng = np.random.default_rng(58)
    for _ in range(50):
        xi, th = rng.uniform(-1, 1, 3), rng.uniform(-1, 1, 3)
        r = biv_exp(generator_to_bivector(LorentzGenerator(xi, th)))
        b, rot = boost_rotation_split(r)
        assert (b * rot).allclose(r, atol=1e-12)
        assert bivector_to_generator(rotor_log(b)).is_pure_boost(1e-12)
        assert np.abs(rotor_to_matrix(rot)[0, 1:]).max() < 1e-12
