import numpy as np
import pytest
from oracles import exp_series, rodrigues_matrix

from geobch.algebra import Multivector, Signature, basis_vector, basis_vectors, pseudoscalar, reverse
from geobch.errors import GradeError, NoRootError, NotARotorError, PiRotationError, SignatureError
from geobch.rotors import (
    apply_rotor,
    atanh,
    biv_exp,
    bivector_to_rodrigues,
    check_rotor,
    invariant_decomposition,
    is_rotor,
    normalize_bivector,
    random_bivector,
    reflect,
    rodrigues_to_bivector,
    rotor_log,
    tanh,
)

BIVECTOR_SIGNATURES = [Signature(p, n - p) for n in range(2, 5) for p in range(n + 1)]
STA = Signature(1, 3)


@pytest.mark.parametrize("sig", BIVECTOR_SIGNATURES, ids=str)
def test_exp_matches_power_series(sig):
    rng = np.random.default_rng(10)
    for _ in range(10):
        s = random_bivector(sig, rng)
        assert biv_exp(s).allclose(exp_series(s), atol=1e-12)


@pytest.mark.parametrize("sig", BIVECTOR_SIGNATURES, ids=str)
def test_exp_is_a_rotor(sig):
    rng = np.random.default_rng(11)
    for _ in range(10):
        r = biv_exp(random_bivector(sig, rng, -2, 2))
        assert is_rotor(r)


def test_null_bivector_exp():
    e0, e1, _, _ = basis_vectors(STA)
    null = (e0 + e1) * basis_vector(STA, 2)  # squares to zero
    assert (null * null).allclose(Multivector.zero(STA))
    assert biv_exp(null).allclose(1.0 + null, atol=1e-15)
    assert tanh(null).allclose(null, atol=1e-15)
    assert rotor_log(biv_exp(null)).allclose(null, atol=1e-15)


def test_tanh_atanh_inverse():
    rng = np.random.default_rng(12)
    for _ in range(20):
        s = random_bivector(STA, rng, -0.5, 0.5)
        assert atanh(tanh(s)).allclose(s, atol=1e-12)


def test_normalizer():
    rng = np.random.default_rng(13)
    for _ in range(20):
        s = random_bivector(STA, rng)
        n, hat = normalize_bivector(s)
        assert n.alpha >= 0.0
        assert (hat * hat).allclose(Multivector.scalar(STA, 1.0), atol=1e-12)
        assert (n * hat).allclose(s, atol=1e-13)


def test_normalizer_of_euclidean_bivector_is_pseudoscalar_multiple():
    e1, e2, _ = basis_vectors(Signature(3))
    n, hat = normalize_bivector(e1 * e2 * 0.7)
    assert n.alpha == pytest.approx(0.0, abs=1e-15) and n.beta == pytest.approx(0.7)
    assert hat.grades_present(1e-15) == {1}


def test_normalizer_missing_in_split_signature():
    e = basis_vectors(Signature(2, 2))
    # (u, v) idempotent components of the square have opposite signs
    s = e[0] * e[1] * 1.0 + e[2] * e[3] * 0.5 + e[0] * e[2] * 0.3
    with pytest.raises(NoRootError):
        normalize_bivector(s)


def test_invariant_decomposition():
    rng = np.random.default_rng(14)
    for _ in range(20):
        s = random_bivector(STA, rng)
        plus, minus = invariant_decomposition(s)
        assert (plus + minus).allclose(s, atol=1e-13)
        assert (plus * minus).allclose(minus * plus, atol=1e-13)
        assert (plus * plus).coeffs[0] >= -1e-14
        assert (minus * minus).coeffs[0] <= 1e-14
        assert abs((plus * plus).coeffs[15]) < 1e-13 and abs((minus * minus).coeffs[15]) < 1e-13
    with pytest.raises(SignatureError):
        invariant_decomposition(random_bivector(Signature(3), rng))


def test_equivalent_generators_share_a_rotor():
    s0 = random_bivector(STA, np.random.default_rng(15), -0.4, 0.4)
    _, hat = normalize_bivector(s0)
    ihat = pseudoscalar(STA) * hat
    for n in range(-3, 4):
        r = biv_exp(s0 + ihat * (n * np.pi))
        assert r.allclose(biv_exp(s0) * (-1) ** n, atol=1e-12)


def test_log_of_pi_rotation():
    e1, e2, _ = basis_vectors(Signature(3))
    with pytest.raises(PiRotationError):
        rotor_log(e1 * e2)


def test_log_rejects_non_rotor():
    e1, e2, _ = basis_vectors(Signature(3))
    with pytest.raises(NotARotorError):
        rotor_log(e1 * e2 + 2.0)
    with pytest.raises(NotARotorError):
        check_rotor(e1)


def test_log_drops_overall_sign():
    s = random_bivector(STA, np.random.default_rng(16), -0.5, 0.5)
    assert rotor_log(-biv_exp(s)).allclose(s, atol=1e-12)


def test_double_sided_action_preserves_products():
    rng = np.random.default_rng(17)
    r = biv_exp(random_bivector(STA, rng))
    a = Multivector(STA, rng.uniform(-1, 1, 16))
    b = Multivector(STA, rng.uniform(-1, 1, 16))
    assert apply_rotor(r, a * b).allclose(apply_rotor(r, a) * apply_rotor(r, b), atol=1e-11)


def test_two_reflections_make_a_rotation():
    sig = Signature(3)
    e1, e2, e3 = basis_vectors(sig)
    m = (e1 + e2) / np.sqrt(2.0)
    x = e1 * 0.3 + e3 * 2.0
    twice = reflect(m, reflect(e1, x))
    r = m * e1
    assert twice.allclose(r * x * reverse(r), atol=1e-14)
    assert reflect(e1, e1).allclose(-e1)
    with pytest.raises(GradeError):
        reflect(e1 * e2, x)
    with pytest.raises(ValueError):
        reflect(e1 * 2.0, x)


def test_rodrigues_vectors_roundtrip_and_sense():
    r = np.array([0.2, -0.5, 0.9])
    s = rodrigues_to_bivector(r)
    assert np.allclose(bivector_to_rodrigues(s), r, atol=1e-15)
    # the rotor turns vectors like the matrix oracle does
    sig = Signature(3)
    rot = biv_exp(s)
    m = rodrigues_matrix(r)
    for j, e in enumerate(basis_vectors(sig)):
        image = rot * e * reverse(rot)
        assert np.allclose(image.coeffs[[1, 2, 4]], m[:, j], atol=1e-14)
