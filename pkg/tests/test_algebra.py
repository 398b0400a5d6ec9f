import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from geobch.algebra import (
    Multivector,
    Signature,
    anticommutator_product,
    basis_vector,
    basis_vectors,
    commutator_product,
    even_part,
    grade_project,
    involute,
    is_homogeneous,
    pseudoscalar,
    random_multivector,
    require_bivector,
    reverse,
    wedge,
)
from geobch.errors import GradeError, SignatureError

ALL_SIGNATURES = [Signature(p, q) for n in range(1, 5) for p in range(n + 1) for q in [n - p]]
coeff = st.floats(-1, 1, allow_nan=False)


def mv(sig, values):
    return Multivector(sig, values)


@pytest.mark.parametrize("sig", ALL_SIGNATURES, ids=str)
def test_basis_vectors_square_to_metric(sig):
    for i, e in enumerate(basis_vectors(sig)):
        expected = 1.0 if i < sig.p else -1.0
        assert (e * e).allclose(Multivector.scalar(sig, expected))


@pytest.mark.parametrize("sig", ALL_SIGNATURES, ids=str)
def test_distinct_basis_vectors_anticommute(sig):
    for a, b in itertools.combinations(basis_vectors(sig), 2):
        assert (a * b + b * a).allclose(Multivector.zero(sig))


@pytest.mark.parametrize("sig", ALL_SIGNATURES, ids=str)
def test_associativity(sig):
    rng = np.random.default_rng(3)
    for _ in range(20):
        a, b, c = (random_multivector(sig, rng) for _ in range(3))
        assert ((a * b) * c).allclose(a * (b * c), atol=1e-12)


@pytest.mark.parametrize("sig", ALL_SIGNATURES, ids=str)
def test_vector_square_is_quadratic_form(sig):
    rng = np.random.default_rng(4)
    for _ in range(20):
        v = random_multivector(sig, rng, grades=[1])
        sq = v * v
        vals = np.array([v.coeffs[1 << i] for i in range(sig.n)])
        assert sq.allclose(Multivector.scalar(sig, float(vals**2 @ sig.metric)), atol=1e-14)


def test_blade_names_roundtrip():
    sig = Signature(1, 3)
    for i in range(sig.dim):
        assert sig.blade_index(sig.blade_name(i)) == i
    with pytest.raises(KeyError):
        sig.blade_index("e21")
    with pytest.raises(KeyError):
        sig.blade_index("e5")


def test_pseudoscalar_squares():
    expected = {(3, 0): -1, (1, 3): -1, (4, 0): 1, (2, 2): 1, (2, 0): -1, (1, 1): 1, (0, 2): -1}
    for (p, q), s in expected.items():
        sig = Signature(p, q)
        assert sig.pseudoscalar_square == s
        i = pseudoscalar(sig)
        assert (i * i).allclose(Multivector.scalar(sig, s))


def test_reverse_and_involution_signs():
    sig = Signature(4, 0)
    ones = Multivector(sig, np.ones(sig.dim))
    rev = reverse(ones).coeffs
    inv = involute(ones).coeffs
    for blade in range(sig.dim):
        k = sig.grades[blade]
        assert rev[blade] == (-1) ** (k * (k - 1) // 2)
        assert inv[blade] == (-1) ** k


@pytest.mark.parametrize("sig", ALL_SIGNATURES, ids=str)
def test_reverse_is_antiautomorphism(sig):
    rng = np.random.default_rng(5)
    a, b = random_multivector(sig, rng), random_multivector(sig, rng)
    assert reverse(a * b).allclose(reverse(b) * reverse(a), atol=1e-13)
    assert involute(a * b).allclose(involute(a) * involute(b), atol=1e-13)


def test_wedge_of_vectors_is_antisymmetric_part():
    sig = Signature(1, 3)
    rng = np.random.default_rng(6)
    a = random_multivector(sig, rng, grades=[1])
    b = random_multivector(sig, rng, grades=[1])
    assert wedge(a, b).allclose(commutator_product(a, b), atol=1e-15)
    assert (a ^ a).allclose(Multivector.zero(sig))
    assert anticommutator_product(a, b).grades_present(1e-15) <= {0}


def test_grade_projection_partitions():
    sig = Signature(2, 2)
    a = random_multivector(sig, np.random.default_rng(7))
    total = sum((grade_project(a, k) for k in range(5)), Multivector.zero(sig))
    assert total.allclose(a, atol=0.0)
    assert even_part(a).grades_present() <= {0, 2, 4}


def test_mixing_signatures_fails():
    with pytest.raises(SignatureError):
        basis_vector(Signature(3), 0) * basis_vector(Signature(1, 3), 0)


@pytest.mark.parametrize("p,q", [(0, 0), (5, 0), (3, 2), (-1, 2)])
def test_bad_signatures(p, q):
    with pytest.raises(SignatureError):
        Signature(p, q)


def test_basis_vector_range():
    with pytest.raises(IndexError):
        basis_vector(Signature(2), 2)


def test_immutable():
    a = Multivector.scalar(Signature(2), 1.0)
    with pytest.raises(AttributeError):
        a.coeffs = None
    with pytest.raises(ValueError):
        a.coeffs[0] = 3.0


def test_require_bivector():
    sig = Signature(3)
    e1, e2, _ = basis_vectors(sig)
    require_bivector(e1 * e2)
    with pytest.raises(GradeError):
        require_bivector(e1 * e2 + 1.0)
    assert is_homogeneous(e1 * e2 * 2.0, 2)


def test_scalar_arithmetic_and_indexing():
    sig = Signature(2)
    a = Multivector.from_blades(sig, {"1": 1.0, "e12": 2.0})
    assert (2 * a - a).allclose(a)
    assert (a + 1)["1"] == 2.0
    assert (a / 2)["e12"] == 1.0
    assert "e12" in repr(a)


@settings(max_examples=60, deadline=None)
@given(st.lists(coeff, min_size=16, max_size=16), st.lists(coeff, min_size=16, max_size=16))
def test_kernel_matches_explicit_blade_products(xs, ys):
    sig = Signature(1, 3)
    a, b = mv(sig, xs), mv(sig, ys)
    expected = np.zeros(16)
    for i in range(16):
        for j in range(16):
            expected[i ^ j] += sig.sign_table[i, j] * xs[i] * ys[j]
    assert np.allclose((a * b).coeffs, expected, atol=1e-14)
