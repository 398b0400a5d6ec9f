"""2x2 complex matrices for the even spacetime algebra.

The relative vectors ``s_k`` go to the Pauli matrices and the pseudoscalar to
``i`` times the identity, which makes the even subalgebra of GA(1,3) (and
GA(3) itself) isomorphic to the full algebra of complex 2x2 matrices.  A
bivector goes to a traceless matrix ``q^k sigma_k`` with
``q^k = (xi^k + i theta^k) / 2``.

The matrix BCH here works on plain Python complex numbers: a traceless matrix
``[[a, b], [c, -a]]`` is carried as ``(a, b, c)``.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from . import kernels
from ._config import DEBUG
from .algebra import Multivector
from .errors import GradeError, PoleError, SignatureError, SingularDenominatorError
from .scalarpseudo import atanh_ratio, tanh_ratio
from .spacetime import SPACE, SPACETIME, LorentzGenerator, split_even, unsplit

PAULI = np.array(
    [
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)
IDENTITY = np.eye(2, dtype=complex)
SINGULAR_TOL = kernels.SINGULAR_TOL
TRACE_TOL = 1e-12


@lru_cache(maxsize=None)
def _blade_images() -> np.ndarray:
    """Matrix of each GA(3) basis blade, as the ordered product of Pauli matrices."""
    out = np.empty((SPACE.dim, 2, 2), dtype=complex)
    for blade in range(SPACE.dim):
        m = IDENTITY
        for i in range(3):
            if blade >> i & 1:
                m = m @ PAULI[i]
        out[blade] = m
    out.setflags(write=False)
    return out


@lru_cache(maxsize=None)
def _inverse_map() -> np.ndarray:
    # real 8x8 map from GA(3) coefficients to (Re, Im) of the four entries
    images = _blade_images().reshape(SPACE.dim, 4)
    forward = np.concatenate([images.real, images.imag], axis=1).T
    inv = np.linalg.inv(forward)
    inv.setflags(write=False)
    return inv


def to_matrix(a: Multivector) -> np.ndarray:
    """Matrix of an even GA(1,3) element, or of any GA(3) element."""
    if a.sig == SPACETIME:
        a = split_even(a)
    elif a.sig != SPACE:
        raise SignatureError(f"Pauli representation covers GA(1,3) even elements and GA(3), not {a.sig}")
    return np.tensordot(a.coeffs, _blade_images(), axes=1)


def from_matrix(m, sig=SPACETIME) -> Multivector:
    """Inverse of :func:`to_matrix`.  Every complex 2x2 matrix has a preimage."""
    m = np.asarray(m, dtype=complex)
    if m.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
    flat = m.reshape(4)
    c = _inverse_map() @ np.concatenate([flat.real, flat.imag])
    mv = Multivector(SPACE, c)
    if sig == SPACE:
        return mv
    if sig == SPACETIME:
        return unsplit(mv)
    raise SignatureError(f"no Pauli preimage in {sig}")


def generator_to_matrix2(g: LorentzGenerator) -> np.ndarray:
    """Traceless ``q^k sigma_k`` with ``q^k = (xi^k + i theta^k) / 2``."""
    xi, theta = g.as_arrays()
    q = 0.5 * (xi + 1j * theta)
    return np.tensordot(q, PAULI, axes=1)


def matrix2_to_generator(m) -> LorentzGenerator:
    m = np.asarray(m, dtype=complex)
    _require_traceless(m)
    q = np.array([0.5 * (m[0, 1] + m[1, 0]), 0.5j * (m[0, 1] - m[1, 0]), m[0, 0]])
    return LorentzGenerator(tuple(2.0 * q.real), tuple(2.0 * q.imag))


def _require_traceless(m: np.ndarray) -> None:
    scale = max(1.0, float(np.abs(m).max()))
    if abs(m[0, 0] + m[1, 1]) > TRACE_TOL * scale:
        raise GradeError("generator matrix must be traceless")


def _unpack(m) -> tuple:
    m = np.asarray(m, dtype=complex)
    if m.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
    _require_traceless(m)
    return complex(m[0, 0]), complex(m[0, 1]), complex(m[1, 0])


def _pack(a: complex, b: complex, c: complex) -> np.ndarray:
    return np.array([[a, b], [c, -a]])


def _tanh3(a, b, c):
    f = tanh_ratio(a * a + b * c)
    return f * a, f * b, f * c


def _atanh3(a, b, c):
    z = a * a + b * c
    if abs(z - 1.0) < kernels.POLE_TOL:
        raise PoleError("atanh pole: the matrix squares to the identity")
    f = atanh_ratio(z)
    return f * a, f * b, f * c


def matrix_tanh(m) -> np.ndarray:
    """``tanh(l)/l * M`` where ``M**2 = l**2 * 1``; a nilpotent ``M`` comes back unchanged."""
    return _pack(*_tanh3(*_unpack(m)))


def matrix_atanh(m) -> np.ndarray:
    return _pack(*_atanh3(*_unpack(m)))


def _bch3(x, y):
    a1, b1, c1 = _tanh3(*x)
    a2, b2, c2 = _tanh3(*y)
    # T1 T2 = s*1 + A with A traceless; s*1 and A are the anticommutator and commutator halves
    p00 = a1 * a2 + b1 * c2
    p11 = c1 * b2 + a1 * a2
    p01 = a1 * b2 - b1 * a2
    p10 = c1 * a2 - a1 * c2
    s = 0.5 * (p00 + p11)
    if DEBUG:
        _check_split(a1, b1, c1, a2, b2, c2, s, p00 - s)
    den = 1.0 + s
    if abs(den) < SINGULAR_TOL:
        raise SingularDenominatorError(f"BCH denominator 1 + {s} is not invertible")
    return _atanh3((a1 + a2 + p00 - s) / den, (b1 + b2 + p01) / den, (c1 + c2 + p10) / den)


def _check_split(a1, b1, c1, a2, b2, c2, s, a_diag):
    t1 = _pack(a1, b1, c1)
    t2 = _pack(a2, b2, c2)
    anti = 0.5 * (t1 @ t2 + t2 @ t1)
    comm = 0.5 * (t1 @ t2 - t2 @ t1)
    scale = max(1.0, float(np.abs(t1 @ t2).max()))
    assert np.allclose(anti, s * IDENTITY, atol=1e-12 * scale), "anticommutator is not scalar"
    assert abs(comm[0, 0] - a_diag) <= 1e-12 * scale and abs(np.trace(comm)) <= 1e-12 * scale


def matrix_bch(m1, m2) -> np.ndarray:
    """Generator matrix of the product: ``atanh((T1 + T2 + A) / (1 + s))``.

    ``T1 T2 = s*1 + A`` is split into its scalar part (half the trace) and
    its traceless part.  Raises :class:`SingularDenominatorError` when
    ``1 + s`` vanishes and :class:`PoleError` on a tanh/atanh pole.
    """
    return _pack(*_bch3(_unpack(m1), _unpack(m2)))


def matrix_bch_fold(matrices) -> np.ndarray:
    ms = list(matrices)
    if not ms:
        raise ValueError("need at least one generator matrix")
    acc = _unpack(ms[0])
    for m in ms[1:]:
        acc = _bch3(acc, _unpack(m))
    return _pack(*acc)


def matrix_bch_batch(m1, m2):
    """Row-wise :func:`matrix_bch` over ``(N, 2, 2)`` stacks.

    Returns ``(out, status)``; rows whose status is not ``kernels.OK`` hold
    NaN instead of raising.
    """
    m1 = np.ascontiguousarray(m1, dtype=complex)
    m2 = np.ascontiguousarray(m2, dtype=complex)
    if m1.shape != m2.shape or m1.shape[1:] != (2, 2):
        raise ValueError(f"need two (N, 2, 2) stacks, got {m1.shape} and {m2.shape}")
    return kernels.pauli_bch_batch(m1, m2)


def generators_to_matrices(xi, theta) -> np.ndarray:
    """Vectorized :func:`generator_to_matrix2` on ``(N, 3)`` arrays."""
    q = 0.5 * (np.asarray(xi, dtype=float) + 1j * np.asarray(theta, dtype=float))
    return np.einsum("nk,kij->nij", q, PAULI)


def matrices_to_generators(m):
    """Inverse of :func:`generators_to_matrices`: ``(xi, theta)`` arrays."""
    m = np.asarray(m, dtype=complex)
    q = np.stack([0.5 * (m[:, 0, 1] + m[:, 1, 0]), 0.5j * (m[:, 0, 1] - m[:, 1, 0]), m[:, 0, 0]], axis=1)
    return 2.0 * q.real, 2.0 * q.imag
