"""Spacetime GA(1,3): generators, the space/time split and 4x4 matrices.

Conventions: ``g0**2 = +1`` and ``gi**2 = -1``.  The relative vectors of the
rest frame are ``s_i = g_i g_0``; they square to +1 and ``s1 s2 s3 = I``.
A Lorentz generator ``(xi, theta)`` corresponds to the bivector

    sigma = (xi . s + theta . I s) / 2

so that ``exp(sigma)`` boosts with rapidity ``|xi|`` and rotates by ``|theta|``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import kernels
from .algebra import Multivector, Signature, basis_vector, pseudoscalar, require_bivector, reverse
from .errors import NotALorentzMatrixError, PiRotationError, SignatureError
from .rotors import check_rotor
from .scalarpseudo import ScalarPseudo

SPACETIME = Signature(1, 3)
SPACE = Signature(3, 0)
ETA = np.diag([1.0, -1.0, -1.0, -1.0])
LORENTZ_TOL = 1e-6

g0, g1, g2, g3 = (basis_vector(SPACETIME, i) for i in range(4))
GAMMAS = (g0, g1, g2, g3)
I4 = pseudoscalar(SPACETIME)
SIGMAS = tuple(g * g0 for g in (g1, g2, g3))
DUAL_SIGMAS = tuple(I4 * s for s in SIGMAS)


@dataclass(frozen=True)
class LorentzGenerator:
    """Rapidity vector ``xi`` and axis-angle vector ``theta`` in the rest frame."""

    xi: tuple = (0.0, 0.0, 0.0)
    theta: tuple = (0.0, 0.0, 0.0)

    def __post_init__(self):
        for name in ("xi", "theta"):
            v = tuple(float(x) for x in getattr(self, name))
            if len(v) != 3:
                raise ValueError(f"{name} needs 3 components, got {len(v)}")
            object.__setattr__(self, name, v)

    def as_arrays(self):
        return np.array(self.xi), np.array(self.theta)

    def is_pure_boost(self, tol: float = 0.0) -> bool:
        return max(abs(t) for t in self.theta) <= tol


def _require_spacetime(a: Multivector) -> None:
    if a.sig != SPACETIME:
        raise SignatureError(f"expected a GA(1,3) multivector, got {a.sig}")


def _frame_basis():
    # the six bivectors s_i and I s_i each sit on a single blade with coefficient +-1
    rows = [s.coeffs for s in SIGMAS + DUAL_SIGMAS]
    return np.array(rows)


_SPLIT_BASIS = _frame_basis()


def spacetime_split(f: Multivector):
    """Relative parts ``(E, B)`` with ``f = E . s + B . I s`` in the g0 frame."""
    _require_spacetime(f)
    require_bivector(f)
    parts = _SPLIT_BASIS @ f.coeffs
    return parts[:3].copy(), parts[3:].copy()


def spacetime_unsplit(e, b) -> Multivector:
    """Inverse of :func:`spacetime_split`."""
    c = np.asarray(e, dtype=float) @ _SPLIT_BASIS[:3] + np.asarray(b, dtype=float) @ _SPLIT_BASIS[3:]
    return Multivector(SPACETIME, c)


def generator_to_bivector(g: LorentzGenerator) -> Multivector:
    xi, theta = g.as_arrays()
    return spacetime_unsplit(0.5 * xi, 0.5 * theta)


def bivector_to_generator(sigma: Multivector) -> LorentzGenerator:
    e, b = spacetime_split(sigma)
    return LorentzGenerator(tuple(2.0 * e), tuple(2.0 * b))


@lru_cache(maxsize=None)
def _split_matrix() -> np.ndarray:
    """``(8, 16)`` matrix sending even GA(1,3) coefficients to GA(3) coefficients.

    GA(3) blade ``e_A`` corresponds to the product of the ``s_i`` with ``i`` in A.
    """
    rows = np.zeros((SPACE.dim, SPACETIME.dim))
    for blade in range(SPACE.dim):
        image = Multivector.scalar(SPACETIME, 1.0)
        for i in range(3):
            if blade >> i & 1:
                image = image * SIGMAS[i]
        # image is +-1 on a single even blade; the inverse map is its transpose
        rows[blade] = image.coeffs
    rows.setflags(write=False)
    return rows


def split_even(a: Multivector) -> Multivector:
    """Even GA(1,3) element to its image in GA(3) (s_i -> e_i, I -> I)."""
    _require_spacetime(a)
    odd = np.where(a.sig.grades % 2 == 1, a.coeffs, 0.0)
    if np.abs(odd).max() > 1e-12 * max(1.0, np.abs(a.coeffs).max()):
        raise ValueError("space/time split is only defined for even multivectors")
    return Multivector(SPACE, _split_matrix() @ a.coeffs)


def unsplit(a: Multivector) -> Multivector:
    """Inverse of :func:`split_even`."""
    if a.sig != SPACE:
        raise SignatureError(f"expected a GA(3) multivector, got {a.sig}")
    return Multivector(SPACETIME, _split_matrix().T @ a.coeffs)


# -- 4x4 matrices -----------------------------------------------------------

def generator_matrix(g: LorentzGenerator) -> np.ndarray:
    """Element of so(1,3): ``xi`` on the first row and column, ``eps_ijk theta^k`` below."""
    t1, t2, t3 = g.theta
    m = np.zeros((4, 4))
    m[0, 1:] = g.xi
    m[1:, 0] = g.xi
    m[1:, 1:] = [[0.0, t3, -t2], [-t3, 0.0, t1], [t2, -t1, 0.0]]
    return m


def _vector_slots() -> np.ndarray:
    return np.array([1 << a for a in range(4)])


def rotors_to_matrices(coeffs: np.ndarray) -> np.ndarray:
    """Batched ``rotor_to_matrix`` on an ``(N, 16)`` coefficient array, no rotor check."""
    coeffs = np.ascontiguousarray(coeffs, dtype=float)
    n = coeffs.shape[0]
    sign = SPACETIME.sign_table
    rev = reverse(Multivector(SPACETIME, np.ones(16))).coeffs
    slots = _vector_slots()
    out = np.empty((n, 4, 4))
    for b in range(4):
        gb = np.zeros((n, 16))
        gb[:, slots[b]] = 1.0
        image = kernels.geometric_product_batch(kernels.geometric_product_batch(coeffs, gb, sign), coeffs * rev, sign)
        out[:, :, b] = image[:, slots]
    return out


def rotor_to_matrix(r: Multivector) -> np.ndarray:
    """``L[a, b]`` is the ``g_a`` component of ``R g_b ~R``."""
    _require_spacetime(r)
    check_rotor(r)
    return rotors_to_matrices(r.coeffs[None, :])[0]


def matrix_exp_so13(g: np.ndarray) -> np.ndarray:
    """Matrix exponential by scaling and squaring around a degree-13 Taylor core.

    Works on a single ``(4, 4)`` matrix or a stack ``(..., 4, 4)``.
    """
    g = np.asarray(g, dtype=float)
    norm = np.abs(g).sum(axis=-2).max(axis=-1).max(initial=0.0)
    squarings = max(0, int(np.ceil(np.log2(norm / 0.5)))) if norm > 0.5 else 0
    a = g / (2.0 ** squarings)
    eye = np.broadcast_to(np.eye(4), g.shape)
    term = eye.copy()
    out = eye.copy()
    for k in range(1, 14):
        term = term @ a / k
        out = out + term
    for _ in range(squarings):
        out = out @ out
    return out


def lorentz_defect(m: np.ndarray) -> float:
    m = np.asarray(m, dtype=float)
    return float(np.abs(m.T @ ETA @ m - ETA).max())


def is_lorentz_matrix(m, tol: float = LORENTZ_TOL) -> bool:
    """Proper orthochronous Lorentz matrix within ``tol``."""
    m = np.asarray(m, dtype=float)
    if m.shape != (4, 4) or not np.isfinite(m).all():
        return False
    return lorentz_defect(m) <= tol and abs(np.linalg.det(m) - 1.0) <= tol and m[0, 0] >= 1.0 - tol


def matrix_to_rotor(m) -> Multivector:
    """Rotor ``R`` (up to sign) with ``rotor_to_matrix(R) == m``.

    Frame-image reconstruction: ``sum_a L(g_a) g^a = 4 R <~R>_{0,4}``, which
    is then normalized by the root of its own ``M ~M``.
    """
    m = np.asarray(m, dtype=float)
    if not is_lorentz_matrix(m):
        raise NotALorentzMatrixError("matrix is not proper orthochronous Lorentz within 1e-6")
    total = Multivector.zero(SPACETIME)
    for a in range(4):
        image = Multivector.zero(SPACETIME)
        for c in range(4):
            image = image + GAMMAS[c] * m[c, a]
        total = total + image * GAMMAS[a] * ETA[a, a]
    mm = ScalarPseudo.from_multivector(total * reverse(total), tol=1e-6)
    if mm.modulus() < 1e-9:
        raise PiRotationError("frame reconstruction degenerates for a rotation by pi")
    r = mm.sqrt().inverse() * total
    return check_rotor(r, tol=1e-6)
