"""Relativistic velocity composition and the Wigner rotation.

Everything is worked out in the rest frame K, in GA(3) via the space/time
split: a boost with rapidity vector ``xi`` has half-velocity
``w = tanh(|xi|/2) xi_hat``.  Two pure boosts compose as

    B1 B2 = B R,    tanh of the composite generator = w + rho + w rho

with ``rho = (w1 ^ w2) / (1 + w1 . w2)`` the tangent of half the Wigner
rotation and ``w = (w1 + w2)(1 + w1 w2)**-1`` the composite half-velocity.
Velocities are plain length-3 numpy arrays.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import Multivector, reverse, scalar_part
from .errors import SuperluminalError
from .rotors import biv_exp, check_rotor
from .spacetime import SPACE, SPACETIME, g0, unsplit

PARALLEL_TOL = 1e-15


def _as_velocity(v, name="velocity") -> np.ndarray:
    v = np.asarray(v, dtype=float)
    if v.shape != (3,):
        raise ValueError(f"{name} needs 3 components, got shape {v.shape}")
    if not np.isfinite(v).all():
        raise ValueError(f"{name} has non-finite components")
    if np.linalg.norm(v) >= 1.0:
        raise SuperluminalError(f"{name} {v.tolist()} has norm >= 1")
    return v


def ga3_vector(v) -> Multivector:
    """Length-3 array as a GA(3) vector."""
    return Multivector(SPACE, [0.0, v[0], v[1], 0.0, v[2], 0.0, 0.0, 0.0])


def _vector_part(a: Multivector) -> np.ndarray:
    return a.coeffs[[1, 2, 4]].copy()


def half_velocity(beta) -> np.ndarray:
    """``w = beta / (1 + sqrt(1 - beta**2))``, i.e. ``tanh(atanh(|beta|)/2)`` along beta."""
    beta = _as_velocity(beta, "beta")
    return beta / (1.0 + np.sqrt(1.0 - beta @ beta))


def full_velocity(w) -> np.ndarray:
    """Inverse of :func:`half_velocity`: ``beta = 2w / (1 + w**2)``."""
    w = _as_velocity(w, "half-velocity")
    return 2.0 * w / (1.0 + w @ w)


def rapidity_to_half_velocity(xi) -> np.ndarray:
    xi = np.asarray(xi, dtype=float)
    mag = np.linalg.norm(xi)
    return xi if mag == 0.0 else xi * (np.tanh(0.5 * mag) / mag)


def half_velocity_to_rapidity(w) -> np.ndarray:
    w = _as_velocity(w, "half-velocity")
    mag = np.linalg.norm(w)
    return w if mag == 0.0 else w * (2.0 * np.arctanh(mag) / mag)


def _even_inverse(x: Multivector) -> Multivector:
    # x is a {0,2}-multivector of GA(3), so x ~x is a positive scalar
    xr = reverse(x)
    norm2 = scalar_part(x * xr)
    assert norm2 > 0.0, "even element is not invertible"
    return xr / norm2


def compose_half_velocities(w1, w2) -> np.ndarray:
    """``(w1 + w2)(1 + w1 w2)**-1`` evaluated in GA(3); the result is a vector."""
    v1 = ga3_vector(_as_velocity(w1, "w1"))
    v2 = ga3_vector(_as_velocity(w2, "w2"))
    w = (v1 + v2) * _even_inverse(1.0 + v1 * v2)
    stray = np.abs(np.delete(w.coeffs, [1, 2, 4])).max()
    assert stray < 1e-12, f"composite half-velocity has non-vector part {stray:.3g}"
    return _vector_part(w)


def wigner_rho(w1, w2) -> Multivector:
    """``rho = (w1 ^ w2) / (1 + w1 . w2)``, a GA(3) bivector."""
    v1 = ga3_vector(_as_velocity(w1, "w1"))
    v2 = ga3_vector(_as_velocity(w2, "w2"))
    return (v1 ^ v2) / (1.0 + float(np.dot(w1, w2)))


def wigner_angle(w1, w2):
    """Wigner angle and the unit GA(3) bivector of its plane.

    The plane is ``None`` for parallel boosts, where the angle is zero.
    """
    rho = wigner_rho(w1, w2)
    mag = rho.norm()
    if mag <= PARALLEL_TOL:
        return 0.0, None
    return 2.0 * float(np.arctan(mag)), rho / mag


def compose_velocities(beta1, beta2) -> dict:
    """Composite velocity of boosting by ``beta1`` after ``beta2`` (``B1 B2``)."""
    w1 = half_velocity(beta1)
    w2 = half_velocity(beta2)
    w = compose_half_velocities(w1, w2)
    theta, plane = wigner_angle(w1, w2)
    return {
        "beta": full_velocity(w),
        "w1": w1,
        "w2": w2,
        "w": w,
        "wigner_angle": theta,
        "plane": plane,
    }


@dataclass(frozen=True)
class BoostRotationPair:
    """``B1 B2 = boost * rotation`` with both factors taken in the rest frame.

    ``boost`` and ``rotation`` are GA(1,3) rotors and ``plane`` is the unit
    spacelike GA(1,3) bivector of the rotation (``None`` when there is none).
    ``w`` and ``rho`` are the GA(3) half-velocity and half-angle tangent.
    """

    boost: Multivector
    rotation: Multivector
    wigner_angle: float
    plane: Multivector | None
    w: np.ndarray
    rho: Multivector


def boost_rotor(xi) -> Multivector:
    """Pure boost rotor ``exp(xi . s / 2)`` in GA(1,3)."""
    xi = np.asarray(xi, dtype=float)
    return biv_exp(unsplit(ga3_vector(0.5 * xi)))


def boost_boost_decompose(xi1, xi2) -> BoostRotationPair:
    """Decompose the product of two pure boosts into boost times rotation."""
    w1 = rapidity_to_half_velocity(xi1)
    w2 = rapidity_to_half_velocity(xi2)
    w = compose_half_velocities(w1, w2)
    rho = wigner_rho(w1, w2)
    theta, plane = wigner_angle(w1, w2)

    boost = boost_rotor(half_velocity_to_rapidity(w))
    mag = rho.norm()
    # rho is spacelike in GA(3): atanh(rho) = atan(|rho|) rho_hat
    gen = rho if mag == 0.0 else rho * (np.arctan(mag) / mag)
    rotation = biv_exp(unsplit(gen))
    return BoostRotationPair(
        boost=boost,
        rotation=rotation,
        wigner_angle=theta,
        plane=None if plane is None else unsplit(plane),
        w=w,
        rho=rho,
    )


def boost_rotation_split(r: Multivector):
    """Split a GA(1,3) rotor as ``r = B R`` with ``B`` a pure boost and ``R`` a pure rotation.

    ``B`` is the boost taking ``g0`` to ``r g0 ~r``.
    """
    if r.sig != SPACETIME:
        raise ValueError(f"expected a GA(1,3) rotor, got {r.sig}")
    check_rotor(r)
    v = r * g0 * reverse(r)
    vg = v * g0
    boost = (1.0 + vg) / np.sqrt(2.0 * (1.0 + scalar_part(vg)))
    return boost, reverse(boost) * r
