"""Bivector calculus: exponential, logarithm and the closed-form BCH composition.

Functions of a bivector ``s`` are evaluated through its square ``z = s*s``,
which is a scalar + pseudoscalar number whenever ``p + q <= 4``:

* even series ``f(s) = F(z)`` with ``F(z) = f(sqrt z)``
* odd series ``f(s) = G(z) * s`` with ``G(z) = f(sqrt z) / sqrt z``

Both ``F`` and ``G`` are even in ``sqrt z``, so no root has to be chosen and
null bivectors (``z == 0``) need no special casing.  Wherever the normalizer
``N = sqrt(z)`` exists this is identical to ``f(N)`` and ``f(N) * s/N``.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial

import numpy as np

from .algebra import (
    Multivector,
    Signature,
    arev_part,
    pseudoscalar,
    require_bivector,
    reverse,
    srev_part,
)
from .errors import (
    GradeError,
    NotARotorError,
    PiRotationError,
    SignatureError,
    SingularDenominatorError,
)
from .scalarpseudo import EVEN_SERIES, ODD_SERIES, ScalarPseudo

ROTOR_TOL = 1e-9
SINGULAR_TOL = 1e-12
NULL_TOL = 1e-14

EUCLIDEAN_3D = Signature(3, 0)


def sqrt_scalar_pseudo(x: ScalarPseudo) -> ScalarPseudo:
    return x.sqrt()


def square(a: Multivector) -> ScalarPseudo:
    """``a*a`` read as a scalar + pseudoscalar number (exact for bivectors when n <= 4)."""
    return ScalarPseudo.from_multivector(a * a)


def is_null(sigma: Multivector, z: ScalarPseudo | None = None) -> bool:
    z = square(sigma) if z is None else z
    return np.hypot(z.alpha, z.beta) < NULL_TOL * max(1.0, sigma.norm() ** 2)


def normalize_bivector(sigma: Multivector):
    """Split ``sigma = N * sigma_hat`` with ``sigma_hat**2 == 1``.

    ``N`` is the principal root of ``sigma**2``.  A null bivector comes back as
    ``(0, sigma)``.  Raises :class:`NoRootError` when ``sigma**2`` has no root
    (split-complex signatures only).

    Note that ``sigma_hat`` need not be a bivector: in GA(3) the normalizer of a
    bivector is a multiple of the pseudoscalar and ``sigma_hat`` is a vector.
    """
    require_bivector(sigma)
    z = square(sigma)
    if is_null(sigma, z):
        return ScalarPseudo(0.0, 0.0, z.isq), sigma
    n = z.sqrt()
    return n, n.inverse() * sigma


def invariant_decomposition(sigma: Multivector):
    """Split a spacetime bivector into commuting parts ``(sigma_plus, sigma_minus)``.

    ``sigma_plus**2 >= 0`` (boost-like) and ``sigma_minus**2 <= 0``
    (rotation-like).  A null bivector gives ``(sigma, 0)``.
    """
    if (sigma.sig.p, sigma.sig.q) != (1, 3):
        raise SignatureError(f"invariant decomposition is defined for GA(1,3), not {sigma.sig}")
    n, hat = normalize_bivector(sigma)
    if n.alpha == 0.0 and n.beta == 0.0:
        return sigma, Multivector.zero(sigma.sig)
    plus = hat * n.alpha
    minus = (pseudoscalar(sigma.sig) * hat) * n.beta
    return plus, minus


def even_series_eval(name: str, sigma: Multivector) -> ScalarPseudo:
    """``f(sigma)`` for an even series; currently ``cosh``."""
    try:
        fn = EVEN_SERIES[name]
    except KeyError:
        raise ValueError(f"unknown even series {name!r}; choose from {sorted(EVEN_SERIES)}") from None
    return square(sigma).apply(fn)


def odd_series_eval(name: str, sigma: Multivector) -> Multivector:
    """``f(sigma)`` for an odd series: ``sinh``, ``tanh`` or ``atanh``."""
    try:
        fn = ODD_SERIES[name]
    except KeyError:
        raise ValueError(f"unknown odd series {name!r}; choose from {sorted(ODD_SERIES)}") from None
    return square(sigma).apply(fn) * sigma


def tanh(sigma: Multivector) -> Multivector:
    return odd_series_eval("tanh", sigma)


def atanh(x: Multivector) -> Multivector:
    return odd_series_eval("atanh", x)


def biv_exp(sigma: Multivector) -> Multivector:
    """Rotor ``e**sigma = cosh(sigma) + sinh(sigma)``."""
    require_bivector(sigma)
    z = square(sigma)
    return z.apply(EVEN_SERIES["cosh"]).to_multivector(sigma.sig) + z.apply(ODD_SERIES["sinh"]) * sigma


def rotor_defect(r: Multivector) -> float:
    """Largest coefficient of ``r*~r - 1`` together with the odd part of ``r``."""
    odd = np.where(r.sig.grades % 2 == 1, r.coeffs, 0.0)
    d = (r * reverse(r) - 1.0).coeffs
    return float(max(np.max(np.abs(d)), np.max(np.abs(odd))))


def check_rotor(r: Multivector, tol: float = ROTOR_TOL) -> Multivector:
    scale = max(1.0, r.norm() ** 2)
    defect = rotor_defect(r)
    if defect > tol * scale:
        raise NotARotorError(f"R*~R deviates from 1 by {defect:.3g}")
    return r


def is_rotor(r: Multivector, tol: float = ROTOR_TOL) -> bool:
    return rotor_defect(r) <= tol * max(1.0, r.norm() ** 2)


def rotor_log(r: Multivector) -> Multivector:
    """Principal generator ``sigma`` with ``exp(sigma) = +-r``.

    The overall sign of the rotor is not recoverable: ``rotor_log(-r) ==
    rotor_log(r)``.  The rotational part of the result has magnitude at most
    pi/2.
    """
    check_rotor(r)
    even_sr = ScalarPseudo.from_multivector(srev_part(r))
    if even_sr.modulus() < SINGULAR_TOL * max(1.0, r.norm()):
        raise PiRotationError("self-reverse part of the rotor is not invertible (rotation by pi)")
    ratio = even_sr.inverse() * arev_part(r)
    return atanh(ratio)


def _bch_terms(sigma1: Multivector, sigma2: Multivector):
    t1 = tanh(sigma1)
    t2 = tanh(sigma2)
    p12 = t1 * t2
    p21 = t2 * t1
    numerator = t1 + t2 + (p12 - p21) * 0.5
    denominator = 1.0 + (p12 + p21) * 0.5
    return t1, t2, numerator, denominator


def bch(sigma1: Multivector, sigma2: Multivector) -> Multivector:
    """Generator of the product rotor: ``exp(bch(a, b)) = +-exp(a) exp(b)``.

    Evaluates ``atanh((T1 + T2 + [T1,T2]/2) / (1 + {T1,T2}/2))`` with
    ``Ti = tanh(sigma_i)``.
    """
    sigma1._check(sigma2)
    require_bivector(sigma1)
    require_bivector(sigma2)
    _, _, num, den_mv = _bch_terms(sigma1, sigma2)
    den = ScalarPseudo.from_multivector(den_mv)
    if den.modulus() < SINGULAR_TOL:
        raise SingularDenominatorError(f"BCH denominator {den} is not invertible")
    return atanh(den.inverse() * num)


def bch_fold(generators) -> Multivector:
    """Left fold of :func:`bch` over two or more generators."""
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    out = gens[0]
    for g in gens[1:]:
        out = bch(out, g)
    return out


def _bracket(x: Multivector, y: Multivector) -> Multivector:
    return x * y - y * x


def _dynkin_sequences(order: int):
    """Yield ``(m, pairs)`` for all Dynkin index sequences of total degree <= order."""
    pairs = [(r, s) for r in range(order + 1) for s in range(order + 1) if 1 <= r + s <= order]

    def extend(prefix, budget):
        if prefix:
            yield len(prefix), tuple(prefix)
        for r, s in pairs:
            if r + s <= budget:
                yield from extend(prefix + [(r, s)], budget - r - s)

    yield from extend([], order)


@lru_cache(maxsize=None)
def _dynkin_coefficients(order: int) -> dict:
    """Map each word over {X, Y} to its total Dynkin coefficient."""
    coeffs = {}
    for m, seq in _dynkin_sequences(order):
        word = "".join("X" * r + "Y" * s for r, s in seq)
        denom = len(word)
        for r, s in seq:
            denom *= factorial(r) * factorial(s)
        coeffs[word] = coeffs.get(word, 0.0) + (-1) ** (m - 1) / (m * denom)
    return coeffs


def bch_series_oracle(sigma1: Multivector, sigma2: Multivector, order: int) -> Multivector:
    """Truncated BCH series via Dynkin's formula, terms of degree <= ``order``.

    Only meant as an independent check on small generators.
    """
    if not 1 <= order <= 6:
        raise ValueError(f"series order must be in 1..6, got {order}")
    sigma1._check(sigma2)
    letters = {"X": sigma1, "Y": sigma2}
    nested = {}

    def nested_bracket(word):
        # right-nested [w1, [w2, [..., w_n]]]
        if word not in nested:
            if len(word) == 1:
                nested[word] = letters[word]
            else:
                nested[word] = _bracket(letters[word[0]], nested_bracket(word[1:]))
        return nested[word]

    total = Multivector.zero(sigma1.sig)
    for word, c in _dynkin_coefficients(order).items():
        if c == 0.0:
            continue
        # a word ending in XX or YY has a vanishing innermost bracket
        if len(word) > 1 and word[-1] == word[-2]:
            continue
        total = total + nested_bracket(word) * c
    return total


def apply_rotor(r: Multivector, a: Multivector) -> Multivector:
    """Double-sided action ``R a ~R``."""
    check_rotor(r)
    return r * a * reverse(r)


def reflect(v: Multivector, a: Multivector) -> Multivector:
    """Reflection ``-v a v`` through the hyperplane orthogonal to unit vector ``v``."""
    v._check(a)
    if v.grades_present(1e-15) - {1}:
        raise GradeError("reflection needs a vector")
    sq = (v * v).coeffs[0]
    if abs(abs(sq) - 1.0) > ROTOR_TOL:
        raise ValueError(f"reflection vector must square to +-1, got {sq:.6g}")
    return -(v * a * v)


# -- Rodrigues vectors in GA(3) ---------------------------------------------

def _vector(values, sig: Signature = EUCLIDEAN_3D) -> Multivector:
    c = np.zeros(sig.dim)
    for i, x in enumerate(values):
        c[1 << i] = x
    return Multivector(sig, c)


def _vector_part(a: Multivector) -> np.ndarray:
    return np.array([a.coeffs[1 << i] for i in range(a.sig.n)])


def rodrigues_to_bivector(r) -> Multivector:
    """GA(3) generator ``u*I`` whose rotor has Rodrigues vector ``r = tan(u)``."""
    r = np.asarray(r, dtype=float)
    mag = np.linalg.norm(r)
    u = r if mag == 0.0 else r * (np.arctan(mag) / mag)
    return _vector(u) * pseudoscalar(EUCLIDEAN_3D)


def bivector_to_rodrigues(sigma: Multivector) -> np.ndarray:
    """Inverse of :func:`rodrigues_to_bivector`: ``r = tan(sigma * I**-1)``."""
    if sigma.sig != EUCLIDEAN_3D:
        raise SignatureError("Rodrigues vectors live in GA(3)")
    require_bivector(sigma)
    u = _vector_part(sigma * -pseudoscalar(EUCLIDEAN_3D))
    mag = np.linalg.norm(u)
    return u if mag == 0.0 else u * (np.tan(mag) / mag)


def rodrigues_compose(r1, r2) -> np.ndarray:
    """Rodrigues vector of the composite rotation ``(r1 + r2 - r1 x r2) / (1 - r1.r2)``."""
    r1 = np.asarray(r1, dtype=float)
    r2 = np.asarray(r2, dtype=float)
    den = 1.0 - float(np.dot(r1, r2))
    if abs(den) < SINGULAR_TOL:
        raise SingularDenominatorError("composite rotation is by pi; Rodrigues vector diverges")
    return (r1 + r2 - np.cross(r1, r2)) / den


def random_bivector(sig: Signature, rng: np.random.Generator, low: float = -1.0, high: float = 1.0) -> Multivector:
    c = np.where(sig.grades == 2, rng.uniform(low, high, sig.dim), 0.0)
    return Multivector(sig, c)

