"""Dense multivector arithmetic for real geometric algebras GA(p, q) with p + q <= 4.

Basis blades are addressed by bitmask: bit ``i`` set means basis vector
``e_{i+1}`` is a factor.  The ``p`` vectors squaring to +1 come first, followed
by the ``q`` vectors squaring to -1.  A multivector stores all ``2**n``
coefficients in a read-only float64 array.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import comb
from numbers import Real

import numpy as np

from . import kernels
from .errors import GradeError, SignatureError

MAX_DIMENSION = 4


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _reorder_sign(a: int, b: int) -> int:
    # parity of swaps needed to sort the concatenation of blades a and b
    a >>= 1
    swaps = 0
    while a:
        swaps += _popcount(a & b)
        a >>= 1
    return -1 if swaps & 1 else 1


@dataclass(frozen=True)
class Signature:
    """Metric signature (p, q): ``p`` vectors square to +1, ``q`` to -1."""

    p: int
    q: int = 0

    n: int = field(init=False, repr=False, compare=False)
    dim: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise SignatureError(f"negative signature ({self.p}, {self.q})")
        if not 1 <= self.p + self.q <= MAX_DIMENSION:
            raise SignatureError(
                f"GA({self.p},{self.q}) has dimension {self.p + self.q}; only 1..{MAX_DIMENSION} is supported"
            )
        object.__setattr__(self, "n", self.p + self.q)
        object.__setattr__(self, "dim", 1 << (self.p + self.q))

    @cached_property
    def metric(self) -> np.ndarray:
        return np.array([1.0] * self.p + [-1.0] * self.q)

    @cached_property
    def grades(self) -> np.ndarray:
        return np.array([_popcount(i) for i in range(self.dim)])

    @cached_property
    def sign_table(self) -> np.ndarray:
        return _sign_table(self.p, self.q)

    @cached_property
    def outer_table(self) -> np.ndarray:
        idx = np.arange(self.dim)
        disjoint = (idx[:, None] & idx[None, :]) == 0
        return np.where(disjoint, self.sign_table, 0.0)

    @property
    def pseudoscalar_index(self) -> int:
        return self.dim - 1

    @cached_property
    def pseudoscalar_square(self) -> int:
        top = self.pseudoscalar_index
        return int(self.sign_table[top, top])

    def blade_name(self, index: int) -> str:
        if index == 0:
            return "1"
        return "e" + "".join(str(i + 1) for i in range(self.n) if index >> i & 1)

    def blade_index(self, name: str) -> int:
        if name in ("1", ""):
            return 0
        if not name.startswith("e"):
            raise KeyError(name)
        digits = [int(c) - 1 for c in name[1:]]
        if sorted(set(digits)) != digits or not all(0 <= d < self.n for d in digits):
            raise KeyError(f"{name!r} is not a canonical blade of {self}")
        return sum(1 << d for d in digits)

    def __str__(self) -> str:
        return f"GA({self.p},{self.q})"


@lru_cache(maxsize=None)
def _sign_table(p: int, q: int) -> np.ndarray:
    n = p + q
    dim = 1 << n
    metric = [1] * p + [-1] * q
    table = np.empty((dim, dim))
    for a in range(dim):
        for b in range(dim):
            s = _reorder_sign(a, b)
            common = a & b
            for i in range(n):
                if common >> i & 1:
                    s *= metric[i]
            table[a, b] = s
    table.setflags(write=False)
    return table


class Multivector:
    """Immutable element of GA(p, q).

    Supports ``+``, ``-``, scalar ``*`` and ``/``, the geometric product ``*``,
    the outer product ``^`` and reversion ``~``.
    """

    __slots__ = ("sig", "coeffs")
    __array_priority__ = 1000  # keep numpy scalars from hijacking __rmul__

    def __init__(self, sig: Signature, coeffs):
        c = np.array(coeffs, dtype=np.float64)
        if c.shape != (sig.dim,):
            raise ValueError(f"{sig} needs {sig.dim} coefficients, got shape {c.shape}")
        c.setflags(write=False)
        object.__setattr__(self, "sig", sig)
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("Multivector is immutable")

    @classmethod
    def zero(cls, sig: Signature) -> Multivector:
        return cls(sig, np.zeros(sig.dim))

    @classmethod
    def scalar(cls, sig: Signature, value: float) -> Multivector:
        c = np.zeros(sig.dim)
        c[0] = value
        return cls(sig, c)

    @classmethod
    def from_blades(cls, sig: Signature, blades: dict) -> Multivector:
        c = np.zeros(sig.dim)
        for name, value in blades.items():
            c[sig.blade_index(name) if isinstance(name, str) else name] += value
        return cls(sig, c)

    @classmethod
    def _new(cls, sig: Signature, coeffs: np.ndarray) -> Multivector:
        # trusted constructor: coeffs is a fresh float64 array of the right length
        coeffs.setflags(write=False)
        mv = object.__new__(cls)
        object.__setattr__(mv, "sig", sig)
        object.__setattr__(mv, "coeffs", coeffs)
        return mv

    def _wrap(self, coeffs) -> Multivector:
        return Multivector._new(self.sig, coeffs)

    def _check(self, other: Multivector) -> None:
        if self.sig != other.sig:
            raise SignatureError(f"cannot combine {self.sig} and {other.sig} multivectors")

    def _coerce(self, other):
        if isinstance(other, Multivector):
            self._check(other)
            return other
        if isinstance(other, (Real, np.floating, np.integer)):
            return Multivector.scalar(self.sig, float(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(self.coeffs + other.coeffs)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(self.coeffs - other.coeffs)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(other.coeffs - self.coeffs)

    def __neg__(self):
        return self._wrap(-self.coeffs)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return geometric_product(self, other)
        if isinstance(other, (Real, np.floating, np.integer)):
            return self._wrap(self.coeffs * float(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (Real, np.floating, np.integer)):
            return self._wrap(self.coeffs * float(other))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (Real, np.floating, np.integer)):
            return self._wrap(self.coeffs / float(other))
        return NotImplemented

    def __xor__(self, other):
        if isinstance(other, Multivector):
            return wedge(self, other)
        return NotImplemented

    def __invert__(self):
        return reverse(self)

    def __getitem__(self, blade):
        if isinstance(blade, str):
            blade = self.sig.blade_index(blade)
        return float(self.coeffs[blade])

    def grade(self, k: int) -> Multivector:
        return grade_project(self, k)

    def grades_present(self, tol: float = 0.0) -> set:
        mask = np.abs(self.coeffs) > tol
        return set(int(g) for g in np.unique(self.sig.grades[mask]))

    def norm(self) -> float:
        """Euclidean norm of the coefficient vector (metric-free)."""
        return float(np.linalg.norm(self.coeffs))

    def allclose(self, other: Multivector, atol: float = 1e-12, rtol: float = 0.0) -> bool:
        other = self._coerce(other)
        return bool(np.allclose(self.coeffs, other.coeffs, atol=atol, rtol=rtol))

    def __repr__(self) -> str:
        terms = [
            f"{c:+.6g}" + ("" if i == 0 else "*" + self.sig.blade_name(i))
            for i, c in enumerate(self.coeffs)
            if c != 0.0
        ]
        body = " ".join(terms) if terms else "0"
        return f"Multivector[{self.sig}]({body})"


def basis_vector(sig: Signature, i: int) -> Multivector:
    """The i-th (zero-based) basis vector; ``i < p`` squares to +1, otherwise -1."""
    if not 0 <= i < sig.n:
        raise IndexError(f"basis vector index {i} out of range for {sig}")
    c = np.zeros(sig.dim)
    c[1 << i] = 1.0
    return Multivector(sig, c)


def basis_vectors(sig: Signature) -> list:
    return [basis_vector(sig, i) for i in range(sig.n)]


def pseudoscalar(sig: Signature) -> Multivector:
    c = np.zeros(sig.dim)
    c[sig.pseudoscalar_index] = 1.0
    return Multivector(sig, c)


def geometric_product(a: Multivector, b: Multivector) -> Multivector:
    if a.sig != b.sig:
        a._check(b)
    return Multivector._new(a.sig, kernels.geometric_product(a.coeffs, b.coeffs, a.sig.sign_table))


def wedge(a: Multivector, b: Multivector) -> Multivector:
    """Outer product; for orthogonal basis blades it keeps only disjoint factor pairs."""
    a._check(b)
    return Multivector._new(a.sig, kernels.geometric_product(a.coeffs, b.coeffs, a.sig.outer_table))


def commutator_product(a: Multivector, b: Multivector) -> Multivector:
    """``(ab - ba) / 2``."""
    return (a * b - b * a) * 0.5


def anticommutator_product(a: Multivector, b: Multivector) -> Multivector:
    """``(ab + ba) / 2``."""
    return (a * b + b * a) * 0.5


def grade_project(a: Multivector, k: int) -> Multivector:
    return Multivector._new(a.sig, np.where(a.sig.grades == k, a.coeffs, 0.0))


def _grade_signs(sig: Signature, signs_by_grade) -> np.ndarray:
    return np.asarray(signs_by_grade, dtype=float)[sig.grades]


def reverse(a: Multivector) -> Multivector:
    """Reversion: grade k picks up ``(-1)**(k(k-1)/2)``."""
    k = np.arange(MAX_DIMENSION + 1)
    s = (-1.0) ** (k * (k - 1) // 2)
    return Multivector(a.sig, a.coeffs * _grade_signs(a.sig, s))


def involute(a: Multivector) -> Multivector:
    """Grade involution: grade k picks up ``(-1)**k``."""
    s = (-1.0) ** np.arange(MAX_DIMENSION + 1)
    return Multivector(a.sig, a.coeffs * _grade_signs(a.sig, s))


def srev_part(a: Multivector) -> Multivector:
    """Self-reverse part ``(a + ~a) / 2``."""
    return (a + reverse(a)) * 0.5


def arev_part(a: Multivector) -> Multivector:
    """Anti-self-reverse part ``(a - ~a) / 2``."""
    return (a - reverse(a)) * 0.5


def scalar_part(a: Multivector) -> float:
    return float(a.coeffs[0])


def even_part(a: Multivector) -> Multivector:
    return Multivector(a.sig, np.where(a.sig.grades % 2 == 0, a.coeffs, 0.0))


def grade_dimension(sig: Signature, k: int) -> int:
    return comb(sig.n, k)


def is_homogeneous(a: Multivector, k: int, tol: float = 1e-12) -> bool:
    off = np.where(a.sig.grades == k, 0.0, a.coeffs)
    return bool(np.abs(off).max() <= tol)


def require_bivector(a: Multivector, tol: float = 1e-12) -> Multivector:
    scale = max(1.0, float(np.abs(a.coeffs).max()))
    if not is_homogeneous(a, 2, tol * scale):
        raise GradeError(f"expected a bivector, got grades {sorted(a.grades_present(tol))}")
    return a


def random_multivector(sig: Signature, rng: np.random.Generator, grades=None, low=-1.0, high=1.0) -> Multivector:
    """Uniform random coefficients on the requested grades (all grades by default)."""
    c = rng.uniform(low, high, sig.dim)
    if grades is not None:
        c = np.where(np.isin(sig.grades, list(grades)), c, 0.0)
    return Multivector(sig, c)
