"""Scalar + pseudoscalar numbers ``alpha + beta*I``.

``I`` is the unit top-grade blade of the algebra.  It commutes with every even
multivector when ``n <= 4``, so these numbers act as scalars on bivectors.
When ``I**2 == -1`` they are ordinary complex numbers; when ``I**2 == +1``
they are split-complex and are handled through the idempotent decomposition
``x = u*(1+I)/2 + v*(1-I)/2`` with ``u = alpha+beta`` and ``v = alpha-beta``.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

import numpy as np

from .algebra import Multivector, Signature
from .errors import GradeError, NoRootError, PoleError

NEAR_NULL = 1e-8  # |sqrt(z)| below this uses Taylor series for f(s)/s
POLE_TOL = 1e-14
REAL_TOL = 1e-12


@dataclass(frozen=True)
class ScalarPseudo:
    alpha: float
    beta: float = 0.0
    isq: int = -1  # square of the pseudoscalar, +1 or -1

    @classmethod
    def from_multivector(cls, a: Multivector, tol: float = 1e-9) -> ScalarPseudo:
        sig = a.sig
        c = np.abs(a.coeffs)
        top = sig.dim - 1
        if c[1:top].max(initial=0.0) > tol * max(1.0, c[0], c[top]):
            raise GradeError(f"not a scalar+pseudoscalar element: {a!r}")
        return cls(float(a.coeffs[0]), float(a.coeffs[top]), sig.pseudoscalar_square)

    @classmethod
    def from_complex(cls, c: complex, isq: int = -1) -> ScalarPseudo:
        return cls(c.real, c.imag, isq)

    @classmethod
    def from_split(cls, u: float, v: float, isq: int = 1) -> ScalarPseudo:
        return cls(0.5 * (u + v), 0.5 * (u - v), isq)

    def to_multivector(self, sig: Signature) -> Multivector:
        c = np.zeros(sig.dim)
        c[0] = self.alpha
        c[sig.dim - 1] += self.beta
        return Multivector._new(sig, c)

    def to_complex(self) -> complex:
        return complex(self.alpha, self.beta)

    def split(self) -> tuple:
        return self.alpha + self.beta, self.alpha - self.beta

    @property
    def is_complex(self) -> bool:
        return self.isq < 0

    def _like(self, alpha, beta) -> ScalarPseudo:
        return ScalarPseudo(float(alpha), float(beta), self.isq)

    def __add__(self, other):
        if isinstance(other, ScalarPseudo):
            return self._like(self.alpha + other.alpha, self.beta + other.beta)
        if isinstance(other, (int, float)):
            return self._like(self.alpha + other, self.beta)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return self._like(-self.alpha, -self.beta)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, ScalarPseudo):
            a1, b1, a2, b2 = self.alpha, self.beta, other.alpha, other.beta
            return self._like(a1 * a2 + self.isq * b1 * b2, a1 * b2 + b1 * a2)
        if isinstance(other, (int, float)):
            return self._like(self.alpha * other, self.beta * other)
        if isinstance(other, Multivector):
            return self.to_multivector(other.sig) * other
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return self * other
        if isinstance(other, Multivector):
            return other * self.to_multivector(other.sig)
        return NotImplemented

    def modulus(self) -> float:
        """Distance-like measure of invertibility; zero exactly when not invertible."""
        if self.is_complex:
            return abs(self.to_complex())
        u, v = self.split()
        return min(abs(u), abs(v))

    def inverse(self) -> ScalarPseudo:
        if self.modulus() == 0.0:
            raise ZeroDivisionError(f"{self} is not invertible")
        if self.is_complex:
            return ScalarPseudo.from_complex(1.0 / self.to_complex(), self.isq)
        u, v = self.split()
        return ScalarPseudo.from_split(1.0 / u, 1.0 / v, self.isq)

    def __truediv__(self, other):
        if isinstance(other, ScalarPseudo):
            return self * other.inverse()
        if isinstance(other, (int, float)):
            return self._like(self.alpha / other, self.beta / other)
        return NotImplemented

    def sqrt(self) -> ScalarPseudo:
        """Principal root.

        Complex case: branch cut on the negative real axis with ``sqrt(-1) = +I``.
        Split case: both idempotent components must be non-negative.
        """
        if self.is_complex:
            # +0.0 turns a -0.0 imaginary part into +0.0 so sqrt(-1) lands on +I
            return ScalarPseudo.from_complex(cmath.sqrt(complex(self.alpha, self.beta + 0.0)), self.isq)
        u, v = self.split()
        scale = max(1.0, abs(u), abs(v))
        if u < -REAL_TOL * scale or v < -REAL_TOL * scale:
            raise NoRootError(f"{self} has no square root in the split-complex plane")
        return ScalarPseudo.from_split(np.sqrt(max(u, 0.0)), np.sqrt(max(v, 0.0)), self.isq)

    def apply(self, fn) -> ScalarPseudo:
        """Evaluate an analytic function given on complex scalars.

        In the split case ``fn`` is evaluated on each idempotent component and
        must come back real there.
        """
        if self.is_complex:
            return ScalarPseudo.from_complex(complex(fn(self.to_complex())), self.isq)
        out = []
        for x in self.split():
            y = complex(fn(complex(x, 0.0)))
            if abs(y.imag) > REAL_TOL * max(1.0, abs(y.real)):
                raise NoRootError(f"no real value of the series at split component {x!r}")
            out.append(y.real)
        return ScalarPseudo.from_split(out[0], out[1], self.isq)

    def __repr__(self) -> str:
        unit = "I" if self.isq < 0 else "J"
        return f"ScalarPseudo({self.alpha:.17g} {self.beta:+.17g}{unit})"


# Functions of z = x**2.  The even ones are f(sqrt z), the odd ones f(sqrt z)/sqrt z.
# All four are even in sqrt(z), so the branch of the root never matters.

def cosh_of_square(z: complex) -> complex:
    return cmath.cosh(cmath.sqrt(z))


def sinh_ratio(z: complex) -> complex:
    if abs(z) < NEAR_NULL ** 2:
        return 1.0 + z / 6.0 + z * z / 120.0
    s = cmath.sqrt(z)
    return cmath.sinh(s) / s


def tanh_ratio(z: complex) -> complex:
    if abs(z) < NEAR_NULL ** 2:
        return 1.0 - z / 3.0 + 2.0 * z * z / 15.0
    s = cmath.sqrt(z)
    c = cmath.cosh(s)
    if abs(c) < POLE_TOL:
        raise PoleError(f"tanh pole at sqrt(z) = {s}")
    return cmath.sinh(s) / (c * s)


def atanh_ratio(z: complex) -> complex:
    if abs(z) < NEAR_NULL ** 2:
        return 1.0 + z / 3.0 + z * z / 5.0
    if abs(z - 1.0) < POLE_TOL:
        raise PoleError("atanh pole: argument squares to 1")
    s = cmath.sqrt(z)
    return cmath.atanh(s) / s


EVEN_SERIES = {"cosh": cosh_of_square}
ODD_SERIES = {"sinh": sinh_ratio, "tanh": tanh_ratio, "atanh": atanh_ratio}
# the functions of a plain number, for evaluating f(N) directly
SCALAR_FUNCTIONS = {"cosh": cmath.cosh, "sinh": cmath.sinh, "tanh": cmath.tanh, "atanh": cmath.atanh}
