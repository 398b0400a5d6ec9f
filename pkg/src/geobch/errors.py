"""Exception hierarchy.

Everything raised on purpose by this package derives from ``GeometricAlgebraError``.
The CLI maps :class:`SingularityError` to exit code 3 and :class:`DomainError`
to exit code 4.
"""


class GeometricAlgebraError(Exception):
    """Base class for all errors raised by geobch."""


class SignatureError(GeometricAlgebraError, ValueError):
    """Invalid signature, or operands living in different algebras."""


class GradeError(GeometricAlgebraError, ValueError):
    """A multivector does not have the grades an operation requires."""


class NotARotorError(GeometricAlgebraError, ValueError):
    """``R * ~R`` differs from 1 by more than the rotor tolerance."""


class DomainError(GeometricAlgebraError, ValueError):
    """Input outside the physical domain (superluminal speed, non-Lorentz matrix)."""


class SuperluminalError(DomainError):
    pass


class NotALorentzMatrixError(DomainError):
    pass


class NoRootError(GeometricAlgebraError, ArithmeticError):
    """No square root exists in the scalar-pseudoscalar plane (split-complex case)."""


class SingularityError(GeometricAlgebraError, ArithmeticError):
    """A mathematical singularity was hit; the result is undefined rather than inaccurate."""


class PiRotationError(SingularityError):
    """The self-reverse part of a rotor is not invertible (rotation by exactly pi)."""


class SingularDenominatorError(SingularityError):
    """The denominator ``1 + {T1, T2}/2`` of the BCH formula is not invertible."""


class PoleError(SingularityError):
    """A tanh/atanh evaluation landed on a pole."""
