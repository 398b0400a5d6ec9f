"""Closed-form composition of rotations and Lorentz transformations through their bivector generators."""

from .algebra import (
    Multivector,
    Signature,
    basis_vector,
    basis_vectors,
    grade_project,
    pseudoscalar,
    reverse,
)
from .errors import (
    DomainError,
    GeometricAlgebraError,
    GradeError,
    NoRootError,
    NotALorentzMatrixError,
    NotARotorError,
    PiRotationError,
    PoleError,
    SignatureError,
    SingularDenominatorError,
    SingularityError,
    SuperluminalError,
)
from .kernels import BACKEND
from .kinematics import (
    BoostRotationPair,
    boost_boost_decompose,
    compose_half_velocities,
    full_velocity,
    half_velocity,
    wigner_angle,
)
from .pauli import from_matrix, generator_to_matrix2, matrix_atanh, matrix_bch, matrix_tanh, to_matrix
from .rotors import (
    bch,
    bch_fold,
    bch_series_oracle,
    biv_exp,
    invariant_decomposition,
    normalize_bivector,
    rodrigues_compose,
    rotor_log,
)
from .scalarpseudo import ScalarPseudo
from .spacetime import (
    LorentzGenerator,
    bivector_to_generator,
    generator_matrix,
    generator_to_bivector,
    matrix_exp_so13,
    rotor_to_matrix,
    spacetime_split,
)

__version__ = "0.1.0"
