"""Exact checks of Serre's regularity condition for affine semigroup rings.

The library decides regularity in codimension l for the semigroup ring
of an affine semigroup given by integer generators, and carries a
specialized arithmetic shortcut for Rees algebras of integrally closed
pure-power monomial ideals. All computation is exact integer
arithmetic.
"""

__version__ = "0.1.0"

from .cone import (
    Cone,
    Face,
    FullDimRequired,
    ZeroGenerator,
    cone_from_generators,
    face_intersection_of,
    faces_up_to_codim,
)
from .exactlin import (
    DimensionMismatch,
    IntMat,
    IntVec,
    LatticeBasis,
    PrimitiveForm,
    ZeroVector,
    hnf,
    kernel_basis,
    lattice_equal,
    lattice_member,
    primitive,
)
from .rees import (
    BadLambda,
    BadRange,
    LambdaSpec,
    NumericalSgp,
    PreconditionViolated,
    ReesCheck,
    bounded_normality_scan,
    check_R_fast,
    check_Rn,
    check_Rn_minus_1,
    degree2_decompose,
    gap_probe,
    ideal_min_gens,
    lambda_spec,
    minimal_elements_above,
    numsgp_contains,
    rees_semigroup,
)
from .semigroup import (
    AffineSemigroup,
    GroupNotFull,
    PointedRequired,
    contains,
    face_group,
    generators_on_face,
    new_semigroup,
)
from .serre import (
    FAILS,
    HOLDS,
    INCONCLUSIVE,
    FaceVerdict,
    SerreReport,
    check_R,
    check_face,
    find_gammas,
)
