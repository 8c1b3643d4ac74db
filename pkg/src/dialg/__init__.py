"""Exact arithmetic for finite-dimensional associative dialgebras.

A dialgebra carries two associative products, written <| and |> in ASCII,
tied together by three mixed laws. This package represents them by exact
structure constants over the rationals or GF(p) and provides law checking,
structural invariants, the standard constructions, the two-dimensional
classification and exhaustive small-field censuses.
"""

from .algebras import Algebra, BilinearProduct, Dialgebra, ProductTag
from .classify import (
    KIND_FROM_ASSOCIATIVE,
    KIND_I,
    KIND_II,
    KIND_III,
    KIND_IV,
    KIND_TRIVIAL,
    KIND_ZERO_CUBED_LEFT,
    KIND_ZERO_CUBED_RIGHT,
    SUBLABEL_SQUARE,
    SUBLABEL_TRIVIAL,
    CensusClass,
    ClassLabel,
    Fingerprint,
    ParamTable,
    are_isomorphic,
    automorphism_group,
    canonical_dialgebra,
    census,
    classify_dim2,
    dim2_constraints,
    enumerate_valid_dialgebras,
    fingerprint,
    is_isomorphism,
    param_dialgebra,
)
from .constructions import (
    ZeroCubedTriple,
    from_associative,
    from_differential,
    leibniz_bracket,
    opposite,
    quotient,
    zero_cubed_build,
)
from .errors import (
    DerivationSquareError,
    DialgError,
    FieldMismatchError,
    InternalCheckError,
    NonPrimeError,
    NotADerivationError,
    NotADialgebraError,
    NotAnIdealError,
    NotAssociativeError,
    NotInvertibleError,
    NotZeroCubedError,
    ParseError,
    SearchBoundExceededError,
    UnsupportedOverRationalsError,
)
from .fields import Field, Scalar, is_prime
from .fileformat import (
    parse_algebra,
    parse_dialgebra,
    serialize_algebra,
    serialize_dialgebra,
)
from .identities import (
    BarUnitSet,
    ViolationReport,
    bar_units,
    check_associative,
    check_dialgebra,
    check_leibniz,
    is_valid_dialgebra,
    law_residual,
)
from .linalg import Mat, Subspace, Vec, all_subspaces, kernel, rref, solve
from .structure import (
    DEFAULT_SEARCH_BOUND,
    AnnihilatorProfile,
    StructureFlags,
    algebra_annihilator,
    algebra_ideals,
    algebra_prime,
    algebra_semiprime,
    algebra_simple,
    annihilators,
    generated_ideal,
    is_ideal,
    is_zero_cubed,
    structure_flags,
    triples_equivalent,
    zero_cubed_decompose,
)

__version__ = "0.1.0"
