"""Exact-arithmetic census of supersingular abelian surfaces over prime fields.

The headline quantity is the number H(p) of isomorphism classes of
supersingular abelian surfaces in the isogeny class of the Weil number
sqrt(p), obtained as class numbers h = Mass + Ell of one or three orders in
a totally definite quaternion algebra over Q(sqrt(p)).  Every intermediate
invariant — zeta_F(-1), fundamental units, class numbers of quadratic and
CM quartic fields — is computed exactly and exposed.
"""
from .arith import (
    ExactRational,
    IntegralityViolation,
    is_prime,
    isqrt,
    kronecker,
    primes_in,
)
from .quadratic import (
    FundamentalUnit,
    QuadFieldInfo,
    class_number_imag,
    class_number_real,
    field_discriminant,
    field_info,
    fundamental_discriminant,
    fundamental_unit,
    is_fundamental_discriminant,
    varpi,
)
from .zeta import zeta_minus_one
from .cmfield import (
    CmFieldInvariant,
    cm_class_number,
    cm_invariant,
    sqrt_in_F,
    unit_index_q,
)
from .classno import (
    EmbeddingRow,
    IsogenyCensus,
    OrderKind,
    OrderReport,
    census,
    class_number,
    deuring_count,
    elliptic_part,
    embedding_rows,
    mass,
    order_report,
    peters_ratio,
    quaternion_class_number,
    surface_count,
    surface_count_closed_form,
)

__version__ = "0.1.0"

__all__ = [
    "ExactRational",
    "IntegralityViolation",
    "is_prime",
    "isqrt",
    "kronecker",
    "primes_in",
    "QuadFieldInfo",
    "FundamentalUnit",
    "field_discriminant",
    "field_info",
    "fundamental_unit",
    "varpi",
    "class_number_imag",
    "class_number_real",
    "fundamental_discriminant",
    "is_fundamental_discriminant",
    "zeta_minus_one",
    "CmFieldInvariant",
    "sqrt_in_F",
    "unit_index_q",
    "cm_class_number",
    "cm_invariant",
    "OrderKind",
    "EmbeddingRow",
    "OrderReport",
    "IsogenyCensus",
    "embedding_rows",
    "mass",
    "elliptic_part",
    "class_number",
    "order_report",
    "census",
    "surface_count",
    "surface_count_closed_form",
    "quaternion_class_number",
    "deuring_count",
    "peters_ratio",
]
