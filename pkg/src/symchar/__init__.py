"""Exact characteristic numbers of compact symmetric-space duals.

Truncated-ring arithmetic, rank classification of locally symmetric
spaces, characteristic-number tables of the rank-one duals, and the
covering-transfer divisibility bounds built on them.
"""

from symchar.catalog import (
    Classification,
    SpaceSpec,
    classify,
    dimension_of,
    dual_of,
    euler_characteristic_dual,
    parse_space,
    spec_string,
)
from symchar.charclass import (
    CharNumberTable,
    DualSpace,
    bounds_orientably,
    cayley_plane,
    complex_projective,
    pontrjagin_numbers,
    quaternionic_projective,
    sphere,
    stiefel_whitney_numbers,
    total_pontrjagin,
    total_stiefel_whitney,
)
from symchar.errors import SymcharError
from symchar.partitions import (
    SWMonomial,
    format_partition,
    parse_partition,
    partitions_of,
    sw_monomials_of,
)
from symchar.ring import (
    EXACT,
    MOD2,
    GradedElement,
    RingDescriptor,
    kernel_backend,
    make_element,
    one,
    zero,
)
from symchar.transfer import (
    DSReport,
    MuReport,
    check_cover_degree,
    deligne_sullivan_check,
    gl_order,
    mu,
    pullback_numbers,
    solve_manifold_numbers,
)

__version__ = "0.1.0"

__all__ = [
    "Classification",
    "SpaceSpec",
    "classify",
    "dimension_of",
    "dual_of",
    "euler_characteristic_dual",
    "parse_space",
    "spec_string",
    "CharNumberTable",
    "DualSpace",
    "bounds_orientably",
    "cayley_plane",
    "complex_projective",
    "pontrjagin_numbers",
    "quaternionic_projective",
    "sphere",
    "stiefel_whitney_numbers",
    "total_pontrjagin",
    "total_stiefel_whitney",
    "SymcharError",
    "SWMonomial",
    "format_partition",
    "parse_partition",
    "partitions_of",
    "sw_monomials_of",
    "EXACT",
    "MOD2",
    "GradedElement",
    "RingDescriptor",
    "kernel_backend",
    "make_element",
    "one",
    "zero",
    "DSReport",
    "MuReport",
    "check_cover_degree",
    "deligne_sullivan_check",
    "gl_order",
    "mu",
    "pullback_numbers",
    "solve_manifold_numbers",
    "__version__",
]
