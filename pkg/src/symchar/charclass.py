"""Characteristic classes and numbers of the rank-one compact duals.

Total Pontrjagin classes, written in one generator u of the cohomology ring:

  S^n:    1                                   (u in degree n, T = 1)
  CP^n:   (1 + a^2)^(n+1)                     (a in degree 2, T = n)
  HP^n:   (1 + u)^(2n+2) * (1 + 4u)^(-1)      (u in degree 4, T = n)
  CayP^2: 1 + 6u + 39u^2                      (u in degree 8, T = 2)

The CayP^2 coefficients are rigid: the only ambiguity is the sign of the
degree-8 term, and 6 is the standard positive choice (consistent with
p_2^2 = 36, p_4 = 39).  Stiefel-Whitney classes are computed for spheres
(all vanish) and CP^n (w = (1 + a)^(n+1) mod 2); for HP^n and CayP^2 they
are much harder to obtain and deliberately unsupported.

A characteristic number is the coefficient of the top generator power in a
product of class components; the fundamental class is normalized so that
the top power of the generator evaluates to 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from symchar.errors import (
    DimensionMismatchError,
    SymcharError,
    UnsupportedClassError,
)
from symchar.partitions import (
    format_partition,
    partitions_of,
    sw_monomials_of,
)
from symchar.ring import (
    EXACT,
    MOD2,
    GradedElement,
    RingDescriptor,
    make_element,
    one,
    zero,
)

SPHERE = "sphere"
COMPLEX_PROJECTIVE = "complex-projective"
QUATERNIONIC_PROJECTIVE = "quaternionic-projective"
CAYLEY_PLANE = "cayley-plane"

PONTRJAGIN = "pontrjagin"
SW = "sw"

BOUNDS = "bounds"
DOES_NOT_BOUND = "does_not_bound"
INSUFFICIENT_DATA = "insufficient_data"


@dataclass(frozen=True, slots=True)
class DualSpace:
    """A rank-one compact dual: S^n, CP^n, HP^n, or CayP^2."""

    kind: str
    n: int = 0

    @property
    def real_dimension(self) -> int:
        if self.kind == SPHERE:
            return self.n
        if self.kind == COMPLEX_PROJECTIVE:
            return 2 * self.n
        if self.kind == QUATERNIONIC_PROJECTIVE:
            return 4 * self.n
        if self.kind == CAYLEY_PLANE:
            return 16
        raise SymcharError(f"unknown dual space kind {self.kind!r}")

    def render(self) -> str:
        if self.kind == SPHERE:
            return f"S^{self.n}"
        if self.kind == COMPLEX_PROJECTIVE:
            return f"CP^{self.n}"
        if self.kind == QUATERNIONIC_PROJECTIVE:
            return f"HP^{self.n}"
        return "CayP^2"


def sphere(n: int) -> DualSpace:
    if n < 1:
        raise SymcharError("sphere dimension must be >= 1")
    return DualSpace(SPHERE, n)


def complex_projective(n: int) -> DualSpace:
    if n < 1:
        raise SymcharError("projective space index must be >= 1")
    return DualSpace(COMPLEX_PROJECTIVE, n)


def quaternionic_projective(n: int) -> DualSpace:
    if n < 1:
        raise SymcharError("projective space index must be >= 1")
    return DualSpace(QUATERNIONIC_PROJECTIVE, n)


def cayley_plane() -> DualSpace:
    return DualSpace(CAYLEY_PLANE, 2)


_CAYLEY_CLASS = (1, 6, 39)


def cohomology_ring(space: DualSpace, mode: str = EXACT) -> RingDescriptor:
    """The truncated ring carrying the characteristic classes of the space."""
    if space.kind == SPHERE:
        return RingDescriptor(space.n, 1, mode)
    if space.kind == COMPLEX_PROJECTIVE:
        return RingDescriptor(2, space.n, mode)
    if space.kind == QUATERNIONIC_PROJECTIVE:
        return RingDescriptor(4, space.n, mode)
    return RingDescriptor(8, 2, mode)


def total_pontrjagin(space: DualSpace) -> GradedElement:
    ring = cohomology_ring(space)
    if space.kind == SPHERE:
        return one(ring)
    if space.kind == COMPLEX_PROJECTIVE:
        # (1 + a^2)^(n+1); a^2 is the degree-4 slot only when n >= 2
        base = make_element(ring, [1] if space.n < 2 else [1, 0, 1])
        return base.pow(space.n + 1)
    if space.kind == QUATERNIONIC_PROJECTIVE:
        binom = make_element(ring, [1, 1]).pow(2 * space.n + 2)
        correction = make_element(ring, [1, 4]).invert_unit()
        return binom.mul(correction)
    return make_element(ring, _CAYLEY_CLASS)


def total_stiefel_whitney(space: DualSpace) -> GradedElement:
    """Total SW class; defined here for spheres and CP^n only."""
    if space.kind == SPHERE:
        return one(cohomology_ring(space, MOD2))
    if space.kind == COMPLEX_PROJECTIVE:
        ring = cohomology_ring(space, MOD2)
        return make_element(ring, [1, 1]).pow(space.n + 1)
    raise UnsupportedClassError(
        f"Stiefel-Whitney classes are unsupported for {space.render()}"
    )


def _degree_component(total: GradedElement, degree: int) -> GradedElement:
    """The part of a total class in one cohomological degree."""
    ring = total.ring
    slot, rem = divmod(degree, ring.generator_degree)
    if rem or slot > ring.truncation_top:
        return zero(ring)
    coeffs = [0] * ring.n_slots
    coeffs[slot] = total.coefficient(slot)
    return GradedElement(ring, tuple(coeffs))


@dataclass(frozen=True)
class CharNumberTable:
    """Characteristic numbers of one space, keyed by serialized index.

    Pontrjagin tables are keyed by partitions ("2,2"); SW tables by
    monomials ("w1^2 w2").  ``reason`` marks tables that are empty by
    degree bookkeeping (every number is vacuously zero).
    """

    kind: str
    dimension: int
    entries: dict = field(default_factory=dict)
    reason: str | None = None

    def all_zero(self) -> bool:
        return all(v == 0 for v in self.entries.values())

    def to_json_dict(self) -> dict:
        payload = {
            "dim": self.dimension,
            "kind": self.kind,
            "entries": dict(self.entries),
        }
        if self.reason:
            payload["reason"] = self.reason
        return payload


def pontrjagin_numbers(space: DualSpace) -> CharNumberTable:
    """All Pontrjagin numbers p_I, I ranging over partitions of dim/4."""
    dim = space.real_dimension
    if dim % 4:
        return CharNumberTable(
            PONTRJAGIN, dim, {}, reason="dimension-not-multiple-of-4"
        )
    total = total_pontrjagin(space)
    ring = total.ring
    top_slot = dim // ring.generator_degree
    entries: dict = {}
    for partition in partitions_of(dim // 4):
        acc = one(ring)
        for part in partition:
            acc = acc.mul(_degree_component(total, 4 * part))
        entries[format_partition(partition)] = acc.coefficient(top_slot)
    return CharNumberTable(PONTRJAGIN, dim, entries)


def stiefel_whitney_numbers(space: DualSpace) -> CharNumberTable:
    """All SW numbers, indexed by degree-dim monomials in w_1 .. w_dim."""
    total = total_stiefel_whitney(space)  # rejects HP^n and CayP^2
    dim = space.real_dimension
    ring = total.ring
    top_slot = dim // ring.generator_degree
    entries: dict = {}
    for monomial in sw_monomials_of(dim):
        acc = one(ring)
        for index, exponent in monomial.exponents:
            acc = acc.mul(_degree_component(total, index).pow(exponent))
        entries[monomial.format()] = acc.coefficient(top_slot)
    return CharNumberTable(SW, dim, entries)


def bounds_orientably(
    p_table: CharNumberTable, sw_table: CharNumberTable | None
) -> str:
    """Wall's criterion: a closed orientable manifold bounds orientably
    iff all its Pontrjagin and Stiefel-Whitney numbers vanish.

    Pass sw_table=None when the SW side is unknown; the verdict is then
    either DOES_NOT_BOUND (some Pontrjagin number is nonzero) or
    INSUFFICIENT_DATA.
    """
    if p_table.kind != PONTRJAGIN:
        raise SymcharError("first table must hold Pontrjagin numbers")
    if sw_table is not None:
        if sw_table.kind != SW:
            raise SymcharError("second table must hold Stiefel-Whitney numbers")
        if sw_table.dimension != p_table.dimension:
            raise DimensionMismatchError(
                "Pontrjagin and Stiefel-Whitney tables disagree on dimension"
            )
    if not p_table.all_zero():
        return DOES_NOT_BOUND
    if sw_table is None:
        return INSUFFICIENT_DATA
    if not sw_table.all_zero():
        return DOES_NOT_BOUND
    return BOUNDS
