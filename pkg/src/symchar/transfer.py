"""Covering-transfer arithmetic on characteristic-number tables.

For a degree-d covering M' -> M, every characteristic number pulls back
multiplied by d.  For a degree-r tangential map f: M -> M_U between closed
oriented manifolds of equal dimension combined with a degree-d cover, the
numbers satisfy d * p_I(M) = r * p_I(M_U), which makes three things
computable exactly:

  * pullback_numbers:       multiply a table through by one degree;
  * solve_manifold_numbers: recover p_I(M) = d * p_I(M_U) / r when every
                            division is exact;
  * mu:                     the least positive mu such that mu * p_I(M) is
                            an integer multiple of lcm(|p_I(M)|, |p_I(M_U)|)
                            for every partition I with p_I(M) != 0.  mu
                            divides the degree of any covering of M that
                            admits a tangential map to M_U.

The general-linear order counts GL_n(F_q); a classical smoothing argument
needs it over two fields of distinct characteristic, which is the
``deligne_sullivan_check`` divisibility test.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt, lcm, prod

from symchar.charclass import PONTRJAGIN, SW, CharNumberTable
from symchar.errors import (
    BadPrimePowerError,
    DimensionMismatchError,
    EqualCharacteristicError,
    InconsistentDegreesError,
    InconsistentTablesError,
    SymcharError,
)


def pullback_numbers(table: CharNumberTable, degree: int) -> CharNumberTable:
    """Table of the degree-``degree`` cover: every entry times the degree.

    SW tables live mod 2, so the result is reduced there.
    """
    if table.kind == SW:
        entries = {k: (v * degree) & 1 for k, v in table.entries.items()}
    else:
        entries = {k: v * degree for k, v in table.entries.items()}
    return CharNumberTable(table.kind, table.dimension, entries, table.reason)


def solve_manifold_numbers(
    dual_table: CharNumberTable, deg_t: int, deg_f: int
) -> CharNumberTable:
    """Solve deg_f * p_I(M) = deg_t * p_I(M_U) for the table of M.

    deg_f is the tangential-map degree (nonzero), deg_t the covering
    degree carried along the diagram.  Every division must be exact;
    a non-integer entry means no such manifold exists and raises
    InconsistentDegreesError.
    """
    if dual_table.kind != PONTRJAGIN:
        raise SymcharError("degree solving applies to Pontrjagin tables only")
    if deg_f == 0:
        raise InconsistentDegreesError("tangential-map degree must be nonzero")
    if deg_t == 0 and any(v != 0 for v in dual_table.entries.values()):
        raise InconsistentDegreesError(
            "degree 0 forces every solved number to vanish, but the dual "
            "table has a nonzero entry"
        )
    entries: dict = {}
    for key, value in dual_table.entries.items():
        numerator = deg_t * value
        quotient, remainder = divmod(numerator, deg_f)
        if remainder:
            raise InconsistentDegreesError(
                f"entry {key or '()'}: {deg_t} * {value} is not divisible "
                f"by {deg_f}"
            )
        entries[key] = quotient
    return CharNumberTable(
        PONTRJAGIN, dual_table.dimension, entries, dual_table.reason
    )


@dataclass(frozen=True)
class MuReport:
    """The divisibility bound mu together with its per-partition pieces."""

    mu: int
    contributions: dict
    skipped: list

    def to_json_dict(self) -> dict:
        return {
            "mu": self.mu,
            "contributions": dict(self.contributions),
            "skipped": list(self.skipped),
        }


def mu(table_m: CharNumberTable, table_mu: CharNumberTable) -> MuReport:
    """mu = lcm over partitions I with p_I(M) != 0 of
    lcm(|p_I(M)|, |p_I(M_U)|) / |p_I(M)|; 1 when no partition qualifies.

    Tables with p_I(M_U) != 0 but p_I(M) = 0 (or the reverse) admit no
    covering/tangential diagram at all and raise InconsistentTablesError.
    """
    if table_m.kind != PONTRJAGIN or table_mu.kind != PONTRJAGIN:
        raise SymcharError("mu applies to Pontrjagin tables only")
    if table_m.dimension != table_mu.dimension:
        raise DimensionMismatchError(
            "tables must describe spaces of one dimension"
        )
    contributions: dict = {}
    skipped: list = []
    for key in sorted(set(table_m.entries) | set(table_mu.entries)):
        a = table_m.entries.get(key, 0)
        b = table_mu.entries.get(key, 0)
        if a == 0:
            if b != 0:
                raise InconsistentTablesError(
                    f"entry {key or '()'}: the dual number is nonzero while "
                    "the manifold number vanishes; no covering transfer is "
                    "consistent with this"
                )
            skipped.append(key)
            continue
        if b == 0:
            raise InconsistentTablesError(
                f"entry {key or '()'}: the manifold number is nonzero while "
                "the dual number vanishes; no tangential map of nonzero "
                "degree allows this"
            )
        contributions[key] = lcm(abs(a), abs(b)) // abs(a)
    value = 1
    for c in contributions.values():
        value = lcm(value, c)
    return MuReport(value, contributions, skipped)


def check_cover_degree(mu_value: int, degree: int) -> bool:
    """Whether a covering degree is consistent with the bound: mu | degree."""
    if mu_value < 1:
        raise SymcharError("mu must be a positive integer")
    if degree < 1:
        raise SymcharError("covering degree must be a positive integer")
    return degree % mu_value == 0


def _prime_power_base(q: int) -> int | None:
    """The prime p with q = p^e, or None when q is not a prime power."""
    if q < 2:
        return None
    for p in range(2, isqrt(q) + 1):
        if q % p == 0:
            while q % p == 0:
                q //= p
            return p if q == 1 else None
    return q


def gl_order(n: int, q: int) -> int:
    """|GL_n(F_q)| = prod_{i=0}^{n-1} (q^n - q^i).  q must be a prime power."""
    if n < 1:
        raise SymcharError("matrix size must be a positive integer")
    if _prime_power_base(q) is None:
        raise BadPrimePowerError(f"{q} is not a prime power")
    qn = q**n
    return prod(qn - q**i for i in range(n))


@dataclass(frozen=True)
class DSReport:
    """Witnesses for the smoothing divisibility test."""

    divides: bool
    order_1: int
    order_2: int
    order_product: int

    def to_json_dict(self) -> dict:
        return {
            "divides": self.divides,
            "order_1": self.order_1,
            "order_2": self.order_2,
            "order_product": self.order_product,
        }


def deligne_sullivan_check(mu_value: int, k: int, q1: int, q2: int) -> DSReport:
    """Test mu | |GL_{2k+1}(F_q1)| * |GL_{2k+1}(F_q2)|.

    The two prime powers must have distinct characteristics; equal ones
    raise EqualCharacteristicError.
    """
    if mu_value < 1:
        raise SymcharError("mu must be a positive integer")
    if k < 1:
        raise SymcharError("k must be a positive integer")
    p1 = _prime_power_base(q1)
    p2 = _prime_power_base(q2)
    if p1 is None:
        raise BadPrimePowerError(f"{q1} is not a prime power")
    if p2 is None:
        raise BadPrimePowerError(f"{q2} is not a prime power")
    if p1 == p2:
        raise EqualCharacteristicError(
            f"{q1} and {q2} share characteristic {p1}; the test needs "
            "distinct characteristics"
        )
    n = 2 * k + 1
    order_1 = gl_order(n, q1)
    order_2 = gl_order(n, q2)
    product = order_1 * order_2
    return DSReport(product % mu_value == 0, order_1, order_2, product)
