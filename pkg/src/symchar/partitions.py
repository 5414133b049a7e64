"""Integer partitions and the Stiefel-Whitney monomial index set.

Partitions are plain tuples of parts in weakly decreasing order, enumerated
lexicographically decreasing: partitions_of(4) starts at (4,) and ends at
(1, 1, 1, 1).  A degree-n SW monomial w_1^r1 ... w_n^rn with sum(i * ri) = n
corresponds to the partition of n whose parts are the factor indices, so the
two enumerations are in bijection.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from symchar.errors import SymcharError

Partition = tuple[int, ...]


def _descending_parts(n: int, pivot: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for k in range(min(n, pivot), 0, -1):
        for rest in _descending_parts(n - k, k):
            yield (k,) + rest


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n, lexicographically decreasing.  n >= 0."""
    if n < 0:
        raise SymcharError("partitions are defined for non-negative integers")
    return list(_descending_parts(n, n))


def partition_weight(partition: Partition) -> int:
    return sum(partition)


def format_partition(partition: Partition) -> str:
    """Canonical serialization: comma-joined parts, "" for the empty one."""
    return ",".join(str(p) for p in partition)


def parse_partition(text: str) -> Partition:
    """Inverse of format_partition.  Tolerates surrounding parens and spaces."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    s = s.strip()
    if not s:
        return ()
    try:
        parts = tuple(int(tok.strip()) for tok in s.split(","))
    except ValueError:
        raise SymcharError(f"malformed partition {text!r}") from None
    if any(p < 1 for p in parts):
        raise SymcharError(f"partition parts must be positive: {text!r}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise SymcharError(f"partition parts must be weakly decreasing: {text!r}")
    return parts


@dataclass(frozen=True, slots=True)
class SWMonomial:
    """A monomial in Stiefel-Whitney classes, e.g. w_1^2 w_3.

    exponents: ((index, exponent), ...) with indices strictly increasing
    and exponents positive.
    """

    exponents: tuple[tuple[int, int], ...]

    @property
    def total_degree(self) -> int:
        return sum(i * r for i, r in self.exponents)

    def format(self) -> str:
        factors = []
        for i, r in self.exponents:
            factors.append(f"w{i}" if r == 1 else f"w{i}^{r}")
        return " ".join(factors)


_FACTOR_RE = re.compile(r"^w(\d+)(?:\^(\d+))?$")


def parse_monomial(text: str) -> SWMonomial:
    """Parse "w1^2 w3" style monomials (factors in any order)."""
    counts: Counter[int] = Counter()
    tokens = text.split()
    if not tokens:
        raise SymcharError("empty Stiefel-Whitney monomial")
    for tok in tokens:
        m = _FACTOR_RE.match(tok)
        if not m:
            raise SymcharError(f"malformed Stiefel-Whitney factor {tok!r}")
        index = int(m.group(1))
        exponent = int(m.group(2)) if m.group(2) else 1
        if index < 1 or exponent < 1:
            raise SymcharError(f"malformed Stiefel-Whitney factor {tok!r}")
        counts[index] += exponent
    return SWMonomial(tuple(sorted(counts.items())))


def monomial_from_partition(partition: Partition) -> SWMonomial:
    """Partition parts become factor indices: (3, 1, 1) -> w1^2 w3."""
    counts = Counter(partition)
    return SWMonomial(tuple(sorted(counts.items())))


def sw_monomials_of(dim: int) -> list[SWMonomial]:
    """All SW monomials of total degree dim, in partition enumeration order."""
    if dim < 1:
        raise SymcharError("monomial degree must be a positive integer")
    return [monomial_from_partition(p) for p in partitions_of(dim)]
