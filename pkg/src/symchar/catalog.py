"""Symmetric-space families, compact duals, and the rank classifier.

A locally symmetric space is described by a family name plus integer
parameters ("SU_pq(2,3)", "SLnR(4)", "CayH").  Each family maps to its
compact dual presented as a quotient G_U / K of compact Lie groups; the
classifier then reads everything off rank arithmetic:

  rank(G_U) == rank(K)  -> Euler characteristic of the dual is |W(G_U)|/|W(K)|
                           (positive), Gauss-Bonnet forces chi(M) != 0.
  rank(G_U) >  rank(K)  -> the dual carries a free torus action of the
                           difference rank, so chi and every Pontrjagin
                           number of the dual vanish.

Complex-type spaces (TypeIV) have parallelizable duals; no rank data is
needed or reported for them.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, prod

from symchar.errors import (
    MalformedSpecError,
    SymcharError,
    UnknownFamilyError,
    UnsupportedFamilyError,
)

# ---------------------------------------------------------------------------
# Compact group factors.  rank / |Weyl| / dim per classical family:
#   SU(n):  n-1,  n!,          n^2 - 1
#   SO(m):  m//2, 2^k k! (m = 2k+1) or 2^(k-1) k! (m = 2k), m(m-1)/2
#   Sp(n):  n,    2^n n!,      n(2n+1)
#   U(n):   n,    n!,          n^2
#   S(U_p x U_q): p+q-1, p! q!, p^2 + q^2 - 1
#   Spin(9): 4,   384,         36
#   F4:      4,   1152,        52
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class GroupFactor:
    kind: str
    params: tuple

    def rank(self) -> int:
        k, p = self.kind, self.params
        if k == "SU":
            return p[0] - 1
        if k == "SO":
            return p[0] // 2
        if k in ("Sp", "U"):
            return p[0]
        if k == "SUxU":
            return p[0] + p[1] - 1
        if k in ("Spin9", "F4"):
            return 4
        raise SymcharError(f"unknown group factor kind {k!r}")

    def weyl_order(self) -> int:
        k, p = self.kind, self.params
        if k in ("SU", "U"):
            return factorial(p[0])
        if k == "SO":
            m = p[0]
            half = m // 2
            order = 2**half * factorial(half)
            if m % 2 == 0 and half >= 1:
                order //= 2
            return order
        if k == "Sp":
            return 2 ** p[0] * factorial(p[0])
        if k == "SUxU":
            return factorial(p[0]) * factorial(p[1])
        if k == "Spin9":
            return 384
        if k == "F4":
            return 1152
        raise SymcharError(f"unknown group factor kind {k!r}")

    def dim(self) -> int:
        k, p = self.kind, self.params
        if k == "SU":
            return p[0] ** 2 - 1
        if k == "SO":
            return p[0] * (p[0] - 1) // 2
        if k == "Sp":
            return p[0] * (2 * p[0] + 1)
        if k == "U":
            return p[0] ** 2
        if k == "SUxU":
            return p[0] ** 2 + p[1] ** 2 - 1
        if k == "Spin9":
            return 36
        if k == "F4":
            return 52
        raise SymcharError(f"unknown group factor kind {k!r}")

    def render(self) -> str:
        k, p = self.kind, self.params
        if k == "SUxU":
            return f"S(U{p[0]}xU{p[1]})"
        if k == "Spin9":
            return "Spin(9)"
        if k == "F4":
            return "F4"
        return f"{k}({p[0]})"


def _su(n: int) -> GroupFactor:
    return GroupFactor("SU", (n,))


def _so(m: int) -> GroupFactor:
    return GroupFactor("SO", (m,))


def _sp(n: int) -> GroupFactor:
    return GroupFactor("Sp", (n,))


def _u(n: int) -> GroupFactor:
    return GroupFactor("U", (n,))


def _suxu(p: int, q: int) -> GroupFactor:
    return GroupFactor("SUxU", (p, q))


@dataclass(frozen=True, slots=True)
class CompactGroup:
    """A finite product of compact group factors (empty = trivial group)."""

    factors: tuple

    def rank(self) -> int:
        return sum(f.rank() for f in self.factors)

    def weyl_order(self) -> int:
        return prod(f.weyl_order() for f in self.factors)

    def dim(self) -> int:
        return sum(f.dim() for f in self.factors)

    def render(self) -> str:
        if not self.factors:
            return "1"
        return "x".join(f.render() for f in self.factors)


@dataclass(frozen=True, slots=True)
class DualPair:
    """Compact dual G_U / K.  TypeIV spaces carry only the display name."""

    gu: CompactGroup | None
    k: CompactGroup | None
    name: str


@dataclass(frozen=True, slots=True)
class SpaceSpec:
    family: str
    params: tuple


# Family table.  kind is one of:
#   higher    - verdict from the rank gap of the dual pair
#   rank-one  - negatively curved (or its positively curved dual form)
#   typeiv    - complex type, parallelizable dual, no rank data
_HIGHER = "higher"
_RANK_ONE = "rank-one"
_TYPEIV = "typeiv"

VERDICT_EQUAL_RANK = "EqualRank_EulerNonzero"
VERDICT_RANK_GAP = "RankGap_PontrjaginVanish"
VERDICT_PARALLELIZABLE = "Parallelizable_Vanish"
VERDICT_RANK_ONE = "RankOne"


@dataclass(frozen=True, slots=True)
class _Family:
    name: str
    arity: int
    min_params: tuple
    kind: str
    dual: object  # params -> DualPair
    dim: object  # params -> int


def _pair(gu_factors, k_factors, name: str) -> DualPair:
    return DualPair(CompactGroup(tuple(gu_factors)), CompactGroup(tuple(k_factors)), name)


_FAMILIES = {
    f.name: f
    for f in (
        _Family(
            "SU_pq", 2, (1, 1), _HIGHER,
            lambda p: _pair([_su(p[0] + p[1])], [_suxu(p[0], p[1])],
                            f"SU({p[0] + p[1]})/S(U{p[0]}xU{p[1]})"),
            lambda p: 2 * p[0] * p[1],
        ),
        _Family(
            "SO0_pq", 2, (1, 1), _HIGHER,
            lambda p: _pair([_so(p[0] + p[1])], [_so(p[0]), _so(p[1])],
                            f"SO({p[0] + p[1]})/SO({p[0]})xSO({p[1]})"),
            lambda p: p[0] * p[1],
        ),
        _Family(
            "SOstar_2n", 1, (2,), _HIGHER,
            lambda p: _pair([_so(2 * p[0])], [_u(p[0])], f"SO({2 * p[0]})/U({p[0]})"),
            lambda p: p[0] * (p[0] - 1),
        ),
        _Family(
            "Sp_nR", 1, (1,), _HIGHER,
            lambda p: _pair([_sp(p[0])], [_u(p[0])], f"Sp({p[0]})/U({p[0]})"),
            lambda p: p[0] * (p[0] + 1),
        ),
        _Family(
            "Sp_pq", 2, (1, 1), _HIGHER,
            lambda p: _pair([_sp(p[0] + p[1])], [_sp(p[0]), _sp(p[1])],
                            f"Sp({p[0] + p[1]})/Sp({p[0]})xSp({p[1]})"),
            lambda p: 4 * p[0] * p[1],
        ),
        _Family(
            "SL_nR", 1, (2,), _HIGHER,
            lambda p: _pair([_su(p[0])], [_so(p[0])], f"SU({p[0]})/SO({p[0]})"),
            lambda p: (p[0] - 1) * (p[0] + 2) // 2,
        ),
        _Family(
            "SUstar_2n", 1, (2,), _HIGHER,
            lambda p: _pair([_su(2 * p[0])], [_sp(p[0])], f"SU({2 * p[0]})/Sp({p[0]})"),
            lambda p: (p[0] - 1) * (2 * p[0] + 1),
        ),
        _Family(
            "TypeIV", 1, (1,), _TYPEIV,
            lambda p: DualPair(None, None, "compact Lie group"),
            lambda p: p[0],
        ),
        _Family(
            "RealHyperbolic_n", 1, (1,), _RANK_ONE,
            lambda p: _pair([_so(p[0] + 1)], [_so(p[0])], f"S^{p[0]}"),
            lambda p: p[0],
        ),
        _Family(
            "ComplexHyperbolic_n", 1, (1,), _RANK_ONE,
            lambda p: _pair([_su(p[0] + 1)], [_suxu(1, p[0])], f"CP^{p[0]}"),
            lambda p: 2 * p[0],
        ),
        _Family(
            "QuaternionicHyperbolic_n", 1, (1,), _RANK_ONE,
            lambda p: _pair([_sp(p[0] + 1)], [_sp(1), _sp(p[0])], f"HP^{p[0]}"),
            lambda p: 4 * p[0],
        ),
        _Family(
            "CayleyHyperbolic", 0, (), _RANK_ONE,
            lambda p: _pair([GroupFactor("F4", ())], [GroupFactor("Spin9", ())], "CayP^2"),
            lambda p: 16,
        ),
        _Family(
            "ConstantPositive_n", 1, (1,), _RANK_ONE,
            lambda p: _pair([_so(p[0] + 1)], [_so(p[0])], f"S^{p[0]}"),
            lambda p: p[0],
        ),
        _Family(
            "Flat_n", 1, (1,), _HIGHER,
            lambda p: _pair([_u(1)] * p[0], [], f"T^{p[0]}"),
            lambda p: p[0],
        ),
    )
}

_ALIASES = {
    "SU_pq": "SU_pq", "SUpq": "SU_pq",
    "SO0_pq": "SO0_pq", "SO0pq": "SO0_pq",
    "SOstar_2n": "SOstar_2n", "SOstar2n": "SOstar_2n", "SOstar": "SOstar_2n",
    "Sp_nR": "Sp_nR", "SpnR": "Sp_nR",
    "Sp_pq": "Sp_pq", "Sppq": "Sp_pq",
    "SL_nR": "SL_nR", "SLnR": "SL_nR",
    "SUstar_2n": "SUstar_2n", "SUstar2n": "SUstar_2n", "SUstar": "SUstar_2n",
    "TypeIV": "TypeIV",
    "RealHyperbolic_n": "RealHyperbolic_n", "RHn": "RealHyperbolic_n",
    "ComplexHyperbolic_n": "ComplexHyperbolic_n", "CHn": "ComplexHyperbolic_n",
    "QuaternionicHyperbolic_n": "QuaternionicHyperbolic_n",
    "QHn": "QuaternionicHyperbolic_n",
    "CayleyHyperbolic": "CayleyHyperbolic", "CayH": "CayleyHyperbolic",
    "ConstantPositive_n": "ConstantPositive_n", "ConstPos": "ConstantPositive_n",
    "Flat_n": "Flat_n", "Flat": "Flat_n",
}

# Spaces modeled on other exceptional groups exist but are out of scope.
_EXCEPTIONAL = {"E6", "E7", "E8", "G2", "F4"}


def _family_record(spec: SpaceSpec) -> _Family:
    fam = _FAMILIES.get(spec.family)
    if fam is None:
        raise UnknownFamilyError(f"unknown family {spec.family!r}")
    if len(spec.params) != fam.arity:
        raise MalformedSpecError(
            f"{fam.name} takes {fam.arity} parameter(s), got {len(spec.params)}"
        )
    for value, minimum in zip(spec.params, fam.min_params):
        if not isinstance(value, int) or value < minimum:
            raise MalformedSpecError(
                f"{fam.name} parameters must be integers >= {fam.min_params}"
            )
    return fam


def parse_space(text: str) -> SpaceSpec:
    """Parse "SU_pq(2,3)", "SLnR(4)", "CayH" into a validated SpaceSpec."""
    s = text.strip()
    name, sep, rest = s.partition("(")
    name = name.strip()
    if sep:
        if not rest.endswith(")"):
            raise MalformedSpecError(f"unbalanced parentheses in {text!r}")
        body = rest[:-1].strip()
        if not body:
            raise MalformedSpecError(f"empty parameter list in {text!r}")
        try:
            params = tuple(int(tok.strip()) for tok in body.split(","))
        except ValueError:
            raise MalformedSpecError(
                f"parameters must be integers in {text!r}"
            ) from None
    else:
        params = ()
    if not name:
        raise MalformedSpecError(f"missing family name in {text!r}")
    if name in _EXCEPTIONAL:
        raise UnsupportedFamilyError(
            f"unsupported family {name!r}: exceptional spaces other than "
            "CayleyHyperbolic are out of scope"
        )
    canonical = _ALIASES.get(name)
    if canonical is None:
        raise UnknownFamilyError(f"unknown family {name!r}")
    spec = SpaceSpec(canonical, params)
    _family_record(spec)  # arity and range checks
    return spec


def spec_string(spec: SpaceSpec) -> str:
    if not spec.params:
        return spec.family
    return f"{spec.family}({','.join(str(p) for p in spec.params)})"


def dimension_of(spec: SpaceSpec) -> int:
    return _family_record(spec).dim(spec.params)


def dual_of(spec: SpaceSpec) -> DualPair:
    return _family_record(spec).dual(spec.params)


def euler_characteristic_dual(spec: SpaceSpec) -> int:
    """chi(G_U / K): |W(G_U)| / |W(K)| at equal rank, 0 otherwise."""
    pair = dual_of(spec)
    if pair.gu is None:
        return 0  # positive-dimensional compact Lie group
    if pair.gu.rank() != pair.k.rank():
        return 0
    w_gu = pair.gu.weyl_order()
    w_k = pair.k.weyl_order()
    if w_gu % w_k:
        raise SymcharError("Weyl order of K must divide that of G_U")
    return w_gu // w_k


@dataclass(frozen=True, slots=True)
class Classification:
    family: str
    params: tuple
    dual: str
    dim: int
    rank_gu: int | None
    rank_k: int | None
    toral_rank: int | None
    verdict: str
    euler_char_dual: int
    minvol_positive: bool

    def to_json_dict(self) -> dict:
        return {
            "family": self.family,
            "params": list(self.params),
            "dual": self.dual,
            "dim": self.dim,
            "rank_gu": self.rank_gu,
            "rank_k": self.rank_k,
            "toral_rank": self.toral_rank,
            "verdict": self.verdict,
            "euler_char_dual": self.euler_char_dual,
            "minvol_positive": self.minvol_positive,
        }


def classify(spec: SpaceSpec) -> Classification:
    fam = _family_record(spec)
    pair = dual_of(spec)
    dim = dimension_of(spec)
    if fam.kind == _TYPEIV:
        return Classification(
            spec.family, spec.params, pair.name, dim,
            None, None, None, VERDICT_PARALLELIZABLE, 0, False,
        )
    rank_gu = pair.gu.rank()
    rank_k = pair.k.rank()
    toral = rank_gu - rank_k
    if toral < 0:
        raise SymcharError("dual pair has rank(K) > rank(G_U)")
    euler = euler_characteristic_dual(spec)
    if fam.kind == _RANK_ONE:
        verdict = VERDICT_RANK_ONE
    elif toral == 0:
        verdict = VERDICT_EQUAL_RANK
    else:
        verdict = VERDICT_RANK_GAP
    return Classification(
        spec.family, spec.params, pair.name, dim,
        rank_gu, rank_k, toral, verdict, euler, euler > 0,
    )
