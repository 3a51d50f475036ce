"""
Involution Families Module

This module instantiates the six coefficient families of involution-inducing
permutation polynomials over GF(q), q odd with q = 1 mod 3, and builds, for
each family, both the sparse polynomial and the permutation the family is
claimed to induce.

Every family fixes zero and one coset of the cube subgroup H pointwise and
swaps the two remaining cosets. The trinomial families T1, T2, T3 pair the
swapped cosets by a shift of the coset index (i -> i + k), the six-term
families S1, S2, S3 by a reflection (i -> k - i).
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Tuple

from involution_voyager.core.field import Elem, FieldCtx
from involution_voyager.core.generator import GeneratorCtx, coset_index
from involution_voyager.core.polynomial import SparsePoly
from involution_voyager.utils.error_handling import ConstructionFault, DomainError
from involution_voyager.verification.permutation import PermMap

logger = logging.getLogger(__name__)

# An exponent of gamma written as (coefficient of m, coefficient of k, constant)
GammaExponent = Tuple[int, int, int]

ONE: GammaExponent = (0, 0, 0)


class Pairing(Enum):
    """How the swapped cosets are paired."""
    SHIFT = "shift"
    REFLECTION = "reflection"


class FamilyId(Enum):
    """The six involution families."""
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    S1 = "S1"
    S2 = "S2"
    S3 = "S3"

    @classmethod
    def parse(cls, tag: str) -> "FamilyId":
        try:
            return cls(str(tag).strip().upper())
        except ValueError:
            names = ", ".join(f.value for f in cls)
            raise DomainError(f"unknown family {tag!r}; expected one of {names}") from None

    @property
    def is_trinomial(self) -> bool:
        return self.value.startswith("T")

    @property
    def pairing(self) -> Pairing:
        return Pairing.SHIFT if self.is_trinomial else Pairing.REFLECTION

    @property
    def source_coset(self) -> int:
        """Coset of the elements gamma^(3i + source) that the pairing starts from."""
        return _PAIRINGS[self][0]

    @property
    def target_offset(self) -> int:
        """Constant added to the target exponent 3(i + k) or 3(k - i)."""
        return _PAIRINGS[self][1]

    @property
    def fixed_coset(self) -> int:
        return 3 - self.source_coset - self.target_offset % 3

    @property
    def max_terms(self) -> int:
        return 3 if self.is_trinomial else 6

    @property
    def slot_names(self) -> Tuple[str, ...]:
        return ("a", "b", "c") if self.is_trinomial else ("a", "b", "c", "d", "e", "f")

    def exponents(self, m: int) -> Tuple[int, ...]:
        """Exponents carrying the coefficient slots, in slot order."""
        if self.is_trinomial:
            return (2 * m + 1, m + 1, 1)
        return (3 * m - 1, 2 * m + 1, 2 * m - 1, m + 1, m - 1, 1)


_PAIRINGS: Dict[FamilyId, Tuple[int, int]] = {
    FamilyId.T1: (1, 2),
    FamilyId.T2: (0, 2),
    FamilyId.T3: (0, 1),
    FamilyId.S1: (1, -1),
    FamilyId.S2: (0, 2),
    FamilyId.S3: (0, 1),
}


@dataclass(frozen=True)
class _TrinomialSlot:
    """(gamma^e1 + gamma^e2 + gamma^e3) / (3 gamma^d)."""
    numerator: Tuple[GammaExponent, GammaExponent, GammaExponent]
    denominator: GammaExponent


@dataclass(frozen=True)
class _SixTermSlot:
    """scale * gamma^e / 3."""
    scale: int
    exponent: GammaExponent


_TRINOMIAL_FORMS: Dict[FamilyId, Tuple[_TrinomialSlot, ...]] = {
    FamilyId.T1: (
        _TrinomialSlot(((2, 6, 2), (1, 3, 1), ONE), (1, 3, 1)),
        _TrinomialSlot(((2, 0, 0), (1, 3, 1), (0, 6, 2)), (1, 3, 1)),
        _TrinomialSlot(((0, 6, 2), (0, 3, 1), ONE), (0, 3, 1)),
    ),
    FamilyId.T2: (
        _TrinomialSlot(((2, 3, 2), (1, 6, 4), ONE), (1, 3, 2)),
        _TrinomialSlot(((2, 0, 0), (1, 6, 4), (0, 3, 2)), (1, 3, 2)),
        _TrinomialSlot(((0, 6, 4), (0, 3, 2), ONE), (0, 3, 2)),
    ),
    FamilyId.T3: (
        _TrinomialSlot(((2, 0, 0), (1, 6, 2), (0, 3, 1)), (1, 3, 1)),
        _TrinomialSlot(((2, 3, 1), (1, 6, 2), ONE), (1, 3, 1)),
        _TrinomialSlot(((0, 6, 2), (0, 3, 1), ONE), (0, 3, 1)),
    ),
}

_S1_A = _SixTermSlot(2, (0, 3, 0))
_S1_B = _SixTermSlot(1, ONE)
_S1_C = _SixTermSlot(-1, (0, 3, 0))

_SIXTERM_FORMS: Dict[FamilyId, Tuple[_SixTermSlot, ...]] = {
    # S1 repeats b at x^(2m+1), x^(m+1), x and c at x^(2m-1), x^(m-1)
    FamilyId.S1: (_S1_A, _S1_B, _S1_C, _S1_B, _S1_C, _S1_B),
    FamilyId.S2: (
        _SixTermSlot(2, (0, 3, 2)),
        _SixTermSlot(1, (1, 0, 0)),
        _SixTermSlot(-1, (1, 3, 2)),
        _SixTermSlot(1, (2, 0, 0)),
        _SixTermSlot(-1, (2, 3, 2)),
        _SixTermSlot(1, ONE),
    ),
    FamilyId.S3: (
        _SixTermSlot(2, (0, 3, 1)),
        _SixTermSlot(1, (2, 0, 0)),
        _SixTermSlot(-1, (2, 3, 1)),
        _SixTermSlot(1, (1, 0, 0)),
        _SixTermSlot(-1, (1, 3, 1)),
        _SixTermSlot(1, ONE),
    ),
}


@dataclass(frozen=True)
class CoeffSet:
    """Coefficient values of one family instance, one per slot in slot order."""
    family: FamilyId
    values: Tuple[Elem, ...]

    def named(self) -> Dict[str, Elem]:
        return dict(zip(self.family.slot_names, self.values))

    def __getitem__(self, slot: str) -> Elem:
        return self.named()[slot]


@dataclass(frozen=True)
class ConstructionRecord:
    """One constructed polynomial: (family, gamma, k, coefficients, polynomial)."""
    family: FamilyId
    gamma: Elem
    k: int
    coeffs: CoeffSet
    poly: SparsePoly

    @property
    def term_count(self) -> int:
        return self.poly.term_count

    @property
    def label(self) -> str:
        return f"{self.family.value}:k={self.k}"

    def to_dict(self, ctx: FieldCtx) -> Dict[str, Any]:
        """
        Convert to the record JSON schema.

        Args:
            ctx: The field the record was built over

        Returns:
            Dictionary representation
        """
        return {
            "q": ctx.q,
            "p": ctx.p,
            "n": ctx.n,
            "modulus": list(ctx.modulus) if ctx.modulus else None,
            "family": self.family.value,
            "gamma": ctx.serialize(self.gamma),
            "k": self.k,
            "coefficients": {
                name: ctx.serialize(value) for name, value in self.coeffs.named().items()
            },
            "terms": self.poly.serialize(ctx),
            "term_count": self.term_count,
        }


@dataclass(frozen=True)
class CyclotomicForm:
    """
    Per-coset description of a family map on nonzero elements.

    On coset j the map is x -> mu_j * x + nu_j * x^-1; nu_j is zero for the
    trinomial families.
    """
    family: FamilyId
    multipliers: Tuple[Tuple[Elem, Elem], ...]

    def evaluate(self, gctx: GeneratorCtx, x: Elem) -> Elem:
        ctx = gctx.ctx
        if ctx.check(x) == 0:
            return 0
        mu, nu = self.multipliers[coset_index(gctx, x)]
        return ctx.add(ctx.mul(mu, x), ctx.mul(nu, ctx.inv(x)))


def _require_family_field(gctx: GeneratorCtx) -> None:
    ctx = gctx.ctx
    if not ctx.supports_families:
        raise DomainError(
            f"involution families need q odd and q = 1 mod 3, got q = {ctx.q}"
        )


def _normalize_k(gctx: GeneratorCtx, k: int) -> int:
    if isinstance(k, bool) or not isinstance(k, int):
        raise DomainError(f"k must be an integer, got {k!r}")
    return k % gctx.m


def _gamma_power(gctx: GeneratorCtx, exponent: GammaExponent, k: int) -> Elem:
    m_coef, k_coef, const = exponent
    return gctx.power(m_coef * gctx.m + k_coef * k + const)


def trinomial_coeffs(family: FamilyId, gctx: GeneratorCtx, k: int) -> CoeffSet:
    """
    Coefficients (a, b, c) of x^(2m+1), x^(m+1), x for a trinomial family.

    Args:
        family: T1, T2 or T3
        gctx: Generator context of a field with q odd and q = 1 mod 3
        k: Shift parameter, reduced mod m

    Returns:
        The coefficient set

    Raises:
        DomainError: If the field or family is unsupported
    """
    _require_family_field(gctx)
    if not family.is_trinomial:
        raise DomainError(f"{family.value} is not a trinomial family")
    k = _normalize_k(gctx, k)
    ctx = gctx.ctx
    three = ctx.constant(3)

    values = []
    for slot in _TRINOMIAL_FORMS[family]:
        numerator = 0
        for exponent in slot.numerator:
            numerator = ctx.add(numerator, _gamma_power(gctx, exponent, k))
        denominator = ctx.mul(three, _gamma_power(gctx, slot.denominator, k))
        values.append(ctx.div(numerator, denominator))
    return CoeffSet(family, tuple(values))


def sixterm_coeffs(family: FamilyId, gctx: GeneratorCtx, k: int) -> CoeffSet:
    """
    Coefficients (a, ..., f) of x^(3m-1), x^(2m+1), x^(2m-1), x^(m+1), x^(m-1), x.

    Args:
        family: S1, S2 or S3
        gctx: Generator context of a field with q odd and q = 1 mod 3
        k: Reflection parameter, reduced mod m

    Returns:
        The coefficient set, always six slots

    Raises:
        DomainError: If the field or family is unsupported
    """
    _require_family_field(gctx)
    if family.is_trinomial:
        raise DomainError(f"{family.value} is not a six-term family")
    k = _normalize_k(gctx, k)
    ctx = gctx.ctx
    third = ctx.inv(ctx.constant(3))

    values = []
    for slot in _SIXTERM_FORMS[family]:
        scaled = ctx.mul(ctx.constant(slot.scale), _gamma_power(gctx, slot.exponent, k))
        values.append(ctx.mul(scaled, third))
    return CoeffSet(family, tuple(values))


def family_coeffs(family: FamilyId, gctx: GeneratorCtx, k: int) -> CoeffSet:
    if family.is_trinomial:
        return trinomial_coeffs(family, gctx, k)
    return sixterm_coeffs(family, gctx, k)


def build_poly(family: FamilyId, gctx: GeneratorCtx, k: int) -> SparsePoly:
    """
    Place a family's coefficients at its exponents and normalize.

    Raises:
        DomainError: If the field is unsupported
        ConstructionFault: If every term cancels
    """
    coeffs = family_coeffs(family, gctx, k)
    return _poly_from_coeffs(gctx, coeffs, k)


def _poly_from_coeffs(gctx: GeneratorCtx, coeffs: CoeffSet, k: int) -> SparsePoly:
    exponents = coeffs.family.exponents(gctx.m)
    poly = SparsePoly.from_terms(gctx.ctx, zip(exponents, coeffs.values))
    if poly.is_zero:
        raise ConstructionFault(
            f"{coeffs.family.value} with k={k % gctx.m} normalized to the zero polynomial"
        )
    return poly


def build_record(family: FamilyId, gctx: GeneratorCtx, k: int) -> ConstructionRecord:
    """Build the full construction record for (family, gamma, k)."""
    coeffs = family_coeffs(family, gctx, k)
    k = k % gctx.m
    return ConstructionRecord(
        family=family,
        gamma=gctx.gamma,
        k=k,
        coeffs=coeffs,
        poly=_poly_from_coeffs(gctx, coeffs, k),
    )


def expected_map(family: FamilyId, gctx: GeneratorCtx, k: int) -> PermMap:
    """
    The permutation a family instance is claimed to induce, built from the
    coset pairing alone.

    Zero and the fixed coset are fixed pointwise; gamma^(3i + s) is swapped with
    gamma^(3(i + k) + t) under a shift pairing and with gamma^(3(k - i) + t)
    under a reflection pairing, where s and t are the family's source coset and
    target offset.

    Args:
        family: The family
        gctx: Generator context
        k: Family parameter, reduced mod m

    Returns:
        The expected permutation
    """
    _require_family_field(gctx)
    k = _normalize_k(gctx, k)
    images = list(gctx.ctx.elements())
    source, offset = family.source_coset, family.target_offset
    for i in range(gctx.m):
        x = gctx.power(3 * i + source)
        if family.pairing is Pairing.SHIFT:
            y = gctx.power(3 * (i + k) + offset)
        else:
            y = gctx.power(3 * (k - i) + offset)
        images[x] = y
        images[y] = x
    return PermMap(tuple(images))


def all_records(gctx: GeneratorCtx) -> List[ConstructionRecord]:
    """
    All 2(q - 1) records for one generator, ordered by family then k.

    Args:
        gctx: Generator context

    Returns:
        List of construction records
    """
    _require_family_field(gctx)
    records = [build_record(family, gctx, k) for family in FamilyId for k in range(gctx.m)]
    logger.debug(f"Built {len(records)} records over GF({gctx.ctx.q})")
    return records


def cyclotomic_form(record: ConstructionRecord, gctx: GeneratorCtx) -> CyclotomicForm:
    """
    Per-coset multipliers of a record's polynomial.

    On coset j, x^m = omega^j, so every family exponent reduces to x or x^-1
    times a power of omega.
    """
    ctx = gctx.ctx
    omega = gctx.omega
    multipliers = []
    for j in range(3):
        w1 = ctx.pow(omega, j)
        w2 = ctx.pow(omega, 2 * j)
        if record.family.is_trinomial:
            a, b, c = record.coeffs.values
            mu = ctx.add(ctx.add(ctx.mul(a, w2), ctx.mul(b, w1)), c)
            nu = 0
        else:
            a, b, c, d, e, f = record.coeffs.values
            mu = ctx.add(ctx.add(ctx.mul(b, w2), ctx.mul(d, w1)), f)
            nu = ctx.add(ctx.add(a, ctx.mul(c, w2)), ctx.mul(e, w1))
        multipliers.append((mu, nu))
    return CyclotomicForm(record.family, tuple(multipliers))


def zero_coefficient_slots(record: ConstructionRecord, m: int) -> List[str]:
    """
    Slots that contribute no term to the polynomial: a zero coefficient, or an
    exponent whose merged coefficient cancelled.
    """
    exponents = record.family.exponents(m)
    present = {e for e, _ in record.poly.terms}
    return [
        name
        for name, value, exponent in zip(record.family.slot_names, record.coeffs.values, exponents)
        if value == 0 or exponent not in present
    ]
