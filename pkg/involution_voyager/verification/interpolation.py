"""
Interpolation Oracle Module

This module recovers the unique polynomial of degree < q that represents a map
on GF(q) and compares it with constructed polynomials. It is independent of
the coefficient formulas and serves as a second opinion on every construction.
"""

import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from involution_voyager.core.families import ConstructionRecord, expected_map
from involution_voyager.core.field import Elem, FieldCtx
from involution_voyager.core.generator import GeneratorCtx
from involution_voyager.core.polynomial import SparsePoly
from involution_voyager.verification.permutation import PermMap

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DensePoly:
    """Dense polynomial of degree < q; coeffs[i] is the coefficient of x^i."""
    coeffs: Tuple[Elem, ...]

    @property
    def degree(self) -> int:
        """Largest exponent with a nonzero coefficient, -1 for zero."""
        nonzero = [i for i, c in enumerate(self.coeffs) if c != 0]
        return nonzero[-1] if nonzero else -1


def lagrange(ctx: FieldCtx, perm: PermMap) -> DensePoly:
    """
    Interpolate a total map on GF(q).

    Expands sum_a f(a) * (1 - (x - a)^(q-1)). Since C(q-1, j) = (-1)^j mod p,
    the coefficient of x^j is [j == 0] * sum_a f(a) - sum_a f(a) * a^(q-1-j),
    with 0^0 = 1.

    Args:
        ctx: The field
        perm: Any total map of size q (not necessarily a permutation)

    Returns:
        The unique interpolating polynomial of degree < q
    """
    if perm.size != ctx.q:
        raise ValueError(f"map has {perm.size} entries, GF({ctx.q}) has {ctx.q} elements")
    values = perm.as_array()
    q = ctx.q

    # powers[j, a] = a^(q-1-j)
    powers = np.stack([ctx.power_all(q - 1 - j) for j in range(q)])
    weighted = ctx.sum_all(ctx.mul_all(powers, values[None, :]), axis=1)

    coeffs = [ctx.neg(int(s)) for s in weighted]
    coeffs[0] = ctx.add(coeffs[0], int(ctx.sum_all(values)))
    return DensePoly(tuple(coeffs))


def to_sparse(dense: DensePoly) -> SparsePoly:
    """Nonzero coefficients of a dense polynomial, exponents descending."""
    return SparsePoly(tuple(
        (exponent, coefficient)
        for exponent, coefficient in reversed(list(enumerate(dense.coeffs)))
        if coefficient != 0
    ))


def canonical_equal(first: SparsePoly, second: SparsePoly) -> bool:
    """Syntactic equality of two normalized polynomials."""
    return first.terms == second.terms


def oracle_check(ctx: FieldCtx, record: ConstructionRecord, gctx: GeneratorCtx) -> bool:
    """
    Compare a record's polynomial with the interpolation of its expected map.

    Both sides have degree < q, so syntactic equality is functional equality.
    """
    recovered = to_sparse(lagrange(ctx, expected_map(record.family, gctx, record.k)))
    agrees = canonical_equal(recovered, record.poly)
    if not agrees:
        logger.warning(
            f"Interpolation of {record.label} over GF({ctx.q}) gave {recovered.format(ctx)}, "
            f"constructed {record.poly.format(ctx)}"
        )
    return agrees
