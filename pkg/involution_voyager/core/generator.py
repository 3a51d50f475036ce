"""
Generator Context Module

This module finds generators of the multiplicative group of a field, computes
discrete logarithms to a chosen generator, and classifies nonzero elements
into the three cosets of the subgroup H of nonzero cubes.
"""

import logging
import math
from dataclasses import dataclass
from typing import List, Optional, Tuple

import numpy as np
import sympy

from involution_voyager.core.field import Elem, FieldCtx, order
from involution_voyager.utils.error_handling import (
    DomainError,
    FieldConstructionError,
    NotAGeneratorError,
    VoyagerError,
    ZeroElementError,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeneratorCtx:
    """
    A generator gamma of GF(q)* together with its index-3 coset structure.

    Attributes:
        ctx: The field
        gamma: Element of order q - 1
        omega: gamma^m, a primitive cube root of unity
        cosets: Coset index of every element in canonical order (-1 at zero)
    """
    ctx: FieldCtx
    gamma: Elem
    omega: Elem
    cosets: Tuple[int, ...]

    @property
    def m(self) -> int:
        return self.ctx.m  # type: ignore[return-value]

    def power(self, e: int) -> Elem:
        """gamma^e with e reduced mod q - 1; negative exponents allowed."""
        return self.ctx.pow(self.gamma, e % (self.ctx.q - 1))


def find_generator(ctx: FieldCtx) -> Elem:
    """
    Smallest element, in canonical order, of multiplicative order q - 1.

    Args:
        ctx: The field

    Returns:
        The canonical generator
    """
    gamma = next(x for x in ctx.nonzero() if order(ctx, x) == ctx.q - 1)
    logger.debug(f"Canonical generator of GF({ctx.q}) is {ctx.serialize(gamma)}")
    return gamma


def enumerate_generators(ctx: FieldCtx) -> List[Elem]:
    """
    All phi(q - 1) generators of GF(q)*, in canonical order.

    Args:
        ctx: The field

    Returns:
        List of generators
    """
    generators = [x for x in ctx.nonzero() if order(ctx, x) == ctx.q - 1]
    expected = int(sympy.totient(ctx.q - 1))
    if len(generators) != expected:
        raise FieldConstructionError(
            f"found {len(generators)} generators of GF({ctx.q})*, expected {expected}"
        )
    return generators


def make_generator_ctx(ctx: FieldCtx, gamma: Optional[Elem] = None) -> GeneratorCtx:
    """
    Build the generator context for gamma (the canonical generator by default).

    Args:
        ctx: The field, with q = 1 mod 3
        gamma: Optional generator override

    Returns:
        The generator context

    Raises:
        DomainError: If q is not 1 mod 3
        NotAGeneratorError: If gamma does not have order q - 1
    """
    if ctx.m is None:
        raise DomainError(f"q = {ctx.q} is not 1 mod 3; no index-3 subgroup")
    if gamma is None:
        gamma = find_generator(ctx)
    elif ctx.check(gamma) == 0:
        raise NotAGeneratorError("zero does not generate the multiplicative group", order=None)
    else:
        gamma_order = order(ctx, gamma)
        if gamma_order != ctx.q - 1:
            raise NotAGeneratorError(
                f"{ctx.serialize(gamma)} has order {gamma_order}, not {ctx.q - 1}",
                order=gamma_order,
            )

    omega = ctx.pow(gamma, ctx.m)
    omega_sq = ctx.mul(omega, omega)
    if omega == 1 or ctx.add(ctx.add(omega_sq, omega), 1) != 0:
        raise FieldConstructionError(f"gamma^m = {omega} is not a primitive cube root of unity")

    # x^m is 1, omega or omega^2 according to the coset of x
    characters = ctx.power_all(ctx.m)
    cosets = np.full(ctx.q, -1, dtype=np.int64)
    for index, value in enumerate((1, omega, omega_sq)):
        cosets[characters == value] = index
    cosets[0] = -1

    logger.info(f"Using generator {ctx.serialize(gamma)} of GF({ctx.q})*")
    return GeneratorCtx(ctx=ctx, gamma=gamma, omega=omega, cosets=tuple(int(c) for c in cosets))


def dlog(gctx: GeneratorCtx, x: Elem) -> int:
    """
    Discrete logarithm of x to base gamma by baby-step/giant-step.

    Args:
        gctx: The generator context
        x: A nonzero element

    Returns:
        The unique e in [0, q - 2] with gamma^e = x

    Raises:
        ZeroElementError: If x is zero
    """
    ctx = gctx.ctx
    if ctx.check(x) == 0:
        raise ZeroElementError("zero has no discrete logarithm")
    group_order = ctx.q - 1
    step = math.isqrt(group_order) + 1

    baby_steps = {}
    value = 1
    for j in range(step):
        baby_steps.setdefault(value, j)
        value = ctx.mul(value, gctx.gamma)

    giant = gctx.power(-step)
    y = x
    for i in range(step):
        j = baby_steps.get(y)
        if j is not None:
            return (i * step + j) % group_order
        y = ctx.mul(y, giant)
    raise VoyagerError(f"no discrete logarithm for {ctx.serialize(x)}; gamma is not a generator")


def coset_index(gctx: GeneratorCtx, x: Elem) -> int:
    """
    Index j with x in gamma^j H, H the subgroup of nonzero cubes.

    Raises:
        ZeroElementError: If x is zero
    """
    if gctx.ctx.check(x) == 0:
        raise ZeroElementError("zero lies in no coset of the cube subgroup")
    return gctx.cosets[x]


def coset(gctx: GeneratorCtx, j: int) -> List[Elem]:
    """Members of gamma^j H in canonical order."""
    j %= 3
    return [x for x in gctx.ctx.nonzero() if gctx.cosets[x] == j]


def cube_subgroup(gctx: GeneratorCtx) -> List[Elem]:
    """The subgroup H of nonzero cubes."""
    return coset(gctx, 0)
