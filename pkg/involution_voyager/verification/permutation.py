"""
Permutation Laboratory Module

This module evaluates sparse polynomials over a whole field and measures the
resulting maps: injectivity, involutority, fixed points and cycle structure.
Maps are tables indexed by canonical element index.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

import networkx as nx
import numpy as np

from involution_voyager.core.field import Elem, FieldCtx
from involution_voyager.core.polynomial import SparsePoly
from involution_voyager.utils.error_handling import DomainError

logger = logging.getLogger(__name__)

Cycle = Tuple[Elem, ...]


@dataclass(frozen=True)
class PermMap:
    """A total map on the q field elements; images[x] holds g(x)."""
    images: Tuple[Elem, ...]

    @classmethod
    def from_array(cls, values: np.ndarray) -> "PermMap":
        return cls(tuple(int(v) for v in values))

    @classmethod
    def from_function(cls, ctx: FieldCtx, fn: Callable[[Elem], Elem]) -> "PermMap":
        return cls(tuple(fn(x) for x in ctx.elements()))

    @classmethod
    def identity(cls, q: int) -> "PermMap":
        return cls(tuple(range(q)))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, x: Elem) -> Elem:
        return self.images[x]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.images, dtype=np.int64)


@dataclass(frozen=True)
class CycleType:
    """Multiset of cycle lengths as sorted (length, multiplicity) pairs."""
    counts: Tuple[Tuple[int, int], ...]

    @classmethod
    def from_lengths(cls, lengths: List[int]) -> "CycleType":
        return cls(tuple(sorted(Counter(lengths).items())))

    @classmethod
    def from_dict(cls, counts: Dict[int, int]) -> "CycleType":
        return cls(tuple(sorted((int(k), int(v)) for k, v in counts.items() if v)))

    def as_dict(self) -> Dict[int, int]:
        return dict(self.counts)

    @property
    def total(self) -> int:
        """Sum of length times multiplicity; equals the size of the permuted set."""
        return sum(length * count for length, count in self.counts)

    def serialize(self) -> Dict[str, int]:
        return {str(length): count for length, count in self.counts}


def eval_poly(ctx: FieldCtx, poly: SparsePoly, x: Elem) -> Elem:
    """
    Evaluate a sparse polynomial at one point.

    Args:
        ctx: The field
        poly: The polynomial
        x: The point

    Returns:
        The sum of coefficient * x^exponent over all terms
    """
    value = 0
    for exponent, coefficient in poly.terms:
        value = ctx.add(value, ctx.mul(coefficient, ctx.pow(x, exponent)))
    return value


def eval_all(ctx: FieldCtx, poly: SparsePoly) -> PermMap:
    """
    Evaluate a sparse polynomial at every field element.

    Args:
        ctx: The field
        poly: The polynomial

    Returns:
        The table of values in canonical order (not necessarily a permutation)
    """
    total = np.zeros(ctx.q, dtype=np.int64)
    for exponent, coefficient in poly.terms:
        total = ctx.add_all(total, ctx.mul_all(ctx.power_all(exponent), coefficient))
    return PermMap.from_array(total)


def first_collision(perm: PermMap) -> Optional[Elem]:
    """First x (canonical order) whose image was already taken by an earlier element."""
    seen = set()
    for x, image in enumerate(perm.images):
        if image in seen:
            return x
        seen.add(image)
    return None


def is_permutation(perm: PermMap) -> bool:
    """True iff the images are pairwise distinct."""
    values = perm.as_array()
    return np.unique(values).size == values.size


def _require_permutation(perm: PermMap, operation: str) -> np.ndarray:
    if not is_permutation(perm):
        raise DomainError(f"{operation} needs a permutation; map is not injective")
    return perm.as_array()


def first_non_involution(perm: PermMap) -> Optional[Elem]:
    """First x with g(g(x)) != x, or None for an involution."""
    values = _require_permutation(perm, "involution check")
    offenders = np.flatnonzero(values[values] != np.arange(values.size))
    return int(offenders[0]) if offenders.size else None


def is_involution(perm: PermMap) -> bool:
    """
    True iff perm composed with itself is the identity.

    Raises:
        DomainError: If perm is not a permutation
    """
    return first_non_involution(perm) is None


def fixed_points(perm: PermMap) -> List[Elem]:
    """All x with g(x) = x, in canonical order."""
    values = perm.as_array()
    return [int(x) for x in np.flatnonzero(values == np.arange(values.size))]


def cycle_type(perm: PermMap) -> CycleType:
    """
    Cycle type by orbit traversal.

    Raises:
        DomainError: If perm is not a permutation
    """
    _require_permutation(perm, "cycle type")
    visited = [False] * perm.size
    lengths = []
    for start in range(perm.size):
        if visited[start]:
            continue
        length = 0
        x = start
        while not visited[x]:
            visited[x] = True
            x = perm.images[x]
            length += 1
        lengths.append(length)
    return CycleType.from_lengths(lengths)


def cycle_decomposition(perm: PermMap) -> List[Cycle]:
    """
    All cycles of a permutation, fixed points included.

    The functional graph of a permutation is a disjoint union of directed
    cycles, so its strongly connected components are exactly the cycles. Each
    cycle starts at its smallest element; cycles are sorted by that element.

    Raises:
        DomainError: If perm is not a permutation
    """
    _require_permutation(perm, "cycle decomposition")
    graph = nx.DiGraph()
    graph.add_nodes_from(range(perm.size))
    graph.add_edges_from(enumerate(perm.images))

    cycles = []
    for component in nx.strongly_connected_components(graph):
        start = min(component)
        cycle = [start]
        x = perm.images[start]
        while x != start:
            cycle.append(x)
            x = perm.images[x]
        cycles.append(tuple(cycle))
    return sorted(cycles)


def two_cycles(perm: PermMap) -> List[Cycle]:
    """Transpositions of a permutation, canonical order."""
    return [cycle for cycle in cycle_decomposition(perm) if len(cycle) == 2]


def conjugate(perm: PermMap, sigma: PermMap) -> PermMap:
    """
    The relabeled map sigma o perm o sigma^-1.

    Raises:
        DomainError: If sigma is not a permutation of the same size
    """
    if sigma.size != perm.size or not is_permutation(sigma):
        raise DomainError("conjugation needs a permutation of the same set")
    images = [0] * perm.size
    for x in range(perm.size):
        images[sigma(x)] = sigma(perm(x))
    return PermMap(tuple(images))
