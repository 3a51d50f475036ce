"""
Sparse polynomials over a finite field.
"""

from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Tuple

from involution_voyager.core.field import Elem, FieldCtx

Term = Tuple[int, Elem]


@dataclass(frozen=True)
class SparsePoly:
    """
    A normalized sparse polynomial.

    Terms are (exponent, coefficient) pairs with nonzero coefficients and
    strictly decreasing exponents. Build instances with `from_terms` so that
    the normalization invariant holds.
    """
    terms: Tuple[Term, ...] = ()

    @classmethod
    def from_terms(cls, ctx: FieldCtx, pairs: Iterable[Term]) -> "SparsePoly":
        """Merge like exponents by field addition, drop zeros, sort descending."""
        merged: Dict[int, Elem] = {}
        for exponent, coefficient in pairs:
            if exponent < 0:
                raise ValueError(f"negative exponent {exponent}")
            merged[exponent] = ctx.add(merged.get(exponent, 0), coefficient)
        return cls(tuple(
            (exponent, merged[exponent])
            for exponent in sorted(merged, reverse=True)
            if merged[exponent] != 0
        ))

    @property
    def term_count(self) -> int:
        return len(self.terms)

    @property
    def degree(self) -> int:
        """Largest exponent, -1 for the zero polynomial."""
        return self.terms[0][0] if self.terms else -1

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exponent: int) -> Elem:
        for e, c in self.terms:
            if e == exponent:
                return c
        return 0

    def serialize(self, ctx: FieldCtx) -> List[List[Any]]:
        """[[exponent, coefficient], ...] in descending exponent order."""
        return [[e, ctx.serialize(c)] for e, c in self.terms]

    def format(self, ctx: FieldCtx) -> str:
        """Render as e.g. '2x^5 + 3x^3 + 3x'."""
        if not self.terms:
            return "0"
        rendered = []
        for exponent, coefficient in self.terms:
            c = ctx.format_element(coefficient)
            if not ctx.is_prime_field and "+" in c:
                c = f"({c})"
            if exponent == 0:
                rendered.append(c)
                continue
            power = "x" if exponent == 1 else f"x^{exponent}"
            rendered.append(power if coefficient == 1 else f"{c}{power}")
        return " + ".join(rendered)
