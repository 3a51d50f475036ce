"""
Finite Field Core Module

This module implements exact arithmetic in GF(p^n). Elements are represented by
their canonical index: the coefficient vector (c_0, ..., c_{n-1}) of the
residue class c_0 + c_1 t + ... + c_{n-1} t^{n-1} read as a base-p integer with
c_0 as the least significant digit. The canonical index doubles as the
canonical element order used by every report.
"""

import json
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, List, Optional, Sequence, Tuple

import numpy as np
import sympy
from sympy.polys.domains import ZZ
from sympy.polys.galoistools import gf_irreducible_p

from involution_voyager.utils.error_handling import (
    DomainError,
    FieldConstructionError,
    InvalidModulusError,
    ZeroElementError,
)

logger = logging.getLogger(__name__)

Elem = int


@dataclass(frozen=True)
class _LogTables:
    """Discrete exponential/logarithm tables relative to the smallest primitive element."""
    primitive: Elem
    exp: List[Elem]
    log: List[int]
    exp_array: np.ndarray
    log_array: np.ndarray


@dataclass(frozen=True)
class FieldCtx:
    """
    The ambient field GF(p^n).

    Attributes:
        p: Prime characteristic
        n: Extension degree
        modulus: Monic irreducible modulus, low degree first (None when n == 1)
        q: Field order p^n
        m: (q - 1) / 3 when q = 1 mod 3, otherwise None
    """
    p: int
    n: int
    modulus: Optional[Tuple[int, ...]] = None
    q: int = field(init=False)
    m: Optional[int] = field(init=False)

    def __post_init__(self) -> None:
        q = self.p ** self.n
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "m", (q - 1) // 3 if q % 3 == 1 else None)

    # --- representation -------------------------------------------------

    @property
    def is_prime_field(self) -> bool:
        return self.n == 1

    @property
    def supports_families(self) -> bool:
        """True when q is odd and q = 1 mod 3."""
        return self.p != 2 and self.m is not None

    def elements(self) -> range:
        """All elements in canonical order."""
        return range(self.q)

    def nonzero(self) -> range:
        """All nonzero elements in canonical order."""
        return range(1, self.q)

    def check(self, x: Elem) -> Elem:
        """Validate that x is a canonical element index and return it."""
        if isinstance(x, bool) or not isinstance(x, (int, np.integer)):
            raise DomainError(f"field elements are canonical integers, got {x!r}")
        if not 0 <= x < self.q:
            raise DomainError(f"{x} is not an element of GF({self.q})")
        return int(x)

    def constant(self, c: int) -> Elem:
        """Embed an integer into the prime subfield."""
        return c % self.p

    def to_coeffs(self, x: Elem) -> Tuple[int, ...]:
        """Coefficient vector of x, position i holding the coefficient of t^i."""
        x = self.check(x)
        digits = []
        for _ in range(self.n):
            x, digit = divmod(x, self.p)
            digits.append(digit)
        return tuple(digits)

    def from_coeffs(self, coeffs: Sequence[int]) -> Elem:
        """Canonical index of the element with the given coefficient vector."""
        if len(coeffs) > self.n:
            raise DomainError(
                f"GF({self.q}) elements have at most {self.n} coefficients, got {len(coeffs)}"
            )
        value = 0
        for c in reversed(coeffs):
            if not 0 <= c < self.p:
                raise DomainError(f"coefficient {c} is not a residue mod {self.p}")
            value = value * self.p + c
        return value

    def serialize(self, x: Elem) -> Any:
        """Decimal integer for prime fields, [c0, ..., c_{n-1}] otherwise."""
        if self.is_prime_field:
            return self.check(x)
        return list(self.to_coeffs(x))

    def parse_element(self, value: Any) -> Elem:
        """
        Parse a serialized element.

        Args:
            value: An int, a coefficient list, or a string such as "3",
                "[1, 2]" or "1,2"

        Returns:
            The canonical element index

        Raises:
            DomainError: If the value does not denote an element of this field
        """
        if isinstance(value, str):
            text = value.strip()
            try:
                if text.startswith("["):
                    value = json.loads(text)
                elif "," in text:
                    value = [int(part) for part in text.split(",")]
                else:
                    value = int(text)
            except ValueError as e:
                raise DomainError(f"cannot parse field element {text!r}: {e}")
        if isinstance(value, (list, tuple)):
            for c in value:
                if isinstance(c, bool) or not isinstance(c, (int, np.integer)):
                    raise DomainError(f"coefficients must be integers, got {c!r}")
            return self.from_coeffs([int(c) for c in value])
        return self.check(value)

    def format_element(self, x: Elem) -> str:
        """Human-readable form of x, used by the pretty printer."""
        if self.is_prime_field:
            return str(self.check(x))
        return _format_poly(self.to_coeffs(x), "t")

    def describe_modulus(self) -> Optional[str]:
        if self.modulus is None:
            return None
        return _format_poly(self.modulus, "t")

    # --- arithmetic -----------------------------------------------------

    def add(self, a: Elem, b: Elem) -> Elem:
        if self.is_prime_field:
            return (self.check(a) + self.check(b)) % self.p
        return self.from_coeffs(
            [(x + y) % self.p for x, y in zip(self.to_coeffs(a), self.to_coeffs(b))]
        )

    def neg(self, a: Elem) -> Elem:
        if self.is_prime_field:
            return -self.check(a) % self.p
        return self.from_coeffs([-x % self.p for x in self.to_coeffs(a)])

    def sub(self, a: Elem, b: Elem) -> Elem:
        return self.add(a, self.neg(b))

    def mul(self, a: Elem, b: Elem) -> Elem:
        a, b = self.check(a), self.check(b)
        if a == 0 or b == 0:
            return 0
        tables = self._tables
        return tables.exp[(tables.log[a] + tables.log[b]) % (self.q - 1)]

    def inv(self, a: Elem) -> Elem:
        if self.check(a) == 0:
            raise ZeroElementError(f"zero has no inverse in GF({self.q})")
        tables = self._tables
        return tables.exp[-tables.log[a] % (self.q - 1)]

    def div(self, a: Elem, b: Elem) -> Elem:
        return self.mul(a, self.inv(b))

    def pow(self, x: Elem, e: int) -> Elem:
        """
        Raise x to the integer power e.

        Exponents of nonzero bases are reduced mod q - 1; pow(0, e) is 0 for
        e > 0 and 1 for e == 0.

        Raises:
            ZeroElementError: If x is zero and e is negative
        """
        if self.check(x) == 0:
            if e > 0:
                return 0
            if e == 0:
                return 1
            raise ZeroElementError(f"zero has no negative powers in GF({self.q})")
        tables = self._tables
        return tables.exp[(tables.log[x] * e) % (self.q - 1)]

    # --- vectorized helpers ---------------------------------------------

    @cached_property
    def digit_table(self) -> np.ndarray:
        """Array of shape (q, n): row x holds the coefficient vector of x."""
        indices = np.arange(self.q, dtype=np.int64)[:, None]
        return (indices // self.place_values[None, :]) % self.p

    @cached_property
    def place_values(self) -> np.ndarray:
        return self.p ** np.arange(self.n, dtype=np.int64)

    def power_all(self, e: int) -> np.ndarray:
        """x^e for every x in canonical order (e >= 0)."""
        if e < 0:
            raise ZeroElementError("negative powers are undefined at zero")
        tables = self._tables
        out = np.empty(self.q, dtype=np.int64)
        out[0] = 0 if e > 0 else 1
        out[1:] = tables.exp_array[(tables.log_array[1:] * e) % (self.q - 1)]
        return out

    def mul_all(self, a: Any, b: Any) -> np.ndarray:
        """Elementwise product of two broadcastable element arrays."""
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        tables = self._tables
        # log of zero is the sentinel -1; such products are masked below
        logs = (tables.log_array[a] + tables.log_array[b]) % (self.q - 1)
        return np.where((a != 0) & (b != 0), tables.exp_array[logs], 0)

    def add_all(self, a: Any, b: Any) -> np.ndarray:
        """Elementwise sum of two broadcastable element arrays."""
        digits = self.digit_table[np.asarray(a)] + self.digit_table[np.asarray(b)]
        return (digits % self.p) @ self.place_values

    def sum_all(self, values: Any, axis: int = 0) -> np.ndarray:
        """Field sum of an element array along one axis."""
        values = np.asarray(values, dtype=np.int64)
        axis = axis % values.ndim
        digits = self.digit_table[values].sum(axis=axis) % self.p
        return digits @ self.place_values

    # --- internals ------------------------------------------------------

    @cached_property
    def group_order_factors(self) -> Tuple[Tuple[int, int], ...]:
        """Prime factorization of q - 1 as (prime, multiplicity) pairs."""
        return tuple(sorted((int(r), int(e)) for r, e in sympy.factorint(self.q - 1).items()))

    def _poly_mulmod(self, a: Elem, b: Elem) -> Elem:
        """Schoolbook product reduced by the modulus; used to bootstrap the tables."""
        if self.is_prime_field:
            return a * b % self.p
        p, n = self.p, self.n
        ca, cb = self.to_coeffs(a), self.to_coeffs(b)
        product = [0] * (2 * n - 1)
        for i, x in enumerate(ca):
            if x:
                for j, y in enumerate(cb):
                    product[i + j] = (product[i + j] + x * y) % p
        # t^n = -(c_0 + ... + c_{n-1} t^{n-1})
        for degree in range(2 * n - 2, n - 1, -1):
            lead = product[degree]
            if lead:
                product[degree] = 0
                for i in range(n):
                    product[degree - n + i] = (product[degree - n + i] - lead * self.modulus[i]) % p
        return self.from_coeffs(product[:n])

    def _slow_pow(self, x: Elem, e: int) -> Elem:
        result = 1
        while e:
            if e & 1:
                result = self._poly_mulmod(result, x)
            x = self._poly_mulmod(x, x)
            e >>= 1
        return result

    @cached_property
    def _tables(self) -> _LogTables:
        primitive = next(x for x in self.nonzero() if _order_by(self, x, self._slow_pow) == self.q - 1)
        exp = [1] * (self.q - 1)
        for i in range(1, self.q - 1):
            exp[i] = self._poly_mulmod(exp[i - 1], primitive)
        log = [-1] * self.q
        for i, value in enumerate(exp):
            log[value] = i
        logger.debug(f"Built log tables for GF({self.q}) from primitive element {primitive}")
        return _LogTables(
            primitive=primitive,
            exp=exp,
            log=log,
            exp_array=np.array(exp, dtype=np.int64),
            log_array=np.array(log, dtype=np.int64),
        )


def _format_poly(coeffs: Sequence[int], var: str) -> str:
    terms = []
    for degree in range(len(coeffs) - 1, -1, -1):
        c = coeffs[degree]
        if c == 0:
            continue
        if degree == 0:
            terms.append(str(c))
            continue
        power = var if degree == 1 else f"{var}^{degree}"
        terms.append(power if c == 1 else f"{c}{power}")
    return " + ".join(terms) if terms else "0"


def _order_by(ctx: FieldCtx, x: Elem, pow_fn: Any) -> int:
    exponent = ctx.q - 1
    for prime, multiplicity in ctx.group_order_factors:
        for _ in range(multiplicity):
            if pow_fn(x, exponent // prime) == 1:
                exponent //= prime
            else:
                break
    return exponent


def order(ctx: FieldCtx, x: Elem) -> int:
    """
    Exact multiplicative order of a nonzero element.

    Args:
        ctx: The field
        x: A nonzero element

    Returns:
        The order of x, a divisor of q - 1

    Raises:
        ZeroElementError: If x is zero
    """
    if ctx.check(x) == 0:
        raise ZeroElementError("zero has no multiplicative order")
    return _order_by(ctx, x, ctx.pow)


def is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """
    Test a polynomial over GF(p) for irreducibility.

    Degrees up to 3 are irreducible exactly when they have no root; higher
    degrees go through the gcd-with-Frobenius test.

    Args:
        coeffs: Coefficients, low degree first
        p: Prime modulus

    Returns:
        True if the polynomial is irreducible over GF(p)
    """
    degree = len(coeffs) - 1
    if degree < 1 or coeffs[-1] % p == 0:
        return False
    if degree == 1:
        return True
    if degree <= 3:
        return all(_eval_mod(coeffs, r, p) != 0 for r in range(p))
    dense = [int(c) % p for c in reversed(coeffs)]
    return bool(gf_irreducible_p(dense, p, ZZ))


def _eval_mod(coeffs: Sequence[int], x: int, p: int) -> int:
    value = 0
    for c in reversed(coeffs):
        value = (value * x + c) % p
    return value


def smallest_irreducible(p: int, n: int) -> Tuple[int, ...]:
    """
    Lexicographically smallest monic irreducible polynomial of degree n.

    Candidates t^n + c_{n-1} t^{n-1} + ... + c_0 are scanned by the base-p
    value of (c_0, ..., c_{n-1}), c_0 least significant.

    Raises:
        FieldConstructionError: If no candidate is irreducible
    """
    for value in range(p ** n):
        coeffs = []
        for _ in range(n):
            value, digit = divmod(value, p)
            coeffs.append(digit)
        candidate = tuple(coeffs) + (1,)
        if is_irreducible(candidate, p):
            return candidate
    raise FieldConstructionError(f"no monic irreducible of degree {n} over GF({p})")


def build_field(p: int, n: int, modulus: Optional[Sequence[int]] = None) -> FieldCtx:
    """
    Build the field GF(p^n).

    Args:
        p: Prime characteristic
        n: Extension degree, at least 1
        modulus: Optional monic irreducible override, low degree first

    Returns:
        The field context

    Raises:
        DomainError: If p is not prime or n < 1
        InvalidModulusError: If the override is not a monic irreducible of degree n
    """
    if isinstance(p, bool) or not isinstance(p, int) or not sympy.isprime(p):
        raise DomainError(f"{p} is not prime")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DomainError(f"extension degree must be a positive integer, got {n}")

    if n == 1:
        if modulus is not None:
            raise InvalidModulusError("prime fields take no modulus")
        ctx = FieldCtx(p, 1)
    elif modulus is not None:
        coeffs = tuple(int(c) for c in modulus)
        if len(coeffs) != n + 1 or coeffs[-1] != 1:
            raise InvalidModulusError(f"modulus must be monic of degree {n}, got {list(coeffs)}")
        if any(not 0 <= c < p for c in coeffs):
            raise InvalidModulusError(f"modulus coefficients must be residues mod {p}")
        if not is_irreducible(coeffs, p):
            raise InvalidModulusError(f"{_format_poly(coeffs, 't')} is reducible over GF({p})")
        ctx = FieldCtx(p, n, coeffs)
    else:
        ctx = FieldCtx(p, n, smallest_irreducible(p, n))

    logger.info(f"Built GF({ctx.q}) with modulus {ctx.describe_modulus()}")
    return ctx


def factor_prime_power(q: int) -> Tuple[int, int]:
    """
    Split q into (p, n) with q = p^n.

    Raises:
        DomainError: If q is not a prime power
    """
    if isinstance(q, bool) or not isinstance(q, int) or q < 2:
        raise DomainError(f"{q} is not a prime power")
    factors = sympy.factorint(q)
    if len(factors) != 1:
        raise DomainError(f"{q} is not a prime power")
    (p, n), = factors.items()
    return int(p), int(n)


def build_field_for_order(q: int, modulus: Optional[Sequence[int]] = None) -> FieldCtx:
    """Build GF(q) for a prime power q."""
    p, n = factor_prime_power(q)
    return build_field(p, n, modulus)
