"""
Record verification.

Checks, in order, that a construction record's polynomial induces a
permutation, agrees pointwise with the family's expected map, is an
involution, fixes exactly zero and the fixed coset, has the expected cycle
type, and respects the family's term bound. Failures are reported as data
with the first witness element, never raised.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Optional

from involution_voyager.core.families import ConstructionRecord, expected_map
from involution_voyager.core.field import Elem, FieldCtx
from involution_voyager.core.generator import GeneratorCtx, coset
from involution_voyager.verification.permutation import (
    CycleType,
    PermMap,
    cycle_type,
    eval_all,
    first_collision,
    first_non_involution,
    fixed_points,
    is_permutation,
)

logger = logging.getLogger(__name__)

CHECK_ORDER = (
    "is_permutation",
    "matches_expected",
    "is_involution",
    "fixed_points",
    "cycle_type",
    "term_count",
)


@dataclass(frozen=True)
class Verdict:
    """Outcome of verifying one construction record."""
    record: ConstructionRecord
    is_permutation: bool
    matches_expected: bool
    is_involution: bool
    fixed_point_count: int
    fixed_points_match: bool
    cycle_type: Optional[CycleType]
    cycle_type_match: bool
    term_count: int
    term_count_ok: bool
    witness: Optional[Elem]
    failed_check: Optional[str]

    @property
    def passed(self) -> bool:
        return self.failed_check is None

    def to_dict(self, ctx: FieldCtx) -> Dict[str, Any]:
        """
        Convert to the verdict JSON schema.

        Args:
            ctx: The field the record was built over

        Returns:
            Dictionary representation
        """
        return {
            "record": self.record.to_dict(ctx),
            "is_permutation": self.is_permutation,
            "matches_expected": self.matches_expected,
            "is_involution": self.is_involution,
            "fixed_point_count": self.fixed_point_count,
            "fixed_points_match": self.fixed_points_match,
            "cycle_type": self.cycle_type.serialize() if self.cycle_type else None,
            "term_count": self.term_count,
            "passed": self.passed,
            "failed_check": self.failed_check,
            "witness": ctx.serialize(self.witness) if self.witness is not None else None,
        }


def expected_cycle_type(ctx: FieldCtx) -> CycleType:
    """1^((q+2)/3) 2^((q-1)/3): m + 1 fixed points and m transpositions."""
    m = ctx.m or 0
    return CycleType.from_dict({1: m + 1, 2: m})


def _first_mismatch(actual: PermMap, expected: PermMap) -> Optional[Elem]:
    for x, (got, want) in enumerate(zip(actual.images, expected.images)):
        if got != want:
            return x
    return None


def verify_record(record: ConstructionRecord, gctx: GeneratorCtx) -> Verdict:
    """
    Verify a construction record exhaustively over its field.

    Args:
        record: A record built from gctx
        gctx: The generator context

    Returns:
        The verdict; failed_check names the first failing check and witness
        holds the element that exposes it
    """
    ctx = gctx.ctx
    actual = eval_all(ctx, record.poly)
    witnesses: Dict[str, Optional[Elem]] = {}
    results: Dict[str, bool] = {}

    results["is_permutation"] = is_permutation(actual)
    witnesses["is_permutation"] = None if results["is_permutation"] else first_collision(actual)

    mismatch = _first_mismatch(actual, expected_map(record.family, gctx, record.k))
    results["matches_expected"] = mismatch is None
    witnesses["matches_expected"] = mismatch

    observed_cycles = None
    if results["is_permutation"]:
        offender = first_non_involution(actual)
        results["is_involution"] = offender is None
        witnesses["is_involution"] = offender
        observed_cycles = cycle_type(actual)
    else:
        results["is_involution"] = False
        witnesses["is_involution"] = witnesses["is_permutation"]

    observed_fixed = fixed_points(actual)
    wanted_fixed = [0] + coset(gctx, record.family.fixed_coset)
    difference = sorted(set(observed_fixed).symmetric_difference(wanted_fixed))
    results["fixed_points"] = not difference
    witnesses["fixed_points"] = difference[0] if difference else None

    results["cycle_type"] = observed_cycles == expected_cycle_type(ctx)
    witnesses["cycle_type"] = (
        witnesses["is_involution"]
        if witnesses["is_involution"] is not None
        else witnesses["fixed_points"]
    )

    results["term_count"] = record.term_count <= record.family.max_terms
    witnesses["term_count"] = None

    failed_check = next((check for check in CHECK_ORDER if not results[check]), None)
    witness = witnesses[failed_check] if failed_check else None
    if failed_check:
        shown = ctx.serialize(witness) if witness is not None else None
        logger.warning(f"{record.label} over GF({ctx.q}) failed {failed_check} (witness {shown})")

    return Verdict(
        record=record,
        is_permutation=results["is_permutation"],
        matches_expected=results["matches_expected"],
        is_involution=results["is_involution"],
        fixed_point_count=len(observed_fixed),
        fixed_points_match=results["fixed_points"],
        cycle_type=observed_cycles,
        cycle_type_match=results["cycle_type"],
        term_count=record.term_count,
        term_count_ok=results["term_count"],
        witness=witness,
        failed_check=failed_check,
    )
