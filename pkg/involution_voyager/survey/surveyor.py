"""
Surveyor Module

This module sweeps the involution families over k, generators and field
orders, aggregates verdicts into reports, and measures how the polynomial
collections of different generators overlap.
"""

import json
import logging
import time
from collections import Counter, defaultdict
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Dict, List, Optional, Tuple

import sympy

from involution_voyager.core.families import all_records, zero_coefficient_slots
from involution_voyager.core.field import Elem, FieldCtx, build_field_for_order
from involution_voyager.core.generator import enumerate_generators, make_generator_ctx
from involution_voyager.utils.error_handling import DomainError, ErrorHandler
from involution_voyager.verification.interpolation import oracle_check
from involution_voyager.verification.permutation import eval_all
from involution_voyager.verification.verifier import Verdict, verify_record

logger = logging.getLogger(__name__)

DEFAULT_ORACLE_MAX_Q = 49


@dataclass
class ZeroCoefficientIncident:
    """A coefficient slot that contributed no term to its polynomial."""
    family: str
    k: int
    slot: str

    def to_dict(self) -> Dict[str, Any]:
        return {"family": self.family, "k": self.k, "slot": self.slot}


@dataclass
class FieldReport:
    """Aggregated verification of all 2(q - 1) records over one field and generator."""
    ctx: FieldCtx
    gamma: Elem
    verdicts: List[Verdict]
    distinct_permutations: int
    collision_pairs: List[Tuple[str, str]]
    sparsity_histogram: Dict[int, int]
    zero_coeff_incidents: List[ZeroCoefficientIncident]
    oracle_checked: int = 0
    oracle_mismatches: List[str] = field(default_factory=list)
    elapsed_seconds: float = 0.0

    @property
    def q(self) -> int:
        return self.ctx.q

    @property
    def p(self) -> int:
        return self.ctx.p

    @property
    def n(self) -> int:
        return self.ctx.n

    @property
    def passed(self) -> bool:
        return all(v.passed for v in self.verdicts) and not self.oracle_mismatches

    def failures(self) -> List[Verdict]:
        return [v for v in self.verdicts if not v.passed]

    def to_dict(self) -> Dict[str, Any]:
        """
        Convert to a dictionary.

        Timing is left out so that identical surveys serialize identically.

        Returns:
            Dictionary representation
        """
        return {
            "q": self.q,
            "p": self.p,
            "n": self.n,
            "modulus": list(self.ctx.modulus) if self.ctx.modulus else None,
            "gamma": self.ctx.serialize(self.gamma),
            "passed": self.passed,
            "record_count": len(self.verdicts),
            "distinct_permutations": self.distinct_permutations,
            "collision_pairs": [list(pair) for pair in self.collision_pairs],
            "sparsity_histogram": {
                str(terms): count for terms, count in sorted(self.sparsity_histogram.items())
            },
            "zero_coeff_incidents": [i.to_dict() for i in self.zero_coeff_incidents],
            "oracle_checked": self.oracle_checked,
            "oracle_mismatches": list(self.oracle_mismatches),
            "verdicts": [v.to_dict(self.ctx) for v in self.verdicts],
        }

    def csv_rows(self) -> List[Dict[str, Any]]:
        """One summary row per (q, family, k)."""
        return [
            {
                "q": self.q,
                "family": v.record.family.value,
                "k": v.record.k,
                "term_count": v.term_count,
                "passed": v.passed,
            }
            for v in self.verdicts
        ]


@dataclass
class DisjointnessReport:
    """Overlap of the canonical polynomial collections of all generators of GF(q)*."""
    q: int
    generators: List[Any]
    per_generator_counts: Dict[str, int]
    per_generator_passed: Dict[str, bool]
    union_count: int
    overlap_matrix: List[List[int]]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "q": self.q,
            "generators": self.generators,
            "per_generator_counts": dict(self.per_generator_counts),
            "per_generator_passed": dict(self.per_generator_passed),
            "union_count": self.union_count,
            "overlap_matrix": [list(row) for row in self.overlap_matrix],
        }

    def csv_rows(self) -> List[Dict[str, Any]]:
        return [
            {
                "q": self.q,
                "gamma": key,
                "distinct_polynomials": count,
                "passed": self.per_generator_passed[key],
            }
            for key, count in self.per_generator_counts.items()
        ]


def _oracle_limit(oracle_max_q: Optional[int]) -> int:
    if oracle_max_q is not None:
        return oracle_max_q
    from involution_voyager.config import get_config

    config = get_config()
    if not config.get("interpolation.enabled", True):
        return 0
    return int(config.get("interpolation.max_q", DEFAULT_ORACLE_MAX_Q))


def generator_key(ctx: FieldCtx, gamma: Elem) -> str:
    """Stable string key of a generator in serialized form."""
    return json.dumps(ctx.serialize(gamma))


def survey_field(
    ctx: FieldCtx,
    gamma: Optional[Elem] = None,
    oracle_max_q: Optional[int] = None,
) -> FieldReport:
    """
    Build and verify every record over one field.

    Args:
        ctx: The field, q odd with q = 1 mod 3
        gamma: Generator to use (the canonical generator by default)
        oracle_max_q: Largest q for which the interpolation oracle runs;
            defaults to interpolation.max_q from configuration

    Returns:
        The field report

    Raises:
        DomainError: If the field is unsupported or gamma is not a generator
    """
    started = time.perf_counter()
    if not ctx.supports_families:
        raise DomainError(f"involution families need q odd and q = 1 mod 3, got q = {ctx.q}")
    gctx = make_generator_ctx(ctx, gamma)
    records = all_records(gctx)
    verdicts = [verify_record(record, gctx) for record in records]

    by_map: Dict[Tuple[int, ...], List[str]] = defaultdict(list)
    for record in records:
        by_map[eval_all(ctx, record.poly).images].append(record.label)
    collision_pairs = [
        pair for labels in by_map.values() if len(labels) > 1 for pair in combinations(labels, 2)
    ]

    incidents = [
        ZeroCoefficientIncident(record.family.value, record.k, slot)
        for record in records
        for slot in zero_coefficient_slots(record, gctx.m)
    ]

    oracle_checked = 0
    oracle_mismatches: List[str] = []
    if ctx.q <= _oracle_limit(oracle_max_q):
        for record in records:
            oracle_checked += 1
            if not oracle_check(ctx, record, gctx):
                oracle_mismatches.append(record.label)

    report = FieldReport(
        ctx=ctx,
        gamma=gctx.gamma,
        verdicts=verdicts,
        distinct_permutations=len(by_map),
        collision_pairs=collision_pairs,
        sparsity_histogram=dict(Counter(r.term_count for r in records)),
        zero_coeff_incidents=incidents,
        oracle_checked=oracle_checked,
        oracle_mismatches=oracle_mismatches,
        elapsed_seconds=time.perf_counter() - started,
    )
    passed_count = len(verdicts) - len(report.failures())
    logger.info(
        f"Surveyed GF({ctx.q}) with gamma {ctx.serialize(gctx.gamma)}: {passed_count}/{len(verdicts)} "
        f"passed, {report.distinct_permutations} distinct maps, {report.elapsed_seconds:.2f}s"
    )
    return report


def survey_generators(ctx: FieldCtx) -> DisjointnessReport:
    """
    Compare the canonical polynomial collections of all generators.

    Publishes counts only; no disjointness outcome is asserted.

    Args:
        ctx: The field, q odd with q = 1 mod 3

    Returns:
        The disjointness report
    """
    if not ctx.supports_families:
        raise DomainError(f"involution families need q odd and q = 1 mod 3, got q = {ctx.q}")
    generators = enumerate_generators(ctx)
    collections: Dict[str, set] = {}
    passed: Dict[str, bool] = {}
    for gamma in generators:
        gctx = make_generator_ctx(ctx, gamma)
        records = all_records(gctx)
        key = generator_key(ctx, gamma)
        collections[key] = {json.dumps(r.poly.serialize(ctx)) for r in records}
        passed[key] = all(verify_record(r, gctx).passed for r in records)

    keys = list(collections)
    union = set().union(*collections.values())
    overlap = [[len(collections[a] & collections[b]) for b in keys] for a in keys]
    logger.info(
        f"Surveyed {len(keys)} generators of GF({ctx.q})*: union of {len(union)} polynomials"
    )
    return DisjointnessReport(
        q=ctx.q,
        generators=[ctx.serialize(g) for g in generators],
        per_generator_counts={key: len(collections[key]) for key in keys},
        per_generator_passed=passed,
        union_count=len(union),
        overlap_matrix=overlap,
    )


def family_orders(q_min: int, q_max: int) -> List[int]:
    """Odd prime powers q = 1 mod 3 in [q_min, q_max], ascending."""
    return [
        q for q in range(max(q_min, 2), q_max + 1)
        if q % 2 == 1 and q % 3 == 1 and len(sympy.factorint(q)) == 1
    ]


def survey_range(
    q_min: int,
    q_max: int,
    max_workers: int = 1,
    oracle_max_q: Optional[int] = None,
) -> List[FieldReport]:
    """
    Survey every supported field order in a range with its canonical generator.

    Args:
        q_min: Smallest order
        q_max: Largest order
        max_workers: Number of worker threads for per-field jobs
        oracle_max_q: Passed through to survey_field

    Returns:
        Reports in ascending q order
    """
    if q_min > q_max:
        raise DomainError(f"empty range: q_min {q_min} > q_max {q_max}")
    orders = family_orders(q_min, q_max)
    limit = _oracle_limit(oracle_max_q)
    logger.info(f"Surveying {len(orders)} field orders in [{q_min}, {q_max}]")

    reports: Dict[int, FieldReport] = {}
    with ThreadPoolExecutor(max_workers=max(1, max_workers)) as executor:
        future_to_q = {
            executor.submit(survey_field, build_field_for_order(q), None, limit): q
            for q in orders
        }
        for future in as_completed(future_to_q):
            q = future_to_q[future]
            try:
                reports[q] = future.result()
            except Exception as e:
                ErrorHandler.log_error(e, {"q": q})
                raise
    return [reports[q] for q in orders]
