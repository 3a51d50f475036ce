"""
Unit tests for the interpolation oracle.
"""

import unittest

from involution_voyager.core.families import FamilyId, all_records, build_record, expected_map
from involution_voyager.core.field import build_field, build_field_for_order
from involution_voyager.core.generator import make_generator_ctx
from involution_voyager.core.polynomial import SparsePoly
from involution_voyager.verification.interpolation import (
    DensePoly,
    canonical_equal,
    lagrange,
    oracle_check,
    to_sparse,
)
from involution_voyager.verification.permutation import PermMap, eval_all


class TestLagrange(unittest.TestCase):
    """Test cases for Lagrange interpolation."""

    def setUp(self):
        """Set up test fixtures."""
        self.ctx = build_field(7, 1)
        self.gctx = make_generator_ctx(self.ctx)

    def test_identity_interpolates_to_x(self):
        for q in (7, 13, 25):
            ctx = build_field_for_order(q)
            dense = lagrange(ctx, PermMap.identity(q))
            self.assertEqual(len(dense.coeffs), q)
            self.assertEqual(to_sparse(dense).terms, ((1, 1),))

    def test_worked_example(self):
        dense = lagrange(self.ctx, expected_map(FamilyId.T1, self.gctx, 0))
        self.assertEqual(to_sparse(dense).terms, ((5, 2), (3, 3), (1, 3)))
        self.assertEqual(dense.degree, 5)

    def test_zero_map(self):
        dense = lagrange(self.ctx, PermMap((0,) * 7))
        self.assertEqual(dense.degree, -1)
        self.assertTrue(to_sparse(dense).is_zero)

    def test_constant_map(self):
        dense = lagrange(self.ctx, PermMap((4,) * 7))
        self.assertEqual(to_sparse(dense).terms, ((0, 4),))

    def test_non_permutation(self):
        """x^2 on GF(7) is recovered even though it is not a bijection."""
        square = SparsePoly.from_terms(self.ctx, [(2, 1)])
        dense = lagrange(self.ctx, eval_all(self.ctx, square))
        self.assertEqual(to_sparse(dense), square)

    def test_size_mismatch(self):
        with self.assertRaises(ValueError):
            lagrange(self.ctx, PermMap.identity(5))


class TestCanonicalForm(unittest.TestCase):
    """Test cases for sparse conversion and comparison."""

    def setUp(self):
        """Set up test fixtures."""
        self.ctx = build_field(7, 1)

    def test_to_sparse(self):
        dense = DensePoly((0, 3, 0, 3, 0, 2, 0))
        self.assertEqual(to_sparse(dense).terms, ((5, 2), (3, 3), (1, 3)))

    def test_canonical_equal(self):
        x5 = SparsePoly.from_terms(self.ctx, [(5, 1)])
        padded = SparsePoly.from_terms(self.ctx, [(5, 1), (3, 0)])
        x11 = SparsePoly.from_terms(self.ctx, [(11, 1)])
        self.assertTrue(canonical_equal(x5, x5))
        self.assertTrue(canonical_equal(x5, padded))
        self.assertFalse(canonical_equal(x5, x11))
        self.assertEqual(eval_all(self.ctx, x5), eval_all(self.ctx, x11))


class TestOracle(unittest.TestCase):
    """Interpolating every expected map recovers the constructed polynomial."""

    def test_oracle_small_fields(self):
        for q in (7, 13, 19, 25):
            ctx = build_field_for_order(q)
            gctx = make_generator_ctx(ctx)
            for record in all_records(gctx):
                self.assertTrue(oracle_check(ctx, record, gctx), msg=f"q={q} {record.label}")

    def test_round_trip(self):
        for q in (7, 13, 19, 25):
            ctx = build_field_for_order(q)
            gctx = make_generator_ctx(ctx)
            for record in all_records(gctx):
                recovered = to_sparse(lagrange(ctx, eval_all(ctx, record.poly)))
                self.assertEqual(recovered, record.poly, msg=f"q={q} {record.label}")

    def test_oracle_detects_mismatch(self):
        ctx = build_field(13, 1)
        gctx = make_generator_ctx(ctx)
        record = build_record(FamilyId.S1, gctx, 0)
        other = build_record(FamilyId.S1, gctx, 1)
        swapped = type(record)(record.family, record.gamma, record.k, record.coeffs, other.poly)
        self.assertFalse(oracle_check(ctx, swapped, gctx))


if __name__ == "__main__":
    unittest.main()
