"""
Unit tests for the permutation laboratory.
"""

import unittest

from involution_voyager.core.families import FamilyId, all_records, build_poly
from involution_voyager.core.field import build_field, build_field_for_order
from involution_voyager.core.generator import make_generator_ctx
from involution_voyager.core.polynomial import SparsePoly
from involution_voyager.utils.error_handling import DomainError
from involution_voyager.verification.permutation import (
    CycleType,
    PermMap,
    conjugate,
    cycle_decomposition,
    cycle_type,
    eval_all,
    eval_poly,
    first_collision,
    fixed_points,
    is_involution,
    is_permutation,
    two_cycles,
)


class TestEvaluation(unittest.TestCase):
    """Test cases for polynomial evaluation."""

    def setUp(self):
        """Set up test fixtures."""
        self.ctx = build_field(7, 1)
        self.poly = SparsePoly.from_terms(self.ctx, [(5, 2), (3, 3), (1, 3)])

    def test_eval_poly(self):
        self.assertEqual(eval_poly(self.ctx, self.poly, 3), 2)
        self.assertEqual(eval_poly(self.ctx, self.poly, 1), 1)
        self.assertEqual(eval_poly(self.ctx, self.poly, 0), 0)

    def test_eval_all_agrees_with_pointwise(self):
        for q in (7, 25, 49):
            ctx = build_field_for_order(q)
            gctx = make_generator_ctx(ctx)
            for record in all_records(gctx)[::5]:
                perm = eval_all(ctx, record.poly)
                expected = [eval_poly(ctx, record.poly, x) for x in ctx.elements()]
                self.assertEqual(list(perm.images), expected)

    def test_identity(self):
        x = SparsePoly.from_terms(self.ctx, [(1, 1)])
        self.assertEqual(eval_all(self.ctx, x), PermMap.identity(7))

    def test_inversion(self):
        """x^5 inverts nonzero elements of GF(7)."""
        perm = eval_all(self.ctx, SparsePoly.from_terms(self.ctx, [(5, 1)]))
        self.assertEqual(perm.images, (0, 1, 4, 5, 2, 3, 6))
        self.assertTrue(is_permutation(perm))
        self.assertTrue(is_involution(perm))

    def test_squares_collide(self):
        perm = eval_all(self.ctx, SparsePoly.from_terms(self.ctx, [(2, 1)]))
        self.assertEqual(perm(2), 4)
        self.assertEqual(perm(5), 4)
        self.assertFalse(is_permutation(perm))
        self.assertEqual(first_collision(perm), 4)


class TestPermutationChecks(unittest.TestCase):
    """Test cases for involution, fixed point and cycle checks."""

    def setUp(self):
        """Set up test fixtures."""
        self.ctx = build_field(7, 1)
        self.gctx = make_generator_ctx(self.ctx)
        self.t1 = eval_all(self.ctx, build_poly(FamilyId.T1, self.gctx, 0))

    def test_identity_is_involution(self):
        self.assertTrue(is_involution(PermMap.identity(7)))

    def test_three_cycle_is_not_involution(self):
        self.assertFalse(is_involution(PermMap((1, 2, 0))))

    def test_involution_needs_permutation(self):
        with self.assertRaises(DomainError):
            is_involution(PermMap((0, 0, 1)))
        with self.assertRaises(DomainError):
            cycle_type(PermMap((0, 0, 1)))

    def test_fixed_points(self):
        self.assertEqual(fixed_points(self.t1), [0, 1, 6])
        self.assertEqual(fixed_points(PermMap.identity(7)), list(range(7)))

    def test_s1_fixed_points(self):
        gctx = make_generator_ctx(build_field(13, 1))
        perm = eval_all(gctx.ctx, build_poly(FamilyId.S1, gctx, 0))
        self.assertEqual(fixed_points(perm), [0, 1, 5, 8, 12])

    def test_cycle_type(self):
        self.assertEqual(cycle_type(self.t1).as_dict(), {1: 3, 2: 2})
        self.assertEqual(cycle_type(PermMap.identity(7)).as_dict(), {1: 7})
        self.assertEqual(cycle_type(self.t1).total, 7)
        self.assertEqual(cycle_type(self.t1).serialize(), {"1": 3, "2": 2})

    def test_every_family_cycle_type(self):
        for q, counts in ((7, {1: 3, 2: 2}), (13, {1: 5, 2: 4})):
            ctx = build_field(q, 1)
            gctx = make_generator_ctx(ctx)
            for record in all_records(gctx):
                perm = eval_all(ctx, record.poly)
                self.assertTrue(is_permutation(perm))
                self.assertEqual(cycle_type(perm), CycleType.from_dict(counts))

    def test_cycle_decomposition(self):
        cycles = cycle_decomposition(self.t1)
        self.assertEqual(cycles, [(0,), (1,), (2, 3), (4, 5), (6,)])
        self.assertEqual(two_cycles(self.t1), [(2, 3), (4, 5)])

    def test_decomposition_matches_cycle_type(self):
        perm = PermMap((1, 2, 0, 4, 3, 5))
        lengths = sorted(len(c) for c in cycle_decomposition(perm))
        self.assertEqual(CycleType.from_lengths(lengths), cycle_type(perm))

    def test_involution_cycles_have_length_one_or_two(self):
        gctx = make_generator_ctx(build_field(19, 1))
        for record in all_records(gctx):
            perm = eval_all(gctx.ctx, record.poly)
            lengths = {len(c) for c in cycle_decomposition(perm)}
            self.assertLessEqual(lengths, {1, 2})
            self.assertEqual(len(fixed_points(perm)) + 2 * len(two_cycles(perm)), 19)


class TestConjugation(unittest.TestCase):
    """Relabeling through x -> gamma * x preserves cycle type."""

    def test_conjugate_by_multiplication(self):
        for q in (13, 25):
            ctx = build_field_for_order(q)
            gctx = make_generator_ctx(ctx)
            sigma = PermMap.from_function(ctx, lambda x: ctx.mul(gctx.gamma, x))
            for record in all_records(gctx):
                perm = eval_all(ctx, record.poly)
                relabeled = conjugate(perm, sigma)
                self.assertEqual(cycle_type(relabeled), cycle_type(perm))
                self.assertTrue(is_involution(relabeled))

    def test_conjugate_by_identity(self):
        perm = PermMap((1, 0, 2))
        self.assertEqual(conjugate(perm, PermMap.identity(3)), perm)

    def test_conjugate_rejects_mismatched_sigma(self):
        with self.assertRaises(DomainError):
            conjugate(PermMap((1, 0, 2)), PermMap((0, 1)))


if __name__ == "__main__":
    unittest.main()
