"""
Unit tests for the involution families.
"""

import unittest

import pytest

from involution_voyager.core.families import (
    FamilyId,
    Pairing,
    all_records,
    build_poly,
    build_record,
    cyclotomic_form,
    expected_map,
    sixterm_coeffs,
    trinomial_coeffs,
    zero_coefficient_slots,
)
from involution_voyager.core.field import build_field, build_field_for_order
from involution_voyager.core.generator import enumerate_generators, make_generator_ctx
from involution_voyager.survey.surveyor import family_orders
from involution_voyager.utils.error_handling import DomainError

TRINOMIALS = (FamilyId.T1, FamilyId.T2, FamilyId.T3)


class TestFamilyId(unittest.TestCase):
    """Test cases for family metadata."""

    def test_fixed_and_swapped_cosets_partition(self):
        expected_fixed = {"T1": 0, "T2": 1, "T3": 2, "S1": 0, "S2": 1, "S3": 2}
        for family in FamilyId:
            self.assertEqual(family.fixed_coset, expected_fixed[family.value])
            swapped = {family.source_coset, family.target_offset % 3}
            self.assertEqual(swapped | {family.fixed_coset}, {0, 1, 2})
            self.assertEqual(len(swapped), 2)

    def test_pairing(self):
        self.assertIs(FamilyId.T2.pairing, Pairing.SHIFT)
        self.assertIs(FamilyId.S2.pairing, Pairing.REFLECTION)

    def test_exponents(self):
        self.assertEqual(FamilyId.T1.exponents(2), (5, 3, 1))
        self.assertEqual(FamilyId.S1.exponents(4), (11, 9, 7, 5, 3, 1))

    def test_parse(self):
        self.assertIs(FamilyId.parse("s3"), FamilyId.S3)
        with self.assertRaises(DomainError):
            FamilyId.parse("T4")


class TestCoefficients(unittest.TestCase):
    """Test cases for the coefficient formulas."""

    def setUp(self):
        """Set up test fixtures."""
        self.g7 = make_generator_ctx(build_field(7, 1))
        self.g13 = make_generator_ctx(build_field(13, 1))

    def test_t1_worked_example(self):
        self.assertEqual(trinomial_coeffs(FamilyId.T1, self.g7, 0).values, (2, 3, 3))

    def test_t1_degenerate_instance(self):
        """At q = 7, k = 1 the trinomial collapses to x^5."""
        self.assertEqual(trinomial_coeffs(FamilyId.T1, self.g7, 1).values, (1, 0, 0))

    def test_t1_coefficients_sum_to_one(self):
        for q in (7, 13, 19, 25, 31, 37, 43, 49):
            ctx = build_field_for_order(q)
            for gamma in enumerate_generators(ctx):
                gctx = make_generator_ctx(ctx, gamma)
                for k in range(gctx.m):
                    a, b, c = trinomial_coeffs(FamilyId.T1, gctx, k).values
                    self.assertEqual(ctx.add(ctx.add(a, b), c), 1)

    def test_s1_slots(self):
        self.assertEqual(sixterm_coeffs(FamilyId.S1, self.g13, 0).values, (5, 9, 4, 9, 4, 9))
        coeffs = sixterm_coeffs(FamilyId.S1, self.g7, 0)
        self.assertEqual((coeffs["a"], coeffs["b"], coeffs["c"]), (3, 5, 2))

    def test_s1_a_is_minus_two_c(self):
        ctx = self.g13.ctx
        for k in range(self.g13.m):
            coeffs = sixterm_coeffs(FamilyId.S1, self.g13, k)
            self.assertEqual(coeffs["a"], ctx.mul(ctx.neg(2), coeffs["c"]))

    def test_wrong_family_kind(self):
        with self.assertRaises(DomainError):
            trinomial_coeffs(FamilyId.S1, self.g7, 0)
        with self.assertRaises(DomainError):
            sixterm_coeffs(FamilyId.T1, self.g7, 0)

    def test_even_field_rejected(self):
        gctx = make_generator_ctx(build_field(2, 2))
        with self.assertRaises(DomainError):
            trinomial_coeffs(FamilyId.T1, gctx, 0)


class TestPolynomials(unittest.TestCase):
    """Test cases for polynomial construction."""

    def setUp(self):
        """Set up test fixtures."""
        self.g7 = make_generator_ctx(build_field(7, 1))
        self.g13 = make_generator_ctx(build_field(13, 1))

    def test_t1_worked_example(self):
        poly = build_poly(FamilyId.T1, self.g7, 0)
        self.assertEqual(poly.terms, ((5, 2), (3, 3), (1, 3)))
        self.assertEqual(poly.format(self.g7.ctx), "2x^5 + 3x^3 + 3x")

    def test_t1_single_term(self):
        self.assertEqual(build_poly(FamilyId.T1, self.g7, 1).terms, ((5, 1),))

    def test_s1_over_gf13(self):
        poly = build_poly(FamilyId.S1, self.g13, 0)
        self.assertEqual(
            poly.terms, ((11, 5), (9, 9), (7, 4), (5, 9), (3, 4), (1, 9))
        )

    def test_sixterm_exponent_collisions_merge(self):
        """At q = 7 the six-term exponents collide pairwise; S1 with k = 0 reduces to x^5."""
        self.assertEqual(build_poly(FamilyId.S1, self.g7, 0).terms, ((5, 1),))

    def test_m_periodicity(self):
        for gctx in (self.g7, self.g13):
            for family in FamilyId:
                for k in range(gctx.m):
                    self.assertEqual(
                        build_poly(family, gctx, k), build_poly(family, gctx, k + gctx.m)
                    )

    def test_term_bounds(self):
        for q in (7, 13, 19, 25):
            gctx = make_generator_ctx(build_field_for_order(q))
            for record in all_records(gctx):
                self.assertLessEqual(record.term_count, record.family.max_terms)
                self.assertGreaterEqual(record.term_count, 1)

    def test_k_must_be_integer(self):
        with self.assertRaises(DomainError):
            build_poly(FamilyId.T1, self.g7, "1")


class TestRecords(unittest.TestCase):
    """Test cases for construction records."""

    def test_record_counts(self):
        for q, count in ((7, 12), (13, 24), (25, 48)):
            records = all_records(make_generator_ctx(build_field_for_order(q)))
            self.assertEqual(len(records), count)

    def test_record_order(self):
        records = all_records(make_generator_ctx(build_field(7, 1)))
        labels = [r.label for r in records]
        self.assertEqual(labels[:3], ["T1:k=0", "T1:k=1", "T2:k=0"])
        self.assertEqual(labels[-1], "S3:k=1")

    def test_k_normalized(self):
        record = build_record(FamilyId.T2, make_generator_ctx(build_field(13, 1)), 9)
        self.assertEqual(record.k, 1)

    def test_to_dict(self):
        ctx = build_field(7, 1)
        record = build_record(FamilyId.T1, make_generator_ctx(ctx), 0)
        data = record.to_dict(ctx)
        self.assertEqual(data["q"], 7)
        self.assertIsNone(data["modulus"])
        self.assertEqual(data["family"], "T1")
        self.assertEqual(data["gamma"], 3)
        self.assertEqual(data["terms"], [[5, 2], [3, 3], [1, 3]])
        self.assertEqual(data["term_count"], 3)
        self.assertEqual(data["coefficients"], {"a": 2, "b": 3, "c": 3})

    def test_to_dict_extension_field(self):
        ctx = build_field(5, 2)
        record = build_record(FamilyId.S2, make_generator_ctx(ctx), 3)
        data = record.to_dict(ctx)
        self.assertEqual(data["modulus"], [2, 0, 1])
        for _, coefficient in data["terms"]:
            self.assertIsInstance(coefficient, list)
            self.assertEqual(len(coefficient), 2)

    def test_zero_coefficient_slots(self):
        gctx = make_generator_ctx(build_field(7, 1))
        self.assertEqual(zero_coefficient_slots(build_record(FamilyId.T1, gctx, 1), gctx.m), ["b", "c"])
        self.assertEqual(zero_coefficient_slots(build_record(FamilyId.T1, gctx, 0), gctx.m), [])


class TestExpectedMap(unittest.TestCase):
    """Test cases for the expected permutations."""

    def test_t1_worked_example(self):
        gctx = make_generator_ctx(build_field(7, 1))
        perm = expected_map(FamilyId.T1, gctx, 0)
        self.assertEqual(perm(3), 2)
        self.assertEqual(perm(2), 3)
        for x in (0, 1, 6):
            self.assertEqual(perm(x), x)

    def test_s1_inverse_pairing(self):
        gctx = make_generator_ctx(build_field(13, 1))
        self.assertEqual(expected_map(FamilyId.S1, gctx, 0)(2), 7)

    def test_fixed_coset_is_fixed(self):
        gctx = make_generator_ctx(build_field(19, 1))
        for family in FamilyId:
            perm = expected_map(family, gctx, 2)
            fixed = [x for x in gctx.ctx.nonzero() if gctx.cosets[x] == family.fixed_coset]
            for x in fixed:
                self.assertEqual(perm(x), x)
            self.assertEqual(perm(0), 0)


class TestCyclotomicForm(unittest.TestCase):
    """The per-coset multiplier view agrees with the expected map."""

    def test_agrees_with_expected_map(self):
        for q in (7, 13, 25):
            gctx = make_generator_ctx(build_field_for_order(q))
            for record in all_records(gctx):
                form = cyclotomic_form(record, gctx)
                perm = expected_map(record.family, gctx, record.k)
                for x in gctx.ctx.elements():
                    self.assertEqual(form.evaluate(gctx, x), perm(x))

    def test_trinomials_are_linear_on_cosets(self):
        gctx = make_generator_ctx(build_field(13, 1))
        for family in TRINOMIALS:
            form = cyclotomic_form(build_record(family, gctx, 1), gctx)
            self.assertTrue(all(nu == 0 for _, nu in form.multipliers))
            self.assertEqual(form.multipliers[family.fixed_coset], (1, 0))


@pytest.mark.slow
def test_t1_coefficients_sum_to_one_across_sweep():
    """a + b + c = 1 for T1, every generator and k, every supported q up to 343."""
    for q in family_orders(7, 343):
        ctx = build_field_for_order(q)
        for gamma in enumerate_generators(ctx):
            gctx = make_generator_ctx(ctx, gamma)
            for k in range(gctx.m):
                a, b, c = trinomial_coeffs(FamilyId.T1, gctx, k).values
                assert ctx.add(ctx.add(a, b), c) == 1, (q, gamma, k)


if __name__ == "__main__":
    unittest.main()
