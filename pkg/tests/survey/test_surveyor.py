"""
Unit tests for the surveyor.
"""

import json
import unittest
from unittest.mock import MagicMock, patch

import pytest

from involution_voyager.core.field import build_field, build_field_for_order
from involution_voyager.survey.surveyor import (
    family_orders,
    survey_field,
    survey_generators,
    survey_range,
)
from involution_voyager.utils.error_handling import DomainError, NotAGeneratorError


class TestSurveyField(unittest.TestCase):
    """Test cases for single-field surveys."""

    @classmethod
    def setUpClass(cls):
        """Survey the two smallest fields once."""
        cls.gf7 = survey_field(build_field(7, 1), 3, oracle_max_q=49)
        cls.gf13 = survey_field(build_field(13, 1), 2, oracle_max_q=49)

    def test_gf7_passes_with_collisions(self):
        report = self.gf7
        self.assertEqual(len(report.verdicts), 12)
        self.assertTrue(report.passed)
        self.assertLess(report.distinct_permutations, 12)
        self.assertTrue(report.collision_pairs)
        labels = {v.record.label for v in report.verdicts}
        for first, second in report.collision_pairs:
            self.assertIn(first, labels)
            self.assertIn(second, labels)

    def test_gf7_zero_coefficient_incident(self):
        incidents = {(i.family, i.k, i.slot) for i in self.gf7.zero_coeff_incidents}
        self.assertIn(("T1", 1, "b"), incidents)
        self.assertIn(("T1", 1, "c"), incidents)

    def test_gf13_all_distinct(self):
        report = self.gf13
        self.assertEqual(len(report.verdicts), 24)
        self.assertTrue(report.passed)
        self.assertEqual(report.distinct_permutations, 24)
        self.assertEqual(report.collision_pairs, [])

    def test_oracle_ran(self):
        self.assertEqual(self.gf13.oracle_checked, 24)
        self.assertEqual(self.gf13.oracle_mismatches, [])

    def test_sparsity_histogram(self):
        histogram = self.gf13.sparsity_histogram
        self.assertEqual(sum(histogram.values()), 24)
        self.assertLessEqual(max(histogram), 6)

    def test_to_dict_is_json(self):
        data = json.loads(json.dumps(self.gf7.to_dict()))
        self.assertEqual(data["q"], 7)
        self.assertEqual(data["gamma"], 3)
        self.assertEqual(data["record_count"], 12)
        self.assertEqual(len(data["verdicts"]), 12)
        self.assertNotIn("elapsed_seconds", data)

    def test_csv_rows(self):
        rows = self.gf7.csv_rows()
        self.assertEqual(len(rows), 12)
        self.assertEqual(rows[0], {"q": 7, "family": "T1", "k": 0, "term_count": 3, "passed": True})

    def test_oracle_skipped_above_limit(self):
        report = survey_field(build_field(19, 1), oracle_max_q=13)
        self.assertEqual(report.oracle_checked, 0)
        self.assertTrue(report.passed)

    def test_oracle_limit_from_config(self):
        with patch("involution_voyager.config.get_config") as mock_get_config:
            config = MagicMock()
            config.get.side_effect = lambda key, default=None: {
                "interpolation.enabled": True,
                "interpolation.max_q": 7,
            }.get(key, default)
            mock_get_config.return_value = config
            report = survey_field(build_field(7, 1))
        self.assertEqual(report.oracle_checked, 12)

    def test_rejects_unsupported_field(self):
        with self.assertRaises(DomainError):
            survey_field(build_field(5, 1), oracle_max_q=0)

    def test_rejects_non_generator(self):
        with self.assertRaises(NotAGeneratorError):
            survey_field(build_field(7, 1), 2, oracle_max_q=0)


class TestSurveyGenerators(unittest.TestCase):
    """Test cases for the cross-generator survey."""

    def test_gf7(self):
        report = survey_generators(build_field(7, 1))
        self.assertEqual(report.generators, [3, 5])
        self.assertEqual(set(report.per_generator_counts), {"3", "5"})
        self.assertTrue(all(report.per_generator_passed.values()))
        self.assertGreaterEqual(report.union_count, max(report.per_generator_counts.values()))
        self.assertLessEqual(report.union_count, sum(report.per_generator_counts.values()))

    def test_gf13_overlap_matrix(self):
        report = survey_generators(build_field(13, 1))
        self.assertEqual(len(report.per_generator_counts), 4)
        self.assertEqual(len(report.overlap_matrix), 4)
        counts = list(report.per_generator_counts.values())
        for i in range(4):
            self.assertEqual(report.overlap_matrix[i][i], counts[i])
            for j in range(4):
                self.assertEqual(report.overlap_matrix[i][j], report.overlap_matrix[j][i])

    def test_deterministic(self):
        ctx = build_field_for_order(25)
        first = json.dumps(survey_generators(ctx).to_dict())
        second = json.dumps(survey_generators(ctx).to_dict())
        self.assertEqual(first, second)

    def test_every_generator_passes(self):
        for q in (7, 13, 19, 25, 31):
            report = survey_generators(build_field_for_order(q))
            self.assertTrue(all(report.per_generator_passed.values()), msg=f"q={q}")


class TestSurveyRange(unittest.TestCase):
    """Test cases for range surveys."""

    def test_family_orders(self):
        self.assertEqual(family_orders(7, 30), [7, 13, 19, 25])
        self.assertEqual(family_orders(26, 50), [31, 37, 43, 49])
        self.assertEqual(family_orders(8, 12), [])
        self.assertEqual(family_orders(1, 6), [])

    def test_range(self):
        reports = survey_range(7, 30, max_workers=2, oracle_max_q=0)
        self.assertEqual([r.q for r in reports], [7, 13, 19, 25])
        self.assertTrue(all(r.passed for r in reports))

    def test_empty_range(self):
        self.assertEqual(survey_range(8, 12, oracle_max_q=0), [])

    def test_reversed_range(self):
        with self.assertRaises(DomainError):
            survey_range(30, 7, oracle_max_q=0)


@pytest.mark.slow
def test_full_sweep():
    """Every supported field up to 343 passes, with distinct maps for q >= 13."""
    reports = survey_range(7, 343, max_workers=4, oracle_max_q=25)
    assert [r.q for r in reports][-1] == 343
    for report in reports:
        assert report.passed, report.q
        assert len(report.verdicts) == 2 * (report.q - 1)
        assert max(report.sparsity_histogram) <= 6
        if report.q >= 13:
            assert report.distinct_permutations == 2 * (report.q - 1)


if __name__ == "__main__":
    unittest.main()
