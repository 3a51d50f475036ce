"""
Involution Voyager

Construction and exhaustive verification of involutory permutation
polynomials over finite fields GF(q), q odd with q = 1 mod 3.
"""

__version__ = "0.1.0"
__author__ = "Involution Voyager Team"

# Field arithmetic
from involution_voyager.core.field import FieldCtx, build_field, build_field_for_order
from involution_voyager.core.generator import GeneratorCtx, make_generator_ctx

# Families
from involution_voyager.core.families import (
    ConstructionRecord,
    FamilyId,
    all_records,
    build_poly,
    expected_map,
)

# Verification
from involution_voyager.verification.interpolation import lagrange, oracle_check
from involution_voyager.verification.permutation import PermMap, eval_all
from involution_voyager.verification.verifier import Verdict, verify_record

# Surveys
from involution_voyager.survey.surveyor import survey_field, survey_generators, survey_range
