from fractions import Fraction

import pytest
from typeguard import CollectionCheckStrategy, TypeCheckError, check_type

from errors import ProblemError
from problem import Allocation
from verification import verify_division
from type_defs import VerifyPayload
from verification.verification_config import CHECK_NAMES


def test_competitive_division_passes(example1):
    report = verify_division(example1, Allocation([["3/4", 1], ["1/4", 0]]), (4, -2), 1)
    assert report.passed
    assert set(report.checks) == set(CHECK_NAMES)
    assert report.details == {}


def test_inefficient_division_fails_wealth_minimization(good_and_chore):
    report = verify_division(good_and_chore, Allocation([["1/3", 1], ["2/3", 0]]), (Fraction(3, 2), Fraction(1, 2)), 1)
    assert not report.passed
    assert not report.checks["wealthMin"]
    assert not report.checks["efficiency"]
    assert not report.checks["consumption"]
    assert report.checks["priceSigns"]


def test_equal_split_fails_efficiency(example1):
    report = verify_division(example1, Allocation.equal_split(2, 2), (4, -2), 1)
    assert not report.checks["efficiency"]
    assert report.checks["noEnvy"]


def test_wrong_price_signs_are_reported(example1):
    report = verify_division(example1, Allocation([["3/4", 1], ["1/4", 0]]), (4, 2), 1)
    assert not report.checks["priceSigns"]
    assert not report.checks["demand"]


def test_budget_must_be_a_sign(example1):
    with pytest.raises(ProblemError):
        verify_division(example1, Allocation.equal_split(2, 2), (4, -2), 2)


def test_report_keys_match_the_payload_schema(example1):
    report = verify_division(example1, Allocation.equal_split(2, 2), (4, -2), 1)
    payload = {"checks": dict(report.checks), "details": dict(report.details)}
    check_type(payload, VerifyPayload, collection_check_strategy=CollectionCheckStrategy.ALL_ITEMS)
    payload["checks"]["envy"] = True
    with pytest.raises(TypeCheckError):
        check_type(payload, VerifyPayload, collection_check_strategy=CollectionCheckStrategy.ALL_ITEMS)
