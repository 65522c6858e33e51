"""
Unit tests for K_n, witness partitions and the brute-force oracle.
"""

import pytest

from stabilens.core.errors import EOutOfRange, NOutOfRange, TooLarge
from stabilens.core.types import KmaxCase, Partition
from stabilens.partition import (
    classify, eadic, kmax, kmax_bruteforce_oracle, partition_witness, validate_partition
)
from stabilens.partition.kmax import BRANCH_BALANCED

from .fixtures import KMAX_VALUES

ORACLE_FIELDS = [3, 4, 5, 7, 8, 9, 11, 13, 16]


@pytest.mark.parametrize("e,n", sorted(KMAX_VALUES))
def test_published_values(e, n):
    assert kmax(e, n).value == KMAX_VALUES[(e, n)]


def test_worked_example_63():
    result = kmax(16, 63)
    assert result.value == 7
    assert result.case_tag is KmaxCase.OVERFLOW
    assert result.witness.parts == (16, 16, 16, 15)
    assert (result.eadic.a, result.eadic.b) == (3, 15)


def test_small_values():
    assert kmax(3, 5).value == 1
    result = kmax(16, 34)
    assert result.value == 5
    assert result.case_tag is KmaxCase.BALANCED
    assert result.witness.branch == BRANCH_BALANCED
    assert result.witness.parts == (12, 11, 11)


def test_full_length_counts_as_b_zero():
    form = eadic(9, 81)
    assert (form.a, form.b) == (9, 0)
    assert classify(form) is KmaxCase.B_ZERO
    assert kmax(9, 81).value == 4


def test_case_tags():
    assert kmax(16, 64).case_tag is KmaxCase.B_ZERO
    assert kmax(16, 10).case_tag is KmaxCase.A_ZERO
    assert kmax(16, 10).value == 5


def test_range_errors():
    with pytest.raises(EOutOfRange, match="e must exceed 2"):
        kmax(2, 3)
    with pytest.raises(EOutOfRange):
        kmax(6, 10)
    with pytest.raises(NOutOfRange):
        kmax(4, 1)
    with pytest.raises(NOutOfRange):
        kmax(4, 17)


@pytest.mark.parametrize("e", [3, 4, 5, 7, 8, 9, 16])
def test_witness_satisfies_hypotheses(e):
    for n in range(2, e * e + 1):
        result = kmax(e, n)
        witness = partition_witness(e, n)
        assert witness.n == n
        assert validate_partition(e, result.value, witness)


def test_validate_partition_reasons():
    check = validate_partition(4, 2, Partition(parts=(4, 3)))
    assert not check
    assert any("smallest part" in reason for reason in check.reasons)
    assert not validate_partition(3, 1, Partition(parts=(2, 2, 2, 2)))
    assert not validate_partition(3, 1, Partition(parts=(4, 2)))
    assert validate_partition(4, 1, Partition(parts=(2, 4)))


@pytest.mark.parametrize("e", ORACLE_FIELDS)
def test_formula_matches_oracle(e):
    mismatches = [n for n in range(2, e * e + 1) if kmax(e, n).value != kmax_bruteforce_oracle(e, n)]
    assert mismatches == []


def test_oracle_guards():
    with pytest.raises(TooLarge):
        kmax_bruteforce_oracle(64, 100)
    with pytest.raises(NOutOfRange):
        kmax_bruteforce_oracle(5, 26)


def test_witness_parts_for_f256():
    for n in range(2, 16 * 16 + 1):
        witness = partition_witness(16, n)
        assert sum(witness.parts) == n
        assert len(witness.parts) <= 16
        assert all(2 <= part <= 16 for part in witness.parts)
        assert min(witness.parts) // 2 >= kmax(16, n).value
