"""Brute-force oracle and differential verification."""

import random

import pytest

from lincong.core import normalize, summarize
from lincong.oracle import CapExceededError, brute_force, verify

from helpers import random_instances

REF = normalize([2, -6], 2, 12)


def test_brute_force_reference_count():
    found = brute_force(REF)
    assert len(found) == 24
    assert (7, 4) in found
    assert (1, 1) not in found


def test_brute_force_small_case():
    assert brute_force(normalize([1, 1], 0, 3)) == {(0, 0), (1, 2), (2, 1)}


def test_brute_force_unsolvable():
    assert brute_force(normalize([2], 1, 4)) == set()


def test_brute_force_cap():
    with pytest.raises(CapExceededError) as err:
        brute_force(normalize([1], 1, 10), cap=5)
    assert "10" in str(err.value)
    assert "5" in str(err.value)
    with pytest.raises(CapExceededError):
        brute_force(normalize([1, 1, 1], 0, 500))  # 500**3 over default cap


def test_verify_reference():
    report = verify(REF)
    assert report.solution_count == 24
    assert report.solution_count == len(report.solutions)
    assert report.agrees_with_summary
    assert report.agrees_with_basis
    assert (10, 11) in report.solutions


def test_verify_unsolvable_instance():
    report = verify(normalize([2], 1, 4))
    assert report.solution_count == 0
    assert report.agrees_with_summary
    assert report.agrees_with_basis


def test_verify_random_instances():
    for c in random_instances(seed=99, count=40):
        report = verify(c)
        assert report.agrees_with_summary, c
        assert report.agrees_with_basis, c
        assert report.solution_count == summarize(c).solution_count


def test_solvability_matches_oracle():
    # unfiltered sample, so both solvable and unsolvable instances occur
    rng = random.Random(5)
    for _ in range(60):
        n = rng.choice((1, 2))
        coeffs = [rng.randint(-12, 12) for _ in range(n)]
        c = normalize(coeffs, rng.randint(-12, 12), rng.randint(1, 12))
        assert summarize(c).solvable == bool(brute_force(c))
