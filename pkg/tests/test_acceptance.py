"""One test per acceptance criterion; each prints its own pass/fail line."""

import pytest

from invforge.acceptance import CRITERIA


def _check(index):
    passed, detail = CRITERIA[index - 1]()
    print(f"criterion {index}: {'PASS' if passed else 'FAIL'} - {detail}")
    assert passed, detail


def test_criterion_1_quadratic_power_transvectants():
    _check(1)


def test_criterion_2_multigraph_count_closed_form():
    _check(2)


def test_criterion_3_hypergeometric_sums():
    _check(3)


def test_criterion_4_diagonal_normal_form():
    _check(4)


def test_criterion_5_alpha_matrix_ranks():
    _check(5)


def test_criterion_6_magic_square_sums():
    _check(6)


def test_criterion_7_covariant_membership():
    _check(7)


def test_criterion_8_character_arithmetic():
    _check(8)


def test_criterion_9_regularity_bound():
    _check(9)
