from fractions import Fraction

import pytest

from evoalg.radical import RadicalScalar as R
from evoalg.treecase import LinearSpan, propagate_zeros, t, verify_tree_example


@pytest.fixture(scope="module")
def report():
    return verify_tree_example()


def test_hand_equations_follow_from_the_system(report):
    assert set(report.labels_checked) == {f"exT{k}" for k in range(1, 13)}
    assert all(report.labels_checked.values())
    assert report.product_split and report.exT13


def test_cases(report):
    case1, case2, case3 = report.cases
    assert case1.null_map and case1.consistent
    assert case2.groebner == ["1"] and not case2.consistent
    assert case3.groebner == ["1"] and not case3.consistent
    assert report.null_only


def test_exact_t56_and_routes(report):
    assert report.t56 == R.cbrt(Fraction(1, 9))
    assert report.t65_route1 == R.cbrt(Fraction(1, 3))
    assert report.t65_route2 == R.power(3, Fraction(-5, 6))
    assert report.contradiction


def test_published_values_come_from_the_slipped_relation(report):
    # 2 t56 = 9 t56^4 gives (2/9)^(1/3); the system only supports 2 t56 = 18 t56^4
    assert report.published_t56 == R.cbrt(Fraction(2, 9))
    assert not report.published_t56_matches
    assert report.correct_member and not report.slip_member


def test_transcript_and_json(report):
    assert report.transcript
    data = report.to_json()
    assert data["null_only"] and data["contradiction"]


def test_linear_span_membership():
    span = LinearSpan([t(1, 1) + t(1, 2), t(1, 2)])
    assert t(1, 1) in span
    assert t(2, 2) not in span


def test_propagate_zeros_infeasible_and_zeroing():
    x, y = t(1, 1), t(1, 2)
    _, _, infeasible = propagate_zeros([x**2 + y**2 + 1], {})
    assert infeasible
    known, _, infeasible = propagate_zeros([x**2 + y**4], {})
    assert not infeasible and known[x] == 0 and known[y] == 0
