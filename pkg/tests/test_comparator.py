import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from a1score.comparator import (
    Branch,
    Crossover,
    ProductEquality,
    ScanRange,
    Winner,
    compare,
    decide_winner,
    oracle_verdict,
    scan,
    scan_crossovers,
)
from a1score.complexity import Product
from a1score.errors import DomainError, EvaluationOverflow
from a1score.metric import A1Config, AlgorithmProfile, a1_components
from strategies import decision_points, monomials, profiles

QUICK = ScanRange(2, 100, 8)


def prof(name, time, space):
    return AlgorithmProfile.from_text(name, time, space)


class TestCompare:
    def test_worked_example(self, worked_x, worked_y):
        v = compare(worked_x, worked_y, 3)
        assert v.branch is Branch.EQUAL_PRODUCT
        assert v.product_equality is ProductEquality.SYMBOLIC
        assert v.winner is Winner.X
        assert v.a1_x < v.a1_y
        assert v.oracle_winner is Winner.X and v.oracle_agrees

    def test_stable_pair(self, stable_x, worked_y):
        v = compare(stable_x, worked_y, 3)
        assert v.branch is Branch.UNEQUAL_PRODUCT
        assert v.winner is Winner.X
        assert v.crossovers == ()

    def test_identical_profiles(self, worked_x):
        for n in (1.5, 3, 77.7):
            v = compare(worked_x, worked_x, n, scan_range=QUICK)
            assert v.winner is Winner.INDISTINGUISHABLE
            assert v.branch is Branch.EQUAL_PRODUCT

    def test_swapped_names_same_algorithm(self, worked_x, worked_y):
        forward = compare(worked_x, worked_y, 3, scan_range=QUICK)
        backward = compare(worked_y, worked_x, 3, scan_range=QUICK)
        assert forward.winner_name() == backward.winner_name() == "X"

    def test_counterexample_is_not_masked(self):
        x, y = prof("X", "1", "n^4"), prof("Y", "n", "n")
        v = compare(x, y, 3)
        assert v.a1_x == pytest.approx(1 + 1 / 81, rel=1e-15)
        assert v.a1_y == pytest.approx(2 / 3, rel=1e-15)
        assert v.branch is Branch.UNEQUAL_PRODUCT
        assert v.winner is Winner.X
        assert v.oracle_winner is Winner.Y
        assert v.oracle_agrees is False

    def test_nstar_precondition(self, worked_x, worked_y):
        with pytest.raises(DomainError):
            compare(worked_x, worked_y, 1)

    def test_overflow_at_decision_point_propagates(self):
        with pytest.raises(EvaluationOverflow):
            compare(prof("A", "2^n", "2^n"), prof("B", "n", "n"), 2000, scan_range=QUICK)

    def test_scan_overflow_becomes_gaps(self):
        x, y = prof("A", "2^n", "1"), prof("B", "n", "1")
        v = compare(x, y, 3, scan_range=ScanRange(2, 2000, 64))
        assert v.scan_gaps and all(g > 1000 for g in v.scan_gaps)
        assert v.winner is not None


def test_decide_winner_rules():
    assert decide_winner(Branch.UNEQUAL_PRODUCT, 0.9, 0.5) is Winner.X
    assert decide_winner(Branch.UNEQUAL_PRODUCT, 0.5, 0.9) is Winner.Y
    assert decide_winner(Branch.EQUAL_PRODUCT, 0.9, 0.5) is Winner.Y
    assert decide_winner(Branch.EQUAL_PRODUCT, 0.5, 0.9) is Winner.X
    assert decide_winner(Branch.UNEQUAL_PRODUCT, 0.5, 0.5 * (1 + 1e-13)) is Winner.INDISTINGUISHABLE
    assert decide_winner(Branch.UNEQUAL_PRODUCT, 0.5, 0.5 * (1 + 1e-11)) is Winner.Y


class TestOracle:
    def test_equal_products_smaller_sum(self, worked_x, worked_y):
        assert oracle_verdict(worked_x, worked_y) is Winner.X

    def test_smaller_product(self, stable_x, worked_y):
        assert oracle_verdict(stable_x, worked_y) is Winner.X

    def test_counterexample(self):
        assert oracle_verdict(prof("X", "1", "n^4"), prof("Y", "n", "n")) is Winner.Y

    def test_identical(self, worked_x):
        assert oracle_verdict(worked_x, worked_x) is Winner.INDISTINGUISHABLE

    def test_swapped_time_space_is_indistinguishable(self, worked_x):
        assert oracle_verdict(worked_x, worked_x.swapped()) is Winner.INDISTINGUISHABLE

    def test_independent_of_config(self, worked_x, worked_y):
        # purely symbolic: no n, xi or log base enters
        assert oracle_verdict(worked_y, worked_x) is Winner.Y


class TestScan:
    def test_points_geometric(self):
        pts = ScanRange(2, 1000, 512).points()
        assert len(pts) == 512 and pts[0] == 2 and pts[-1] == 1000
        ratios = [b / a for a, b in zip(pts, pts[1:])]
        assert max(ratios) == pytest.approx(min(ratios), rel=1e-12)

    @pytest.mark.parametrize("text", ["1:10:5", "5:2:5", "2:10:1", "2:10", "a:b:c"])
    def test_bad_ranges(self, text):
        with pytest.raises(DomainError):
            ScanRange.parse(text)

    def test_stable_pair_no_crossover(self, stable_x, worked_y):
        pts = ScanRange().points()
        # closed form of the difference: 1/n - 1/n^2 > 0 for n > 1
        assert all(1 / n - 1 / n ** 2 > 0 for n in pts)
        assert scan_crossovers(stable_x, worked_y) == []

    def test_identical_stable(self, worked_x):
        assert scan_crossovers(worked_x, worked_x) == []

    def test_worked_pair_stable(self, worked_x, worked_y):
        assert scan_crossovers(worked_x, worked_y) == []

    def test_detects_flip(self):
        # 2/log2(n) against the constant 1/4 crosses at n = 256
        x, y = prof("L", "log n", "log n"), prof("C", "8", "8")
        pts = ScanRange().points()
        expected = [Crossover(min(p for p in pts if p > 256), 1000.0)]
        assert scan_crossovers(x, y) == expected

    def test_deterministic(self, worked_x, worked_y):
        assert scan(worked_x, worked_y) == scan(worked_x, worked_y)


def _safe_components(p, n):
    try:
        return a1_components(p, n)
    except EvaluationOverflow:
        assume(False)


@given(profiles(name="X"), profiles(name="Y"), decision_points,
       st.floats(min_value=1e-3, max_value=1e3), st.floats(min_value=1e-3, max_value=1e3))
@settings(max_examples=200, suppress_health_check=[HealthCheck.filter_too_much])
def test_xi_invariance(x, y, n, xi1, xi2):
    try:
        v1 = compare(x, y, n, A1Config.make(xi1), QUICK)
        v2 = compare(x, y, n, A1Config.make(xi2), QUICK)
    except EvaluationOverflow:
        return
    assert (v1.winner, v1.branch) == (v2.winner, v2.branch)


@given(profiles(name="X"), profiles(name="Y"), decision_points)
@settings(max_examples=200)
def test_antisymmetry(x, y, n):
    try:
        forward = compare(x, y, n, scan_range=QUICK)
        backward = compare(y, x, n, scan_range=QUICK)
    except EvaluationOverflow:
        return
    assert backward.winner is forward.winner.swapped()
    assert backward.branch is forward.branch
    assert backward.oracle_winner is forward.oracle_winner.swapped()


@st.composite
def equal_product_pairs(draw):
    a, b, c = (draw(monomials(allow_negative=True)) for _ in range(3))
    return (AlgorithmProfile("X", Product((a, b)), c), AlgorithmProfile("Y", a, Product((b, c))))


@given(equal_product_pairs(), decision_points)
@settings(max_examples=200)
def test_equal_product_branch_is_smaller_sum(pair, n):
    x, y = pair
    cx, cy = _safe_components(x, n), _safe_components(y, n)
    v = compare(x, y, n, scan_range=QUICK)
    assert v.branch is Branch.EQUAL_PRODUCT
    gap = abs(cx.sum - cy.sum) / max(cx.sum, cy.sum)
    if gap <= 1e-13:
        assert v.winner is Winner.INDISTINGUISHABLE
    elif gap > 1e-9:
        assert v.winner is (Winner.X if cx.sum < cy.sum else Winner.Y)



def test_smaller_product_and_sum_does_not_imply_agreement():
    # smaller product with a smaller-or-equal sum leaves the A1 order open:
    # X = (1, 1) has A1 = 2, Y = (log n, 1/2) has A1 ~ 2.43 at n = 5
    x, y = prof("X", "1", "1"), prof("Y", "log n", "1/2")
    cx, cy = a1_components(x, 5), a1_components(y, 5)
    assert cx.product < cy.product and cx.sum <= cy.sum
    v = compare(x, y, 5, scan_range=QUICK)
    assert v.winner is Winner.Y and v.oracle_winner is Winner.X
    assert v.oracle_agrees is False
