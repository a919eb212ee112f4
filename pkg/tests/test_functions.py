import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bmfp.functions import (DEFAULT_AXIS, LADDER, SequencePairProbe, affine_plus_one, check_fc_properties,
                            check_j_property_i, check_j_property_ii, check_theta_membership, custom_fc,
                            custom_theta, exponential, fc_eval, find_jump, j_eval, probe_hypothesis, ratio,
                            scaled_ratio, scaled_ratio_membership, theta_eval, theta_power_limit)

from conftest import SQRT3

THETA_GRID = sorted(set(LADDER) | {float(i) for i in range(1, 11)})
STEP_AXIS = [1 + 0.25 * i for i in range(37)]  # [1, 10] step 0.25
INT_AXIS = [float(i) for i in range(1, 11)]


def exp_series(x, terms=20):
    return sum(x ** n / math.factorial(n) for n in range(terms))


# --- evaluators ------------------------------------------------------------

def test_theta_eval_values():
    th = affine_plus_one()
    assert theta_eval(th, 4) == 5
    for x in (1e-6, 0.5, 3.0, 1234.5):
        assert theta_eval(th, x) - 1 == pytest.approx(x, rel=1e-9)
    assert theta_eval(exponential(), 0.001) == pytest.approx(exp_series(0.001), rel=1e-15)
    assert theta_eval(exponential(), 0.001) == pytest.approx(1.0010005, rel=1e-7)


@pytest.mark.parametrize("x", [0, -1.0])
def test_theta_eval_rejects_nonpositive(x):
    with pytest.raises(ValueError):
        theta_eval(affine_plus_one(), x)


def test_fc_eval():
    f = ratio()
    assert fc_eval(f, 5, 2) == 2.5
    assert fc_eval(f, 1, 1) == 1
    assert all(fc_eval(f, x, x) == 1 == f.c for x in DEFAULT_AXIS)
    with pytest.raises(ValueError):
        fc_eval(f, 0.5, 2)


def test_j_eval():
    assert j_eval(scaled_ratio(4), 2, 5) == 0.625
    th = affine_plus_one()
    v = j_eval(scaled_ratio(SQRT3), th(1), th(4))
    assert v == pytest.approx(5 / (2 * SQRT3), abs=1e-12)
    assert v == pytest.approx(1.443376, abs=1e-6)
    assert j_eval(scaled_ratio(3), 2, 16) == pytest.approx(16 / 6, abs=1e-12)
    with pytest.raises(ValueError):
        j_eval(scaled_ratio(3), 0.9, 2)


def test_scaled_ratio_rejects_nonpositive_k():
    with pytest.raises(ValueError):
        scaled_ratio(0)


# --- theta membership ------------------------------------------------------

def test_affine_theta_passes_on_ladder_grid():
    rep = check_theta_membership(affine_plus_one(), THETA_GRID)
    assert rep.passed, rep.witnesses[:3]


def test_builtin_thetas_pass_default_grid():
    assert check_theta_membership(affine_plus_one()).passed
    assert check_theta_membership(exponential()).passed


def test_constant_theta_fails_limit_condition():
    rep = check_theta_membership(custom_theta("const2", lambda x: 2.0), THETA_GRID)
    assert rep.failed("b")
    assert rep.failed("a")  # constant is not increasing either


def test_step_theta_fails_continuity():
    step = custom_theta("step", lambda x: x + 1 if x < 1 else x + 2)
    rep = check_theta_membership(step, THETA_GRID)
    d = rep.failed("d")
    assert d
    lo, hi = d[0].point
    assert lo < 1 <= hi and hi - lo < 1e-6
    assert not rep.failed("a") and not rep.failed("b")


def test_slow_power_theta_not_flagged_at_zero():
    # 1 + x^0.1 belongs to the family but approaches 1 slowly
    rep = check_theta_membership(custom_theta("root", lambda x: 1 + x ** 0.1), THETA_GRID)
    assert rep.passed


def test_theta_grid_too_small():
    with pytest.raises(ValueError):
        check_theta_membership(affine_plus_one(), [1, 2, 3])


def test_power_limit_diagnostic():
    pl = theta_power_limit(affine_plus_one(), 1.0)
    assert pl.estimate == pytest.approx(1.0, rel=1e-6)
    assert not pl.holds  # t = 1 lies outside (0, 1)
    assert theta_power_limit(affine_plus_one(), 0.5).estimate < 1e-5


def test_find_jump_on_continuous_and_step():
    assert find_jump(math.sqrt, 1.0, 100.0) is None
    hit = find_jump(lambda x: 0.0 if x < 2.5 else 1.0, 1.0, 10.0)
    assert hit is not None and hit[0] < 2.5 <= hit[1]


# --- F_c properties --------------------------------------------------------

def test_ratio_passes_step_grid():
    assert check_fc_properties(ratio(), STEP_AXIS).passed


def test_ratio_passes_default_grid():
    assert check_fc_properties(ratio()).passed


def test_ignoring_y_fails_iii_at_2_2():
    rep = check_fc_properties(custom_fc("first", lambda x, y: x), INT_AXIS)
    w = rep.failed("iii")
    assert w[0].point == (2.0, 2.0)


def test_product_fails_ii_at_2_2():
    rep = check_fc_properties(custom_fc("prod", lambda x, y: x * y), INT_AXIS)
    pts = {w.point: w for w in rep.failed("ii")}
    assert (2.0, 2.0) in pts
    assert "4.0 > 2.0" in pts[(2.0, 2.0)].detail


def test_fc_discontinuity_flagged():
    jumpy = custom_fc("jumpy", lambda x, y: x / y if x < 3.3 else x / y / 2)
    assert check_fc_properties(jumpy, INT_AXIS).failed("i")


# --- simulation function property (i) --------------------------------------

@pytest.mark.parametrize("k", [SQRT3, 3.0, 4.0])
def test_j_property_i_builtin(k):
    assert check_j_property_i(scaled_ratio(k), ratio()).passed


def test_j_property_i_on_step_grid():
    assert check_j_property_i(scaled_ratio(4), ratio(), STEP_AXIS[1:]).passed


def test_j_property_i_equality_fails():
    rep = check_j_property_i(scaled_ratio(1), ratio(), INT_AXIS[1:])
    assert not rep.passed


def test_j_property_i_half_fails_at_2_2():
    rep = check_j_property_i(scaled_ratio(0.5), ratio(), INT_AXIS[1:])
    assert rep.witnesses[0].point == (2.0, 2.0)
    assert scaled_ratio(0.5)(2, 2) == 2.0


def test_j_property_i_grid_must_exceed_one():
    with pytest.raises(ValueError):
        check_j_property_i(scaled_ratio(4), ratio(), [1.0, 2.0])


@settings(max_examples=50, deadline=None)
@given(st.floats(1.001, 100))
def test_j_property_i_every_k_above_one(k):
    assert check_j_property_i(scaled_ratio(k), ratio(), DEFAULT_AXIS[::4]).passed


@settings(max_examples=200)
@given(st.floats(1.001, 50), st.floats(1, 1e4), st.floats(1, 1e4))
def test_scaled_ratio_identity(k, x, y):
    assert j_eval(scaled_ratio(k), x, y) * k * x == pytest.approx(y, rel=1e-12)


@settings(max_examples=200)
@given(st.floats(1e-6, 1e6), st.floats(1e-6, 1e6))
def test_affine_theta_strictly_monotone(a, b):
    th = affine_plus_one()
    assert (th(a) < th(b)) == (a < b) or math.isclose(a + 1, b + 1)


# --- simulation function property (ii) -------------------------------------

N = 2000


def test_property_ii_equal_sequences():
    seq = [1 + 1 / n for n in range(1, N + 1)]
    rep = check_j_property_ii(scaled_ratio(4), affine_plus_one(), SequencePairProbe(seq, seq, 4), 1.0)
    assert rep.status == "pass"
    assert rep.limsup == pytest.approx(0.25, abs=1e-12)


def test_property_ii_distinct_limits():
    a = [1 + 1 / n for n in range(1, N + 1)]
    b = [4 - 1 / n for n in range(1, N + 1)]
    rep = check_j_property_ii(scaled_ratio(4), affine_plus_one(), SequencePairProbe(a, b, 4), 1.0)
    assert rep.status == "pass"
    assert rep.limsup == pytest.approx(0.625, abs=1e-3)
    assert rep.limsup < 0.625


def test_property_ii_k_one_equality_fails():
    seq = [2.0] * 10
    rep = check_j_property_ii(scaled_ratio(1), affine_plus_one(), SequencePairProbe(seq, seq, 1), 1.0)
    assert rep.status == "fail"
    assert rep.limsup == 1.0


def test_property_ii_vacuous_probe():
    a = [1.0] * 10
    b = [100.0] * 10
    rep = check_j_property_ii(scaled_ratio(4), affine_plus_one(), SequencePairProbe(a, b, 2), 1.0)
    assert rep.status == "hypothesis not met"


def test_probe_validation():
    with pytest.raises(ValueError):
        SequencePairProbe([1, 2], [1], 2)
    with pytest.raises(ValueError):
        SequencePairProbe([1, -2], [1, 1], 2)


# --- closed-form membership ------------------------------------------------

@pytest.mark.parametrize("k,s,expected", [
    (4, 4, True), (SQRT3, SQRT3, True), (3, 3, True), (1, 1, False), (2, 3, False), (5, 1, True),
])
def test_scaled_ratio_membership(k, s, expected):
    m = scaled_ratio_membership(k, s)
    assert m.member is expected
    assert m.justification


def test_membership_rule_against_random_probes():
    rng = random.Random(20261018)
    checked = 0
    for _ in range(3000):
        s = rng.uniform(1, 5)
        k = rng.choice([s, s * rng.uniform(1, 3), 1.0 + rng.random() * 0.01 + (s - 1)])
        if not scaled_ratio_membership(k, s).member:
            continue
        la = rng.uniform(0.05, 50)
        lb = rng.uniform(la / s, la * s) if s > 1 else la
        n = 200
        a = [la * (1 + rng.uniform(-0.05, 0.05) / (i + 1)) for i in range(n)]
        b = [lb * (1 + rng.uniform(-0.05, 0.05) / (i + 1)) for i in range(n)]
        probe = SequencePairProbe(a, b, s)
        if probe_hypothesis(probe) is not None:
            continue
        rep = check_j_property_ii(scaled_ratio(k), affine_plus_one(), probe, 1.0)
        assert rep.status == "pass", (k, s, la, lb, rep)
        checked += 1
    assert checked > 500
