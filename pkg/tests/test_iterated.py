import pytest
from hypothesis import given, settings, strategies as st

from _oracles import I2_3, i2_simplex_2d, midpoint_log_integral
from dickman.errors import RecursionBudgetExceeded
from dickman.iterated import IkEvaluator, I_k, L_k, RamanujanTerm, ramanujan_nested
from dickman.numkernel import xp, xreal


def test_I0_is_one():
    for u in (0, "0.5", 3, 100):
        assert I_k(0, u) == 1


def test_I1_examples():
    assert I_k(1, "0.5") == 0 and I_k(1, 1) == 0
    assert abs(I_k(1, xp.e) - 1) <= xreal("1e-32")


@pytest.mark.parametrize("k", [1, 2, 3, 5, 8])
def test_zero_on_or_below_k(k):
    for u in (0, xreal(k) / 2, k - xreal("0.1"), k):
        assert I_k(k, u) == 0


def test_I5_below_5():
    assert I_k(5, "4.9") == 0


def test_I2_3_simplex_oracle():
    val = I_k(2, 3)
    assert abs(val - xreal(I2_3)) <= xreal("1e-25")
    assert abs(float(val) - i2_simplex_2d()) <= 1e-12
    assert abs(float(val) - midpoint_log_integral()) <= 1e-10


@pytest.mark.parametrize("u", [2.5, 4, 7.25])
def test_I2_simplex_oracle_other_points(u):
    assert abs(float(I_k(2, u)) - i2_simplex_2d(u)) <= 1e-12


@pytest.mark.parametrize("k", [2, 3, 4])
def test_monotone_in_u(k):
    grid = [k + xreal(i) / 10 for i in range(1, 51)]
    vals = [I_k(k, u) for u in grid]
    assert all(v >= 0 for v in vals)
    assert all(b >= a for a, b in zip(vals, vals[1:]))


@pytest.mark.parametrize("k,u", [(2, "3.7"), (3, "5.5"), (4, "9.3"), (3, "40")])
def test_steps_match_convolution(k, u):
    assert abs(I_k(k, u) - I_k(k, u, method="convolution")) <= xreal("1e-18")


def test_delay_identity():
    # u I_k'(u) = k I_{k-1}(u-1)
    ev = IkEvaluator(3)
    for u in ("4.2", "6.9", "12"):
        u = xreal(u)
        h = xreal("1e-12")
        fd = (ev.value(3, u + h) - ev.value(3, u - h)) / (2 * h)
        assert abs(u * fd - 3 * ev.value(2, u - 1)) <= xreal("1e-10")


def test_evaluator_reaches_large_u():
    ev = IkEvaluator()
    val = ev.value(4, 10 ** 4)
    assert val > 0 and len(ev.pieces(4)) <= 16
    assert ev.cache[(4, xreal(10 ** 4))] == val


def test_unknown_method():
    with pytest.raises(ValueError):
        I_k(2, 3, method="nope")
    with pytest.raises(ValueError):
        L_k(2, "0.1", method="nope")


# -- polylogarithms ---------------------------------------------------------------

def test_L0_and_vanishing():
    assert L_k(0, "0.3") == 1
    assert L_k(1, 1) == 0 and L_k(1, 2) == 0
    assert L_k(3, xreal(1) / 3) == 0


def test_L1_is_log():
    assert abs(L_k(1, 1 / xp.e) + 1) <= xreal("1e-30")
    assert abs(L_k(1, 1 / xp.e, method="recursion") + 1) <= xreal("1e-30")


def test_L2_quarter_identity():
    assert abs(L_k(2, "0.25") - I_k(2, 4) / 2) <= xreal("1e-30")
    assert abs(L_k(2, "0.25", method="recursion") - I_k(2, 4) / 2) <= xreal("1e-18")


@pytest.mark.parametrize("k", [1, 2, 3])
@pytest.mark.parametrize("c", ["0.9", "0.5", "0.2"])
def test_polylog_identity_recursion(k, c):
    alpha = xreal(c) / k
    direct = L_k(k, alpha, method="recursion")
    via_I = (-1) ** k * I_k(k, 1 / alpha) / xp.factorial(k)
    assert abs(direct - via_I) <= xreal("1e-10")


@pytest.mark.slow
@pytest.mark.parametrize("c", ["0.9", "0.5", "0.2"])
def test_polylog_identity_recursion_k4(c):
    alpha = xreal(c) / 4
    direct = L_k(4, alpha, method="recursion")
    assert abs(direct - I_k(4, 1 / alpha) / 24) <= xreal("1e-10")


def test_recursion_budget():
    with pytest.raises(RecursionBudgetExceeded):
        L_k(5, "0.01", method="recursion", budget=1000)


# -- Ramanujan ---------------------------------------------------------------------

def test_nested_depth1():
    t = ramanujan_nested(1, "0.5")
    assert isinstance(t, RamanujanTerm)
    assert abs(t.value - xp.log(2)) <= xreal("1e-30")


@pytest.mark.parametrize("j,eps", [(1, "0.6"), (2, "0.4"), (3, "0.26"), (2, "0.35"), (3, "0.3")])
def test_nested_equals_Ij(j, eps):
    eps = xreal(eps)
    val = ramanujan_nested(j, eps).value
    assert abs(val - I_k(j, 1 / eps) / xp.factorial(j)) <= xreal("1e-9")


@given(st.floats(min_value=0.34, max_value=1.0))
@settings(max_examples=10, deadline=None)
def test_nested_nonnegative_and_vanishing(eps):
    for j in (1, 2, 3):
        val = ramanujan_nested(j, eps).value
        assert val >= 0
        if eps >= 1 / j:
            assert val == 0


def test_quoted_limits_agree_to_depth_two():
    for j, eps in ((1, "0.3"), (2, "0.3")):
        assert abs(ramanujan_nested(j, eps).value - ramanujan_nested(j, eps, limits="quoted").value) <= xreal("1e-25")


def test_quoted_limits_differ_at_depth_three():
    simplex = ramanujan_nested(3, "0.26").value
    quoted = ramanujan_nested(3, "0.26", limits="quoted").value
    assert abs(simplex - quoted) > xreal("0.01")


def test_nested_rejects_bad_input():
    with pytest.raises(ValueError):
        ramanujan_nested(0, "0.5")
    with pytest.raises(ValueError):
        ramanujan_nested(2, 0)
