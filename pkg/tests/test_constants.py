import pytest

from _oracles import GAMMA_40, PI_40, ZETA3_40
from dickman.constants import (
    CoeffTable,
    ContourSpec,
    constants_from_contour,
    constants_from_zeta,
    contour_original_diagnostic,
    genfun,
    vertical_tail_bound,
)
from dickman.errors import InsufficientZetaTable, TailTooLarge
from dickman.numkernel import euler_gamma, xp, xreal, zeta_values


@pytest.fixture(scope="module")
def zeta30():
    return constants_from_zeta(30)


@pytest.fixture(scope="module")
def hankel8():
    return constants_from_contour(8, ContourSpec.hankel())


def test_first_constants_exact(zeta30):
    assert zeta30.C[0] == 1 and zeta30.C[1] == 0
    assert zeta30.method == "zeta_series"


def test_c2_c3_reference(zeta30):
    pi = xreal(PI_40)
    assert abs(zeta30.C[2] + pi ** 2 / 12) <= xreal("1e-33")
    assert abs(zeta30.C[3] + xreal(ZETA3_40) / 3) <= xreal("1e-33")


def test_c4_closed_form(zeta30):
    # C_4 = zeta(2)^2/8 - zeta(4)/4 = pi^4/1440
    pi = xreal(PI_40)
    assert abs(zeta30.C[4] - pi ** 4 / 1440) <= xreal("1e-33")
    assert abs(float(zeta30.C[4]) - 0.0676452021) <= 1e-10


def test_d_relation_exact(zeta30):
    for j in range(31):
        assert zeta30.D[j] == (-1) ** j * xp.factorial(j) * zeta30.C[j]


def test_growth_bound(zeta30):
    assert all(abs(c) <= 10 * (k + 1) for k, c in enumerate(zeta30.C))


def test_insufficient_table():
    with pytest.raises(InsufficientZetaTable):
        constants_from_zeta(10, zeta_values(5))


def test_table_validation():
    with pytest.raises(ValueError):
        CoeffTable.from_C([1, 0], "bogus")


@pytest.mark.parametrize("z,expected", [
    (0, 1),
    (1, 0),
    (-1, None),
    ("0.5", None),
    ("-0.5", None),
    (xp.mpc("0.5", "0.5"), None),
])
def test_partial_sums_match_genfun(zeta30, z, expected):
    z = xp.mpc(z) if not isinstance(z, str) else xp.mpc(xreal(z))
    g = genfun(z)
    assert abs(zeta30.series(z) - g) <= xreal("1e-6")
    if expected is not None:
        assert abs(g - expected) <= xreal("1e-30")


def test_genfun_minus_one():
    assert abs(genfun(-1) - xp.exp(-xreal(GAMMA_40))) <= xreal("1e-30")


def test_sum_of_constants_vanishes(zeta30):
    assert abs(xp.fsum(zeta30.C)) <= xreal("1e-6")


def test_hankel_matches_zeta(zeta30, hankel8):
    assert hankel8.method == "contour_hankel"
    for k in range(9):
        assert abs(hankel8.C[k] - zeta30.C[k]) <= xreal("1e-8")
        assert hankel8.err_bound[k] < xreal("1e-8")


def test_hankel_k0_is_one(hankel8):
    assert abs(hankel8.C[0] - 1) <= xreal("1e-15")


@pytest.mark.slow
def test_vertical_matches_zeta(zeta30):
    table = constants_from_contour(8, ContourSpec.vertical(c=1, T=10 ** 6))
    assert table.method == "contour_vertical"
    for k in range(9):
        assert abs(table.C[k] - zeta30.C[k]) <= xreal("1e-6")
    # k = 2 lands within its recorded bound
    assert abs(table.C[2] + xp.pi ** 2 / 12) <= table.err_bound[2]


def test_vertical_tail_too_large():
    with pytest.raises(TailTooLarge) as info:
        constants_from_contour(3, ContourSpec.vertical(T=100), tol="1e-12")
    assert info.value.k == 0


def test_vertical_tail_bound_shape():
    g = euler_gamma()
    assert vertical_tail_bound(2, 1, 10 ** 6, g) < vertical_tail_bound(2, 1, 10 ** 4, g)
    assert vertical_tail_bound(4, 1, 10 ** 6, g) > 0


@pytest.mark.parametrize("kw", [dict(kind="vertical", c=0, T=10), dict(kind="vertical", c=1, T=-1),
                                dict(kind="hankel", delta=2, x_max=60), dict(kind="hankel", delta="1e-3", x_max=1),
                                dict(kind="spiral")])
def test_contour_spec_validation(kw):
    with pytest.raises(ValueError):
        ContourSpec(**kw)


def test_csv_export(zeta30):
    lines = zeta30.to_csv().splitlines()
    assert lines[0] == "k,C_k,D_k,method,err_bound"
    assert len(lines) == 32
    k, c, d, method, err = lines[4].split(",")
    assert k == "3" and method == "zeta_series"
    assert abs(xreal(c) - zeta30.C[3]) <= xreal("1e-34")


def test_original_integral_diagnostic_is_rough(zeta30):
    # conditionally convergent form: only a loose agreement is expected
    assert abs(contour_original_diagnostic(2, T=10 ** 5) - float(zeta30.C[2])) < 1e-2
