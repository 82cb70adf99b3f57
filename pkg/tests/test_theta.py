import pytest

from hwunitary.theta import NILRADICAL_DIMS, ThetaType, discrete_point_bridge, minimal_type, pi_types


def test_pi_types_level_two():
    rows = {t.as_row() for t in pi_types(0, 2)}
    assert rows == {(0, 0, 0, 0, 16), (0, 1, 0, 1, 19), (1, 0, 1, 2, 22), (0, 2, 0, 2, 22)}
    assert [t.as_row() for t in pi_types(-2, 2)] == [(2, 0, 0, 2, 20)]


@pytest.mark.parametrize("m", [-4, -1, 1, 5])
def test_pi_types_empty_below_level_abs_m(m):
    assert pi_types(m, abs(m) - 1) == []


def test_minimal_types():
    assert minimal_type(0).hprime_weight == 16
    assert minimal_type(3).as_row() == (0, 0, 3, 3, 28)
    for k in range(8):
        assert minimal_type(-k).hprime_weight == 2 * k + 16


@pytest.mark.parametrize("m", range(-6, 7))
def test_minimal_type_is_lowest(m):
    for level in range(abs(m), abs(m) + 5):
        rows = pi_types(m, level)
        assert min(rows, key=lambda t: t.hprime_weight) == minimal_type(m)


def test_every_type_has_the_right_m():
    for m in range(-3, 4):
        for t in pi_types(m, 6):
            assert t.m == m and t.n <= 6


def test_theta_type_validation():
    with pytest.raises(ValueError):
        ThetaType(1, 0, 0, 2, 22)
    with pytest.raises(ValueError):
        ThetaType(0, 0, 0, 0, 17)
    assert sum(NILRADICAL_DIMS) == 27


def test_bridge_examples():
    p = discrete_point_bridge(1)
    assert p.weight == (0, 0, 0, 0, 1, 3, 3, -3) and p.h_value == -18 and p.m == -1
    assert discrete_point_bridge(4).h_value == -24
    with pytest.raises(ValueError):
        discrete_point_bridge(0)
    with pytest.raises(ValueError):
        discrete_point_bridge(-3)
