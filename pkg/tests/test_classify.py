from fractions import Fraction as Q

import pytest

from conftest import read_golden
from hwunitary.classify import Status, classify_inf_char, classify_lambda, inf_char_report
from hwunitary.dirac import dirac_scalar_form
from hwunitary.root_system import E6, E7, Family, build, e6_f, make_weight
from sampling import samples

U, N, P = Status.UNITARY, Status.NONUNITARY, Status.NOT_PARAMETER

SO = [Family.so_even(n) for n in (3, 4, 5, 6)] + [Family.so_odd(n) for n in (2, 3, 4, 5)]
ALL = SO + [E6, E7]


def _shift(spec, lam):
    return tuple(a + r for a, r in zip(lam, spec.rho))


@pytest.mark.parametrize("family", ALL, ids=str)
def test_trivial_module_is_unitary(family):
    spec = build(family)
    assert classify_lambda(spec, (0,) * spec.dim).status is U
    assert classify_inf_char(spec, spec.rho).status is U


def test_named_points(e6, e7):
    assert classify_lambda(e7, make_weight(E7, (0, 0, 0, 0, 0, -4, 2))).status is U
    v = classify_lambda(e6, make_weight(E6, (0, 0, 0, 0, 1, 3)))
    assert v.status is U and e6_f(make_weight(E6, (0, 0, 0, 0, 1, 3))) == 8
    assert not v.verma_irreducible
    assert classify_lambda(build(Family.so_even(4)), (-3, 2, 2, 1)).status is N
    assert classify_inf_char(e6, make_weight(E6, (0, 1, 2, 3, 4, 4))).status is U
    assert classify_inf_char(e7, make_weight(E7, (0, 1, 2, 3, 4, -13, Q(1, 2)))).status is U
    assert classify_inf_char(e6, make_weight(E6, (0, 1, 4, 5, 6, 0))).status is N


def test_e6_isolated_point_on_case_two_line(e6):
    # lam = (0,0,0,0,1,l6): unitary at f = 8 and from f = 14 on, not in between
    got = {}
    for k in range(6, 20):
        lam = make_weight(E6, (0, 0, 0, 0, 1, Q(k + 1, 3)))
        got[k] = classify_lambda(e6, lam).status
    assert [k for k, s in got.items() if s is U] == [8, 14, 15, 16, 17, 18, 19]


def test_not_parameter_labels(e6):
    assert classify_lambda(e6, make_weight(E6, (Q(1, 2), 1, 2, 3, 4, 0))).case_label == "not-k-integral"
    assert classify_lambda(e6, make_weight(E6, (2, 1, 2, 3, 4, 0))).case_label == "not-k-dominant"
    assert classify_lambda(e6, (0, 0, 0, 0, 0, 1, 2, -1)).case_label == "off-subspace"
    assert classify_inf_char(e6, (0,) * 8).status is P


def test_scalar_line_so_even():
    spec = build(Family.so_even(4))
    got = {k: classify_lambda(spec, (Q(k, 2), 0, 0, 0)).status for k in range(-8, 3)}
    # Wallach set {0} together with (-inf, 2 - n]
    assert [k for k, s in got.items() if s is U] == [-8, -7, -6, -5, -4, 0]


@pytest.mark.parametrize("family", ALL, ids=str)
def test_lambda_and_parameter_forms_agree(family):
    spec, lams = samples(family, 400, seed=11)
    for lam in lams:
        a = classify_lambda(spec, lam)
        b = classify_inf_char(spec, _shift(spec, lam))
        assert (a.status, a.verma_irreducible) == (b.status, b.verma_irreducible), lam


@pytest.mark.parametrize("family", SO, ids=str)
def test_verma_flag_matches_strict_clause(family):
    spec, lams = samples(family, 300, seed=5)
    for lam in lams:
        v = classify_lambda(spec, lam)
        form = dirac_scalar_form(spec, lam)
        if v.case_label in ("spinor", "general"):
            assert v.is_unitary == form.holds
            assert v.verma_irreducible == form.strict


def test_verdict_invariant():
    from hwunitary.classify import UnitarityVerdict

    with pytest.raises(ValueError):
        UnitarityVerdict(N, True, "x")


def test_e6_report_matches_listing(e6):
    r = inf_char_report(e6, e6.rho)
    assert set(r.unitary) == set(read_golden("e6_rho_unitary.txt"))
    assert set(r.nonunitary) == set(read_golden("e6_rho_nonunitary.txt"))


@pytest.mark.slow
def test_e7_report_matches_listing(e7):
    r = inf_char_report(e7, e7.rho)
    assert set(r.unitary) == set(read_golden("e7_rho_unitary.txt"))
    assert set(r.nonunitary) == set(read_golden("e7_rho_nonunitary.txt"))


def test_so_even_3_report():
    r = inf_char_report(build(Family.so_even(3)), (2, 1, 0))
    # (0|2,-1) is the mirror of (0|2,1) under the last-coordinate flip
    assert set(r.unitary) == {(2, 1, 0), (-2, 1, 0), (-1, 2, 0), (0, 2, 1), (0, 2, -1)}
    assert set(r.nonunitary) == {(1, 2, 0)}
