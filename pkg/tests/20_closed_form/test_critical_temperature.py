import pytest

from libs.trimer.closed_form import (
    RATIO_THRESHOLD,
    boltzmann_ratio,
    closed_form_measure,
    critical_ratio,
    critical_temperature,
    entangled_region,
    root_x,
)
from libs.trimer.models import TrimerModel


def test_betaine_compound():
    assert critical_temperature(TrimerModel.compound("betaine")) == pytest.approx(26.6, abs=0.1)


def test_3map_compound():
    assert critical_temperature(TrimerModel.compound("3map")) == pytest.approx(40.2, abs=0.1)


def test_dimensionless_root():
    x = root_x()
    assert x == pytest.approx(-0.7519, abs=1e-4)
    assert boltzmann_ratio(x) == pytest.approx(RATIO_THRESHOLD, abs=1e-11)
    assert critical_ratio() == pytest.approx(1.3300, abs=1e-3)


def test_tc_proportional_to_coupling():
    ratios = [critical_temperature(TrimerModel(j_over_kb=j)) / abs(j) for j in (-1.0, -5.0, -20.0, -30.2, -100.0)]
    for r in ratios:
        assert r == pytest.approx(ratios[0], rel=1e-9)
    assert ratios[0] == pytest.approx(critical_ratio(), rel=1e-12)


@pytest.mark.parametrize("c", [0.25, 3.0, 11.0])
def test_tc_linear_in_coupling(c):
    base = critical_temperature(TrimerModel(j_over_kb=-20.0))
    assert critical_temperature(TrimerModel(j_over_kb=-20.0 * c)) == pytest.approx(c * base, rel=1e-10)


def test_measure_vanishes_at_tc(betaine):
    tc = critical_temperature(betaine)
    assert closed_form_measure(betaine, tc).measure == pytest.approx(0.0, abs=1e-11)
    assert closed_form_measure(betaine, tc * 0.999).measure > 0
    assert closed_form_measure(betaine, tc * 1.001).measure == 0.0


def test_entangled_region(betaine):
    assert entangled_region(betaine, 26.0)
    assert not entangled_region(betaine, 27.0)


@pytest.mark.parametrize("c", [0.5, 2.0, 9.0])
def test_entangled_region_scale_invariant(betaine, c):
    scaled = TrimerModel(j_over_kb=betaine.j_over_kb * c)
    for t in [5.0, 20.0, 26.0, 27.0, 50.0]:
        assert entangled_region(scaled, c * t) == entangled_region(betaine, t)


def test_ferromagnetic_model_rejected():
    with pytest.raises(ValueError, match="antiferromagnetic J<0 required"):
        TrimerModel(j_over_kb=5.0)
