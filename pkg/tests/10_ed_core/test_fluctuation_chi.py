import numpy as np
import pytest

from libs.trimer.models import HamiltonianMatrix, SpinChainSpec
from libs.trimer.spin_ed import AXES, chain_thermal_state, fluctuation_chi_reduced, mean_chi_reduced, thermal_state


@pytest.mark.parametrize("t", [0.01, 1.0, 1e4])
def test_free_spin_curie(t):
    state = thermal_state(HamiltonianMatrix(entries=np.zeros((2, 2), dtype=complex), n_sites=1), t)
    for a in AXES:
        assert fluctuation_chi_reduced(state, a) == pytest.approx(0.25, abs=1e-12)


@pytest.mark.parametrize("t", [1e-9, 0.5, 10.0, 26.6, 200.0])
def test_isotropy(trimer_h, t):
    state = thermal_state(trimer_h, t)
    chi = [fluctuation_chi_reduced(state, a) for a in AXES]
    assert max(chi) - min(chi) < 1e-12
    assert mean_chi_reduced(state) == pytest.approx(chi[2], abs=1e-12)


def test_trimer_ground_doublet(trimer_h):
    assert mean_chi_reduced(thermal_state(trimer_h, 1e-9)) == pytest.approx(0.25, abs=1e-12)


@pytest.mark.parametrize(
    "spec",
    [SpinChainSpec(n_sites=3, j_over_kb=-20.0), SpinChainSpec(n_sites=6, j_over_kb=-5.0, boundary="periodic")],
)
def test_curie_limit(spec):
    chi = fluctuation_chi_reduced(chain_thermal_state(spec, 1e9), "z")
    assert chi == pytest.approx(spec.n_sites / 4, abs=1e-6)
