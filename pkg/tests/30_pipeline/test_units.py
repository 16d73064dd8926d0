import numpy as np
import pytest

from libs.trimer.errors import ConfigError
from libs.trimer.units import CGS_EMU_PER_MOL, physical_chi, reduce_chi


def test_reduce_inverts_physical():
    temps = np.array([1.0, 10.0, 300.0])
    chi_hat = np.array([0.25, 0.5, 0.75])
    raw = physical_chi(chi_hat, temps, g_factor=2.1)
    assert np.allclose(reduce_chi(raw, temps, g_factor=2.1), chi_hat, rtol=1e-12)


def test_chi_scale_is_a_plain_multiplier():
    assert reduce_chi(2.0, 5.0, chi_scale=3.0) == pytest.approx(reduce_chi(6.0, 5.0))


def test_free_spin_curie_constant_in_cgs():
    # g = 2, S = 1/2: C = 0.375 emu K/mol gives chi_hat = S(S+1)/3 per spin
    assert reduce_chi(0.375 / 50.0, 50.0, chi_scale=CGS_EMU_PER_MOL) == pytest.approx(0.25, rel=1e-3)


def test_g_factor_must_be_positive():
    with pytest.raises(ConfigError):
        reduce_chi(1.0, 10.0, g_factor=0.0)
