"""Boundary conversion between physical and reduced susceptibilities."""
from typing import Union

import numpy as np
from scipy import constants

from .errors import ConfigError

K_B = constants.k  # J/K
MU_B = constants.physical_constants["Bohr magneton"][0]  # J/T

# cgs molar susceptibility (cm^3/mol) -> J T^-2 per trimer.
CGS_EMU_PER_MOL = 10.0 / constants.N_A


def reduce_chi(raw, temperature, g_factor: float = 2.0, chi_scale: float = 1.0) -> Union[float, np.ndarray]:
    """chi_hat = raw * chi_scale * k_B T / (g mu_B)^2.

    ``chi_scale`` must bring ``raw`` to J T^-2 per trimer.
    """
    if not (np.isfinite(g_factor) and g_factor > 0):
        raise ConfigError(f"g_factor must be positive, got {g_factor!r}")
    return np.asarray(raw, dtype=float) * chi_scale * K_B * np.asarray(temperature, dtype=float) / (g_factor * MU_B) ** 2


def physical_chi(chi_reduced, temperature, g_factor: float = 2.0) -> Union[float, np.ndarray]:
    """Inverse of :func:`reduce_chi` with unit scale (J T^-2 per trimer)."""
    return np.asarray(chi_reduced, dtype=float) * (g_factor * MU_B) ** 2 / (K_B * np.asarray(temperature, dtype=float))
