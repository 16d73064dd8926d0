"""Closed-form entanglement of the antiferromagnetic spin-1/2 trimer.

All maps work in reduced units (chi_hat = chi k_B T / (g mu_B)^2), where the
chain susceptibility -> correlator -> measure is free of g and mu_B.
"""
import logging
from typing import Union

import numpy as np
from scipy import optimize

from .errors import ConfigError, DataError
from .logs import log_event
from .models import EntanglementPoint, TrimerModel, TwoSiteState
from .spin_ed import HS_NORMALIZATION

_log = logging.getLogger("trimer.closed_form")

ArrayLike = Union[float, np.ndarray]

# Measure vanishes where the Boltzmann ratio reaches 20/9, i.e. chi_hat = 5/9.
RATIO_THRESHOLD = 20 / 9
CHI_THRESHOLD = RATIO_THRESHOLD / 4

ROOT_BRACKET = (-10.0, 0.0)
ROOT_XTOL = 1e-12


def boltzmann_ratio(x: ArrayLike) -> ArrayLike:
    """(1 + e^x + 10 e^{3x/2}) / (1 + e^x + 2 e^{3x/2}) for x = J/(k_B T) <= 0."""
    xs = np.asarray(x, dtype=float)
    if np.any(xs > 0) or np.any(np.isnan(xs)):
        raise ConfigError("boltzmann_ratio needs x = J/(k_B T) <= 0 (antiferromagnetic)")
    e1 = np.exp(xs)
    e32 = np.exp(1.5 * xs)
    f = (1 + e1 + 10 * e32) / (1 + e1 + 2 * e32)
    return float(f) if f.ndim == 0 else f


def _check_temperature(temperature: float) -> None:
    if not temperature > 0:
        raise ConfigError(f"temperature must be positive, got {temperature!r}")


def van_vleck_chi_reduced(model: TrimerModel, temperature: float) -> float:
    _check_temperature(temperature)
    return boltzmann_ratio(model.j_over_kb / temperature) / 4


def chi_z_reduced_from_corr(corr: float) -> float:
    return 2 * (2 * corr + 1)


def corr_from_chi(chi_reduced: float) -> float:
    # inverse of the axis-averaged map chi_hat = (2/3)(2 <S_i S_i+1> + 1)
    return (3 * chi_reduced - 2) / 4


def susceptibility_chain_state(chi_reduced: float) -> TwoSiteState:
    return TwoSiteState.from_correlator(corr_from_chi(chi_reduced))


def measure_from_chi(chi_reduced: float) -> float:
    if not chi_reduced >= 0:
        raise DataError(f"reduced susceptibility must be non-negative, got {chi_reduced!r}")
    a = 1.5 * chi_reduced
    return HS_NORMALIZATION * max(0.0, 2 * abs(a - 1) + 0.5 - a)


def closed_form_measure(model: TrimerModel, temperature: float) -> EntanglementPoint:
    measure = measure_from_chi(van_vleck_chi_reduced(model, temperature))
    return EntanglementPoint.at(temperature, measure)


def root_x() -> float:
    """Dimensionless root x* < 0 of boltzmann_ratio(x) = 20/9."""
    lo, hi = ROOT_BRACKET
    return optimize.bisect(lambda x: boltzmann_ratio(x) - RATIO_THRESHOLD, lo, hi, xtol=ROOT_XTOL)


def critical_ratio() -> float:
    """T_c / |J/k_B|, the same for every antiferromagnetic trimer."""
    return 1 / abs(root_x())


def critical_temperature(model: TrimerModel) -> float:
    x_star = root_x()
    tc = abs(model.j_over_kb) / abs(x_star)
    log_event(_log, "critical_temperature", logging.DEBUG, j_over_kb=model.j_over_kb, root_x=x_star, tc=tc)
    return tc


def entangled_region(model: TrimerModel, temperature: float) -> bool:
    return closed_form_measure(model, temperature).entangled
