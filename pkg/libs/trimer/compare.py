"""Side-by-side values from the susceptibility chain and from exact diagonalization.

The two routes agree on the susceptibility but not on the correlator, the
(v, z) elements or the measure; rows expose both so the gap can be read off
per temperature.
"""
import logging
from typing import List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict
from scipy import optimize

from .closed_form import corr_from_chi, measure_from_chi, susceptibility_chain_state, van_vleck_chi_reduced
from .logs import log_event
from .models import SpinChainSpec, TrimerModel
from .settings import T_FLOOR_K
from .spin_ed import (
    bond_correlator,
    build_hamiltonian,
    eigendecompose,
    hs_measure,
    mean_chi_reduced,
    ppt_eigenvalues,
    spin_dot_correlator,
    thermal_state,
    two_site_rdm,
)

_log = logging.getLogger("trimer.compare")

COMPARE_COLUMNS = (
    "temperature_K",
    "chi_closed",
    "chi_oracle",
    "corr_chain",
    "corr_oracle",
    "corr_oracle_dot",
    "v_chain",
    "v_oracle",
    "z_chain",
    "z_oracle",
    "lambda4_chain",
    "lambda4_oracle",
    "measure_chain",
    "measure_oracle",
)


class OracleComparisonRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    temperature_K: float
    chi_closed: float
    chi_oracle: float
    corr_chain: float
    corr_oracle: float  # single component <S^z_1 S^z_2>
    corr_oracle_dot: float  # <S_1 . S_2>
    v_chain: float
    v_oracle: float
    z_chain: float
    z_oracle: float
    lambda4_chain: float
    lambda4_oracle: float
    measure_chain: float
    measure_oracle: float


def compare_series(
    model: TrimerModel,
    temperatures: Sequence[float],
    pair: Tuple[int, int] = (1, 2),
    t_floor: float = T_FLOOR_K,
) -> List[OracleComparisonRow]:
    h = build_hamiltonian(model.chain())
    basis = eigendecompose(h)
    rows = []
    for t in temperatures:
        state = thermal_state(h, t, t_floor=t_floor, eigenbasis=basis)
        chi_closed = van_vleck_chi_reduced(model, t)
        chain = susceptibility_chain_state(chi_closed)
        oracle = two_site_rdm(state, *pair)
        rows.append(
            OracleComparisonRow(
                temperature_K=t,
                chi_closed=chi_closed,
                chi_oracle=mean_chi_reduced(state),
                corr_chain=corr_from_chi(chi_closed),
                corr_oracle=bond_correlator(state, *pair, axis="z"),
                corr_oracle_dot=spin_dot_correlator(state, *pair),
                v_chain=chain.v,
                v_oracle=oracle.v,
                z_chain=chain.z.real,
                z_oracle=oracle.z.real,
                lambda4_chain=ppt_eigenvalues(chain)[3],
                lambda4_oracle=ppt_eigenvalues(oracle)[3],
                measure_chain=measure_from_chi(chi_closed),
                measure_oracle=hs_measure(oracle),
            )
        )
    return rows


def compare_at(model: TrimerModel, temperature: float, pair: Tuple[int, int] = (1, 2)) -> OracleComparisonRow:
    return compare_series(model, [temperature], pair=pair)[0]


def oracle_ppt_threshold(
    j_over_kb: float,
    n_sites: int = 3,
    boundary: str = "open",
    pair: Tuple[int, int] = (1, 2),
) -> Optional[float]:
    """Temperature at which the exact RDM's smallest partial-transpose eigenvalue turns positive.

    None when the pair is not entangled at the low end of the bracket or
    still entangled at the high end.
    """
    spec = SpinChainSpec(n_sites=n_sites, j_over_kb=j_over_kb, boundary=boundary)
    h = build_hamiltonian(spec)
    basis = eigendecompose(h)
    scale = abs(j_over_kb)
    if scale == 0:
        return None

    def lambda4(t: float) -> float:
        return ppt_eigenvalues(two_site_rdm(thermal_state(h, t, eigenbasis=basis), *pair))[3]

    lo, hi = 1e-2 * scale, 1e2 * scale
    if not (lambda4(lo) < 0 < lambda4(hi)):
        return None
    t_star = optimize.bisect(lambda4, lo, hi, xtol=1e-10 * scale)
    log_event(_log, "oracle_ppt_threshold", logging.DEBUG, j_over_kb=j_over_kb, n_sites=n_sites, t=t_star)
    return t_star
