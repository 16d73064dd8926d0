"""Exact diagonalization of small spin-1/2 Heisenberg chains.

Every quantity here is computed from the dense Hamiltonian alone, so it can be
used to cross-check the closed forms in :mod:`libs.trimer.closed_form`.
Energies and temperatures are in Kelvin (E/k_B); susceptibilities are reduced,
chi * k_B * T / (g mu_B)^2.
"""
import logging
import string
from functools import reduce
from typing import Literal, Optional, Sequence, Tuple

import numpy as np
from scipy import linalg

from .errors import ConfigError, NotHermitianError, SymmetryError
from .logs import log_event
from .models import Eigenbasis, HamiltonianMatrix, SpinChainSpec, ThermalState, TwoSiteState
from .settings import DEGENERACY_TOL, MAX_SITES, T_FLOOR_K

Axis = Literal["x", "y", "z"]
AXES: Tuple[Axis, ...] = ("x", "y", "z")

# Normalization of the Hilbert-Schmidt distance measure.
HS_NORMALIZATION = 0.25

_log = logging.getLogger("trimer.ed")

_ID2 = np.eye(2, dtype=complex)
_PAULI_HALF = {
    "x": np.array([[0, 0.5], [0.5, 0]], dtype=complex),
    "y": np.array([[0, -0.5j], [0.5j, 0]], dtype=complex),
    "z": np.array([[0.5, 0], [0, -0.5]], dtype=complex),
}


def _check_site(n_sites: int, site: int) -> None:
    if not 1 <= n_sites <= MAX_SITES:
        raise ConfigError(f"n_sites must be in 1..{MAX_SITES}, got {n_sites}")
    if not 1 <= site <= n_sites:
        raise ConfigError(f"site {site} out of range 1..{n_sites}")


def _embed(n_sites: int, ops: dict) -> np.ndarray:
    # ops maps 1-based site -> 2x2 operator; site 1 is the leftmost factor
    return reduce(np.kron, [ops.get(k, _ID2) for k in range(1, n_sites + 1)])


def spin_operators(n_sites: int, site: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    _check_site(n_sites, site)
    return tuple(_embed(n_sites, {site: _PAULI_HALF[a]}) for a in AXES)  # type: ignore[return-value]


def total_spin(n_sites: int, axis: Axis) -> np.ndarray:
    return sum(_embed(n_sites, {k: _PAULI_HALF[axis]}) for k in range(1, n_sites + 1))


def _pair_product(n_sites: int, i: int, j: int, axis: Axis) -> np.ndarray:
    op = _PAULI_HALF[axis]
    return _embed(n_sites, {i: op, j: op})


def build_hamiltonian(spec: SpinChainSpec) -> HamiltonianMatrix:
    n = spec.n_sites
    h = np.zeros((2**n, 2**n), dtype=complex)
    for i, j in spec.bonds():
        for a in AXES:
            h -= spec.j_over_kb * _pair_product(n, i, j, a)
    return HamiltonianMatrix(entries=h, n_sites=n)


def eigendecompose(h: HamiltonianMatrix) -> Eigenbasis:
    scale = max(1.0, float(np.max(np.abs(h.entries), initial=0.0)))
    if not h.is_hermitian(tol=1e-12 * scale):
        raise NotHermitianError("Hamiltonian is not Hermitian")
    energies, vectors = linalg.eigh(h.entries)
    log_event(_log, "eigendecompose", logging.DEBUG, dim=h.dim, ground=float(energies[0]))
    return Eigenbasis(energies=energies, vectors=vectors)


def _snap_levels(energies: np.ndarray, tol: float) -> np.ndarray:
    # Replace each run of numerically degenerate levels by its mean so that a
    # degenerate subspace always gets exactly one Boltzmann weight.
    groups = np.concatenate(([0], np.cumsum(np.diff(energies) > tol)))
    means = np.bincount(groups, weights=energies) / np.bincount(groups)
    return means[groups]


def thermal_state(
    h: HamiltonianMatrix,
    temperature: float,
    t_floor: float = T_FLOOR_K,
    eigenbasis: Optional[Eigenbasis] = None,
) -> ThermalState:
    """Gibbs state exp(-H/T)/Z built in the eigenbasis of ``h``.

    Below ``t_floor`` the normalized projector onto the whole ground space is
    returned.
    """
    if not temperature > 0:
        raise ConfigError(f"temperature must be positive, got {temperature!r}")
    basis = eigenbasis if eigenbasis is not None else eigendecompose(h)
    levels = _snap_levels(basis.energies, DEGENERACY_TOL)
    shifted = levels - levels[0]
    if temperature < t_floor:
        weights = (shifted == 0.0).astype(float)
    else:
        weights = np.exp(-shifted / temperature)
    p = weights / weights.sum()
    vecs = basis.vectors
    rho = (vecs * p) @ vecs.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    return ThermalState(temperature=temperature, density=rho, n_sites=h.n_sites, eigenbasis=basis)


def chain_thermal_state(spec: SpinChainSpec, temperature: float, t_floor: float = T_FLOOR_K) -> ThermalState:
    return thermal_state(build_hamiltonian(spec), temperature, t_floor=t_floor)


def reduced_density_matrix(density: np.ndarray, n_sites: int, i: int, j: int) -> np.ndarray:
    """Partial trace of ``density`` onto sites (i, j), returned as a 4x4 matrix.

    The first factor of the result is site ``i``.
    """
    _check_site(n_sites, i)
    _check_site(n_sites, j)
    if i == j:
        raise ConfigError("two distinct sites required")
    letters = string.ascii_letters
    rows = list(letters[:n_sites])
    cols = list(letters[n_sites : 2 * n_sites])
    for k in range(n_sites):
        if k not in (i - 1, j - 1):
            cols[k] = rows[k]
    out = rows[i - 1] + rows[j - 1] + cols[i - 1] + cols[j - 1]
    tensor = density.reshape((2,) * (2 * n_sites))
    return np.einsum("".join(rows) + "".join(cols) + "->" + out, tensor).reshape(4, 4)


# Entries allowed to be nonzero in the X-form of a zero-field two-site state.
_XFORM_MASK = np.eye(4, dtype=bool)
_XFORM_MASK[1, 2] = _XFORM_MASK[2, 1] = True


def two_site_rdm(state: ThermalState, i: int, j: int, tol: float = 1e-12) -> TwoSiteState:
    m = reduced_density_matrix(state.density, state.n_sites, i, j)
    off = float(np.max(np.abs(m[~_XFORM_MASK])))
    if off > tol:
        raise SymmetryError(f"reduced density matrix of sites ({i},{j}) leaves X-form: max off-block {off:.3e}")
    d = np.real(np.diag(m))
    if abs(d[0] - d[3]) > tol or abs(d[1] - d[2]) > tol:
        raise SymmetryError(f"reduced density matrix of sites ({i},{j}) is not spin-flip symmetric")
    return TwoSiteState(v=float(d[0] + d[3]) / 2, w=float(d[1] + d[2]) / 2, z=complex(m[1, 2]))


def partial_transpose(m: np.ndarray) -> np.ndarray:
    # transpose on the second qubit
    return m.reshape(2, 2, 2, 2).transpose(0, 3, 2, 1).reshape(4, 4)


def two_site_matrix(s: TwoSiteState) -> np.ndarray:
    return s.matrix()


def ppt_eigenvalues(s: TwoSiteState) -> Tuple[float, float, float, float]:
    az = abs(s.z)
    return (s.w, s.w, s.v + az, s.v - az)


def ppt_spectrum(s: TwoSiteState) -> np.ndarray:
    """Ascending spectrum of the explicitly built partial transpose."""
    return linalg.eigvalsh(partial_transpose(two_site_matrix(s)))


def is_ppt(s: TwoSiteState) -> bool:
    return min(ppt_eigenvalues(s)) >= 0


def hs_measure(s: TwoSiteState) -> float:
    return HS_NORMALIZATION * max(0.0, 2 * (abs(s.z) - s.v))


def _expect(state: ThermalState, op: np.ndarray) -> float:
    return float(np.real(np.einsum("ij,ji->", state.density, op)))


def bond_correlator(state: ThermalState, i: int, j: int, axis: Axis = "z") -> float:
    _check_site(state.n_sites, i)
    _check_site(state.n_sites, j)
    return _expect(state, _pair_product(state.n_sites, i, j, axis))


def spin_dot_correlator(state: ThermalState, i: int, j: int) -> float:
    return sum(bond_correlator(state, i, j, a) for a in AXES)


def fluctuation_chi_reduced(state: ThermalState, axis: Axis = "z") -> float:
    m = total_spin(state.n_sites, axis)
    return _expect(state, m @ m) - _expect(state, m) ** 2


def mean_chi_reduced(state: ThermalState, axes: Sequence[Axis] = AXES) -> float:
    return sum(fluctuation_chi_reduced(state, a) for a in axes) / len(axes)
