import math
from dataclasses import dataclass
from typing import List, Literal, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .settings import MAX_SITES

# Supremum of the closed-form measure (the T -> 0 limit).
MEASURE_MAX = 11 / 32

# Exchange constants of the two compounds the method was applied to.
COMPOUNDS = {
    "betaine": -20.0,  # 2b.3CuCl2.2H2O
    "3map": -30.2,  # (3MAP)2Cu2Cl8
}


class SpinChainSpec(BaseModel):
    model_config = ConfigDict(frozen=True)

    n_sites: int = Field(ge=2, le=MAX_SITES)
    j_over_kb: float  # Kelvin; negative = antiferromagnetic
    boundary: Literal["open", "periodic"] = "open"

    @field_validator("j_over_kb")
    @classmethod
    def _finite(cls, v: float) -> float:
        if not math.isfinite(v):
            raise ValueError("j_over_kb must be finite")
        return v

    @model_validator(mode="after")
    def _periodic_needs_ring(self) -> "SpinChainSpec":
        if self.boundary == "periodic" and self.n_sites < 3:
            raise ValueError("periodic boundary needs at least 3 sites")
        return self

    def bonds(self) -> List[Tuple[int, int]]:
        pairs = [(i, i + 1) for i in range(1, self.n_sites)]
        if self.boundary == "periodic":
            pairs.append((self.n_sites, 1))
        return pairs


class TrimerModel(BaseModel):
    model_config = ConfigDict(frozen=True)

    j_over_kb: float
    g_factor: float = 2.0

    @field_validator("j_over_kb")
    @classmethod
    def _antiferromagnetic(cls, v: float) -> float:
        if not (math.isfinite(v) and v < 0):
            raise ValueError("antiferromagnetic J<0 required")
        return v

    @field_validator("g_factor")
    @classmethod
    def _positive_g(cls, v: float) -> float:
        if not (math.isfinite(v) and v > 0):
            raise ValueError("g_factor must be positive")
        return v

    @classmethod
    def compound(cls, name: str, g_factor: float = 2.0) -> "TrimerModel":
        if name not in COMPOUNDS:
            raise KeyError(f"unknown compound {name!r}; known: {sorted(COMPOUNDS)}")
        return cls(j_over_kb=COMPOUNDS[name], g_factor=g_factor)

    def chain(self) -> SpinChainSpec:
        return SpinChainSpec(n_sites=3, j_over_kb=self.j_over_kb, boundary="open")


class EntanglementPoint(BaseModel):
    model_config = ConfigDict(frozen=True)

    temperature: float = Field(gt=0)
    measure: float
    entangled: bool

    @model_validator(mode="after")
    def _consistent(self) -> "EntanglementPoint":
        if not (0.0 <= self.measure <= MEASURE_MAX + 1e-12):
            raise ValueError(f"measure {self.measure!r} outside [0, 11/32]")
        if self.entangled != (self.measure > 0):
            raise ValueError("entangled flag must equal measure > 0")
        return self

    @classmethod
    def at(cls, temperature: float, measure: float) -> "EntanglementPoint":
        return cls(temperature=temperature, measure=measure, entangled=measure > 0)


class SusceptibilitySeries(BaseModel):
    model_config = ConfigDict(frozen=True)

    points: List[Tuple[float, float]]  # (temperature K, reduced chi)
    source: str = "synthetic"

    @field_validator("points")
    @classmethod
    def _ordered_physical(cls, pts: List[Tuple[float, float]]) -> List[Tuple[float, float]]:
        prev = 0.0
        for t, chi in pts:
            if not t > prev:
                raise ValueError("temperatures must be positive and strictly increasing")
            if not chi >= 0:
                raise ValueError(f"negative reduced susceptibility {chi!r} at T={t!r}")
            prev = t
        return pts

    def temperatures(self) -> np.ndarray:
        return np.array([t for t, _ in self.points], dtype=float)

    def chi(self) -> np.ndarray:
        return np.array([c for _, c in self.points], dtype=float)

    def __len__(self) -> int:
        return len(self.points)


# --- Array-valued types ---------------------------------------------------------
# Plain dataclasses: they wrap numpy arrays, which pydantic does not validate.

@dataclass(frozen=True)
class HamiltonianMatrix:
    entries: np.ndarray  # Kelvin
    n_sites: int

    @property
    def dim(self) -> int:
        return self.entries.shape[0]

    def is_hermitian(self, tol: float = 1e-12) -> bool:
        m = self.entries
        return m.ndim == 2 and m.shape[0] == m.shape[1] and bool(np.max(np.abs(m - m.conj().T), initial=0.0) <= tol)


@dataclass(frozen=True)
class Eigenbasis:
    energies: np.ndarray  # ascending, Kelvin
    vectors: np.ndarray  # columns are eigenvectors


@dataclass(frozen=True)
class ThermalState:
    temperature: float
    density: np.ndarray
    n_sites: int
    eigenbasis: Optional[Eigenbasis] = None


@dataclass(frozen=True)
class TwoSiteState:
    """X-form two-qubit state parametrized by (v, w, z).

    Basis order is |uu>, |ud>, |du>, |dd>; v sits on the corners, w on the
    central diagonal and z on the (ud, du) coherence. Positivity is not
    enforced here because the susceptibility chain can produce v < 0.
    """

    v: float
    w: float
    z: complex

    def __post_init__(self) -> None:
        if abs(2 * self.v + 2 * self.w - 1) > 1e-10:
            raise ValueError(f"2v + 2w must equal 1, got {2 * self.v + 2 * self.w!r}")

    @classmethod
    def from_correlator(cls, corr: float) -> "TwoSiteState":
        # isotropic zero-field element relations
        return cls(v=0.25 + corr, w=0.25 - corr, z=complex(2 * corr))

    def is_physical(self, tol: float = 1e-12) -> bool:
        return self.v >= -tol and self.w >= -tol and self.w >= abs(self.z) - tol

    def matrix(self) -> np.ndarray:
        v, w, z = self.v, self.w, self.z
        return np.array(
            [
                [v, 0, 0, 0],
                [0, w, z, 0],
                [0, np.conj(z), w, 0],
                [0, 0, 0, v],
            ],
            dtype=complex,
        )
