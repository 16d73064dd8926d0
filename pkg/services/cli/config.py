import math
from typing import List, Literal, Optional

from pydantic import BaseModel, ConfigDict, model_validator

from libs.trimer.models import COMPOUNDS, TrimerModel
from libs.trimer.pipeline import temperature_grid

Command = Literal["entanglement", "tc", "susceptibility", "sweep", "oracle-compare", "from-data", "synthesize"]

# Commands that evaluate over a temperature grid unless --temp is given.
GRID_COMMANDS = {"sweep", "susceptibility", "oracle-compare", "synthesize"}
# Commands built on the closed forms (antiferromagnetic J required).
MODEL_COMMANDS = {"entanglement", "tc", "susceptibility", "sweep", "oracle-compare", "synthesize"}


class RunConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    command: Command
    j_over_kb: Optional[float] = None
    compound: Optional[str] = None
    temp: Optional[float] = None
    t_min: float = 0.1
    t_max: float = 60.0
    t_steps: int = 400
    log_grid: bool = False
    g_factor: float = 2.0
    reduced: bool = False
    chi_scale: float = 1.0
    oracle: bool = False
    input: Optional[str] = None
    output: Optional[str] = None
    format: Literal["csv", "json"] = "csv"

    @model_validator(mode="after")
    def _check(self) -> "RunConfig":
        if self.compound is not None and self.compound not in COMPOUNDS:
            raise ValueError(f"unknown compound {self.compound!r}; known: {sorted(COMPOUNDS)}")
        if self.compound is not None and self.j_over_kb is not None:
            raise ValueError("--compound and --j-over-kb are mutually exclusive")
        if not (math.isfinite(self.g_factor) and self.g_factor > 0):
            raise ValueError("--g must be positive")
        if self.command in MODEL_COMMANDS:
            if self.j_over_kb is None and self.compound is None:
                raise ValueError("--j-over-kb (or --compound) is required")
            j = self.j_over_kb if self.j_over_kb is not None else COMPOUNDS[self.compound]
            if not (math.isfinite(j) and j < 0):
                raise ValueError("antiferromagnetic J<0 required")
        if self.temp is not None and not (math.isfinite(self.temp) and self.temp > 0):
            raise ValueError("--temp must be positive")
        if self.command == "entanglement" and self.temp is None:
            raise ValueError("--temp is required")
        if self.command == "sweep" or (self.command in GRID_COMMANDS and self.temp is None):
            if not self.t_min > 0:
                raise ValueError("--t-min must be positive")
            if not self.t_max > self.t_min:
                raise ValueError("--t-max must exceed --t-min")
            if self.t_steps < 2:
                raise ValueError("--t-steps must be at least 2")
        if self.command == "from-data" and not self.input:
            raise ValueError("--input is required")
        if not (math.isfinite(self.chi_scale) and self.chi_scale > 0):
            raise ValueError("--chi-scale must be positive")
        return self

    def model(self) -> TrimerModel:
        j = self.j_over_kb if self.j_over_kb is not None else COMPOUNDS[self.compound]
        return TrimerModel(j_over_kb=j, g_factor=self.g_factor)

    def grid(self) -> List[float]:
        if self.temp is not None and self.command != "sweep":
            return [self.temp]
        return temperature_grid(self.t_min, self.t_max, self.t_steps, self.log_grid)
