"""Susceptibility series in, entanglement series out.

Input files are CSV with a header naming ``T_K`` and ``chi`` (other columns
are ignored); ``#`` lines are comments. Output series are CSV
``temperature_K,measure,entangled`` or a JSON array with the same keys.
"""
import csv
import io
import json
import logging
import math
import re
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence

import numpy as np
import pandas as pd

from .closed_form import measure_from_chi, van_vleck_chi_reduced
from .errors import DataError
from .logs import log_event
from .models import EntanglementPoint, SusceptibilitySeries, TrimerModel
from .storage import LocalFileStorage, Storage
from .units import reduce_chi

_log = logging.getLogger("trimer.pipeline")

SERIES_COLUMNS = ("temperature_K", "measure", "entangled")
INPUT_T, INPUT_CHI = "T_K", "chi"
FORMATS = ("csv", "json")


def _storage(storage: Optional[Storage]) -> Storage:
    return storage if storage is not None else LocalFileStorage()


# --- Ingestion -------------------------------------------------------------------

_SOURCE_COMMENT = re.compile(r"^#\s*source:\s*(\S.*)$")


def _content_lines(text: str):
    numbers, lines, declared = [], [], None
    for n, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if s.startswith("#"):
            m = _SOURCE_COMMENT.match(s)
            if m and declared is None:
                declared = m.group(1).strip()
            continue
        if not s:
            continue
        numbers.append(n)
        lines.append(s)
    return numbers, lines, declared


def load_chi_series(
    path: str,
    chi_scale: float = 1.0,
    g_factor: float = 2.0,
    reduced: bool = False,
    storage: Optional[Storage] = None,
) -> SusceptibilitySeries:
    """Read a (T_K, chi) CSV into a sorted reduced-unit series.

    With ``reduced`` the chi column is taken as chi_hat; otherwise
    ``chi * chi_scale`` must be in J T^-2 per trimer and is converted.
    Duplicate temperatures are averaged. A "# source: ..." comment in the
    file becomes the series source label; otherwise the path is used.
    """
    store = _storage(storage)
    if not store.exists(path):
        raise FileNotFoundError(path)
    try:
        text = store.get_bytes(path).decode("utf-8")
    except UnicodeDecodeError as e:
        raise DataError(f"{path} is not UTF-8 text") from e

    numbers, lines, declared = _content_lines(text)
    if not lines:
        raise DataError(f"{path} has no header row")
    widths = [len(fields) for fields in csv.reader(lines)]
    for k in range(1, len(lines)):
        if widths[k] != widths[0]:
            raise DataError(
                f"row {lines[k]!r} has {widths[k]} fields, header has {widths[0]}", line=numbers[k]
            )
    try:
        raw = pd.read_csv(io.StringIO("\n".join(lines)), dtype=str, skipinitialspace=True, index_col=False)
    except pd.errors.ParserError as e:
        raise DataError(f"{path}: {e}", line=numbers[0]) from e
    raw.columns = [str(c).strip() for c in raw.columns]
    for col in (INPUT_T, INPUT_CHI):
        if col not in raw.columns:
            raise DataError(f"{path} is missing column {col!r}", line=numbers[0])

    temps = pd.to_numeric(raw[INPUT_T], errors="coerce").to_numpy(dtype=float)
    values = pd.to_numeric(raw[INPUT_CHI], errors="coerce").to_numpy(dtype=float)
    row_lines = numbers[1:]

    bad = ~(np.isfinite(temps) & np.isfinite(values))
    if bad.any():
        k = int(np.argmax(bad))
        raise DataError(f"unparseable row {lines[k + 1]!r}", line=row_lines[k])
    if (temps <= 0).any():
        k = int(np.argmax(temps <= 0))
        raise DataError(f"non-positive temperature {temps[k]!r}", line=row_lines[k])

    chi = values if reduced else reduce_chi(values, temps, g_factor=g_factor, chi_scale=chi_scale)
    if (chi < 0).any():
        k = int(np.argmax(chi < 0))
        raise DataError(f"negative reduced susceptibility {chi[k]!r}", line=row_lines[k])

    frame = pd.DataFrame({"T": temps, "chi": chi})
    collapsed = frame.groupby("T", sort=True)["chi"].mean()
    if len(collapsed) != len(frame):
        log_event(_log, "duplicate_temperatures_averaged", path=path, rows=len(frame), kept=len(collapsed))
    points = [(float(t), float(c)) for t, c in collapsed.items()]
    log_event(_log, "chi_series_loaded", path=path, points=len(points), reduced=reduced)
    return SusceptibilitySeries(points=points, source=declared or str(path))


def temperature_grid(t_min: float, t_max: float, t_steps: int, log_grid: bool = False) -> List[float]:
    """Sweep temperatures, endpoints included; geometric spacing with ``log_grid``."""
    space = np.geomspace if log_grid else np.linspace
    return [float(t) for t in space(t_min, t_max, t_steps)]


def synthetic_chi_series(model: TrimerModel, temperatures: Iterable[float]) -> SusceptibilitySeries:
    temps = np.unique(np.asarray(list(temperatures), dtype=float))
    points = [(float(t), van_vleck_chi_reduced(model, float(t))) for t in temps]
    return SusceptibilitySeries(points=points, source="synthetic")


def render_chi_csv(series: SusceptibilitySeries) -> bytes:
    # 17 significant digits: load_chi_series reads the values back exactly
    frame = pd.DataFrame({INPUT_T: series.temperatures(), INPUT_CHI: series.chi()})
    head = f"# source: {series.source}\n# units: reduced\n"
    body = frame.to_csv(index=False, float_format="%.17g", lineterminator="\n")
    return (head + body).encode("utf-8")


def write_chi_csv(series: SusceptibilitySeries, path: str, storage: Optional[Storage] = None) -> None:
    _storage(storage).put_bytes(path, render_chi_csv(series))


# --- Entanglement from data ------------------------------------------------------

def entanglement_series(series: SusceptibilitySeries) -> List[EntanglementPoint]:
    if len(series) == 0:
        raise DataError("empty susceptibility series")
    return [EntanglementPoint.at(t, measure_from_chi(chi)) for t, chi in series.points]


def estimate_tc_from_data(points: Sequence[EntanglementPoint]) -> Optional[float]:
    """Temperature where the measured entanglement first vanishes.

    Returns None when the data never leave the entangled region or are never
    entangled. The estimate always lies between the last entangled and the
    first separable sample.
    """
    if len(points) < 2:
        raise DataError("at least 2 points are needed to estimate T_c")
    t = np.array([p.temperature for p in points])
    m = np.array([p.measure for p in points])
    if np.any(np.diff(t) <= 0):
        raise DataError("points must be ordered by strictly increasing temperature")

    positive = m > 0
    if not positive.any():
        return None
    first_pos = int(np.argmax(positive))
    zeros = np.flatnonzero(~positive[first_pos:])
    if zeros.size == 0:
        return None
    k = first_pos + int(zeros[0])
    t1, m1, t2 = t[k - 1], m[k - 1], t[k]

    estimate = t2
    if k >= 2 and m[k - 2] > m1:
        # continue the descending segment down to zero
        t0, m0 = t[k - 2], m[k - 2]
        estimate = t1 + m1 * (t1 - t0) / (m0 - m1)
    return float(min(max(estimate, t1), t2))


# --- Rendering / export ----------------------------------------------------------

def _sig9(x: float) -> float:
    return float(f"{x:.9g}")


def _cell(value: Any) -> Any:
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    return value


def render_records(
    records: Sequence[Mapping[str, Any]],
    columns: Sequence[str],
    fmt: str = "csv",
    metadata: Optional[Mapping[str, Any]] = None,
) -> bytes:
    """Render flat records as CSV or JSON with 9 significant digits."""
    if fmt == "csv":
        frame = pd.DataFrame([{c: _cell(r[c]) for c in columns} for r in records], columns=list(columns))
        head = "".join(f"# {k}: {v}\n" for k, v in (metadata or {}).items())
        return (head + frame.to_csv(index=False, float_format="%.9g", lineterminator="\n")).encode("utf-8")
    if fmt == "json":
        rows = [
            {c: (_sig9(r[c]) if isinstance(r[c], float) and math.isfinite(r[c]) else r[c]) for c in columns}
            for r in records
        ]
        doc: Any = rows if metadata is None else {"metadata": dict(metadata), "points": rows}
        return (json.dumps(doc, indent=2) + "\n").encode("utf-8")
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def _point_record(p: EntanglementPoint) -> Dict[str, Any]:
    return {"temperature_K": float(p.temperature), "measure": float(p.measure), "entangled": bool(p.entangled)}


def render_series(
    points: Sequence[EntanglementPoint],
    fmt: str = "csv",
    metadata: Optional[Mapping[str, Any]] = None,
) -> bytes:
    return render_records([_point_record(p) for p in points], SERIES_COLUMNS, fmt, metadata)


def export_series(
    points: Sequence[EntanglementPoint],
    path: str,
    fmt: str = "csv",
    metadata: Optional[Mapping[str, Any]] = None,
    storage: Optional[Storage] = None,
) -> None:
    _storage(storage).put_bytes(path, render_series(points, fmt, metadata))


def read_series(path: str, storage: Optional[Storage] = None) -> List[EntanglementPoint]:
    """Load points written by :func:`export_series` (either format)."""
    data = _storage(storage).get_bytes(path)
    stripped = data.lstrip()
    if stripped[:1] in (b"[", b"{"):
        doc = json.loads(data.decode("utf-8"))
        rows = doc["points"] if isinstance(doc, dict) else doc
    else:
        frame = pd.read_csv(io.BytesIO(data), comment="#", dtype={"entangled": str})
        rows = frame.to_dict(orient="records")
    out = []
    for r in rows:
        flag = r["entangled"]
        if isinstance(flag, str):
            flag = flag.strip().lower() == "true"
        out.append(EntanglementPoint(temperature=float(r["temperature_K"]), measure=float(r["measure"]), entangled=bool(flag)))
    return out
