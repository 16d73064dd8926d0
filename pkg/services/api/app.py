import json
import logging
import os
import time
from typing import Optional

from fastapi import FastAPI, HTTPException, Query, Request, Response
from prometheus_client import CONTENT_TYPE_LATEST, generate_latest
from pydantic import ValidationError
from starlette.middleware.cors import CORSMiddleware
from starlette.responses import JSONResponse

from libs.trimer.closed_form import (
    closed_form_measure,
    critical_ratio,
    critical_temperature,
    root_x,
    van_vleck_chi_reduced,
)
from libs.trimer.compare import compare_at
from libs.trimer.errors import ConfigError, DataError
from libs.trimer.logs import configure_logging
from libs.trimer.models import TrimerModel
from libs.trimer.pipeline import (
    entanglement_series,
    estimate_tc_from_data,
    load_chi_series,
    render_series,
    temperature_grid,
)
from libs.trimer.settings import CORS_ORIGINS
from libs.trimer.spin_ed import chain_thermal_state, mean_chi_reduced
from libs.trimer.storage import InMemoryStorage

from .metrics import EVALUATIONS, HTTP_REQUESTS

# Upload limit for /v1/from-data (64 KiB). Override via TRIMER_MAX_BODY_BYTES.
MAX_BODY = int(os.getenv("TRIMER_MAX_BODY_BYTES", "65536"))
MAX_SWEEP_STEPS = int(os.getenv("TRIMER_MAX_SWEEP_STEPS", "10000"))

configure_logging()
_logger = logging.getLogger("trimer.api")

app = FastAPI(title="Trimer Entanglement Service")

# Optional CORS (off by default). Set TRIMER_CORS_ORIGINS="https://a.example,https://b.example" to enable.
if CORS_ORIGINS:
    origins = [o.strip() for o in CORS_ORIGINS.split(",") if o.strip()]
    if origins:
        app.add_middleware(
            CORSMiddleware,
            allow_origins=origins,
            allow_credentials=False,
            allow_methods=["GET", "POST", "OPTIONS"],
            allow_headers=["*"],
        )


@app.middleware("http")
async def metrics_middleware(request: Request, call_next):
    status_code = 500
    try:
        resp = await call_next(request)
        status_code = resp.status_code
        return resp
    finally:
        path = request.url.path
        if path != "/metrics":
            HTTP_REQUESTS.labels(method=request.method, path=path, status=str(status_code)).inc()


@app.middleware("http")
async def logging_middleware(request: Request, call_next):
    t0 = time.time()
    status_code = 500
    try:
        resp = await call_next(request)
        status_code = resp.status_code
        return resp
    finally:
        log_obj = {
            "ts": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
            "method": request.method,
            "path": request.url.path,
            "query": str(request.url.query),
            "status": status_code,
            "duration_ms": int((time.time() - t0) * 1000),
        }
        _logger.info(json.dumps(log_obj, separators=(",", ":")))


# --- Error mapping -------------------------------------------------------------
@app.exception_handler(ValidationError)
async def _validation_error(request: Request, exc: ValidationError):
    msgs = [e["msg"].removeprefix("Value error, ") for e in exc.errors()]
    return JSONResponse(status_code=422, content={"error": "; ".join(msgs)})


@app.exception_handler(ConfigError)
async def _config_error(request: Request, exc: ConfigError):
    return JSONResponse(status_code=422, content={"error": str(exc)})


@app.exception_handler(DataError)
async def _data_error(request: Request, exc: DataError):
    return JSONResponse(status_code=400, content={"error": str(exc), "line": exc.line})


def _model(j_over_kb: float, g_factor: float = 2.0) -> TrimerModel:
    return TrimerModel(j_over_kb=j_over_kb, g_factor=g_factor)


# --- Health --------------------------------------------------------------------
@app.get("/health")
def health():
    return {"ok": True, "status": "ok"}


# --- Closed forms --------------------------------------------------------------
@app.get("/v1/entanglement")
def entanglement(j_over_kb: float, temperature: float):
    point = closed_form_measure(_model(j_over_kb), temperature)
    EVALUATIONS.labels(kind="closed_form").inc()
    return point.model_dump()


@app.get("/v1/critical-temperature")
def tc(j_over_kb: float):
    model = _model(j_over_kb)
    value = critical_temperature(model)
    EVALUATIONS.labels(kind="critical_temperature").inc()
    return {
        "j_over_kb": model.j_over_kb,
        "critical_temperature_K": round(value, 2),
        "critical_temperature_exact_K": value,
        "tc_over_abs_j": critical_ratio(),
        "root_x": root_x(),
    }


@app.get("/v1/susceptibility")
def susceptibility(j_over_kb: float, temperature: float, oracle: bool = False):
    model = _model(j_over_kb)
    out = {"temperature_K": temperature, "chi_reduced": van_vleck_chi_reduced(model, temperature)}
    EVALUATIONS.labels(kind="closed_form").inc()
    if oracle:
        out["chi_oracle"] = mean_chi_reduced(chain_thermal_state(model.chain(), temperature))
        EVALUATIONS.labels(kind="oracle").inc()
    return out


@app.get("/v1/sweep")
def sweep(
    j_over_kb: float,
    t_min: float = 0.1,
    t_max: float = 60.0,
    t_steps: int = Query(400, ge=2),
    log_grid: bool = False,
    format: str = Query("json", pattern="^(csv|json)$"),
):
    if not 0 < t_min < t_max:
        raise HTTPException(status_code=422, detail="need 0 < t_min < t_max")
    if t_steps > MAX_SWEEP_STEPS:
        raise HTTPException(status_code=413, detail=f"t_steps above {MAX_SWEEP_STEPS}")
    model = _model(j_over_kb)
    points = [closed_form_measure(model, t) for t in temperature_grid(t_min, t_max, t_steps, log_grid)]
    EVALUATIONS.labels(kind="closed_form").inc(t_steps)
    media = "text/csv" if format == "csv" else "application/json"
    return Response(content=render_series(points, format), media_type=media)


@app.get("/v1/oracle-compare")
def oracle_compare(j_over_kb: float, temperature: float):
    row = compare_at(_model(j_over_kb), temperature)
    EVALUATIONS.labels(kind="oracle").inc()
    return row.model_dump()


# --- Data upload ---------------------------------------------------------------
@app.post("/v1/from-data")
async def from_data(
    request: Request,
    reduced: bool = False,
    chi_scale: float = Query(1.0, gt=0),
    g_factor: float = Query(2.0, gt=0),
    label: Optional[str] = None,
):
    raw = await request.body()
    if len(raw) > MAX_BODY:
        raise HTTPException(status_code=413, detail="payload too large")
    store = InMemoryStorage()
    key = label or "upload.csv"
    store.put_bytes(key, raw)
    series = load_chi_series(key, chi_scale=chi_scale, g_factor=g_factor, reduced=reduced, storage=store)
    points = entanglement_series(series)
    tc_est = estimate_tc_from_data(points) if len(points) >= 2 else None
    EVALUATIONS.labels(kind="from_data").inc()
    return {
        "source": series.source,
        "estimated_tc_K": tc_est,
        "points": [p.model_dump() for p in points],
    }


# --- Prometheus scrape endpoint ------------------------------------------------
@app.get("/metrics")
def metrics():
    return Response(generate_latest(), media_type=CONTENT_TYPE_LATEST)
