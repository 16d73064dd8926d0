import json
import logging
from typing import Callable, Dict

from libs.trimer.closed_form import (
    closed_form_measure,
    critical_ratio,
    critical_temperature,
    root_x,
    van_vleck_chi_reduced,
)
from libs.trimer.compare import COMPARE_COLUMNS, compare_series, oracle_ppt_threshold
from libs.trimer.logs import log_event
from libs.trimer.pipeline import (
    entanglement_series,
    estimate_tc_from_data,
    load_chi_series,
    render_chi_csv,
    render_records,
    render_series,
    synthetic_chi_series,
)
from libs.trimer.spin_ed import build_hamiltonian, eigendecompose, mean_chi_reduced, thermal_state

from .config import RunConfig

_log = logging.getLogger("trimer.cli")


def _num(x) -> str:
    return "none" if x is None else f"{x:.9g}"


def cmd_entanglement(cfg: RunConfig) -> bytes:
    point = closed_form_measure(cfg.model(), cfg.temp)
    log_event(_log, "entanglement", temperature=point.temperature, measure=point.measure)
    return render_series([point], cfg.format)


def cmd_tc(cfg: RunConfig) -> bytes:
    model = cfg.model()
    tc = critical_temperature(model)
    ratio = critical_ratio()
    x_star = root_x()
    if cfg.format == "json":
        doc = {
            "j_over_kb": model.j_over_kb,
            "critical_temperature_K": round(tc, 2),
            "critical_temperature_exact_K": float(f"{tc:.12g}"),
            "tc_over_abs_j": float(f"{ratio:.12g}"),
            "root_x": float(f"{x_star:.12g}"),
        }
        return (json.dumps(doc, indent=2) + "\n").encode("utf-8")
    return f"T_c = {tc:.2f} K (T_c/|J/k_B| = {ratio:.4f}, x* = {x_star:.6f})\n".encode("utf-8")


def cmd_sweep(cfg: RunConfig) -> bytes:
    model = cfg.model()
    points = [closed_form_measure(model, t) for t in cfg.grid()]
    return render_series(points, cfg.format)


def cmd_susceptibility(cfg: RunConfig) -> bytes:
    model = cfg.model()
    temps = cfg.grid()
    records = [{"temperature_K": t, "chi_reduced": van_vleck_chi_reduced(model, t)} for t in temps]
    columns = ["temperature_K", "chi_reduced"]
    if cfg.oracle:
        h = build_hamiltonian(model.chain())
        basis = eigendecompose(h)
        for r in records:
            r["chi_oracle"] = mean_chi_reduced(thermal_state(h, r["temperature_K"], eigenbasis=basis))
        columns.append("chi_oracle")
        worst = max(abs(r["chi_reduced"] - r["chi_oracle"]) for r in records)
        log_event(_log, "susceptibility_oracle", points=len(records), max_abs_deviation=worst)
    return render_records(records, columns, cfg.format)


def cmd_oracle_compare(cfg: RunConfig) -> bytes:
    model = cfg.model()
    rows = compare_series(model, cfg.grid())
    threshold = oracle_ppt_threshold(model.j_over_kb)
    metadata = {
        "j_over_kb": _num(model.j_over_kb),
        "chain_tc_K": _num(critical_temperature(model)),
        "oracle_ppt_threshold_K": _num(threshold),
        "max_chi_deviation": _num(max(abs(r.chi_closed - r.chi_oracle) for r in rows)),
    }
    log_event(_log, "oracle_compare", rows=len(rows), **metadata)
    return render_records([r.model_dump() for r in rows], COMPARE_COLUMNS, cfg.format, metadata)


def cmd_from_data(cfg: RunConfig) -> bytes:
    series = load_chi_series(cfg.input, chi_scale=cfg.chi_scale, g_factor=cfg.g_factor, reduced=cfg.reduced)
    points = entanglement_series(series)
    tc = estimate_tc_from_data(points) if len(points) >= 2 else None
    metadata = {"source": series.source, "input": cfg.input, "estimated_tc_K": _num(tc)}
    log_event(_log, "from_data", points=len(points), **metadata)
    return render_series(points, cfg.format, metadata)


def cmd_synthesize(cfg: RunConfig) -> bytes:
    return render_chi_csv(synthetic_chi_series(cfg.model(), cfg.grid()))


COMMANDS: Dict[str, Callable[[RunConfig], bytes]] = {
    "entanglement": cmd_entanglement,
    "tc": cmd_tc,
    "susceptibility": cmd_susceptibility,
    "sweep": cmd_sweep,
    "oracle-compare": cmd_oracle_compare,
    "from-data": cmd_from_data,
    "synthesize": cmd_synthesize,
}
