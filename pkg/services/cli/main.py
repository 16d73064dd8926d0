import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from libs.trimer.errors import ConfigError, DataError
from libs.trimer.logs import configure_logging, log_event
from libs.trimer.models import COMPOUNDS
from libs.trimer.storage import LocalFileStorage

from .commands import COMMANDS
from .config import RunConfig

EXIT_OK, EXIT_CONFIG, EXIT_DATA, EXIT_IO = 0, 2, 3, 4

_log = logging.getLogger("trimer.cli")

_HELP = {
    "entanglement": "closed-form entanglement measure at one temperature",
    "tc": "critical (decoherence) temperature",
    "susceptibility": "Van Vleck reduced susceptibility, optionally against the ED oracle",
    "sweep": "entanglement measure over a temperature grid",
    "oracle-compare": "susceptibility chain vs exact diagonalization, per temperature",
    "from-data": "entanglement series and T_c estimate from a chi(T) CSV file",
    "synthesize": "write a synthetic Van Vleck chi(T) CSV file",
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--j-over-kb", dest="j_over_kb", type=float, help="exchange constant J/k_B in K (J<0)")
    common.add_argument("--compound", choices=sorted(COMPOUNDS), help="use the J/k_B of a known compound")
    common.add_argument("--temp", type=float, help="temperature in K")
    common.add_argument("--t-min", dest="t_min", type=float, default=0.1)
    common.add_argument("--t-max", dest="t_max", type=float, default=60.0)
    common.add_argument("--t-steps", dest="t_steps", type=int, default=400)
    common.add_argument("--log-grid", dest="log_grid", action="store_true", help="geometric temperature grid")
    common.add_argument("--g", dest="g_factor", type=float, default=2.0, help="Lande g-factor")
    common.add_argument("--reduced", action="store_true", help="input chi is already reduced")
    common.add_argument("--chi-scale", dest="chi_scale", type=float, default=1.0,
                        help="multiplier bringing input chi to J/T^2 per trimer")
    common.add_argument("--oracle", action="store_true", help="add the exact-diagonalization column")
    common.add_argument("--input", help="input chi(T) CSV")
    common.add_argument("--output", help="output path (default stdout)")
    common.add_argument("--format", choices=["csv", "json"], default="csv")

    parser = argparse.ArgumentParser(prog="trimer-ent", description="Thermal entanglement of spin-1/2 Heisenberg trimers")
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=_HELP[name])
    return parser


def _validation_message(e: ValidationError) -> str:
    return "; ".join(err["msg"].removeprefix("Value error, ") for err in e.errors())


def main(argv: Optional[List[str]] = None) -> int:
    configure_logging()
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(**vars(args))
        data = COMMANDS[cfg.command](cfg)
        if cfg.output:
            LocalFileStorage().put_bytes(cfg.output, data)
        else:
            sys.stdout.buffer.write(data)
            sys.stdout.flush()
    except ValidationError as e:
        print(f"error: {_validation_message(e)}", file=sys.stderr)
        return EXIT_CONFIG
    except DataError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DATA
    except (ConfigError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO
    log_event(_log, "done", logging.DEBUG, command=cfg.command, bytes=len(data))
    return EXIT_OK
