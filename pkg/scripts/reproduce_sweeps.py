#!/usr/bin/env python3
"""
Sweep files for both known compounds.
Writes the entanglement-vs-temperature and susceptibility sweeps, the T_c
summary and the oracle comparison into one output directory.
"""

import argparse
import os
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from libs.trimer.models import COMPOUNDS  # noqa: E402
from services.cli.main import main as cli  # noqa: E402


def reproduce(out_dir: Path, t_max: float, t_steps: int) -> bool:
    grid = ["--t-min", "0.1", "--t-max", str(t_max), "--t-steps", str(t_steps)]
    ok = True
    for name in sorted(COMPOUNDS):
        runs = {
            f"{name}_measure.csv": ["sweep", "--compound", name, *grid],
            f"{name}_chi.csv": ["susceptibility", "--compound", name, *grid, "--oracle"],
            f"{name}_oracle.csv": ["oracle-compare", "--compound", name, *grid],
            f"{name}_tc.json": ["tc", "--compound", name, "--format", "json"],
        }
        for filename, argv in runs.items():
            code = cli([*argv, "--output", str(out_dir / filename)])
            print(f"{'ok ' if code == 0 else 'ERR'} {filename}")
            ok = ok and code == 0
    return ok


if __name__ == '__main__':
    parser = argparse.ArgumentParser(description=__doc__.strip().splitlines()[0])
    parser.add_argument("--out", default=os.getenv("TRIMER_SWEEP_DIR", "sweeps"))
    parser.add_argument("--t-max", type=float, default=60.0)
    parser.add_argument("--t-steps", type=int, default=400)
    args = parser.parse_args()
    success = reproduce(Path(args.out), args.t_max, args.t_steps)
    sys.exit(0 if success else 1)
