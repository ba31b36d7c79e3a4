#!/usr/bin/env python3
"""Winning/losing phase diagrams over (theta1, theta2) for seven initial states.

Writes one CSV per state under the output directory (plus a PNG heatmap per
grid when --render is given and the plots component is present).  The default
65x65 grid spans (0, pi/2) inclusive of the excluded boundary angles, which
show up as gray Invalid rows/columns in the rendered diagrams.
"""

import argparse
import math
import subprocess
import sys
from pathlib import Path

C512 = repr(math.cos(5 * math.pi / 12))
S512 = repr(math.sin(5 * math.pi / 12))

STATES = {
    "a_cos_isin": ["--q0", f"{C512},0", "--q1", f"0,{S512}", "--q2", "0,0", "--q3", "0,0"],
    "b_mid_pair": ["--q0", "0,0", "--q1", f"{C512},0", "--q2", f"0,{S512}", "--q3", "0,0"],
    "c_pure_00": ["--q0", "1,0", "--q1", "0,0", "--q2", "0,0", "--q3", "0,0"],
    "d_pure_01": ["--q0", "0,0", "--q1", "1,0", "--q2", "0,0", "--q3", "0,0"],
    "e_pure_10": ["--q0", "0,0", "--q1", "0,0", "--q2", "1,0", "--q3", "0,0"],
    "f_pure_11": ["--q0", "0,0", "--q1", "0,0", "--q2", "0,0", "--q3", "1,0"],
    "g_uniform": ["--q0", "0.5,0", "--q1", "0.5,0", "--q2", "0.5,0", "--q3", "0.5,0"],
}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default="out/phase", help="output directory")
    parser.add_argument("--points", type=int, default=65, help="grid points per axis")
    parser.add_argument("--n", type=int, default=10000, help="truncation order")
    parser.add_argument("--threads", type=int, default=2, help="worker count")
    parser.add_argument("--render", action="store_true")
    args = parser.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    grid = f"0:0.5:{args.points}"

    for tag, q in STATES.items():
        csv_path = out / f"phase_{tag}.csv"
        cmd = [sys.executable, "-m", "quadwalk", "phase",
               "--theta1-grid", grid, "--theta2-grid", grid,
               "--n", str(args.n), "--threads", str(args.threads),
               *q, "-o", str(csv_path)]
        print("+", " ".join(cmd[2:]))
        subprocess.run(cmd, check=True)
        if args.render:
            script = Path(__file__).resolve().parent.parent / "plots" / "render.py"
            if script.exists():
                subprocess.run([sys.executable, str(script),
                                "--input", str(csv_path), "--kind", "phase",
                                "--output", str(out / f"phase_{tag}.png")],
                               check=True)
    print(f"done; files under {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
