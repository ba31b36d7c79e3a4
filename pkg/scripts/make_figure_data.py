#!/usr/bin/env python3
"""Regenerate the reference datasets through the CLI.

Produces, under the output directory:
  dist_<tag>.csv        position distributions at t=500 with the limit overlay
                        (four coin pairs, uniform initial state)
  density_<tag>.csv     weak-limit density curves for the same pairs
  origin_<tag>_t*.csv   snapshots used for the convergence-at-origin curves
  game_tilted_<tag>.csv      P_R - P_L time series for the one-winning-pair state
  game_threeway_*.csv   2-period vs repeated-X comparison (three-way state)
  game_pure01_*.csv     2-period vs repeated-Y comparison (pure |01> state)
  sweep_<tag>.csv       margin along the phi initial-state family
  (with --render and matplotlib installed: a PNG next to each CSV)

Everything is driven through `python -m quadwalk`, so this doubles as an
end-to-end exercise of the command-line interface.
"""

import argparse
import math
import subprocess
import sys
from pathlib import Path

PAIRS = {
    "a_sixth_sixth": (1 / 6, 1 / 6),
    "b_quarter_quarter": (1 / 4, 1 / 4),
    "c_sixth_quarter": (1 / 6, 1 / 4),
    "d_quarter_sixth": (1 / 4, 1 / 6),
}
UNIFORM_Q = ["--q0", "0.5,0", "--q1", "0.5,0", "--q2", "0.5,0", "--q3", "0.5,0"]
C512 = math.cos(5 * math.pi / 12)
S512 = math.sin(5 * math.pi / 12)
GAME_Q = ["--q0", f"{C512!r},0", "--q1", f"0,{S512!r}", "--q2", "0,0", "--q3", "0,0"]
R3 = 1 / math.sqrt(3)
THREEWAY_Q = ["--q0", "0,0", "--q1", f"{R3!r},0", "--q2", f"0,{R3!r}", "--q3", f"{R3!r},0"]
PURE01_Q = ["--q0", "0,0", "--q1", "1,0", "--q2", "0,0", "--q3", "0,0"]


def cli(*argv):
    cmd = [sys.executable, "-m", "quadwalk", *map(str, argv)]
    print("+", " ".join(cmd[2:]))
    subprocess.run(cmd, check=True)


def render(out_dir, csv_name, kind, png_name=None, extra=()):
    script = Path(__file__).resolve().parent.parent / "plots" / "render.py"
    if not script.exists():
        return
    png = out_dir / (png_name or csv_name.replace(".csv", ".png"))
    cmd = [sys.executable, str(script), "--input", str(out_dir / csv_name),
           "--kind", kind, "--output", str(png), *extra]
    subprocess.run(cmd, check=True)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--out", default="out/figures", help="output directory")
    parser.add_argument("-t", "--time", type=int, default=500,
                        help="simulation time for the distribution figures")
    parser.add_argument("--render", action="store_true",
                        help="also render PNGs when the plots component is present")
    args = parser.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    for tag, (u1, u2) in PAIRS.items():
        angles = ["--theta1", repr(u1), "--theta2", repr(u2)]
        cli("simulate", *angles, *UNIFORM_Q, "-t", args.time, "--with-limit",
            "-o", out / f"dist_{tag}.csv")
        cli("density", *angles, *UNIFORM_Q, "-o", out / f"density_{tag}.csv")
        for t in (125, 250, args.time):
            cli("simulate", *angles, *UNIFORM_Q, "-t", t, "--with-limit",
                "--limit-window", "5", "-o", out / f"origin_{tag}_t{t}.csv")
        cli("game", *angles, *GAME_Q, "--t-max", args.time,
            "-o", out / f"game_tilted_{tag}.csv")
        cli("state-sweep", *angles, "--phi-grid", "0:2:33",
            "-o", out / f"sweep_{tag}.csv")
        if args.render:
            render(out, f"dist_{tag}.csv", "distribution")
            render(out, f"density_{tag}.csv", "density")
            render(out, f"game_tilted_{tag}.csv", "game")
            render(out, f"sweep_{tag}.csv", "state_sweep")
            conv = []
            for t in (125, 250, args.time):
                conv += ["--input", str(out / f"origin_{tag}_t{t}.csv")]
            script = Path(__file__).resolve().parent.parent / "plots" / "render.py"
            if script.exists():
                subprocess.run([sys.executable, str(script), *conv,
                                "--kind", "convergence",
                                "--times", f"125,250,{args.time}",
                                "--output", str(out / f"origin_{tag}.png")],
                               check=True)

    protocol_runs = [
        ("game_threeway_2period", THREEWAY_Q, "XY"),
        ("game_threeway_repeatX", THREEWAY_Q, "XX"),
        ("game_pure01_2period", PURE01_Q, "XY"),
        ("game_pure01_repeatY", PURE01_Q, "YY"),
    ]
    for name, q, protocol in protocol_runs:
        cli("game", "--theta1", repr(1 / 6), "--theta2", "0.25", *q,
            "--protocol", protocol, "--t-max", args.time, "-o", out / f"{name}.csv")
        if args.render:
            render(out, f"{name}.csv", "game")

    print(f"done; files under {out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
