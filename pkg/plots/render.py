#!/usr/bin/env python3
"""Render the walk CLI's CSV outputs as PNG figures.

Reads only the CSV files (and never recomputes any physics):

  kind          required headers                           figure
  ------------  -----------------------------------------  -------------------------
  distribution  x, probability [, limit_probability]       bars + limit overlay dots
  limit         x, limit_probability                       points
  density       x, f_of_x, delta, d0, d1, d2               curve + atom annotation
  game          t, pr_minus_pl                             time series
  phase         theta1_over_pi, theta2_over_pi,            diverging heatmap, red =
                margin, label                              winning, blue = losing,
                                                           white = draw, gray =
                                                           invalid cells
  state_sweep   phi_over_pi, margin, label                 margin vs phi
  convergence   several distribution CSVs with the limit   P(0) vs t with the limit
                column; pass --times t1,t2,...             value as a horizontal line

Exits 0 on success, 2 with a message on malformed or empty input.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np


class InputError(Exception):
    pass


REQUIRED = {
    "distribution": ["x", "probability"],
    "limit": ["x", "limit_probability"],
    "density": ["x", "f_of_x", "delta", "d0", "d1", "d2"],
    "game": ["t", "pr_minus_pl"],
    "phase": ["theta1_over_pi", "theta2_over_pi", "margin", "label"],
    "state_sweep": ["phi_over_pi", "margin", "label"],
    "convergence": ["x", "probability", "limit_probability"],
}


@dataclass
class PlotSpec:
    inputs: list[str]
    kind: str
    output: str
    title: str | None = None
    xlabel: str | None = None
    ylabel: str | None = None
    times: list[int] = field(default_factory=list)


def read_rows(path: str, kind: str) -> list[dict]:
    p = Path(path)
    if not p.exists():
        raise InputError(f"input file not found: {path}")
    with open(p, newline="") as fh:
        reader = csv.DictReader(fh)
        header = reader.fieldnames
        if header is None:
            raise InputError(f"{path}: empty file, no header row")
        missing = [col for col in REQUIRED[kind] if col not in header]
        if missing:
            raise InputError(f"{path}: missing required columns {missing} for kind {kind!r}")
        rows = list(reader)
    if not rows:
        raise InputError(f"{path}: no data rows")
    return rows


def fnum(row: dict, col: str, path: str) -> float:
    try:
        return float(row[col])
    except (TypeError, ValueError) as exc:
        raise InputError(f"{path}: bad numeric value {row.get(col)!r} in column {col}") from exc


def _plot_distribution(ax, rows, path):
    xs = [fnum(r, "x", path) for r in rows]
    ps = [fnum(r, "probability", path) for r in rows]
    ax.bar(xs, ps, width=1.0, color="tab:blue", label="simulation")
    if "limit_probability" in rows[0]:
        pts = [(fnum(r, "x", path), fnum(r, "limit_probability", path))
               for r in rows if r["limit_probability"] not in ("", None)]
        if pts:
            lx, lp = zip(*pts)
            ax.plot(lx, lp, "r.", markersize=4, label="limit")
            ax.legend()
    ax.set_xlabel("x")
    ax.set_ylabel("probability")


def _plot_limit(ax, rows, path):
    xs = [fnum(r, "x", path) for r in rows]
    ps = [fnum(r, "limit_probability", path) for r in rows]
    ax.plot(xs, ps, "r.", markersize=4)
    ax.set_xlabel("x")
    ax.set_ylabel("limit probability")


def _plot_density(ax, rows, path):
    xs = [fnum(r, "x", path) for r in rows]
    fs = [fnum(r, "f_of_x", path) for r in rows]
    ax.plot(xs, fs, "r-")
    ax.set_xlabel("x")
    ax.set_ylabel("f(x)")
    ax.set_title(f"continuous part (atom at origin: {fnum(rows[0], 'delta', path):.4f})")


def _plot_game(ax, rows, path):
    ts = [fnum(r, "t", path) for r in rows]
    ms = [fnum(r, "pr_minus_pl", path) for r in rows]
    ax.plot(ts, ms, "b-")
    ax.axhline(0.0, color="0.4", linewidth=0.8)
    ax.set_xlabel("t")
    ax.set_ylabel("P_R(t) - P_L(t)")


def phase_matrix(rows, path):
    """(masked margin matrix, theta1 axis, theta2 axis) from phase CSV rows."""
    ax1, ax2 = [], []
    for r in rows:
        t1, t2 = fnum(r, "theta1_over_pi", path), fnum(r, "theta2_over_pi", path)
        if t1 not in ax1:
            ax1.append(t1)
        if t2 not in ax2:
            ax2.append(t2)
    margins = np.full((len(ax1), len(ax2)), np.nan)
    invalid = np.zeros((len(ax1), len(ax2)), dtype=bool)
    for r in rows:
        i = ax1.index(fnum(r, "theta1_over_pi", path))
        j = ax2.index(fnum(r, "theta2_over_pi", path))
        if r["label"] == "Invalid":
            invalid[i, j] = True
        else:
            margins[i, j] = fnum(r, "margin", path)
    return np.ma.masked_array(margins, mask=invalid | np.isnan(margins)), ax1, ax2


def _plot_phase(ax, rows, path):
    matrix, ax1, ax2 = phase_matrix(rows, path)
    scale = float(np.max(np.abs(matrix))) if matrix.count() else 1.0
    scale = max(scale, 1e-12)
    cmap = plt.get_cmap("bwr").copy()
    cmap.set_bad("0.6")  # invalid cells in gray
    im = ax.imshow(matrix.T, origin="lower", aspect="auto", cmap=cmap,
                   vmin=-scale, vmax=scale,
                   extent=(min(ax1), max(ax1), min(ax2), max(ax2)))
    plt.colorbar(im, ax=ax, label="margin (red: winning, blue: losing)")
    ax.set_xlabel("theta1 / pi")
    ax.set_ylabel("theta2 / pi")


def _plot_state_sweep(ax, rows, path):
    phis = [fnum(r, "phi_over_pi", path) for r in rows]
    ms = [fnum(r, "margin", path) for r in rows]
    colors = ["red" if m > 0 else "blue" if m < 0 else "0.6" for m in ms]
    ax.scatter(phis, ms, c=colors, s=16)
    ax.axhline(0.0, color="0.4", linewidth=0.8)
    ax.set_xlabel("phi / pi")
    ax.set_ylabel("margin")


def _plot_convergence(ax, spec: PlotSpec):
    if len(spec.times) != len(spec.inputs):
        raise InputError("convergence needs --times with one entry per input CSV")
    ts, p0s, limit0 = [], [], None
    for t, path in sorted(zip(spec.times, spec.inputs)):
        rows = read_rows(path, "convergence")
        origin = [r for r in rows if fnum(r, "x", path) == 0.0]
        if not origin:
            raise InputError(f"{path}: no x = 0 row")
        ts.append(t)
        p0s.append(fnum(origin[0], "probability", path))
        if origin[0]["limit_probability"] not in ("", None):
            limit0 = fnum(origin[0], "limit_probability", path)
    ax.plot(ts, p0s, "b.-", label="P(X_t = 0)")
    if limit0 is not None:
        ax.axhline(limit0, color="red", label="limit")
    ax.legend()
    ax.set_xlabel("t")
    ax.set_ylabel("probability at the origin")


def render(spec: PlotSpec) -> None:
    if spec.kind not in REQUIRED:
        raise InputError(f"unknown kind {spec.kind!r}; choose from {sorted(REQUIRED)}")
    fig, ax = plt.subplots(figsize=(7, 4.5), dpi=120)
    try:
        if spec.kind == "convergence":
            _plot_convergence(ax, spec)
        else:
            if len(spec.inputs) != 1:
                raise InputError(f"kind {spec.kind!r} takes exactly one input CSV")
            rows = read_rows(spec.inputs[0], spec.kind)
            {
                "distribution": _plot_distribution,
                "limit": _plot_limit,
                "density": _plot_density,
                "game": _plot_game,
                "phase": _plot_phase,
                "state_sweep": _plot_state_sweep,
            }[spec.kind](ax, rows, spec.inputs[0])
        if spec.title:
            ax.set_title(spec.title)
        if spec.xlabel:
            ax.set_xlabel(spec.xlabel)
        if spec.ylabel:
            ax.set_ylabel(spec.ylabel)
        fig.tight_layout()
        fig.savefig(spec.output)
    finally:
        plt.close(fig)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--input", action="append", required=True,
                        help="input CSV (repeat for kind=convergence)")
    parser.add_argument("--kind", required=True, choices=sorted(REQUIRED))
    parser.add_argument("--output", required=True, help="output PNG path")
    parser.add_argument("--title")
    parser.add_argument("--xlabel")
    parser.add_argument("--ylabel")
    parser.add_argument("--times", default="",
                        help="comma-separated t per input (kind=convergence)")
    args = parser.parse_args(argv)
    times = [int(v) for v in args.times.split(",") if v]
    spec = PlotSpec(inputs=args.input, kind=args.kind, output=args.output,
                    title=args.title, xlabel=args.xlabel, ylabel=args.ylabel,
                    times=times)
    try:
        render(spec)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
