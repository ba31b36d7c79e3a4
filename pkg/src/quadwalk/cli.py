"""Command-line front end: simulations, limit evaluations, games, sweeps.

Every command writes an RFC-4180-style CSV (comma, LF, header row) plus a
JSON manifest echoing the full configuration, and is fully deterministic:
re-running a command with a manifest's config reproduces the CSV byte for
byte.  Angles and phi are given in multiples of pi; complex amplitudes as
"re,im" pairs.  Exit codes: 0 success, 2 bad configuration, 3 excluded
angles for an analytic command.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

import numpy as np

from . import __version__
from .core import CoinAngles, InvalidAnglesError, NormError, Protocol, make_initial
from .evolution import distribution, evolve
from .game import DEFAULT_EPS, DEFAULT_N, game_time_series, phase_sweep, state_sweep
from .limit_density import DensityContext, density, moment
from .limit_measure import LimitMeasureContext, limit_prob_range


class ConfigError(ValueError):
    """Rejected command configuration."""


def _fmt(value: float) -> str:
    return f"{value:.17g}"


def _parse_pair(text: str) -> list[float]:
    parts = text.split(",")
    if len(parts) != 2:
        raise ConfigError(f"expected 're,im', got {text!r}")
    try:
        return [float(parts[0]), float(parts[1])]
    except ValueError as exc:
        raise ConfigError(f"bad complex pair {text!r}") from exc


def _parse_grid(text: str) -> list[float]:
    """Either 'start:stop:num' (inclusive linspace) or a comma list of values."""
    if ":" in text:
        parts = text.split(":")
        if len(parts) != 3:
            raise ConfigError(f"grid spec must be start:stop:num, got {text!r}")
        try:
            start, stop, num = float(parts[0]), float(parts[1]), int(parts[2])
        except ValueError as exc:
            raise ConfigError(f"bad grid spec {text!r}") from exc
        if num < 1:
            raise ConfigError("grid needs at least one point")
        return [float(v) for v in np.linspace(start, stop, num)]
    try:
        return [float(v) for v in text.split(",")]
    except ValueError as exc:
        raise ConfigError(f"bad grid list {text!r}") from exc


def _init_from_config(config: dict):
    q = config["q"]
    if len(q) != 4:
        raise ConfigError("q must hold four re,im pairs")
    try:
        return make_initial(*(complex(re, im) for re, im in q))
    except NormError as exc:
        raise ConfigError(str(exc)) from exc


def _coins_from_config(config: dict) -> CoinAngles:
    return CoinAngles.from_pi_units(config["theta1_over_pi"], config["theta2_over_pi"])


def _write_csv(path: Path, header: list[str], rows) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(",".join(header) + "\n")
        for row in rows:
            fh.write(",".join(row) + "\n")


def _write_manifest(config: dict, wall_time: float) -> None:
    payload = {
        "tool": "quadwalk",
        "version": __version__,
        "config": config,
        "wall_time_seconds": wall_time,
    }
    path = Path(config["output"] + ".manifest.json")
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def load_manifest(path: str | Path) -> dict:
    return json.loads(Path(path).read_text())


def cmd_simulate(config: dict) -> None:
    coins = _coins_from_config(config)
    init = _init_from_config(config)
    t = int(config["t"])
    if t < 0:
        raise ConfigError("t must be >= 0")
    state = evolve(init, coins, Protocol[config["protocol"]], t)
    dist = distribution(state)
    header = ["x", "probability"]
    limit_values = None
    if config["with_limit"]:
        header.append("limit_probability")
        window = int(config["limit_window"])
        ctx = LimitMeasureContext(coins)
        limit_values = limit_prob_range(ctx, init, -window, window)

    def rows():
        window = int(config["limit_window"])
        for x, p in zip(dist.positions, dist.probabilities):
            row = [str(int(x)), _fmt(float(p))]
            if limit_values is not None:
                if abs(int(x)) <= window:
                    row.append(_fmt(float(limit_values[int(x) + window])))
                else:
                    row.append("")
            yield row

    _write_csv(Path(config["output"]), header, rows())


def cmd_limit(config: dict) -> None:
    coins = _coins_from_config(config)
    init = _init_from_config(config)
    xmin, xmax = int(config["xmin"]), int(config["xmax"])
    if xmin > xmax:
        raise ConfigError("xmin must be <= xmax")
    ctx = LimitMeasureContext(coins)
    values = limit_prob_range(ctx, init, xmin, xmax)
    rows = ([str(x), _fmt(float(p))] for x, p in zip(range(xmin, xmax + 1), values))
    _write_csv(Path(config["output"]), ["x", "limit_probability"], rows)


def cmd_density(config: dict) -> None:
    coins = _coins_from_config(config)
    init = _init_from_config(config)
    points = int(config["points"])
    if points < 2:
        raise ConfigError("points must be >= 2")
    ctx = DensityContext.build(coins, init)
    xs = np.linspace(-ctx.support_radius, ctx.support_radius, points)
    consts = [_fmt(ctx.delta), _fmt(ctx.d0), _fmt(ctx.d1), _fmt(ctx.d2)]
    rows = ([_fmt(float(x)), _fmt(density(ctx, float(x)))] + consts for x in xs)
    _write_csv(Path(config["output"]), ["x", "f_of_x", "delta", "d0", "d1", "d2"], rows)
    if config["moment"] is not None:
        print(_fmt(moment(ctx, int(config["moment"]))))


def cmd_game(config: dict) -> None:
    coins = _coins_from_config(config)
    init = _init_from_config(config)
    t_max = int(config["t_max"])
    if t_max < 1:
        raise ConfigError("t-max must be >= 1")
    series = game_time_series(Protocol[config["protocol"]], coins, init, t_max)
    rows = ([str(t), _fmt(margin)] for t, margin in series)
    _write_csv(Path(config["output"]), ["t", "pr_minus_pl"], rows)


def cmd_phase(config: dict) -> None:
    init = _init_from_config(config)
    grid = phase_sweep(
        config["theta1_grid"],
        config["theta2_grid"],
        init,
        n=int(config["n"]),
        eps=float(config["eps"]),
        threads=int(config["threads"]),
    )

    def rows():
        for i, t1 in enumerate(grid.theta1_axis):
            for j, t2 in enumerate(grid.theta2_axis):
                yield [
                    _fmt(float(t1)),
                    _fmt(float(t2)),
                    _fmt(float(grid.margins[i, j])),
                    str(grid.labels[i, j]),
                ]

    _write_csv(
        Path(config["output"]),
        ["theta1_over_pi", "theta2_over_pi", "margin", "label"],
        rows(),
    )


def cmd_state_sweep(config: dict) -> None:
    coins = _coins_from_config(config)
    points = state_sweep(coins, config["phi_grid"], n=int(config["n"]), eps=float(config["eps"]))
    rows = ([_fmt(p.phi_over_pi), _fmt(p.margin), p.label] for p in points)
    _write_csv(Path(config["output"]), ["phi_over_pi", "margin", "label"], rows)


_DISPATCH = {
    "simulate": cmd_simulate,
    "limit": cmd_limit,
    "density": cmd_density,
    "game": cmd_game,
    "phase": cmd_phase,
    "state-sweep": cmd_state_sweep,
}


def run_config(config: dict) -> int:
    """Execute one echoed configuration; returns the process exit code."""
    started = time.perf_counter()
    try:
        command = config["command"]
        if command not in _DISPATCH:
            raise ConfigError(f"unknown command {config.get('command')!r}")
        _DISPATCH[command](config)
    except (ConfigError, KeyError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InvalidAnglesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    _write_manifest(config, time.perf_counter() - started)
    return 0


def _add_common(parser: argparse.ArgumentParser, angles: bool = True, q: bool = True) -> None:
    if angles:
        parser.add_argument("--theta1", type=float, required=True, metavar="U",
                            help="first coin angle in multiples of pi")
        parser.add_argument("--theta2", type=float, required=True, metavar="U",
                            help="second coin angle in multiples of pi")
    if q:
        for name, default in (("--q0", "1,0"), ("--q1", "0,0"), ("--q2", "0,0"), ("--q3", "0,0")):
            parser.add_argument(name, default=default, metavar="RE,IM",
                                help=f"initial amplitude (default {default})")
    parser.add_argument("-o", "--output", required=True, help="output CSV path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadwalk",
        description="2-period four-state quantum walk: simulation, limit laws, games",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("simulate", help="evolve the walk and dump P(X_t = x)")
    _add_common(p)
    p.add_argument("-t", "--time", type=int, required=True, help="number of full steps")
    p.add_argument("--protocol", choices=[pr.name for pr in Protocol], default="XY")
    p.add_argument("--with-limit", action="store_true",
                   help="add the analytic limit probability column")
    p.add_argument("--limit-window", type=int, default=200,
                   help="fill the limit column for |x| <= this (default 200)")

    p = sub.add_parser("limit", help="pointwise limit of P(X_t = x)")
    _add_common(p)
    p.add_argument("--xmin", type=int, default=-200)
    p.add_argument("--xmax", type=int, default=200)

    p = sub.add_parser("density", help="weak-limit density, atom and coefficients")
    _add_common(p)
    p.add_argument("--points", type=int, default=401, help="grid size over the support")
    p.add_argument("--moment", type=int, default=None, metavar="R",
                   help="also print the R-th moment of the weak limit")

    p = sub.add_parser("game", help="P_R(t) - P_L(t) time series")
    _add_common(p)
    p.add_argument("--t-max", type=int, required=True)
    p.add_argument("--protocol", choices=[pr.name for pr in Protocol], default="XY")

    p = sub.add_parser("phase", help="winning/losing sweep over the coin angles")
    _add_common(p, angles=False)
    p.add_argument("--theta1-grid", required=True, metavar="SPEC",
                   help="start:stop:num or comma list, in multiples of pi")
    p.add_argument("--theta2-grid", required=True, metavar="SPEC")
    p.add_argument("--n", type=int, default=DEFAULT_N)
    p.add_argument("--eps", type=float, default=DEFAULT_EPS)
    p.add_argument("--threads", type=int, default=1)

    p = sub.add_parser("state-sweep", help="margin along the phi initial-state family")
    _add_common(p, q=False)
    p.add_argument("--phi-grid", required=True, metavar="SPEC",
                   help="start:stop:num or comma list, in multiples of pi")
    p.add_argument("--n", type=int, default=DEFAULT_N)
    p.add_argument("--eps", type=float, default=DEFAULT_EPS)

    return parser


def config_from_args(args: argparse.Namespace) -> dict:
    config: dict = {"command": args.command, "output": args.output}
    if args.command != "phase":
        config["theta1_over_pi"] = args.theta1
        config["theta2_over_pi"] = args.theta2
    if args.command != "state-sweep":
        config["q"] = [_parse_pair(args.q0), _parse_pair(args.q1),
                       _parse_pair(args.q2), _parse_pair(args.q3)]
    if args.command == "simulate":
        config.update(t=args.time, protocol=args.protocol,
                      with_limit=args.with_limit, limit_window=args.limit_window)
    elif args.command == "limit":
        config.update(xmin=args.xmin, xmax=args.xmax)
    elif args.command == "density":
        config.update(points=args.points, moment=args.moment)
    elif args.command == "game":
        config.update(t_max=args.t_max, protocol=args.protocol)
    elif args.command == "phase":
        config.update(theta1_grid=_parse_grid(args.theta1_grid),
                      theta2_grid=_parse_grid(args.theta2_grid),
                      n=args.n, eps=args.eps, threads=args.threads)
    elif args.command == "state-sweep":
        config.update(phi_grid=_parse_grid(args.phi_grid), n=args.n, eps=args.eps)
    return config


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        config = config_from_args(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:
        return int(exc.code or 0)
    return run_config(config)


def entry_point() -> None:
    sys.exit(main())
