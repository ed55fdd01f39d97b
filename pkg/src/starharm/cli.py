"""Command-line front end.

Subcommands: gen (write a map record), eval (bound-check a record at
points), verify (seeded sweep), sharpness (achieved/bound ratios), render
(plot-ready image curves).  Exit codes: 0 success, 1 verification failures
present, 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

import numpy as np

from . import maps, verify
from .bounds import ENVELOPE_QUANTITIES, Quantity
from .series import DEFAULT_ORDER, DEFAULT_R_MAX, TruncatedSeries

FORMAT_VERSION = 1

_QUANTITY_NAMES = {
    "h-deriv": Quantity.H_DERIV,
    "g-deriv": Quantity.G_DERIV,
    "dilatation": Quantity.DILATATION,
    "h-growth": Quantity.H_GROWTH,
    "g-growth": Quantity.G_GROWTH,
    "f-growth": Quantity.F_GROWTH,
    "jacobian": Quantity.JACOBIAN,
    "coeff-a": Quantity.COEFF_A,
    "coeff-b": Quantity.COEFF_B,
}


class CliError(Exception):
    """Usage or input error; reported on stderr with exit code 2."""


@dataclass(frozen=True)
class RunConfig:
    seed: int = 0
    order: int = DEFAULT_ORDER
    r_max: float = DEFAULT_R_MAX
    slack_rel: float = verify.DEFAULT_SLACK_REL
    radii: int = 24
    angles: int = 72
    fmt: str = "json"
    out: str | None = None

    def validate(self) -> None:
        if self.order < 32:
            raise CliError("--order must be >= 32")
        if not 0.0 < self.r_max <= 0.9:
            raise CliError("--rmax must lie in (0, 0.9]")
        if self.slack_rel <= 0.0:
            raise CliError("--slack must be positive")
        if self.radii < 1 or self.angles < 1:
            raise CliError("--grid counts must be >= 1")

    def grid(self) -> np.ndarray:
        return maps.polar_grid(self.radii, self.angles, self.r_max)


def _parse_quantity(name: str) -> Quantity:
    try:
        return _QUANTITY_NAMES[name]
    except KeyError:
        known = ", ".join(sorted(_QUANTITY_NAMES))
        raise CliError(f"unknown quantity {name!r}; known: {known}") from None


def _parse_points(text: str) -> list[complex]:
    points = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            points.append(complex(token))
        except ValueError:
            raise CliError(f"cannot parse point {token!r} as a complex number") from None
    if not points:
        raise CliError("no evaluation points given")
    return points


def _parse_floats(text: str, what: str) -> list[float]:
    values = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        try:
            values.append(float(token))
        except ValueError:
            raise CliError(f"cannot parse {what} {token!r}") from None
    if not values:
        raise CliError(f"no {what}s given")
    return values


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="") as fh:
            fh.write(text)


def _emit_json(payload, out: str | None) -> None:
    _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n", out)


def _emit_csv(header: list[str], rows: list[list], out: str | None) -> None:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    _emit(buf.getvalue(), out)


# -- map records -----------------------------------------------------------

def _map_record(m: maps.HarmonicMap, provenance: dict) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "alpha": m.alpha,
        "order": m.h.order,
        "h_coeffs": [[c.real, c.imag] for c in m.h.coeffs.tolist()],
        "g_coeffs": [[c.real, c.imag] for c in m.g.coeffs.tolist()],
        "provenance": provenance,
    }


def _load_map(path: str, grid: np.ndarray) -> maps.HarmonicMap:
    try:
        with open(path) as fh:
            record = json.load(fh)
    except OSError as exc:
        raise CliError(f"cannot read map file: {exc}") from None
    except json.JSONDecodeError as exc:
        raise CliError(
            f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}") from None
    for field in ("format_version", "alpha", "order", "h_coeffs", "g_coeffs"):
        if field not in record:
            raise CliError(f"{path}: missing field {field!r}")

    def parse_series(name: str) -> TruncatedSeries:
        try:
            return TruncatedSeries([complex(re, im) for re, im in record[name]])
        except (TypeError, ValueError) as exc:
            raise CliError(f"{path}: field {name!r} malformed: {exc}") from None

    h = parse_series("h_coeffs")
    g = parse_series("g_coeffs")
    try:
        return maps.HarmonicMap(h, g, alpha=float(record["alpha"]), grid=grid)
    except ValueError as exc:
        raise CliError(f"{path}: invalid map record: {exc}") from None


# -- subcommands -----------------------------------------------------------

def _cmd_gen(config: RunConfig, args: argparse.Namespace) -> int:
    grid = config.grid()
    if args.extremal is not None:
        m = maps.extremal_map(args.extremal, config.order, grid=grid)
        provenance = {"kind": "extremal", "zeta": args.extremal, "order": config.order}
    elif args.random:
        rng = np.random.default_rng(config.seed)
        m, info = maps.sample_member(rng, config.order, grid)
        provenance = {"kind": "random", "seed": config.seed, "order": config.order, **info}
    else:
        omega = maps.moebius_omega(maps.DiskMoebius(0.0), config.order)
        m = maps.build_harmonic(maps.koebe(config.order), omega, grid)
        provenance = {"kind": "koebe-identity-omega", "order": config.order}
    _emit_json(_map_record(m, provenance), config.out)
    return 0


def _cmd_eval(config: RunConfig, args: argparse.Namespace) -> int:
    quantity = _parse_quantity(args.quantity)
    if quantity not in ENVELOPE_QUANTITIES:
        raise CliError(f"{args.quantity!r} is not a pointwise quantity")
    m = _load_map(args.map, config.grid())
    rows = []
    for z in _parse_points(args.points):
        if abs(z) > config.r_max + 1e-12:
            rows.append({"z": [z.real, z.imag], "value": None, "lower": None,
                         "upper": None, "verdict": "DOMAIN"})
            continue
        reps = verify.check_point(m, z, config.slack_rel, config.r_max)
        rep = next(r for r in reps if r.quantity is quantity)
        rows.append({"z": [z.real, z.imag], "value": rep.value, "lower": rep.lower,
                     "upper": rep.upper, "verdict": rep.verdict.value})
    if config.fmt == "json":
        _emit_json({"quantity": args.quantity, "alpha": m.alpha, "rows": rows}, config.out)
    else:
        def cell(v):
            return "" if v is None else v
        _emit_csv(
            ["z_re", "z_im", "value", "lower", "upper", "verdict"],
            [[r["z"][0], r["z"][1], cell(r["value"]), cell(r["lower"]),
              cell(r["upper"]), r["verdict"]] for r in rows],
            config.out,
        )
    return 0


def _cmd_verify(config: RunConfig, args: argparse.Namespace) -> int:
    if args.members < 1:
        raise CliError("--members must be >= 1")
    if args.points < 1:
        raise CliError("--points must be >= 1")
    summary = verify.run_sweep(
        config.seed, args.members, args.points,
        order=config.order, slack_rel=config.slack_rel,
        r_max=config.r_max, grid=config.grid(),
    )
    payload = summary.to_dict()
    if config.fmt == "json":
        _emit_json(payload, config.out)
    else:
        rows = [[k, json.dumps(v, sort_keys=True)] for k, v in sorted(payload.items())]
        _emit_csv(["key", "value"], rows, config.out)
    return 0 if summary.reports_failed == 0 else 1


def _cmd_sharpness(config: RunConfig, args: argparse.Namespace) -> int:
    quantity = _parse_quantity(args.quantity)
    if not 0.0 <= args.alpha < 1.0:
        raise CliError("--alpha must lie in [0, 1)")
    coefficient = quantity in (Quantity.COEFF_A, Quantity.COEFF_B)
    if args.values is not None:
        values = _parse_floats(args.values, "value")
    elif coefficient:
        values = [float(n) for n in range(2, 9)]
    else:
        values = [round(0.1 * k, 1) for k in range(1, 9)]
    try:
        scan = verify.sharpness_scan(quantity, args.alpha, values,
                                     order=config.order, r_max=config.r_max)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    key = "n" if coefficient else "r"
    if config.fmt == "json":
        _emit_json({"quantity": args.quantity, "alpha": args.alpha,
                    "rows": [{key: at, "ratio": ratio} for at, ratio in scan]},
                   config.out)
    else:
        _emit_csv([key, "ratio"], [[at, ratio] for at, ratio in scan], config.out)
    return 0


def _cmd_render(config: RunConfig, args: argparse.Namespace) -> int:
    m = _load_map(args.map, config.grid())
    radii = config.r_max * np.arange(1, config.radii + 1) / config.radii
    angles = 2.0 * np.pi * np.arange(config.angles) / config.angles
    rows = []

    def curve_rows(curve_id: str, zs: np.ndarray) -> None:
        fs = m.eval_f(zs, config.r_max)
        for z, f in zip(zs.tolist(), fs.tolist()):
            rows.append([curve_id, z.real, z.imag, f.real, f.imag])

    # one circle per grid radius (angles samples), one spoke per grid angle
    # (radii samples)
    for i, r in enumerate(radii.tolist()):
        curve_rows(f"circle_{i:03d}", r * np.exp(1j * angles))
    for j, t in enumerate(angles.tolist()):
        curve_rows(f"spoke_{j:03d}", radii * np.exp(1j * t))

    if config.fmt == "json":
        _emit_json([{"curve_id": c, "re_z": a, "im_z": b, "re_f": u, "im_f": v}
                    for c, a, b, u, v in rows], config.out)
    else:
        _emit_csv(["curve_id", "re_z", "im_z", "re_f", "im_f"], rows, config.out)
    return 0


_COMMANDS = {
    "gen": _cmd_gen,
    "eval": _cmd_eval,
    "verify": _cmd_verify,
    "sharpness": _cmd_sharpness,
    "render": _cmd_render,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for all randomness")
    common.add_argument("--order", type=int, default=DEFAULT_ORDER,
                        help="series truncation order (>= 32)")
    common.add_argument("--rmax", type=float, default=DEFAULT_R_MAX,
                        help="certified evaluation radius (<= 0.9)")
    common.add_argument("--slack", type=float, default=verify.DEFAULT_SLACK_REL,
                        help="relative verification slack")
    common.add_argument("--grid", default="24x72", metavar="RxA",
                        help="radii x angles of the sample grid")
    common.add_argument("--format", dest="fmt", choices=("json", "csv"), default=None,
                        help="output format (default json; csv for render)")
    common.add_argument("--out", default=None, metavar="FILE",
                        help="write output to FILE instead of stdout")

    parser = argparse.ArgumentParser(
        prog="starharm",
        description="Construct and numerically verify planar harmonic maps "
                    "with starlike analytic part.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", parents=[common], help="generate a map record")
    kind = gen.add_mutually_exclusive_group(required=True)
    kind.add_argument("--extremal", type=float, metavar="ZETA",
                      help="extremal member with dilatation (z+ZETA)/(1+ZETA z)")
    kind.add_argument("--random", action="store_true",
                      help="random member drawn from --seed")
    kind.add_argument("--koebe-identity", dest="koebe_identity", action="store_true",
                      help="Koebe analytic part with dilatation omega(z) = z")

    ev = sub.add_parser("eval", parents=[common],
                        help="evaluate one bounded quantity at points")
    ev.add_argument("--map", required=True, metavar="FILE", help="map record to read")
    ev.add_argument("--quantity", required=True, help="quantity name (e.g. jacobian)")
    ev.add_argument("--points", required=True,
                    help="comma-separated complex points, e.g. '0.5,0.2+0.1j'")

    ver = sub.add_parser("verify", parents=[common], help="run a verification sweep")
    ver.add_argument("--members", type=int, required=True, help="number of sampled members")
    ver.add_argument("--points", type=int, default=50, help="points per member")

    sharp = sub.add_parser("sharpness", parents=[common],
                           help="achieved/bound ratios on the extremal family")
    sharp.add_argument("--quantity", required=True)
    sharp.add_argument("--alpha", type=float, required=True)
    sharp.add_argument("--values", default=None,
                       help="radii (or coefficient indices) to scan")

    ren = sub.add_parser("render", parents=[common],
                         help="emit image curves of the mapped disc")
    ren.add_argument("--map", required=True, metavar="FILE")

    return parser


def _config_from(args: argparse.Namespace) -> RunConfig:
    try:
        radii_s, angles_s = args.grid.lower().split("x")
        radii, angles = int(radii_s), int(angles_s)
    except ValueError:
        raise CliError(f"--grid must look like 24x72, got {args.grid!r}") from None
    fmt = args.fmt or ("csv" if args.command == "render" else "json")
    return RunConfig(seed=args.seed, order=args.order, r_max=args.rmax,
                     slack_rel=args.slack, radii=radii, angles=angles,
                     fmt=fmt, out=args.out)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = _config_from(args)
        config.validate()
        return _COMMANDS[args.command](config, args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
