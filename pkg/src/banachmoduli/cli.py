"""Command-line front end.

Subcommands:

* ``compute`` — evaluate one modulus curve on a grid and emit CSV, JSON,
  or an SVG plot.
* ``verify``  — run the inequality registry plus a randomized property
  suite on one space and emit the JSON report; the exit code reflects
  the outcome (0 all Pass/Degenerate, 1 any Fail).
* ``xi``      — estimate the hyperplane projection constant with its
  witness vectors.
* ``explore`` — tabulate the projection-constant gap for a list of lp
  exponents (informational, never asserts).
* ``plot``    — shorthand for ``compute --format svg``.

Identical invocations produce byte-identical output; usage errors
(unparseable spec, bad grid, out-of-domain parameters, unwritable
output) exit with code 2.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from .config import SampleConfig
from .moduli import CURVE_KINDS, ModulusCurve, modulus_curve, xi
from .spaces import SpaceError, parse_space
from .verify import InequalityReport, explore_conjecture, property_suite, \
    run_checks

_VERIFY_PROPERTY_CASES = 200


def _parse_grid(text: str) -> np.ndarray:
    """Parse ``start:stop:step`` into an inclusive grid.

    The endpoint is included when the step sequence lands within 1e-9 of
    ``stop``, and is snapped exactly onto it so that domain checks see
    the stated bound rather than accumulated rounding.
    """
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"grid must be start:stop:step, got {text!r}")
    try:
        start, stop, step = (float(s) for s in parts)
    except ValueError:
        raise ValueError(f"grid must be numeric start:stop:step, got {text!r}")
    if not (start < stop) or step <= 0.0:
        raise ValueError("grid requires start < stop and step > 0")
    n = int(math.floor((stop - start) / step + 1e-9))
    vals = start + np.arange(n + 1) * step
    if abs(vals[-1] - stop) <= 1e-9:
        vals[-1] = stop
    return vals


def _build_config(args: argparse.Namespace) -> SampleConfig:
    kwargs = {}
    if args.angular_samples is not None:
        kwargs["angular_samples"] = args.angular_samples
    if args.sections is not None:
        kwargs["section_samples"] = args.sections
    if args.tol is not None:
        kwargs["root_tol"] = args.tol
    if args.slack is not None:
        kwargs["slack"] = args.slack
    if args.seed is not None:
        kwargs["seed"] = args.seed
    return SampleConfig(**kwargs)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", newline="\n") as fh:
            fh.write(text)


def _json_text(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# ----------------------------------------------------------------------
# SVG plotting
# ----------------------------------------------------------------------

def curve_svg(curve: ModulusCurve) -> str:
    """Minimal deterministic plot: one polyline, two axes, labels."""
    width, height, margin = 640.0, 480.0, 70.0
    x0, x1 = float(curve.params[0]), float(curve.params[-1])
    y0, y1 = float(curve.values.min()), float(curve.values.max())
    if y1 - y0 < 1e-12:
        y1 = y0 + 1.0
    xspan, yspan = x1 - x0, y1 - y0

    def sx(v: float) -> float:
        return margin + (v - x0) / xspan * (width - 2.0 * margin)

    def sy(v: float) -> float:
        return height - margin - (v - y0) / yspan * (height - 2.0 * margin)

    pts = " ".join(f"{sx(p):.2f},{sy(v):.2f}"
                   for p, v in zip(curve.params, curve.values))
    left, right = margin, width - margin
    top, bottom = margin, height - margin
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" '
        f'height="{height:.0f}" viewBox="0 0 {width:.0f} {height:.0f}">',
        '<rect width="100%" height="100%" fill="white"/>',
        f'<line x1="{left:.1f}" y1="{bottom:.1f}" x2="{right:.1f}" '
        f'y2="{bottom:.1f}" stroke="black"/>',
        f'<line x1="{left:.1f}" y1="{bottom:.1f}" x2="{left:.1f}" '
        f'y2="{top:.1f}" stroke="black"/>',
        f'<polyline points="{pts}" fill="none" stroke="#1f77b4" '
        'stroke-width="1.5"/>',
        f'<text x="{(left + right) / 2:.1f}" y="{height - 12:.1f}" '
        'text-anchor="middle" font-size="14">parameter</text>',
        f'<text x="16" y="{(top + bottom) / 2:.1f}" text-anchor="middle" '
        f'font-size="14" transform="rotate(-90 16 {(top + bottom) / 2:.1f})"'
        f'>{curve.kind}</text>',
        f'<text x="{(left + right) / 2:.1f}" y="{top - 20:.1f}" '
        f'text-anchor="middle" font-size="14">{curve.kind} on '
        f'{curve.space_id}</text>',
        f'<text x="{left:.1f}" y="{bottom + 18:.1f}" text-anchor="middle" '
        f'font-size="12">{x0:.4g}</text>',
        f'<text x="{right:.1f}" y="{bottom + 18:.1f}" text-anchor="middle" '
        f'font-size="12">{x1:.4g}</text>',
        f'<text x="{left - 8:.1f}" y="{bottom:.1f}" text-anchor="end" '
        f'font-size="12">{y0:.4g}</text>',
        f'<text x="{left - 8:.1f}" y="{top + 4:.1f}" text-anchor="end" '
        f'font-size="12">{y1:.4g}</text>',
        "</svg>",
    ]
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------------
# subcommands
# ----------------------------------------------------------------------

def _cmd_compute(args: argparse.Namespace, fmt_default: str) -> int:
    space = parse_space(args.space)
    grid = _parse_grid(args.grid)
    config = _build_config(args)
    curve = modulus_curve(space, args.modulus, grid, config)
    fmt = args.format or fmt_default
    if fmt == "csv":
        text = curve.to_csv()
    elif fmt == "json":
        text = _json_text(curve.as_dict())
    else:
        text = curve_svg(curve)
    _emit(text, args.out)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    space = parse_space(args.space)
    grid = _parse_grid(args.grid)
    config = _build_config(args)
    checks = run_checks(space, grid, config)
    props = property_suite(space, _VERIFY_PROPERTY_CASES, config.seed, config)
    report = InequalityReport(checks.space_id, checks.config_fingerprint,
                              checks.entries + props.entries)
    _emit(_json_text(report.as_dict()), args.out)
    return 0 if report.ok else 1


def _cmd_xi(args: argparse.Namespace) -> int:
    space = parse_space(args.space)
    config = _build_config(args)
    est = xi(space, config)
    _emit(_json_text(est.as_dict()), args.out)
    return 0


def _cmd_explore(args: argparse.Namespace) -> int:
    try:
        p_values = [float(s) for s in args.p.split(",") if s.strip()]
    except ValueError:
        raise ValueError(f"--p must be a comma-separated list, got {args.p!r}")
    if not p_values:
        raise ValueError("--p must list at least one exponent")
    config = _build_config(args)
    table = explore_conjecture(p_values, config)
    _emit(_json_text(table), args.out)
    return 0


# ----------------------------------------------------------------------
# parser wiring
# ----------------------------------------------------------------------

def _add_config_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--angular-samples", type=int, default=None,
                    help="sphere samples per sweep (default 2048)")
    sp.add_argument("--sections", type=int, default=None,
                    help="2D sections sampled in dimension >= 3 (default 64)")
    sp.add_argument("--tol", type=float, default=None,
                    help="root-finding tolerance (default 1e-10)")
    sp.add_argument("--slack", type=float, default=None,
                    help="one-sided inequality tolerance (default 5e-3)")
    sp.add_argument("--seed", type=int, default=None,
                    help="seed for sampled sections and property cases")
    sp.add_argument("--out", default=None, help="output path (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="banachmoduli",
        description="Moduli of convexity and smoothness for finite-"
                    "dimensional normed spaces: curves, inequality "
                    "verification, and projection constants.")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("compute", help="evaluate one modulus curve")
    sp.add_argument("--space", required=True, help="norm spec, e.g. l2:2")
    sp.add_argument("--modulus", required=True, choices=CURVE_KINDS)
    sp.add_argument("--grid", required=True, help="start:stop:step")
    sp.add_argument("--format", choices=("csv", "json", "svg"), default=None)
    _add_config_flags(sp)

    sp = sub.add_parser("verify", help="run the inequality report")
    sp.add_argument("--space", required=True)
    sp.add_argument("--grid", default="0.05:0.95:0.05",
                    help="start:stop:step inside [0, 1]")
    sp.add_argument("--format", choices=("json",), default="json")
    _add_config_flags(sp)

    sp = sub.add_parser("xi", help="estimate the projection constant")
    sp.add_argument("--space", required=True)
    sp.add_argument("--format", choices=("json",), default="json")
    _add_config_flags(sp)

    sp = sub.add_parser("explore",
                        help="projection-constant gap table for lp planes")
    sp.add_argument("--p", required=True,
                    help="comma-separated exponents, e.g. 1.5,2,3,4")
    sp.add_argument("--format", choices=("json",), default="json")
    _add_config_flags(sp)

    sp = sub.add_parser("plot", help="compute and render an SVG plot")
    sp.add_argument("--space", required=True)
    sp.add_argument("--modulus", required=True, choices=CURVE_KINDS)
    sp.add_argument("--grid", required=True, help="start:stop:step")
    sp.add_argument("--format", choices=("svg",), default="svg")
    _add_config_flags(sp)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "compute":
            return _cmd_compute(args, fmt_default="csv")
        if args.command == "plot":
            return _cmd_compute(args, fmt_default="svg")
        if args.command == "verify":
            return _cmd_verify(args)
        if args.command == "xi":
            return _cmd_xi(args)
        return _cmd_explore(args)
    except (SpaceError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
