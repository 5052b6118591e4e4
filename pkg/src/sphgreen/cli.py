"""Command-line front end.

Subcommands:
  eval      evaluate the fundamental solution at one angle, by one route or all
  table     tabulate values over an angle range to CSV
  check     run a named verification suite (ode | delta | limit | xrep | geometry)
  distance  geodesic distance and separation angle between two points

Exit codes: 0 ok, 1 check failure, 2 bad arguments, 3 convergence failure,
4 I/O error.  Angles are radians; floats print in shortest round-trip form.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys

from .geometry import HyperPoint, geodesic_distance, separation_angle
from .harmonics import DegenerateBranchError, QuantumNumbers, RadialSolutionKind, ode_convergence_order
from .kernel import (
    THETA_EDGE,
    Representation,
    SeriesWindowError,
    normalization_constant,
    radial_kernel,
)
from .oracle import (
    CheckReport,
    check_cross_representation,
    check_delta_identity,
    check_distance_oracle,
    check_euclidean_limit,
    check_volume,
    euclidean_limit_errors,
)
from .quadrature import ToleranceNotMetError
from .specfun import NonConvergenceError

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_ARGS = 2
EXIT_NO_CONVERGENCE = 3
EXIT_IO = 4

METHOD_ORDER = ("quadrature", "finite_sum", "recurrence", "hyp2f1", "hyp2f1_euler", "ferrers")

CSV_HEADER = ("d", "R", "theta", "method", "value", "est_error")


def fmt(x: float) -> str:
    """Shortest decimal that round-trips the double (<= 17 significant digits)."""
    return repr(float(x))


def _validate_common(d: int, radius: float, theta: float | None = None) -> None:
    if d < 2:
        raise ValueError(f"--d must be >= 2, got {d}")
    if not radius > 0.0:
        raise ValueError(f"--radius must be positive, got {radius}")
    if theta is not None and not THETA_EDGE <= theta <= math.pi - THETA_EDGE:
        raise ValueError(f"--theta must lie inside (0, pi), got {theta}")


def _solution_value(d: int, radius: float, theta: float, method: str, tol: float):
    """(value, est_error) of the fundamental solution through one route."""
    kv = radial_kernel(d, theta, Representation(method), tol=tol)
    scale = normalization_constant(d) / radius ** (d - 2)
    return scale * kv.value, abs(scale) * kv.est_error


def cmd_eval(args) -> int:
    _validate_common(args.d, args.radius, args.theta)
    if args.method != "all":
        value, _ = _solution_value(args.d, args.radius, args.theta, args.method, args.tol)
        print(fmt(value))
        return EXIT_OK
    values = {}
    for method in METHOD_ORDER:
        try:
            value, err = _solution_value(args.d, args.radius, args.theta, method, args.tol)
        except SeriesWindowError:
            print(f"{method} skipped series-window")
            continue
        except (NonConvergenceError, ToleranceNotMetError):
            # one route failing to converge must not take down the others
            print(f"{method} skipped no-convergence")
            continue
        values[method] = value
        print(f"{method} {fmt(value)} {fmt(err)}")
    deviation = 0.0
    names = list(values)
    for i, a in enumerate(names):
        for b in names[i + 1:]:
            denom = max(1.0, abs(values[a]), abs(values[b]))
            deviation = max(deviation, abs(values[a] - values[b]) / denom)
    print(f"max_pairwise_relative_deviation {fmt(deviation)}")
    return EXIT_OK


def _parse_methods(spec: str) -> list[str]:
    names = [m.strip() for m in spec.split(",") if m.strip()]
    if "all" in names:
        return list(METHOD_ORDER)
    for name in names:
        if name not in METHOD_ORDER:
            raise ValueError(f"unknown method {name!r}")
    if not names:
        raise ValueError("no methods given")
    # canonical order keeps output deterministic
    return [m for m in METHOD_ORDER if m in names]


def cmd_table(args) -> int:
    _validate_common(args.d, args.radius)
    if not (THETA_EDGE < args.theta_min < args.theta_max < math.pi - THETA_EDGE):
        raise ValueError("need 0 < theta-min < theta-max < pi")
    if args.n < 2:
        raise ValueError(f"--n must be >= 2, got {args.n}")
    methods = _parse_methods(args.methods)
    step = (args.theta_max - args.theta_min) / (args.n - 1)
    rows = []
    for i in range(args.n):
        theta = args.theta_min + i * step
        for method in methods:
            try:
                value, err = _solution_value(args.d, args.radius, theta, method, args.tol)
            except (SeriesWindowError, NonConvergenceError, ToleranceNotMetError):
                value, err = math.nan, math.nan
            rows.append((str(args.d), fmt(args.radius), fmt(theta), method,
                         fmt(value), fmt(err)))
    try:
        stream = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    except OSError as exc:
        print(f"error: cannot open {args.out}: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        writer.writerows(rows)
    except OSError as exc:
        print(f"error: write failed: {exc}", file=sys.stderr)
        return EXIT_IO
    finally:
        if stream is not sys.stdout:
            stream.close()
    return EXIT_OK


def _ode_suite() -> list[CheckReport]:
    reports = []
    for d in range(2, 8):
        for l in range(0, 3):
            q = QuantumNumbers(d, l)
            for kind in RadialSolutionKind:
                worst = None
                note = ""
                skipped = None
                for theta in (0.5, 1.0, 2.0):
                    try:
                        order = ode_convergence_order(q, kind, theta)
                    except ValueError as exc:
                        skipped = f"outside Ferrers parameter domain ({exc})"
                        break
                    except DegenerateBranchError as exc:
                        skipped = f"degenerate branch ({exc})"
                        break
                    if order is None:
                        note = "; some residuals at rounding floor"
                        continue
                    if worst is None or abs(order - 2.0) > abs(worst - 2.0):
                        worst = order
                name = f"ode-order d={d} l={l} {kind.value}"
                if skipped is not None:
                    reports.append(CheckReport(name, 0.0, 0.0, math.inf, True,
                                               f"skipped: {skipped}"))
                elif worst is None:
                    reports.append(CheckReport(name, 2.0, 2.0, 0.2, True,
                                               "operator annihilates branch to rounding"))
                else:
                    reports.append(CheckReport(
                        name, worst, 2.0, 0.2, abs(worst - 2.0) <= 0.2,
                        f"worst convergence order over theta in (0.5, 1.0, 2.0){note}"))
    return reports


def _delta_suite() -> list[CheckReport]:
    return [check_delta_identity(d, radius) for d in (2, 3) for radius in (1.0, 5.0)]


def _limit_suite() -> list[CheckReport]:
    radii = [10.0, 100.0, 1000.0, 10000.0]
    reports = [check_euclidean_limit(3, 1.0, radii)]
    errors = euclidean_limit_errors(3, 1.0, radii)
    slope = (math.log(errors[-1]) - math.log(errors[0])) / (math.log(radii[-1]) - math.log(radii[0]))
    reports.append(CheckReport("euclidean-limit-slope d=3", slope, -2.0, 0.2,
                               abs(slope + 2.0) <= 0.2,
                               f"log-log slope across radii {radii}"))
    reports.append(check_euclidean_limit(2, 1.0, radii))
    return reports


def _xrep_suite() -> list[CheckReport]:
    return [check_cross_representation(d) for d in range(2, 11)]


def _geometry_suite() -> list[CheckReport]:
    reports = [check_distance_oracle(d, pairs=200) for d in range(2, 7)]
    reports += [check_volume(d) for d in (2, 3, 4)]
    return reports


SUITES = {
    "ode": _ode_suite,
    "delta": _delta_suite,
    "limit": _limit_suite,
    "xrep": _xrep_suite,
    "geometry": _geometry_suite,
}


def cmd_check(args) -> int:
    reports = SUITES[args.suite]()
    for report in reports:
        print(report.line())
    return EXIT_OK if all(r.passed for r in reports) else EXIT_CHECK_FAILED


def _parse_point(d: int, radius: float, text: str) -> HyperPoint:
    try:
        angles = [float(v) for v in text.split(",")]
    except ValueError as exc:
        raise ValueError(f"malformed angle list {text!r}: {exc}") from None
    if len(angles) != d:
        raise ValueError(f"need {d} angles (theta, phi, alpha_2..) for d={d}, "
                         f"got {len(angles)}")
    return HyperPoint(d, radius, angles[0], tuple(angles[1:]))


def cmd_distance(args) -> int:
    _validate_common(args.d, args.radius)
    a = _parse_point(args.d, args.radius, args.point_a)
    b = _parse_point(args.d, args.radius, args.point_b)
    print(f"separation_angle {fmt(separation_angle(a.direction, b.direction))}")
    print(f"distance {fmt(geodesic_distance(a, b))}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sphgreen",
        description="Fundamental solution of Laplace's equation on the "
                    "d-dimensional radius-R hypersphere.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate at one angle")
    p_eval.add_argument("--d", type=int, required=True)
    p_eval.add_argument("--radius", type=float, default=1.0)
    p_eval.add_argument("--theta", type=float, required=True)
    p_eval.add_argument("--method", choices=METHOD_ORDER + ("all",), default="finite_sum")
    p_eval.add_argument("--tol", type=float, default=1e-11)
    p_eval.set_defaults(func=cmd_eval)

    p_table = sub.add_parser("table", help="tabulate values to CSV")
    p_table.add_argument("--d", type=int, required=True)
    p_table.add_argument("--radius", type=float, default=1.0)
    p_table.add_argument("--theta-min", type=float, required=True)
    p_table.add_argument("--theta-max", type=float, required=True)
    p_table.add_argument("--n", type=int, required=True)
    p_table.add_argument("--methods", default="all",
                         help="comma-separated subset of "
                              f"{','.join(METHOD_ORDER)} or 'all'")
    p_table.add_argument("--tol", type=float, default=1e-11)
    p_table.add_argument("--out", default="-", help="output path (default stdout)")
    p_table.set_defaults(func=cmd_table)

    p_check = sub.add_parser("check", help="run a verification suite")
    p_check.add_argument("suite", choices=sorted(SUITES))
    p_check.set_defaults(func=cmd_check)

    p_dist = sub.add_parser("distance", help="geodesic distance between two points")
    p_dist.add_argument("--d", type=int, required=True)
    p_dist.add_argument("--radius", type=float, default=1.0)
    p_dist.add_argument("--point-a", required=True,
                        help="comma-separated angles theta,phi[,alpha_2,...]")
    p_dist.add_argument("--point-b", required=True)
    p_dist.set_defaults(func=cmd_distance)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (SeriesWindowError, NonConvergenceError, ToleranceNotMetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_ARGS
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
