"""Command-line entry point.

Exit codes: 0 success, 1 a check failed, 2 usage error.
"""
import argparse
import math
import os
import sys
from fractions import Fraction

from . import arctic, aztec_lattice, checks, export, m_toroidal, refined


def positive_fraction(s):
    try:
        x = Fraction(s.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError("not a fraction: %r" % s)
    if x <= 0:
        raise argparse.ArgumentTypeError("must be positive: %r" % s)
    return x


def positive_real(s):
    x = float(positive_fraction(s))
    return x


def nonneg_int(s):
    try:
        n = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError("not an integer: %r" % s)
    if n < 0:
        raise argparse.ArgumentTypeError("must be >= 0: %r" % s)
    return n


def fraction_list(s):
    return [positive_fraction(x) for x in s.split(",") if x.strip()]


def emit(text, path):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_partition(args):
    T = aztec_lattice.T_closed(args.n, args.a, args.b)
    Z = aztec_lattice.Z_closed(args.n, args.a, args.b)
    evolved = aztec_lattice.octahedron_top(aztec_lattice.two_periodic_grid(args.n, args.a, args.b))
    report = {"n": args.n, "a": args.a, "b": args.b, "T_n": T, "Z_n": Z,
              "octahedron_matches_closed_form": evolved == T}
    if args.format == "csv":
        emit(export.to_csv(list(report), [list(report.values())]), args.output)
    else:
        emit(export.to_json(report) + "\n", args.output)
    return 0 if evolved == T else 1


def cmd_refined(args):
    n, a, b = args.n, args.a, args.b
    if n < 1:
        raise SystemExit(_usage("refined tables need n >= 1"))
    ok = True
    if args.two:
        tab = refined.two_refined(n, a, b)[n]
        one = refined.T_one_refined(n, a, b)
        rows = []
        for k in range(n + 1):
            row_ok = sum(tab[k]) == one[k]
            ok &= row_ok
            for l in range(n + 1):
                rows.append([n, k, l, tab[k][l], "ok" if row_ok else "mismatch"])
        text = export.to_csv(["n", "k", "l", "T_nkl", "row_marginal"], rows)
    else:
        one = refined.T_one_refined(n, a, b)
        S = refined.one_refined(n)[n]
        total = sum(one)
        ok = total == aztec_lattice.T_closed(n, a, b)
        rows = [[n, k, one[k], S[k].evaluate(a * a / (b * b)), "ok" if ok else "mismatch"]
                for k in range(n + 1)]
        text = export.to_csv(["n", "k", "T_nk", "S_nk", "sum_check"], rows)
    emit(text, args.output)
    return 0 if ok else 1


def cmd_curve(args):
    beta = args.beta
    vs = arctic.sample_v(args.samples, args.vmax)
    rows, disc = [], 0.0
    geo, env = [], []
    for v in vs:
        if args.method in ("geometric", "both"):
            X, Y = arctic.geometric_curve(v, beta)
            geo.append((X, Y))
            rows.append([beta, float(v), "geometric", X, Y, arctic.degree8_residual(X + Y, Y - X, beta)])
        if args.method in ("two-refined", "both") and v > 1:
            X2, Y2 = arctic.two_refined_curve(v, beta)
            env.append((X2, Y2))
            rows.append([beta, float(v), "two-refined", X2, Y2, arctic.degree8_residual(X2 + Y2, Y2 - X2, beta)])
            if args.method == "both":
                disc = max(disc, math.hypot(X - X2, Y - Y2))
    if args.format == "svg":
        curves = []
        if geo:
            curves.append(arctic.full_outer_curve(beta, args.samples, args.vmax) + [geo[0]])
        if env:
            curves.append(env)
        emit(export.to_svg(curves, size=args.size, stroke_width=args.stroke), args.output)
    else:
        emit(export.to_csv(["beta", "v", "method", "X", "Y", "residual"], rows), args.output)
    if args.method == "both":
        sys.stderr.write("max discrepancy %r\n" % disc)
        return 0 if disc < args.tol else 1
    return 0


def cmd_check(args):
    if args.brute_cap is not None:
        os.environ["AZTEC_BRUTE_CAP"] = str(args.brute_cap)
    if (args.alphas is None) != (args.betas is None):
        raise SystemExit(_usage("--alphas and --betas go together"))
    if args.suite == "appendix" and args.beta is not None:
        report = checks.appendix_report(args.beta)
    elif args.suite == "mtoroidal" and args.alphas is not None:
        w = m_toroidal.PeriodicEdgeWeights(args.alphas, args.betas)
        if args.m is not None and args.m != w.m:
            raise SystemExit(_usage("--m %d disagrees with %d weight pairs" % (args.m, w.m)))
        report = checks.mtoroidal_report(weights=w)
    elif args.suite == "mtoroidal" and args.m is not None:
        if args.m < 1:
            raise SystemExit(_usage("--m must be >= 1"))
        report = checks.mtoroidal_report(args.m)
    else:
        report = checks.run_suite(args.suite)
    emit(export.to_json(report) + "\n", args.output)
    return 0 if all(c["status"] == "pass" for c in report["cases"]) else 1


def _usage(msg):
    sys.stderr.write("usage error: %s\n" % msg)
    return 2


def build_parser():
    p = argparse.ArgumentParser(prog="aztec-tangent", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("partition", help="T_n and Z_n for the two-periodic diamond")
    q.add_argument("--n", type=nonneg_int, required=True)
    q.add_argument("--a", type=positive_fraction, required=True)
    q.add_argument("--b", type=positive_fraction, required=True)
    q.add_argument("--format", choices=["json", "csv"], default="json")
    q.add_argument("--output")
    q.set_defaults(func=cmd_partition)

    q = sub.add_parser("refined", help="one- or two-refined exact tables as CSV")
    q.add_argument("--n", type=nonneg_int, required=True)
    q.add_argument("--a", type=positive_fraction, required=True)
    q.add_argument("--b", type=positive_fraction, required=True)
    q.add_argument("--two", action="store_true")
    q.add_argument("--output")
    q.set_defaults(func=cmd_refined)

    q = sub.add_parser("curve", help="arctic curve samples (CSV) or picture (SVG)")
    q.add_argument("--beta", type=positive_real, required=True)
    q.add_argument("--method", choices=["geometric", "two-refined", "both"], default="geometric")
    q.add_argument("--samples", type=int, default=200)
    q.add_argument("--vmax", type=float, default=1e3)
    q.add_argument("--format", choices=["csv", "svg"], default="csv")
    q.add_argument("--size", type=int, default=480)
    q.add_argument("--stroke", type=float, default=0.006)
    q.add_argument("--tol", type=float, default=1e-8)
    q.add_argument("--output")
    q.set_defaults(func=cmd_curve)

    q = sub.add_parser("check", help="run an acceptance suite, JSON report")
    q.add_argument("--suite", choices=sorted(checks.SUITES), default="all")
    q.add_argument("--beta", type=positive_real)
    q.add_argument("--m", type=int)
    q.add_argument("--alphas", type=fraction_list, help="comma-separated alpha_1..alpha_m")
    q.add_argument("--betas", type=fraction_list, help="comma-separated beta_1..beta_m")
    q.add_argument("--brute-cap", type=nonneg_int, help="largest order enumerated by brute force")
    q.add_argument("--output")
    q.set_defaults(func=cmd_check)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as e:
        return e.code
    except ValueError as e:
        return _usage(str(e))


if __name__ == "__main__":
    sys.exit(main())
