"""Command line interface.

Exit codes: 0 success, 1 oracle mismatch (``oracle-check`` only), 2 invalid
request, 3 bad input data, 4 I/O failure.  Every failure prints exactly one
line starting with ``error:`` to stderr.

Outputs go to the path given with ``-o``; without it a default file name is
placed in ``$DIFFINT_OUTDIR`` (or the current directory).
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from pathlib import Path

import numpy as np

from .design import (
    design_derivative_filter,
    design_smoothing_filter,
    finite_difference_kernel,
    least_squares_oracle,
    read_kernel_csv,
    write_kernel_csv,
)
from .errors import DiffintError, InputError
from .estimate import (
    apply_kernel,
    continuous_estimator,
    convergence_probe,
    kernel_estimator,
    read_signal_csv,
    write_estimate_csv,
)
from .measures import (
    CENTERED_GRAM,
    GRAM,
    HAHN,
    KRAWTCHOUK,
    family_from_name,
    legendre,
    weights,
)
from .transfer import (
    CLOSED_FORMS,
    characteristic_continuous,
    characteristic_discrete,
    closed_form,
    figure_tables,
    stability_scan,
    transfer_samples,
    write_loglog_csv,
    write_transfer_csv,
)

EXIT_OK, EXIT_MISMATCH, EXIT_SPEC, EXIT_INPUT, EXIT_IO = 0, 1, 2, 3, 4

DISCRETE_FAMILIES = (GRAM, CENTERED_GRAM, HAHN, KRAWTCHOUK, "finite-difference")


class UsageError(DiffintError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _outdir() -> Path:
    return Path(os.environ.get("DIFFINT_OUTDIR") or ".")


def _out(args, default: str) -> Path:
    return Path(args.out) if args.out else _outdir() / default


# ---------------------------------------------------------------------------
# subcommands

def cmd_design(args) -> int:
    if args.smoothing and args.m not in (None, 0):
        raise UsageError("--smoothing conflicts with -m other than 0")
    if args.family == HAHN and args.alpha is None:
        raise UsageError("--family hahn requires --alpha")
    if args.family != HAHN and args.alpha is not None:
        raise UsageError("--alpha applies to --family hahn only")
    if args.family == "finite-difference":
        if args.smoothing:
            raise UsageError("--smoothing conflicts with --family finite-difference")
        kernel = finite_difference_kernel(args.n)
    else:
        if args.N is None:
            raise UsageError(f"--family {args.family} requires -N")
        alpha = None if args.alpha is None else _parse_alpha(args.alpha)
        fam = family_from_name(args.family, args.N, alpha)
        if args.smoothing:
            kernel = design_smoothing_filter(fam, args.n)
        else:
            kernel = design_derivative_filter(fam, 0 if args.m is None else args.m, args.n)
    path = write_kernel_csv(kernel, _out(args, "kernel.csv"))
    print(f"wrote {path} ({kernel.family}, m={kernel.m}, exactness={kernel.exactness_degree})")
    return EXIT_OK


def _parse_alpha(text: str):
    from fractions import Fraction
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--alpha must be a number, got {text!r}") from None


def cmd_apply(args) -> int:
    kernel = read_kernel_csv(args.kernel)
    signal = read_signal_csv(args.signal)
    out = apply_kernel(kernel, signal)
    path = write_estimate_csv(out, _out(args, "estimate.csv"))
    print(f"wrote {path} ({len(out)} rows)")
    return EXIT_OK


def _open_grid(upper: float, points: int) -> np.ndarray:
    return upper * np.arange(1, points + 1) / (points + 1)


def cmd_transfer(args) -> int:
    chosen = [a for a in (args.kernel, args.closed_form, args.continuous) if a]
    if len(chosen) != 1:
        raise UsageError("give exactly one of --kernel, --closed-form, --continuous")
    if args.points < 1:
        raise UsageError("--points must be positive")
    if args.kernel:
        kernel = read_kernel_csv(args.kernel)
        upper = args.omega_max or 2 * math.pi / args.delta
        fn = lambda w: characteristic_discrete(kernel, args.delta, w)  # noqa: E731
    elif args.continuous:
        fam = family_from_name(args.continuous)
        upper = args.omega_max or 8.0
        fn = lambda w: characteristic_continuous(fam, args.m, args.n, args.delta, w)  # noqa: E731
    else:
        params = _closed_form_params(args)
        upper = args.omega_max or 2 * math.pi
        fn = lambda w: closed_form(args.closed_form, w, **params)  # noqa: E731
    if args.loglog:
        w = np.logspace(math.log10(upper) - 4, math.log10(upper), args.points)
        path = write_loglog_csv(_out(args, "loglog.csv"), w, np.abs(np.asarray(fn(w))))
    else:
        path = write_transfer_csv(_out(args, "transfer.csv"), transfer_samples(fn, _open_grid(upper, args.points)))
    print(f"wrote {path}")
    return EXIT_OK


_CLOSED_PARAMS = {
    "lanczos": ("delta",),
    "multiterm13": ("delta",),
    "sg1": ("N", "delta"),
    "min-ralpha": ("N", "n", "alpha"),
    "min-rinf": ("N", "n"),
    "maxflat-factored": ("N", "n"),
    "butterworth": ("m", "n", "omega0"),
}


def _closed_form_params(args) -> dict:
    out = {}
    for name in _CLOSED_PARAMS[args.closed_form]:
        value = getattr(args, name)
        if name == "alpha" and value is not None:
            value = _parse_alpha(value)
        if value is None:
            raise UsageError(f"--closed-form {args.closed_form} requires --{name}")
        out[name] = value
    return out


def cmd_stability(args) -> int:
    kernel = read_kernel_csv(args.kernel)
    rep = stability_scan(kernel, args.delta, args.grid_size)
    print(f"stable={'true' if rep.stable else 'false'} max_abs={rep.max_abs!r} "
          f"omega_at_max={rep.omega_at_max!r} min_margin={rep.min_margin!r}")
    return EXIT_OK


def _test_function(args):
    """Return ``f`` and ``k -> f^(k)(x)`` for a named test function."""
    if args.f == "exp":
        return np.exp, lambda k: math.exp(args.x)
    if args.f == "sin":
        return np.sin, lambda k: math.sin(args.x + k * math.pi / 2)
    if not args.coeffs:
        raise UsageError("--f poly requires --coeffs c0,c1,...")
    try:
        c = [float(v) for v in args.coeffs.split(",")]
    except ValueError:
        raise UsageError(f"--coeffs must be comma separated numbers, got {args.coeffs!r}") from None
    poly = np.polynomial.Polynomial(c)
    return poly, lambda k: float(poly.deriv(k)(args.x)) if k else float(poly(args.x))


_DEFAULT_DELTAS = {"lanczos": (0.1, 8), "multiterm13": (0.5, 7), "forward-difference": (0.1, 8)}


def cmd_probe(args) -> int:
    f, deriv = _test_function(args)
    if args.estimator == "lanczos":
        est, m = continuous_estimator(legendre(), 1, 1), 1
    elif args.estimator == "multiterm13":
        est, m = continuous_estimator(legendre(), 1, 3), 1
    elif args.estimator == "forward-difference":
        est, m = kernel_estimator(finite_difference_kernel(1)), 1
    else:
        if not args.kernel:
            raise UsageError("--estimator kernel requires --kernel")
        kernel = read_kernel_csv(args.kernel)
        est, m = kernel_estimator(kernel), kernel.m
    start, count = _DEFAULT_DELTAS.get(args.estimator, (0.1, 8))
    start = args.delta0 or start
    count = args.count or count
    deltas = start * 2.0 ** -np.arange(count)
    rep = convergence_probe(est, f, deriv(m), args.x, deltas)
    if args.out:
        lines = ["delta,estimate,error"] + [f"{d!r},{e!r},{r!r}" for d, e, r in
                                            zip(rep.deltas.tolist(), rep.estimate.tolist(), rep.error.tolist())]
        Path(args.out).write_text("\n".join(lines) + "\n")
    if rep.exact:
        print("exact=true slope=nan")
    else:
        print(f"exact=false slope={rep.slope:.6f} halfwidth={rep.slope_halfwidth:.2e} "
              f"leading_coefficient={rep.leading_coefficient:.6e}")
    return EXIT_OK


def cmd_oracle_check(args) -> int:
    cases = mismatches = 0
    for N in range(1, args.max_N + 1):
        fams = [family_from_name(CENTERED_GRAM, N), family_from_name(KRAWTCHOUK, N),
                family_from_name(GRAM, N + 1)]
        fams += [family_from_name(HAHN, N, a) for a in (0, 1, 2)]
        for fam in fams:
            top = min(fam.max_degree, args.max_n)
            for n in range(top + 1):
                for m in range(n + 1):
                    cases += 1
                    k = design_derivative_filter(fam, m, n)
                    o = least_squares_oracle(0, weights(fam), m, n, offsets=fam.support)
                    if k.coeffs != o.coeffs:
                        mismatches += 1
                        print(f"mismatch: {fam} m={m} n={n}")
    print(f"cases={cases} mismatches={mismatches}")
    return EXIT_OK if mismatches == 0 else EXIT_MISMATCH


def cmd_figures(args) -> int:
    which = (1, 2, 3) if args.which == "all" else (int(args.which),)
    outdir = Path(args.outdir) if args.outdir else _outdir()
    for k in which:
        for name, (w, mag) in figure_tables(k).items():
            path = write_loglog_csv(outdir / f"{name}.csv", w, mag)
            print(f"wrote {path}")
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="diffint", description="Orthogonal-polynomial derivative and smoothing filters.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    d = sub.add_parser("design", help="design a discrete kernel and write it as CSV")
    d.add_argument("--family", required=True, choices=DISCRETE_FAMILIES)
    d.add_argument("-N", type=int, help="half width (gram: number of points)")
    d.add_argument("-m", type=int, help="derivative order (default 0)")
    d.add_argument("-n", type=int, required=True, help="highest degree, or smoothing degree with --smoothing")
    d.add_argument("--alpha", help="Hahn parameter (integer for minimum-R_alpha smoothers)")
    d.add_argument("--smoothing", action="store_true", help="design K_2n(x, 0) w(x)")
    d.add_argument("-o", "--out")
    d.set_defaults(func=cmd_design)

    a = sub.add_parser("apply", help="filter an x,y signal CSV")
    a.add_argument("--kernel", required=True)
    a.add_argument("--signal", required=True)
    a.add_argument("-o", "--out")
    a.set_defaults(func=cmd_apply)

    t = sub.add_parser("transfer", help="tabulate a characteristic function")
    t.add_argument("--kernel")
    t.add_argument("--closed-form", choices=sorted(CLOSED_FORMS))
    t.add_argument("--continuous", choices=("legendre", "chebyshev1"))
    t.add_argument("-N", type=int)
    t.add_argument("-m", type=int)
    t.add_argument("-n", type=int)
    t.add_argument("--alpha")
    t.add_argument("--omega0", type=float)
    t.add_argument("--delta", type=float, default=1.0)
    t.add_argument("--omega-max", type=float)
    t.add_argument("--points", type=int, default=64)
    t.add_argument("--loglog", action="store_true", help="write log10_omega,log10_abs instead")
    t.add_argument("-o", "--out")
    t.set_defaults(func=cmd_transfer)

    s = sub.add_parser("stability", help="scan |phi| of a smoothing kernel on (0, 2 pi)")
    s.add_argument("--kernel", required=True)
    s.add_argument("--delta", type=float, default=1.0)
    s.add_argument("--grid-size", type=int, default=4096)
    s.set_defaults(func=cmd_stability)

    r = sub.add_parser("probe", help="measure the convergence order of an estimator")
    r.add_argument("--estimator", required=True,
                   choices=("lanczos", "multiterm13", "forward-difference", "kernel"))
    r.add_argument("--kernel")
    r.add_argument("--f", required=True, choices=("exp", "sin", "poly"))
    r.add_argument("--coeffs", help="polynomial coefficients c0,c1,... for --f poly")
    r.add_argument("--x", type=float, default=0.0)
    r.add_argument("--delta0", type=float)
    r.add_argument("--count", type=int)
    r.add_argument("-o", "--out")
    r.set_defaults(func=cmd_probe)

    o = sub.add_parser("oracle-check", help="compare designs with the normal-equation oracle")
    o.add_argument("--max-N", type=int, default=6)
    o.add_argument("--max-n", type=int, default=6)
    o.set_defaults(func=cmd_oracle_check)

    f = sub.add_parser("figures", help="write the log-log tables of the transfer-function figures")
    f.add_argument("--which", default="all", choices=("1", "2", "3", "all"))
    f.add_argument("--outdir")
    f.set_defaults(func=cmd_figures)
    return p


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "count", None) is not None and args.count < 4:
            raise UsageError("--count must be at least 4")
        return args.func(args)
    except InputError as exc:
        _fail(exc)
        return EXIT_INPUT
    except DiffintError as exc:
        _fail(exc)
        return EXIT_SPEC
    except OSError as exc:
        _fail(f"{exc.strerror or exc}: {exc.filename}" if exc.filename else exc)
        return EXIT_IO


def _fail(msg) -> None:
    text = " ".join(str(msg).split())
    print(f"error: {text}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
