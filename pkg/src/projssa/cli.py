"""Command-line front end: ``projssa {decompose,reconstruct,bench,generate}``.

Errors are reported on stderr as a single line ``error: <code>: <message>``.
Exit codes: 0 success, 2 usage or config error, 3 numeric or validation error.
"""

import argparse
import logging
import sys

import numpy as np

from . import bench, signals
from .decomposition import basic_ssa_decompose, contributions
from .errors import ConfigInvalid, SSAError
from .io import read_basis, read_series, write_series, write_table
from .projection import ProjectionSpec, polynomial_basis, proj_ssa_decompose
from .reconstruction import Grouping, reconstruct
from .series import as_series, check_window

log = logging.getLogger("projssa")

EXIT_USAGE = 2
EXIT_NUMERIC = 3


def _decompose(args):
    x = as_series(read_series(args.input))
    window = check_window(x.size, args.window)
    K = x.size - window + 1
    row = read_basis(args.row_basis) if args.row_basis else (
        polynomial_basis(K, args.row_proj - 1) if args.row_proj > 0 else None)
    col = read_basis(args.col_basis) if args.col_basis else (
        polynomial_basis(window, args.col_proj - 1) if args.col_proj > 0 else None)
    for name, basis in (("row", row), ("column", col)):
        if basis is not None and basis.dropped:
            log.warning("%s basis: dropped %d linearly dependent vector(s)", name, basis.dropped)
    if row is None and col is None:
        return basic_ssa_decompose(x, window)
    return proj_ssa_decompose(x, window, ProjectionSpec(row, col))


def cmd_decompose(args):
    d = _decompose(args)
    contrib = contributions(d)
    if contrib.size == 0:
        contrib = np.zeros(len(d))
    write_table(f"{args.output}_triples.csv", {
        "index": np.arange(1, len(d) + 1),
        "kind": d.kinds,
        "magnitude": d.magnitudes,
        "contribution": contrib,
    })
    names = [f"ET{i}" for i in range(1, len(d) + 1)]
    write_table(f"{args.output}_left.csv", dict(zip(names, d.U.T)))
    write_table(f"{args.output}_right.csv", dict(zip(names, d.V.T)))


def cmd_reconstruct(args):
    d = _decompose(args)
    if args.groups:
        grouping = Grouping.parse(args.groups)
    elif d.n_special:
        grouping = Grouping({"trend": range(1, d.n_special + 1)})
    else:
        raise SSAError("--groups is required when no projection is performed")
    parts = reconstruct(d, grouping)
    write_table(args.output, {"index": np.arange(1, d.length + 1), **parts})


def cmd_bench(args):
    overrides = {k: getattr(args, k) for k in bench.CONFIG_KEYS}
    overrides = {k: (str(v) if v is not None else None) for k, v in overrides.items()}
    cfg = bench.load_config(args.config, overrides) if args.config else \
        bench.parse_config("", overrides)
    result = bench.run_experiment(cfg, workers=args.workers)
    if args.output == "-":
        sys.stdout.write(result.to_csv())
    else:
        result.to_csv(args.output)


def _floats(text, count=None):
    vals = [float(bench._eval_number(t)) for t in text.split(",")]
    if count is not None and len(vals) not in (count if isinstance(count, tuple) else (count,)):
        raise SSAError(f"expected {count} comma-separated values, got {text!r}")
    return vals


def root_spec_from_args(args):
    roots = []
    if args.linear:
        a, b = _floats(args.linear, 2)
        roots.append(signals.linear(a, b))
    if args.cubic:
        roots.append(signals.polynomial((0.0, 0.0, 0.0, _floats(args.cubic, 1)[0])))
    if args.poly:
        roots.append(signals.polynomial(_floats(args.poly)))
    for text in args.sine or ():
        vals = _floats(text, (2, 3))
        roots.append(signals.sine(*vals))
    for text in args.exp or ():
        roots.append(signals.exponential(*_floats(text, 2)))
    for text in args.root or ():
        fields = text.split(",")
        if len(fields) not in (4, 5):
            raise signals.InvalidRootSpec(
                f"--root expects rho,omega,multiplicity,c0:c1:...[,phase], got {text!r}")
        rho, omega = (float(bench._eval_number(f)) for f in fields[:2])
        coefs = tuple(float(bench._eval_number(c)) for c in fields[3].split(":"))
        phase = float(bench._eval_number(fields[4])) if len(fields) == 5 else 0.0
        roots.append(signals.Root(rho, omega, int(fields[2]), coefs, phase))
    return signals.RootSpec(roots)


def cmd_generate(args):
    if args.length < 1:
        raise signals.InvalidSeries(f"length must be positive, got {args.length}")
    x = signals.generate(root_spec_from_args(args), args.length)
    if args.sigma > 0:
        x = x + signals.gaussian_noise(args.length, args.sigma, args.seed)
    write_series(args.output, x)


def _add_decompose_flags(p):
    p.add_argument("--input", required=True, help="series CSV ('-' for stdin)")
    p.add_argument("--window", "-L", type=int, required=True, help="window length L")
    p.add_argument("--row-proj", "-q", type=int, default=0,
                   help="row projection on polynomials of degree q-1 (0: none)")
    p.add_argument("--col-proj", "-p", type=int, default=0,
                   help="column projection on polynomials of degree p-1 (0: none)")
    p.add_argument("--row-basis", help="CSV with row basis vectors (length K) in columns")
    p.add_argument("--col-basis", help="CSV with column basis vectors (length L) in columns")


def build_parser():
    parser = argparse.ArgumentParser(prog="projssa", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="write eigentriples of a series")
    _add_decompose_flags(p)
    p.add_argument("--output", required=True,
                   help="output prefix for _triples.csv, _left.csv and _right.csv")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("reconstruct", help="reconstruct grouped components")
    _add_decompose_flags(p)
    p.add_argument("--groups", help="e.g. 'trend=1,2;season=3-4' (default: trend=1..q+p)")
    p.add_argument("--output", default="-", help="output CSV ('-' for stdout)")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("bench", help="run a Monte Carlo comparison")
    p.add_argument("--config", help="config file or shipped config name: "
                   + ", ".join(bench.shipped_configs()))
    p.add_argument("--length", "-N", type=int)
    p.add_argument("--window", "-L", type=int)
    p.add_argument("--trend")
    p.add_argument("--amplitude")
    p.add_argument("--omegas", help="start:stop:step or comma list")
    p.add_argument("--phases")
    p.add_argument("--sigma")
    p.add_argument("--replications", "-M", type=int)
    p.add_argument("--base-seed", dest="base_seed", type=int)
    p.add_argument("--methods", help="';'-separated, e.g. 'projssa(1,1);regression(1)'")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--output", default="-", help="result CSV ('-' for stdout)")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("generate", help="write a synthetic series")
    p.add_argument("--length", "-N", type=int, required=True)
    p.add_argument("--linear", metavar="A,B", help="a*n + b")
    p.add_argument("--cubic", metavar="C", help="c*n**3")
    p.add_argument("--poly", metavar="C0,C1,...", help="sum_j c_j n**j")
    p.add_argument("--sine", action="append", metavar="A,OMEGA[,PHASE]")
    p.add_argument("--exp", action="append", metavar="SCALE,RATE")
    p.add_argument("--root", action="append", metavar="RHO,OMEGA,MULT,C0:C1:...[,PHASE]")
    p.add_argument("--sigma", type=float, default=0.0, help="Gaussian noise level")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", default="-")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None):
    logging.basicConfig(format="warning: %(message)s", level=logging.WARNING)
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except ConfigInvalid as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SSAError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except OSError as exc:
        print(f"error: io-error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return 0


if __name__ == "__main__":
    sys.exit(main())
