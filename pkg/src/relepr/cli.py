"""Command-line front end: ``relepr point`` and ``relepr sweep``.

Exit status: 0 on success, 1 on usage errors, 2 on I/O errors.
"""

import argparse
import csv
import io
import os
import sys

import numpy as np

from ._validation import DomainError, check_finite, check_positive
from .correlation import sample_outcomes
from .estimator import FEATURE_NAMES, EPRCorrelationTransformer, evaluate_point

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2

HEADER = ("xi", "chi") + FEATURE_NAMES
DELIMITERS = {"csv": ",", "tsv": "\t"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def parse_range(text):
    """Parse ``a:b:n`` into ``numpy.linspace(a, b, n)``; ``n == 1`` gives ``[a]``."""
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"range must look like a:b:n, got {text!r}")
    try:
        lo = check_finite(parts[0], "range start")
        hi = check_finite(parts[1], "range end")
        steps = int(parts[2])
    except (DomainError, ValueError) as exc:
        raise UsageError(f"bad range {text!r}: {exc}") from None
    if steps < 1:
        raise UsageError(f"range needs at least one step, got {steps}")
    if lo > hi:
        raise UsageError(f"range start {lo} exceeds end {hi}")
    return np.linspace(lo, hi, steps)


def format_value(x):
    # repr gives the shortest string that round-trips the double exactly.
    return repr(float(x))


def sweep_rows(xi_values, chi_values, mass=1.0, n_jobs=None):
    """Grid rows ordered xi-major, chi-minor: ``[xi, chi, *features]``."""
    grid = np.array([(xi, chi) for xi in xi_values for chi in chi_values], dtype=float)
    features = EPRCorrelationTransformer(mass=mass, n_jobs=n_jobs).fit_transform(grid)
    return np.hstack([grid, features])


def render_table(rows, fmt="csv"):
    buf = io.StringIO()
    writer = csv.writer(buf, delimiter=DELIMITERS[fmt], lineterminator="\n")
    writer.writerow(HEADER)
    for row in rows:
        writer.writerow([format_value(v) for v in row])
    return buf.getvalue()


def gnuplot_script(data_path, fmt="csv"):
    sep = "," if fmt == "csv" else "\\t"
    name = os.path.basename(data_path)
    return (
        f'set datafile separator "{sep}"\n'
        "set key autotitle columnhead\n"
        "set xlabel 'chi'\n"
        "set ylabel 'CHSH'\n"
        f"plot '{name}' using 2:6 with points title 'naive', \\\n"
        f"     '{name}' using 2:7 with points title 'compensated', \\\n"
        "     2*sqrt(2) with lines dashtype 2 title 'Tsirelson'\n"
    )


def _write(path, text):
    try:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror or exc}") from exc


def cmd_point(args, out=None):
    out = out or sys.stdout
    xi = check_finite(args.xi, "xi")
    chi = check_finite(args.chi, "chi")
    row = evaluate_point(xi, chi, check_positive(args.mass, "mass"))
    trip = row["triplet_amps"]
    lines = [
        f"xi                    {format_value(xi)}",
        f"chi                   {format_value(chi)}",
        f"delta (closed form)   {row['delta']:.15g}",
        f"delta (matrix)        {row['delta_matrix']:.15g}",
        f"singlet amplitude     {_cfmt(row['singlet_amp'])}",
        "triplet amplitudes    "
        f"(uu+dd) {_cfmt(trip[0])}  (uu-dd) {_cfmt(trip[1])}  (ud+du) {_cfmt(trip[2])}",
        f"E_zz                  {row['e_zz']:.15g}",
        f"E_yy                  {row['e_yy']:.15g}",
        f"CHSH naive            {row['chsh_naive']:.15g}",
        f"CHSH compensated      {row['chsh_compensated']:.15g}",
    ]
    if args.shots:
        counts, est = sample_outcomes(row["state"], (0, 0, 1), (0, 0, 1), args.shots, args.seed)
        lines.append(f"sampled E_zz          {est:.6f}  counts(++,+-,-+,--)={counts.tolist()}")
    out.write("\n".join(lines) + "\n")
    return EXIT_OK


def _cfmt(z):
    z = complex(z)
    if abs(z.imag) < 1e-15:
        return f"{z.real:.15g}"
    return f"{z.real:.15g}{z.imag:+.15g}j"


def cmd_sweep(args, out=None):
    out = out or sys.stdout
    mass = check_positive(args.mass, "mass")
    xi_values = parse_range(args.xi_range)
    chi_values = parse_range(args.chi_range)
    text = render_table(sweep_rows(xi_values, chi_values, mass, args.jobs), args.format)
    if args.out == "-":
        out.write(text)
        return EXIT_OK
    _write(args.out, text)
    if args.gnuplot:
        _write(args.out + ".gp", gnuplot_script(args.out, args.format))
    return EXIT_OK


def build_parser():
    parser = _Parser(prog="relepr", description="Spin correlations of an EPR pair seen by moving observers.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    point = sub.add_parser("point", help="evaluate one (xi, chi) pair")
    point.add_argument("--xi", type=float, required=True, help="particle rapidity")
    point.add_argument("--chi", type=float, required=True, help="observer rapidity")
    point.add_argument("--mass", type=float, default=1.0)
    point.add_argument("--shots", type=int, default=0, help="also sample this many z-z measurements")
    point.add_argument("--seed", type=int, default=None)
    point.set_defaults(func=cmd_point)

    sweep = sub.add_parser("sweep", help="tabulate a (xi, chi) grid")
    sweep.add_argument("--xi-range", required=True, metavar="A:B:N")
    sweep.add_argument("--chi-range", required=True, metavar="A:B:N")
    sweep.add_argument("--mass", type=float, default=1.0)
    sweep.add_argument("--out", default="-", help="output file, '-' for stdout")
    sweep.add_argument("--format", choices=sorted(DELIMITERS), default="csv")
    sweep.add_argument("--gnuplot", action="store_true", help="write OUT.gp next to the data")
    sweep.add_argument("--jobs", type=int, default=None, help="parallel workers")
    sweep.set_defaults(func=cmd_sweep)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DomainError) as exc:
        print(f"relepr: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"relepr: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
