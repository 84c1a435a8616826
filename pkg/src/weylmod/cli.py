"""Command-line driver: ``weylmod <command> [file] [options]``.

Commands: groebner, bernstein, invariants, verify, kolchin. Exit status is
0 on success, 1 on bad input, 2 when an internal invariant fails and 3 when
``verify`` finds a disagreement in the range where the Kolchin formula must
hold.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path
from typing import Sequence

from .bernstein import BernsteinReport, report_from_basis
from .groebner import buchberger
from .notation import ParseError, format_binomial, format_element, format_monomial_poly, format_rational, parse
from .numpoly import NumericalPolynomial, PointSet, kolchin_polynomial
from .oracle import DimensionTable, build_table, default_r_max

EXIT_OK, EXIT_INPUT, EXIT_INVARIANT, EXIT_MISMATCH = 0, 1, 2, 3


class InputError(Exception):
    pass


def _chi_line(chi: NumericalPolynomial) -> str:
    return f"chi = {format_binomial(chi)} = {format_monomial_poly(chi.to_monomial())}"


def report_json(rep: BernsteinReport) -> dict:
    """JSON view of a report; rationals are serialized as "p/q" strings."""
    return {
        "n": rep.n,
        "m": rep.m,
        "groebner": [format_element(g) for g in rep.groebner_basis],
        "chi_binomial": list(rep.chi.binom_coeffs),
        "chi_monomial": [format_rational(c) for c in rep.chi.to_monomial()],
        "d": rep.d,
        "a_d": rep.a_d,
        "multiplicity": rep.multiplicity,
        "literal_paper_multiplicity": rep.literal_paper_multiplicity,
        "delta": rep.delta,
        "krull_type": rep.krull_type,
        "krull_dim": rep.krull_dim,
    }


def table_json(table: DimensionTable) -> dict:
    return {
        "rows": [{"r": row.r, "dim": row.dim, "chi": row.chi_at_r, "agree": row.agree} for row in table.rows],
        "threshold": table.threshold,
        "guaranteed_from": table.guaranteed_from,
        "mismatch": table.mismatch,
    }


_POINT_RE = re.compile(r"\(\s*(\d+(?:\s*,\s*\d+)*)\s*\)")


def parse_points(text: str, m: int | None) -> PointSet:
    """Parse ``"(2,0);(0,3)"``; the empty string is the empty set (needs ``m``)."""
    pts = []
    for chunk in (c.strip() for c in text.split(";")):
        if not chunk:
            continue
        mt = _POINT_RE.fullmatch(chunk)
        if mt is None:
            raise InputError(f"malformed point {chunk!r}; expected (a,b,...)")
        pts.append(tuple(int(v) for v in mt.group(1).split(",")))
    dims = {len(p) for p in pts}
    if len(dims) > 1:
        raise InputError("points have different lengths")
    if m is None:
        if not dims:
            raise InputError("--m is required for an empty point set")
        m = dims.pop()
    elif dims and dims != {m}:
        raise InputError(f"points do not have length --m {m}")
    if m < 1:
        raise InputError("--m must be positive")
    return PointSet.of(m, pts)


def _read(path: str | None):
    if path is None:
        raise InputError("a presentation file is required for this command")
    try:
        text = Path(path).read_text(encoding="utf-8") if path != "-" else sys.stdin.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    return parse(text)


def _print_groebner(rep: BernsteinReport, out) -> None:
    for k, g in enumerate(rep.groebner_basis, start=1):
        print(f"g{k} = {format_element(g)}", file=out)


def _print_invariants(rep: BernsteinReport, out) -> None:
    print(f"d = {rep.d}", file=out)
    print(f"a_d = {rep.a_d}", file=out)
    print(f"a_2n = {rep.a_2n}", file=out)
    print(f"multiplicity = {rep.multiplicity}", file=out)
    print(f"literal_paper_multiplicity = {rep.literal_paper_multiplicity}", file=out)
    print(f"delta = {rep.delta}", file=out)
    print(f"krull_type = {rep.krull_type}", file=out)
    print(f"krull_dim = {rep.krull_dim}", file=out)


def _print_table(table: DimensionTable, out) -> None:
    print(f"{'r':>4} {'dim':>10} {'chi(r)':>10}  agree", file=out)
    for row in table.rows:
        print(f"{row.r:>4} {row.dim:>10} {row.chi_at_r:>10}  {'yes' if row.agree else 'NO'}", file=out)
    start = "none" if table.threshold is None else f"r = {table.threshold}"
    print(f"agreement from: {start}", file=out)
    print(f"formula guaranteed from: r = {table.guaranteed_from}", file=out)
    if table.mismatch:
        print("MISMATCH: chi(r) differs from dim M_r where it must agree", file=out)


class _Parser(argparse.ArgumentParser):
    # usage errors are bad input, so keep status 2 for invariant failures
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="weylmod", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=["groebner", "bernstein", "invariants", "verify", "kolchin"])
    p.add_argument("file", nargs="?", help="presentation file ('-' for stdin)")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--reduce-basis", action="store_true", help="drop basis elements with redundant leading monomials")
    p.add_argument("--rmax", type=int, default=None, help="largest r tabulated by verify")
    p.add_argument("--points", default=None, help='point set for kolchin, e.g. "(2,0);(0,3)"')
    p.add_argument("--m", type=int, default=None, help="ambient dimension for kolchin")
    return p


def run(args: argparse.Namespace, out=None) -> int:
    out = sys.stdout if out is None else out
    if args.command == "kolchin":
        if args.points is None:
            raise InputError("kolchin needs --points")
        A = parse_points(args.points, args.m)
        omega = kolchin_polynomial(A)
        if args.json:
            json.dump(
                {
                    "m": A.dim,
                    "points": [list(p) for p in A],
                    "chi_binomial": list(omega.binom_coeffs),
                    "chi_monomial": [format_rational(c) for c in omega.to_monomial()],
                },
                out,
            )
            print(file=out)
        else:
            print(f"omega = {format_binomial(omega)} = {format_monomial_poly(omega.to_monomial())}", file=out)
        return EXIT_OK

    P = _read(args.file)
    if args.rmax is not None and args.rmax < 0:
        raise InputError("--rmax must be nonnegative")
    G = buchberger(P.relations, reduce_basis=args.reduce_basis)
    rep = report_from_basis(G, P.n, P.m)
    status = EXIT_OK
    if args.command == "verify":
        r_max = default_r_max(G) if args.rmax is None else args.rmax
        table = build_table(G, P.n, P.m, r_max)
        status = EXIT_MISMATCH if table.mismatch else EXIT_OK
    if args.json:
        data = report_json(rep)
        if args.command == "verify":
            data["table"] = table_json(table)
        json.dump(data, out)
        print(file=out)
        return status
    if args.command == "groebner":
        _print_groebner(rep, out)
    elif args.command == "bernstein":
        print(_chi_line(rep.chi), file=out)
    elif args.command == "invariants":
        _print_invariants(rep, out)
    else:
        _print_table(table, out)
    return status


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_intermixed_args(argv)
    try:
        return run(args)
    except ParseError as exc:
        print(f"{args.file or '<input>'}: parse error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AssertionError as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT


__all__ = ["build_parser", "main", "parse_points", "report_json", "run", "table_json"]

if __name__ == "__main__":
    sys.exit(main())
