"""Command-line driver: ``freediv {bezout,saito,a4,all}``.

Exit codes: 0 when every check passes, 1 when a check fails, 2 on usage or
parse errors.  JSON goes to --out (or stdout), the summary to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from gmpy2 import mpq

from . import __version__
from .poly import PolyError, PolyParseError, TermBudgetExceeded, parse_poly, term_budget, var_table
from .polmat import matrix_from_json, matrix_to_json
from .report import CheckReport

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--out", type=Path, help="write the JSON output here")
    p.add_argument("--json", action="store_true", help="also print JSON to stdout when --out is given")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--term-budget", type=int, default=None, help="maximum terms in any intermediate polynomial")
    return p


def _numeric(p: argparse.ArgumentParser) -> None:
    p.add_argument("--tau", help='complex "a+bi" in the upper half-plane (default: three fixed contexts)')
    p.add_argument("--samples", type=int, default=20)
    p.add_argument("--terms", type=int, default=64)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--fd-step", type=float, default=1e-4)
    p.add_argument("--mutate", metavar="REF", help="perturb one coefficient, e.g. A[2,3] or M[1,2]")
    p.add_argument("--mutate-delta", default="1", help="rational added to the coefficient (default 1)")


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="freediv", description="Exact and numeric checks for free divisors "
                     "and discriminant matrices.")
    parser.add_argument("--version", action="version", version=f"freediv {__version__}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    b = sub.add_parser("bezout", parents=[common], help="Bezout and modified Bezout matrices")
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--convention", choices=("x-y", "y-x"), default="x-y")
    b.add_argument("--emit", choices=("matrix", "det", "report"), default="report")

    s = sub.add_parser("saito", parents=[common], help="Saito's criterion for a divisor and a matrix")
    s.add_argument("f_file", type=Path, help="polynomial text, or JSON {\"vars\": [...], \"poly\": \"...\"}")
    s.add_argument("matrix_file", type=Path, help='JSON {"vars": [...], "rows": [[...]]}')
    s.add_argument("--no-squarefree", action="store_true", help="skip the Monte Carlo squarefree test")
    s.add_argument("--trials", type=int, default=8)

    a = sub.add_parser("a4", parents=[common], help="matrices M, L, N, A: symbolic and numeric suites")
    mode = a.add_mutually_exclusive_group()
    mode.add_argument("--symbolic", action="store_true")
    mode.add_argument("--numeric", action="store_true")
    _numeric(a)

    al = sub.add_parser("all", parents=[common], help="every suite, in registry order")
    _numeric(al)
    return parser


# ---------------------------------------------------------------------------

def _emit(args, text: str) -> None:
    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        args.out.write_text(text if text.endswith("\n") else text + "\n")
    if not args.out or args.json:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _report_exit(args, rep: CheckReport) -> int:
    rep.seed = args.seed
    print(rep.summary(), file=sys.stderr)
    _emit(args, rep.to_json())
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_bezout(args) -> int:
    from .bezout import bezout_matrix, modified_bezout_matrix, verify_section5
    from .polmat import determinant

    if not 1 <= args.n <= 6:
        raise UsageError(f"--n must be in 1..6, got {args.n}")
    rep = verify_section5(args.n, args.convention, seed=args.seed) if args.n >= 2 else \
        CheckReport(suite=f"bezout[n=1,{args.convention}]")
    if args.emit == "report":
        return _report_exit(args, rep)
    print(rep.summary(), file=sys.stderr)
    if args.emit == "det":
        _emit(args, str(determinant(bezout_matrix(args.n, args.convention))))
    else:
        _emit(args, json.dumps({"B": matrix_to_json(bezout_matrix(args.n, args.convention)),
                                "Bprime": matrix_to_json(modified_bezout_matrix(args.n, args.convention))},
                               indent=2))
    return EXIT_OK if rep.passed else EXIT_FAIL


def _read(path: Path) -> str:
    try:
        return path.read_text()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def cmd_saito(args) -> int:
    from .saito import FAILED, check_discriminant_matrix

    try:
        mat = matrix_from_json(_read(args.matrix_file))
    except json.JSONDecodeError as e:
        raise UsageError(f"{args.matrix_file}: invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from None
    text = _read(args.f_file)
    table = mat.table
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as e:
            raise UsageError(f"{args.f_file}: invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from None
        if not isinstance(obj, dict) or "poly" not in obj:
            raise UsageError(f'{args.f_file}: JSON needs a "poly" field')
        if "vars" in obj:
            table = var_table(obj["vars"])
        stripped = str(obj["poly"])
    f = parse_poly(stripped, table)
    if f.table != mat.table:
        raise UsageError(f"variable tables differ: {list(f.table)} vs {list(mat.table)}")
    rep = check_discriminant_matrix(f, mat, check_squarefree=not args.no_squarefree, seed=args.seed,
                                    trials=args.trials)
    print(f"[saito] {rep.overall}: det matches={rep.det_matches} scalar={rep.scalar} "
          f"divisibility failures={rep.divisibility_failures} squarefree={rep.squarefree_verdict}",
          file=sys.stderr)
    _emit(args, rep.to_json())
    return EXIT_FAIL if rep.overall == FAILED else EXIT_OK


def _matrices(args):
    from . import a4

    mats = a4.build_matrices()
    if args.mutate:
        try:
            name, i, j = a4.parse_entry_ref(args.mutate)
            delta = mpq(args.mutate_delta)
            if delta == 0:
                raise ValueError("--mutate-delta must be nonzero")
            mats = a4.mutate(mats, name, i, j, delta)
        except ValueError as e:
            raise UsageError(str(e)) from None
    return mats


def _taus(args):
    from .numerics import DEFAULT_TAUS, parse_complex

    if args.tau is None:
        return DEFAULT_TAUS
    try:
        tau = parse_complex(args.tau)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if not tau.imag > 0:
        raise UsageError(f"--tau must lie in the upper half-plane, got {args.tau!r}")
    return (tau,)


def _check_numeric_flags(args) -> None:
    if args.samples < 1:
        raise UsageError("--samples must be positive")
    if args.terms < 8:
        raise UsageError("--terms must be at least 8")
    if not args.tol > 0 or not args.fd_step > 0:
        raise UsageError("--tol and --fd-step must be positive")


def _a4_report(args, symbolic: bool, numeric: bool) -> CheckReport:
    from . import a4
    from .numerics import numeric_suite

    taus = _taus(args)
    _check_numeric_flags(args)
    mats = _matrices(args)
    rep = CheckReport(suite="a4", seed=args.seed)
    if symbolic:
        rep.extend(a4.symbolic_suite(mats), "symbolic.")
        rep.extend(a4.grassmannian_check(), "symbolic.")
    if numeric:
        rep.extend(numeric_suite(taus, args.samples, args.terms, args.tol, args.fd_step, args.seed, mats),
                   "numeric.")
    if args.mutate:
        rep.add("mutation_detected", not rep.passed, f"injected mutation {args.mutate} "
                f"(+{args.mutate_delta}) caught by {len(rep.failures())} checks")
    return rep.finish()


def cmd_a4(args) -> int:
    both = not (args.symbolic or args.numeric)
    return _report_exit(args, _a4_report(args, args.symbolic or both, args.numeric or both))


def cmd_all(args) -> int:
    from .bezout import vandermonde_identities, verify_section5
    from .saito import fixture_suite
    from .wp import formal_suite

    _taus(args)
    _check_numeric_flags(args)
    rep = CheckReport(suite="all", seed=args.seed)
    for n in range(2, 7):
        rep.extend(verify_section5(n, seed=args.seed), f"bezout.n{n}.")
    for n in range(2, 6):
        rep.extend(vandermonde_identities(n), f"vandermonde.n{n}.")
    rep.extend(fixture_suite(args.seed), "saito.")
    rep.extend(formal_suite(), "wp.")
    rep.extend(_a4_report(args, True, True), "")
    return _report_exit(args, rep.finish())


COMMANDS = {"bezout": cmd_bezout, "saito": cmd_saito, "a4": cmd_a4, "all": cmd_all}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as e:  # --help / --version
        return int(e.code or 0)
    try:
        if args.term_budget is not None:
            if args.term_budget < 1:
                raise UsageError("--term-budget must be positive")
            with term_budget(args.term_budget):
                return COMMANDS[args.command](args)
        return COMMANDS[args.command](args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except PolyParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except TermBudgetExceeded as e:
        print(f"error: {e}; raise --term-budget", file=sys.stderr)
        return EXIT_USAGE
    except PolyError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as e:
        from .numerics import DomainError
        if not isinstance(e, DomainError):
            raise
        print(f"domain error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
