"""Command-line front end.

Exit codes: 0 on success, 1 when a verification fails, 2 for usage and
parse errors.  Diagnostics go to stderr.
"""

import argparse
import sys
from math import comb

from . import serialize as ser
from .basis import structure_constants
from .engine import enumerate_basis, multiply, rewrite
from .errors import InvalidInput, InvalidParameter, VerificationFailure
from .expr import parse_and_evaluate
from .hecke import verify_identities
from .quotient import quiver_presentation, verify_truncation_iso
from .report import Report
from .residues import enumerate_admissible, morita_partition
from .verify import SUITES, run_suite

__all__ = ["main", "build_parser"]

U64 = 2 ** 64


def _seed(text):
    value = int(text)
    if not 0 <= value < U64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def _n(text):
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f"n must be >= 2, got {value}")
    return value


def _seq(seq):
    return "(" + ",".join(map(str, seq)) + ")"


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--seed", type=_seed, default=argparse.SUPPRESS,
                        help="seed for sampled checks (default 0)")
    parser = argparse.ArgumentParser(
        prog="klr", parents=[common],
        description="Level-1 cyclotomic KLR algebras R_n on the cyclic quiver.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def command(name, help_text, *, n=True):
        p = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        if n:
            p.add_argument("n", type=_n)
        return p

    command("idempotents", "admissible residue sequences (nonzero e(i))")
    command("basis", "canonical basis of R_n")
    command("dim", "dimension of R_n")
    command("rewrite", "canonical form of an expression").add_argument("expr")
    p = command("mult", "canonical form of a product of two expressions")
    p.add_argument("left")
    p.add_argument("right")
    command("morita", "Morita classes of the idempotents")
    command("quiver", "Brauer-line quiver arrows and their relations")
    command("truncation", "check e R_n e against R_(n-1)")
    command("reptheory", "Specht, simple and projective dimensions of the block")
    p = command("verify", "run a verification suite")
    p.add_argument("--suite", choices=SUITES, default="all")
    p = command("cache", "write or read a structure-constant cache file")
    mode = p.add_mutually_exclusive_group(required=True)
    # without PATH the file lives in the cache directory ($KLR_CACHE_DIR)
    mode.add_argument("--write", nargs="?", const="", metavar="PATH")
    mode.add_argument("--read", nargs="?", const="", metavar="PATH")
    return parser


def _emit(args, data, text):
    print(ser.dumps(data) if args.json else text)


def _report_exit(report, err):
    for c in report.checks:
        if not c.passed:
            print(f"FAILED: {c.name}", file=err)
    return 0 if report.passed else 1


def _run(args, err):
    n = args.n
    if args.command == "idempotents":
        seqs = enumerate_admissible(n)
        _emit(args, [list(s) for s in seqs], "\n".join(_seq(s) for s in seqs))
    elif args.command == "basis":
        basis = enumerate_basis(n)
        text = "\n".join(f"{k:4d}  {b}  (degree {b.degree})" for k, b in enumerate(basis))
        _emit(args, ser.basis_to_json(n, basis), text)
    elif args.command == "dim":
        dim = len(enumerate_basis(n))
        _emit(args, {"n": n, "dim": dim}, str(dim))
    elif args.command in ("rewrite", "mult"):
        if args.command == "rewrite":
            value = rewrite(parse_and_evaluate(args.expr, n))
        else:
            value = multiply(parse_and_evaluate(args.left, n), parse_and_evaluate(args.right, n))
        _emit(args, ser.element_to_json(value), str(value))
    elif args.command == "morita":
        classes = morita_partition(n)
        text = "\n".join(f"class {k} ({len(v)}): " + " ".join(_seq(s) for s in v)
                         for k, v in classes.items())
        _emit(args, ser.morita_to_json(n, classes), text)
    elif args.command == "quiver":
        pres = quiver_presentation(n, strict=False)
        lines = [f"vertices 1..{n - 1}; {pres.convention}"]
        lines += [f"  i_{t} = {_seq(s)}" for t, s in pres.representatives.items()]
        lines += [f"  {name}: {s} -> {t} = {x}" for name, (s, t, x) in pres.arrows.items()]
        lines += ["relations:"] + ["  " + c.line() for c in pres.relations]
        lines += ["further relations at vertex 1:"] + [f"  {r}" for r in pres.junction]
        _emit(args, ser.quiver_to_json(pres), "\n".join(lines))
        return 0 if pres.verified else _report_exit(_as_report(pres.relations, "quiver"), err)
    elif args.command == "truncation":
        if n < 3:
            raise InvalidParameter(f"truncation needs n >= 3, got {n}")
        rep = verify_truncation_iso(n, strict=False)
        checks = list(rep.relation_checks)
        report = _as_report(checks, f"truncation n={n}")
        report.add("basis bijection with coefficient 1", rep.basis_bijection_verified)
        report.add("structure constants agree", rep.structure_constants_match)
        report.add("dim e R_n e = dim R_(n-1) = C(2(n-2), n-2)",
                   rep.dim_truncated == rep.dim_target == comb(2 * (n - 2), n - 2),
                   f"{rep.dim_truncated} vs {rep.dim_target}")
        data = ser.report_to_json(report)
        data.update(n=n, dim_truncated=rep.dim_truncated, dim_target=rep.dim_target)
        _emit(args, data, str(report))
        return _report_exit(report, err)
    elif args.command == "reptheory":
        rep = verify_identities(n)
        data = {"n": n, "specht_dims": rep.specht_dims, "simple_dims": rep.simple_dims,
                "projective_dims": rep.projective_dims,
                "identities": [ser.check_to_json(c) for c in rep.identities]}
        _emit(args, data, str(rep))
        return _report_exit(_as_report(rep.identities, "reptheory"), err)
    elif args.command == "verify":
        report = run_suite(n, args.suite, seed=args.seed)
        _emit(args, ser.report_to_json(report), str(report))
        return _report_exit(report, err)
    elif args.command == "cache":
        writing = args.write is not None
        path = (args.write if writing else args.read) or ser.default_cache_path(n)
        if writing:
            table = structure_constants(n)
            ser.write_cache(table, path)
        else:
            table = ser.read_cache(path, seed=args.seed)
            if table.n != n:
                raise VerificationFailure("cache n", f"file holds n={table.n}, expected {n}")
        digest = ser.table_to_json(table)["sha256"]
        data = {"n": n, "dim": len(table), "nonzero_products": len(table.products),
                "sha256": digest, "path": str(path)}
        verb = "wrote" if writing else "validated"
        _emit(args, data, f"{verb} {data['path']}: n={n}, {len(table)} basis elements, "
                          f"{len(table.products)} nonzero products, sha256 {digest}")
    return 0


def _as_report(checks, title):
    return Report(title, list(checks))


def main(argv=None, err=None):
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    args.json = getattr(args, "json", False)
    args.seed = getattr(args, "seed", 0)
    try:
        return _run(args, err)
    except VerificationFailure as exc:
        print(f"FAILED: {exc}", file=err)
        return 1
    except (InvalidInput, InvalidParameter) as exc:
        print(f"error: {exc}", file=err)
        return 2


if __name__ == "__main__":
    sys.exit(main())
