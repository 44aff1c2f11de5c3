"""Command-line front end.

Every subcommand prints one JSON report document on stdout (``gen`` prints
the generated matrix file instead). Exit status: 0 on success, 1 when the
mathematics refuses the request (a hypothesis fails for the input), 2 for
usage and input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import decomp, inverses, randgen, solvers
from .classify import cepd_equivalences, check_cepd_theorems, check_pi_theorems, classify
from .errors import InputError, MathError
from .identities import IdentityReport, verify_identities
from .matfile import FORMATS, matrix_to_json, parse_matrix, serialize_matrix
from .matrix import Tolerance

GEN_FAMILIES = ("index", "cepd", "pi", "pi-powers")


class UsageError(Exception):
    pass


def _global_flags(parser: argparse.ArgumentParser, suppress: bool) -> None:
    default = argparse.SUPPRESS if suppress else None
    g = parser.add_argument_group("global options")
    g.add_argument("--tol-rank", type=float, default=default, metavar="RTOL",
                   help="relative singular-value threshold (default 1e-10)")
    g.add_argument("--tol-eq", type=float, default=default, metavar="ATOL",
                   help="normalized residual threshold for equality (default 1e-9)")
    g.add_argument("--format", choices=FORMATS, default=default,
                   help="matrix file format (input is sniffed when omitted; gen writes json)")
    g.add_argument("--seed", type=int, default=default, help="generator seed (gen only)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cepdkit", description=__doc__.splitlines()[0])
    _global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_):
        p = sub.add_parser(name, help=help_)
        _global_flags(p, suppress=True)
        return p

    p = add("inv", "compute a generalized inverse")
    p.add_argument("--kind", choices=inverses.KINDS, required=True)
    p.add_argument("matrix", help="matrix file, or - for stdin")

    p = add("classify", "matrix-class flags with residuals")
    p.add_argument("matrix")

    p = add("decompose", "SVD, Hartwig-Spindelboeck or core-nilpotent decomposition")
    p.add_argument("--kind", choices=("svd", "hs", "corenil"), required=True)
    p.add_argument("matrix")

    p = add("solve", "solve a linear system with a generalized inverse")
    p.add_argument("--method", choices=solvers.METHODS, required=True)
    p.add_argument("--rhs", required=True, help="n x 1 right-hand side file")
    p.add_argument("matrix")

    p = add("check", "identity, CEPD-equivalence and partial-isometry theorem reports")
    p.add_argument("matrix")

    p = add("gen", "print a seeded random structured matrix")
    p.add_argument("--family", choices=GEN_FAMILIES, default="index")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--hermitian", action="store_true", help="pi-powers: use a Hermitian unitary core")
    return parser


def _read(path: str, fmt):
    if path == "-":
        data = sys.stdin.buffer.read()
    else:
        try:
            with open(path, "rb") as fh:
                data = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_matrix(data, fmt)


def _rows(report: IdentityReport) -> list:
    return [
        {"label": r.label, "status": r.status, "residual": r.residual, "note": r.note}
        for r in report
    ]


def _inv_report(args, a, tol) -> dict:
    x = inverses.compute(args.kind, a, tol)
    res = inverses.defining_residuals(args.kind, a, x, tol)
    return {
        "kind": args.kind,
        "index": inverses.index(a, tol),
        "result": matrix_to_json(x),
        "residuals": res,
        "passed": all(v <= tol.eq_atol for v in res.values()),
    }


def _classify_report(args, a, tol) -> dict:
    rep = classify(a, tol)
    inv = rep.inverses
    mats = {
        "mp": inv.mp, "drazin": inv.drazin, "cep": inv.core_ep, "dmp": inv.dmp,
        "mpd": inv.mpd, "cmp": inv.cmp, "dstar": inv.drazin_star,
    }
    if inv.group is not None:
        mats["group"] = inv.group
    return {
        "index": rep.index,
        "flags": {name: {"holds": f.holds, "residual": f.residual} for name, f in rep.flags().items()},
        "inverses": {k: matrix_to_json(v) for k, v in mats.items()},
    }


def _decompose_report(args, a, tol) -> dict:
    if args.kind == "svd":
        s = decomp.svd(a)
        return {"kind": "svd", "u": matrix_to_json(s.u), "sigma": [float(v) for v in s.sigma],
                "v": matrix_to_json(s.v)}
    if args.kind == "hs":
        hs = decomp.hs_decompose(a, tol)
        kk = hs.k_block @ hs.k_block.conj().T + hs.l_block @ hs.l_block.conj().T
        out = {
            "kind": "hs",
            "rank": hs.r,
            "u": matrix_to_json(hs.u),
            "sigma": [float(v) for v in hs.sigma],
            "sigma_blocks": [{"value": v, "multiplicity": m} for v, m in hs.sigma_blocks],
            "k": matrix_to_json(hs.k_block),
            "kk_plus_ll_residual": float(np.linalg.norm(kk - np.eye(hs.r))),
            "reconstruction_residual": float(np.linalg.norm(hs.reconstruct() - a)),
        }
        if hs.r < hs.n:
            out["l"] = matrix_to_json(hs.l_block)
        return out
    parts = decomp.core_nilpotent(a, tol)
    return {"kind": "corenil", "core": matrix_to_json(parts.core),
            "nilpotent": matrix_to_json(parts.nilpotent), "index_of_nilpotent": parts.index_of_nilpotent}


def _solve_report(args, a, tol) -> dict:
    b = _read(args.rhs, args.format)
    res = solvers.solve(args.method, a, b, tol)
    out = {
        "method": args.method,
        "particular": matrix_to_json(res.particular),
        "residual": res.residual,
        "solution_space": res.solution_space_note,
        "space_residual": res.space_residual,
        "passed": res.residual <= tol.eq_atol,
    }
    if res.homogeneous_projector is not None:
        out["homogeneous_projector"] = matrix_to_json(res.homogeneous_projector)
    return out


def _check_report(args, a, tol) -> dict:
    ident = verify_identities(a, tol)
    eq = cepd_equivalences(a, tol)
    pi = check_pi_theorems(a, tol)
    cepd_rows = check_cepd_theorems(a, tol)
    return {
        "identities": _rows(ident),
        "cepd_equivalences": {
            "conditions": {
                k: {"holds": c.holds, "residual": c.residual, "note": c.note}
                for k, c in eq.conditions.items()
            },
            "agreement": eq.consistent,
            "cepd": eq.verdict,
        },
        "cepd_theorems": _rows(cepd_rows),
        "pi_theorems": _rows(pi),
        "passed": ident.all_passed and eq.consistent and pi.all_passed and cepd_rows.all_passed,
    }


_HANDLERS = {
    "inv": _inv_report,
    "classify": _classify_report,
    "decompose": _decompose_report,
    "solve": _solve_report,
    "check": _check_report,
}


def _gen(args) -> str:
    spec = randgen.GenSpec(args.n, args.r, args.k, args.seed or 0)
    if args.family == "index":
        a = randgen.gen_with_index(spec)
    elif args.family == "cepd":
        a = randgen.gen_cepd(spec)
    elif args.family == "pi":
        a = randgen.gen_partial_isometry(spec)
    else:
        a = randgen.gen_power_partial_isometry(spec, hermitian=args.hermitian)
    return serialize_matrix(a, args.format or "json")


def _dump(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, allow_nan=False)


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        tol = Tolerance(
            rank_rtol=1e-10 if args.tol_rank is None else args.tol_rank,
            eq_atol=1e-9 if args.tol_eq is None else args.tol_eq,
        )
    except ValueError as exc:
        print(f"cepdkit: {exc}", file=stderr)
        return 2

    doc = {
        "command": list(argv) if argv is not None else sys.argv[1:],
        "tolerance": {"rank_rtol": tol.rank_rtol, "eq_atol": tol.eq_atol},
    }
    try:
        if args.command == "gen":
            stdout.write(_gen(args))
            if not args.format == "text":
                stdout.write("\n")
            return 0
        a = _read(args.matrix, args.format)
        doc.update(_HANDLERS[args.command](args, a, tol))
        status = 0
    except (UsageError, InputError) as exc:
        print(f"cepdkit: {exc}", file=stderr)
        return 2
    except MathError as exc:
        print(f"cepdkit: {type(exc).__name__}: {exc}", file=stderr)
        doc["error"] = {"type": type(exc).__name__, "message": str(exc)}
        status = 1
    doc["exit_status"] = status
    stdout.write(_dump(doc) + "\n")
    return status


def main() -> None:  # pragma: no cover - console entry point
    sys.exit(run())
