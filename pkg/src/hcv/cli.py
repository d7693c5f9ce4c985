"""Command-line interface.

Every invocation prints one JSON document to stdout and exits with
0 (ok), 2 (infeasible), 64 (invalid input) or 65 (characteristic error).
All numbers that are field elements are rendered as exact strings
(integers or num/den); output is byte-identical across runs.

The environment variable HCV_THREADS caps the thread pool used for the
identity sweeps; aggregation order is deterministic regardless.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from math import inf

from . import identities, reduction, symfun, vanishing, witness
from .fields import CharacteristicError, Field
from .poly import AffineForm, SparsePolynomial

EXIT_OK = 0
EXIT_INFEASIBLE = 2
EXIT_INVALID_INPUT = 64
EXIT_CHARACTERISTIC = 65


class _CliError(Exception):
    """Invalid input detected while handling a command."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # noqa: A003 - argparse API
        # argparse exits with 2 by default, which collides with the
        # "infeasible" exit code; remap flag errors to invalid input.
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INVALID_INPUT)


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2))


def _load_json(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise _CliError(f"cannot read {path}: {exc}") from None


def _load_polynomial(path: str) -> SparsePolynomial:
    try:
        return SparsePolynomial.from_doc(_load_json(path))
    except ValueError as exc:
        raise _CliError(str(exc)) from None


def _write_json(path: str, doc: dict) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(json.dumps(doc, indent=2) + "\n")


def _parse_field(name: str) -> Field:
    try:
        return Field.from_name(name)
    except ValueError as exc:
        raise _CliError(str(exc)) from None


def _parse_origin(text: str) -> vanishing.OriginCondition:
    if text == "nonzero":
        return vanishing.NONZERO
    if text.startswith("exact="):
        try:
            return vanishing.exact_multiplicity(int(text[6:]))
        except ValueError:
            raise _CliError(f"bad origin condition {text!r}") from None
    raise _CliError(f"bad origin condition {text!r} (expected nonzero or exact=<l>)")


def _mult_str(m) -> object:
    return "infinity" if m == inf else m


def _profile_payload(p: SparsePolynomial, force: bool) -> tuple[list[dict], int | str, object]:
    profile = vanishing.multiplicity_profile(p, force=force)
    origin = (0,) * p.nvars
    rows = [
        {"point": list(pt), "multiplicity": _mult_str(m)}
        for pt, m in profile.items()
    ]
    off = [m for pt, m in profile.items() if pt != origin]
    return rows, _mult_str(profile[origin]), _mult_str(min(off)) if off else None


# -- subcommand handlers -------------------------------------------------------


def _cmd_mindeg(args) -> int:
    origin = _parse_origin(args.origin)
    if args.field == "auto":
        max_degree = args.max_degree if args.max_degree is not None else args.n + 2 * args.k - 2
        field = vanishing._auto_field(args.n, max_degree)
    else:
        field = _parse_field(args.field)
    try:
        degree = vanishing.minimum_degree(
            args.n, args.k, origin, field, args.max_degree, force=args.force
        )
    except ValueError as exc:
        raise _CliError(str(exc)) from None
    payload = {
        "command": "mindeg",
        "n": args.n,
        "k": args.k,
        "origin": str(origin),
        "field": field.name,
        "max_degree": args.max_degree if args.max_degree is not None else args.n + 2 * args.k - 2,
    }
    if degree is None:
        payload["status"] = "infeasible"
        _emit(payload)
        return EXIT_INFEASIBLE
    poly = vanishing.witness_for_degree(args.n, args.k, degree, origin, field)
    payload["status"] = "ok"
    payload["min_degree"] = degree
    payload["witness"] = poly.to_doc() if poly is not None else None
    _emit(payload)
    return EXIT_OK


def _cmd_witness(args) -> int:
    field = _parse_field(args.field)
    try:
        if args.exact_kminus1:
            poly = witness.witness_exact_kminus1(args.n, args.k, field)
        else:
            ell = args.ell if args.ell is not None else 0
            poly = witness.extremal_witness_with_origin(args.n, args.k, ell, field)
    except ValueError as exc:
        raise _CliError(str(exc)) from None
    rows, origin_mult, min_off = _profile_payload(poly, args.force)
    payload = {
        "command": "witness",
        "status": "ok",
        "n": args.n,
        "k": args.k,
        "variant": "exact-kminus1" if args.exact_kminus1 else f"ell={args.ell or 0}",
        "degree": poly.degree,
        "origin_multiplicity": origin_mult,
        "min_multiplicity_off_origin": min_off,
    }
    doc = poly.to_doc()
    if args.out:
        _write_json(args.out, doc)
        payload["out"] = args.out
    else:
        payload["witness"] = doc
    _emit(payload)
    return EXIT_OK


def _cmd_verify(args) -> int:
    poly = _load_polynomial(args.poly)
    rows, origin_mult, min_off = _profile_payload(poly, args.force)
    k = args.k
    ok_off_origin = min_off == "infinity" or (min_off is not None and min_off >= k)
    if args.ell is None:
        ok_origin = origin_mult == 0  # nonzero value at the origin
        origin_requirement = "nonzero"
    else:
        ok_origin = origin_mult == args.ell
        origin_requirement = f"exact={args.ell}"
    verdict = bool(ok_off_origin and ok_origin)
    payload = {
        "command": "verify",
        "status": "ok",
        "field": poly.field.name,
        "nvars": poly.nvars,
        "k": k,
        "origin_requirement": origin_requirement,
        "degree": poly.degree,
        "origin_multiplicity": origin_mult,
        "min_multiplicity_off_origin": min_off,
        "profile": rows,
        "verdict": "PASS" if verdict else "FAIL",
    }
    _emit(payload)
    return EXIT_OK


def _cmd_reduce(args) -> int:
    poly = _load_polynomial(args.poly)
    try:
        result = reduction.reduce_polynomial(poly, args.k)
    except ValueError as exc:
        raise _CliError(str(exc)) from None
    payload = {
        "command": "reduce",
        "status": "ok",
        "k": args.k,
        "steps_taken": result.steps_taken,
        "degree": result.reduced.degree,
        "num_terms": result.reduced.num_terms,
    }
    doc = result.reduced.to_doc()
    if args.out:
        _write_json(args.out, doc)
        payload["out"] = args.out
    else:
        payload["reduced"] = doc
    _emit(payload)
    return EXIT_OK


def _sweep(instances, check):
    threads = max(1, int(os.environ.get("HCV_THREADS", "1")))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(check, instances))
    return [check(inst) for inst in instances]


def _cmd_identities(args) -> int:
    suite = args.suite
    limit = args.max
    if suite == "catalan":
        instances = list(range(1, limit + 1))

        def check(s):
            value = identities.catalan_alternating_sum(s)
            return {"s": s, "value": value, "pass": value == 0}

    elif suite == "composition":
        instances = list(range(1, limit + 1))

        def check(l):
            value = identities.signed_composition_sum(l)
            expected = (-1) ** l * identities.catalan(l - 1)
            return {"total": l, "value": value, "expected": expected, "pass": value == expected}

    elif suite == "newton":
        from .combinatorics import compositions

        instances = [c for w in range(1, limit + 1) for c in compositions(w)]

        def check(parts):
            expected = symfun.newton_coefficient(parts)
            rep = symfun.to_power_sums(symfun.distinct_index_sum(parts, sum(parts)))
            actual = rep.coefficient((sum(parts),))
            return {
                "parts": list(parts),
                "value": str(actual),
                "expected": str(expected),
                "pass": actual == expected,
            }

    elif suite == "via-b":
        instances = [
            (n, m, s) for n in range(limit + 1) for m in range(limit + 1) for s in range(6)
        ]

        def check(inst):
            n, m, s = inst
            ok = identities.catalan_binomial_expansion_check(n, m, s)
            return {"n": n, "m": m, "s": s, "pass": ok}

    elif suite == "cancellation":
        instances = [(l, j) for l in range(1, limit + 1) for j in range(0, l - 1)]

        def check(inst):
            l, j = inst
            return {"total": l, "j": j, "pass": identities.cancellation_check(l, j)}

    else:  # pragma: no cover - argparse choices guard this
        raise _CliError(f"unknown suite {suite!r}")

    try:
        results = _sweep(instances, check)
    except ValueError as exc:
        raise _CliError(str(exc)) from None
    failures = [r for r in results if not r["pass"]]
    payload = {
        "command": "identities",
        "suite": suite,
        "max": limit,
        "instances": len(results),
        "failures": failures,
        "status": "ok" if not failures else "failed",
    }
    _emit(payload)
    return EXIT_OK if not failures else 1


def _cmd_cover(args) -> int:
    doc = _load_json(args.forms)
    try:
        field = Field.from_name(doc["field"])
        nvars = int(doc["nvars"])
        forms = [AffineForm.from_terms_doc(field, nvars, terms) for terms in doc["forms"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise _CliError(f"malformed forms document: {exc}") from None
    try:
        report = witness.verify_hyperplane_cover(forms, args.k, force=args.force)
    except ValueError as exc:
        raise _CliError(str(exc)) from None
    bound = nvars + 2 * args.k - 3
    valid = report.valid_for(args.k)
    payload = {
        "command": "cover",
        "status": "ok",
        "field": field.name,
        "nvars": nvars,
        "k": args.k,
        "num_forms": report.num_forms,
        "origin_covered": report.origin_covered,
        "min_coverage_off_origin": report.min_coverage_off_origin,
        "counts": [
            {"point": list(pt), "count": c} for pt, c in report.counts.items()
        ],
        "size_bound": bound,
        "meets_size_bound": report.num_forms >= bound,
        "verdict": "PASS" if valid else "FAIL",
    }
    _emit(payload)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hcv", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mindeg", help="minimum degree oracle")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--origin", default="nonzero", help="nonzero or exact=<l>")
    p.add_argument("--field", default="auto", help="rational, gf:<p>, or auto")
    p.add_argument("--max-degree", type=int, default=None, dest="max_degree")
    p.add_argument("--force", action="store_true", help="lift the n <= 24 sweep guard")
    p.set_defaults(handler=_cmd_mindeg)

    p = sub.add_parser("witness", help="construct an extremal polynomial")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--ell", type=int, default=None, help="origin multiplicity (default 0)")
    group.add_argument("--exact-kminus1", action="store_true", dest="exact_kminus1")
    p.add_argument("--field", default="rational")
    p.add_argument("--out", default=None)
    p.add_argument("--force", action="store_true")
    p.set_defaults(handler=_cmd_witness)

    p = sub.add_parser("verify", help="multiplicity profile and verdict for a polynomial file")
    p.add_argument("--poly", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--ell", type=int, default=None)
    p.add_argument("--force", action="store_true")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("reduce", help="canonical k-reduced form of a polynomial file")
    p.add_argument("--poly", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(handler=_cmd_reduce)

    p = sub.add_parser("identities", help="exact integer identity sweeps")
    p.add_argument(
        "--suite",
        required=True,
        choices=["catalan", "newton", "composition", "via-b", "cancellation"],
    )
    p.add_argument("--max", type=int, required=True)
    p.set_defaults(handler=_cmd_identities)

    p = sub.add_parser("cover", help="verify a hyperplane cover of the punctured hypercube")
    p.add_argument("--forms", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--force", action="store_true")
    p.set_defaults(handler=_cmd_cover)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except _CliError as exc:
        _emit({"status": "invalid-input", "error": str(exc)})
        return EXIT_INVALID_INPUT
    except CharacteristicError as exc:
        _emit({"status": "characteristic-error", "error": str(exc)})
        return EXIT_CHARACTERISTIC


def entry_point() -> None:  # pragma: no cover - thin wrapper
    sys.exit(main())


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
