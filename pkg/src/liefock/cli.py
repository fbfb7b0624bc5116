"""Command-line client over the report layer.

Subcommands: validate, analyze, decompose, classify, schur, model, audit,
catalog-list.  Reports go to stdout as deterministic JSON (fixed key order,
floats at 17 significant digits).  Exit codes: 0 success, 1 computation error
(typed error JSON on stdout), 2 usage error.
"""

import argparse
import json
import sys

from . import api, jsonio
from .errors import FileError, LiefockError, UsageError


def _add_algebra_source(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--catalog", help="catalog id, e.g. heisenberg:2 or l5_6")
    parser.add_argument("--file", help="path to a structure-constant JSON file")
    parser.add_argument("--tol", type=float, default=None, help="zero-test threshold override")


def _add_output(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", dest="json_path", default=None,
                        help="also write the report to this path")


def _add_model_params(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("model", choices=["shifted", "swanson", "bender-jones"])
    parser.add_argument("--alpha", default=None, help="complex as re,im")
    parser.add_argument("--beta", default=None, help="complex as re,im")
    parser.add_argument("--beta-real", type=float, default=None, help="positive real beta")
    parser.add_argument("--theta", type=float, default=None)
    parser.add_argument("--allow-ccr", action="store_true",
                        help="permit alpha == beta (canonical pair)")
    parser.add_argument("--nmax", type=int, default=None)
    parser.add_argument("--guard", type=int, default=2)
    parser.add_argument("--levels", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liefock",
        description="Lie algebra structure analysis and ladder-operator model audits",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    for name, doc in (
        ("validate", "antisymmetry and Jacobi residuals"),
        ("analyze", "center, derived subalgebra, central series, class"),
        ("classify", "match the invariant fingerprint against the catalog"),
        ("schur", "second-cohomology report plus the multiplier audit verdicts"),
    ):
        p = sub.add_parser(name, help=doc)
        _add_algebra_source(p)
        _add_output(p)

    p = sub.add_parser("decompose", help="test an explicit pair of subspaces")
    _add_algebra_source(p)
    p.add_argument("--a-basis", required=True,
                   help="JSON list of vectors of [re,im] pairs, or @file")
    p.add_argument("--b-basis", required=True)
    _add_output(p)

    sub.add_parser("catalog-list", help="list catalog ids")

    p = sub.add_parser("model", help="build a ladder model and verify its relations")
    _add_model_params(p)
    p.add_argument("--verify", action="store_true",
                   help="build families and report all residuals and the Gram matrix")
    _add_output(p)

    p = sub.add_parser("audit", help="extract the model's algebra and check documented claims")
    _add_model_params(p)
    _add_output(p)

    return parser


def _parse_complex_flag(text: str | None):
    if text is None:
        return None
    parts = text.split(",")
    try:
        if len(parts) == 1:
            return [float(parts[0]), 0.0]
        if len(parts) == 2:
            return [float(parts[0]), float(parts[1])]
    except ValueError:
        pass
    raise UsageError(f"expected re,im for a complex flag, got {text!r}")


def _load_json_arg(text: str):
    if text.startswith("@"):
        try:
            with open(text[1:], encoding="utf-8") as handle:
                return json.load(handle)
        except OSError as exc:
            raise FileError(f"cannot read {text[1:]!r}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise FileError(f"invalid JSON in {text[1:]!r}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"inline argument is not valid JSON: {exc}") from exc


def _algebra_from_args(args) -> "api.LieAlgebra":
    if (args.catalog is None) == (args.file is None):
        raise UsageError("provide exactly one of --catalog or --file")
    payload = None
    if args.file is not None:
        try:
            with open(args.file, encoding="utf-8") as handle:
                payload = json.load(handle)
        except OSError as exc:
            raise FileError(f"cannot read {args.file!r}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise FileError(f"invalid JSON in {args.file!r}: {exc}") from exc
    return api.load_algebra(args.catalog, payload, tol=args.tol)


def _spec_from_args(args):
    return api.build_spec(
        args.model,
        alpha=_parse_complex_flag(args.alpha),
        beta=_parse_complex_flag(args.beta),
        beta_real=args.beta_real,
        theta=args.theta,
        allow_ccr=args.allow_ccr,
    )


def _run_command(args) -> dict:
    if args.command == "validate":
        return api.validate_report(_algebra_from_args(args))
    if args.command == "analyze":
        return api.analyze_report(_algebra_from_args(args))
    if args.command == "classify":
        return api.classify_report(_algebra_from_args(args))
    if args.command == "schur":
        return api.schur_report(_algebra_from_args(args), include_audit=True)
    if args.command == "decompose":
        return api.decompose_report(
            _algebra_from_args(args),
            _load_json_arg(args.a_basis),
            _load_json_arg(args.b_basis),
        )
    if args.command == "catalog-list":
        return api.catalog_report()
    if args.command == "model":
        return api.model_report(
            _spec_from_args(args), n_max=args.nmax, guard=args.guard,
            levels=args.levels, verify=args.verify,
        )
    if args.command == "audit":
        return api.audit_report(_spec_from_args(args), n_max=args.nmax, guard=args.guard)
    raise UsageError(f"unknown command {args.command!r}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = _run_command(args)
    except UsageError as exc:
        print(f"usage error: {exc.message}", file=sys.stderr)
        return 2
    except LiefockError as exc:
        print(jsonio.dumps({"error": {"code": exc.code, "message": exc.message}}))
        return 1
    text = jsonio.dumps(report)
    print(text)
    json_path = getattr(args, "json_path", None)
    if json_path:
        try:
            with open(json_path, "w", encoding="utf-8") as handle:
                handle.write(text + "\n")
        except OSError as exc:
            print(f"usage error: cannot write {json_path!r}: {exc}", file=sys.stderr)
            return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
