"""Command line interface: compute, compare, and check relative gain arrays
from CSV or JSON matrix files.

Exit codes: 0 success, 1 input/parse failure, 2 strict method on a singular
matrix, 3 property-check failure.
"""

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .balance import DEFAULT_BALANCE_TOL, DEFAULT_MAX_ITER
from .inverse import TINY, check_gi_identities, uc_inverse
from .matrix import (
    DimensionError,
    MatrixFormatError,
    format_csv,
    matrix_from_json,
    matrix_to_json,
    parse_csv,
    permute,
)
from .rga import (
    Check,
    RgaResult,
    SingularMatrixError,
    rga_mp,
    rga_strict,
    rga_summary,
    rga_uc,
    scaling_invariance_residual,
)
from .svd import DEFAULT_RANK_TOL, SvdConvergenceError, pinv

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_SINGULAR = 2
EXIT_PROPERTY = 3

PERMUTATION_TOL = 1e-9
SCALING_TOL = 1e-7
IDENTITY_TOL = 1e-8

# range for the seeded random scalings used by `compare` and `check`
CHECK_SCALE_LOW = 1e-3
CHECK_SCALE_HIGH = 1e3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ucrga",
        description="Relative gain arrays of square, singular, or rectangular matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    specs = [
        ("compute", "compute the RGA of a matrix", _cmd_compute),
        ("compare", "compute both the MP and UC variants and their disagreement", _cmd_compare),
        ("check", "run the property suite (equivariance, invariance, identities, sums)", _cmd_check),
    ]
    for name, help_text, handler in specs:
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--input", required=True, help="path to the matrix file")
        p.add_argument(
            "--format",
            choices=["csv", "json"],
            default=None,
            help="input format (default: inferred from the file extension)",
        )
        p.add_argument(
            "--method",
            choices=["strict", "mp", "uc", "all"],
            default="uc",
            help="RGA variant (default: uc; ignored by compare, which always runs mp and uc)",
        )
        p.add_argument("--output", choices=["table", "json", "csv"], default="table")
        p.add_argument("--rank-tol", type=float, default=DEFAULT_RANK_TOL)
        p.add_argument("--balance-tol", type=float, default=DEFAULT_BALANCE_TOL)
        p.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)
        p.add_argument("--seed", type=int, default=42, help="seed for randomized checks")
        p.add_argument("--digits", type=int, default=4, help="decimals in table output")
        p.set_defaults(handler=handler)
    return parser


def _load_matrix(path: str, fmt: str | None) -> np.ndarray:
    if fmt is None:
        fmt = "json" if path.lower().endswith(".json") else "csv"
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise MatrixFormatError(f"cannot read {path}: {exc}") from exc
    if fmt == "json":
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise MatrixFormatError(f"{path}: invalid JSON: {exc}") from exc
        return matrix_from_json(obj)
    try:
        return parse_csv(text)
    except MatrixFormatError as exc:
        raise MatrixFormatError(f"{path}: {exc}") from None


def _compute(g: np.ndarray, method: str, args) -> RgaResult:
    if method == "strict":
        return rga_strict(g, rel_tol=args.rank_tol)
    if method == "mp":
        return rga_mp(g, rel_tol=args.rank_tol)
    return rga_uc(
        g, rank_tol=args.rank_tol, balance_tol=args.balance_tol, max_iter=args.max_iter
    )


def _log_uniform(rng: np.random.Generator, size: int) -> np.ndarray:
    return np.exp(rng.uniform(np.log(CHECK_SCALE_LOW), np.log(CHECK_SCALE_HIGH), size))


def _check_dict(c: Check) -> dict:
    return {
        "name": c.name,
        "value": c.value,
        "threshold": c.threshold,
        "passed": c.passed,
        "informational": c.informational,
    }


def _report_dict(result: RgaResult, checks: list[Check]) -> dict:
    m, n = result.rga.shape
    return {
        "method": result.method,
        "shape": [m, n],
        "rank": result.numerical_rank,
        "rga": matrix_to_json(result.rga),
        "row_sums": [float(x) for x in result.row_sums],
        "col_sums": [float(x) for x in result.col_sums],
        "element_sum": float(result.element_sum),
        "balancer_converged": bool(result.balancer_converged),
        "checks": [_check_dict(c) for c in checks],
    }


def _format_matrix(a: np.ndarray, digits: int) -> str:
    width = max(len(f"{x:.{digits}f}") for x in a.ravel())
    return "\n".join(
        "  " + "  ".join(f"{x:{width}.{digits}f}" for x in row) for row in a
    )


def _format_vector(v, digits: int) -> str:
    return " ".join(f"{float(x):.{digits}f}" for x in v)


def _print_report(result: RgaResult, checks: list[Check], digits: int) -> None:
    m, n = result.rga.shape
    print(f"method: {result.method}")
    print(f"shape: {m}x{n}")
    print(f"rank: {result.numerical_rank}")
    print(f"balancer converged: {'yes' if result.balancer_converged else 'no'}")
    print("rga:")
    print(_format_matrix(result.rga, digits))
    print(f"row sums: {_format_vector(result.row_sums, digits)}")
    print(f"col sums: {_format_vector(result.col_sums, digits)}")
    print(f"element sum: {result.element_sum:.{digits}f}")
    for c in checks:
        status = "pass" if c.passed else "FAIL"
        note = " (informational)" if c.informational else ""
        print(f"check {c.name}: {c.value:.3e} <= {c.threshold:.0e} {status}{note}")


def _emit_reports(pairs: list[tuple[RgaResult, list[Check]]], args) -> None:
    if args.output == "json":
        dicts = [_report_dict(r, c) for r, c in pairs]
        print(json.dumps(dicts[0] if len(dicts) == 1 else dicts, indent=2))
    elif args.output == "csv":
        blocks = []
        for result, _ in pairs:
            prefix = f"# method={result.method}\n" if len(pairs) > 1 else ""
            blocks.append(prefix + format_csv(result.rga))
        print("\n".join(blocks), end="")
    else:
        for i, (result, checks) in enumerate(pairs):
            if i:
                print()
            _print_report(result, checks, args.digits)


def _resolve_methods(g: np.ndarray, args) -> list[str]:
    """Expand --method all, dropping strict (with a warning) when inapplicable."""
    if args.method != "all":
        return [args.method]
    methods = ["strict", "mp", "uc"]
    try:
        rga_strict(g, rel_tol=args.rank_tol)
    except (DimensionError, SingularMatrixError) as exc:
        print(f"warning: strict RGA skipped: {exc}", file=sys.stderr)
        methods.remove("strict")
    return methods


def _cmd_compute(args) -> int:
    g = _load_matrix(args.input, args.format)
    pairs = []
    for method in _resolve_methods(g, args):
        result = _compute(g, method, args)
        pairs.append((result, list(rga_summary(result).checks)))
    _emit_reports(pairs, args)
    return EXIT_OK


def _cmd_compare(args) -> int:
    g = _load_matrix(args.input, args.format)
    m, n = g.shape
    mp_result = rga_mp(g, rel_tol=args.rank_tol)
    uc_result = rga_uc(
        g, rank_tol=args.rank_tol, balance_tol=args.balance_tol, max_iter=args.max_iter
    )
    difference = float(np.abs(mp_result.rga - uc_result.rga).max())
    rng = np.random.default_rng(args.seed)
    d = _log_uniform(rng, m)
    e = _log_uniform(rng, n)
    kw = dict(rank_tol=args.rank_tol, balance_tol=args.balance_tol, max_iter=args.max_iter)
    residual_mp = scaling_invariance_residual(g, d, e, method="mp", **kw)
    residual_uc = scaling_invariance_residual(g, d, e, method="uc", **kw)

    if args.output == "json":
        report = {
            "mp": _report_dict(mp_result, list(rga_summary(mp_result).checks)),
            "uc": _report_dict(uc_result, list(rga_summary(uc_result).checks)),
            "max_abs_difference": difference,
            "scaling_invariance_residual": {"mp": residual_mp, "uc": residual_uc},
            "seed": args.seed,
        }
        print(json.dumps(report, indent=2))
    elif args.output == "csv":
        print(f"# method=mp\n{format_csv(mp_result.rga)}\n# method=uc\n{format_csv(uc_result.rga)}", end="")
    else:
        _print_report(mp_result, list(rga_summary(mp_result).checks), args.digits)
        print()
        _print_report(uc_result, list(rga_summary(uc_result).checks), args.digits)
        print()
        print(f"max abs difference (mp vs uc): {difference:.{args.digits}f}")
        print(f"scaling invariance residual mp: {residual_mp:.3e} (seed {args.seed})")
        print(f"scaling invariance residual uc: {residual_uc:.3e} (seed {args.seed})")
    return EXIT_OK


def _property_checks(g: np.ndarray, method: str, args, rng: np.random.Generator) -> tuple[RgaResult, list[Check]]:
    m, n = g.shape
    result = _compute(g, method, args)
    checks = list(rga_summary(result).checks)

    row_order = rng.permutation(m)
    col_order = rng.permutation(n)
    permuted = _compute(permute(g, row_order, col_order), method, args).rga
    expected = permute(result.rga, row_order, col_order)
    scale = max(np.abs(result.rga).max(), TINY)
    value = float(np.abs(permuted - expected).max() / scale)
    checks.append(
        Check("permutation_equivariance", value, PERMUTATION_TOL, value <= PERMUTATION_TOL, False)
    )

    d = _log_uniform(rng, m)
    e = _log_uniform(rng, n)
    value = scaling_invariance_residual(
        g, d, e, method=method,
        rank_tol=args.rank_tol, balance_tol=args.balance_tol, max_iter=args.max_iter,
    )
    checks.append(Check("scaling_invariance", value, SCALING_TOL, value <= SCALING_TOL, False))

    if method == "strict":
        inverse = np.linalg.inv(g)
    elif method == "mp":
        inverse = pinv(g, rel_tol=args.rank_tol)
    else:
        inverse = uc_inverse(
            g, rank_tol=args.rank_tol, balance_tol=args.balance_tol, max_iter=args.max_iter
        )
    residuals = check_gi_identities(g, inverse)
    checks.append(
        Check("inverse_identity_aga", residuals.residual_axa, IDENTITY_TOL,
              residuals.residual_axa <= IDENTITY_TOL, False)
    )
    checks.append(
        Check("inverse_identity_gag", residuals.residual_xax, IDENTITY_TOL,
              residuals.residual_xax <= IDENTITY_TOL, False)
    )
    return result, checks


def _cmd_check(args) -> int:
    g = _load_matrix(args.input, args.format)
    rng = np.random.default_rng(args.seed)
    pairs = []
    for method in _resolve_methods(g, args):
        pairs.append(_property_checks(g, method, args, rng))

    if args.output == "csv":
        lines = ["name,value,threshold,passed,informational"]
        for result, checks in pairs:
            for c in checks:
                lines.append(
                    f"{result.method}:{c.name},{c.value!r},{c.threshold!r},{c.passed},{c.informational}"
                )
        print("\n".join(lines))
    else:
        _emit_reports(pairs, args)

    failed = any(
        not c.passed and not c.informational for _, checks in pairs for c in checks
    )
    return EXIT_PROPERTY if failed else EXIT_OK


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except SingularMatrixError as exc:
        print(f"error: {exc}", file=sys.stderr)
        print("hint: rerun with --method uc (or mp) for singular input", file=sys.stderr)
        return EXIT_SINGULAR
    except (MatrixFormatError, DimensionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SvdConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
