"""Relative gain array variants and their structural property checks.

The relative gain array of a gain matrix measures input-output interaction
strength: entry (i, j) relates the gain from input j to output i with all
other loops open versus closed. Three routes are provided:

- :func:`rga_strict`  - the classical definition g * inv(g).T, nonsingular
  square matrices only;
- :func:`rga_mp`      - Moore-Penrose generalization, any shape, but the
  result depends on the units chosen for the variables;
- :func:`rga_uc`      - unit-consistent generalization, any shape, invariant
  under rescaling of rows and columns, and identical to the strict RGA
  whenever that one exists.

For every route the element sum of the result equals the numerical rank used
to form the inverse; for nonsingular square input every row and column sums
to 1. :func:`rga_summary` packages those checks per matrix, and
:func:`scaling_invariance_residual` quantifies how much a result moves under
a given diagonal rescaling.
"""

from dataclasses import dataclass

import numpy as np

from .inverse import TINY, uc_inverse_detailed
from .matrix import DimensionError, apply_diag, as_matrix, as_scaling
from .svd import DEFAULT_RANK_TOL, numerical_rank, pinv_from_factors, svd
from .balance import DEFAULT_BALANCE_TOL, DEFAULT_MAX_ITER

__all__ = [
    "SUMMARY_TOL",
    "SingularMatrixError",
    "RgaResult",
    "Check",
    "PropertyReport",
    "rga_strict",
    "rga_mp",
    "rga_uc",
    "scaling_invariance_residual",
    "rga_summary",
]

SUMMARY_TOL = 1e-7


class SingularMatrixError(ValueError):
    """Raised when the strict RGA is requested for a numerically singular matrix."""


@dataclass(frozen=True)
class RgaResult:
    """An RGA matrix with the summary statistics used by the property checks.

    ``numerical_rank`` is the rank actually used to form the inverse: the
    full dimension for the strict route, the rank of the input under the
    cutoff for the Moore-Penrose route, and the rank of the balanced core for
    the unit-consistent route. ``balancer_converged`` is vacuously True for
    the strict and Moore-Penrose routes.
    """

    rga: np.ndarray
    method: str
    numerical_rank: int
    row_sums: np.ndarray
    col_sums: np.ndarray
    element_sum: float
    balancer_converged: bool


@dataclass(frozen=True)
class Check:
    """One named residual compared against its threshold."""

    name: str
    value: float
    threshold: float
    passed: bool
    informational: bool


@dataclass(frozen=True)
class PropertyReport:
    checks: tuple[Check, ...]

    @property
    def all_passed(self) -> bool:
        """True when every non-informational check passed."""
        return all(c.passed for c in self.checks if not c.informational)


def _package(rga: np.ndarray, method: str, rank: int, converged: bool) -> RgaResult:
    return RgaResult(
        rga=rga,
        method=method,
        numerical_rank=rank,
        row_sums=rga.sum(axis=1),
        col_sums=rga.sum(axis=0),
        element_sum=float(rga.sum()),
        balancer_converged=converged,
    )


def rga_strict(g, rel_tol: float = DEFAULT_RANK_TOL) -> RgaResult:
    """Classical RGA: g * inv(g).T with the inverse from Gaussian elimination
    with partial pivoting.

    ``rel_tol`` only guards the precondition: if the numerical rank falls
    short of the dimension the matrix has no trustworthy inverse and
    SingularMatrixError points the caller at :func:`rga_mp` / :func:`rga_uc`.
    """
    g = as_matrix(g)
    m, n = g.shape
    if m != n:
        raise DimensionError(f"strict RGA needs a square matrix, got {m}x{n}")
    info = numerical_rank(svd(g), rel_tol)
    if info.numerical_rank < n:
        raise SingularMatrixError(
            f"matrix is numerically singular (rank {info.numerical_rank} of {n}); "
            "use rga_mp or rga_uc instead"
        )
    inverse = np.linalg.inv(g)
    return _package(g * inverse.T, "strict", n, True)


def rga_mp(g, rel_tol: float = DEFAULT_RANK_TOL) -> RgaResult:
    """RGA generalized through the Moore-Penrose pseudoinverse: g * pinv(g).T.

    Defined for any shape and rank, but not invariant under diagonal
    rescaling of rows or columns (see :func:`scaling_invariance_residual`).
    """
    g = as_matrix(g)
    inverse, info = pinv_from_factors(svd(g), rel_tol)
    return _package(g * inverse.T, "mp", info.numerical_rank, True)


def rga_uc(
    g,
    rank_tol: float = DEFAULT_RANK_TOL,
    balance_tol: float = DEFAULT_BALANCE_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> RgaResult:
    """RGA generalized through the unit-consistent inverse: g * uc_inverse(g).T.

    Defined for any shape and rank, invariant under diagonal rescaling, and
    equal to :func:`rga_strict` on nonsingular square input. Balancer
    non-convergence (possible only for adversarial sparsity patterns) is
    reported through ``balancer_converged``, never raised.
    """
    g = as_matrix(g)
    detail = uc_inverse_detailed(
        g, rank_tol=rank_tol, balance_tol=balance_tol, max_iter=max_iter
    )
    return _package(
        g * detail.inverse.T, "uc", detail.rank.numerical_rank, detail.decomposition.converged
    )


def scaling_invariance_residual(
    g,
    d,
    e,
    method: str = "uc",
    rank_tol: float = DEFAULT_RANK_TOL,
    balance_tol: float = DEFAULT_BALANCE_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> float:
    """Relative max-abs change of the chosen RGA under row scaling ``d`` and
    column scaling ``e``.

    Zero in exact arithmetic for the unit-consistent route (and for the
    strict route on nonsingular input); typically order one for the
    Moore-Penrose route whenever rank deficiency or rescaling matters.
    """
    g = as_matrix(g)
    d = as_scaling(d, g.shape[0])
    e = as_scaling(e, g.shape[1])
    if method == "mp":
        base = rga_mp(g, rel_tol=rank_tol).rga
        scaled = rga_mp(apply_diag(d, g, e), rel_tol=rank_tol).rga
    elif method == "uc":
        kw = dict(rank_tol=rank_tol, balance_tol=balance_tol, max_iter=max_iter)
        base = rga_uc(g, **kw).rga
        scaled = rga_uc(apply_diag(d, g, e), **kw).rga
    elif method == "strict":
        base = rga_strict(g, rel_tol=rank_tol).rga
        scaled = rga_strict(apply_diag(d, g, e), rel_tol=rank_tol).rga
    else:
        raise ValueError(f"method must be 'strict', 'mp' or 'uc', got {method!r}")
    return float(np.abs(scaled - base).max() / max(np.abs(base).max(), TINY))


def rga_summary(result: RgaResult) -> PropertyReport:
    """Structural checks on an RGA result, each at the 1e-7 threshold.

    Row and column sums equal 1 only when the input is square with full
    numerical rank; for singular or rectangular input those two checks are
    marked informational, because a short row (say, an all-zero one) provably
    cannot sum to what the columns sum to. The element-sum-versus-rank check
    holds for every route and every shape and is never informational.
    """
    m, n = result.rga.shape
    full_rank_square = m == n == result.numerical_rank
    row_dev = float(np.abs(result.row_sums - 1.0).max())
    col_dev = float(np.abs(result.col_sums - 1.0).max())
    rank_dev = float(abs(result.element_sum - result.numerical_rank))
    checks = (
        Check(
            name="row_sum_deviation",
            value=row_dev,
            threshold=SUMMARY_TOL,
            passed=row_dev <= SUMMARY_TOL,
            informational=not full_rank_square,
        ),
        Check(
            name="col_sum_deviation",
            value=col_dev,
            threshold=SUMMARY_TOL,
            passed=col_dev <= SUMMARY_TOL,
            informational=not full_rank_square,
        ),
        Check(
            name="element_sum_vs_rank",
            value=rank_dev,
            threshold=SUMMARY_TOL,
            passed=rank_dev <= SUMMARY_TOL,
            informational=False,
        ),
    )
    return PropertyReport(checks=checks)
