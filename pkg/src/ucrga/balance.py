"""Two-sided diagonal balancing of entry magnitudes, carried out in log space.

``balance`` factors a matrix as

    a = diag(exp(-left_log)) @ core @ diag(exp(-right_log))

where every row and column of ``core`` that contains a nonzero has unit
geometric mean of its nonzero magnitudes, and ``core`` carries exactly the
sign pattern of ``a``. The core is the scale-canonical form of the input:
rescaling rows or columns of ``a`` changes only the accumulated scale vectors,
never the core. That canonical property is what the unit-consistent inverse
is built on.

The iteration alternates column centering and row centering of log|a| over
the nonzero support, accumulating the shifts into the scale vectors. Working
on logarithms is the entire numerical point: magnitudes spanning hundreds of
orders of magnitude are just moderate-sized logs, and exp is applied once at
the end.
"""

from dataclasses import dataclass

import numpy as np

from .matrix import as_matrix

__all__ = [
    "DEFAULT_BALANCE_TOL",
    "DEFAULT_MAX_ITER",
    "ScalingDecomposition",
    "balance",
]

DEFAULT_BALANCE_TOL = 1e-15
DEFAULT_MAX_ITER = 10000


@dataclass(frozen=True)
class ScalingDecomposition:
    """Result of :func:`balance`.

    ``left_log`` and ``right_log`` are the logs of the row/column scale
    factors; they are determined only up to an additive constant traded
    between the two sides, so consumers should rely on the sums
    ``left_log[i] + right_log[j]``, which are well-defined. ``final_shift``
    is the last sweep's summed mean absolute correction (the convergence
    measure), and ``converged`` records whether it reached the tolerance
    within the iteration budget.
    """

    left_log: np.ndarray
    right_log: np.ndarray
    core: np.ndarray
    converged: bool
    iterations: int
    final_shift: float

    @property
    def left_scale(self) -> np.ndarray:
        return np.exp(self.left_log)

    @property
    def right_scale(self) -> np.ndarray:
        return np.exp(self.right_log)

    def reconstruct(self) -> np.ndarray:
        """Undo the scaling: diag(1/left_scale) @ core @ diag(1/right_scale)."""
        return np.exp(-self.left_log)[:, None] * self.core * np.exp(-self.right_log)[None, :]


def balance(
    a,
    tol: float = DEFAULT_BALANCE_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> ScalingDecomposition:
    """Balance a finite real matrix; see the module docstring for the factorization.

    Each sweep centers the columns first, then the rows; the sweep's shift is
    the mean absolute column correction plus the mean absolute row correction,
    and iteration stops once it drops to ``tol`` (or ``max_iter`` sweeps have
    run, reported via ``converged=False`` rather than an exception). Rows and
    columns with no nonzero entries are left untouched, and a mean over an
    empty selection counts as zero shift, so all-zero input converges
    immediately. A fully dense matrix balances exactly in the first sweep:
    row centering preserves the column means there, so the second sweep only
    confirms convergence.
    """
    a = as_matrix(a)
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    if max_iter < 1:
        raise ValueError("max_iter must be at least 1")

    m, n = a.shape
    magnitude = np.abs(a)
    support = magnitude > 0.0
    logmag = np.zeros((m, n))
    np.log(magnitude, out=logmag, where=support)

    row_counts = support.sum(axis=1)
    col_counts = support.sum(axis=0)
    rows = row_counts > 0
    cols = col_counts > 0

    left_log = np.zeros(m)
    right_log = np.zeros(n)
    iterations = 0
    shift = 0.0
    converged = False
    while iterations < max_iter:
        iterations += 1
        col_means = logmag[:, cols].sum(axis=0) / col_counts[cols]
        logmag[:, cols] -= col_means * support[:, cols]
        right_log[cols] -= col_means
        shift = float(np.abs(col_means).mean()) if col_means.size else 0.0

        row_means = logmag[rows, :].sum(axis=1) / row_counts[rows]
        logmag[rows, :] -= row_means[:, None] * support[rows, :]
        left_log[rows] -= row_means
        shift += float(np.abs(row_means).mean()) if row_means.size else 0.0

        if shift <= tol:
            converged = True
            break

    core = np.sign(a) * np.exp(logmag)
    return ScalingDecomposition(
        left_log=left_log,
        right_log=right_log,
        core=core,
        converged=converged,
        iterations=iterations,
        final_shift=shift,
    )
