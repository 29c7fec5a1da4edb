"""Unit-consistent generalized inverse, plus residual checks for the algebraic
identities any generalized inverse must satisfy.

The Moore-Penrose pseudoinverse commutes with orthonormal transformations but
not with diagonal rescaling, i.e. changing the units of individual variables
changes the answer. The unit-consistent inverse built here satisfies the
complementary property: for nonsingular diagonal D and E,

    uc_inverse(D @ a @ E) == inv(E) @ uc_inverse(a) @ inv(D)

It is computed by balancing the matrix to its scale-canonical core, taking the
pseudoinverse of the core, and mapping the scale factors back:

    a = inv(D) @ core @ inv(E)   =>   uc_inverse(a) = E @ pinv(core) @ D
"""

from dataclasses import dataclass

import numpy as np

from .balance import DEFAULT_BALANCE_TOL, DEFAULT_MAX_ITER, ScalingDecomposition, balance
from .matrix import DimensionError, apply_diag, as_matrix, as_scaling
from .svd import DEFAULT_RANK_TOL, RankInfo, pinv_from_factors, svd

__all__ = [
    "GiResiduals",
    "UcInverseResult",
    "uc_inverse",
    "uc_inverse_detailed",
    "check_gi_identities",
    "uc_consistency_residual",
]

# floor for relative-residual denominators so an all-zero matrix yields 0, not NaN
TINY = 1e-300


@dataclass(frozen=True)
class GiResiduals:
    """Relative residuals of the two defining generalized-inverse identities."""

    residual_axa: float
    residual_xax: float


@dataclass(frozen=True)
class UcInverseResult:
    """Unit-consistent inverse together with the balancing decomposition and
    the numerical rank used when inverting the balanced core."""

    inverse: np.ndarray
    decomposition: ScalingDecomposition
    rank: RankInfo


def uc_inverse_detailed(
    a,
    rank_tol: float = DEFAULT_RANK_TOL,
    balance_tol: float = DEFAULT_BALANCE_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> UcInverseResult:
    """Unit-consistent inverse with full diagnostics.

    ``rank_tol`` controls which singular values of the balanced core are
    inverted; ``balance_tol`` and ``max_iter`` control the balancing sweep.
    They govern different numerical phenomena and are deliberately separate
    knobs. If balancing does not converge the inverse is still produced,
    and ``decomposition.converged`` carries the flag.
    """
    a = as_matrix(a)
    dec = balance(a, tol=balance_tol, max_iter=max_iter)
    core_pinv, rank = pinv_from_factors(svd(dec.core), rank_tol)
    # entry (j, i) picks up exp(right_log[j] + left_log[i]): E @ pinv(core) @ D
    scale = np.exp(dec.right_log[:, None] + dec.left_log[None, :])
    return UcInverseResult(inverse=core_pinv * scale, decomposition=dec, rank=rank)


def uc_inverse(
    a,
    rank_tol: float = DEFAULT_RANK_TOL,
    balance_tol: float = DEFAULT_BALANCE_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> np.ndarray:
    """Unit-consistent generalized inverse (n-by-m for m-by-n input).

    Equals the ordinary inverse for nonsingular square input. See
    :func:`uc_inverse_detailed` for the diagnostics-bearing variant.
    """
    return uc_inverse_detailed(
        a, rank_tol=rank_tol, balance_tol=balance_tol, max_iter=max_iter
    ).inverse


def check_gi_identities(a, g) -> GiResiduals:
    """Measure how well ``g`` behaves as a generalized inverse of ``a``.

    Returns max-abs residuals of a@g@a == a and g@a@g == g, each normalized
    by the max-abs of the matrix being reproduced.
    """
    a = as_matrix(a)
    g = as_matrix(g)
    if g.shape != (a.shape[1], a.shape[0]):
        raise DimensionError(
            f"inverse candidate must have shape {(a.shape[1], a.shape[0])}, got {g.shape}"
        )
    residual_axa = float(np.abs(a @ g @ a - a).max() / max(np.abs(a).max(), TINY))
    residual_xax = float(np.abs(g @ a @ g - g).max() / max(np.abs(g).max(), TINY))
    return GiResiduals(residual_axa=residual_axa, residual_xax=residual_xax)


def uc_consistency_residual(
    a,
    d,
    e,
    rank_tol: float = DEFAULT_RANK_TOL,
    balance_tol: float = DEFAULT_BALANCE_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> float:
    """Residual of the diagonal-consistency identity.

    Computes diag(e) @ uc_inverse(diag(d) @ a @ diag(e)) @ diag(d) and returns
    its relative max-abs difference from uc_inverse(a). Zero in exact
    arithmetic for any nonsingular diagonal scalings; the same construction
    with the Moore-Penrose inverse substituted is violated by order one.
    """
    a = as_matrix(a)
    d = as_scaling(d, a.shape[0])
    e = as_scaling(e, a.shape[1])
    kw = dict(rank_tol=rank_tol, balance_tol=balance_tol, max_iter=max_iter)
    base = uc_inverse(a, **kw)
    mapped = apply_diag(e, uc_inverse(apply_diag(d, a, e), **kw), d)
    return float(np.abs(mapped - base).max() / max(np.abs(base).max(), TINY))
