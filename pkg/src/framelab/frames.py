"""Frame bounds, completeness, duals.

A finite family ``{f_k}`` in the weighted space has frame bounds equal to
the extreme squared singular values of its weighted synthesis matrix: fold
``sqrt(weight)`` into each coordinate and the weighted inner products turn
into Euclidean ones. The lower bound is measured against the full ambient
space (the d-th largest singular value), not the span, so an incomplete
family correctly reports a lower bound of 0.
"""

from dataclasses import dataclass

import numpy as np

from .errors import EmptyFamily, NotAFrame
from .numkernel import solve_hermitian_psd, svd_extremes

__all__ = [
    "FrameReport",
    "synthesis_matrix",
    "frame_bounds",
    "bessel_bound",
    "completeness_rank",
    "analysis_coefficients",
    "canonical_dual",
]

# A family counts as numerically complete when lower > COMPLETE_TOL * upper.
COMPLETE_TOL = 1e-12

# Rank cutoff for completeness_rank, relative to the largest singular value.
RANK_TOL = 1e-10


@dataclass(frozen=True)
class FrameReport:
    """Frame bounds of a finite family in a weighted space."""

    lower: float
    upper: float
    ambient_dim: int
    family_size: int
    complete: bool


def _family_vectors(family, model):
    vectors = [f.coords if hasattr(f, "coords") else f for f in family]
    if not vectors:
        raise EmptyFamily("family is empty")
    return [model.coerce(v) for v in vectors]


def synthesis_matrix(family, model):
    """Weighted synthesis matrix, one column per family vector.

    Column ``k`` is ``sqrt(w) * f_k`` coordinatewise, so Euclidean
    geometry of the matrix matches the weighted geometry of the family.
    """
    vectors = _family_vectors(family, model)
    root_w = np.sqrt(model._w[model._coord_atom])
    return np.column_stack([root_w * v for v in vectors])


def frame_bounds(family, model):
    """Extreme squared singular values of the weighted synthesis matrix.

    Returns a :class:`FrameReport`; ``lower`` is 0 whenever the family has
    fewer vectors than the ambient dimension or is rank deficient.
    """
    mat = synthesis_matrix(family, model)
    smin, smax = svd_extremes(mat)
    lower = smin * smin
    upper = smax * smax
    return FrameReport(
        lower=lower,
        upper=upper,
        ambient_dim=mat.shape[0],
        family_size=mat.shape[1],
        complete=bool(lower > COMPLETE_TOL * upper),
    )


def bessel_bound(family, model):
    """Optimal Bessel constant: the largest squared singular value."""
    _, smax = svd_extremes(synthesis_matrix(family, model))
    return smax * smax


def completeness_rank(family, model):
    """Numerical rank of the span and whether it fills the ambient space.

    Rank counts singular values above ``1e-10`` times the largest.
    Returns ``(rank, complete)``.
    """
    mat = synthesis_matrix(family, model)
    s = np.linalg.svd(mat, compute_uv=False)
    if s.size == 0 or s[0] == 0.0:
        return 0, False
    rank = int(np.count_nonzero(s > RANK_TOL * s[0]))
    return rank, rank == mat.shape[0]


def analysis_coefficients(family, model, y):
    """Coefficients ``<y, f_k>`` in family order (weighted inner products)."""
    vectors = _family_vectors(family, model)
    y = model.coerce(y)
    w = model._w[model._coord_atom]
    return np.array([np.sum(w * y * np.conjugate(v)) for v in vectors])


def canonical_dual(family, model):
    """Canonical dual family ``S^{-1} f_k`` via Hermitian solves.

    The frame operator ``S`` is never inverted explicitly; each dual
    vector comes from a positive definite solve against the weighted
    synthesis matrix. Raises :class:`NotAFrame` when the family is not
    numerically complete.
    """
    report = frame_bounds(family, model)
    if not report.complete:
        raise NotAFrame(
            f"lower bound {report.lower:.3e} vs upper {report.upper:.3e}")
    mat = synthesis_matrix(family, model)
    frame_op = mat @ mat.conj().T
    duals_weighted = solve_hermitian_psd(frame_op, mat)
    root_w = np.sqrt(model._w[model._coord_atom])
    return [np.ascontiguousarray(duals_weighted[:, k] / root_w)
            for k in range(duals_weighted.shape[1])]
