"""Shared numeric primitives.

Thin, contract-enforcing wrappers around LAPACK (via ``numpy.linalg``) plus
the log-sum-exp primitive used by every log-domain computation in the
package. All other modules funnel their linear algebra through here.
"""

import numpy as np

from . import _backend
from .errors import (EmptyInput, EmptyMatrix, InvalidInput, NonHermitian,
                     SingularOperator)

# Relative asymmetry above which a matrix is rejected as non-Hermitian.
HERMITIAN_TOL = 1e-10

# Smallest eigenvalue ratio accepted as positive definite by the solver.
DEFINITE_TOL = 1e-12


def _as_matrix(m):
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2:
        raise InvalidInput(f"expected a 2-D array, got ndim={a.ndim}")
    if a.size == 0:
        raise EmptyMatrix("matrix has zero rows or zero columns")
    if not np.all(np.isfinite(a.real) & np.isfinite(a.imag)):
        raise InvalidInput("matrix entries must be finite")
    return a


def _as_hermitian(m):
    a = _as_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise NonHermitian(f"matrix is not square: shape {a.shape}")
    scale = float(np.abs(a).max())
    asym = float(np.abs(a - a.conj().T).max())
    if asym > HERMITIAN_TOL * max(scale, 1.0):
        raise NonHermitian(f"asymmetry {asym:.3e} exceeds tolerance")
    return 0.5 * (a + a.conj().T)


def hermitian_extreme_eigs(m):
    """Smallest and largest eigenvalue of a Hermitian matrix.

    Parameters
    ----------
    m : array_like
        Square matrix, Hermitian within relative tolerance 1e-10.

    Returns
    -------
    (float, float)
        ``(min_eig, max_eig)``.
    """
    w = np.linalg.eigvalsh(_as_hermitian(m))
    return float(w[0]), float(w[-1])


def svd_extremes(m):
    """Extreme singular values of a ``rows x cols`` matrix.

    Returns ``(sigma_min, sigma_max)`` where ``sigma_min`` is the
    ``rows``-th largest singular value, taken as 0 when ``cols < rows``.
    With the matrix read as a synthesis map this is the right notion for
    lower frame bounds against the full ambient space.
    """
    a = _as_matrix(m)
    s = np.linalg.svd(a, compute_uv=False)
    rows = a.shape[0]
    sigma_max = float(s[0])
    sigma_min = float(s[rows - 1]) if a.shape[1] >= rows else 0.0
    return sigma_min, sigma_max


def log_sum_exp(terms):
    """log(sum(exp(terms))) computed with a max shift.

    Entries must be finite or ``-inf``; an all ``-inf`` input returns
    ``-inf``. Raises :class:`EmptyInput` on an empty sequence.
    """
    v = np.ascontiguousarray(terms, dtype=np.float64)
    if v.ndim != 1:
        raise InvalidInput("log_sum_exp expects a 1-D sequence")
    if v.size == 0:
        raise EmptyInput("log_sum_exp of an empty sequence")
    if np.isnan(v).any() or (v == np.inf).any():
        raise InvalidInput("entries must be finite or -inf")
    return float(_backend.logsumexp(v))


def solve_hermitian_psd(m, b):
    """Solve ``m x = b`` for Hermitian positive definite ``m``.

    Uses an eigendecomposition plus one step of iterative refinement.
    ``b`` may be a vector or a matrix of stacked right-hand sides.
    Raises :class:`SingularOperator` when the smallest eigenvalue falls
    below ``1e-12`` times the largest.
    """
    a = _as_hermitian(m)
    rhs = np.asarray(b, dtype=np.complex128)
    if rhs.shape[0] != a.shape[0]:
        raise InvalidInput(
            f"right-hand side length {rhs.shape[0]} != matrix size {a.shape[0]}")
    w, v = np.linalg.eigh(a)
    if w[-1] <= 0.0 or w[0] <= DEFINITE_TOL * w[-1]:
        raise SingularOperator(
            f"eigenvalue range [{w[0]:.3e}, {w[-1]:.3e}] is not positive definite")

    def apply_inverse(rhs_):
        if rhs_.ndim == 1:
            return v @ ((v.conj().T @ rhs_) / w)
        return v @ ((v.conj().T @ rhs_) / w[:, None])

    x = apply_inverse(rhs)
    x = x + apply_inverse(rhs - a @ x)
    return x
