"""NumPy implementations of the hot numeric kernels.

These are the reference kernels. ``framelab._accel`` reimplements the same
four functions in C (via Cython); ``framelab._backend`` picks whichever is
available at import time. Contracts:

* all log-domain arguments are natural logarithms,
* ``-inf`` encodes an exact zero magnitude,
* a zero spectral value contributes only at power 0 (the 0**0 == 1
  convention), so ``0 * (-inf)`` is resolved to 0 there.

Callers pass contiguous float64 / complex128 arrays.
"""

import numpy as np


def logsumexp(values):
    """log(sum(exp(values))) with the usual max shift; values is nonempty 1-D."""
    v = np.asarray(values, dtype=np.float64)
    m = float(v.max())
    if m == -np.inf or m == np.inf:
        return m
    return float(m + np.log(np.exp(v - m).sum()))


def power_log_norms_sq(log_terms, log_mods, powers):
    """Row-wise log-sum-exp of ``log_terms[a] + 2 * powers[i] * log_mods[a]``.

    ``log_mods`` entries may be ``-inf`` (spectral value 0); those atoms
    contribute ``log_terms[a]`` at power 0 and nothing at higher powers.
    Returns a float64 array of shape ``(len(powers),)``; entries may be
    ``-inf`` when no atom contributes.
    """
    lt = np.asarray(log_terms, dtype=np.float64)
    lm = np.asarray(log_mods, dtype=np.float64)
    p = np.asarray(powers, dtype=np.float64)
    grid = np.empty((p.size, lt.size), dtype=np.float64)
    finite = np.isfinite(lm)
    if finite.any():
        grid[:, finite] = lt[finite] + 2.0 * np.outer(p, lm[finite])
    if (~finite).any():
        gate = np.where(p == 0.0, 0.0, -np.inf)
        grid[:, ~finite] = lt[~finite][None, :] + gate[:, None]
    m = grid.max(axis=1)
    out = np.array(m, copy=True)
    ok = np.isfinite(m)
    if ok.any():
        out[ok] = m[ok] + np.log(np.exp(grid[ok] - m[ok, None]).sum(axis=1))
    return out


def carleson_log_sums(points):
    """Per-point log pseudohyperbolic separation products.

    ``log_sums[n] = sum over k != n of log(|p_n - p_k| / |1 - conj(p_n) p_k|)``.
    Also returns a uint8 mask marking points that coincide exactly with
    another point (their product is an exact zero).
    """
    p = np.asarray(points, dtype=np.complex128)
    n = p.size
    diff = np.abs(p[:, None] - p[None, :])
    den = np.abs(1.0 - np.conjugate(p)[:, None] * p[None, :])
    np.fill_diagonal(diff, 1.0)
    np.fill_diagonal(den, 1.0)
    coincident = (diff == 0.0).any(axis=1)
    with np.errstate(divide="ignore"):
        logs = np.log(diff) - np.log(den)
    return logs.sum(axis=1), coincident.astype(np.uint8)


def scaled_power_matrix(coords, atom_of_coord, log_mods, angles, powers,
                        log_scales, scale_phases):
    """Assemble columns ``c_j * A^{n_j} v`` in spectral coordinates.

    Magnitudes are accumulated in the log domain (``log_scales[j] +
    powers[j] * log_mods[atom]``) and exponentiated once, so moduli far
    from 1 do not overflow intermediate products. Entry ``[i, j]`` is::

        coords[i] * scale_phases[j]
                  * exp(log_scales[j] + powers[j] * log_mods[a])
                  * exp(1i * powers[j] * angles[a])      with a = atom_of_coord[i]

    A zero spectral value (``log_mods[a] == -inf``) yields ``coords[i] *
    scale_phases[j] * exp(log_scales[j])`` at power 0 and 0 above.
    """
    c = np.asarray(coords, dtype=np.complex128)
    lm = np.asarray(log_mods, dtype=np.float64)[atom_of_coord]
    ang = np.asarray(angles, dtype=np.float64)[atom_of_coord]
    p = np.asarray(powers, dtype=np.float64)
    ls = np.asarray(log_scales, dtype=np.float64)
    expo = np.empty((c.size, p.size), dtype=np.float64)
    fin = np.isfinite(lm)
    if fin.any():
        expo[fin] = ls[None, :] + np.outer(lm[fin], p)
    if (~fin).any():
        expo[~fin] = np.where(p[None, :] == 0.0, ls[None, :], -np.inf)
    with np.errstate(over="ignore"):
        mag = np.exp(expo)
    phase = np.exp(1j * np.outer(ang, p))
    return c[:, None] * np.asarray(scale_phases)[None, :] * mag * phase
