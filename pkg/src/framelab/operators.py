"""Normal operators in finite spectral form.

A model is a finite list of spectral atoms ``(z, weight, mult)``: the
operator acts on the weighted space of coordinate blocks (one block of
length ``mult`` per atom, inner product ``sum_a weight_a * <u_a, v_a>``,
conjugate-linear in the second argument) as multiplication by ``z`` on
each block. Vectors are plain 1-D complex arrays of length ``dim``,
laid out block by block in atom order.

All power norms are computed in the log domain, so ``|A^n x|`` is exact
in regimes where the linear-domain value would overflow or underflow.
"""

from dataclasses import dataclass

import numpy as np

from . import _backend
from .errors import (DimensionMismatch, InvalidInput, KernelVector,
                     NegativePower, ZeroVector)

__all__ = [
    "SpectralAtom",
    "NormalOperatorModel",
    "apply",
    "weighted_inner",
    "weighted_norm",
    "power_norm_log",
    "power_norm_log_table",
    "norm_ratio_sequence",
    "support_radius",
    "is_invertible",
    "kernel_component",
]


@dataclass(frozen=True)
class SpectralAtom:
    """One spectral point: value ``z``, measure ``weight``, multiplicity ``mult``."""

    z: complex
    weight: float
    mult: int = 1

    def __post_init__(self):
        z = complex(self.z)
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "weight", float(self.weight))
        if not (np.isfinite(z.real) and np.isfinite(z.imag)):
            raise InvalidInput("atom value must be finite")
        if not np.isfinite(self.weight) or self.weight <= 0.0:
            raise InvalidInput(f"atom weight must be positive, got {self.weight}")
        if not isinstance(self.mult, (int, np.integer)) or self.mult < 1:
            raise InvalidInput(f"atom multiplicity must be a positive integer, got {self.mult}")
        object.__setattr__(self, "mult", int(self.mult))


class NormalOperatorModel:
    """A normal operator given by pairwise distinct spectral atoms.

    Parameters
    ----------
    atoms : sequence of SpectralAtom
        Nonempty; the values ``z`` must be pairwise distinct (equal values
        belong in one atom with a larger multiplicity).

    Attributes
    ----------
    dim : int
        Total coordinate dimension, the sum of multiplicities.
    op_norm : float
        Operator norm, ``max |z|``.
    """

    def __init__(self, atoms):
        atoms = tuple(atoms)
        if not atoms:
            raise InvalidInput("a model needs at least one atom")
        for a in atoms:
            if not isinstance(a, SpectralAtom):
                raise InvalidInput("atoms must be SpectralAtom instances")
        values = [a.z for a in atoms]
        if len(set(values)) != len(values):
            raise InvalidInput(
                "atom values must be pairwise distinct; merge equal values into one atom")
        self.atoms = atoms
        self._z = np.array(values, dtype=np.complex128)
        self._w = np.array([a.weight for a in atoms], dtype=np.float64)
        self._mult = np.array([a.mult for a in atoms], dtype=np.int64)
        self._starts = np.concatenate(([0], np.cumsum(self._mult)))[:-1]
        self.dim = int(self._mult.sum())
        self.op_norm = float(np.abs(self._z).max())
        self._coord_atom = np.repeat(np.arange(len(atoms), dtype=np.int64), self._mult)
        with np.errstate(divide="ignore"):
            self._log_mod = np.log(np.abs(self._z))
        self._angle = np.angle(self._z)

    @classmethod
    def from_values(cls, values, weights=None, mults=None):
        """Build a model from parallel sequences (weights default to 1)."""
        values = list(values)
        weights = [1.0] * len(values) if weights is None else list(weights)
        mults = [1] * len(values) if mults is None else list(mults)
        if not (len(values) == len(weights) == len(mults)):
            raise DimensionMismatch("values, weights, mults must have equal lengths")
        return cls(SpectralAtom(z, w, m) for z, w, m in zip(values, weights, mults))

    def coerce(self, v):
        """Validate a coordinate vector and return it as complex128."""
        arr = np.ascontiguousarray(v, dtype=np.complex128)
        if arr.ndim != 1 or arr.size != self.dim:
            raise DimensionMismatch(
                f"vector of shape {np.shape(v)} does not match dimension {self.dim}")
        if not np.all(np.isfinite(arr.real) & np.isfinite(arr.imag)):
            raise InvalidInput("vector entries must be finite")
        return arr

    def block_norms_sq(self, v):
        """Per-atom squared Euclidean block norms (unweighted)."""
        return np.add.reduceat(np.abs(v) ** 2, self._starts)

    def __eq__(self, other):
        if not isinstance(other, NormalOperatorModel):
            return NotImplemented
        return self.atoms == other.atoms

    def __hash__(self):
        return hash(self.atoms)

    def __repr__(self):
        return f"NormalOperatorModel({list(self.atoms)!r})"


def apply(model, v):
    """Multiply by the operator: scale each block by its atom value."""
    v = model.coerce(v)
    return v * model._z[model._coord_atom]


def weighted_inner(model, u, v):
    """Inner product of the weighted space (conjugate-linear in ``v``)."""
    u = model.coerce(u)
    v = model.coerce(v)
    return complex(np.sum(model._w[model._coord_atom] * u * np.conjugate(v)))


def weighted_norm(model, v):
    """Norm induced by :func:`weighted_inner`."""
    v = model.coerce(v)
    return float(np.sqrt(np.sum(model._w[model._coord_atom] * np.abs(v) ** 2)))


def _log_power_terms(model, v):
    """Log terms of the supported atoms: ``log(w_a * |block_a|^2)``."""
    b2 = model.block_norms_sq(v)
    sup = b2 > 0.0
    if not sup.any():
        raise ZeroVector("vector is zero")
    return np.log(model._w[sup] * b2[sup]), model._log_mod[sup]


def power_norm_log_table(model, v, powers):
    """``log |A^n v|`` for every ``n`` in ``powers``.

    Powers must be nonnegative integers. Entries can be ``-inf`` (the
    power annihilates the vector) but never overflow: the sum
    ``sum_a w_a |block_a|^2 |z_a|^(2n)`` is accumulated in the log domain.
    """
    v = model.coerce(v)
    p = np.ascontiguousarray(powers, dtype=np.float64)
    if p.ndim != 1:
        raise InvalidInput("powers must be a 1-D sequence")
    if p.size and (np.any(p < 0) or np.any(p != np.floor(p))):
        raise NegativePower("powers must be nonnegative integers")
    log_terms, log_mods = _log_power_terms(model, v)
    return 0.5 * _backend.power_log_norms_sq(
        np.ascontiguousarray(log_terms), np.ascontiguousarray(log_mods), p)


def power_norm_log(model, v, n):
    """``log |A^n v|`` for a single nonnegative integer power."""
    if not isinstance(n, (int, np.integer)) or n < 0:
        raise NegativePower(f"power must be a nonnegative integer, got {n!r}")
    return float(power_norm_log_table(model, v, [n])[0])


def support_radius(model, v):
    """Largest ``|z|`` among atoms where ``v`` has a nonzero block."""
    v = model.coerce(v)
    b2 = model.block_norms_sq(v)
    sup = b2 > 0.0
    if not sup.any():
        raise ZeroVector("vector is zero")
    return float(np.abs(model._z[sup]).max())


def norm_ratio_sequence(model, v, count):
    """Successive norm ratios ``|A^(n+1) v| / |A^n v|`` for ``n < count``.

    The sequence is nondecreasing and converges to
    :func:`support_radius` as ``n`` grows. Raises :class:`KernelVector`
    when ``v`` lies in the kernel (every ratio would be 0/0 past n = 0).
    """
    v = model.coerce(v)
    if not isinstance(count, (int, np.integer)) or count < 1:
        raise InvalidInput(f"count must be a positive integer, got {count!r}")
    b2 = model.block_norms_sq(v)
    sup = b2 > 0.0
    if not sup.any():
        raise ZeroVector("vector is zero")
    if not np.any(sup & (np.abs(model._z) > 0.0)):
        raise KernelVector("vector is supported only on the kernel atom")
    table = power_norm_log_table(model, v, np.arange(count + 1))
    return np.exp(np.diff(table))


def is_invertible(model):
    """True when no atom value is 0."""
    return bool(np.abs(model._z).min() > 0.0)


def kernel_component(model, v):
    """Split ``v`` into its kernel part (blocks with ``z == 0``) and the rest."""
    v = model.coerce(v)
    in_kernel = np.abs(model._z[model._coord_atom]) == 0.0
    kernel_part = np.where(in_kernel, v, 0.0)
    rest = np.where(in_kernel, 0.0, v)
    return kernel_part, rest
