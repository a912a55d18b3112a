"""Rescaled iterative systems ``{c_n A^n x}``.

A system spec bundles a model, seed vectors, one index set per seed, a
scaling rule and a truncation order. :func:`build_system` materializes the
finite family in spectral coordinates; coefficient magnitudes are carried
in the log domain until the final assembly so that normalized systems stay
finite even when the raw powers ``|A^n x|`` overflow or underflow doubles.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import _backend
from .errors import (DimensionMismatch, InvalidInput, KernelSeed,
                     OffsetOutOfRange, ZeroVector)
from .operators import power_norm_log_table, support_radius, weighted_norm

__all__ = [
    "Unscaled",
    "Normalized",
    "ShiftedNormalized",
    "ExplicitScaling",
    "IndexSet",
    "IterativeSystemSpec",
    "SystemVector",
    "scaling_coefficients",
    "build_system",
    "normalized_vector",
]


@dataclass(frozen=True)
class Unscaled:
    """Coefficients ``c_n = 1``."""


@dataclass(frozen=True)
class Normalized:
    """Coefficients ``c_n = 1 / |A^n x|`` (seed must avoid the kernel)."""


@dataclass(frozen=True)
class ShiftedNormalized:
    """Coefficients ``c_n = 1 / |A^(n + offset) x|`` with ``|offset| <= eta``.

    ``offsets`` holds one integer per index-set entry (a single offset
    broadcasts to all entries).
    """

    offsets: tuple
    eta: int

    def __post_init__(self):
        if not isinstance(self.eta, (int, np.integer)) or self.eta < 1:
            raise InvalidInput(f"eta must be a positive integer, got {self.eta!r}")
        object.__setattr__(self, "eta", int(self.eta))
        offs = tuple(int(o) for o in self.offsets)
        object.__setattr__(self, "offsets", offs)
        if not offs:
            raise InvalidInput("offsets must be nonempty")
        for o in offs:
            if abs(o) > self.eta:
                raise OffsetOutOfRange(f"offset {o} exceeds window radius eta={self.eta}")


@dataclass(frozen=True)
class ExplicitScaling:
    """Caller-supplied nonzero coefficients, one tuple per seed."""

    coefficients: tuple

    def __post_init__(self):
        coeffs = tuple(tuple(complex(c) for c in row) for row in self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        if not coeffs:
            raise InvalidInput("explicit scaling needs at least one coefficient row")
        for row in coeffs:
            if not row:
                raise InvalidInput("explicit coefficient rows must be nonempty")
            for c in row:
                if c == 0:
                    raise InvalidInput("explicit coefficients must be nonzero")


@dataclass(frozen=True)
class IndexSet:
    """A finite, strictly increasing set of nonnegative powers."""

    values: tuple

    def __post_init__(self):
        vals = tuple(int(n) for n in self.values)
        object.__setattr__(self, "values", vals)
        if not vals:
            raise InvalidInput("index set must be nonempty")
        if vals[0] < 0:
            raise InvalidInput("indices must be nonnegative")
        if any(b <= a for a, b in zip(vals, vals[1:])):
            raise InvalidInput("indices must be strictly increasing")

    @classmethod
    def all(cls, count):
        """0, 1, ..., count - 1."""
        if count < 1:
            raise InvalidInput("count must be positive")
        return cls(tuple(range(int(count))))

    @classmethod
    def arithmetic(cls, start, step, count):
        """start, start + step, ... (count terms)."""
        if step < 1 or count < 1:
            raise InvalidInput("step and count must be positive")
        return cls(tuple(int(start) + int(step) * k for k in range(int(count))))

    def __len__(self):
        return len(self.values)


class SystemVector(NamedTuple):
    """One emitted vector ``c_n A^n x`` in spectral coordinates."""

    seed_index: int
    power: int
    coords: np.ndarray


class IterativeSystemSpec:
    """Specification of a finite rescaled iterative system.

    Seeds are validated against the model dimension; every index set must
    fit inside the truncation order.
    """

    def __init__(self, model, seeds, index_sets, rule=Unscaled(), truncation=None):
        self.model = model
        seeds = [model.coerce(s) for s in seeds]
        if not seeds:
            raise InvalidInput("at least one seed is required")
        self.seeds = tuple(seeds)
        index_sets = tuple(index_sets)
        if len(index_sets) != len(seeds):
            raise DimensionMismatch(
                f"{len(index_sets)} index sets for {len(seeds)} seeds")
        for js in index_sets:
            if not isinstance(js, IndexSet):
                raise InvalidInput("index sets must be IndexSet instances")
        self.index_sets = index_sets
        if not isinstance(rule, (Unscaled, Normalized, ShiftedNormalized, ExplicitScaling)):
            raise InvalidInput(f"unknown scaling rule {rule!r}")
        self.rule = rule
        if not isinstance(truncation, (int, np.integer)) or truncation < 1:
            raise InvalidInput(f"truncation must be a positive integer, got {truncation!r}")
        self.truncation = int(truncation)
        for k, js in enumerate(index_sets):
            if js.values[-1] >= self.truncation:
                raise InvalidInput(
                    f"index set {k} reaches {js.values[-1]}, beyond truncation {truncation}")
        if isinstance(rule, ExplicitScaling):
            if len(rule.coefficients) != len(seeds):
                raise DimensionMismatch(
                    f"{len(rule.coefficients)} coefficient rows for {len(seeds)} seeds")
            for k, (row, js) in enumerate(zip(rule.coefficients, index_sets)):
                if len(row) != len(js):
                    raise DimensionMismatch(
                        f"coefficient row {k} has {len(row)} entries for {len(js)} indices")

    def __eq__(self, other):
        if not isinstance(other, IterativeSystemSpec):
            return NotImplemented
        return (self.model == other.model
                and len(self.seeds) == len(other.seeds)
                and all(np.array_equal(a, b) for a, b in zip(self.seeds, other.seeds))
                and self.index_sets == other.index_sets
                and self.rule == other.rule
                and self.truncation == other.truncation)

    def __repr__(self):
        return (f"IterativeSystemSpec(dim={self.model.dim}, seeds={len(self.seeds)}, "
                f"rule={self.rule!r}, truncation={self.truncation})")


def _seed_not_in_kernel(model, seed):
    b2 = model.block_norms_sq(seed)
    if not (b2 > 0.0).any():
        raise ZeroVector("seed is zero")
    if not np.any((b2 > 0.0) & (np.abs(model._z) > 0.0)):
        raise KernelSeed("seed lies in the kernel; normalized scalings are undefined")


def scaling_coefficients(spec):
    """Per-seed lists of ``(power, log|c_n|, phase)`` for the spec's rule.

    Magnitudes come back as logs; phases are unit complex numbers. For the
    normalized rules the magnitude is ``-log |A^i x|`` with ``i`` the
    (possibly shifted) reference power.
    """
    rule = spec.rule
    out = []
    for k, (seed, js) in enumerate(zip(spec.seeds, spec.index_sets)):
        powers = np.asarray(js.values, dtype=np.int64)
        if isinstance(rule, Unscaled):
            rows = [(int(n), 0.0, 1.0 + 0.0j) for n in powers]
        elif isinstance(rule, Normalized):
            _seed_not_in_kernel(spec.model, seed)
            logs = power_norm_log_table(spec.model, seed, powers)
            rows = [(int(n), float(-l), 1.0 + 0.0j) for n, l in zip(powers, logs)]
        elif isinstance(rule, ShiftedNormalized):
            _seed_not_in_kernel(spec.model, seed)
            offsets = rule.offsets
            if len(offsets) == 1:
                offsets = offsets * len(powers)
            if len(offsets) != len(powers):
                raise DimensionMismatch(
                    f"{len(offsets)} offsets for {len(powers)} indices (seed {k})")
            refs = powers + np.asarray(offsets, dtype=np.int64)
            if (refs < 0).any():
                bad = int(powers[refs < 0][0])
                raise OffsetOutOfRange(f"shifted reference below 0 at power {bad}")
            logs = power_norm_log_table(spec.model, seed, refs)
            rows = [(int(n), float(-l), 1.0 + 0.0j) for n, l in zip(powers, logs)]
        else:
            row = rule.coefficients[k]
            rows = [(int(n), float(np.log(abs(c))), c / abs(c))
                    for n, c in zip(powers, row)]
        out.append(rows)
    return out


def build_system(spec):
    """Materialize the system as a list of :class:`SystemVector`.

    Output order is deterministic: seeds in spec order, powers ascending.
    """
    coeffs = scaling_coefficients(spec)
    model = spec.model
    out = []
    for k, (seed, rows) in enumerate(zip(spec.seeds, coeffs)):
        powers = np.ascontiguousarray([r[0] for r in rows], dtype=np.float64)
        log_scales = np.ascontiguousarray([r[1] for r in rows], dtype=np.float64)
        phases = np.ascontiguousarray([r[2] for r in rows], dtype=np.complex128)
        mat = _backend.scaled_power_matrix(
            seed, model._coord_atom, np.ascontiguousarray(model._log_mod),
            np.ascontiguousarray(model._angle), powers, log_scales, phases)
        for j, (n, _, _) in enumerate(rows):
            out.append(SystemVector(k, n, np.ascontiguousarray(mat[:, j])))
    return out


def normalized_vector(model, x, n):
    """``A^n x / |A^n x|`` computed without forming ``A^n x`` directly.

    Magnitudes are shifted by ``n * log(support_radius)`` before
    exponentiation, so entries never overflow; the result has weighted
    norm 1. For ``n >= 1`` the seed must not lie in the kernel.
    """
    x = model.coerce(x)
    if not isinstance(n, (int, np.integer)) or n < 0:
        raise InvalidInput(f"power must be a nonnegative integer, got {n!r}")
    norm0 = weighted_norm(model, x)
    if norm0 == 0.0:
        raise ZeroVector("vector is zero")
    if n == 0:
        return x / norm0
    _seed_not_in_kernel(model, x)
    r = support_radius(model, x)
    log_mod = model._log_mod[model._coord_atom]
    angle = model._angle[model._coord_atom]
    shifted = np.where(np.isfinite(log_mod), n * (log_mod - np.log(r)), -np.inf)
    u = x * np.exp(shifted) * np.exp(1j * n * angle)
    return u / weighted_norm(model, u)
