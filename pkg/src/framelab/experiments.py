"""Reproducible model presets and trend experiments.

Three preset families cover the interesting regimes:

* ``interpolating``: real atoms ``1 - 2**-n`` accumulating at 1, seed
  norms matched so every ratio ``|P_n x|^2 / (1 - |z_n|^2)`` equals 1;
* ``circle``: equispaced atoms on a circle of radius ``r`` with uniform
  weights and an all-ones seed;
* ``annulus``: atoms with moduli spread over ``[r_min, r_max]`` and
  seeded pseudo-random phases.

``run_sweep`` scales a preset across dimensions with truncation order
``factor * d`` and reports how the frame bounds of the resulting iterative
system move.
"""

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidInput, InvalidRadii, KernelSeed, KernelVector
from .frames import frame_bounds
from .operators import (NormalOperatorModel, SpectralAtom,
                        norm_ratio_sequence, support_radius)
from .systems import (IndexSet, IterativeSystemSpec, Normalized, Unscaled,
                      build_system)

__all__ = [
    "DEFAULT_RNG_SEED",
    "preset_interpolating_diagonal",
    "preset_circle",
    "preset_annulus",
    "SweepConfig",
    "SweepRow",
    "SweepReport",
    "run_sweep",
    "norm_ratio_experiment",
]

DEFAULT_RNG_SEED = 7


def preset_interpolating_diagonal(d):
    """Atoms ``1 - 2**-n`` for ``n = 1..d`` with matched seed norms.

    The seed block on atom ``n`` has squared norm ``1 - |z_n|^2``
    (stably computed as ``2**-n * (2 - 2**-n)``), making the singleton
    ratios identically 1. For ``n >= 54`` the value ``1 - 2**-n`` rounds
    to 1.0 in doubles, so those atoms collapse into a single atom of
    higher multiplicity with the corresponding seed entries concatenated.
    Returns ``(model, seed)``.
    """
    if not isinstance(d, (int, np.integer)) or d < 1:
        raise InvalidInput(f"dimension must be a positive integer, got {d!r}")
    atoms = []
    seed = []
    for n in range(1, d + 1):
        z = 1.0 - 2.0 ** -n
        x = np.sqrt(2.0 ** -n * (2.0 - 2.0 ** -n))
        if atoms and atoms[-1][0] == z:
            atoms[-1][1] += 1
        else:
            atoms.append([z, 1])
        seed.append(x)
    model = NormalOperatorModel(
        SpectralAtom(z, 1.0, mult) for z, mult in atoms)
    return model, np.asarray(seed, dtype=np.complex128)


def preset_circle(d, radius=1.0):
    """``d`` equispaced atoms on the circle of the given radius.

    Weights are ``1/d`` (the uniform measure) and the seed is all ones,
    so the seed is flat against the discretized circle measure.
    """
    if not isinstance(d, (int, np.integer)) or d < 2:
        raise InvalidInput(f"need at least 2 atoms, got {d!r}")
    if not (radius > 0.0) or not np.isfinite(radius):
        raise InvalidRadii(f"radius must be positive and finite, got {radius}")
    z = radius * np.exp(2j * np.pi * np.arange(d) / d)
    model = NormalOperatorModel(
        SpectralAtom(complex(v), 1.0 / d) for v in z)
    return model, np.ones(d, dtype=np.complex128)


def preset_annulus(d, r_min=0.3, r_max=1.0, rng_seed=DEFAULT_RNG_SEED):
    """``d`` atoms with moduli spread evenly over ``[r_min, r_max]``.

    Phases are drawn from ``numpy.random.default_rng(rng_seed)``, so a
    given seed reproduces the model exactly. The seed vector is all ones.
    """
    if not isinstance(d, (int, np.integer)) or d < 2:
        raise InvalidInput(f"need at least 2 atoms, got {d!r}")
    if not (0.0 < r_min < r_max) or not np.isfinite(r_max):
        raise InvalidRadii(f"need 0 < r_min < r_max, got ({r_min}, {r_max})")
    moduli = np.linspace(r_min, r_max, d)
    phases = np.random.default_rng(rng_seed).uniform(0.0, 2.0 * np.pi, d)
    z = moduli * np.exp(1j * phases)
    model = NormalOperatorModel(
        SpectralAtom(complex(v), 1.0 / d) for v in z)
    return model, np.ones(d, dtype=np.complex128)


_PRESETS = {
    "interpolating": lambda d, params, rng_seed: preset_interpolating_diagonal(d),
    "circle": lambda d, params, rng_seed: preset_circle(
        d, radius=float(params.get("radius", 1.0))),
    "annulus": lambda d, params, rng_seed: preset_annulus(
        d, r_min=float(params.get("r_min", 0.3)),
        r_max=float(params.get("r_max", 1.0)), rng_seed=rng_seed),
}


@dataclass(frozen=True)
class SweepConfig:
    """A preset swept over dimensions with truncation ``factor * d``."""

    preset: str
    dims: tuple
    params: dict = field(default_factory=dict)
    factor: int = 8
    scaling: object = Normalized()
    rng_seed: int = DEFAULT_RNG_SEED

    def __post_init__(self):
        if self.preset not in _PRESETS:
            raise InvalidInput(
                f"unknown preset {self.preset!r}; choose from {sorted(_PRESETS)}")
        dims = tuple(int(d) for d in self.dims)
        object.__setattr__(self, "dims", dims)
        if not dims or any(d < 1 for d in dims):
            raise InvalidInput("dims must be a nonempty tuple of positive integers")
        if any(b <= a for a, b in zip(dims, dims[1:])):
            raise InvalidInput("dims must be strictly increasing")
        if not isinstance(self.factor, (int, np.integer)) or self.factor < 2:
            raise InvalidInput(f"factor must be an integer >= 2, got {self.factor!r}")
        if not isinstance(self.scaling, (Unscaled, Normalized)):
            raise InvalidInput("sweeps support Unscaled or Normalized scaling")


@dataclass(frozen=True)
class SweepRow:
    """One sweep dimension: bounds of the truncated iterative system."""

    d: int
    truncation: int
    lower: float
    upper: float
    ratio: float  # upper / lower, inf when lower == 0
    error: str = ""


@dataclass(frozen=True)
class SweepReport:
    """All sweep rows plus trend verdicts over the lower bound."""

    config: SweepConfig
    rows: tuple
    lower_monotone_decreasing: bool
    lower_stable_20pct: bool
    decay_factor: float  # lower(d_first) / lower(d_last), inf when the last is 0
    partial: bool  # True when some dimension failed to evaluate


def run_sweep(config):
    """Evaluate the preset at every dimension and summarize the trend.

    A failure at one dimension is recorded in that row's ``error`` field
    and flags the report as partial instead of aborting the sweep.
    """
    rows = []
    build = _PRESETS[config.preset]
    for d in config.dims:
        truncation = config.factor * d
        try:
            model, seed = build(d, config.params, config.rng_seed)
            spec = IterativeSystemSpec(
                model, [seed], [IndexSet.all(truncation)],
                rule=config.scaling, truncation=truncation)
            report = frame_bounds(build_system(spec), model)
            ratio = report.upper / report.lower if report.lower > 0.0 else np.inf
            rows.append(SweepRow(d, truncation, report.lower, report.upper,
                                 float(ratio)))
        except Exception as exc:
            rows.append(SweepRow(d, truncation, np.nan, np.nan, np.nan,
                                 error=f"{type(exc).__name__}: {exc}"))
    good = [r for r in rows if not r.error]
    lowers = [r.lower for r in good]
    monotone = all(b <= a for a, b in zip(lowers, lowers[1:]))
    stable = bool(
        lowers and lowers[0] > 0.0
        and abs(lowers[-1] - lowers[0]) <= 0.2 * lowers[0])
    if lowers and lowers[-1] > 0.0:
        decay = lowers[0] / lowers[-1]
    else:
        decay = np.inf
    return SweepReport(
        config=config,
        rows=tuple(rows),
        lower_monotone_decreasing=bool(monotone and len(lowers) == len(rows)),
        lower_stable_20pct=stable,
        decay_factor=float(decay),
        partial=bool(len(good) != len(rows)),
    )


def norm_ratio_experiment(model, seed, count):
    """Table of successive norm ratios and their limit diagnostics.

    Returns ``(rows, summary)`` where ``rows[n] = (n, rho_n)`` for
    ``n < count`` and the summary reports the support radius, the final
    ratio, and the remaining gap between them.
    """
    try:
        ratios = norm_ratio_sequence(model, seed, count)
    except KernelSeed:
        raise
    except KernelVector as exc:
        raise KernelSeed(str(exc)) from exc
    radius = support_radius(model, seed)
    rows = [(n, float(r)) for n, r in enumerate(ratios)]
    summary = {
        "support_radius": radius,
        "rho_last": rows[-1][1],
        "gap": abs(radius - rows[-1][1]),
    }
    return rows, summary
