"""Decidable checks behind the frame characterizations.

Separation of unit-disk points (Carleson products), syndetic index gaps,
the norm-rescaling lower-bound condition, the per-point ratio and matrix
conditions for interpolating-type systems, concentration of spectra near
circles, and weighted Hardy-space point evaluations.

Checks that can be inconclusive return a :class:`ConditionReport` with a
verdict ``pass`` / ``fail`` / ``indeterminate`` and a witness; purely
numeric checks return numbers.
"""

from dataclasses import dataclass, field

import numpy as np

from . import _backend
from .errors import (EmptyInput, InvalidDelta, InvalidInput, KernelSeed,
                     LengthMismatch, NotSorted, PointOutsideDisk)
from .numkernel import hermitian_extreme_eigs
from .operators import power_norm_log_table
from .systems import scaling_coefficients

__all__ = [
    "ConditionReport",
    "RadiiProfile",
    "carleson_delta",
    "uniform_separation_split",
    "syndetic_gap",
    "rescaling_condition_b",
    "singleton_ratio_check",
    "condition_iii_check",
    "circle_concentration",
    "hardy_evaluate",
]

# Largest point count for which the split check searches exhaustively
# after the greedy pass fails.
EXHAUSTIVE_LIMIT = 12


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of a decidable check: verdict plus evidence."""

    verdict: str  # "pass" | "fail" | "indeterminate"
    witness: dict = field(default_factory=dict)
    parameters: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.verdict == "pass"


@dataclass(frozen=True)
class RadiiProfile:
    """Distinct support radii of a seed family, with seed assignments."""

    radii: tuple
    seed_assignment: tuple  # per seed: index into radii, or None for kernel seeds
    seed_count: int
    nonkernel_seed_count: int


def _disk_points(points):
    p = np.ascontiguousarray(points, dtype=np.complex128)
    if p.ndim != 1:
        raise InvalidInput("points must be a 1-D sequence")
    if p.size == 0:
        raise EmptyInput("point list is empty")
    if np.any(np.abs(p) >= 1.0):
        worst = p[np.argmax(np.abs(p))]
        raise PointOutsideDisk(f"|{worst}| >= 1")
    return p


def carleson_delta(points):
    """Uniform separation constant of points in the open unit disk.

    ``inf_n prod_{k != n} |p_n - p_k| / |1 - conj(p_n) p_k|``, computed in
    the log domain. A repeated point yields exactly 0; a single point
    yields 1.
    """
    p = _disk_points(points)
    if p.size == 1:
        return 1.0
    log_sums, coincident = _backend.carleson_log_sums(p)
    if np.any(coincident):
        return 0.0
    return float(np.exp(np.min(log_sums)))


def uniform_separation_split(points, parts, threshold=1e-3):
    """Can the points be split into ``parts`` classes, each separated?

    Tries a greedy assignment first; when that fails and the input has at
    most 12 points, searches all partitions. Returns a pass report with
    the classes found, a fail report when the search is exhaustive, and
    indeterminate otherwise.
    """
    p = _disk_points(points)
    if not isinstance(parts, (int, np.integer)) or parts < 1:
        raise InvalidInput(f"parts must be a positive integer, got {parts!r}")
    if not (0.0 < threshold <= 1.0):
        raise InvalidDelta(f"threshold must lie in (0, 1], got {threshold}")
    params = {"parts": int(parts), "threshold": float(threshold)}

    def fits(indices):
        return carleson_delta(p[indices]) >= threshold

    # Greedy: place each point into the first class that stays separated.
    classes = []
    greedy_ok = True
    for i in range(p.size):
        placed = False
        for cls in classes:
            if fits(cls + [i]):
                cls.append(i)
                placed = True
                break
        if not placed:
            if len(classes) < parts:
                classes.append([i])
            else:
                greedy_ok = False
                break
    if greedy_ok:
        return ConditionReport(
            "pass",
            witness={"classes": [list(c) for c in classes],
                     "deltas": [carleson_delta(p[c]) for c in classes]},
            parameters=params)

    if p.size > EXHAUSTIVE_LIMIT:
        return ConditionReport(
            "indeterminate",
            witness={"reason": f"greedy failed and n={p.size} exceeds "
                               f"exhaustive limit {EXHAUSTIVE_LIMIT}"},
            parameters=params)

    # Exhaustive search in canonical order: a point may open at most one
    # new class, so each set partition is visited once. Classes stay
    # separated at every step (adding a point never raises the product).
    def search(i, classes):
        if i == p.size:
            return [list(c) for c in classes]
        for cls in classes:
            cls.append(i)
            if fits(cls):
                found = search(i + 1, classes)
                if found is not None:
                    return found
            cls.pop()
        if len(classes) < parts:
            classes.append([i])
            found = search(i + 1, classes)
            if found is not None:
                return found
            classes.pop()
        return None

    found = search(0, [])
    if found is not None:
        return ConditionReport(
            "pass",
            witness={"classes": found,
                     "deltas": [carleson_delta(p[c]) for c in found]},
            parameters=params)
    return ConditionReport("fail", witness={"searched": "exhaustive"},
                           parameters=params)


def syndetic_gap(indices):
    """Largest gap between successive indices, and the first index.

    Input must be strictly increasing; a single index has gap 0.
    """
    vals = [int(n) for n in indices]
    if not vals:
        raise EmptyInput("index list is empty")
    if any(b <= a for a, b in zip(vals, vals[1:])):
        raise NotSorted("indices must be strictly increasing")
    gap = max((b - a for a, b in zip(vals, vals[1:])), default=0)
    return gap, vals[0]


def rescaling_condition_b(spec, eta, delta, gap_cap):
    """Check the windowed lower bound ``|c_n| * |A^i x| >= delta``.

    A power ``n`` in a seed's index set is good when some ``i`` with
    ``|i - n| <= eta`` (and ``i >= 0``) satisfies the bound. The verdict is

    * ``fail`` when some seed has no good power, or its good powers stop
      short of the end of the index set by more than ``gap_cap``,
    * ``pass`` when every seed's good powers have all successive gaps and
      the trailing gap at most ``gap_cap``,
    * ``indeterminate`` otherwise (some interior gap exceeds the cap).
    """
    if not isinstance(eta, (int, np.integer)) or eta < 0:
        raise InvalidInput(f"eta must be a nonnegative integer, got {eta!r}")
    if not (delta > 0.0) or not np.isfinite(delta):
        raise InvalidDelta(f"delta must be positive and finite, got {delta}")
    if not isinstance(gap_cap, (int, np.integer)) or gap_cap < 1:
        raise InvalidInput(f"gap_cap must be a positive integer, got {gap_cap!r}")
    log_delta = float(np.log(delta))
    coeffs = scaling_coefficients(spec)
    params = {"eta": int(eta), "delta": float(delta), "gap_cap": int(gap_cap)}

    per_seed = []
    verdict = "pass"
    for k, (seed, rows) in enumerate(zip(spec.seeds, coeffs)):
        powers = [r[0] for r in rows]
        window = sorted({i for n in powers
                         for i in range(max(0, n - eta), n + eta + 1)})
        table = dict(zip(window, power_norm_log_table(spec.model, seed, window)))
        good = [n for n, (_, log_c, _) in zip(powers, rows)
                if any(log_c + table[i] >= log_delta
                       for i in range(max(0, n - eta), n + eta + 1))]
        if not good:
            per_seed.append({"seed": k, "good_count": 0})
            verdict = "fail"
            continue
        interior = max((b - a for a, b in zip(good, good[1:])), default=0)
        trailing = powers[-1] - good[-1]
        info = {"seed": k, "good_count": len(good), "first_good": good[0],
                "max_gap": interior, "trailing_gap": trailing}
        per_seed.append(info)
        if trailing > gap_cap:
            verdict = "fail"
        elif interior > gap_cap and verdict != "fail":
            verdict = "indeterminate"
    return ConditionReport(verdict, witness={"seeds": per_seed}, parameters=params)


def singleton_ratio_check(lambdas, seed_norms_sq):
    """Extreme ratios ``|P_n x|^2 / (1 - |lambda_n|^2)`` over singleton atoms.

    Returns ``(alpha, beta)``, the minimum and maximum ratio. Frame-type
    behavior of one-seed interpolating systems requires both to stay in
    ``(0, inf)`` uniformly.
    """
    lambdas = np.asarray(lambdas, dtype=np.complex128)
    norms = np.asarray(seed_norms_sq, dtype=np.float64)
    if lambdas.size == 0 or norms.ndim != 1 or norms.size != lambdas.size:
        raise LengthMismatch(
            f"{norms.size} squared norms for {lambdas.size} points")
    lam = _disk_points(lambdas)
    if np.any(norms < 0.0) or not np.all(np.isfinite(norms)):
        raise InvalidInput("squared norms must be finite and nonnegative")
    ratios = norms / (1.0 - np.abs(lam) ** 2)
    return float(ratios.min()), float(ratios.max())


def condition_iii_check(lambdas, projections):
    """Two-sided eigenvalue bounds of the per-atom seed Gram matrices.

    ``projections[n]`` holds the seed projections onto atom ``n`` as rows
    (length = atom multiplicity). Each atom's normalized Gram matrix is
    ``G[a, b] = sum_i v_i[a] conj(v_i[b]) / (1 - |lambda_n|^2)``; the check
    passes with witness ``alpha`` (smallest eigenvalue over all atoms) and
    ``beta`` (largest), and fails when an atom's multiplicity exceeds the
    seed count (the Gram matrix is then singular).
    """
    lam = _disk_points(lambdas)
    projections = list(projections)
    if len(projections) != lam.size:
        raise LengthMismatch(
            f"{len(projections)} projection groups for {lam.size} points")
    seed_count = None
    mats = []
    for n, group in enumerate(projections):
        g = np.asarray(group, dtype=np.complex128)
        if g.ndim != 2 or g.shape[0] < 1 or g.shape[1] < 1:
            raise InvalidInput(f"projection group {n} must be a nonempty 2-D array")
        if seed_count is None:
            seed_count = g.shape[0]
        elif g.shape[0] != seed_count:
            raise LengthMismatch(
                f"projection group {n} has {g.shape[0]} rows, expected {seed_count}")
        mats.append(g)
    for n, g in enumerate(mats):
        if g.shape[1] > seed_count:
            return ConditionReport(
                "fail",
                witness={"atom": n, "mult": int(g.shape[1]), "seeds": int(seed_count)},
                parameters={"seeds": int(seed_count)})
    alpha = np.inf
    beta = 0.0
    for n, g in enumerate(mats):
        gram = g.T @ g.conj() / (1.0 - abs(lam[n]) ** 2)
        lo, hi = hermitian_extreme_eigs(gram)
        alpha = min(alpha, lo)
        beta = max(beta, hi)
    return ConditionReport(
        "pass",
        witness={"alpha": float(alpha), "beta": float(beta)},
        parameters={"seeds": int(seed_count)})


def circle_concentration(model, seeds, delta):
    """Which atoms stay ``delta``-away from every seed support radius?

    Collects the distinct support radii ``r_1 < ... < r_N`` of the seeds
    outside the kernel, then flags every atom whose modulus lies in
    ``[0, r_1 - delta]`` or in ``[r_(i-1) + delta, r_i - delta]``. For a
    family whose iterates form a frame such offenders cannot exist, so a
    nonzero count certifies failure. Returns
    ``(profile, offenders, counts)`` with ``counts[i]`` the number of
    offenders in the band directly below ``r_(i+1)``.
    """
    seeds = [model.coerce(s) for s in seeds]
    if not seeds:
        raise EmptyInput("seed list is empty")
    radii_per_seed = []
    for s in seeds:
        b2 = model.block_norms_sq(s)
        sup = b2 > 0.0
        if sup.any() and np.any(sup & (np.abs(model._z) > 0.0)):
            radii_per_seed.append(float(np.abs(model._z[sup]).max()))
        else:
            radii_per_seed.append(None)
    live = [r for r in radii_per_seed if r is not None]
    if not live:
        raise KernelSeed("every seed lies in the kernel")
    radii = tuple(sorted(set(live)))
    if not (0.0 < delta < radii[0]):
        raise InvalidDelta(
            f"delta must lie in (0, {radii[0]}), got {delta}")
    assignment = tuple(None if r is None else radii.index(r)
                       for r in radii_per_seed)
    profile = RadiiProfile(
        radii=radii,
        seed_assignment=assignment,
        seed_count=len(seeds),
        nonkernel_seed_count=len(live),
    )
    offenders = []
    counts = [0] * len(radii)
    for atom in model.atoms:
        mod = abs(atom.z)
        for i, r in enumerate(radii):
            lo = 0.0 if i == 0 else radii[i - 1] + delta
            if lo <= mod <= r - delta:
                offenders.append(atom)
                counts[i] += 1
                break
    return profile, offenders, counts


def hardy_evaluate(phi_coeffs, lambdas):
    """Weighted point evaluations ``sqrt(1 - |l|^2) * phi(l)`` on disk points.

    ``phi_coeffs`` are power series coefficients (constant term first);
    evaluation uses Horner's scheme. An empty coefficient list is the zero
    function.
    """
    lam = _disk_points(lambdas)
    coeffs = np.asarray(phi_coeffs, dtype=np.complex128)
    if coeffs.ndim != 1:
        raise InvalidInput("coefficients must be a 1-D sequence")
    acc = np.zeros_like(lam)
    for c in coeffs[::-1]:
        acc = acc * lam + c
    return np.sqrt(1.0 - np.abs(lam) ** 2) * acc
