"""Shared generators and brute-force oracles for the test suite."""

import numpy as np

from framelab import NormalOperatorModel, SpectralAtom, apply, weighted_norm


def random_model(rng, max_atoms=16, mod_range=(0.05, 2.0), weights=True,
                 max_mult=1):
    """A model with distinct random atoms; moduli drawn from mod_range."""
    n = int(rng.integers(1, max_atoms + 1))
    while True:
        mods = rng.uniform(mod_range[0], mod_range[1], n)
        phases = rng.uniform(0.0, 2.0 * np.pi, n)
        z = mods * np.exp(1j * phases)
        if len(set(z.tolist())) == n:
            break
    w = rng.uniform(0.5, 2.0, n) if weights else np.ones(n)
    mults = (rng.integers(1, max_mult + 1, n) if max_mult > 1
             else np.ones(n, dtype=int))
    return NormalOperatorModel(
        SpectralAtom(complex(zi), float(wi), int(mi))
        for zi, wi, mi in zip(z, w, mults))


def random_seed_vector(rng, model, mod_range=(0.3, 1.2)):
    """A fully supported seed with entry moduli bounded away from 0."""
    mods = rng.uniform(mod_range[0], mod_range[1], model.dim)
    phases = rng.uniform(0.0, 2.0 * np.pi, model.dim)
    return mods * np.exp(1j * phases)


def brute_power_norm(model, v, n):
    """|A^n v| via repeated apply and the weighted norm (no logs)."""
    out = np.asarray(v, dtype=np.complex128)
    for _ in range(n):
        out = apply(model, out)
    return weighted_norm(model, out)


def brute_carleson(points):
    """Separation constant via direct double-loop products (no logs)."""
    points = list(points)
    if len(points) == 1:
        return 1.0
    best = np.inf
    for j, pj in enumerate(points):
        prod = 1.0
        for k, pk in enumerate(points):
            if k == j:
                continue
            prod *= abs(pj - pk) / abs(1.0 - np.conjugate(pj) * pk)
        best = min(best, prod)
    return float(best)


def coordinate_weights(model):
    """Per-coordinate weight vector rebuilt from the atom list."""
    return np.repeat([a.weight for a in model.atoms],
                     [a.mult for a in model.atoms]).astype(float)


def gram_matrix(family, model):
    """Weighted Gram matrix by explicit double loop over inner products."""
    w = coordinate_weights(model)
    vecs = [np.asarray(f, dtype=np.complex128) for f in family]
    m = len(vecs)
    g = np.empty((m, m), dtype=np.complex128)
    for j in range(m):
        for k in range(m):
            g[j, k] = np.sum(w * vecs[k] * np.conjugate(vecs[j]))
    return g
