"""Numerical Riemann curvature of a metric given only as a function.

Derivatives of the metric are taken with fourth-order central differences
(the five-point stencil, equivalent to Richardson extrapolation of two
step sizes with ratio 2).  The Christoffel symbols are differenced once
more for the curvature tensor, so a metric evaluation must be available
on a neighborhood of radius 4 * step around the base point.
"""

from __future__ import annotations

import numpy as np

DEFAULT_STEP = 1e-3


def _central4(fn, x, i: int, step: float):
    """Fourth-order central difference of fn along coordinate i."""
    e = np.zeros_like(x)
    e[i] = 1.0
    return (
        -fn(x + 2.0 * step * e)
        + 8.0 * fn(x + step * e)
        - 8.0 * fn(x - step * e)
        + fn(x - 2.0 * step * e)
    ) / (12.0 * step)


def christoffel(metric_fn, x, step: float = DEFAULT_STEP):
    """Metric and Christoffel symbols Gamma[a, b, c] = Gamma^a_{bc} at x."""
    x = np.asarray(x, dtype=float)
    n = len(x)
    g = metric_fn(x)
    g_inv = np.linalg.inv(g)
    dg = np.array([_central4(metric_fn, x, c, step) for c in range(n)])
    # Gamma^a_{bc} = 1/2 g^{ad} (d_b g_{dc} + d_c g_{db} - d_d g_{bc})
    gamma = np.zeros((n, n, n))
    for a in range(n):
        for b in range(n):
            for c in range(n):
                s = 0.0
                for d in range(n):
                    s += g_inv[a, d] * (dg[b][d, c] + dg[c][d, b] - dg[d][b, c])
                gamma[a, b, c] = 0.5 * s
    return g, gamma


def riemann_covariant(metric_fn, x, step: float = DEFAULT_STEP):
    """Metric and fully covariant curvature tensor R[a, b, c, d] at x."""
    x = np.asarray(x, dtype=float)
    n = len(x)
    g, gamma = christoffel(metric_fn, x, step)

    def gamma_at(pt):
        return christoffel(metric_fn, pt, step)[1]

    dgamma = np.zeros((n, n, n, n))  # dgamma[c] = d_c Gamma
    for c in range(n):
        e = np.zeros(n)
        e[c] = 1.0
        dgamma[c] = (
            -gamma_at(x + 2.0 * step * e)
            + 8.0 * gamma_at(x + step * e)
            - 8.0 * gamma_at(x - step * e)
            + gamma_at(x - 2.0 * step * e)
        ) / (12.0 * step)

    # R^a_{bcd} = d_c Gamma^a_{db} - d_d Gamma^a_{cb}
    #             + Gamma^a_{ce} Gamma^e_{db} - Gamma^a_{de} Gamma^e_{cb}
    r_up = np.zeros((n, n, n, n))
    for a in range(n):
        for b in range(n):
            for c in range(n):
                for d in range(n):
                    s = dgamma[c][a, d, b] - dgamma[d][a, c, b]
                    for e in range(n):
                        s += gamma[a, c, e] * gamma[e, d, b]
                        s -= gamma[a, d, e] * gamma[e, c, b]
                    r_up[a, b, c, d] = s
    return g, np.einsum("ae,ebcd->abcd", g, r_up)


def coordinate_plane_curvatures(metric_fn, x, step: float = DEFAULT_STEP) -> dict:
    """Sectional curvatures of every coordinate 2-plane at x.

    Returns {(i, j): K} with K = R_{ijij} / (g_ii g_jj - g_ij^2); on a
    round sphere of radius a this yields +1/a^2 for every plane.
    """
    x = np.asarray(x, dtype=float)
    g, r_low = riemann_covariant(metric_fn, x, step)
    n = len(x)
    out = {}
    for i in range(n):
        for j in range(i + 1, n):
            denom = g[i, i] * g[j, j] - g[i, j] ** 2
            out[(i, j)] = float(r_low[i, j, i, j] / denom)
    return out
