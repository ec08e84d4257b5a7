"""Deterministic samplers of admissible angles and vectors.

Sampling goes through the angle chart, so every returned vector is valid
by construction.  All randomness flows through a caller-supplied
generator (or seed), keeping reports and tests reproducible.
"""

from __future__ import annotations

import math

import numpy as np

from .frame import Parameters, Tetrad
from .kernel import AngleCoords, domain_info, theta_pole, vector_from_angles

DEFAULT_SEED = 20240

# Stay this far above the domain floor: angle derivatives degrade at the
# boundary where the radicand root vanishes.
ETA_MARGIN = 0.2
ETA_SPAN = 2.2
THETA_MARGIN = 0.15


def resolve_rng(rng_or_seed=None) -> np.random.Generator:
    if isinstance(rng_or_seed, np.random.Generator):
        return rng_or_seed
    if rng_or_seed is None:
        return np.random.default_rng(DEFAULT_SEED)
    return np.random.default_rng(int(rng_or_seed))


def sample_angles(
    params: Parameters,
    count: int,
    rng=None,
    eta_margin: float = ETA_MARGIN,
    theta_margin: float = THETA_MARGIN,
    eta_span: float = ETA_SPAN,
) -> list[AngleCoords]:
    """Angle triples uniform over an interior box of the chart."""
    rng = resolve_rng(rng)
    dom = domain_info(params)
    pole = theta_pole(params)
    out = []
    for _ in range(count):
        eta = dom.eta_min + eta_margin + rng.uniform(0.0, eta_span)
        theta = rng.uniform(theta_margin, pole - theta_margin)
        phi = rng.uniform(0.0, 2.0 * math.pi)
        out.append(AngleCoords(eta=eta, theta=theta, phi=phi))
    return out


def sample_vectors(
    params: Parameters,
    count: int,
    rng=None,
    tetrad: Tetrad | None = None,
    scale: tuple[float, float] = (0.5, 3.0),
    **angle_kwargs,
) -> np.ndarray:
    """Valid vectors (natural coordinates), sampled through the angle chart."""
    rng = resolve_rng(rng)
    if tetrad is None:
        tetrad = Tetrad.canonical()
    frame_inv = np.linalg.inv(tetrad.rows)
    rows = []
    for angles in sample_angles(params, count, rng, **angle_kwargs):
        norm = rng.uniform(*scale)
        fc = vector_from_angles(angles, norm, params)
        yf = np.array([fc.b, fc.b * fc.w1, fc.b * fc.w2, fc.b * fc.w3])
        rows.append(frame_inv @ yf)
    return np.array(rows)
