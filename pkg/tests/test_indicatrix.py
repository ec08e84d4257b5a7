"""Induced unit-surface geometry: derivatives, metric, constant curvatures."""

import math

import numpy as np
import pytest

from finsleroid import (
    AngleCoords,
    Parameters,
    StencilOutOfDomain,
    angular_metric,
    domain_info,
    indicatrix_bundle,
    indicatrix_curvature,
    indicatrix_metric,
    section_curvature,
    theta_pole,
    unit_vector,
    unit_vector_angle_derivatives,
)


def _angles(params, d_eta=0.9, theta=0.6, phi=1.2):
    dom = domain_info(params)
    return AngleCoords(eta=dom.eta_min + d_eta, theta=theta, phi=phi)


def test_angle_derivatives_match_finite_differences():
    rng = np.random.default_rng(3)
    for params in (Parameters(H=1.25, p=0.8), Parameters(H=1.5, p=0.9)):
        dom = domain_info(params)
        pole = theta_pole(params)
        for _ in range(25):
            angles = AngleCoords(
                eta=dom.eta_min + rng.uniform(0.3, 1.5),
                theta=rng.uniform(0.15, pole - 0.15),
                phi=rng.uniform(0.2, 2.0 * math.pi - 0.2),
            )
            d = unit_vector_angle_derivatives(angles, params)
            step = 1e-6
            for k, name in enumerate(("eta", "theta", "phi")):
                hi = dict(eta=angles.eta, theta=angles.theta, phi=angles.phi)
                lo = dict(hi)
                hi[name] += step
                lo[name] -= step
                fd = (
                    unit_vector(AngleCoords(**hi), params)
                    - unit_vector(AngleCoords(**lo), params)
                ) / (2 * step)
                np.testing.assert_allclose(d[:, k], fd, rtol=1e-6, atol=1e-6)


def test_angle_derivatives_reduce_to_hyperboloid_chart():
    # pseudo-Euclidean case: unit vector is the standard hyperboloid chart
    params = Parameters(H=1.0, p=1.0)
    eta, theta, phi = 0.8, 0.7, 1.1
    d = unit_vector_angle_derivatives(AngleCoords(eta=eta, theta=theta, phi=phi), params)
    sh, ch = math.sinh(eta), math.cosh(eta)
    st, ct = math.sin(theta), math.cos(theta)
    sp, cp = math.sin(phi), math.cos(phi)
    expected = np.array(
        [
            [sh, 0.0, 0.0],
            [ch * st * cp, sh * ct * cp, -sh * st * sp],
            [ch * st * sp, sh * ct * sp, sh * st * cp],
            [ch * ct, -sh * st, 0.0],
        ]
    )
    np.testing.assert_allclose(d, expected, atol=1e-12)


def test_time_component_has_no_angular_derivatives():
    d = unit_vector_angle_derivatives(
        _angles(Parameters(H=1.5, p=0.9)), Parameters(H=1.5, p=0.9)
    )
    assert d[0, 1] == 0.0
    assert d[0, 2] == 0.0


def test_axial_component_azimuthal_derivative_closed_form():
    # d l^3 / d theta = -(sin(theta) / (p^2 R2)) l^3
    params = Parameters(H=1.25, p=0.8)
    angles = _angles(params)
    d = unit_vector_angle_derivatives(angles, params)
    lvec = unit_vector(angles, params)
    r2 = math.cos(angles.theta) + params.azimuthal_skew * math.sin(angles.theta)
    expected = -math.sin(angles.theta) / (params.p**2 * r2) * lvec[3]
    assert d[3, 1] == pytest.approx(expected, rel=1e-12)
    assert d[3, 2] == 0.0


def test_indicatrix_metric_unit_hyperboloid():
    params = Parameters(H=1.0, p=1.0)
    m = indicatrix_metric(AngleCoords(eta=1.0, theta=math.pi / 4, phi=0.3), params)
    sh2 = math.sinh(1.0) ** 2
    np.testing.assert_allclose(m, np.diag([1.0, sh2, sh2 * 0.5]), atol=1e-10)


def test_indicatrix_metric_warped_product_form():
    params = Parameters(H=1.5, p=0.9)
    angles = _angles(params, d_eta=1.1, theta=0.8, phi=2.2)
    m = indicatrix_metric(angles, params)
    h2 = params.H**2
    sh2 = math.sinh(angles.eta) ** 2
    expected = np.diag(
        [1.0 / h2, sh2 / h2, sh2 * math.sin(angles.theta) ** 2 / h2]
    )
    np.testing.assert_allclose(np.diag(m), np.diag(expected), rtol=1e-9)
    off = m - np.diag(np.diag(m))
    assert np.max(np.abs(off)) < 1e-10


def test_pullback_is_transversal():
    # the angular metric annihilates the unit vector along every chart direction
    params = Parameters(H=1.25, p=0.8)
    angles = _angles(params)
    y = unit_vector(angles, params)
    h = angular_metric(y, None, params)
    d = unit_vector_angle_derivatives(angles, params)
    contraction = d.T @ h @ y
    assert np.max(np.abs(contraction)) < 1e-10


def test_indicatrix_bundle_records_positive_convention():
    params = Parameters(H=1.5, p=0.9)
    bundle = indicatrix_bundle(_angles(params), params)
    assert bundle.raw_sign == 1
    assert np.all(np.linalg.eigvalsh(bundle.i_metric) > 0.0)


def test_indicatrix_curvature_unit_hyperboloid():
    params = Parameters(H=1.0, p=1.0)
    ks = indicatrix_curvature(AngleCoords(eta=1.1, theta=0.8, phi=0.9), params)
    for k in ks.values():
        assert k == pytest.approx(-1.0, abs=1e-4)


def test_indicatrix_curvature_anisotropic_value():
    params = Parameters(H=1.5, p=0.9)
    ks = indicatrix_curvature(_angles(params), params)
    for k in ks.values():
        assert k == pytest.approx(-2.25, abs=1e-3)


def test_indicatrix_curvature_constant_over_sample_points():
    params = Parameters(H=1.25, p=0.8)
    rng = np.random.default_rng(13)
    dom = domain_info(params)
    pole = theta_pole(params)
    values = []
    for _ in range(20):
        angles = AngleCoords(
            eta=dom.eta_min + rng.uniform(0.25, 1.8),
            theta=rng.uniform(0.2, pole - 0.2),
            phi=rng.uniform(0.3, 5.8),
        )
        ks = indicatrix_curvature(angles, params)
        values.extend(ks.values())
    values = np.array(values)
    assert np.max(values) - np.min(values) < 1e-3


def test_indicatrix_curvature_polar_translation_invariance():
    params = Parameters(H=1.25, p=0.8)
    dom = domain_info(params)
    ks = []
    for phi in (0.4, 1.7, 3.0, 5.1):
        angles = AngleCoords(eta=dom.eta_min + 0.8, theta=0.7, phi=phi)
        ks.append(indicatrix_curvature(angles, params)[(0, 1)])
    ks = np.array(ks)
    assert np.max(ks) - np.min(ks) < 1e-6


def test_stencil_domain_guard():
    params = Parameters(H=1.25, p=0.8)
    dom = domain_info(params)
    with pytest.raises(StencilOutOfDomain):
        indicatrix_curvature(
            AngleCoords(eta=dom.eta_min + 1e-4, theta=0.7, phi=1.0), params
        )
    with pytest.raises(StencilOutOfDomain):
        section_curvature(theta_pole(params) - 1e-4, params)


def test_section_curvature_round_sphere():
    assert section_curvature(0.8, Parameters(H=1.5, p=1.0)) == pytest.approx(
        1.0, abs=1e-4
    )


def test_section_curvature_anisotropic_value():
    assert section_curvature(0.7, Parameters(H=1.5, p=0.8)) == pytest.approx(
        0.64, abs=1e-3
    )


def test_section_curvature_constant_over_chart():
    params = Parameters(H=1.25, p=0.6)
    pole = theta_pole(params)
    values = [
        section_curvature(theta, params)
        for theta in np.linspace(0.2, pole - 0.2, 9)
    ]
    values = np.array(values)
    assert np.max(values) - np.min(values) < 1e-3
    assert values[0] == pytest.approx(0.36, abs=1e-3)
