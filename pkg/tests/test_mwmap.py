"""Radar synchronization charts: evaluation, inversion, derivatives."""

import math

import numpy as np
import pytest

from mwsync import (
    DegenerateFactor,
    EvaluationFailure,
    Inertial,
    MarzkeWheelerMap,
    NoRadarCoordinate,
    NotDifferentiable,
    Observer,
    PerturbedInertial,
    PiecewiseLinear,
    Rindler,
    Smoothness,
    SplitComplex,
    exp,
    J,
)

E = SplitComplex

OBSERVERS = [
    Inertial(0.0),
    Inertial(0.5),
    PerturbedInertial(0.3, 1.0),
    Rindler(1.0),
]


def grid_points(lo=-1.5, hi=1.5, n=9):
    vals = np.linspace(lo, hi, n)
    return [E(float(s), float(x)) for s in vals for x in vals]


def test_identity_chart_for_the_rest_observer():
    m = MarzkeWheelerMap(Inertial(0.0))
    for z in grid_points():
        assert m(z) == z


def test_rindler_chart_closed_form():
    # radar chart of the a=1 wedge observer is z -> exp(z*J)*J
    m = MarzkeWheelerMap(Rindler(1.0))
    for z in grid_points():
        w = m(z)
        ref = exp(z * J) * J
        assert abs(w.t - ref.t) <= 1e-13 * (1.0 + abs(ref.t))
        assert abs(w.x - ref.x) <= 1e-13 * (1.0 + abs(ref.x))


@pytest.mark.parametrize("obs", OBSERVERS, ids=repr)
def test_axis_restriction_is_the_worldline_bitwise(obs):
    m = MarzkeWheelerMap(obs)
    for s in np.linspace(-2.0, 2.0, 17):
        assert m(E(float(s), 0.0)) == obs(float(s))


@pytest.mark.parametrize("obs", OBSERVERS, ids=repr)
def test_algebraic_and_geometric_evaluation_agree(obs):
    m = MarzkeWheelerMap(obs)
    rng = np.random.default_rng(7)
    for _ in range(200):
        z = E(float(rng.uniform(-2, 2)), float(rng.uniform(-2, 2)))
        a = m(z)
        g = m.eval_geometric(z)
        assert abs(a.t - g.t) <= 1e-12 * (1.0 + abs(a.t))
        assert abs(a.x - g.x) <= 1e-12 * (1.0 + abs(a.x))


def test_components_match_scalar_evaluation_bitwise():
    m = MarzkeWheelerMap(PerturbedInertial(0.2, 2.0))
    s = np.linspace(-1.0, 1.0, 11)
    x = np.linspace(-0.5, 0.5, 11)
    T, X = np.meshgrid(s, x, indexing="ij")
    out_t, out_x = m.components(T, X)
    for i in range(T.shape[0]):
        for j in range(T.shape[1]):
            w = m(E(float(T[i, j]), float(X[i, j])))
            assert out_t[i, j] == w.t
            assert out_x[i, j] == w.x


@pytest.mark.parametrize("obs", OBSERVERS[:3], ids=repr)
def test_radar_inverse_roundtrip(obs):
    m = MarzkeWheelerMap(obs)
    rng = np.random.default_rng(11)
    for _ in range(50):
        z = E(float(rng.uniform(-2, 2)), float(rng.uniform(-2, 2)))
        back = m.radar_inverse(m(z))
        assert abs(back.t - z.t) <= 1e-10
        assert abs(back.x - z.x) <= 1e-10


def test_radar_inverse_roundtrip_in_the_wedge():
    m = MarzkeWheelerMap(Rindler(1.0))
    z = E(0.3, 0.7)
    back = m.radar_inverse(m(z))
    assert abs(back.t - z.t) <= 1e-10
    assert abs(back.x - z.x) <= 1e-10


def test_radar_inverse_components_vectorized():
    m = MarzkeWheelerMap(Inertial(0.5))
    t = np.array([0.0, 1.0, -0.5])
    x = np.array([0.25, -0.75, 0.0])
    out_t, out_x = m.components(t, x)
    rt, rx = m.radar_inverse_components(out_t, out_x)
    assert np.max(np.abs(rt - t)) <= 1e-10
    assert np.max(np.abs(rx - x)) <= 1e-10


def test_left_wedge_event_has_no_radar_coordinate():
    m = MarzkeWheelerMap(Rindler(1.0))
    with pytest.raises(NoRadarCoordinate) as info:
        m.radar_inverse(E(0.0, -1.0))
    msg = str(info.value)
    assert "t+x" in msg and "t-x" in msg  # both null coordinates miss


def test_past_horizon_event_names_the_failing_coordinate():
    m = MarzkeWheelerMap(Rindler(1.0))
    # t+x < 0 but t-x < 0 holds: only the plus coordinate fails
    with pytest.raises(NoRadarCoordinate) as info:
        m.radar_inverse(E(-2.0, 1.0))
    msg = str(info.value)
    assert "t+x" in msg and "t-x" not in msg


def test_window_sampled_gate_for_finite_domains():
    zig = PiecewiseLinear([(-2.0, 0.0), (0.0, 0.5), (2.0, 0.0)])
    m = MarzkeWheelerMap(zig)
    inside = m.radar_inverse(m(E(0.25, 0.125)))
    assert abs(inside.t - 0.25) <= 1e-10
    with pytest.raises(NoRadarCoordinate):
        m.radar_inverse(E(10.0, 0.0))


def test_bracketing_failure_on_a_bounded_chart():
    class Saturating(Observer):
        # claims the full line but its null profiles are bounded
        def position(self, s):
            return np.arctan(s), np.zeros_like(np.asarray(s, dtype=float))

        def velocity(self, s):
            s = np.asarray(s, dtype=float)
            return 1.0 / (1.0 + s * s), np.zeros_like(s)

    m = MarzkeWheelerMap(Saturating(), bracket_limit=1e3)
    with pytest.raises(EvaluationFailure):
        m.radar_inverse(E(3.0, 0.0))


def test_derivative_of_the_rindler_chart():
    m = MarzkeWheelerMap(Rindler(1.0))
    z = E(0.4, -0.3)
    d = m.derivative(z)
    # D = e^x (cosh s + sinh s J)
    assert d.t == pytest.approx(math.exp(-0.3) * math.cosh(0.4), rel=1e-14)
    assert d.x == pytest.approx(math.exp(-0.3) * math.sinh(0.4), rel=1e-14)
    fd = m.derivative(z, mode="fd", step=1e-6)
    assert fd.t == pytest.approx(d.t, abs=1e-9)
    assert fd.x == pytest.approx(d.x, abs=1e-9)


def test_analytic_derivative_needs_smoothness():
    zig = PiecewiseLinear([(-1.0, 0.0), (1.0, 0.5)])
    assert zig.smoothness < Smoothness.C1
    m = MarzkeWheelerMap(zig)
    with pytest.raises(NotDifferentiable):
        m.derivative(E(0.0, 0.1))
    # the symmetric difference itself is still defined
    fd = m.derivative(E(0.0, 0.1), mode="fd", step=1e-3)
    assert math.isfinite(fd.t)


def test_derivative_rejects_unknown_mode():
    m = MarzkeWheelerMap(Inertial(0.0))
    with pytest.raises(ValueError):
        m.derivative(E(0.0, 0.0), mode="spectral")


def test_conformal_factor_of_the_rindler_chart():
    m = MarzkeWheelerMap(Rindler(1.0))
    for z in (E(0.0, 0.0), E(0.5, 0.25), E(-1.0, 0.75)):
        lam = m.conformal_factor(z)
        assert lam == pytest.approx(math.exp(2.0 * z.x), rel=1e-13)
        lam_fd = m.conformal_factor(z, mode="fd", step=1e-5)
        assert lam_fd == pytest.approx(lam, rel=1e-8)


def test_conformal_factor_refuses_non_smooth_worldlines():
    zig = PiecewiseLinear([(-1.0, 0.0), (1.0, 0.5)])
    m = MarzkeWheelerMap(zig)
    with pytest.raises(NotDifferentiable):
        m.conformal_factor(E(0.0, 0.1))
    with pytest.raises(NotDifferentiable):
        m.conformal_factor(E(0.0, 0.1), mode="fd")


def test_degenerate_factor_where_the_worldline_goes_null():
    class Grazing(Observer):
        # C2 curve that touches the light cone at s = 0
        def position(self, s):
            s = np.asarray(s, dtype=float)
            return s, np.sin(s)

        def velocity(self, s):
            s = np.asarray(s, dtype=float)
            return np.ones_like(s), np.cos(s)

    m = MarzkeWheelerMap(Grazing())
    with pytest.raises(DegenerateFactor):
        m.conformal_factor(E(0.0, 0.0))
