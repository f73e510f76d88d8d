"""Split-complex arithmetic, velocities, and boosts."""

import math

import pytest
from hypothesis import given, strategies as st

from mwsync import (
    J,
    ONE,
    ZERO,
    IndeterminateComposition,
    LightspeedContext,
    NATURAL_UNITS,
    SpeedLimitExceeded,
    SplitComplex,
    TwoVelocity,
    boost,
    exp,
    inner,
    two_velocity,
    velocity_add,
)

# Magnitudes are capped so triple products stay far from overflow and
# the rounding of a product is a tiny relative perturbation.
coords = st.floats(
    min_value=-1e3, max_value=1e3, allow_nan=False, allow_infinity=False
)
numbers = st.builds(SplitComplex, coords, coords)


def close(a: SplitComplex, b: SplitComplex, tol: float) -> bool:
    scale = 1.0 + max(abs(a.t), abs(a.x), abs(b.t), abs(b.x))
    return abs(a.t - b.t) <= tol * scale and abs(a.x - b.x) <= tol * scale


def test_constants():
    assert ZERO == SplitComplex(0.0, 0.0)
    assert ONE == SplitComplex(1.0, 0.0)
    assert J == SplitComplex(0.0, 1.0)
    assert J * J == ONE


def test_known_product():
    # (2 + J)(3 + 2J) = (6 + 2) + (4 + 3)J
    assert SplitComplex(2, 1) * SplitComplex(3, 2) == SplitComplex(8, 7)


def test_multiplication_by_j_swaps_components():
    z = SplitComplex(0.3, -1.7)
    assert z * J == SplitComplex(-1.7, 0.3)
    assert J * z == z * J


def test_scalar_operations():
    z = SplitComplex(1.0, -2.0)
    assert 2.0 * z == SplitComplex(2.0, -4.0)
    assert z * 2.0 == SplitComplex(2.0, -4.0)
    assert z / 2.0 == SplitComplex(0.5, -1.0)
    assert -z == SplitComplex(-1.0, 2.0)
    assert z - z == ZERO


def test_rejects_non_finite_components():
    with pytest.raises(ValueError):
        SplitComplex(math.nan, 0.0)
    with pytest.raises(ValueError):
        SplitComplex(0.0, math.inf)


def test_conjugate_and_norm():
    z = SplitComplex(3.0, 2.0)
    assert z.conj() == SplitComplex(3.0, -2.0)
    assert z.norm_sq() == 9.0 - 4.0
    # z zbar is real and equals the quadratic form
    prod = z * z.conj()
    assert prod.x == 0.0
    assert prod.t == z.norm_sq()


def test_inner_polarizes_norm():
    a = SplitComplex(1.5, -0.25)
    b = SplitComplex(-2.0, 0.5)
    assert inner(a, a) == a.norm_sq()
    lhs = (a + b).norm_sq()
    rhs = a.norm_sq() + 2.0 * inner(a, b) + b.norm_sq()
    assert lhs == pytest.approx(rhs, rel=1e-14, abs=1e-14)


def test_exp_splits_into_hyperbolics():
    z = SplitComplex(0.5, -1.25)
    w = exp(z)
    assert w.t == pytest.approx(math.exp(0.5) * math.cosh(1.25), rel=1e-15)
    assert w.x == pytest.approx(-math.exp(0.5) * math.sinh(1.25), rel=1e-15)
    assert exp(ZERO) == ONE


def test_exp_is_a_homomorphism_on_commuting_arguments():
    a = SplitComplex(0.25, 0.5)
    b = SplitComplex(-0.75, 0.125)
    assert close(exp(a + b), exp(a) * exp(b), 1e-14)


@given(numbers, numbers, numbers)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    # rounding is relative to the inputs: near-null factors cancel, so
    # the product can be far smaller than the terms that built it
    scale = (
        (1.0 + abs(a.t) + abs(a.x))
        * (1.0 + abs(b.t) + abs(b.x))
        * (1.0 + abs(c.t) + abs(c.x))
    )
    tol = 1e-13 * scale
    for lhs, rhs in [
        ((a + b) + c, a + (b + c)),
        ((a * b) * c, a * (b * c)),
        (a * (b + c), a * b + a * c),
    ]:
        assert abs(lhs.t - rhs.t) <= tol and abs(lhs.x - rhs.x) <= tol
    assert a + ZERO == a
    assert a * ONE == a


@given(numbers, numbers)
def test_norm_is_multiplicative(a, b):
    lhs = (a * b).norm_sq()
    rhs = a.norm_sq() * b.norm_sq()
    scale = (1.0 + abs(a.t) + abs(a.x)) ** 2 * (1.0 + abs(b.t) + abs(b.x)) ** 2
    assert abs(lhs - rhs) <= 1e-12 * scale


@given(numbers, numbers)
def test_conjugation_is_an_involution_and_antimultiplicative(a, b):
    assert a.conj().conj() == a
    assert (a * b).conj() == a.conj() * b.conj()


def test_lightspeed_context_validation():
    assert NATURAL_UNITS.c == 1.0
    assert LightspeedContext(3.0e8).c == 3.0e8
    with pytest.raises(ValueError):
        LightspeedContext(0.0)
    with pytest.raises(ValueError):
        LightspeedContext(-1.0)


def test_two_velocity_known_value():
    u = two_velocity(0.6)
    assert u.u == SplitComplex(1.25, 0.75)
    assert u.gamma == 1.25
    assert u.beta == 0.6


def test_two_velocity_is_unit_and_future_directed():
    for v in (-0.99, -0.5, 0.0, 0.3, 0.999):
        u = two_velocity(v)
        assert u.u.norm_sq() == pytest.approx(1.0, abs=1e-12)
        assert u.u.t > 0.0


def test_two_velocity_respects_the_speed_limit():
    with pytest.raises(SpeedLimitExceeded):
        two_velocity(1.0)
    with pytest.raises(SpeedLimitExceeded):
        two_velocity(-1.5)
    ctx = LightspeedContext(2.0)
    # v = 1.5 is fine when c = 2
    assert two_velocity(1.5, ctx).beta == pytest.approx(0.75, rel=1e-15)


def test_two_velocity_rejects_bad_unit_vectors():
    with pytest.raises(ValueError):
        TwoVelocity(SplitComplex(1.1, 0.0))
    with pytest.raises(ValueError):
        TwoVelocity(SplitComplex(-1.25, 0.75))


def test_velocity_add_known_value():
    assert velocity_add(0.5, 0.5) == 0.8


def test_velocity_add_group_compatibility():
    for v, w in [(0.5, 0.5), (0.9, -0.3), (-0.7, -0.2), (0.1, 0.99)]:
        u = two_velocity(v).u * two_velocity(w).u
        composed = two_velocity(velocity_add(v, w)).u
        assert close(u, composed, 1e-12)


def test_velocity_add_allows_lightlike_passengers():
    # a photon stays a photon under composition with any subluminal frame
    assert velocity_add(1.0, 0.5) == 1.0
    with pytest.raises(SpeedLimitExceeded):
        velocity_add(1.5, 0.0)


def test_velocity_add_indeterminate_composition():
    with pytest.raises(IndeterminateComposition):
        velocity_add(1.0, -1.0)


def test_boost_preserves_the_quadratic_form():
    u = two_velocity(0.6)
    p = SplitComplex(2.0, -1.0)
    q = boost(u, p)
    assert q.norm_sq() == pytest.approx(p.norm_sq(), rel=1e-14)
    # boosting the rest velocity gives the boost velocity
    assert boost(u, SplitComplex(1.0, 0.0)) == u.u
