import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import sl2c_rotation
from relepr import ConsistencyError, DomainError
from relepr.lorentz import (
    LorentzMatrix,
    apply,
    boost_along,
    boost_x,
    boost_z,
    identity,
    momentum_along,
    momentum_from_spatial,
    rest_momentum,
    rodrigues,
    spatial_rotation,
    standard_boost,
)
from relepr.spin import su2_from_rotation
from relepr.wigner import (
    Rotation3,
    extract_axis_angle,
    required_dps,
    wigner_angle,
    wigner_angle_closed_form,
    wigner_angle_from_matrix,
    wigner_matrix,
    wigner_rotation,
)

# Closed-form angle at xi = chi = 1 evaluated with mpmath at 50 digits.
DELTA_1_1 = 0.42078396163807291

rapidities = st.floats(min_value=-3.0, max_value=3.0, allow_nan=False)


def test_identity_transformation_gives_no_rotation():
    rot = wigner_rotation(identity(), momentum_along(1.2))
    np.testing.assert_allclose(rot.matrix, np.eye(3), atol=1e-14)
    assert rot.angle == pytest.approx(0.0, abs=1e-14)


def test_collinear_boosts_give_no_rotation():
    rot = wigner_rotation(boost_x(0.9), momentum_along(1.7))
    np.testing.assert_allclose(rot.matrix, np.eye(3), atol=1e-12)


def test_reference_geometry_rotates_about_y():
    rot = wigner_rotation(boost_z(1.0), momentum_along(1.0))
    np.testing.assert_allclose(rot.axis, [0, 1, 0], atol=1e-10)
    assert rot.angle == pytest.approx(DELTA_1_1, abs=1e-12)
    np.testing.assert_allclose(rot.matrix, rodrigues((0, 1, 0), DELTA_1_1), atol=1e-12)


def test_closed_form_values():
    assert wigner_angle(0.0, 2.5) == 0.0
    assert wigner_angle(2.5, 0.0) == 0.0
    assert wigner_angle(1.0, 1.0) == pytest.approx(DELTA_1_1, abs=1e-15)
    assert abs(wigner_angle(20.0, 20.0) - math.pi / 2) < 1e-6
    wa = wigner_angle_closed_form(1.0, 1.0)
    assert (wa.xi, wa.chi) == (1.0, 1.0)
    assert wa.delta == wigner_angle(1.0, 1.0)


def test_closed_form_vectorizes():
    xi = np.array([0.0, 1.0, 2.0])
    out = wigner_angle(xi, 1.0)
    assert out.shape == (3,)
    assert out[1] == pytest.approx(DELTA_1_1)


def test_quadrant_for_negative_rapidity():
    assert wigner_angle(-1.0, 1.0) == pytest.approx(-DELTA_1_1)
    assert wigner_angle(-1.0, -1.0) == pytest.approx(DELTA_1_1)


@pytest.mark.parametrize("xi,chi", [(5.0, 5.0), (8.0, 3.0), (20.0, 20.0)])
def test_extended_precision_matrix_route_matches_closed_form(xi, chi):
    assert required_dps(xi, chi) is not None
    assert wigner_angle_from_matrix(xi, chi) == pytest.approx(wigner_angle(xi, chi), abs=1e-12)


def test_float_route_breaks_down_at_large_rapidity():
    # The reason for the extended-precision path.
    with pytest.raises(ConsistencyError):
        wigner_rotation(boost_z(20.0), momentum_along(20.0))


def test_extract_axis_angle_basic():
    axis, angle = extract_axis_angle(np.eye(3))
    assert angle == 0.0
    np.testing.assert_array_equal(axis, [0, 0, 1])
    axis, angle = extract_axis_angle(rodrigues((0, 1, 0), 0.3))
    np.testing.assert_allclose(axis, [0, 1, 0], atol=1e-15)
    assert angle == pytest.approx(0.3, abs=1e-15)


def test_extract_axis_angle_tiny_angle_keeps_relative_accuracy():
    axis, angle = extract_axis_angle(rodrigues((0, 1, 0), 5e-9))
    assert angle == pytest.approx(5e-9, rel=1e-7)
    np.testing.assert_allclose(axis, [0, 1, 0], atol=1e-7)


@pytest.mark.parametrize("axis", [(1, 0, 0), (0, 0, -1), (1, 2, -2)])
def test_extract_axis_angle_half_turn(axis):
    r = rodrigues(axis, math.pi)
    got_axis, angle = extract_axis_angle(r)
    assert angle == pytest.approx(math.pi)
    n = np.asarray(axis, float) / np.linalg.norm(axis)
    assert abs(abs(got_axis @ n) - 1) < 1e-12
    np.testing.assert_allclose(rodrigues(got_axis, angle), r, atol=1e-12)


def test_extract_axis_angle_rejects_non_rotation():
    with pytest.raises(DomainError):
        extract_axis_angle(2 * np.eye(3))
    with pytest.raises(DomainError):
        extract_axis_angle(np.diag([1.0, 1.0, -1.0]))


def test_wigner_rotation_input_types():
    with pytest.raises(DomainError):
        wigner_rotation(np.eye(4), rest_momentum())


def test_broken_standard_boost_is_detected(monkeypatch):
    import relepr.wigner as wmod

    monkeypatch.setattr(wmod, "standard_boost", lambda p: identity())
    with pytest.raises(ConsistencyError):
        wmod.wigner_rotation(boost_z(1.0), momentum_along(1.0))


@settings(max_examples=200, deadline=None)
@given(xi=rapidities, chi=rapidities)
def test_wigner_matrix_fixes_rest_momentum(xi, chi):
    w = wigner_matrix(boost_z(chi), momentum_along(xi))
    np.testing.assert_allclose(w @ rest_momentum().components, [1, 0, 0, 0], atol=1e-10)


@settings(max_examples=200, deadline=None)
@given(xi=rapidities, chi=rapidities)
def test_matrix_and_closed_form_agree(xi, chi):
    assert wigner_angle_from_matrix(xi, chi) == pytest.approx(wigner_angle(xi, chi), abs=1e-10)


@settings(max_examples=100, deadline=None)
@given(xi=st.floats(0.01, 3.0), chi=st.floats(0.01, 3.0))
def test_flipping_particle_direction_flips_angle(xi, chi):
    plus = wigner_rotation(boost_z(chi), momentum_along(xi))
    minus = wigner_rotation(boost_z(chi), momentum_along(-xi))
    np.testing.assert_allclose(plus.axis, -minus.axis, atol=1e-10)
    assert plus.angle == pytest.approx(minus.angle, abs=1e-10)
    assert plus.signed_angle() == pytest.approx(-minus.signed_angle(), abs=1e-10)


def test_grid_agreement_and_monotonicity():
    grid = np.round(np.arange(0, 3.0001, 0.1), 10)
    table = np.array([[wigner_angle_from_matrix(x, c) for c in grid] for x in grid])
    closed = wigner_angle(grid[:, None], grid[None, :])
    assert np.max(np.abs(table - closed)) < 1e-10
    assert np.all(np.diff(closed[:, 1:], axis=0) > 0)  # increasing in xi for chi > 0


def test_small_angle_law():
    # The leading relative correction is -(xi^2 + chi^2) / 12, so C = 0.1 bounds it.
    for xi in (1e-3, 5e-4, 1e-4):
        for chi in (1e-3, 2e-4):
            delta = wigner_angle(xi, chi)
            assert abs(delta - xi * chi / 2) <= 0.1 * xi * chi * (xi**2 + chi**2)


@settings(max_examples=100, deadline=None)
@given(
    rapidity=st.floats(-2.0, 2.0),
    axis=st.tuples(st.floats(-1, 1), st.floats(-1, 1), st.floats(-1, 1)).filter(
        lambda v: np.linalg.norm(v) > 0.1),
    spatial=st.tuples(st.floats(-3, 3), st.floats(-3, 3), st.floats(-3, 3)),
)
def test_spin_rotation_matches_sl2c_oracle(rapidity, axis, spatial):
    p = momentum_from_spatial(list(spatial), 1.0)
    lam = boost_along(rapidity, axis)
    u = su2_from_rotation(wigner_rotation(lam, p)).matrix
    oracle = sl2c_rotation((rapidity, axis), p)
    # Same rotation, so equal up to the double-cover sign.
    err = min(np.max(np.abs(u - oracle)), np.max(np.abs(u + oracle)))
    assert err < 1e-9


def test_general_geometry_rotation_is_a_rotation():
    lam = LorentzMatrix(boost_along(0.7, (1, 1, 0)).matrix @ spatial_rotation((0, 0, 1), 0.4).matrix)
    rot = wigner_rotation(lam, momentum_from_spatial([0.3, -0.2, 1.1], 2.0))
    assert isinstance(rot, Rotation3)
    np.testing.assert_allclose(rot.matrix.T @ rot.matrix, np.eye(3), atol=1e-12)


def test_rotation_embedded_in_lorentz_group_is_its_own_wigner_rotation():
    r = spatial_rotation((1, -1, 2), 0.8)
    rot = wigner_rotation(r, momentum_along(1.5, (0.2, 0.5, -1)))
    np.testing.assert_allclose(rot.matrix, r.matrix[1:, 1:], atol=1e-12)


def test_boost_image_of_standard_boost():
    p = momentum_along(0.4, (0, 1, 1))
    np.testing.assert_allclose(apply(standard_boost(p), rest_momentum()).components, p.components)


@pytest.mark.parametrize("eps", [1e-9, -1e-9, 1e-7])
def test_extract_axis_angle_just_off_half_turn(eps):
    n = np.array([1.0, 1.0, 1.0]) / math.sqrt(3)
    r = rodrigues(n, math.pi - eps)
    axis, angle = extract_axis_angle(r)
    np.testing.assert_allclose(rodrigues(axis, angle), r, atol=1e-14)
