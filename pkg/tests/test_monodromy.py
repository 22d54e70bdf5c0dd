"""Eigenvector transport around coalescence points and mixing-angle limits."""

import math

import numpy as np
import pytest

from ep_atlas import (
    ContourError,
    ThetaSingularError,
    build_picket_fence,
    build_two_level,
    find_eps,
    loop_ep,
    omega_comparison,
    theta_along,
    theta_of,
    two_level_eps,
    two_level_loop,
)

# fourth-order monodromy of a square-root branch point, in the canonical
# gauge where the lower-labeled state of a swapped pair maps with +1
WINDING_TABLE = {
    1: ((1, 0), (1, -1)),
    2: ((0, 1), (-1, -1)),
    3: ((1, 0), (1, -1)),
    4: ((0, 1), (1, 1)),
    -1: ((1, 0), (1, -1)),
    -2: ((0, 1), (-1, -1)),
}


@pytest.mark.parametrize("windings", [1, 2, 3, 4, -1, -2])
def test_two_level_winding_table(windings):
    res = two_level_loop(0.0, 1.0, 30.0, windings=windings)
    perm, signs = WINDING_TABLE[windings]
    assert res.permutation == perm
    assert res.signs == signs
    assert res.matrix_error < 1e-8
    assert res.min_overlap > 0.999
    assert len(res.enclosed) == 1


def test_loop_composition_is_group_like():
    # transporting twice must square the one-winding matrix
    one = two_level_loop(0.0, 1.0, 30.0, windings=1)
    two = two_level_loop(0.0, 1.0, 30.0, windings=2)
    np.testing.assert_allclose(one.matrix @ one.matrix, two.matrix, atol=1e-10)


def test_empty_loop_is_identity():
    # a contour enclosing no coalescence point must return every state to itself
    m = build_two_level(0.0, 1.0, 30.0)
    res = loop_ep(m, center=0.05 + 0.0j, radius=0.02, windings=1)
    assert res.permutation == (0, 1)
    assert res.signs == (1, 1)
    assert res.enclosed == ()


def test_contour_guards():
    m = build_two_level(0.0, 1.0, 30.0)
    ep = two_level_eps(0.0, 1.0, 30.0)
    with pytest.raises(ContourError):
        loop_ep(m, center=complex(ep.coupling), radius=0.1, windings=0)
    with pytest.raises(ContourError):
        # an exceptional point sitting exactly on the circle
        loop_ep(m, center=complex(ep.coupling) + 0.1, radius=0.1)
    f = build_picket_fence(4)
    with pytest.raises(ContourError):
        # both conjugate points of the 4-ladder inside one circle
        loop_ep(f, center=0.3716105483597324 + 0.0j, radius=0.25)


def test_theta_ray_limits():
    assert theta_of(0.0, 1.0, 30.0, 0.0) == 0j
    th = theta_of(0.0, 1.0, 30.0, 100.0)
    # the lower-anchored branch approaches the channel angle from below 45 deg
    assert th.real == pytest.approx(math.radians(30.0), abs=1e-3)
    with pytest.raises(ThetaSingularError):
        theta_of(0.0, 1.0, 45.0, 1.0)  # ray ends exactly on the coalescence


def test_theta_quarter_turn_per_winding():
    ep = two_level_eps(0.0, 1.0, 30.0)
    c = complex(ep.coupling)
    rho = 0.3 * abs(c)
    t = np.arange(513) / 512.0
    th = theta_along(0.0, 1.0, 30.0, c + rho * np.exp(-2j * np.pi * t))
    step = (th[-1] - th[0]) / (np.pi / 2)
    assert abs(abs(step.real) - 1.0) < 1e-9
    assert abs(step.imag) < 1e-9
    t2 = np.arange(1025) / 512.0
    th2 = theta_along(0.0, 1.0, 30.0, c + rho * np.exp(-2j * np.pi * t2))
    assert abs((th2[-1] - th2[0]) - 2 * (th[-1] - th[0])) < 1e-9


def test_strong_coupling_angle_splits_at_45():
    # just below 45 deg the limit is -cot(omega), just above it is tan(omega)
    lo = omega_comparison(0.0, 1.0, 44.0)
    hi = omega_comparison(0.0, 1.0, 46.0)
    assert lo.prediction == "-cot(omega)"
    assert hi.prediction == "tan(omega)"
    assert lo.deviation < 1e-4
    assert hi.deviation < 1e-4
    assert lo.tan_theta_limit < 0 < hi.tan_theta_limit
    with pytest.raises(ThetaSingularError):
        omega_comparison(0.0, 1.0, 45.0)


def test_strong_coupling_angle_generic_channels():
    # the finite-coupling correction scales with the limit value itself,
    # so away from 45 deg the fair bound is relative
    for w in (20.0, 30.0, 60.0, 75.0):
        comp = omega_comparison(0.0, 1.0, w)
        rel = comp.deviation / abs(comp.predicted)
        assert rel < 1e-4, "omega=%g relative deviation %g" % (w, rel)
