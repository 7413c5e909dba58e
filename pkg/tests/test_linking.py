import numpy as np
import pytest

from expspec.homotopy import hopf
from expspec.linking import (
    DEFAULT_POLE,
    CurvesTooClose,
    LinkingResult,
    NearPole,
    PolylineCurve3,
    curve_separation,
    fiber_to_csv,
    gauss_linking,
    hopf_fiber,
    hopf_invariant_of_h,
    stereographic,
)


def circle(radius=1.0, n=64, center=(0, 0, 0), plane="xy"):
    t = 2 * np.pi * np.arange(n) / n
    c = np.zeros((n, 3))
    if plane == "xy":
        c[:, 0], c[:, 1] = np.cos(t), np.sin(t)
    else:  # xz
        c[:, 0], c[:, 2] = np.cos(t), np.sin(t)
    return PolylineCurve3(radius * c + np.asarray(center, dtype=float))


def test_fiber_over_poles():
    w0, w1 = hopf_fiber((0, 1), 64)
    assert np.abs(np.abs(w0) - 1).max() <= 1e-15
    assert np.all(w1 == 0)
    w0, w1 = hopf_fiber((0, -1), 64)
    assert np.all(w0 == 0)
    assert np.abs(np.abs(w1) - 1).max() <= 1e-15


def test_fiber_over_equatorial_value():
    w0, w1 = hopf_fiber((-1, 0), 64)
    s = 1 / np.sqrt(2)
    assert w0[0] == pytest.approx(s) and w1[0] == pytest.approx(s)


def test_fibers_map_back_to_their_value():
    rng = np.random.RandomState(9)
    for _ in range(25):
        v = rng.standard_normal(3)
        v /= np.linalg.norm(v)
        p = (v[0] + 1j * v[1], v[2])
        w0, w1 = hopf_fiber(p, 32)
        h0, h1 = hopf(w0, w1)
        dev = np.sqrt(np.abs(h0 - p[0]) ** 2 + (h1 - p[1]) ** 2)
        assert dev.max() <= 1e-12


def test_fiber_input_validation():
    with pytest.raises(ValueError):
        hopf_fiber((0, 1), 8)
    with pytest.raises(ValueError):
        hopf_fiber((0.5, 0.5), 64)  # not on the 2-sphere


def test_stereographic_antipode_hits_origin():
    q = DEFAULT_POLE
    out = stereographic(-q.w0, -q.w1)
    assert np.linalg.norm(out) <= 1e-15


def test_stereographic_preserves_equatorial_norms():
    # (i/sqrt2, -1/sqrt2) is orthogonal to the default pole in R^4
    s = 1 / np.sqrt(2)
    out = stereographic(1j * s, -s)
    assert np.linalg.norm(out) == pytest.approx(1.0)


def test_stereographic_near_pole_raises():
    with pytest.raises(NearPole):
        stereographic(DEFAULT_POLE.w0, DEFAULT_POLE.w1)


def test_polyline_validation():
    with pytest.raises(ValueError):
        PolylineCurve3(np.zeros((8, 3)))
    pts = circle(n=32).points.copy()
    pts[5] = pts[6]
    with pytest.raises(ValueError):
        PolylineCurve3(pts)


def test_unlinked_far_circles():
    c1 = circle(n=64)
    c2 = circle(n=64, center=(0, 0, 10), plane="xy")
    assert gauss_linking(c1, c2).rounded == 0
    c3 = c1.translated((10, 0, 0))
    assert gauss_linking(c1, c3).rounded == 0


def test_classical_hopf_link():
    c1 = circle(n=512)
    c2 = circle(n=512, center=(1, 0, 0), plane="xz")
    res = gauss_linking(c1, c2)
    assert abs(res.rounded) == 1
    assert res.residual <= 1e-3


def test_linking_symmetry_and_orientation():
    c1 = circle(n=128)
    c2 = circle(n=128, center=(1, 0, 0), plane="xz")
    r12 = gauss_linking(c1, c2)
    r21 = gauss_linking(c2, c1)
    assert r12.rounded == r21.rounded
    assert gauss_linking(c1.reversed(), c2).rounded == -r12.rounded


def test_linking_rigid_motion_invariance():
    c1 = circle(n=96)
    c2 = circle(n=96, center=(1, 0, 0), plane="xz")
    base = gauss_linking(c1, c2).raw
    # fixed rotation about (1,1,1)/sqrt(3) by 0.7 rad, plus a translation
    axis = np.ones(3) / np.sqrt(3)
    th = 0.7
    k = np.array([[0, -axis[2], axis[1]], [axis[2], 0, -axis[0]], [-axis[1], axis[0], 0]])
    rot = np.eye(3) + np.sin(th) * k + (1 - np.cos(th)) * (k @ k)
    shift = np.array([0.3, -1.2, 2.5])
    m1 = PolylineCurve3(c1.points @ rot.T + shift)
    m2 = PolylineCurve3(c2.points @ rot.T + shift)
    assert gauss_linking(m1, m2).raw == pytest.approx(base, abs=1e-10)


def test_curves_too_close_raises():
    c1 = circle(n=64)
    c2 = PolylineCurve3(c1.points + np.array([0, 0, 5e-4]))
    assert curve_separation(c1, c2) < 1e-3
    with pytest.raises(CurvesTooClose):
        gauss_linking(c1, c2)


def test_linking_result_invariant():
    with pytest.raises(ValueError):
        LinkingResult(raw=0.5, rounded=0, residual=0.5)


def test_hopf_invariant_converges():
    res = {n: hopf_invariant_of_h(n) for n in (64, 128, 256)}
    for n, r in res.items():
        assert abs(r.rounded) == 1
    assert res[64].residual <= 0.2
    assert res[256].residual <= 0.05
    # doubling the segment count at least halves the residual
    assert res[128].residual <= res[64].residual / 2
    assert res[256].residual <= res[128].residual / 2


def test_hopf_invariant_regular_value_independence():
    a = hopf_invariant_of_h(128)
    b = hopf_invariant_of_h(128, values=((1.0, 0.0), (-1.0, 0.0)))
    assert abs(a.rounded) == abs(b.rounded) == 1


def test_projection_pole_clearance_enforced():
    from expspec.sphere import SpherePoint3

    # a pole sitting on the first fiber must be rejected
    with pytest.raises(NearPole):
        hopf_invariant_of_h(64, pole=SpherePoint3(1.0 + 0j, 0j))


def test_segment_floor():
    with pytest.raises(ValueError):
        hopf_invariant_of_h(32)


def test_fiber_csv_export(tmp_path):
    w0, w1 = hopf_fiber((0, 1), 64)
    curve = PolylineCurve3(stereographic(w0, w1))
    path = tmp_path / "fiber.csv"
    fiber_to_csv(curve, path)
    data = np.loadtxt(path, delimiter=",", skiprows=1)
    assert np.array_equal(data, curve.points)
