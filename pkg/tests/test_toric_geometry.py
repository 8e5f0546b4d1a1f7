"""Radial descriptors, the Gauss map, period coefficients and certified minima."""

import math

import numpy as np
import pytest

from toriclab import (
    DomainError,
    Ellipsoid,
    Face,
    InsufficientDataError,
    InvalidParameterError,
    PNormBody,
    QuarterBall,
    RadialGrid,
    RolledDisk,
    ToricDomain,
    TrigProfile,
    UnsupportedOperationError,
    gauss_map,
    m_bounds,
    period_coeff,
)
from toriclab.toric_geometry import mesh_adjacency, simplex_sphere_mesh


def sphere_dirs(n, count, seed):
    rng = np.random.default_rng(seed)
    v = np.abs(rng.standard_normal((count, n))) + 1e-3
    return v / np.linalg.norm(v, axis=1)[:, None]


def angle_dirs(alphas):
    alphas = np.asarray(alphas, dtype=float)
    return np.stack([np.cos(alphas), np.sin(alphas)], axis=1)


# -- constructors and validation ------------------------------------------------

def test_quarterball_requires_positive_radius():
    with pytest.raises(InvalidParameterError):
        QuarterBall(0.0)
    with pytest.raises(InvalidParameterError):
        QuarterBall(-1.0, 3)


def test_ellipsoid_requires_positive_semiaxes():
    with pytest.raises(InvalidParameterError):
        Ellipsoid((1.0, 0.0))


def test_pnorm_exponent_range():
    with pytest.raises(InvalidParameterError):
        PNormBody((1.0, 1.0), 1.0)
    with pytest.raises(InvalidParameterError):
        PNormBody((1.0, 1.0), math.inf)
    PNormBody((1.0, 1.0), 1.0001)


def test_rolled_disk_must_fit_in_quadrant():
    with pytest.raises(InvalidParameterError):
        RolledDisk((0.5, 0.5), 1.0)
    RolledDisk((1.0, 1.0), 1.0)


def test_rolled_disk_near_arc_accepts_tangent_configuration():
    # fitting in the quadrant already forces the origin outside the disk
    near = RolledDisk((1.0, 1.0), 1.0, plus=False)
    assert np.hypot(*near.c) > near.rho
    with pytest.raises(InvalidParameterError):
        RolledDisk((0.5, 0.9), 0.6, plus=False)


def test_trig_profile_must_stay_positive():
    with pytest.raises(InvalidParameterError):
        TrigProfile(1.0, ((1.5, 2.0, 0.0),))
    TrigProfile(1.0, ((-1.0 / 17.0, 4.0, -math.pi),))


def test_radial_grid_validation():
    with pytest.raises(InvalidParameterError):
        RadialGrid(2, (1.0, 1.0, 1.0))          # too few samples
    with pytest.raises(InvalidParameterError):
        RadialGrid(2, (1.0, -1.0, 1.0, 1.0))    # nonpositive value
    with pytest.raises(InvalidParameterError):
        RadialGrid(3, (1.0,) * 5, "cubic", 4)   # cubic only for n = 2
    n_nodes = simplex_sphere_mesh(3, 4).shape[0]
    with pytest.raises(InvalidParameterError):
        RadialGrid(3, (1.0,) * (n_nodes + 1), "linear", 4)
    RadialGrid(3, (1.0,) * n_nodes, "linear", 4)


# -- radial values ----------------------------------------------------------------

def test_quarterball_radial_is_constant():
    qb = QuarterBall(2.5, 3)
    dirs = sphere_dirs(3, 40, 1)
    assert np.allclose(qb.radial(dirs), 2.5)


def test_ellipsoid_radial_axis_values_and_interior():
    e = Ellipsoid((1.0, math.sqrt(2.0)))
    assert e.radial(np.array([1.0, 0.0]))[0] == pytest.approx(1.0)
    assert e.radial(np.array([0.0, 1.0]))[0] == pytest.approx(math.sqrt(2.0))
    # ray hits the plane x/a1 + y/a2 = 1
    dirs = sphere_dirs(2, 50, 2)
    f = e.radial(dirs)
    hits = f[:, None] * dirs
    assert np.allclose(hits @ np.array([1.0, 1.0 / math.sqrt(2.0)]), 1.0)


def test_ellipsoid_extension_rejects_degenerate_directions():
    e = Ellipsoid((1.0, 2.0))
    bad = np.array([[math.cos(-1.2), math.sin(-1.2)]])
    with pytest.raises(DomainError):
        e.extended_radial(bad)


def test_pnorm_radial_on_boundary():
    body = PNormBody((1.0, 1.0), 4.0)
    dirs = sphere_dirs(2, 50, 3)
    f = body.radial(dirs)
    hits = f[:, None] * dirs
    assert np.allclose(np.sum(hits ** 4, axis=1), 1.0)
    assert body.radial(np.array([1.0, 0.0]))[0] == pytest.approx(1.0)


def test_rolled_disk_radial_tangent_configuration():
    d = RolledDisk((1.0, 1.0), 1.0)
    s2 = math.sqrt(0.5)
    assert d.radial(np.array([1.0, 0.0]))[0] == pytest.approx(1.0)
    assert d.radial(np.array([s2, s2]))[0] == pytest.approx(math.sqrt(2.0) + 1.0)
    near = RolledDisk((1.0, 1.0), 1.0, plus=False)
    assert near.radial(np.array([s2, s2]))[0] == pytest.approx(math.sqrt(2.0) - 1.0)


def test_rolled_disk_detects_missed_ray():
    deep = RolledDisk((2.0, 2.0), 1.0)
    with pytest.raises(DomainError):
        deep.radial(np.array([1.0, 0.0]))


def test_rolled_disk_convexity_flags():
    assert RolledDisk((1.0, 1.0), 1.0).convex
    assert not RolledDisk((1.0, 1.0), 1.0).concave
    near = RolledDisk((1.0, 1.0), 1.0, plus=False)
    assert near.concave and not near.convex


def test_trig_profile_radial_and_derivatives():
    prof = TrigProfile(1.0, ((-1.0 / 17.0, 4.0, -math.pi),))
    alphas = np.linspace(0.0, math.pi / 2.0, 31)
    want = 1.0 + np.cos(4.0 * alphas) / 17.0
    assert np.allclose(prof.angle_f(alphas), want)
    assert np.allclose(prof.radial(angle_dirs(alphas)), want)
    h = 1e-5
    fd1 = (prof.angle_f(alphas + h) - prof.angle_f(alphas - h)) / (2 * h)
    fd2 = (prof.angle_f(alphas + h) - 2 * prof.angle_f(alphas)
           + prof.angle_f(alphas - h)) / h ** 2
    assert np.allclose(prof.angle_f(alphas, order=1), fd1, atol=1e-8)
    assert np.allclose(prof.angle_f(alphas, order=2), fd2, atol=1e-4)


def test_radial_grid_reproduces_smooth_profile():
    src = TrigProfile(1.0, ((-0.05, 2.0, 0.3),))
    alphas = np.linspace(0.0, math.pi / 2.0, 201)
    grid = RadialGrid(2, tuple(src.angle_f(alphas)))
    probe = np.linspace(0.01, math.pi / 2.0 - 0.01, 97)
    assert np.allclose(grid.angle_f(probe), src.angle_f(probe), atol=1e-7)
    assert np.allclose(grid.angle_f(probe, order=1), src.angle_f(probe, order=1),
                       atol=1e-4)


def test_radial_grid_folds_queries_across_walls():
    vals = tuple(1.0 + 0.1 * math.sin(3.0 * a)
                 for a in np.linspace(0.0, math.pi / 2.0, 50))
    grid = RadialGrid(2, vals)
    a = 0.3
    assert grid.angle_f(np.array([-a]))[0] == pytest.approx(
        grid.angle_f(np.array([a]))[0])
    assert grid.angle_f(np.array([math.pi / 2.0 + a]))[0] == pytest.approx(
        grid.angle_f(np.array([math.pi / 2.0 - a]))[0])


def test_radial_grid_linear_refuses_gradients():
    grid = RadialGrid(2, (1.0, 1.1, 1.2, 1.1, 1.0), order="linear")
    assert not grid.smooth
    with pytest.raises(UnsupportedOperationError):
        grid.sph_grad(np.array([1.0, 0.0]))


def test_field_value_is_positively_homogeneous():
    rng = np.random.default_rng(5)
    for desc in (QuarterBall(1.5), Ellipsoid((1.0, 2.0)),
                 PNormBody((1.0, 1.3), 4.0), RolledDisk((1.0, 1.0), 1.0)):
        x = np.abs(rng.standard_normal((20, 2))) + 0.05
        c = rng.uniform(0.2, 5.0, 20)
        assert np.allclose(desc.field_value(c[:, None] * x),
                           c * desc.field_value(x))
    with pytest.raises(DomainError):
        QuarterBall(1.0).field_value(np.zeros(2))


# -- support maximization -----------------------------------------------------------

def test_quarterball_support_values():
    qb = QuarterBall(2.0)
    res = qb.support(np.array([[3.0, 4.0], [-1.0, 1.0], [-1.0, -2.0]]))
    assert res.value[0] == pytest.approx(10.0)
    assert res.value[1] == pytest.approx(2.0)
    assert res.value[2] == pytest.approx(-2.0)  # best vertex when all negative
    assert res.interior[0] and not res.interior[1]


def test_ellipsoid_support_flags_degenerate_ties():
    e = Ellipsoid((1.0, 2.0))
    res = e.support(np.array([[2.0, 1.0], [1.0, 1.0]]))
    assert res.value[0] == pytest.approx(2.0)
    assert bool(res.degenerate[0])
    assert res.value[1] == pytest.approx(2.0)
    assert not res.degenerate[1]


def test_pnorm_support_matches_dense_maximization():
    body = PNormBody((1.0, 1.5), 4.0)
    alphas = np.linspace(0.0, math.pi / 2.0, 20001)
    pts = body.radial(angle_dirs(alphas))[:, None] * angle_dirs(alphas)
    for p in ([1.0, 2.0], [0.5, 0.1], [3.0, 0.0]):
        res = body.support(np.array([p]))
        dense = float(np.max(pts @ np.array(p)))
        assert res.value[0] == pytest.approx(dense, abs=1e-6)


def test_rolled_disk_support_far_arc_and_axis_ends():
    d = RolledDisk((1.0, 1.0), 1.0)
    res = d.support(np.array([[1.0, 1.0]]))
    assert res.value[0] == pytest.approx(2.0 + math.sqrt(2.0))
    # pulling toward -x: the far-arc point leaves the patch, an axis end wins
    res2 = d.support(np.array([[-1.0, 0.2]]))
    alphas = np.linspace(0.0, math.pi / 2.0, 20001)
    dirs = angle_dirs(alphas)
    pts = d.radial(dirs)[:, None] * dirs
    dense = float(np.max(pts @ np.array([-1.0, 0.2])))
    assert res2.value[0] == pytest.approx(max(dense, 0.0), abs=1e-6)


# -- Gauss map and period coefficient ----------------------------------------------

def test_gauss_map_unit_norm_and_quarterball_identity():
    dirs = sphere_dirs(2, 30, 7)
    g = gauss_map(QuarterBall(3.0), dirs)
    assert np.allclose(np.linalg.norm(g, axis=1), 1.0)
    assert np.allclose(g, dirs)


def test_gauss_map_satisfies_support_identity():
    dirs = sphere_dirs(2, 40, 11)
    for desc in (Ellipsoid((1.0, 2.0)), PNormBody((1.0, 1.0), 4.0),
                 PNormBody((0.8, 1.4), 6.0)):
        f = desc.radial(dirs)
        x = f[:, None] * dirs
        g = gauss_map(desc, dirs)
        touch = np.sum(g * x, axis=1)
        assert np.allclose(touch, desc.support(g).value, atol=1e-8)


def test_gauss_map_needs_smooth_descriptor():
    with pytest.raises(UnsupportedOperationError):
        gauss_map(RolledDisk((1.0, 1.0), 1.0), np.array([1.0, 0.0]))
    with pytest.raises(UnsupportedOperationError):
        period_coeff(RadialGrid(2, (1.0, 1.0, 1.0, 1.0), "linear"),
                     np.array([1.0, 0.0]))


def test_period_coeff_constant_for_quarterball():
    dirs = sphere_dirs(2, 25, 13)
    assert np.allclose(period_coeff(QuarterBall(2.5), dirs), 2.5)


def test_period_coeff_matches_angle_formula():
    prof = TrigProfile(1.2, ((-0.08, 3.0, 0.4),))
    alphas = np.linspace(0.05, math.pi / 2.0 - 0.05, 60)
    f = prof.angle_f(alphas)
    d1 = prof.angle_f(alphas, order=1)
    want = f / np.sqrt(1.0 + d1 ** 2 / f ** 2)
    got = period_coeff(prof, angle_dirs(alphas))
    assert np.allclose(got, want, atol=1e-12)


def test_sph_grad_matches_finite_differences():
    h = 1e-6
    alphas = np.linspace(0.1, math.pi / 2.0 - 0.1, 25)
    for desc in (Ellipsoid((1.0, 2.0)), PNormBody((1.0, 1.0), 4.0)):
        f_plus = desc.radial(angle_dirs(alphas + h))
        f_minus = desc.radial(angle_dirs(alphas - h))
        d1 = (f_plus - f_minus) / (2 * h)
        g = desc.sph_grad(angle_dirs(alphas))
        tang = np.stack([-np.sin(alphas), np.cos(alphas)], axis=1)
        assert np.allclose(np.sum(g * tang, axis=1), d1, atol=1e-6)
        # no radial component
        assert np.allclose(np.sum(g * angle_dirs(alphas), axis=1), 0.0,
                           atol=1e-10)


# -- domain-level API ------------------------------------------------------------

def test_faces_enumeration():
    dom2 = ToricDomain(QuarterBall(1.0))
    labels = [f.label() for f in dom2.faces()]
    assert labels == ["1", "2", "1|2"]
    assert dom2.interior_face() == Face((0, 1))
    dom3 = ToricDomain(QuarterBall(1.0, 3))
    assert len(dom3.faces()) == 7
    assert sorted(f.dim for f in dom3.faces()) == [1, 1, 1, 2, 2, 2, 3]


def test_domain_radial_validates_directions():
    dom = ToricDomain(Ellipsoid((1.0, 2.0)))
    with pytest.raises(DomainError):
        dom.radial(np.array([0.5, 0.5]))       # not unit length
    with pytest.raises(DomainError):
        dom.radial(np.array([-0.6, 0.8]))      # leaves the orthant


def test_domain_json_roundtrip():
    for desc in (QuarterBall(1.5, 3), Ellipsoid((1.0, 2.0, 0.5)),
                 PNormBody((1.0, 1.3), 4.0), RolledDisk((1.0, 1.0), 1.0),
                 RolledDisk((1.0, 1.0), 1.0, plus=False),
                 TrigProfile(1.0, ((-0.05, 2.0, 0.1),)),
                 RadialGrid(2, (1.0, 1.1, 1.15, 1.1, 1.0))):
        dom = ToricDomain(desc)
        back = ToricDomain.from_json(dom.to_json())
        assert back.descriptor == desc


def test_slices_restrict_the_profile():
    e = Ellipsoid((1.0, 2.0, 3.0))
    sub = e.slice((0, 2))
    assert isinstance(sub, Ellipsoid) and sub.a == (1.0, 3.0)
    point = ToricDomain(e).slice(Face((1,)))
    assert point.radial(np.array([1.0]))[0] == pytest.approx(2.0)


# -- certified period minimum -------------------------------------------------------

def test_m_bounds_quarterball_is_exact():
    mb = m_bounds(ToricDomain(QuarterBall(1.0)), 200)
    assert mb.m == pytest.approx(1.0, abs=1e-12)
    for fb in mb.per_face:
        assert fb.value == pytest.approx(1.0, abs=1e-12)


def test_m_bounds_ellipsoid_certifies_true_infimum():
    a1, a2 = 1.0, math.sqrt(2.0)
    dom = ToricDomain(Ellipsoid((a1, a2)))
    mb = m_bounds(dom, 4000)
    assert mb.face_value(Face((0,))) == pytest.approx(a1)
    assert mb.face_value(Face((1,))) == pytest.approx(a2)
    # dense closed-form scan of the interior-face period coefficient
    alphas = np.linspace(0.0, math.pi / 2.0, 400001)
    g = np.cos(alphas) / a1 + np.sin(alphas) / a2
    dg = -np.sin(alphas) / a1 + np.cos(alphas) / a2
    f = 1.0 / g
    d1 = -dg / g ** 2
    true_inf = float(np.min(f / np.sqrt(1.0 + d1 ** 2 / f ** 2)))
    assert 0.0 < mb.m <= true_inf + 1e-12
    assert mb.m >= true_inf - 5e-3


def test_m_bounds_tightens_with_resolution():
    dom = ToricDomain(Ellipsoid((1.0, math.sqrt(2.0))))
    coarse = m_bounds(dom, 1000)
    fine = m_bounds(dom, 8000)
    assert abs(fine.m - coarse.m) < 2e-3
    assert fine.m >= coarse.m - 1e-12


def test_m_bounds_three_dimensional_domain():
    dom = ToricDomain(Ellipsoid((1.0, 1.2, 1.5)))
    mb = m_bounds(dom, 400)
    assert 0.0 < mb.m <= 1.0
    assert mb.face_value(Face((0,))) == pytest.approx(1.0)
    assert len(mb.per_face) == 7


def test_m_bounds_rejects_nonsmooth_and_coarse_meshes():
    with pytest.raises(UnsupportedOperationError):
        m_bounds(ToricDomain(RolledDisk((1.0, 1.0), 1.0)), 100)
    wiggly = TrigProfile(1.0, ((-0.9, 40.0, 0.0),))
    with pytest.raises(InsufficientDataError):
        m_bounds(ToricDomain(wiggly), 8)


def test_mesh_helpers_shapes():
    mesh = simplex_sphere_mesh(3, 6)
    assert np.allclose(np.linalg.norm(mesh, axis=1), 1.0)
    assert np.all(mesh >= 0.0)
    adj = mesh_adjacency(3, 6)
    assert adj and all(i != j for i, j in adj)
