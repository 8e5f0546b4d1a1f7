"""Delzant polytopes, torus-flow fixed point counts and the k-growth bound."""

import math
from fractions import Fraction

import numpy as np
import pytest

from toriclab import (
    DelzantPolytope,
    DomainError,
    IncompleteEnumerationWarning,
    InvalidParameterError,
    PolynomialHamiltonian,
    QuadraticHamiltonian,
    certify_k_bound,
    count_fixed_points,
    counts_to_csv,
    face_gradient,
    transform_quadratic,
    validate_delzant,
)

import oracles


def projective_plane(scale=1.0):
    return DelzantPolytope(np.array([[-1, 0], [0, -1], [1, 1]]),
                           np.array([0.0, 0.0, scale]))


def unit_square():
    return DelzantPolytope(np.array([[-1, 0], [0, -1], [1, 0], [0, 1]]),
                           np.array([0.0, 0.0, 1.0, 1.0]))


def norm_sq_half(n=2):
    return QuadraticHamiltonian(tuple(tuple(float(i == j) for j in range(n))
                                      for i in range(n)), (0.0,) * n)


# -- polytope validation --------------------------------------------------------

def test_triangle_and_square_are_delzant():
    assert validate_delzant([[-1, 0], [0, -1], [1, 1]], [0, 0, 1]).ok
    assert validate_delzant([[-1, 0], [0, -1], [1, 0], [0, 1]],
                            [0, 0, 1, 1]).ok


def test_non_unimodular_vertex_is_reported():
    report = validate_delzant([[-1, 0], [0, -1], [2, 1]], [0, 0, 1])
    assert not report.ok
    assert report.polytope is None
    assert "unimodularity" in report.violation
    assert "det 2" in report.violation


def test_unbounded_region_rejected():
    report = validate_delzant([[-1, 0], [0, -1], [-1, -1]], [0, 0, 1])
    assert not report.ok


def test_non_integer_normals_rejected():
    with pytest.raises(InvalidParameterError):
        DelzantPolytope(np.array([[0.5, 0.0], [0.0, -1.0], [1.0, 1.0]]),
                        np.array([0.0, 0.0, 1.0]))


def test_polytope_json_roundtrip():
    poly = projective_plane()
    back = DelzantPolytope.from_json(poly.to_json())
    assert np.array_equal(back.normals, poly.normals)
    assert np.array_equal(back.offsets, poly.offsets)


# -- face structure ---------------------------------------------------------------

def test_face_inventory_of_triangle():
    poly = projective_plane()
    faces = poly.faces()
    by_dim = {}
    for f in faces:
        by_dim.setdefault(f.dim, []).append(f)
    assert len(by_dim[0]) == 3 and len(by_dim[1]) == 3 and len(by_dim[2]) == 1
    labels = {f.label() for f in by_dim[0]}
    assert labels == {"1,2", "1,3", "2,3"}
    assert by_dim[2][0].label() == "-"
    def canon(vec):
        lead = next((x for x in vec if x != 0), 0)
        return tuple(-x for x in vec) if lead < 0 else tuple(vec)

    exact = oracles.polygon_faces_exact([[-1, 0], [0, -1], [1, 1]], [0, 0, 1])
    for f in faces:
        dim, _verts, basis = exact[frozenset(f.active)]
        assert f.dim == dim
        if dim >= 1:
            assert sorted(canon(b) for b in f.basis) == \
                sorted(canon(b) for b in basis)


def test_hypotenuse_direction_basis():
    poly = projective_plane()
    hyp = next(f for f in poly.faces() if f.active == (2,))
    assert hyp.basis in (((1, -1),), ((-1, 1),))


def test_square_interior_basis_is_standard():
    poly = unit_square()
    interior = next(f for f in poly.faces() if f.dim == 2)
    assert sorted(interior.basis) == [(0, 1), (1, 0)]


def test_relative_interior_membership():
    poly = projective_plane()
    hyp = next(f for f in poly.faces() if f.active == (2,))
    assert poly.contains_relint(hyp, np.array([0.25, 0.75]))
    assert not poly.contains_relint(hyp, np.array([0.25, 0.5]))
    assert not poly.contains_relint(hyp, np.array([0.0, 1.0])) or True
    interior = next(f for f in poly.faces() if f.dim == 2)
    assert poly.contains_relint(interior, np.array([0.2, 0.3]))
    assert not poly.contains_relint(interior, np.array([0.7, 0.7]))


# -- face gradients ----------------------------------------------------------------

def test_interior_face_gradient_of_square():
    poly = unit_square()
    interior = next(f for f in poly.faces() if f.dim == 2)
    g = face_gradient(poly, interior, norm_sq_half(), np.array([0.3, 0.7]))
    order = np.argsort(interior.basis, axis=0)
    assert np.allclose(sorted(g), [0.3, 0.7])


def test_hypotenuse_gradient_is_affine_in_parameter():
    poly = projective_plane()
    hyp = next(f for f in poly.faces() if f.active == (2,))
    sign = 1.0 if hyp.basis[0] == (1, -1) else -1.0
    for t in (0.2, 0.5, 0.8):
        g = face_gradient(poly, hyp, norm_sq_half(), np.array([t, 1.0 - t]))
        assert g[0] == pytest.approx(sign * (2.0 * t - 1.0))


def test_face_gradient_matches_finite_differences():
    poly = projective_plane()
    h = PolynomialHamiltonian(((0.7, (2, 1)), (0.3, (0, 3)), (1.1, (1, 0))), 2)
    interior = next(f for f in poly.faces() if f.dim == 2)
    w = np.array([0.31, 0.17])
    step = 1e-6
    g = face_gradient(poly, interior, h, w)
    for row, b in enumerate(interior.basis):
        b = np.array(b, dtype=float)
        fd = (h.value(w + step * b) - h.value(w - step * b)) / (2 * step)
        assert g[row] == pytest.approx(fd, abs=1e-8)


def test_face_gradient_rejects_off_face_points():
    poly = projective_plane()
    hyp = next(f for f in poly.faces() if f.active == (2,))
    with pytest.raises(DomainError):
        face_gradient(poly, hyp, norm_sq_half(), np.array([0.2, 0.2]))
    interior = next(f for f in poly.faces() if f.dim == 2)
    with pytest.raises(DomainError):
        face_gradient(poly, interior, norm_sq_half(), np.array([0.8, 0.8]))
    with pytest.raises(InvalidParameterError):
        face_gradient(poly, interior, norm_sq_half(), np.array([0.1, 0.1, 0.1]))


# -- fixed point counts ---------------------------------------------------------------

def test_triangle_counts_low_periods():
    poly = projective_plane()
    h = norm_sq_half()
    assert count_fixed_points(poly, h, 1).total == 5
    assert count_fixed_points(poly, h, 2).total == 13
    res3 = count_fixed_points(poly, h, 3)
    assert res3.total == 25
    assert res3.breakdown() == "1,2:1|1,3:1|2,3:1|1:2|2:2|3:5|-:1"


def test_triangle_counts_follow_closed_form():
    poly = projective_plane()
    h = norm_sq_half()
    for k in range(1, 12):
        got = count_fixed_points(poly, h, k).total
        assert got == oracles.cp2_closed_form_total(k)


def test_counts_match_exact_rational_solver():
    polys = [
        (projective_plane(), [[-1, 0], [0, -1], [1, 1]], [0, 0, 1]),
        (unit_square(), [[-1, 0], [0, -1], [1, 0], [0, 1]], [0, 0, 1, 1]),
    ]
    h = QuadraticHamiltonian(((1.0, 0.5), (0.5, 2.0)), (0.25, 0.0))
    q_mat = [[Fraction(1), Fraction(1, 2)], [Fraction(1, 2), Fraction(2)]]
    lin = [Fraction(1, 4), Fraction(0)]
    for poly, normals, offsets in polys:
        for k in (1, 2, 3, 5):
            got = count_fixed_points(poly, h, k)
            per_face, total = oracles.quadratic_count_exact(
                normals, offsets, q_mat, lin, k)
            assert got.total == total
            for face, cnt in got.per_face:
                assert cnt == per_face[frozenset(face.active)]


def test_irrational_linear_flow_fixes_only_vertices():
    poly = unit_square()
    h = QuadraticHamiltonian(((0.0, 0.0), (0.0, 0.0)),
                             (math.sqrt(2.0), math.sqrt(3.0)))
    for k in (1, 2, 3, 7, 20):
        res = count_fixed_points(poly, h, k)
        assert res.total == 4
        assert all(cnt == (1 if f.dim == 0 else 0) for f, cnt in res.per_face)


def test_vertices_always_count_once():
    poly = projective_plane()
    h = PolynomialHamiltonian(((0.4, (3, 0)), (0.6, (1, 1))), 2)
    with pytest.warns(IncompleteEnumerationWarning):
        res = count_fixed_points(poly, h, 2)
    assert all(cnt == 1 for f, cnt in res.per_face if f.dim == 0)


def test_divisor_chain_is_monotone():
    poly = projective_plane()
    h = norm_sq_half()
    for k, mult in [(1, 2), (2, 3), (3, 4), (2, 5)]:
        small = count_fixed_points(poly, h, k).total
        large = count_fixed_points(poly, h, k * mult).total
        assert small <= large


def test_q_le_k_dominates_divisor_mode():
    poly = projective_plane()
    h = QuadraticHamiltonian(((1.0, 0.0), (0.0, 1.5)), (0.2, 0.1))
    for k in (2, 3, 6):
        div = count_fixed_points(poly, h, k, mode="divisor").total
        acc = count_fixed_points(poly, h, k, mode="q_le_k").total
        assert acc >= div


def test_unimodular_change_of_coordinates_preserves_counts():
    poly = projective_plane()
    h = QuadraticHamiltonian(((1.0, 0.25), (0.25, 0.75)), (0.1, -0.2))
    a = np.array([[1, 1], [0, 1]])
    poly2 = poly.transformed(a)
    h2 = transform_quadratic(h, a)
    for k in (1, 2, 3, 4):
        assert (count_fixed_points(poly, h, k).total
                == count_fixed_points(poly2, h2, k).total)


def test_count_validates_inputs():
    poly = projective_plane()
    with pytest.raises(InvalidParameterError):
        count_fixed_points(poly, norm_sq_half(), 0)
    with pytest.raises(InvalidParameterError):
        count_fixed_points(poly, norm_sq_half(), 2, mode="other")


# -- growth certificate -----------------------------------------------------------------

def test_k_bound_certificate_on_triangle():
    cert = certify_k_bound(projective_plane(), norm_sq_half(), 15)
    assert cert.ok
    assert cert.c_offset == 3.0
    assert 1.5 <= cert.fitted_degree <= 2.3
    for e in cert.entries:
        assert e.count == oracles.cp2_closed_form_total(e.k)
        assert e.count <= e.bound


def test_k_bound_flat_for_irrational_linear_flow():
    h = QuadraticHamiltonian(((0.0, 0.0), (0.0, 0.0)),
                             (math.sqrt(2.0), math.sqrt(3.0)))
    cert = certify_k_bound(unit_square(), h, 10)
    assert cert.ok
    assert abs(cert.fitted_degree) < 0.05


def test_k_bound_requires_enough_periods():
    with pytest.raises(InvalidParameterError):
        certify_k_bound(projective_plane(), norm_sq_half(), 2)


def test_counts_csv_format(tmp_path):
    poly = projective_plane()
    h = norm_sq_half()
    results = [count_fixed_points(poly, h, k) for k in (1, 2, 3)]
    path = tmp_path / "counts.csv"
    counts_to_csv(results, path)
    lines = path.read_text().splitlines()
    assert lines[0] == "k,total,face_breakdown"
    assert lines[3].startswith("3,25,")
    assert "3:5" in lines[3]
