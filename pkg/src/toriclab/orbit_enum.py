"""Enumeration of closed-orbit classes on a toric boundary up to an action
cutoff, with polynomial-growth certificates.

Each face of the domain carries classes labelled by nonzero integer vectors
p in the face's coordinate lattice. A class is present when the face's Gauss
map hits the direction p/|p| at an interior point theta_p, and its action is

    action(p) = |p| * T(theta_p) = max over the face patch of <p, x>,

which is also the support value of the patch in direction p. Enumeration
scans all integer vectors with |p| <= s_max / m (m a certified lower bound
for T) and accepts those whose maximizer meets the open face. Two routes are
implemented: closed-form or grid support maximization for convex slices, and
direct Gauss-map inversion for smooth slices; they must agree and tests hold
them to that.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegenerateClassWarning,
    IncompleteEnumerationWarning,
    InvalidParameterError,
    NoRegularPerturbationError,
    SpectralValueError,
    UnsupportedOperationError,
)
from .toric_geometry import (
    Descriptor,
    Face,
    MBounds,
    QuarterBall,
    ToricDomain,
    _as_theta_batch,
    gauss_map,
    m_bounds,
    period_coeff,
    simplex_sphere_mesh,
)

ACTION_TOL = 1e-9
ANGULAR_TOL = 1e-8
NEWTON_RESIDUAL = 1e-12
NEWTON_MAX_ITER = 60
INTERIOR_TOL = 1e-9


# ---------------------------------------------------------------------------
# integer vectors in a ball

def integer_ball_chunks(dim: int, radius: float, chunk: int = 200_000,
                        positive_only: bool = False):
    """Yield arrays of nonzero integer vectors with |p| <= radius.

    positive_only restricts to strictly positive components, valid when the
    face's normals never leave the positive orthant.
    """
    if radius < 1.0:
        return
    top = math.floor(radius + 1e-9)
    lo = 1 if positive_only else -top
    vals = np.arange(lo, top + 1)
    if dim == 1:
        block = vals[vals != 0][:, None]
        for start in range(0, len(block), chunk):
            yield block[start:start + chunk]
        return
    rows_per_head = max(1, len(vals) ** (dim - 1))
    heads_per_slab = max(1, chunk // rows_per_head)
    for i0 in range(0, len(vals), heads_per_slab):
        heads = vals[i0:i0 + heads_per_slab]
        axes = [heads] + [vals] * (dim - 1)
        grid = np.meshgrid(*axes, indexing="ij")
        pts = np.stack([g.ravel() for g in grid], axis=1)
        keep = np.einsum("ij,ij->i", pts, pts) <= radius * radius + 1e-9
        keep &= np.any(pts != 0, axis=1)
        pts = pts[keep]
        if len(pts):
            yield pts


def _primitive_reduce(p: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Componentwise gcd per row; returns (primitive vectors, multipliers)."""
    g = np.gcd.reduce(np.abs(p), axis=1)
    g = np.maximum(g, 1)
    return p // g[:, None], g


# ---------------------------------------------------------------------------
# orbit classes

@dataclass(frozen=True)
class OrbitClass:
    face: Face
    p: tuple[int, ...]
    action: float
    primitive: bool
    degenerate: bool
    theta: tuple[float, ...] | None

    def sort_key(self):
        return (self.action, self.face.indices, self.p)


@dataclass(frozen=True)
class SpectrumResult:
    classes: tuple[OrbitClass, ...]
    s_max: float
    m_info: MBounds

    def actions(self) -> np.ndarray:
        return np.array([c.action for c in self.classes])

    def degenerate_count(self) -> int:
        return sum(1 for c in self.classes if c.degenerate)


# ---------------------------------------------------------------------------
# support maximization over a grid (tabulated convex slices, n = 2)

class _GridSupport:
    """Support values of a 2d boundary patch from a dense angle grid."""

    def __init__(self, desc: Descriptor, dense: int = 8192):
        self.desc = desc
        self.alphas = np.linspace(0.0, math.pi / 2.0, dense + 1)
        theta = np.stack([np.cos(self.alphas), np.sin(self.alphas)], axis=1)
        f = desc.radial(theta)
        self.points = f[:, None] * theta
        self.h = self.alphas[1] - self.alphas[0]

    def _objective(self, p: np.ndarray, alpha: np.ndarray) -> np.ndarray:
        theta = np.stack([np.cos(alpha), np.sin(alpha)], axis=1)
        f = self.desc.radial(theta)
        return np.einsum("ij,ij->i", p, f[:, None] * theta)

    def support_batch(self, p: np.ndarray):
        # blocked so the (points x arc) score matrix stays small
        parts = [self._support_block(p[i:i + 2048])
                 for i in range(0, len(p), 2048)]
        return tuple(np.concatenate([part[k] for part in parts])
                     for k in range(4))

    def _support_block(self, p: np.ndarray):
        vals = p @ self.points.T
        best = vals.argmax(axis=1)
        peak = vals.max(axis=1)
        lo = self.alphas[np.maximum(best - 1, 0)]
        hi = self.alphas[np.minimum(best + 1, len(self.alphas) - 1)]
        for _ in range(46):
            m1 = lo + (hi - lo) / 3.0
            m2 = hi - (hi - lo) / 3.0
            f1 = self._objective(p, m1)
            f2 = self._objective(p, m2)
            take = f1 < f2
            lo = np.where(take, m1, lo)
            hi = np.where(take, hi, m2)
        alpha_hat = 0.5 * (lo + hi)
        value = self._objective(p, alpha_hat)
        value = np.maximum(value, peak)
        theta = np.stack([np.cos(alpha_hat), np.sin(alpha_hat)], axis=1)
        margin = 0.5 * self.h
        interior = (alpha_hat > margin) & (alpha_hat < math.pi / 2.0 - margin)
        flat_tol = 1e-12 * np.maximum(1.0, np.abs(value))
        near = vals >= value[:, None] - flat_tol[:, None]
        spread = (near * self.alphas[None, :]).max(axis=1) - np.where(
            near, self.alphas[None, :], np.inf).min(axis=1)
        degenerate = spread > 10.0 * self.h
        return value, theta, interior, degenerate


# ---------------------------------------------------------------------------
# Gauss-map inversion

def _tangent_basis(theta: np.ndarray) -> np.ndarray:
    """Orthonormal tangent frames, shape (K, d, d-1)."""
    k, d = theta.shape
    mats = np.zeros((k, d, d))
    mats[:, :, 0] = theta
    drop = np.argmax(np.abs(theta), axis=1)
    cols = np.ones((k, d), dtype=bool)
    cols[np.arange(k), drop] = False
    for row in range(k):
        mats[row, :, 1:] = np.eye(d)[:, cols[row]]
    q, _ = np.linalg.qr(mats)
    return q[:, :, 1:]


def _normalize_rows(x: np.ndarray) -> np.ndarray:
    return x / np.linalg.norm(x, axis=1)[:, None]


def invert_gauss_batch(desc: Descriptor, directions: np.ndarray,
                       starts: np.ndarray | None = None):
    """Newton inversion of the Gauss map in tangent charts, batched.

    Returns (theta, converged). Intended for smooth strictly convex slices
    where each direction has at most one interior preimage.
    """
    v = _normalize_rows(np.asarray(directions, dtype=float))
    if starts is None:
        mesh = simplex_sphere_mesh(desc.n, 64 if desc.n == 2 else 24)
        mesh = mesh[np.all(mesh > 1e-9, axis=1)]
        gm = gauss_map(desc, mesh)
        starts = mesh[(v @ gm.T).argmax(axis=1)]
    theta = starts.copy()
    converged = np.zeros(len(v), dtype=bool)
    h = 1e-6
    for _ in range(NEWTON_MAX_ITER):
        live = ~converged
        if not live.any():
            break
        th = theta[live]
        g = gauss_map(desc, th)
        resid = g - v[live]
        done = np.linalg.norm(resid, axis=1) <= NEWTON_RESIDUAL
        idx_live = np.nonzero(live)[0]
        converged[idx_live[done]] = True
        active = ~done
        if not active.any():
            continue
        th = th[active]
        res = resid[active]
        basis = _tangent_basis(th)
        d = desc.n
        jac = np.zeros((len(th), d, d - 1))
        for j in range(d - 1):
            bump = basis[:, :, j]
            gp = gauss_map(desc, _normalize_rows(th + h * bump))
            gm_ = gauss_map(desc, _normalize_rows(th - h * bump))
            jac[:, :, j] = (gp - gm_) / (2.0 * h)
        lhs = np.einsum("kdi,kdj->kij", basis, jac)
        rhs = -np.einsum("kdi,kd->ki", basis, res)
        try:
            step = np.linalg.solve(lhs, rhs[:, :, None])[:, :, 0]
        except np.linalg.LinAlgError:
            step = np.einsum("kij,kj->ki",
                             np.linalg.pinv(lhs), rhs)
        move = np.einsum("kdj,kj->kd", basis, step)
        scale = np.ones(len(th))
        for _half in range(8):
            cand = th + scale[:, None] * move
            bad = np.any(cand <= 0.0, axis=1)
            if not bad.any():
                break
            scale[bad] *= 0.5
        theta[idx_live[active]] = _normalize_rows(
            th + scale[:, None] * move)
    return theta, converged


def _gauss_angle(desc: Descriptor, alphas: np.ndarray) -> np.ndarray:
    theta = np.stack([np.cos(alphas), np.sin(alphas)], axis=1)
    g = gauss_map(desc, theta)
    return np.arctan2(g[:, 1], g[:, 0])


def _wrap_angle(x: np.ndarray) -> np.ndarray:
    return (x + math.pi) % (2.0 * math.pi) - math.pi


def invert_gauss_all_2d(desc: Descriptor, psi: float, dense: int = 6144,
                        closed: bool = False) -> list[float]:
    """All preimage angles of the direction angle psi on the open face."""
    eps = 0.0 if closed else 1e-9
    alphas = np.linspace(eps, math.pi / 2.0 - eps, dense + 1)
    beta = _gauss_angle(desc, alphas)
    diff = _wrap_angle(beta - psi)
    roots: list[float] = []
    for i in range(dense):
        a, b = diff[i], diff[i + 1]
        if abs(a) > 1.5 or abs(b) > 1.5:
            continue
        if a == 0.0:
            roots.append(float(alphas[i]))
            continue
        if a * b < 0.0:
            lo, hi = alphas[i], alphas[i + 1]
            flo = a
            for _ in range(60):
                mid = 0.5 * (lo + hi)
                fm = float(_wrap_angle(
                    _gauss_angle(desc, np.array([mid])) - psi)[0])
                if flo * fm <= 0.0:
                    hi = mid
                else:
                    lo, flo = mid, fm
            roots.append(0.5 * (lo + hi))
    out: list[float] = []
    for r in sorted(roots):
        if not out or abs(r - out[-1]) > ANGULAR_TOL:
            out.append(r)
    return out


def invert_gauss(domain: ToricDomain, face: Face, p) -> list[np.ndarray]:
    """Interior preimages of direction p/|p| under the face's Gauss map."""
    desc = domain.slice(face)
    p = np.asarray(p, dtype=float)
    if p.shape != (face.dim,) or not np.any(p):
        raise InvalidParameterError("p must be a nonzero face vector")
    v = p / np.linalg.norm(p)
    if face.dim == 1:
        return [np.array([1.0])] if v[0] > 0 else []
    if face.dim == 2:
        psi = math.atan2(v[1], v[0])
        alphas = invert_gauss_all_2d(desc, psi)
        out = []
        for a in alphas:
            if ANGULAR_TOL < a < math.pi / 2.0 - ANGULAR_TOL:
                out.append(np.array([math.cos(a), math.sin(a)]))
        return out
    theta, ok = invert_gauss_batch(desc, v[None, :])
    if not ok[0] or np.any(theta[0] <= INTERIOR_TOL):
        return []
    return [theta[0]]


# ---------------------------------------------------------------------------
# enumeration

def _axis_classes(desc: Descriptor, face: Face, s_max: float) -> list[OrbitClass]:
    f_val = float(desc.radial(np.array([[1.0]]))[0])
    kmax = int(math.floor((s_max + 1e-12) / f_val))
    out = []
    for k in range(1, kmax + 1):
        out.append(OrbitClass(face, (k,), k * f_val, k == 1, False, (1.0,)))
    return out


def _support_face_classes(desc, face, s_max, radius, grid):
    out = []
    for chunk in integer_ball_chunks(face.dim, radius):
        pf = chunk.astype(float)
        if grid is None:
            res = desc.support(pf)
            value, theta = res.value, res.theta
            interior, degen = res.interior, res.degenerate
        else:
            value, theta, interior, degen = grid.support_batch(pf)
        keep = interior & (value > ACTION_TOL) & (value <= s_max + 1e-12)
        for row in np.nonzero(keep)[0]:
            pv = tuple(int(x) for x in chunk[row])
            prim = int(np.gcd.reduce([abs(x) for x in pv])) == 1
            th = theta[row] if theta is not None else None
            th_t = None
            if th is not None and not np.any(np.isnan(th)):
                th_t = tuple(float(x) for x in th)
            out.append(OrbitClass(face, pv, float(value[row]),
                                  prim, bool(degen[row]), th_t))
    return out


def _gauss_face_classes(desc, face, s_max, radius):
    prim_set: dict[tuple[int, ...], None] = {}
    for chunk in integer_ball_chunks(face.dim, radius,
                                     positive_only=desc.monotone):
        prim, _ = _primitive_reduce(chunk)
        for row in prim:
            prim_set[tuple(int(x) for x in row)] = None
    prims = np.array(list(prim_set.keys()), dtype=float)
    if len(prims) == 0:
        return []
    out = []
    if face.dim == 2:
        for pv in prim_set:
            p = np.array(pv, dtype=float)
            norm_p = float(np.linalg.norm(p))
            psi = math.atan2(p[1], p[0])
            for a in invert_gauss_all_2d(desc, psi):
                if not (ANGULAR_TOL < a < math.pi / 2.0 - ANGULAR_TOL):
                    continue
                theta = np.array([math.cos(a), math.sin(a)])
                t_val = float(period_coeff(desc, theta)[0])
                k = 1
                while k * norm_p * t_val <= s_max + 1e-12:
                    out.append(OrbitClass(
                        face, tuple(int(k * x) for x in pv),
                        k * norm_p * t_val, k == 1, False,
                        tuple(theta)))
                    k += 1
        return out
    theta, ok = invert_gauss_batch(desc, prims)
    if not ok.all():
        retry = np.nonzero(~ok)[0]
        mesh = simplex_sphere_mesh(desc.n, 40)
        mesh = mesh[np.all(mesh > 1e-9, axis=1)]
        gm = gauss_map(desc, mesh)
        order = np.argsort(-(prims[retry] @ gm.T), axis=1)
        for alt in range(1, min(5, order.shape[1])):
            starts = mesh[order[:, alt]]
            th2, ok2 = invert_gauss_batch(desc, prims[retry], starts)
            theta[retry[ok2]] = th2[ok2]
            ok[retry[ok2]] = True
            retry = retry[~ok2]
            if len(retry) == 0:
                break
        if not ok.all():
            warnings.warn(
                f"{int((~ok).sum())} directions did not converge",
                IncompleteEnumerationWarning)
    keys = list(prim_set.keys())
    for i in np.nonzero(ok)[0]:
        if np.any(theta[i] <= INTERIOR_TOL):
            continue
        pv = keys[i]
        norm_p = float(np.linalg.norm(np.array(pv, dtype=float)))
        t_val = float(period_coeff(desc, theta[i][None, :])[0])
        k = 1
        while k * norm_p * t_val <= s_max + 1e-12:
            out.append(OrbitClass(face, tuple(k * x for x in pv),
                                  k * norm_p * t_val, k == 1, False,
                                  tuple(float(x) for x in theta[i])))
            k += 1
    return out


def _dedupe(classes: list[OrbitClass]) -> list[OrbitClass]:
    """Merge duplicates of one class; distinct preimage branches of the same
    integer vector (wiggly profiles) stay separate."""
    groups: dict[tuple, list[OrbitClass]] = {}
    for c in classes:
        groups.setdefault((c.face.indices, c.p), []).append(c)
    out: list[OrbitClass] = []
    for members in groups.values():
        kept: list[OrbitClass] = []
        for c in sorted(members, key=lambda x: x.action):
            dup = False
            for k in kept:
                if abs(k.action - c.action) > ACTION_TOL:
                    continue
                if (k.theta is None or c.theta is None
                        or np.linalg.norm(np.array(k.theta)
                                          - np.array(c.theta)) <= 1e-6):
                    dup = True
                    break
            if not dup:
                kept.append(c)
        out.extend(kept)
    return sorted(out, key=OrbitClass.sort_key)


def enumerate_spectrum(domain: ToricDomain, s_max: float,
                       method: str = "auto",
                       m_info: MBounds | None = None,
                       resolution: int = 400) -> SpectrumResult:
    """All orbit classes with action <= s_max, sorted by action."""
    if not (s_max > 0 and math.isfinite(s_max)):
        raise InvalidParameterError("s_max must be positive and finite")
    if method not in ("auto", "support", "gauss"):
        raise InvalidParameterError("method must be auto, support or gauss")
    if m_info is None:
        m_info = m_bounds(domain, resolution)
    classes: list[OrbitClass] = []
    for face in domain.faces():
        desc = domain.slice(face)
        if face.dim == 1:
            classes.extend(_axis_classes(desc, face, s_max))
            continue
        radius = s_max / m_info.face_value(face)
        route = method
        if route == "auto":
            route = "support" if (desc.support(np.ones((1, face.dim)))
                                  is not None or desc.convex) else "gauss"
        if route == "support":
            grid = None
            if desc.support(np.ones((1, face.dim))) is None:
                if not desc.convex or face.dim != 2:
                    raise UnsupportedOperationError(
                        "no support route for this face; use method='gauss'")
                grid = _GridSupport(desc)
            classes.extend(
                _support_face_classes(desc, face, s_max, radius, grid))
        else:
            if not desc.smooth:
                raise UnsupportedOperationError(
                    "Gauss route needs a smooth slice")
            classes.extend(_gauss_face_classes(desc, face, s_max, radius))
    result = SpectrumResult(tuple(_dedupe(classes)), s_max, m_info)
    if result.degenerate_count():
        warnings.warn(
            f"{result.degenerate_count()} classes have non-isolated "
            "maximizer sets", DegenerateClassWarning)
    return result


def support_action(domain: ToricDomain, face: Face, p):
    """Support value and maximizer data for one face and one vector."""
    desc = domain.slice(face)
    arr = np.atleast_2d(np.asarray(p, dtype=float))
    res = desc.support(arr)
    if res is None:
        if desc.convex and face.dim == 2:
            grid = _GridSupport(desc)
            value, theta, interior, degen = grid.support_batch(arr)
            return value[0], theta[0], bool(interior[0]), bool(degen[0])
        raise UnsupportedOperationError("no support route for this face")
    return (float(res.value[0]),
            None if res.theta is None else res.theta[0],
            bool(res.interior[0]), bool(res.degenerate[0]))


# ---------------------------------------------------------------------------
# generator counts and the growth certificate

@dataclass(frozen=True)
class GeneratorCount:
    s: float
    value: int
    class_count: int
    degenerate_count: int


def generator_count(domain: ToricDomain, s: float,
                    spectrum: SpectrumResult | None = None,
                    resolution: int = 400) -> GeneratorCount:
    """1 + sum of 2^dim(face) over classes with action below s.

    Refuses values of s within 1e-9 of a spectral value, where the count
    would be ambiguous.
    """
    if not (s > 0 and math.isfinite(s)):
        raise InvalidParameterError("s must be positive and finite")
    if spectrum is None or spectrum.s_max < s - 1e-12:
        spectrum = enumerate_spectrum(domain, s, resolution=resolution)
    total = 1
    n_classes = 0
    n_degen = 0
    for c in spectrum.classes:
        if abs(c.action - s) <= ACTION_TOL:
            raise SpectralValueError(
                f"s = {s} collides with the action {c.action} of {c.p}")
        if c.action < s:
            total += 2 ** c.face.dim
            n_classes += 1
            n_degen += int(c.degenerate)
    return GeneratorCount(s, total, n_classes, n_degen)


_SHAPE_CONSTANT = 6.0  # exceeds the unit-ball volume in every dimension


def _unit_ball_volume(d: int) -> float:
    return math.pi ** (d / 2.0) / math.gamma(d / 2.0 + 1.0)


def _lattice_count_ball(d: int, radius: float) -> int:
    if radius < 0:
        return 0
    top = math.floor(radius + 1e-12)
    ax = np.arange(-top, top + 1)
    grids = np.meshgrid(*([ax] * d), indexing="ij")
    pts = np.stack([g.ravel() for g in grids], axis=1)
    return int((np.einsum("ij,ij->i", pts, pts)
                <= radius * radius + 1e-12).sum())


def _threshold_radius(d: int) -> float:
    v = _unit_ball_volume(d)
    return (math.sqrt(d) / 2.0) / ((_SHAPE_CONSTANT / v) ** (1.0 / d) - 1.0)


@dataclass(frozen=True)
class BoundEntry:
    s: float
    count: int
    bound: float
    ok: bool


@dataclass(frozen=True)
class BoundCertificate:
    m: float
    c_growth: float
    c_offset: float
    entries: tuple[BoundEntry, ...]
    ok: bool


def certify_bound(domain: ToricDomain, s_values,
                  resolution: int = 400) -> BoundCertificate:
    """Certificate generator_count(s) <= c_growth * s^n + c_offset.

    The growth constant is 2^n (2^n - 1) * 6 / m^n: each face of dimension d
    contributes at most one class per lattice point in the ball |p| <= s/m,
    and the lattice count is below 6 * (s/m)^d once s/m passes a threshold
    radius depending only on d. Counts below the threshold are absorbed into
    the offset, which adds the exact lattice count at the threshold radius
    per face (weighted 2^d) to the constant generator.
    """
    s_list = [float(s) for s in s_values]
    if not s_list or any(s <= 0 for s in s_list):
        raise InvalidParameterError("need positive s values")
    m_info = m_bounds(domain, resolution)
    m = m_info.m
    n = domain.n
    c_growth = (2 ** n) * (2 ** n - 1) * _SHAPE_CONSTANT / m ** n
    c_offset = 1.0
    for face in domain.faces():
        d = face.dim
        c_offset += (2 ** d) * _lattice_count_ball(d, _threshold_radius(d))
    entries = []
    top = max(s_list)
    spectrum = enumerate_spectrum(domain, top, m_info=m_info,
                                  resolution=resolution)
    for s in sorted(s_list):
        # inclusive count (action <= s): matches the ball-counting step
        # |p| <= s/m exactly, and stays defined at spectral values
        count = 1 + sum(2 ** c.face.dim for c in spectrum.classes
                        if c.action <= s + ACTION_TOL)
        bound = c_growth * s ** n + c_offset
        entries.append(BoundEntry(s, count, bound, count <= bound))
    return BoundCertificate(m, c_growth, c_offset, tuple(entries),
                            all(e.ok for e in entries))


# ---------------------------------------------------------------------------
# analytic regularization by rotation (n = 2)

def _angle_eval(desc: Descriptor, alphas: np.ndarray, order: int) -> np.ndarray:
    if hasattr(desc, "angle_f"):
        return desc.angle_f(alphas, order)  # type: ignore[attr-defined]
    alphas = np.asarray(alphas, dtype=float)

    def f0(a):
        theta = np.stack([np.cos(a), np.sin(a)], axis=1)
        return desc.extended_radial(theta)

    if order == 0:
        return f0(alphas)
    h = 1e-4
    if order == 1:
        return (f0(alphas + h) - f0(alphas - h)) / (2.0 * h)
    if order == 2:
        return (f0(alphas + h) - 2.0 * f0(alphas) + f0(alphas - h)) / h ** 2
    raise InvalidParameterError("order must be 0, 1 or 2")


@dataclass(frozen=True)
class RotatedProfile(Descriptor):
    """n = 2 descriptor rotated by a small angle, f_lam(a) = f(a - lam)."""

    base: Descriptor
    lam: float

    n = 2
    monotone = False

    def __post_init__(self):
        if self.base.n != 2:
            raise InvalidParameterError("rotation needs an n = 2 descriptor")

    @property
    def smooth(self) -> bool:  # type: ignore[override]
        return self.base.smooth

    @property
    def analytic(self) -> bool:  # type: ignore[override]
        return self.base.analytic

    @property
    def convex(self) -> bool:  # type: ignore[override]
        return self.base.convex

    @property
    def concave(self) -> bool:  # type: ignore[override]
        return self.base.concave

    def angle_f(self, alpha, order: int = 0) -> np.ndarray:
        return _angle_eval(self.base, np.asarray(alpha, dtype=float) - self.lam,
                           order)

    def radial(self, theta) -> np.ndarray:
        arr = _as_theta_batch(theta, 2)
        return self.angle_f(np.arctan2(arr[:, 1], arr[:, 0]))

    def extended_radial(self, theta) -> np.ndarray:
        return self.radial(theta)

    def sph_grad(self, theta) -> np.ndarray:
        arr = _as_theta_batch(theta, 2)
        d1 = self.angle_f(np.arctan2(arr[:, 1], arr[:, 0]), order=1)
        tang = np.stack([-arr[:, 1], arr[:, 0]], axis=1)
        return d1[:, None] * tang

    def slice(self, indices):
        if len(indices) == 2:
            return self
        e = np.zeros(2)
        e[indices[0]] = 1.0
        return QuarterBall(float(self.radial(e)[0]), 1)

    def to_json_dict(self):
        return {"type": "rotated", "lam": self.lam,
                "base": self.base.to_json_dict()}


@dataclass(frozen=True)
class RegularizationResult:
    domain: ToricDomain
    angle: float
    fiber_bound: int
    scan_radius: float
    attempts: int


def regularize_analytic(domain: ToricDomain, s_max: float,
                        threshold: float = 1e-3, budget: int = 200,
                        seed: int = 20260814) -> RegularizationResult:
    """Small rotation making every rational direction a regular value.

    Scans all primitive integer directions reachable below the action
    cutoff and requires the Gauss-angle derivative to clear the threshold
    at each preimage. Analytic profiles have finitely many critical values,
    so a generic small rotation moves them off the rational directions.
    """
    if domain.n != 2:
        raise UnsupportedOperationError("rotation search is for n = 2")
    if not domain.analytic:
        raise InvalidParameterError("descriptor must be analytic")
    if not (s_max > 0 and math.isfinite(s_max)):
        raise InvalidParameterError("s_max must be positive and finite")
    rng = np.random.default_rng(seed)
    base = domain.descriptor
    angles = [0.0]
    while len(angles) < budget:
        mag = rng.uniform(0.002, 0.05)
        sign = 1.0 if rng.random() < 0.5 else -1.0
        angles.append(sign * mag)

    fd = 1e-5
    for attempt, lam in enumerate(angles, start=1):
        desc = RotatedProfile(base, lam) if lam != 0.0 else base
        cand = ToricDomain(desc)
        try:
            m = m_bounds(cand, resolution=600).m
        except Exception:
            continue
        radius = s_max / m
        prims: dict[tuple[int, int], None] = {}
        for chunk in integer_ball_chunks(2, radius):
            prim, _ = _primitive_reduce(chunk)
            for row in prim:
                prims[(int(row[0]), int(row[1]))] = None
        ok = True
        fiber_bound = 0
        for pv in prims:
            psi = math.atan2(pv[1], pv[0])
            # arc endpoints belong to the axis faces; only open-face
            # preimages are subject to the regularity requirement
            pre = [a for a in invert_gauss_all_2d(desc, psi)
                   if ANGULAR_TOL < a < math.pi / 2.0 - ANGULAR_TOL]
            fiber_bound = max(fiber_bound, len(pre))
            for a in pre:
                lo = _gauss_angle(desc, np.array([a - fd]))[0]
                hi = _gauss_angle(desc, np.array([a + fd]))[0]
                slope = abs(_wrap_angle(np.array([hi - lo]))[0]) / (2.0 * fd)
                if slope < threshold:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return RegularizationResult(cand, lam, fiber_bound, radius,
                                        attempt)
    raise NoRegularPerturbationError(
        f"no regular rotation found within {budget} attempts")


# ---------------------------------------------------------------------------
# CSV interface

def spectrum_to_csv(result: SpectrumResult, path) -> None:
    import csv as _csv

    with open(path, "w", newline="") as fh:
        writer = _csv.writer(fh)
        writer.writerow(["face", "p", "action", "primitive", "degenerate"])
        for c in result.classes:
            writer.writerow([
                c.face.label(),
                "|".join(str(x) for x in c.p),
                format(c.action, ".17g"),
                "true" if c.primitive else "false",
                "true" if c.degenerate else "false",
            ])


def spectrum_rows_from_csv(path) -> list[dict]:
    import csv as _csv

    rows = []
    with open(path, newline="") as fh:
        for row in _csv.DictReader(fh):
            rows.append({
                "face": tuple(int(x) for x in row["face"].split("|")),
                "p": tuple(int(x) for x in row["p"].split("|")),
                "action": float(row["action"]),
                "primitive": row["primitive"] == "true",
                "degenerate": row["degenerate"] == "true",
            })
    return rows
