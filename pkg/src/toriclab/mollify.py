"""Smoothing pipeline for nonsmooth star-shaped profiles.

The radial profile f is promoted to the 1-homogeneous gauge F(x) = |x|/f,
extended a little beyond the positive cone (descriptors provide either a
genuine convex extension or the even reflection across the walls), then
convolved with a compactly supported bump at scale eta. The smoothed
boundary is the level set {F_eta = 1}; certified radial transversality of
F_eta turns it back into a radial profile and yields an eta-independent
lower bound for the period-coefficient infimum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    DomainError,
    ExtensionUnavailableError,
    InconsistentSurfaceError,
    InvalidParameterError,
    MarginError,
    SmoothingFailureError,
)
from .toric_geometry import (
    RadialGrid,
    ToricDomain,
    m_bounds,
    mesh_adjacency,
    simplex_sphere_mesh,
)


# ---------------------------------------------------------------------------
# the homogeneous field

@dataclass(frozen=True)
class HomogeneousField:
    """Sampled gauge F with an extension margin and a Lipschitz estimate."""

    domain: ToricDomain
    margin: float          # angular margin (radians off the closed simplex)
    r_lo: float
    r_hi: float
    lipschitz: float
    f_min: float
    f_max: float

    def value(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        single = x.ndim == 1
        if single:
            x = x[None, :]
        r = np.linalg.norm(x, axis=1)
        if np.any(r <= 0.0):
            raise DomainError("gauge undefined at the origin")
        theta = x / r[:, None]
        if np.any(theta.min(axis=1) < -math.sin(self.margin) - 1e-12):
            raise DomainError("direction outside the sampled margin")
        vals = r / self.domain.descriptor.extended_radial(theta)
        return vals[0] if single else vals


def _margin_probe(n: int, margin: float) -> np.ndarray:
    """Extreme off-simplex directions of the margin cone: one coordinate
    pushed to -sin(margin), the mass on another axis."""
    out = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            v = np.zeros(n)
            v[i] = -math.sin(margin)
            v[j] = math.cos(margin)
            out.append(v)
    return np.array(out)


def build_field(domain: ToricDomain, margin: float = 0.5,
                angular_resolution: int = 2048) -> HomogeneousField:
    """Sample F on a cone neighborhood and estimate its Lipschitz constant.

    The estimate is the largest finite-difference slope over radial and
    angular neighbor pairs at the sampling scale; profiles whose gradient
    blows up at the walls (tangent disks) get a finite, scale-dependent
    value, which is what the downstream checks consume. When the
    descriptor's extension degenerates before the requested margin (linear
    extensions lose positivity off the simplex), the margin is halved until
    the cone fits, down to a sixteenth of the request.
    """
    desc = domain.descriptor
    if not (domain.convex or domain.concave):
        raise InvalidParameterError(
            "field construction needs a convex or concave flag")
    if not desc.extendable:
        raise ExtensionUnavailableError(
            "descriptor has no usable extension beyond the closed simplex")
    if not (0.0 < margin < math.pi / 3.0):
        raise InvalidParameterError("margin must lie in (0, pi/3)")
    floor = margin / 16.0
    while margin >= 2.0 * floor:
        try:
            corners = np.array([[math.cos(-margin), math.sin(-margin)],
                                [math.sin(-margin), math.cos(-margin)]]) \
                if domain.n == 2 else _margin_probe(domain.n, margin)
            desc.extended_radial(corners)
            break
        except DomainError:
            margin *= 0.5
    probe = simplex_sphere_mesh(domain.n, 2000 if domain.n == 2 else 40)
    fvals = desc.radial(probe)
    f_min, f_max = float(fvals.min()), float(fvals.max())
    r_lo, r_hi = 0.45 * f_min, 1.6 * f_max

    # F(x) = r / f(theta): radial slope is 1/f exactly; the angular slope
    # between nodes at a common radius is radius-free, so one pass suffices.
    lip = 1.0 / f_min
    if domain.n == 2:
        alphas = np.linspace(-margin, math.pi / 2.0 + margin,
                             angular_resolution + 1)
        theta = np.stack([np.cos(alphas), np.sin(alphas)], axis=1)
        inv = 1.0 / desc.extended_radial(theta)
        chord = np.linalg.norm(np.diff(theta, axis=0), axis=1)
        lip = max(lip, float((np.abs(np.diff(inv)) / chord).max()))
    else:
        res = 40
        mesh = simplex_sphere_mesh(domain.n, res)
        pairs = mesh_adjacency(domain.n, res)
        inv = 1.0 / desc.extended_radial(mesh)
        for i, j in pairs:
            d = float(np.linalg.norm(mesh[i] - mesh[j]))
            if d > 0:
                lip = max(lip, abs(float(inv[i] - inv[j])) / d)
        band = math.sin(margin)
        for i in range(domain.n):
            near = np.nonzero((mesh[:, i] > 0) & (mesh[:, i] < band))[0]
            if len(near) == 0:
                continue
            g = mesh[near].copy()
            g[:, i] = -g[:, i]
            ginv = 1.0 / desc.extended_radial(g)
            d = np.linalg.norm(g - mesh[near], axis=1)
            ok = d > 0
            if ok.any():
                lip = max(lip, float(
                    (np.abs(ginv[ok] - inv[near][ok]) / d[ok]).max()))

    field = HomogeneousField(domain, margin, r_lo, r_hi, lip, f_min, f_max)
    # homogeneity self-check on a few rays
    check = simplex_sphere_mesh(domain.n, 16 if domain.n == 2 else 6)
    x1 = 0.9 * f_min * check
    if np.max(np.abs(field.value(2.0 * x1) - 2.0 * field.value(x1))) > 1e-8:
        raise InconsistentSurfaceError("gauge is not 1-homogeneous")
    return field


# ---------------------------------------------------------------------------
# mollification

def _bump_quadrature(n: int, eta: float, points: int):
    axes = [np.linspace(-eta, eta, points)] * n
    grid = np.meshgrid(*axes, indexing="ij")
    nodes = np.stack([g.ravel() for g in grid], axis=1)
    rho2 = np.einsum("ij,ij->i", nodes, nodes) / eta ** 2
    keep = rho2 < 1.0 - 1e-12
    nodes = nodes[keep]
    w = np.exp(-1.0 / (1.0 - rho2[keep]))
    w /= w.sum()
    return nodes, w


@dataclass(frozen=True)
class MollifiedField:
    """Pointwise convolution of a homogeneous gauge with a bump kernel."""

    field: HomogeneousField
    eta: float
    nodes: np.ndarray
    weights: np.ndarray
    strictify: bool = False

    def value(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        single = x.ndim == 1
        if single:
            x = x[None, :]
        shifted = x[:, None, :] - self.nodes[None, :, :]
        flat = shifted.reshape(-1, x.shape[1])
        vals = self.field.value(flat).reshape(x.shape[0], len(self.nodes))
        out = vals @ self.weights
        if self.strictify:
            bump = 1e-6 * self.field.f_min ** 2
            out = out + bump * np.einsum("ij,ij->i", x, x)
        return out[0] if single else out


def mollify(field: HomogeneousField, eta: float, quad_points: int = 13,
            strictify: bool = False, spot_checks: int = 10_000,
            seed: int = 20260814) -> MollifiedField:
    """Smooth the gauge at scale eta and spot-check shape preservation.

    Convex (concave) inputs are required to stay midpoint-convex
    (midpoint-concave) on a sampled eroded cone; a violation fails the
    smoothing rather than returning a bad surface.
    """
    if eta <= 0:
        raise InvalidParameterError("eta must be positive")
    if quad_points < 5 or quad_points % 2 == 0:
        raise InvalidParameterError("quad_points must be odd and >= 5")
    r_ref = 0.45 * field.f_min
    if eta >= r_ref or 3.0 * eta / (r_ref - eta) > field.margin:
        raise MarginError(
            "eta too large for the sampled margin; rebuild the field with "
            "a larger margin")
    nodes, weights = _bump_quadrature(field.domain.n, eta, quad_points)
    mol = MollifiedField(field, eta, nodes, weights, strictify)

    n = field.domain.n
    rng = np.random.default_rng(seed)
    inset = eta / (0.5 * field.f_min) + 1e-3
    lo_r, hi_r = 0.6 * field.f_min, 1.4 * field.f_max
    pts = []
    while len(pts) < 2 * spot_checks:
        cand = rng.normal(size=(4 * spot_checks, n))
        cand = np.abs(cand)
        cand /= np.linalg.norm(cand, axis=1)[:, None]
        keep = cand.min(axis=1) >= inset
        cand = cand[keep]
        radii = rng.uniform(lo_r, hi_r, size=len(cand))
        pts.extend(list(radii[:, None] * cand))
    pts = np.array(pts[:2 * spot_checks])
    a, b = pts[:spot_checks], pts[spot_checks:]
    mid = 0.5 * (a + b)
    va, vb, vm = mol.value(a), mol.value(b), mol.value(mid)
    tol = 1e-10 * max(1.0, float(np.abs(va).max()))
    if field.domain.convex:
        bad = vm > 0.5 * (va + vb) + tol
    elif strictify:
        # the strictness bump is a convex addition; it voids the concavity
        # contract, so there is nothing to check
        bad = np.zeros(spot_checks, dtype=bool)
    else:
        bad = vm < 0.5 * (va + vb) - tol
    if int(bad.sum()) > 0:
        raise SmoothingFailureError(
            f"{int(bad.sum())} of {spot_checks} midpoint shape checks failed")
    return mol


# ---------------------------------------------------------------------------
# radial transversality, extraction, and the uniform period bound

@dataclass(frozen=True)
class RadialBound:
    xi_hat: float
    xi_target: float
    step: float
    resolution: int
    f_min: float
    f_max: float


def _surface_roots(mol: MollifiedField, mesh: np.ndarray) -> np.ndarray:
    lo = np.full(len(mesh), 0.45 * mol.field.f_min + mol.eta)
    hi = np.full(len(mesh), 1.6 * mol.field.f_max - mol.eta)
    flo = mol.value(lo[:, None] * mesh) - 1.0
    fhi = mol.value(hi[:, None] * mesh) - 1.0
    if np.any(flo >= 0.0) or np.any(fhi <= 0.0):
        raise InconsistentSurfaceError(
            "level set escapes the radial bracket")
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        fm = mol.value(mid[:, None] * mesh) - 1.0
        below = fm < 0.0
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
    return 0.5 * (lo + hi)


def radial_bound(mol: MollifiedField, mesh_resolution: int = 800,
                 step: float | None = None,
                 margin_frac: float = 0.25) -> RadialBound:
    """Certified positive lower bound for the radial slope of F_eta on the
    smoothed surface.

    The target (1 - margin_frac) * 1/max f is what the unsmoothed gauge
    satisfies with room to spare; the measured minimum difference quotient
    must clear it, otherwise the smoothing failed.
    """
    if step is None:
        step = mol.eta / 4.0
    n = mol.field.domain.n
    res = mesh_resolution if n == 2 else max(10, min(mesh_resolution, 40))
    mesh = simplex_sphere_mesh(n, res)
    roots = _surface_roots(mol, mesh)
    up = mol.value((roots + step)[:, None] * mesh)
    dn = mol.value((roots - step)[:, None] * mesh)
    slopes = (up - dn) / (2.0 * step)
    xi_hat = float(slopes.min())
    xi_target = (1.0 - margin_frac) / mol.field.f_max
    if xi_hat <= 0.0:
        raise SmoothingFailureError("radial slope lost positivity")
    if xi_hat < xi_target:
        raise SmoothingFailureError(
            f"radial slope {xi_hat:.6g} below target {xi_target:.6g}")
    return RadialBound(xi_hat, xi_target, step, res,
                       mol.field.f_min, mol.field.f_max)


@dataclass(frozen=True)
class ExtractionStats:
    sup_diff: float
    max_residual: float
    resolution: int


def extract_radial(mol: MollifiedField,
                   mesh_resolution: int = 800) -> tuple[RadialGrid, ExtractionStats]:
    """Tabulate the smoothed surface as a radial profile descriptor."""
    n = mol.field.domain.n
    res = mesh_resolution if n == 2 else max(10, min(mesh_resolution, 30))
    mesh = simplex_sphere_mesh(n, res)
    roots = _surface_roots(mol, mesh)
    resid = np.abs(mol.value(roots[:, None] * mesh) - 1.0)
    raw = mol.field.domain.descriptor.radial(mesh)
    stats = ExtractionStats(float(np.abs(roots - raw).max()),
                            float(resid.max()), res)
    src = mol.field.domain.descriptor
    if n == 2:
        grid = RadialGrid(2, tuple(float(v) for v in roots), "cubic",
                          convex_flag=src.convex, concave_flag=src.concave)
    else:
        grid = RadialGrid(n, tuple(float(v) for v in roots), "linear", res,
                          convex_flag=src.convex, concave_flag=src.concave)
    return grid, stats


@dataclass(frozen=True)
class UniformM:
    m_lower: float
    xi_used: float
    lipschitz: float
    f_min: float
    f_max: float
    grid_m: float


def uniform_m(field: HomogeneousField, xi: float,
              extracted: RadialGrid | None = None,
              grid_resolution: int = 4000) -> UniformM:
    """Lower bound for the period-coefficient infimum of the smoothed
    surface from (f_min, L, xi) alone:

        m >= f_min / (2 sqrt(1 + (L / xi)^2)).

    The relative surface slope is at most L/xi: differentiating F(rho theta)
    = 1 along the surface gives |rho'| / rho <= |tangential dF| / (radial dF).
    Radii stay above f_min/2 for small eta, and the period coefficient is
    rho / sqrt(1 + (rho'/rho)^2); the factor 2 absorbs the radius drift.
    L/xi is scale invariant, so scaling the domain scales the bound the same
    way, and the bound is independent of eta whenever xi is. Checked against
    the grid value of the extracted profile if that profile exposes
    gradients. The check mesh must resolve the width-eta slope spike next
    to a wall tangency, hence the fine default.
    """
    if xi <= 0:
        raise InvalidParameterError("xi must be positive")
    denom = 2.0 * math.sqrt(1.0 + (field.lipschitz / xi) ** 2)
    m_lower = field.f_min / denom
    grid_m = math.nan
    if extracted is not None and extracted.smooth:
        grid_m = m_bounds(ToricDomain(extracted), grid_resolution).m
        if grid_m < m_lower:
            raise SmoothingFailureError(
                f"grid period bound {grid_m:.6g} fell below the certified "
                f"uniform bound {m_lower:.6g}")
    return UniformM(m_lower, xi, field.lipschitz, field.f_min,
                    field.f_max, grid_m)


# ---------------------------------------------------------------------------
# the ladder

@dataclass(frozen=True)
class MollificationReport:
    eta: float
    xi: float
    lipschitz: float
    m_lower: float
    sup_diff: float
    xi_target: float
    grid_m: float

    def to_json_dict(self) -> dict:
        return {"eta": self.eta, "xi": self.xi, "L": self.lipschitz,
                "m_lower": self.m_lower, "sup_diff": self.sup_diff,
                "xi_target": self.xi_target, "grid_m": self.grid_m}


@dataclass(frozen=True)
class LadderResult:
    field: HomogeneousField
    reports: tuple[MollificationReport, ...]
    rungs: tuple[RadialGrid, ...]
    ladder_m_lower: float


def mollification_ladder(domain: ToricDomain, etas,
                         mesh_resolution: int = 800,
                         quad_points: int = 13,
                         margin: float = 0.5,
                         margin_frac: float = 0.25,
                         seed: int = 20260814) -> LadderResult:
    """Run the full pipeline for a decreasing sequence of scales.

    The ladder-level period bound uses the eta-free slope target, so it is
    one number for the whole ladder; each rung's measured slope certifies
    that target, and each rung's own bound can only be better.
    """
    etas = [float(e) for e in etas]
    if not etas or any(e <= 0 for e in etas):
        raise InvalidParameterError("need positive eta values")
    if any(b >= a for a, b in zip(etas, etas[1:])):
        raise InvalidParameterError("etas must decrease strictly")
    field = build_field(domain, margin=margin)
    xi_ladder = (1.0 - margin_frac) / field.f_max
    ladder_m = uniform_m(field, xi_ladder).m_lower
    reports = []
    rungs = []
    for eta in etas:
        mol = mollify(field, eta, quad_points=quad_points, seed=seed)
        rb = radial_bound(mol, mesh_resolution=mesh_resolution,
                          margin_frac=margin_frac)
        grid, stats = extract_radial(mol, mesh_resolution=mesh_resolution)
        # the discrete mollifier leaves slope wiggles of width ~eta/quad
        # near the walls; the period check mesh has to resolve them
        check_res = max(4000, int(round(2000.0 / eta)))
        um = uniform_m(field, rb.xi_hat, extracted=grid,
                       grid_resolution=check_res)
        if um.m_lower < ladder_m:
            raise SmoothingFailureError(
                "rung bound fell below the ladder bound")
        reports.append(MollificationReport(
            eta, rb.xi_hat, field.lipschitz, um.m_lower, stats.sup_diff,
            rb.xi_target, um.grid_m))
        rungs.append(grid)
    return LadderResult(field, tuple(reports), tuple(rungs), ladder_m)
