"""Star-shaped toric domains given by a radial profile over the closed
positive unit simplex, their faces, Gauss maps and period coefficients.

A domain is Omega = {r*theta : 0 <= r <= f(theta), theta in the closed
positive part of the unit sphere}. Faces are indexed by the nonempty
coordinate subsets I; each face is treated intrinsically through the sliced
descriptor on span(e_i : i in I). The Gauss map of the slice at theta is

    G(theta) = (theta - g/f) / sqrt(1 + |g|^2/f^2),

with g the spherical gradient of the sliced radial profile in an orthonormal
tangent frame at theta, and the period coefficient is

    T(theta) = f(theta) * <theta, G(theta)> = f / sqrt(1 + |g|^2/f^2).
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy.interpolate import CubicSpline

from .errors import (
    DomainError,
    InsufficientDataError,
    InvalidParameterError,
    UnsupportedOperationError,
)

SIMPLEX_TOL = 1e-12
UNIT_TOL = 1e-12


# ---------------------------------------------------------------------------
# simplex meshes

def simplex_sphere_mesh(dim: int, resolution: int) -> np.ndarray:
    """Grid on the closed positive part of S^{dim-1}, shape (K, dim).

    dim 1 is the single point (1,); dim 2 a uniform angle grid; higher
    dimensions map the barycentric grid u (compositions / resolution) through
    theta = sqrt(u), which lands exactly on the unit sphere.
    """
    if dim < 1:
        raise InvalidParameterError("dimension must be >= 1")
    if dim == 1:
        return np.array([[1.0]])
    if resolution < 2:
        raise InvalidParameterError("resolution must be >= 2")
    if dim == 2:
        alphas = np.linspace(0.0, math.pi / 2.0, resolution + 1)
        return np.stack([np.cos(alphas), np.sin(alphas)], axis=1)
    combos = []
    for comp in _compositions(resolution, dim):
        combos.append(comp)
    u = np.array(combos, dtype=float) / float(resolution)
    return np.sqrt(u)


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in _compositions(total - head, parts - 1):
            yield (head,) + tail


def mesh_adjacency(dim: int, resolution: int) -> list[tuple[int, int]]:
    """Index pairs of neighboring mesh nodes, used for Lipschitz estimates."""
    if dim == 1:
        return []
    if dim == 2:
        return [(i, i + 1) for i in range(resolution)]
    comps = list(_compositions(resolution, dim))
    where = {c: i for i, c in enumerate(comps)}
    pairs = []
    for idx, c in enumerate(comps):
        for a in range(dim):
            for b in range(dim):
                if a == b or c[a] == 0:
                    continue
                moved = list(c)
                moved[a] -= 1
                moved[b] += 1
                j = where[tuple(moved)]
                if j > idx:
                    pairs.append((idx, j))
    return pairs


def _as_theta_batch(theta, dim: int) -> np.ndarray:
    arr = np.asarray(theta, dtype=float)
    if arr.ndim == 1:
        arr = arr[None, :]
    if arr.ndim != 2 or arr.shape[1] != dim:
        raise DomainError(f"expected directions of dimension {dim}")
    return arr


def validate_simplex_theta(theta: np.ndarray, dim: int) -> np.ndarray:
    arr = _as_theta_batch(theta, dim)
    norms = np.linalg.norm(arr, axis=1)
    if np.any(np.abs(norms - 1.0) > UNIT_TOL):
        raise DomainError("direction not on the unit sphere within 1e-12")
    if np.any(arr < -SIMPLEX_TOL):
        raise DomainError("direction outside the closed positive simplex")
    return arr


# ---------------------------------------------------------------------------
# descriptors

@dataclass(frozen=True)
class SupportResult:
    """Batch result of maximizing <p, x> over a face's boundary patch."""

    value: np.ndarray          # (K,)
    theta: np.ndarray | None   # (K, d) maximizers, NaN rows when degenerate
    interior: np.ndarray       # (K,) bool: maximizer set meets the open face
    degenerate: np.ndarray     # (K,) bool: maximizer set has positive diameter


class Descriptor:
    """Radial profile on the closed positive simplex of its own dimension."""

    n: int
    smooth: bool = True
    convex: bool = False
    concave: bool = False
    analytic: bool = False
    monotone: bool = False       # all boundary normals componentwise >= 0
    extendable: bool = True      # usable values slightly beyond the simplex

    def radial(self, theta) -> np.ndarray:
        raise NotImplementedError

    def extended_radial(self, theta) -> np.ndarray:
        """Radial values for directions slightly off the simplex.

        Default extension reflects across the coordinate walls, which is the
        symmetry of the underlying toric picture; descriptors with a genuine
        convex extension override this.
        """
        arr = _as_theta_batch(theta, self.n)
        return self.radial(np.abs(arr))

    def field_value(self, x: np.ndarray) -> np.ndarray:
        """Homogeneous gauge F(x) = |x| / f(x/|x|) using the extension."""
        x = np.asarray(x, dtype=float)
        single = x.ndim == 1
        if single:
            x = x[None, :]
        r = np.linalg.norm(x, axis=1)
        if np.any(r <= 0):
            raise DomainError("gauge undefined at the origin")
        vals = r / self.extended_radial(x / r[:, None])
        return vals[0] if single else vals

    def sph_grad(self, theta) -> np.ndarray:
        raise UnsupportedOperationError(
            f"{type(self).__name__} does not expose a spherical gradient"
        )

    def support(self, p: np.ndarray) -> SupportResult | None:
        """Closed-form support over the boundary patch, or None."""
        return None

    def slice(self, indices: tuple[int, ...]) -> "Descriptor":
        raise NotImplementedError

    def to_json_dict(self) -> dict:
        raise NotImplementedError


def _slice_to_point(desc: Descriptor, i: int) -> "QuarterBall":
    e = np.zeros(desc.n)
    e[i] = 1.0
    val = float(desc.radial(e)[0])
    return QuarterBall(val, 1)


@dataclass(frozen=True)
class QuarterBall(Descriptor):
    """f == R: the ball of radius R cut to the positive orthant."""

    R: float
    n: int = 2

    smooth = True
    convex = True
    analytic = True
    monotone = True

    def __post_init__(self):
        if self.R <= 0:
            raise InvalidParameterError("R must be positive")

    def radial(self, theta) -> np.ndarray:
        arr = _as_theta_batch(theta, self.n)
        return np.full(arr.shape[0], self.R)

    def extended_radial(self, theta) -> np.ndarray:
        arr = _as_theta_batch(theta, self.n)
        return np.full(arr.shape[0], self.R)

    def sph_grad(self, theta) -> np.ndarray:
        arr = _as_theta_batch(theta, self.n)
        return np.zeros_like(arr)

    def support(self, p: np.ndarray) -> SupportResult:
        p = np.atleast_2d(np.asarray(p, dtype=float))
        pos = np.maximum(p, 0.0)
        npos = np.linalg.norm(pos, axis=1)
        value = np.where(npos > 0, self.R * npos, self.R * p.max(axis=1))
        theta = np.full_like(p, np.nan)
        ok = npos > 0
        theta[ok] = pos[ok] / npos[ok, None]
        interior = np.all(p > 0, axis=1)
        degenerate = np.zeros(p.shape[0], dtype=bool)
        return SupportResult(value, theta, interior, degenerate)

    def slice(self, indices):
        return QuarterBall(self.R, len(indices))

    def to_json_dict(self):
        return {"type": "quarterball", "R": self.R, "n": self.n}


@dataclass(frozen=True)
class Ellipsoid(Descriptor):
    """Simplex-shaped profile sum x_i / a_i <= 1 with positive semiaxes a."""

    a: tuple[float, ...]

    smooth = True
    convex = True
    analytic = True
    monotone = True

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(float(v) for v in self.a))
        if any(v <= 0 for v in self.a):
            raise InvalidParameterError("semiaxes must be positive")

    @property
    def n(self) -> int:
        return len(self.a)

    def _w(self) -> np.ndarray:
        return 1.0 / np.array(self.a)

    def radial(self, theta) -> np.ndarray:
        arr = _as_theta_batch(theta, self.n)
        return 1.0 / (arr @ self._w())

    def extended_radial(self, theta) -> np.ndarray:
        arr = _as_theta_batch(theta, self.n)
        dot = arr @ self._w()
        if np.any(dot <= 0):
            raise DomainError("linear extension degenerates for this direction")
        return 1.0 / dot

    def sph_grad(self, theta) -> np.ndarray:
        arr = _as_theta_batch(theta, self.n)
        w = self._w()
        f = self.radial(arr)
        tang = w[None, :] - (arr @ w)[:, None] * arr
        return -(f ** 2)[:, None] * tang

    def support(self, p: np.ndarray) -> SupportResult:
        p = np.atleast_2d(np.asarray(p, dtype=float))
        vals = p * np.array(self.a)[None, :]
        best = vals.max(axis=1)
        tol = 1e-9 * np.maximum(1.0, np.abs(best))
        # the corner x = 0 wins whenever no vertex pays a positive value
        positive = best > tol
        value = np.maximum(best, 0.0)
        ties = vals >= (best[:, None] - tol[:, None])
        full_tie = ties.all(axis=1) & positive
        if self.n == 1:
            interior = positive.copy()
            degenerate = np.zeros(p.shape[0], dtype=bool)
        else:
            interior = full_tie
            degenerate = full_tie
        theta = np.full_like(p, np.nan)
        solo = (~full_tie | (self.n == 1)) & positive
        arg = vals.argmax(axis=1)
        rows = np.nonzero(solo)[0]
        theta[rows] = 0.0
        theta[rows, arg[rows]] = 1.0
        return SupportResult(value, theta, interior, degenerate)

    def slice(self, indices):
        return Ellipsoid(tuple(self.a[i] for i in indices))

    def to_json_dict(self):
        return {"type": "ellipsoid", "a": list(self.a)}


@dataclass(frozen=True)
class PNormBody(Descriptor):
    """Profile sum (x_i / r_i)^p <= 1 with exponent p in (1, inf)."""

    r: tuple[float, ...]
    p: float

    smooth = True
    convex = True
    analytic = True
    monotone = True

    def __post_init__(self):
        object.__setattr__(self, "r", tuple(float(v) for v in self.r))
        if any(v <= 0 for v in self.r):
            raise InvalidParameterError("radii must be positive")
        if not (1.0 < self.p < math.inf):
            raise InvalidParameterError("exponent must lie in (1, inf)")

    @property
    def n(self) -> int:
        return len(self.r)

    def radial(self, theta) -> np.ndarray:
        arr = _as_theta_batch(theta, self.n)
        s = np.sum((np.abs(arr) / np.array(self.r)) ** self.p, axis=1)
        return s ** (-1.0 / self.p)

    def extended_radial(self, theta) -> np.ndarray:
        return self.radial(np.abs(_as_theta_batch(theta, self.n)))

    def sph_grad(self, theta) -> np.ndarray:
        arr = _as_theta_batch(theta, self.n)
        rv = np.array(self.r)
        q = self.p
        s = np.sum((arr / rv) ** q, axis=1)
        ds = q * arr ** (q - 1.0) / rv ** q
        amb = -(1.0 / q) * (s ** (-1.0 / q - 1.0))[:, None] * ds
        return amb - np.sum(amb * arr, axis=1)[:, None] * arr

    def support(self, p: np.ndarray) -> SupportResult:
        p = np.atleast_2d(np.asarray(p, dtype=float))
        rv = np.array(self.r)
        qs = self.p / (self.p - 1.0)
        pos = np.maximum(p * rv[None, :], 0.0)
        # negative components push the maximizer onto x_i = 0, so the
        # support is the positive-part Hoelder norm; it is 0 at the corner
        h = np.sum(pos ** qs, axis=1) ** (1.0 / qs)
        value = h
        theta = np.full_like(p, np.nan)
        ok = h > 0
        x = np.zeros_like(p)
        x[ok] = rv[None, :] * pos[ok] ** (qs - 1.0) / (h[ok, None] ** (qs - 1.0))
        nx = np.linalg.norm(x[ok], axis=1)
        theta[ok] = x[ok] / nx[:, None]
        interior = np.all(p > 0, axis=1)
        degenerate = np.zeros(p.shape[0], dtype=bool)
        return SupportResult(value, theta, interior, degenerate)

    def slice(self, indices):
        return PNormBody(tuple(self.r[i] for i in indices), self.p)

    def to_json_dict(self):
        return {"type": "pnorm", "r": list(self.r), "p": self.p}


@dataclass(frozen=True)
class RolledDisk(Descriptor):
    """Disk of radius rho centered at c inside the positive quadrant (n = 2).

    plus=True keeps the region bounded by the far arc (convex as a set);
    plus=False keeps the pocket bounded by the near arc (its complement in
    the quadrant is convex). Both are nonsmooth at the axis directions when
    the disk is tangent to the walls, so gradient queries are refused.
    """

    c: tuple[float, float]
    rho: float
    plus: bool = True

    n = 2
    smooth = False
    analytic = False
    monotone = False

    def __post_init__(self):
        object.__setattr__(self, "c", (float(self.c[0]), float(self.c[1])))
        if self.rho <= 0:
            raise InvalidParameterError("rho must be positive")
        if min(self.c) < self.rho - 1e-12:
            raise InvalidParameterError("disk must stay inside the quadrant")
        if not self.plus and np.hypot(*self.c) <= self.rho:
            raise InvalidParameterError("near arc needs the origin outside the disk")

    @property
    def convex(self) -> bool:  # type: ignore[override]
        return self.plus

    @property
    def concave(self) -> bool:  # type: ignore[override]
        return not self.plus

    def _roots(self, arr: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        c = np.array(self.c)
        b = arr @ c
        disc = b ** 2 - (c @ c - self.rho ** 2)
        # only roundoff may go below zero; a genuinely negative discriminant
        # means the ray misses the disk entirely
        if np.any(disc < -1e-9 * max(1.0, float(c @ c))):
            raise DomainError("ray misses the disk")
        disc = np.maximum(disc, 0.0)
        root = np.sqrt(disc)
        return b, root

    def radial(self, theta) -> np.ndarray:
        arr = _as_theta_batch(theta, self.n)
        b, root = self._roots(arr)
        vals = b + root if self.plus else b - root
        if np.any(vals <= 0):
            raise DomainError("ray misses the disk")
        return vals

    def extended_radial(self, theta) -> np.ndarray:
        # reflection across the walls; the disk admits no convex extension
        arr = _as_theta_batch(theta, self.n)
        return self.radial(np.abs(arr))

    def support(self, p: np.ndarray) -> SupportResult | None:
        if not self.plus:
            return None
        p = np.atleast_2d(np.asarray(p, dtype=float))
        c = np.array(self.c)
        norms = np.linalg.norm(p, axis=1)
        if np.any(norms == 0):
            raise InvalidParameterError("p must be nonzero")
        v = p / norms[:, None]
        x_star = c[None, :] + self.rho * v
        on_patch = x_star @ np.array([1.0, 1.0]) >= 0  # far-arc condition
        value = p @ c + self.rho * norms
        ends = np.array([[self._axis_hit(0), 0.0], [0.0, self._axis_hit(1)]])
        end_vals = p @ ends.T
        value = np.where(on_patch, value, end_vals.max(axis=1))
        # the region is conv(disk, origin): the origin wins for directions
        # where every boundary point pays a negative value
        positive = value > 1e-12 * np.maximum(1.0, norms)
        value = np.maximum(value, 0.0)
        keep = (on_patch & positive)[:, None]
        nx = np.linalg.norm(x_star, axis=1)
        theta = np.where(keep, x_star / nx[:, None], np.nan)
        interior = on_patch & positive & np.all(x_star > 1e-12, axis=1)
        degenerate = np.zeros(p.shape[0], dtype=bool)
        return SupportResult(value, theta, interior, degenerate)

    def _axis_hit(self, i: int) -> float:
        e = np.zeros(2)
        e[i] = 1.0
        return float(self.radial(e)[0])

    def slice(self, indices):
        if len(indices) == 2:
            return self
        return _slice_to_point(self, indices[0])

    def to_json_dict(self):
        kind = "rolled_disk_plus" if self.plus else "rolled_disk_minus"
        return {"type": kind, "c": list(self.c), "rho": self.rho}


@dataclass(frozen=True)
class TrigProfile(Descriptor):
    """Analytic radial profile f(alpha) = c0 + sum amp*cos(freq*alpha + phase),
    n = 2. Useful for engineered Gauss-map behavior (flat spots, wiggles)."""

    c0: float
    terms: tuple[tuple[float, float, float], ...] = ()
    convex_flag: bool = False

    n = 2
    smooth = True
    analytic = True
    monotone = False

    def __post_init__(self):
        object.__setattr__(
            self, "terms",
            tuple((float(a), float(w), float(ph)) for a, w, ph in self.terms),
        )
        lo = self.c0 - sum(abs(t[0]) for t in self.terms)
        if lo <= 0:
            raise InvalidParameterError("profile must stay positive")

    @property
    def convex(self) -> bool:  # type: ignore[override]
        return self.convex_flag

    def angle_f(self, alpha: np.ndarray, order: int = 0) -> np.ndarray:
        alpha = np.asarray(alpha, dtype=float)
        out = np.full_like(alpha, self.c0 if order == 0 else 0.0)
        for amp, freq, ph in self.terms:
            arg = freq * alpha + ph
            if order == 0:
                out = out + amp * np.cos(arg)
            elif order == 1:
                out = out - amp * freq * np.sin(arg)
            elif order == 2:
                out = out - amp * freq ** 2 * np.cos(arg)
            else:
                raise InvalidParameterError("order must be 0, 1 or 2")
        return out

    def radial(self, theta) -> np.ndarray:
        arr = _as_theta_batch(theta, self.n)
        return self.angle_f(np.arctan2(arr[:, 1], arr[:, 0]))

    def extended_radial(self, theta) -> np.ndarray:
        arr = _as_theta_batch(theta, self.n)
        return self.angle_f(np.arctan2(arr[:, 1], arr[:, 0]))

    def sph_grad(self, theta) -> np.ndarray:
        arr = _as_theta_batch(theta, self.n)
        alpha = np.arctan2(arr[:, 1], arr[:, 0])
        d1 = self.angle_f(alpha, order=1)
        tang = np.stack([-arr[:, 1], arr[:, 0]], axis=1)
        return d1[:, None] * tang

    def slice(self, indices):
        if len(indices) == 2:
            return self
        return _slice_to_point(self, indices[0])

    def to_json_dict(self):
        return {"type": "trig_profile", "c0": self.c0,
                "terms": [list(t) for t in self.terms],
                "convex": self.convex_flag}


@dataclass(frozen=True)
class RadialGrid(Descriptor):
    """Tabulated radial profile.

    n = 2: values over a uniform angle grid on [0, pi/2]; order "cubic"
    interpolates with a cubic spline and allows gradient queries, order
    "linear" does not. n >= 3: values over the canonical simplex mesh with
    linear barycentric interpolation only.
    """

    dim: int
    values: tuple[float, ...]
    order: str = "cubic"
    resolution: int = 0            # mesh resolution for dim >= 3
    convex_flag: bool = False
    concave_flag: bool = False

    monotone = False
    analytic = False

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(float(v) for v in self.values))
        if any(v <= 0 for v in self.values):
            raise InvalidParameterError("radial values must be positive")
        if self.order not in ("cubic", "linear"):
            raise InvalidParameterError("order must be cubic or linear")
        if self.dim == 2:
            if len(self.values) < 4:
                raise InvalidParameterError("need at least 4 angle samples")
        elif self.dim >= 3:
            if self.order != "linear":
                raise InvalidParameterError("only linear interpolation for n >= 3")
            expected = simplex_sphere_mesh(self.dim, self.resolution).shape[0]
            if len(self.values) != expected:
                raise InvalidParameterError(
                    f"expected {expected} mesh values, got {len(self.values)}"
                )
        else:
            raise InvalidParameterError("dim must be >= 2")

    @property
    def n(self) -> int:
        return self.dim

    @property
    def smooth(self) -> bool:  # type: ignore[override]
        return self.dim == 2 and self.order == "cubic"

    @property
    def convex(self) -> bool:  # type: ignore[override]
        return self.convex_flag

    @property
    def concave(self) -> bool:  # type: ignore[override]
        return self.concave_flag

    @property
    def extendable(self) -> bool:  # type: ignore[override]
        return self.dim == 2

    def _spline(self):
        alphas = np.linspace(0.0, math.pi / 2.0, len(self.values))
        return CubicSpline(alphas, np.array(self.values))

    def _interp_linear(self):
        from scipy.interpolate import LinearNDInterpolator

        mesh = simplex_sphere_mesh(self.dim, self.resolution)
        u = mesh ** 2
        return LinearNDInterpolator(u[:, :-1], np.array(self.values))

    def angle_f(self, alpha: np.ndarray, order: int = 0) -> np.ndarray:
        if self.dim != 2:
            raise UnsupportedOperationError("angle evaluation needs n = 2")
        alpha = np.asarray(alpha, dtype=float)
        # reflect across the walls for off-simplex queries
        folded = np.abs(alpha)
        folded = np.where(folded > math.pi / 2.0, math.pi - folded, folded)
        if self.order == "cubic":
            sp = self._spline()
            if order == 0:
                return np.asarray(sp(folded))
            if order in (1, 2):
                raw = np.asarray(sp(folded, nu=order))
                if order == 1:
                    sign = np.where(alpha < 0, -1.0, 1.0)
                    sign = np.where(alpha > math.pi / 2.0, -sign, sign)
                    return raw * sign
                return raw
            raise InvalidParameterError("order must be 0, 1 or 2")
        if order != 0:
            raise UnsupportedOperationError(
                "gradient queries need cubic interpolation order"
            )
        alphas = np.linspace(0.0, math.pi / 2.0, len(self.values))
        return np.interp(folded, alphas, np.array(self.values))

    def radial(self, theta) -> np.ndarray:
        arr = _as_theta_batch(theta, self.n)
        if self.dim == 2:
            return self.angle_f(np.arctan2(arr[:, 1], arr[:, 0]))
        interp = self._interp_linear()
        vals = interp((np.abs(arr) ** 2)[:, :-1])
        if np.any(np.isnan(vals)):
            raise DomainError("direction outside the tabulated mesh")
        return np.asarray(vals)

    def extended_radial(self, theta) -> np.ndarray:
        if self.dim != 2:
            raise UnsupportedOperationError("no extension for tabulated n >= 3 grids")
        arr = _as_theta_batch(theta, self.n)
        return self.angle_f(np.arctan2(arr[:, 1], arr[:, 0]))

    def sph_grad(self, theta) -> np.ndarray:
        if not self.smooth:
            raise UnsupportedOperationError(
                "gradient queries need cubic interpolation order"
            )
        arr = _as_theta_batch(theta, self.n)
        alpha = np.arctan2(arr[:, 1], arr[:, 0])
        d1 = self.angle_f(alpha, order=1)
        tang = np.stack([-arr[:, 1], arr[:, 0]], axis=1)
        return d1[:, None] * tang

    def slice(self, indices):
        if len(indices) == self.dim:
            return self
        if len(indices) == 1:
            e = np.zeros(self.dim)
            e[indices[0]] = 1.0
            return QuarterBall(float(self.radial(e)[0]), 1)
        if self.dim == 2:
            raise InvalidParameterError("bad slice")
        mesh = simplex_sphere_mesh(self.dim, self.resolution)
        comp = [i for i in range(self.dim) if i not in indices]
        keep = np.all(mesh[:, comp] == 0.0, axis=1)
        sub_vals = np.array(self.values)[keep]
        submesh = mesh[keep][:, list(indices)]
        d = len(indices)
        if d == 2:
            # resample onto the uniform angle grid
            alphas = np.arctan2(submesh[:, 1], submesh[:, 0])
            order = np.argsort(alphas)
            target = np.linspace(0.0, math.pi / 2.0, max(len(order), 8))
            vals = np.interp(target, alphas[order], sub_vals[order])
            return RadialGrid(2, tuple(vals), "cubic",
                              convex_flag=self.convex_flag,
                              concave_flag=self.concave_flag)
        return RadialGrid(d, tuple(sub_vals), "linear", self.resolution,
                          convex_flag=self.convex_flag,
                          concave_flag=self.concave_flag)

    def to_json_dict(self):
        out = {"type": "radial_grid", "n": self.dim, "order": self.order,
               "values": list(self.values),
               "convex": self.convex_flag, "concave": self.concave_flag}
        if self.dim >= 3:
            out["resolution"] = self.resolution
        return out


def descriptor_from_json_dict(data: dict) -> Descriptor:
    kind = data["type"]
    if kind == "quarterball":
        return QuarterBall(float(data["R"]), int(data.get("n", 2)))
    if kind == "ellipsoid":
        return Ellipsoid(tuple(data["a"]))
    if kind == "pnorm":
        return PNormBody(tuple(data["r"]), float(data["p"]))
    if kind == "rolled_disk_plus":
        return RolledDisk(tuple(data["c"]), float(data["rho"]), plus=True)
    if kind == "rolled_disk_minus":
        return RolledDisk(tuple(data["c"]), float(data["rho"]), plus=False)
    if kind == "trig_profile":
        return TrigProfile(float(data["c0"]),
                           tuple(tuple(t) for t in data.get("terms", [])),
                           bool(data.get("convex", False)))
    if kind == "radial_grid":
        return RadialGrid(int(data["n"]), tuple(data["values"]),
                          data.get("order", "cubic"),
                          int(data.get("resolution", 0)),
                          bool(data.get("convex", False)),
                          bool(data.get("concave", False)))
    raise InvalidParameterError(f"unknown descriptor type {kind!r}")


# ---------------------------------------------------------------------------
# faces and the domain wrapper

@dataclass(frozen=True, order=True)
class Face:
    """Coordinate face: nonempty subset of {0, ..., n-1} (0-based)."""

    indices: tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.indices)

    def label(self) -> str:
        return "|".join(str(i + 1) for i in self.indices)


@dataclass(frozen=True)
class ToricDomain:
    """Star-shaped toric domain defined by a radial descriptor."""

    descriptor: Descriptor

    @property
    def n(self) -> int:
        return self.descriptor.n

    @property
    def convex(self) -> bool:
        return self.descriptor.convex

    @property
    def concave(self) -> bool:
        return self.descriptor.concave

    @property
    def smooth(self) -> bool:
        return self.descriptor.smooth

    @property
    def analytic(self) -> bool:
        return self.descriptor.analytic

    def faces(self) -> list[Face]:
        out = []
        for d in range(1, self.n + 1):
            for combo in itertools.combinations(range(self.n), d):
                out.append(Face(combo))
        return out

    def interior_face(self) -> Face:
        return Face(tuple(range(self.n)))

    def slice(self, face: Face) -> Descriptor:
        return self.descriptor.slice(face.indices)

    def radial(self, theta) -> np.ndarray:
        arr = validate_simplex_theta(theta, self.n)
        return self.descriptor.radial(np.clip(arr, 0.0, None))

    def gauss_map(self, face: Face, theta) -> np.ndarray:
        desc = self.slice(face)
        return gauss_map(desc, theta)

    def period_coeff(self, face: Face, theta) -> np.ndarray:
        desc = self.slice(face)
        return period_coeff(desc, theta)

    def to_json(self) -> str:
        return json.dumps({"n": self.n,
                           "descriptor": self.descriptor.to_json_dict()})

    @staticmethod
    def from_json(text: str) -> "ToricDomain":
        data = json.loads(text)
        desc = descriptor_from_json_dict(data["descriptor"])
        if int(data["n"]) != desc.n:
            raise InvalidParameterError("descriptor dimension mismatch")
        return ToricDomain(desc)


def gauss_map(desc: Descriptor, theta) -> np.ndarray:
    """Outward unit normal direction of the sliced boundary at f(theta)theta."""
    if not desc.smooth:
        raise UnsupportedOperationError("Gauss map needs a smooth descriptor")
    arr = _as_theta_batch(theta, desc.n)
    f = desc.radial(arr)
    g = desc.sph_grad(arr)
    denom = np.sqrt(1.0 + np.sum(g * g, axis=1) / f ** 2)
    out = (arr - g / f[:, None]) / denom[:, None]
    return out


def period_coeff(desc: Descriptor, theta) -> np.ndarray:
    """T(theta) = f * <theta, G(theta)>: action per unit lattice length."""
    if not desc.smooth:
        raise UnsupportedOperationError("period coefficient needs a smooth descriptor")
    arr = _as_theta_batch(theta, desc.n)
    f = desc.radial(arr)
    g = desc.sph_grad(arr)
    return f / np.sqrt(1.0 + np.sum(g * g, axis=1) / f ** 2)


# ---------------------------------------------------------------------------
# certified infimum of the period coefficient

@dataclass(frozen=True)
class FaceBound:
    face: Face
    grid_min: float
    lipschitz: float
    mesh_size: float
    value: float


@dataclass(frozen=True)
class MBounds:
    per_face: tuple[FaceBound, ...]
    m: float
    resolution: int

    def face_value(self, face: Face) -> float:
        for fb in self.per_face:
            if fb.face == face:
                return fb.value
        raise InvalidParameterError(f"no bound for face {face}")


def m_bounds(domain: ToricDomain, resolution: int = 400) -> MBounds:
    """Certified positive lower bounds for inf T per face and globally.

    Each face uses its grid minimum minus a finite-difference Lipschitz
    margin, so the reported value is conservative for the true infimum up
    to the mesh scale. Fails when the margin swallows the minimum.
    """
    bounds = []
    for face in domain.faces():
        desc = domain.slice(face)
        if not desc.smooth:
            raise UnsupportedOperationError(
                f"face {face.label()} descriptor is not smooth"
            )
        if face.dim == 1:
            t = float(desc.radial(np.array([[1.0]]))[0])
            bounds.append(FaceBound(face, t, 0.0, 0.0, t))
            continue
        res = resolution if face.dim == 2 else max(8, min(resolution, 48))
        mesh = simplex_sphere_mesh(face.dim, res)
        tvals = period_coeff(desc, mesh)
        pairs = mesh_adjacency(face.dim, res)
        grid_min = float(tvals.min())
        lip = 0.0
        h = 0.0
        for i, j in pairs:
            dist = float(np.linalg.norm(mesh[i] - mesh[j]))
            if dist == 0.0:
                continue
            lip = max(lip, abs(float(tvals[i] - tvals[j])) / dist)
            h = max(h, dist)
        value = grid_min - lip * h
        if value <= 0:
            raise InsufficientDataError(
                f"mesh too coarse to certify positive m on face {face.label()}"
            )
        bounds.append(FaceBound(face, grid_min, lip, h, value))
    m = min(fb.value for fb in bounds)
    return MBounds(tuple(bounds), m, resolution)


def mesh_csv(domain: ToricDomain, resolution: int, path: str | Path) -> None:
    """Export the interior-face mesh with radial values as CSV."""
    import csv as _csv

    mesh = simplex_sphere_mesh(domain.n, resolution)
    f = domain.descriptor.radial(mesh)
    with open(path, "w", newline="") as fh:
        writer = _csv.writer(fh)
        writer.writerow([f"theta_{i+1}" for i in range(domain.n)] + ["f"])
        for row, val in zip(mesh, f):
            writer.writerow([format(v, ".17g") for v in row]
                            + [format(val, ".17g")])
