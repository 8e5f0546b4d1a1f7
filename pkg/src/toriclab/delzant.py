"""Fixed-point counting for torus-compatible Hamiltonian flows on compact
symplectic toric manifolds, working entirely on the momentum polytope.

A Delzant polytope is given by integer facet normals v_i and offsets c_i,
P = {x : <v_i, x> <= c_i}, simple and unimodular at every vertex. For a face
F of dimension d with direction lattice basis B (an n x d integer matrix),
the time-k flow of h fixes the torus over an interior point w of F exactly
when B^T grad h(w) lands in (1/k) Z^d. Each fixed d-torus contributes 2^d
generators; vertices are always fixed and contribute one each.
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import (
    DomainError,
    IncompleteEnumerationWarning,
    InvalidParameterError,
)

FEAS_TOL = 1e-9


# ---------------------------------------------------------------------------
# exact integer linear algebra

def _int_det(rows: list[list[int]]) -> int:
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    det = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        det += (-1) ** j * rows[0][j] * _int_det(minor)
    return det


def _column_hnf(rows: list[list[int]], n: int):
    """Column operations A U = H; returns (H, U, rank)."""
    h = [list(r) for r in rows]
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    col = 0
    for row in range(len(h)):
        piv = None
        while True:
            nz = [j for j in range(col, n) if h[row][j] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda j: abs(h[row][j]))
            if piv != col:
                for r in h:
                    r[col], r[piv] = r[piv], r[col]
                for r in u:
                    r[col], r[piv] = r[piv], r[col]
            others = [j for j in range(col + 1, n) if h[row][j] != 0]
            if not others:
                break
            for j in others:
                q = h[row][j] // h[row][col]
                for r in h:
                    r[j] -= q * r[col]
                for r in u:
                    r[j] -= q * r[col]
        if piv is not None and h[row][col] != 0:
            if h[row][col] < 0:
                for r in h:
                    r[col] = -r[col]
                for r in u:
                    r[col] = -r[col]
            col += 1
    return h, u, col


def _int_kernel_basis(rows: list[list[int]], n: int) -> list[list[int]]:
    """Basis of the saturated lattice {x in Z^n : rows @ x = 0}, as columns."""
    if not rows:
        basis = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
        return basis
    _, u, rank = _column_hnf(rows, n)
    cols = []
    for j in range(rank, n):
        cols.append([u[i][j] for i in range(n)])
    return _row_hnf_canonical(cols, n)


def _row_hnf_canonical(cols: list[list[int]], n: int) -> list[list[int]]:
    """Canonicalize a lattice basis given as columns via row-style HNF."""
    mat = [list(c) for c in cols]  # rows = basis vectors
    r = 0
    for col in range(n):
        nz = [i for i in range(r, len(mat)) if mat[i][col] != 0]
        if not nz:
            continue
        while len(nz) > 1:
            nz.sort(key=lambda i: abs(mat[i][col]))
            base = nz[0]
            for i in nz[1:]:
                q = mat[i][col] // mat[base][col]
                mat[i] = [a - q * b for a, b in zip(mat[i], mat[base])]
            nz = [i for i in range(r, len(mat)) if mat[i][col] != 0]
        i = nz[0]
        mat[r], mat[i] = mat[i], mat[r]
        if mat[r][col] < 0:
            mat[r] = [-a for a in mat[r]]
        for i in range(r):
            q = mat[i][col] // mat[r][col]
            if q:
                mat[i] = [a - q * b for a, b in zip(mat[i], mat[r])]
        r += 1
    return mat[:r]


# ---------------------------------------------------------------------------
# Hamiltonians

class Hamiltonian:
    def value(self, x: np.ndarray) -> float:
        raise NotImplementedError

    def grad(self, x: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def shifted(self, lam) -> "Hamiltonian":
        """h + <lam, x>: the analytic-regularization shift."""
        raise NotImplementedError

    def is_quadratic(self) -> bool:
        return False

    def to_json_dict(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class QuadraticHamiltonian(Hamiltonian):
    """h(x) = x^T Q x / 2 + <l, x> + c with symmetric Q."""

    Q: tuple[tuple[float, ...], ...]
    l: tuple[float, ...]
    c: float = 0.0

    def __post_init__(self):
        q = np.array(self.Q, dtype=float)
        if q.ndim != 2 or q.shape[0] != q.shape[1]:
            raise InvalidParameterError("Q must be square")
        if not np.allclose(q, q.T, atol=1e-12):
            raise InvalidParameterError("Q must be symmetric")
        if len(self.l) != q.shape[0]:
            raise InvalidParameterError("l has wrong length")
        object.__setattr__(self, "Q", tuple(tuple(float(v) for v in row)
                                            for row in self.Q))
        object.__setattr__(self, "l", tuple(float(v) for v in self.l))

    @property
    def n(self) -> int:
        return len(self.l)

    def value(self, x):
        x = np.asarray(x, dtype=float)
        q = np.array(self.Q)
        return float(0.5 * x @ q @ x + np.array(self.l) @ x + self.c)

    def grad(self, x):
        x = np.asarray(x, dtype=float)
        return np.array(self.Q) @ x + np.array(self.l)

    def shifted(self, lam):
        lam = np.asarray(lam, dtype=float)
        return QuadraticHamiltonian(self.Q,
                                    tuple(np.array(self.l) + lam), self.c)

    def is_quadratic(self):
        return True

    def to_json_dict(self):
        return {"type": "quadratic", "Q": [list(r) for r in self.Q],
                "l": list(self.l), "c": self.c}


@dataclass(frozen=True)
class PolynomialHamiltonian(Hamiltonian):
    """h(x) = sum coeff * prod x_i^e_i."""

    terms: tuple[tuple[float, tuple[int, ...]], ...]
    n: int

    def __post_init__(self):
        for coeff, exps in self.terms:
            if len(exps) != self.n or any(e < 0 for e in exps):
                raise InvalidParameterError("bad exponent vector")
        object.__setattr__(
            self, "terms",
            tuple((float(c), tuple(int(e) for e in exps))
                  for c, exps in self.terms))

    def value(self, x):
        x = np.asarray(x, dtype=float)
        total = 0.0
        for coeff, exps in self.terms:
            total += coeff * float(np.prod(x ** np.array(exps)))
        return total

    def grad(self, x):
        x = np.asarray(x, dtype=float)
        g = np.zeros(self.n)
        for coeff, exps in self.terms:
            for i, e in enumerate(exps):
                if e == 0:
                    continue
                rest = np.array(exps, dtype=float)
                rest[i] -= 1
                g[i] += coeff * e * float(np.prod(x ** rest))
        return g

    def shifted(self, lam):
        lam = np.asarray(lam, dtype=float)
        extra = []
        for i, v in enumerate(lam):
            if v != 0.0:
                exps = [0] * self.n
                exps[i] = 1
                extra.append((float(v), tuple(exps)))
        return PolynomialHamiltonian(self.terms + tuple(extra), self.n)

    def to_json_dict(self):
        return {"type": "polynomial", "n": self.n,
                "terms": [{"coeff": c, "exps": list(e)}
                          for c, e in self.terms]}


def hamiltonian_from_json_dict(data: dict) -> Hamiltonian:
    kind = data["type"]
    if kind == "quadratic":
        return QuadraticHamiltonian(
            tuple(tuple(r) for r in data["Q"]),
            tuple(data["l"]), float(data.get("c", 0.0)))
    if kind == "polynomial":
        return PolynomialHamiltonian(
            tuple((t["coeff"], tuple(t["exps"])) for t in data["terms"]),
            int(data["n"]))
    raise InvalidParameterError(f"unknown hamiltonian type {kind!r}")


# ---------------------------------------------------------------------------
# the polytope

@dataclass(frozen=True)
class PolytopeFace:
    """Face of the momentum polytope.

    active: 0-based indices of facets containing the face; basis: the dim
    integer vectors (each length n) spanning the face's direction lattice,
    in canonical form; anchor: a relative interior point.
    """

    active: tuple[int, ...]
    vertex_ids: tuple[int, ...]
    dim: int
    basis: tuple[tuple[int, ...], ...]
    anchor: tuple[float, ...]

    def label(self) -> str:
        if not self.active:
            return "-"
        return ",".join(str(i + 1) for i in self.active)


class DelzantPolytope:
    """P = {x : normals @ x <= offsets} with the Delzant conditions checked."""

    __slots__ = ("n", "normals", "offsets", "_vertices", "_active",
                 "_faces")

    def __init__(self, normals, offsets):
        normals = np.asarray(normals)
        if normals.ndim != 2:
            raise InvalidParameterError("normals must be a matrix")
        if not np.all(normals == np.round(normals)):
            raise InvalidParameterError("facet normals must be integer")
        self.normals = normals.astype(int)
        self.offsets = np.asarray(offsets, dtype=float)
        self.n = self.normals.shape[1]
        if self.offsets.shape != (self.normals.shape[0],):
            raise InvalidParameterError("offsets length mismatch")
        if self.normals.shape[0] < self.n + 1:
            raise InvalidParameterError("too few facets to bound a polytope")
        self._check_bounded()
        self._vertices, self._active = self._compute_vertices()
        self._check_delzant()
        self._faces = self._compute_faces()

    # -- validation ---------------------------------------------------------

    def _check_bounded(self):
        from scipy.optimize import linprog

        for i in range(self.n):
            for sign in (1.0, -1.0):
                c = np.zeros(self.n)
                c[i] = sign
                res = linprog(c, A_ub=self.normals, b_ub=self.offsets,
                              bounds=[(None, None)] * self.n,
                              method="highs")
                if res.status == 3:
                    raise InvalidParameterError("polytope is unbounded")
                if res.status != 0:
                    raise InvalidParameterError("polytope is infeasible")

    def _compute_vertices(self):
        scale = max(1.0, float(np.abs(self.offsets).max()))
        verts: list[np.ndarray] = []
        actives: list[tuple[int, ...]] = []
        m = self.normals.shape[0]
        for combo in itertools.combinations(range(m), self.n):
            a = self.normals[list(combo)].astype(float)
            if abs(np.linalg.det(a)) < 1e-12:
                continue
            x = np.linalg.solve(a, self.offsets[list(combo)])
            slack = self.normals @ x - self.offsets
            if np.any(slack > FEAS_TOL * scale):
                continue
            if any(np.linalg.norm(x - v) <= FEAS_TOL * scale for v in verts):
                continue
            active = tuple(int(i) for i in
                           np.nonzero(np.abs(slack) <= FEAS_TOL * scale)[0])
            verts.append(x)
            actives.append(active)
        if not verts:
            raise InvalidParameterError("polytope has no vertices")
        order = np.lexsort(np.array(verts).T[::-1])
        verts = [verts[i] for i in order]
        actives = [actives[i] for i in order]
        return verts, actives

    def _check_delzant(self):
        for x, active in zip(self._vertices, self._active):
            if len(active) != self.n:
                raise InvalidParameterError(
                    f"vertex {x} is not simple: {len(active)} active facets")
            rows = [list(map(int, self.normals[i])) for i in active]
            det = _int_det(rows)
            if abs(det) != 1:
                raise InvalidParameterError(
                    f"vertex {x} fails unimodularity (det {det})")

    # -- structure ----------------------------------------------------------

    @property
    def vertices(self) -> list[np.ndarray]:
        return [v.copy() for v in self._vertices]

    def _compute_faces(self) -> list[PolytopeFace]:
        found: dict[frozenset, tuple] = {}
        nverts = len(self._vertices)
        for vid in range(nverts):
            for size in range(self.n + 1):
                for t in itertools.combinations(self._active[vid], size):
                    members = tuple(
                        u for u in range(nverts)
                        if set(t) <= set(self._active[u]))
                    key = frozenset(members)
                    if key in found:
                        continue
                    common = set(self._active[members[0]])
                    for u in members[1:]:
                        common &= set(self._active[u])
                    found[key] = (tuple(sorted(common)), members)
        faces = []
        for common, members in found.values():
            rows = [list(map(int, self.normals[i])) for i in common]
            basis_rows = _int_kernel_basis(rows, self.n)
            dim = len(basis_rows)
            anchor = np.mean([self._vertices[u] for u in members], axis=0)
            basis = tuple(tuple(int(v) for v in row) for row in basis_rows)
            faces.append(PolytopeFace(common, members, dim, basis,
                                      tuple(float(v) for v in anchor)))
        faces.sort(key=lambda f: (f.dim, f.active))
        return faces

    def faces(self) -> list[PolytopeFace]:
        return list(self._faces)

    def contains_relint(self, face: PolytopeFace, x: np.ndarray) -> bool:
        scale = max(1.0, float(np.abs(self.offsets).max()))
        slack = self.normals @ np.asarray(x, dtype=float) - self.offsets
        for i in range(len(self.offsets)):
            if i in face.active:
                if abs(slack[i]) > FEAS_TOL * scale:
                    return False
            elif slack[i] > -FEAS_TOL * scale:
                return False
        return True

    def transformed(self, a_mat) -> "DelzantPolytope":
        """Image under x -> A x for unimodular integer A."""
        a = np.asarray(a_mat)
        if not np.all(a == np.round(a)):
            raise InvalidParameterError("A must be integer")
        a = a.astype(int)
        det = _int_det([list(map(int, r)) for r in a])
        if abs(det) != 1:
            raise InvalidParameterError("A must be unimodular")
        inv = np.round(np.linalg.inv(a.astype(float))).astype(int)
        return DelzantPolytope(self.normals @ inv, self.offsets)

    def to_json(self) -> str:
        import json

        return json.dumps({
            "n": self.n,
            "ineqs": [{"v": [int(v) for v in row], "c": float(c)}
                      for row, c in zip(self.normals, self.offsets)],
        })

    @staticmethod
    def from_json(text: str) -> "DelzantPolytope":
        import json

        data = json.loads(text)
        normals = [entry["v"] for entry in data["ineqs"]]
        offsets = [entry["c"] for entry in data["ineqs"]]
        poly = DelzantPolytope(np.array(normals), np.array(offsets))
        if poly.n != int(data["n"]):
            raise InvalidParameterError("dimension mismatch")
        return poly


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of the Delzant checks: ok, or the first violation found."""

    ok: bool
    violation: str | None
    polytope: "DelzantPolytope | None"


def validate_delzant(normals, offsets) -> ValidationReport:
    """Run the Delzant checks on raw inequality data without raising.

    Enumerates vertices from n-subsets of inequalities, checks boundedness
    and that the active normals at each vertex form a basis of the integer
    lattice; returns the constructed polytope on success.
    """
    try:
        poly = DelzantPolytope(normals, offsets)
    except InvalidParameterError as exc:
        return ValidationReport(False, str(exc), None)
    return ValidationReport(True, None, poly)


def transform_quadratic(h: QuadraticHamiltonian,
                        a_mat) -> QuadraticHamiltonian:
    """Hamiltonian matching DelzantPolytope.transformed: h'(y) = h(A^-1 y)."""
    a = np.asarray(a_mat, dtype=float)
    inv = np.linalg.inv(a)
    q = inv.T @ np.array(h.Q) @ inv
    l = inv.T @ np.array(h.l)
    return QuadraticHamiltonian(tuple(map(tuple, q)), tuple(l), h.c)


# ---------------------------------------------------------------------------
# fixed-point counting

def face_gradient(poly: DelzantPolytope, face: PolytopeFace,
                  h: Hamiltonian, w) -> np.ndarray:
    """B^T grad h(w): the flow velocity seen by the face's orbit torus."""
    w = np.asarray(w, dtype=float)
    if w.shape != (poly.n,):
        raise InvalidParameterError(f"w must be a point in R^{poly.n}")
    if not poly.contains_relint(face, w):
        raise DomainError("w is not in the relative interior of the face")
    b = np.array(face.basis, dtype=float).T if face.basis else \
        np.zeros((poly.n, 0))
    return b.T @ h.grad(w)


def _face_matrix(face: PolytopeFace, n: int) -> np.ndarray:
    if face.dim == 0:
        return np.zeros((n, 0))
    return np.array(face.basis, dtype=float).T


def _gradient_box(poly, face, h, margin_samples: int = 200):
    """Per-coordinate range of B^T grad h over the face."""
    b = _face_matrix(face, poly.n)
    verts = [np.array(poly._vertices[u]) for u in face.vertex_ids]
    if h.is_quadratic():
        vals = np.array([b.T @ h.grad(v) for v in verts])
        return vals.min(axis=0), vals.max(axis=0)
    rng = np.random.default_rng(1)
    pts = list(verts)
    anchor = np.array(face.anchor)
    for _ in range(margin_samples):
        wts = rng.dirichlet(np.ones(len(verts)))
        pts.append(sum(w * v for w, v in zip(wts, verts)))
    pts.append(anchor)
    vals = np.array([b.T @ h.grad(p) for p in pts])
    spread = vals.max(axis=0) - vals.min(axis=0)
    pad = 0.5 * spread + 1e-9
    return vals.min(axis=0) - pad, vals.max(axis=0) + pad


def _lattice_values(lo: float, hi: float, k: int) -> list[Fraction]:
    out = []
    j = math.ceil(lo * k - 1e-9)
    top = math.floor(hi * k + 1e-9)
    while j <= top:
        out.append(Fraction(j, k))
        j += 1
    return out


def _candidate_targets(lo, hi, k, mode) -> list[tuple[Fraction, ...]]:
    d = len(lo)
    qs = [k] if mode == "divisor" else list(range(1, k + 1))
    seen: set[tuple[Fraction, ...]] = set()
    for q in qs:
        per_coord = [_lattice_values(lo[j], hi[j], q) for j in range(d)]
        for combo in itertools.product(*per_coord):
            seen.add(combo)
    return sorted(seen)


def _solve_quadratic_face(poly, face, h, targets):
    b = _face_matrix(face, poly.n)
    anchor = np.array(face.anchor)
    q = np.array(h.Q)
    m = b.T @ q @ b
    g0 = b.T @ h.grad(anchor)
    count = 0
    ambiguous = 0
    det = np.linalg.det(m) if face.dim else 1.0
    scale = max(1.0, float(np.abs(m).max()) if m.size else 1.0)
    for y in targets:
        yv = np.array([float(v) for v in y])
        if abs(det) > 1e-12 * scale ** face.dim:
            t = np.linalg.solve(m, yv - g0)
            w = anchor + b @ t
            if poly.contains_relint(face, w):
                count += 1
        else:
            t, res, _, _ = np.linalg.lstsq(m, yv - g0, rcond=None)
            resid = np.linalg.norm(m @ t - (yv - g0))
            if resid <= 1e-9:
                w = anchor + b @ t
                if poly.contains_relint(face, w):
                    ambiguous += 1
                    count += 1
    if ambiguous:
        warnings.warn(
            f"face {face.label()}: {ambiguous} non-isolated fixed sets "
            "counted once each", IncompleteEnumerationWarning)
    return count


def _solve_general_face(poly, face, h, targets):
    b = _face_matrix(face, poly.n)
    anchor = np.array(face.anchor)
    verts = [np.array(poly._vertices[u]) for u in face.vertex_ids]
    tv = [np.linalg.lstsq(b, v - anchor, rcond=None)[0] for v in verts]
    tv = np.array(tv)
    lo_t, hi_t = tv.min(axis=0), tv.max(axis=0)
    grids = np.meshgrid(*[np.linspace(lo_t[j], hi_t[j], 9)
                          for j in range(face.dim)], indexing="ij")
    starts = np.stack([g.ravel() for g in grids], axis=1)

    def g_of(t):
        return b.T @ h.grad(anchor + b @ t)

    count = 0
    h_fd = 1e-6
    for y in targets:
        yv = np.array([float(v) for v in y])
        roots: list[np.ndarray] = []
        for s in starts:
            t = s.copy()
            for _ in range(40):
                r = g_of(t) - yv
                if np.linalg.norm(r) <= 1e-11:
                    break
                jac = np.zeros((face.dim, face.dim))
                for j in range(face.dim):
                    e = np.zeros(face.dim)
                    e[j] = h_fd
                    jac[:, j] = (g_of(t + e) - g_of(t - e)) / (2 * h_fd)
                try:
                    t = t - np.linalg.solve(jac, r)
                except np.linalg.LinAlgError:
                    break
            else:
                continue
            if np.linalg.norm(g_of(t) - yv) > 1e-9:
                continue
            w = anchor + b @ t
            if not poly.contains_relint(face, w):
                continue
            if any(np.linalg.norm(t - r0) <= 1e-8 for r0 in roots):
                continue
            roots.append(t)
        count += len(roots)
    warnings.warn(
        f"face {face.label()}: root search for a non-quadratic flow is "
        "heuristic", IncompleteEnumerationWarning)
    return count


@dataclass(frozen=True)
class FixedPointCount:
    k: int
    total: int
    per_face: tuple[tuple[PolytopeFace, int], ...]
    mode: str

    def breakdown(self) -> str:
        parts = []
        for face, cnt in self.per_face:
            if cnt:
                parts.append(f"{face.label()}:{cnt}")
        return "|".join(parts)


def count_fixed_points(poly: DelzantPolytope, h: Hamiltonian, k: int,
                       mode: str = "divisor") -> FixedPointCount:
    """Weighted count of tori fixed by the time-k flow of h.

    mode "divisor" requires the face velocity in (1/k)Z^d; "q_le_k" accepts
    any (1/q)Z^d with q <= k, deduplicated exactly.
    """
    if not (isinstance(k, int) and k >= 1):
        raise InvalidParameterError("k must be a positive integer")
    if mode not in ("divisor", "q_le_k"):
        raise InvalidParameterError("mode must be divisor or q_le_k")
    per_face = []
    total = 0
    for face in poly.faces():
        if face.dim == 0:
            per_face.append((face, 1))
            total += 1
            continue
        lo, hi = _gradient_box(poly, face, h)
        targets = _candidate_targets(lo, hi, k, mode)
        if h.is_quadratic():
            cnt = _solve_quadratic_face(poly, face, h, targets)
        else:
            cnt = _solve_general_face(poly, face, h, targets)
        per_face.append((face, cnt))
        total += (2 ** face.dim) * cnt
    return FixedPointCount(k, total, tuple(per_face), mode)


# ---------------------------------------------------------------------------
# growth certificate in k

@dataclass(frozen=True)
class KBoundEntry:
    k: int
    count: int
    bound: float
    ok: bool


@dataclass(frozen=True)
class KBoundCertificate:
    c_growth: float
    c_offset: float
    entries: tuple[KBoundEntry, ...]
    fitted_degree: float
    ok: bool


def certify_k_bound(poly: DelzantPolytope, h: Hamiltonian, k_max: int,
                    mode: str = "divisor") -> KBoundCertificate:
    """Certificate count(k) <= c_growth * k^n + c_offset for k <= k_max.

    Each d-face holds at most prod_j (k len_j + 1) candidate velocities in
    its gradient-image box (len_j the box edge), so c_growth sums
    2^d prod_j (len_j + 1) over positive-dimensional faces and c_offset
    counts the vertices.
    """
    if k_max < 3:
        raise InvalidParameterError("k_max must be at least 3")
    c_growth = 0.0
    for face in poly.faces():
        if face.dim == 0:
            continue
        lo, hi = _gradient_box(poly, face, h)
        box = np.maximum(hi - lo, 0.0)
        c_growth += (2 ** face.dim) * float(np.prod(box + 1.0))
    c_offset = float(sum(1 for f in poly.faces() if f.dim == 0))
    entries = []
    counts = []
    for k in range(1, k_max + 1):
        res = count_fixed_points(poly, h, k, mode)
        bound = c_growth * k ** poly.n + c_offset
        entries.append(KBoundEntry(k, res.total, bound, res.total <= bound))
        counts.append(res.total)
    from .barcode import GrowthSamples, entropy_estimates

    samples = GrowthSamples(tuple(float(k) for k in range(1, k_max + 1)),
                            tuple(counts))
    est = entropy_estimates(samples)
    return KBoundCertificate(c_growth, c_offset, tuple(entries),
                             est.poly_degree, all(e.ok for e in entries))


def counts_to_csv(results, path) -> None:
    import csv as _csv

    with open(path, "w", newline="") as fh:
        writer = _csv.writer(fh)
        writer.writerow(["k", "total", "face_breakdown"])
        for res in results:
            writer.writerow([res.k, res.total, res.breakdown()])
