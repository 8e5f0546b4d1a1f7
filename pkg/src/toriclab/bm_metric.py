"""Metric bookkeeping between star-shaped domains and their barcodes.

The scale distance between two radial profiles is bounded by the sup of
|ln f - ln g|; a scale bound d turns into an interleaving bound s(e^d - 1)
at action cutoff s; and interleaved barcodes satisfy two-sided inequalities
between long-bar counts at shifted parameters. Approximation ladders carry
a rung-indexed sequence of barcodes whose long-bar counts stabilize to the
limiting count from below.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .barcode import Barcode, bottleneck_distance, count_long_bars
from .errors import (
    InsufficientDataError,
    InvalidParameterError,
    PreconditionError,
)
from .toric_geometry import ToricDomain, simplex_sphere_mesh


@dataclass(frozen=True)
class RatioBound:
    grid_max: float
    lipschitz: float
    mesh_size: float
    bound: float          # grid_max plus the finite-difference margin


def log_ratio_bound(domain_f: ToricDomain, domain_g: ToricDomain,
                    resolution: int = 2000) -> RatioBound:
    """Certified upper bound for sup |ln f - ln g| over the closed simplex.

    Shared mesh maximum plus a finite-difference Lipschitz margin. Scaling
    a profile by lambda gives exactly ln lambda (the margin vanishes), and
    the bound is subadditive along triangles by construction.
    """
    if domain_f.n != domain_g.n:
        raise InvalidParameterError("domains must share a dimension")
    res = resolution if domain_f.n == 2 else max(8, min(resolution, 48))
    mesh = simplex_sphere_mesh(domain_f.n, res)
    diff = np.log(domain_f.descriptor.radial(mesh)) \
        - np.log(domain_g.descriptor.radial(mesh))
    vals = np.abs(diff)
    grid_max = float(vals.max())
    lip = 0.0
    h = 0.0
    if domain_f.n == 2:
        chord = np.linalg.norm(np.diff(mesh, axis=0), axis=1)
        slopes = np.abs(np.diff(diff)) / chord
        lip = float(slopes.max())
        h = float(chord.max())
    else:
        from .toric_geometry import mesh_adjacency

        for i, j in mesh_adjacency(domain_f.n, res):
            d = float(np.linalg.norm(mesh[i] - mesh[j]))
            if d == 0.0:
                continue
            lip = max(lip, abs(float(diff[i] - diff[j])) / d)
            h = max(h, d)
    return RatioBound(grid_max, lip, h, grid_max + lip * h)


def interleaving_bound(s: float, scale_distance: float) -> float:
    """Action shift induced at cutoff s by a scale distance d: s(e^d - 1)."""
    if s < 0 or scale_distance < 0:
        raise InvalidParameterError("arguments must be nonnegative")
    if not (math.isfinite(s) and math.isfinite(scale_distance)):
        raise InvalidParameterError("arguments must be finite")
    return s * math.expm1(scale_distance)


@dataclass(frozen=True)
class StabilityCheck:
    distance: float
    delta: float
    forward: bool
    backward: bool

    @property
    def ok(self) -> bool:
        return self.forward and self.backward


def stability_ineq_check(barcode_u: Barcode, barcode_w: Barcode,
                         eps: float, s: float,
                         delta: float | None = None) -> StabilityCheck:
    """Two-sided long-bar count inequalities for delta-close barcodes.

    With dist the bottleneck distance and delta >= dist, matched bars move
    endpoints by at most delta, so each count at (eps + 2 delta, s - delta)
    embeds into the other side's count at (eps, s). Requires delta < eps.
    """
    dist = bottleneck_distance(barcode_u, barcode_w)
    if delta is None:
        delta = dist
    if not math.isfinite(delta):
        raise PreconditionError("barcodes are infinitely far apart")
    if dist > delta + 1e-12:
        raise PreconditionError(
            f"bottleneck distance {dist:.6g} exceeds delta {delta:.6g}")
    if not delta < eps:
        raise PreconditionError("delta must be smaller than eps")
    fwd = (count_long_bars(barcode_w, eps + 2.0 * delta, s - delta)
           <= count_long_bars(barcode_u, eps, s))
    bwd = (count_long_bars(barcode_u, eps + 2.0 * delta, s - delta)
           <= count_long_bars(barcode_w, eps, s))
    return StabilityCheck(dist, delta, fwd, bwd)


@dataclass(frozen=True)
class LiminfResult:
    value: float
    stabilized: bool
    tail_minima: tuple[float, ...]


def beps_liminf(values, stabilization_tol: float = 1e-9) -> LiminfResult:
    """Liminf surrogate for a rung-indexed sequence of long-bar counts.

    Takes the minimum over the last three rungs and reports stabilization
    when the three trailing tail-minima agree within tolerance.
    """
    vals = [float(v) for v in values]
    if len(vals) < 3:
        raise InsufficientDataError("need at least 3 rungs")
    tails = tuple(min(vals[j:]) for j in range(len(vals)))
    last3 = tails[-3:]
    stabilized = max(last3) - min(last3) <= stabilization_tol
    return LiminfResult(tails[-3], stabilized, tails)


@dataclass(frozen=True)
class LadderRung:
    label: str
    barcode: Barcode | None = None
    scale_upper: float | None = None   # certified scale distance to the target

    def long_bars(self, eps: float, s: float) -> int:
        if self.barcode is None:
            raise InvalidParameterError(f"rung {self.label} has no barcode")
        return count_long_bars(self.barcode, eps, s)


@dataclass(frozen=True)
class ApproximationLadder:
    rungs: tuple[LadderRung, ...]

    def __post_init__(self):
        if len(self.rungs) < 3:
            raise InsufficientDataError("a ladder needs at least 3 rungs")

    def beps_values(self, eps: float, s: float) -> list[int]:
        return [r.long_bars(eps, s) for r in self.rungs]

    def liminf(self, eps: float, s: float,
               stabilization_tol: float = 1e-9) -> LiminfResult:
        return beps_liminf(self.beps_values(eps, s), stabilization_tol)

    def to_json(self) -> str:
        out = []
        for r in self.rungs:
            entry: dict = {"label": r.label}
            if r.barcode is not None:
                entry["barcode"] = json.loads(r.barcode.to_json())
            if r.scale_upper is not None:
                entry["scale_upper"] = r.scale_upper
            out.append(entry)
        return json.dumps({"rungs": out})

    @staticmethod
    def from_json(text: str) -> "ApproximationLadder":
        data = json.loads(text)
        rungs = []
        for entry in data["rungs"]:
            bc = None
            if "barcode" in entry:
                bc = Barcode.from_json(json.dumps(entry["barcode"]))
            rungs.append(LadderRung(str(entry["label"]), bc,
                                    entry.get("scale_upper")))
        return ApproximationLadder(tuple(rungs))
