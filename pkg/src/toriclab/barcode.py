"""Persistence barcodes over the reals: half-open bars (a, b], growth counts,
truncation, bottleneck distance and growth-rate fits.

A bar (a, b] is alive at u exactly when a < u <= b; the module convention is
left-open so that modules built from strict sublevel sets match bar counting
without offsets. Infinite bars carry end = math.inf.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .errors import InsufficientDataError, InvalidParameterError


@dataclass(frozen=True, order=True)
class Bar:
    """Half-open interval (start, end]; end may be math.inf."""

    start: float
    end: float

    def __post_init__(self) -> None:
        if not (self.start < self.end):
            raise InvalidParameterError(
                f"bar needs start < end, got ({self.start}, {self.end}]"
            )
        if math.isinf(self.start):
            raise InvalidParameterError("bar start must be finite")

    @property
    def finite(self) -> bool:
        return math.isfinite(self.end)

    @property
    def length(self) -> float:
        return self.end - self.start


@dataclass(frozen=True)
class Barcode:
    """Multiset of bars, optionally tagged with the action spectrum the
    endpoints were drawn from."""

    bars: tuple[Bar, ...]
    spectrum: tuple[float, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "bars", tuple(self.bars))
        if self.spectrum is not None:
            spec = tuple(sorted(self.spectrum))
            object.__setattr__(self, "spectrum", spec)
            for b in self.bars:
                for v in (b.start, b.end) if b.finite else (b.start,):
                    if not any(abs(v - s) <= 1e-12 for s in spec):
                        raise InvalidParameterError(
                            f"bar endpoint {v} absent from declared spectrum"
                        )

    def __len__(self) -> int:
        return len(self.bars)

    def __iter__(self):
        return iter(self.bars)

    @staticmethod
    def from_pairs(pairs: Iterable[tuple[float, float]],
                   spectrum: Sequence[float] | None = None) -> "Barcode":
        bars = tuple(Bar(a, math.inf if b is None else b) for a, b in pairs)
        return Barcode(bars, None if spectrum is None else tuple(spectrum))

    def to_json(self) -> str:
        return json.dumps({
            "bars": [
                {"start": b.start, "end": (b.end if b.finite else None)}
                for b in self.bars
            ]
        })

    @staticmethod
    def from_json(text: str) -> "Barcode":
        data = json.loads(text)
        bars = []
        for rec in data["bars"]:
            end = rec["end"]
            bars.append(Bar(float(rec["start"]),
                            math.inf if end is None else float(end)))
        return Barcode(tuple(bars))


def count_long_bars(barcode: Barcode, eps: float, s: float) -> int:
    """Number of bars (a, b] with a < s and b - a > eps.

    Infinite bars always pass the length test, so they count whenever a < s.
    s = math.inf counts every bar longer than eps.
    """
    if not eps > 0 or math.isnan(eps):
        raise InvalidParameterError(f"eps must be > 0, got {eps}")
    if math.isnan(s):
        raise InvalidParameterError("s must be a real number or +inf")
    return sum(1 for b in barcode if b.start < s and b.length > eps)


def truncate(barcode: Barcode, s: float) -> Barcode:
    """Replace every bar by its part strictly below s: (a, min(b, s)].

    Bars born at or above s vanish; the truncation never creates empty bars
    because surviving bars satisfy a < s.
    """
    if not math.isfinite(s):
        raise InvalidParameterError("truncation level must be finite")
    out = []
    for b in barcode:
        if b.start >= s:
            continue
        out.append(Bar(b.start, min(b.end, s)))
    return Barcode(tuple(out))


def sup_dim_below(barcode: Barcode, s: float) -> int:
    """sup over s' < s of the number of bars alive at s' (a < s' <= b).

    The alive count is constant on the intervals (e_k, e_{k+1}] of the
    endpoint arrangement, which makes the supremum a finite maximum.
    """
    if math.isnan(s):
        raise InvalidParameterError("s must be a real number or +inf")
    if not barcode.bars:
        return 0
    points = sorted({b.start for b in barcode}
                    | {b.end for b in barcode if b.finite})
    best = 0
    for e in points:
        if e >= s:
            break
        alive = sum(1 for b in barcode if b.start <= e < b.end)
        best = max(best, alive)
    return best


# -- bottleneck distance ----------------------------------------------------

def _pair_cost(x: Bar, y: Bar) -> float:
    return max(abs(x.start - y.start), abs(x.end - y.end))


def _matchable(left: list[Bar], right: list[Bar], delta: float,
               tol: float = 0.0) -> bool:
    """Perfect-matching feasibility at threshold delta.

    Augmented bipartite graph: every bar may pair with a bar on the other
    side at cost <= delta, or retire to the diagonal when its half-length
    is <= delta; diagonal proxies pair with each other freely.
    """
    n1, n2 = len(left), len(right)
    size = n1 + n2  # right side: n2 real bars then n1 diagonal slots
    adj: list[list[int]] = []
    for i, x in enumerate(left):
        row = [j for j, y in enumerate(right) if _pair_cost(x, y) <= delta + tol]
        if x.length / 2.0 <= delta + tol:
            row.append(n2 + i)
        adj.append(row)
    for j, y in enumerate(right):
        # diagonal proxy of y: must absorb y's slot unless y was matched
        if y.length / 2.0 <= delta + tol:
            row = [j] + list(range(n2, n2 + n1))
        else:
            row = list(range(n2, n2 + n1))
        adj.append(row)

    match_right = [-1] * size

    def try_assign(u: int, seen: list[bool]) -> bool:
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                if match_right[v] == -1 or try_assign(match_right[v], seen):
                    match_right[v] = u
                    return True
        return False

    for u in range(size):
        if not try_assign(u, [False] * size):
            return False
    return True


def bottleneck_distance(b1: Barcode, b2: Barcode) -> float:
    """Exact bottleneck distance between finite barcodes.

    Finite bars live in the half-plane with the sup metric and may be
    matched to the diagonal at half their length; infinite bars must match
    infinite bars (sorted starts minimize the max start gap). Distance is
    +inf when the infinite-bar counts differ.
    """
    inf1 = sorted(b.start for b in b1 if not b.finite)
    inf2 = sorted(b.start for b in b2 if not b.finite)
    if len(inf1) != len(inf2):
        return math.inf
    cost_inf = max((abs(a - b) for a, b in zip(inf1, inf2)), default=0.0)

    fin1 = [b for b in b1 if b.finite]
    fin2 = [b for b in b2 if b.finite]
    if not fin1 and not fin2:
        return cost_inf

    cands = {0.0}
    for x in fin1:
        cands.add(x.length / 2.0)
    for y in fin2:
        cands.add(y.length / 2.0)
    for x in fin1:
        for y in fin2:
            cands.add(_pair_cost(x, y))
    ordered = sorted(cands)
    lo, hi = 0, len(ordered) - 1
    # smallest candidate threshold admitting a perfect matching
    while lo < hi:
        mid = (lo + hi) // 2
        if _matchable(fin1, fin2, ordered[mid]):
            hi = mid
        else:
            lo = mid + 1
    return max(cost_inf, ordered[lo])


# -- growth samples and entropy fits ----------------------------------------

@dataclass(frozen=True)
class GrowthSamples:
    """Sampled growth function: pairs (s, count) with strictly increasing s."""

    s: tuple[float, ...]
    count: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.s) != len(self.count):
            raise InvalidParameterError("s and count must have equal length")
        for a, b in zip(self.s, self.s[1:]):
            if not (a < b):
                raise InvalidParameterError("sample points must strictly increase")
        if any(c < 0 for c in self.count):
            raise InvalidParameterError("counts must be nonnegative")

    def __len__(self) -> int:
        return len(self.s)

    def to_csv(self, path: str | Path) -> None:
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(["s", "count"])
            for s, c in zip(self.s, self.count):
                writer.writerow([format(s, ".17g"), c])

    @staticmethod
    def from_csv(path: str | Path) -> "GrowthSamples":
        with open(path, newline="") as fh:
            reader = csv.reader(fh)
            header = next(reader)
            if [h.strip() for h in header] != ["s", "count"]:
                raise InvalidParameterError(f"expected header s,count, got {header}")
            ss, cc = [], []
            for row in reader:
                if not row:
                    continue
                ss.append(float(row[0]))
                cc.append(int(row[1]))
        return GrowthSamples(tuple(ss), tuple(cc))


def _log2_plus(x: float) -> float:
    return math.log2(x) if x > 1.0 else 0.0


@dataclass(frozen=True)
class EntropyEstimate:
    exp_rate: float
    poly_degree: float
    window: tuple[float, float]
    n_used: int


def entropy_estimates(samples: GrowthSamples,
                      fit_window: tuple[float, float] | None = None,
                      ) -> EntropyEstimate:
    """Least-squares growth exponents of a sampled count function.

    exp_rate fits log2+ count against s (exponential growth rate, base 2);
    poly_degree fits log2+ count against log2 s (polynomial degree). The
    default window is the upper half of the sampled range. Requires at
    least four window samples with positive count, all at s > 0 so that
    the log-log fit is defined.
    """
    if fit_window is None:
        if not samples.s:
            raise InsufficientDataError("no samples")
        lo = 0.5 * (samples.s[0] + samples.s[-1])
        fit_window = (lo, samples.s[-1])
    lo, hi = fit_window
    if not (lo < hi):
        raise InvalidParameterError("fit window must satisfy lo < hi")

    xs, ys = [], []
    positive = 0
    for s, c in zip(samples.s, samples.count):
        if lo <= s <= hi:
            if s <= 0:
                raise InvalidParameterError("window samples must have s > 0")
            xs.append(s)
            ys.append(_log2_plus(c))
            if c > 0:
                positive += 1
    if positive < 4:
        raise InsufficientDataError(
            f"need >= 4 positive-count samples in window, got {positive}"
        )

    def slope(x: list[float], y: list[float]) -> float:
        n = len(x)
        mx = sum(x) / n
        my = sum(y) / n
        sxx = sum((a - mx) ** 2 for a in x)
        sxy = sum((a - mx) * (b - my) for a, b in zip(x, y))
        if sxx == 0:
            raise InsufficientDataError("degenerate window (single s value)")
        return sxy / sxx

    exp_rate = slope(xs, ys)
    poly_degree = slope([math.log2(s) for s in xs], ys)
    return EntropyEstimate(exp_rate, poly_degree, (lo, hi), len(xs))
