"""Filtered chain complexes over a prime field and their barcodes.

Generators carry real filtration values; the boundary strictly decreases
filtration, so sublevel spans are subcomplexes. reduce() is the standard
column reduction with pivot memoization; rank_oracle() recomputes betti-style
ranks with dense elimination and shares no code with reduce.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Mapping, Sequence

import numpy as np

from .barcode import Bar, Barcode, count_long_bars
from .errors import InvalidComplexError, InvalidParameterError


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Generator:
    id: str
    filtration: float


class FilteredComplex:
    """Ungraded filtered complex: generators, d with d*d = 0 over F_p.

    boundary maps a generator id to {id: coefficient}; coefficients are
    reduced mod p and zero entries dropped. Generators are processed in
    (filtration, input order); the order is part of the contract so that
    reduce() is deterministic.
    """

    def __init__(self, generators: Sequence[Generator],
                 boundary: Mapping[str, Mapping[str, int]],
                 field: int = 2):
        if not _is_prime(field):
            raise InvalidParameterError(f"field must be prime, got {field}")
        ids = [g.id for g in generators]
        if len(set(ids)) != len(ids):
            raise InvalidComplexError("duplicate generator ids")
        for g in generators:
            if not math.isfinite(g.filtration):
                raise InvalidComplexError(f"non-finite filtration on {g.id}")
        self.field = field
        self.generators = tuple(generators)
        index = {g.id: k for k, g in enumerate(generators)}
        cleaned: dict[str, dict[str, int]] = {}
        for col, entries in boundary.items():
            if col not in index:
                raise InvalidComplexError(f"boundary of unknown generator {col}")
            colmap: dict[str, int] = {}
            for row, coeff in entries.items():
                if row not in index:
                    raise InvalidComplexError(f"unknown generator {row} in d({col})")
                c = int(coeff) % field
                if c:
                    colmap[row] = c
            if colmap:
                cleaned[col] = colmap
        self.boundary = cleaned
        self._index = index
        self._check_strict_decrease()
        self._check_d_squared()

    # -- validation ---------------------------------------------------------

    def _check_strict_decrease(self) -> None:
        filt = {g.id: g.filtration for g in self.generators}
        for col, entries in self.boundary.items():
            for row in entries:
                if not (filt[row] < filt[col]):
                    raise InvalidComplexError(
                        f"d({col}) hits {row} but filtration does not drop "
                        f"({filt[row]} >= {filt[col]})"
                    )

    def _check_d_squared(self) -> None:
        p = self.field
        for col, entries in self.boundary.items():
            acc: dict[str, int] = {}
            for mid, c1 in entries.items():
                for row, c2 in self.boundary.get(mid, {}).items():
                    acc[row] = (acc.get(row, 0) + c1 * c2) % p
            if any(v % p for v in acc.values()):
                raise InvalidComplexError(f"d(d({col})) != 0 over F_{p}")

    # -- helpers ------------------------------------------------------------

    def sorted_order(self) -> list[int]:
        """Indices of generators sorted by (filtration, input position)."""
        return sorted(range(len(self.generators)),
                      key=lambda k: (self.generators[k].filtration, k))

    def filtration_values(self) -> list[float]:
        return sorted({g.filtration for g in self.generators})

    def dense_matrix(self) -> np.ndarray:
        """Boundary matrix in sorted order, entries in [0, p)."""
        order = self.sorted_order()
        pos = {self.generators[k].id: i for i, k in enumerate(order)}
        n = len(order)
        mat = np.zeros((n, n), dtype=np.int64)
        for col, entries in self.boundary.items():
            j = pos[col]
            for row, c in entries.items():
                mat[pos[row], j] = c % self.field
        return mat

    # -- JSON ----------------------------------------------------------------

    def to_json(self) -> str:
        bnd: dict[str, list] = {}
        for col, entries in self.boundary.items():
            out = []
            for row, c in sorted(entries.items()):
                out.append(row if c == 1 else [row, c])
            bnd[col] = out
        return json.dumps({
            "field": self.field,
            "generators": [
                {"id": g.id, "filtration": g.filtration} for g in self.generators
            ],
            "boundary": bnd,
        })

    @staticmethod
    def from_json(text: str) -> "FilteredComplex":
        data = json.loads(text)
        gens = [Generator(rec["id"], float(rec["filtration"]))
                for rec in data["generators"]]
        boundary: dict[str, dict[str, int]] = {}
        for col, entries in data.get("boundary", {}).items():
            colmap: dict[str, int] = {}
            for item in entries:
                if isinstance(item, str):
                    colmap[item] = colmap.get(item, 0) + 1
                else:
                    row, c = item
                    colmap[row] = colmap.get(row, 0) + int(c)
            boundary[col] = colmap
        return FilteredComplex(gens, boundary, int(data.get("field", 2)))


# -- column reduction ---------------------------------------------------------

def reduce_complex(cx: FilteredComplex) -> Barcode:
    """Barcode of the filtered complex by left-to-right column reduction.

    When column j settles with pivot row i the pair contributes (filt_i,
    filt_j]; columns that reduce to zero and never serve as pivots open
    infinite bars at their own filtration.
    """
    order = cx.sorted_order()
    n = len(order)
    filt = [cx.generators[k].filtration for k in order]
    pos = {cx.generators[k].id: i for i, k in enumerate(order)}

    if cx.field == 2:
        cols = [0] * n
        for col, entries in cx.boundary.items():
            j = pos[col]
            acc = 0
            for row in entries:
                acc |= 1 << pos[row]
            cols[j] = acc
        pivot_owner: dict[int, int] = {}
        pairs: list[tuple[int, int]] = []
        for j in range(n):
            col = cols[j]
            while col:
                low = col.bit_length() - 1
                owner = pivot_owner.get(low)
                if owner is None:
                    pivot_owner[low] = j
                    pairs.append((low, j))
                    break
                col ^= cols[owner]
            cols[j] = col
        paired_rows = {i for i, _ in pairs}
        paired_cols = {j for _, j in pairs}
    else:
        p = cx.field
        cols2: list[dict[int, int]] = [dict() for _ in range(n)]
        for col, entries in cx.boundary.items():
            j = pos[col]
            cols2[j] = {pos[row]: c % p for row, c in entries.items() if c % p}
        pivot_owner = {}
        pairs = []
        for j in range(n):
            col = cols2[j]
            while col:
                low = max(col)
                owner = pivot_owner.get(low)
                if owner is None:
                    pivot_owner[low] = j
                    pairs.append((low, j))
                    break
                factor = (col[low] * pow(cols2[owner][low], p - 2, p)) % p
                for row, c in cols2[owner].items():
                    v = (col.get(row, 0) - factor * c) % p
                    if v:
                        col[row] = v
                    else:
                        col.pop(row, None)
            cols2[j] = col
        paired_rows = {i for i, _ in pairs}
        paired_cols = {j for _, j in pairs}

    bars = [Bar(filt[i], filt[j]) for i, j in pairs]
    for j in range(n):
        if j not in paired_rows and j not in paired_cols:
            bars.append(Bar(filt[j], math.inf))
    bars.sort()
    return Barcode(tuple(bars), spectrum=tuple(cx.filtration_values()))


# -- independent rank oracle ---------------------------------------------------

def _eliminate_mod_p(mat: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Row echelon form mod p; returns (echelon matrix, pivot column list)."""
    m = mat % p
    rows, cols = m.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        sub = np.nonzero(m[r:, c])[0]
        if sub.size == 0:
            continue
        k = r + int(sub[0])
        if k != r:
            m[[r, k]] = m[[k, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        m[r] = (m[r] * inv) % p
        mask = np.nonzero(m[:, c])[0]
        mask = mask[mask != r]
        if mask.size:
            m[mask] = (m[mask] - np.outer(m[mask, c], m[r])) % p
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def _rank_mod_p(mat: np.ndarray, p: int) -> int:
    if mat.size == 0:
        return 0
    return len(_eliminate_mod_p(mat, p)[1])


def _nullspace_mod_p(mat: np.ndarray, p: int) -> np.ndarray:
    """Columns spanning the null space of mat over F_p."""
    rows, cols = mat.shape
    if cols == 0:
        return np.zeros((0, 0), dtype=np.int64)
    ech, pivots = _eliminate_mod_p(mat, p)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((cols, len(free)), dtype=np.int64)
    for k, fc in enumerate(free):
        basis[fc, k] = 1
        for r, pc in enumerate(pivots):
            basis[pc, k] = (-ech[r, fc]) % p
    return basis


def rank_oracle(cx: FilteredComplex, s: float, t: float) -> int:
    """Rank of the map H(C_{<s}) -> H(C_{<t}) induced by inclusion.

    Strict sublevel spans; computed as dim(Z_s + B_t) - dim B_t by dense
    elimination mod p, independently of the column reduction.
    """
    if not (s <= t):
        raise InvalidParameterError(f"need s <= t, got s={s}, t={t}")
    p = cx.field
    order = cx.sorted_order()
    filt = [cx.generators[k].filtration for k in order]
    mat = cx.dense_matrix()
    n = len(order)
    idx_s = [j for j in range(n) if filt[j] < s]
    idx_t = [j for j in range(n) if filt[j] < t]
    if not idx_s:
        return 0
    d_s = mat[:, idx_s]
    d_t = mat[:, idx_t]
    # cycles of C_{<s}, embedded in the full index space
    null_s = _nullspace_mod_p(d_s, p)
    z_basis = np.zeros((n, null_s.shape[1]), dtype=np.int64)
    z_basis[idx_s, :] = null_s
    dim_b_t = _rank_mod_p(d_t, p)
    stacked = np.concatenate([z_basis, d_t], axis=1)
    return _rank_mod_p(stacked, p) - dim_b_t


@dataclass(frozen=True)
class BarsVsGenerators:
    long_bars: int
    generators_below: int
    ok: bool


def bars_vs_generators(cx: FilteredComplex, eps: float, s: float) -> BarsVsGenerators:
    """Compare b_eps(s) of the reduced barcode with the generator count below s.

    The bar count can never exceed the number of generators with filtration
    below s, since each counted bar is born on a distinct generator.
    """
    b = count_long_bars(reduce_complex(cx), eps, s)
    g = sum(1 for gen in cx.generators if gen.filtration < s)
    return BarsVsGenerators(b, g, b <= g)
