"""Reproduction tables: the (d, n) improvement grid, pole tables, convergence."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable

from .functional_bounds import shapiro_C
from .landau import landau_bound, landau_values, near_extremal, p_n
from .rootfind import find_roots

STRICT_TOL = 1e-12


@dataclass(frozen=True)
class GridCell:
    d: int
    n: int
    C: float
    L: float
    verdict: str
    classification: str

    @property
    def improved(self) -> bool:
        return self.verdict == "improved"


def classify(n: int, d: int) -> str:
    if n == 0 or n == d - 1:
        return "trivial"
    if d == 2 * n + 2:
        return "newman_known"
    return "open"


def _grid_row(d: int, L: tuple[float, ...]) -> list[GridCell]:
    cells = []
    for n in range(d):
        C = shapiro_C(n, d)
        verdict = "improved" if C < L[n] - STRICT_TOL else "not_improved"
        cells.append(GridCell(d, n, C, L[n], verdict, classify(n, d)))
    return cells


def figure1_grid(dmax: int, jobs: int = 1) -> list[GridCell]:
    """Every cell ``0 <= n < d <= dmax``, ordered by ``(d, n)``.

    ``L_n`` is rounded once from its exact rational value; a cell counts as
    improved when ``C_{n,d} < L_n - 1e-12``.
    """
    if dmax < 2:
        raise ValueError("dmax must be >= 2")
    L = tuple(landau_values(dmax - 1))
    ds = range(2, dmax + 1)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_grid_row, ds, [L] * len(ds)))
    else:
        rows = [_grid_row(d, L) for d in ds]
    return [cell for row in rows for cell in row]


def improved_set(cells: Iterable[GridCell]) -> set[tuple[int, int]]:
    return {(c.d, c.n) for c in cells if c.improved}


@dataclass(frozen=True)
class PoleRow:
    modulus: float
    phase_deg: float
    zero_modulus: float


def fig2_table(n: int) -> list[PoleRow]:
    """Poles of ``f_n`` (roots of ``P_n``) with the mirrored zero radii."""
    if n < 1:
        raise ValueError("n must be >= 1")
    roots = find_roots(p_n(n)).roots
    return [PoleRow(float(abs(z)), _phase_deg(z), float(1 / abs(z))) for z in roots]


def _phase_deg(z: complex) -> float:
    # in (-180, 180], so a negative real root reads 180 whatever the sign of its zero imaginary part
    phase = math.degrees(math.atan2(z.imag, z.real))
    return phase + 360.0 if phase <= -180.0 else phase


@dataclass(frozen=True)
class ConvergenceRow:
    d: int
    ratio: float
    gap: float
    envelope: float


def thm21_convergence(n: int, d_list: Iterable[int]) -> list[ConvergenceRow]:
    """Head-sum ratio of the normalised truncation against ``L_n`` for each ``d``.

    ``envelope`` is ``n**3 exp(-d / (5n))``, the decay rate of the error term
    (its implicit constant is unknown, so it is reported, not asserted).
    """
    L = landau_bound(n).value_float
    rows = []
    for d in d_list:
        ne = near_extremal(n, d)
        ratio = abs(ne.coeff_sum_head) / L
        rows.append(ConvergenceRow(d, ratio, 1.0 - ratio, n**3 * math.exp(-d / (5 * n))))
    return rows


def cor22_degree(n: int) -> int:
    """``ceil(16 n log n)``, the start of the regime where the growth law holds."""
    return math.ceil(16 * n * math.log(n))


def grid_summary(cells: list[GridCell]) -> dict[str, int]:
    out = {"cells": len(cells), "improved": 0}
    for c in cells:
        if c.improved:
            out["improved"] += 1
            key = f"improved_{c.classification}"
            out[key] = out.get(key, 0) + 1
    return out


def below_trivial(cells: list[GridCell]) -> list[GridCell]:
    """Improved cells whose bound falls below 1, which would be inconsistent."""
    return [c for c in cells if c.improved and c.C < 1.0 - STRICT_TOL]

