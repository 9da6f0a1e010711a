"""The nonclassicality distance indicator: exact qutrit closed form,
Dykstra projection onto the positivity polytope for general dimension, and
an exhaustive active-set oracle."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import (
    MetricConvention,
    QutritChart,
    Spectrum,
    chart_from_spectrum,
    conversion_factor,
    require_chamber,
    spectrum_from_chart,
)
from .errors import DimensionMismatch, InfeasibleModel, NoConvergence
from .geometry import Region, _cut_projection, classify_region
from .kernel import KernelSpectrum, check_zeta, zeta_from_kernel
from .wigner import CLASSICAL_TOL, wigner_floor

MAX_CYCLES = 100_000


@dataclass(frozen=True)
class IndicatorResult:
    """Outcome of the nonclassicality distance computation for one state.

    Distances come in both conventions; `region` and `nearest_chart` are
    populated for qutrits only. `floor` is the exact Wigner floor of the
    input state and `classical` is the floor >= -1e-12 predicate.
    """

    distance_paper: float
    distance_frobenius: float
    region: Region | None
    nearest: Spectrum
    floor: float
    classical: bool
    convention: MetricConvention = MetricConvention.PAPER
    nearest_chart: QutritChart | None = None

    @property
    def distance(self) -> float:
        """Distance in the requested convention."""
        if self.convention is MetricConvention.PAPER:
            return self.distance_paper
        return self.distance_frobenius


def qutrit_distance(c: QutritChart, zeta: float) -> IndicatorResult:
    """Closed-form nonclassicality distance of a qutrit chart point.

    Zero on the classical triangle OQR; distance to the cut line on the
    band QRST; distance to the endpoint Q or R beyond the band. Values are
    Euclidean in the chart plane, which is the PAPER convention; the
    FROBENIUS value is the same number scaled by sqrt(2/3).
    """
    z = check_zeta(zeta)
    require_chamber(c)
    region, nearest_xy, d_paper, p = _cut_projection(c, z)
    floor = 1.0 / 3.0 - (4.0 / 3.0) * p
    classical = region is Region.OQR
    nearest_chart = c if classical else QutritChart(*nearest_xy)
    return IndicatorResult(
        distance_paper=d_paper,
        distance_frobenius=d_paper / conversion_factor(3),
        region=region,
        nearest=spectrum_from_chart(nearest_chart),
        floor=floor,
        classical=classical,
        nearest_chart=nearest_chart,
    )


def project_monotone_nonincreasing(values: Sequence[float]) -> list[float]:
    """Euclidean projection onto the non-increasing cone.

    Pool adjacent violators: scan left to right keeping block means
    non-increasing, merging blocks whenever a new mean exceeds the one
    before it.
    """
    means: list[float] = []
    counts: list[int] = []
    for v in values:
        mean, count = float(v), 1
        while means and means[-1] < mean:
            mean = (means[-1] * counts[-1] + mean * count) / (counts[-1] + count)
            count += counts[-1]
            means.pop()
            counts.pop()
        means.append(mean)
        counts.append(count)
    out: list[float] = []
    for mean, count in zip(means, counts):
        out.extend([mean] * count)
    return out


def project_simplex(values: Sequence[float]) -> list[float]:
    """Euclidean projection onto the probability simplex.

    Sorted threshold method: shift everything by the largest theta keeping
    the positive part summing to one, then clip at zero.
    """
    u = sorted(values, reverse=True)
    theta = 0.0
    csum = 0.0
    for j, uj in enumerate(u):
        csum += uj
        t = (csum - 1.0) / (j + 1.0)
        if uj - t > 0.0:
            theta = t
        else:
            break
    return [max(float(v) - theta, 0.0) for v in values]


def project_halfspace(values: Sequence[float], normal: Sequence[float]) -> list[float]:
    """Euclidean projection onto {x : normal . x >= 0} (rank-one update)."""
    s = math.fsum(v * a for v, a in zip(values, normal))
    if s >= 0.0:
        return [float(v) for v in values]
    scale = s / math.fsum(a * a for a in normal)
    return [float(v) - scale * a for v, a in zip(values, normal)]


def _halfspace_gap(x: Sequence[float], normal: Sequence[float]) -> float:
    return max(0.0, -math.fsum(v * a for v, a in zip(x, normal)))


def _dykstra(
    start: Sequence[float],
    normal: Sequence[float],
    tol: float,
    max_cycles: int,
) -> list[float]:
    """Dykstra alternating projections onto the positivity halfspace, the
    non-increasing cone and the simplex, in that order per cycle.

    Ending each cycle on the cone and simplex leaves the iterate exactly
    ordered and normalized, so only the halfspace residual needs watching.
    Raises NoConvergence when the cycle cap is hit with that residual above
    10 * tol.
    """
    x = [float(v) for v in start]
    n = len(x)
    p_half = [0.0] * n
    p_cone = [0.0] * n
    p_splx = [0.0] * n
    for _ in range(max_cycles):
        x_before = x
        z = [a + b for a, b in zip(x, p_half)]
        x = project_halfspace(z, normal)
        p_half = [a - b for a, b in zip(z, x)]
        z = [a + b for a, b in zip(x, p_cone)]
        x = project_monotone_nonincreasing(z)
        p_cone = [a - b for a, b in zip(z, x)]
        z = [a + b for a, b in zip(x, p_splx)]
        x = project_simplex(z)
        p_splx = [a - b for a, b in zip(z, x)]
        move = math.sqrt(sum((a - b) ** 2 for a, b in zip(x, x_before)))
        if move < tol and _halfspace_gap(x, normal) <= 10.0 * tol:
            return x
    residual = _halfspace_gap(x, normal)
    if residual > 10.0 * tol:
        raise NoConvergence(residual, max_cycles)
    return x


def project_to_classical(
    r: Spectrum,
    kernel: KernelSpectrum,
    tol: float = 1e-12,
    *,
    max_cycles: int = MAX_CYCLES,
) -> Spectrum:
    """Euclidean projection of an ordered spectrum onto the classical set.

    The classical set is the chamber cut by the floor >= 0 halfspace.
    Dykstra's alternating projections over three exactly-projectable sets
    converge to the exact nearest point; iteration stops once a full cycle
    moves the iterate by less than tol. A spectrum already satisfying
    floor >= 0 is returned unchanged.
    """
    if r.n != kernel.n:
        raise DimensionMismatch(f"spectrum n={r.n} vs kernel n={kernel.n}")
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    if wigner_floor(r, kernel) >= 0.0:
        return r
    normal = kernel.values[::-1]
    x = _dykstra(r.values, normal, tol, max_cycles)
    return Spectrum(tuple(x))


def distance_general(
    r: Spectrum,
    kernel: KernelSpectrum,
    convention: MetricConvention = MetricConvention.PAPER,
    *,
    tol: float = 1e-12,
    max_cycles: int = MAX_CYCLES,
) -> IndicatorResult:
    """Nonclassicality distance of a state in any dimension.

    Classical states (floor >= -1e-12) report distance zero and themselves
    as nearest point; everything else is projected onto the positivity
    polytope. Agrees with :func:`qutrit_distance` for n = 3.
    """
    if r.n != kernel.n:
        raise DimensionMismatch(f"spectrum n={r.n} vs kernel n={kernel.n}")
    floor = wigner_floor(r, kernel)
    classical = floor >= -CLASSICAL_TOL
    if classical:
        nearest = r
        d_frob = 0.0
    else:
        nearest = project_to_classical(r, kernel, tol, max_cycles=max_cycles)
        d_frob = math.sqrt(
            math.fsum((a - b) ** 2 for a, b in zip(r.values, nearest.values))
        )
    region = None
    nearest_chart = None
    if r.n == 3:
        zeta = zeta_from_kernel(kernel)
        region = Region.OQR if classical else classify_region(chart_from_spectrum(r), zeta)
        nearest_chart = chart_from_spectrum(nearest)
    return IndicatorResult(
        distance_paper=d_frob * conversion_factor(r.n),
        distance_frobenius=d_frob,
        region=region,
        nearest=nearest,
        floor=floor,
        classical=classical,
        convention=convention,
        nearest_chart=nearest_chart,
    )


def bruteforce_project(r: Spectrum, kernel: KernelSpectrum) -> Spectrum:
    """Exhaustive active-set projection onto the positivity polytope.

    Enumerates every subset of the inequality constraints as a candidate
    active set, solves the equality-constrained least-squares system by
    KKT elimination and keeps the feasible candidate closest to the input.
    Exact up to linear-solve rounding; an independent check for
    :func:`project_to_classical` at small n.
    """
    n = r.n
    if kernel.n != n:
        raise DimensionMismatch(f"spectrum n={n} vs kernel n={kernel.n}")
    if n > 8:
        raise DimensionMismatch("the exhaustive projector supports n <= 8")
    target = r.as_array()
    rows = np.zeros((n + 1, n))
    for i in range(n - 1):
        rows[i, i], rows[i, i + 1] = 1.0, -1.0
    rows[n - 1, n - 1] = 1.0
    rows[n] = kernel.values[::-1]
    ones = np.ones(n)

    best = None
    best_d2 = math.inf
    for mask in range(1 << (n + 1)):
        active = [k for k in range(n + 1) if mask >> k & 1]
        c = np.vstack([ones[None, :], rows[active]])
        d = np.zeros(len(active) + 1)
        d[0] = 1.0
        m = c @ c.T
        rhs = c @ target - d
        try:
            nu = np.linalg.solve(m, rhs)
        except np.linalg.LinAlgError:
            nu = np.linalg.lstsq(m, rhs, rcond=None)[0]
        x = target - c.T @ nu
        if abs(float(ones @ x) - 1.0) > 1e-9:
            continue
        if float(np.min(rows @ x)) < -1e-9:
            continue
        d2 = float(np.sum((x - target) ** 2))
        if d2 < best_d2:
            best_d2 = d2
            best = x
    if best is None:
        raise InfeasibleModel("no feasible active set found")
    return Spectrum(tuple(float(v) for v in best))
