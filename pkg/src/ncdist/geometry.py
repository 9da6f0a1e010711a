"""Positivity geometry: the separating hyperplane, the Wigner-positivity
polytope inside the ordered eigenvalue simplex, the absolute-positivity
ball with its tangent state, and the qutrit region decomposition."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .core import (
    SQRT3,
    MetricConvention,
    QutritChart,
    Spectrum,
    chart_from_spectrum,
    require_chamber,
)
from .errors import DimensionMismatch
from .kernel import KernelSpectrum, check_zeta
from .wigner import CLASSICAL_TOL

#: chart-plane counterpart of CLASSICAL_TOL: the floor equals
#: 1/3 - (4/3) p, so floor >= -CLASSICAL_TOL reads p <= 1/4 + OQR_TOL
OQR_TOL = 0.75 * CLASSICAL_TOL

#: ties on the foot position resolve toward Q and R (boundary cases agree
#: on the distance, so the label is a reporting choice)
_TIE_TOL = 1e-12

_VERTEX_GAP = 1e-9


class Region(Enum):
    """Qutrit chamber regions, named by the anchor points bounding them."""

    OQR = "OQR"  # classical triangle, distance zero
    AQT = "AQT"  # nearest classical point is Q
    QRST = "QRST"  # nearest classical point is the orthogonal foot
    BRS = "BRS"  # nearest classical point is R


@dataclass(frozen=True)
class Hyperplane:
    """Zero level of the Wigner floor over the ordered simplex.

    The normal is the kernel spectrum in increasing order, so evaluating
    the functional on a decreasing spectrum reproduces the floor pairing.
    The offset is always zero.
    """

    normal: tuple[float, ...]
    offset: float = 0.0

    def value(self, r: Spectrum) -> float:
        if r.n != len(self.normal):
            raise DimensionMismatch(f"spectrum n={r.n} vs normal n={len(self.normal)}")
        return math.fsum(a * b for a, b in zip(r.values, self.normal)) - self.offset


@dataclass(frozen=True)
class Polytope:
    """Wigner-positivity polytope in vertex plus halfspace form.

    Every polytope point satisfies normal . r >= offset for each halfspace
    row; all offsets here are zero. Vertices are stored in a deterministic
    order: by chart coordinates for qutrits, lexicographically otherwise.
    """

    n: int
    vertices: tuple[Spectrum, ...]
    halfspaces: tuple[tuple[tuple[float, ...], float], ...]

    def to_json_dict(self) -> dict:
        out = {"n": self.n, "vertices": [list(v.values) for v in self.vertices]}
        if self.n == 3:
            charts = [chart_from_spectrum(v) for v in self.vertices]
            out["chart_vertices"] = [[c.xi3, c.xi8] for c in charts]
        return out


@dataclass(frozen=True)
class QutritAnchors:
    """Chart positions of the chamber corners and the cut endpoints."""

    O: QutritChart
    A: QutritChart
    B: QutritChart
    Q: QutritChart
    R: QutritChart


def hyperplane(kernel: KernelSpectrum) -> Hyperplane:
    """Separating hyperplane of a kernel: normal = kernel sorted increasing."""
    return Hyperplane(normal=kernel.values[::-1], offset=0.0)


def positivity_polytope(kernel: KernelSpectrum) -> Polytope:
    """Cut the ordered-simplex chamber with the positivity halfspace.

    The chamber simplex has vertices v_k = (1/k, ..., 1/k, 0, ..., 0) for
    k = 1..n. A single halfspace cut keeps the satisfying vertices and adds
    one vertex per edge whose endpoints fall on strictly opposite sides.
    The result is never empty: the barycenter has floor 1/n.
    """
    n = kernel.n
    chamber = [
        np.array([1.0 / k] * k + [0.0] * (n - k), dtype=float)
        for k in range(1, n + 1)
    ]
    normal = np.array(kernel.values[::-1], dtype=float)
    w = [float(normal @ v) for v in chamber]

    points = [v for v, wv in zip(chamber, w) if wv >= -CLASSICAL_TOL]
    for i in range(n):
        for j in range(i + 1, n):
            lo, hi = sorted((w[i], w[j]))
            if lo < -CLASSICAL_TOL and hi > CLASSICAL_TOL:
                t = w[i] / (w[i] - w[j])
                cut = chamber[i] + t * (chamber[j] - chamber[i])
                if all(float(np.linalg.norm(cut - p)) > _VERTEX_GAP for p in points):
                    points.append(cut)

    vertices = [Spectrum(tuple(float(x) for x in p)) for p in points]
    if n == 3:
        vertices.sort(key=lambda v: (chart_from_spectrum(v).xi3, chart_from_spectrum(v).xi8))
    else:
        vertices.sort(key=lambda v: v.values)

    rows: list[tuple[tuple[float, ...], float]] = []
    for i in range(n - 1):
        row = [0.0] * n
        row[i], row[i + 1] = 1.0, -1.0
        rows.append((tuple(row), 0.0))
    last = [0.0] * n
    last[n - 1] = 1.0
    rows.append((tuple(last), 0.0))
    rows.append((tuple(float(x) for x in normal), 0.0))
    return Polytope(n=n, vertices=tuple(vertices), halfspaces=tuple(rows))


def absolute_radius(n: int, convention: MetricConvention) -> float:
    """Radius of the ball around the maximally mixed state whose members are
    classical for every kernel of dimension n."""
    if n < 2:
        raise DimensionMismatch("dimension must be at least 2")
    r = math.sqrt(n + 1.0) / (n * n - 1.0)
    if convention is MetricConvention.FROBENIUS:
        return r * math.sqrt((n - 1.0) / n)
    return r


def tangent_spectrum(kernel: KernelSpectrum) -> Spectrum:
    """State where the positivity hyperplane touches the absolute-positivity
    ball: spectrum (n - pi_n, n - pi_{n-1}, ..., n - pi_1) / (n^2 - 1)."""
    n = kernel.n
    denom = float(n * n - 1)
    return Spectrum(tuple((n - p) / denom for p in reversed(kernel.values)))


def qutrit_anchor_points(zeta: float) -> QutritAnchors:
    """Chamber corners O, A, B plus the cut endpoints Q (on edge OA) and
    R (on edge OB) for the given moduli angle."""
    z = check_zeta(zeta)
    sec_q = 1.0 / math.cos(z - math.pi / 3.0)
    sec_r = 1.0 / math.cos(z)
    return QutritAnchors(
        O=QutritChart(0.0, 0.0),
        A=QutritChart(0.0, 0.5),
        B=QutritChart(SQRT3 / 2.0, 0.5),
        Q=QutritChart(0.0, 0.25 * sec_q),
        R=QutritChart(SQRT3 / 8.0 * sec_r, 0.125 * sec_r),
    )


def _cut_projection(
    c: QutritChart, zeta: float
) -> tuple[Region, tuple[float, float], float, float]:
    """Region of a chamber point plus its nearest point on the classical set.

    Returns (region, nearest chart point, chart-plane distance, line
    coordinate p). The cut line is p = 1/4 with p the projection of the
    chart point onto the direction (cos(zeta + pi/6), sin(zeta + pi/6)).
    Boundary ties resolve to OQR on the line, AQT at Q and BRS at R.
    """
    ang = zeta + math.pi / 6.0
    cos_a, sin_a = math.cos(ang), math.sin(ang)
    p = c.xi3 * cos_a + c.xi8 * sin_a
    if p <= 0.25 + OQR_TOL:
        return Region.OQR, (c.xi3, c.xi8), 0.0, p

    excess = p - 0.25
    foot = (c.xi3 - excess * cos_a, c.xi8 - excess * sin_a)
    anchors = qutrit_anchor_points(zeta)
    q = (anchors.Q.xi3, anchors.Q.xi8)
    r = (anchors.R.xi3, anchors.R.xi8)
    # coordinate along the cut line; Q sits on the positive side of R
    s_foot = -foot[0] * sin_a + foot[1] * cos_a
    s_q = -q[0] * sin_a + q[1] * cos_a
    s_r = -r[0] * sin_a + r[1] * cos_a
    if s_foot >= s_q - _TIE_TOL:
        return Region.AQT, q, math.hypot(c.xi3 - q[0], c.xi8 - q[1]), p
    if s_foot <= s_r + _TIE_TOL:
        return Region.BRS, r, math.hypot(c.xi3 - r[0], c.xi8 - r[1]), p
    return Region.QRST, foot, excess, p


def classify_region(c: QutritChart, zeta: float) -> Region:
    """Which piece of the chamber decomposition a chart point falls in."""
    z = check_zeta(zeta)
    require_chamber(c)
    return _cut_projection(c, z)[0]
