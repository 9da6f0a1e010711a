"""Core numeric types: ordered spectra, the qutrit orbit-space chart and
the two distance conventions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import DimensionMismatch, NonHermitian, NotAState, OutOfChamber

SQRT3 = math.sqrt(3.0)

#: tolerance for algebraic identities on stored values
VALUE_TOL = 1e-12
#: tolerance granted to eigensolver output
EIG_TOL = 1e-10
#: admission tolerance for chamber membership of chart points
CHAMBER_TOL = 1e-12


@dataclass(frozen=True)
class Spectrum:
    """Density-matrix eigenvalues as a non-increasing probability vector.

    Input values may arrive in any order; they are sorted non-increasing on
    construction. Each value must lie in [0, 1] and the total must equal 1,
    both within 1e-12.
    """

    values: tuple[float, ...]

    def __post_init__(self):
        vals = tuple(sorted((float(v) for v in self.values), reverse=True))
        if len(vals) < 2:
            raise DimensionMismatch("spectrum dimension must be at least 2")
        if vals[0] > 1.0 + VALUE_TOL or vals[-1] < -VALUE_TOL:
            raise NotAState(f"eigenvalues outside [0, 1]: {vals}")
        total = math.fsum(vals)
        if abs(total - 1.0) > VALUE_TOL:
            raise NotAState(f"eigenvalues sum to {total!r}, expected 1")
        object.__setattr__(self, "values", vals)

    @property
    def n(self) -> int:
        return len(self.values)

    def as_array(self) -> np.ndarray:
        return np.array(self.values, dtype=float)


@dataclass(frozen=True)
class QutritChart:
    """Orbit-space coordinates (xi3, xi8) of an ordered qutrit spectrum.

    Ordered spectra fill the triangle with corners (0, 0), (0, 1/2) and
    (sqrt(3)/2, 1/2); membership is checked by the operations that need it,
    not at construction.
    """

    xi3: float
    xi8: float

    def __post_init__(self):
        object.__setattr__(self, "xi3", float(self.xi3))
        object.__setattr__(self, "xi8", float(self.xi8))

    def in_chamber(self, tol: float = CHAMBER_TOL) -> bool:
        return (
            self.xi3 >= -tol
            and self.xi8 >= self.xi3 / SQRT3 - tol
            and self.xi8 <= 0.5 + tol
        )

    def norm(self) -> float:
        return math.hypot(self.xi3, self.xi8)


def require_chamber(c: QutritChart, tol: float = CHAMBER_TOL) -> None:
    if not c.in_chamber(tol):
        raise OutOfChamber(
            f"chart point ({c.xi3}, {c.xi8}) lies outside the chamber triangle"
        )


class MetricConvention(Enum):
    """Distance normalization for reported indicator values.

    FROBENIUS is the Hilbert-Schmidt norm between density matrices, which for
    commuting states equals the Euclidean distance between ordered spectra.
    PAPER rescales by sqrt(N/(N-1)) so distances equal Euclidean lengths in
    the (xi3, xi8) chart plane; the absolute-positivity radius takes the
    form sqrt(N+1)/(N^2-1) in this convention. PAPER is the reporting
    default.
    """

    FROBENIUS = "frobenius"
    PAPER = "paper"


def conversion_factor(n: int) -> float:
    """Scale between the conventions: d_paper = factor * d_frobenius."""
    if n < 2:
        raise DimensionMismatch("dimension must be at least 2")
    return math.sqrt(n / (n - 1.0))


def metric_convert(
    d: float, n: int, source: MetricConvention, target: MetricConvention
) -> float:
    """Convert a distance value between the two conventions."""
    factor = conversion_factor(n)
    if d < 0:
        raise ValueError("distances are non-negative")
    if source == target:
        return float(d)
    if source is MetricConvention.FROBENIUS:
        return float(d) * factor
    return float(d) / factor


def spectrum_from_matrix(m) -> Spectrum:
    """Eigenvalues of a density matrix, sorted non-increasing.

    The input must be Hermitian within 1e-12 elementwise, have unit trace
    within 1e-10 and be positive semidefinite within 1e-10. Tiny negative
    eigenvalues are clipped at zero and the vector renormalized; both
    adjustments stay inside the admission tolerances.
    """
    arr = np.asarray(m, dtype=complex)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {arr.shape}")
    if arr.shape[0] < 2:
        raise DimensionMismatch("dimension must be at least 2")
    defect = float(np.max(np.abs(arr - arr.conj().T)))
    if defect > 1e-12:
        raise NonHermitian(f"matrix deviates from Hermitian by {defect:.3e}")
    eig = np.linalg.eigvalsh((arr + arr.conj().T) / 2.0)
    trace = float(np.sum(eig))
    if abs(trace - 1.0) > 1e-10:
        raise NotAState(f"trace is {trace!r}, expected 1")
    if float(eig[0]) < -EIG_TOL:
        raise NotAState(f"negative eigenvalue {float(eig[0])!r}")
    clipped = np.clip(eig, 0.0, None)
    clipped /= clipped.sum()
    return Spectrum(tuple(float(v) for v in clipped))


def chart_from_spectrum(r: Spectrum) -> QutritChart:
    """Chart point of an ordered qutrit spectrum.

    xi3 = sqrt(3) (r1 - r2) / 2 and xi8 = (1 - 3 r3) / 2, the inverse of
    :func:`spectrum_from_chart`.
    """
    if r.n != 3:
        raise DimensionMismatch(f"the chart is defined for qutrits, got n={r.n}")
    r1, r2, r3 = r.values
    return QutritChart(SQRT3 * (r1 - r2) / 2.0, (1.0 - 3.0 * r3) / 2.0)


def spectrum_from_chart(c: QutritChart) -> Spectrum:
    """Ordered qutrit spectrum of a chart point inside the chamber.

    r1 = 1/3 + xi3/sqrt(3) + xi8/3, r2 = 1/3 - xi3/sqrt(3) + xi8/3 and
    r3 = 1/3 - 2 xi8/3. Raises OutOfChamber when the point violates the
    chamber inequalities beyond 1e-12.
    """
    require_chamber(c)
    r1 = 1.0 / 3.0 + c.xi3 / SQRT3 + c.xi8 / 3.0
    r2 = 1.0 / 3.0 - c.xi3 / SQRT3 + c.xi8 / 3.0
    r3 = 1.0 / 3.0 - 2.0 * c.xi8 / 3.0
    return Spectrum((r1, r2, r3))
