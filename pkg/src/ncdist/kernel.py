"""Stratonovich-Weyl kernel spectra: the qutrit moduli family, validation of
the defining trace conditions, and random sampling of solutions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import SQRT3
from .errors import DimensionMismatch, MasterEquationViolated, ModuliOutOfRange

ZETA_MAX = math.pi / 3.0
#: slack accepted on the moduli angle before rejecting; inputs are clamped
ZETA_SLACK = 1e-9

#: admission tolerances for externally supplied kernel spectra
TRACE_TOL = 1e-9
SQUARE_TOL = 1e-8


@dataclass(frozen=True)
class KernelSpectrum:
    """Eigenvalues of a Stratonovich-Weyl kernel, sorted non-increasing.

    A valid kernel spectrum satisfies sum(pi) = 1 and sum(pi^2) = n; both
    residuals are checked on construction and reported together on failure.
    """

    values: tuple[float, ...]

    def __post_init__(self):
        vals = tuple(sorted((float(v) for v in self.values), reverse=True))
        n = len(vals)
        if n < 2:
            raise DimensionMismatch("kernel dimension must be at least 2")
        res_trace = abs(math.fsum(vals) - 1.0)
        res_square = abs(math.fsum(v * v for v in vals) - n)
        if res_trace > TRACE_TOL or res_square > SQUARE_TOL:
            raise MasterEquationViolated(res_trace, res_square)
        # spread around the mean 1/n is forced by the trace conditions
        assert vals[0] > 1.0 / n > vals[-1]
        object.__setattr__(self, "values", vals)

    @property
    def n(self) -> int:
        return len(self.values)

    def as_array(self) -> np.ndarray:
        return np.array(self.values, dtype=float)

    def residuals(self) -> tuple[float, float]:
        """Absolute residuals of the two trace conditions."""
        res_trace = abs(math.fsum(self.values) - 1.0)
        res_square = abs(math.fsum(v * v for v in self.values) - self.n)
        return res_trace, res_square


def check_zeta(zeta: float) -> float:
    """Validate a moduli angle and clamp it into [0, pi/3].

    Values within 1e-9 outside the interval are accepted and clamped, so
    decimal renditions of pi/3 do not get rejected.
    """
    z = float(zeta)
    if z < -ZETA_SLACK or z > ZETA_MAX + ZETA_SLACK:
        raise ModuliOutOfRange(f"zeta={z} outside [0, {ZETA_MAX}]")
    return min(max(z, 0.0), ZETA_MAX)


def qutrit_kernel(zeta: float) -> KernelSpectrum:
    """Qutrit kernel spectrum at moduli angle zeta in [0, pi/3].

    Returns (1/3) {1 + 2 sqrt(3) sin z + 2 cos z,
                   1 - 2 sqrt(3) sin z + 2 cos z,
                   1 - 4 cos z}
    sorted non-increasing. The endpoints are included: zeta = 0 gives the
    degenerate spectrum (1, 1, -1).
    """
    z = check_zeta(zeta)
    s, c = math.sin(z), math.cos(z)
    p1 = (1.0 + 2.0 * SQRT3 * s + 2.0 * c) / 3.0
    p2 = (1.0 - 2.0 * SQRT3 * s + 2.0 * c) / 3.0
    p3 = (1.0 - 4.0 * c) / 3.0
    return KernelSpectrum((p1, p2, p3))


def kernel_from_spectrum(values: Sequence[float], n: int) -> KernelSpectrum:
    """Validate an externally supplied kernel spectrum of dimension n."""
    vals = tuple(float(v) for v in values)
    if n < 2 or len(vals) != n:
        raise DimensionMismatch(f"expected {n} values, got {len(vals)}")
    return KernelSpectrum(vals)


def random_kernel(n: int, seed: int) -> KernelSpectrum:
    """Random kernel spectrum of dimension n, reproducible per seed.

    Draws a uniformly random unit vector u in the zero-sum subspace and
    returns 1/n + sqrt(n - 1/n) u, which satisfies both trace conditions by
    construction. The counter-based Philox generator keeps parallel calls
    with distinct seeds independent.
    """
    if n < 2:
        raise DimensionMismatch("kernel dimension must be at least 2")
    rng = np.random.Generator(np.random.Philox(seed))
    while True:
        g = rng.standard_normal(n)
        g -= g.mean()
        norm = float(np.linalg.norm(g))
        if norm > 1e-12:
            break
    radius = math.sqrt(n - 1.0 / n)
    return KernelSpectrum(tuple(1.0 / n + radius * float(v) / norm for v in g))


def zeta_from_kernel(kernel: KernelSpectrum) -> float:
    """Moduli angle of a qutrit kernel spectrum.

    Inverts :func:`qutrit_kernel` through sin z = sqrt(3) (pi1 - pi2) / 4
    and cos z = (1 - 3 pi3) / 4; every valid three-dimensional kernel
    spectrum belongs to the one-parameter family.
    """
    if kernel.n != 3:
        raise DimensionMismatch("the moduli angle is defined for qutrit kernels")
    p1, p2, p3 = kernel.values
    s = SQRT3 * (p1 - p2) / 4.0
    c = (1.0 - 3.0 * p3) / 4.0
    return check_zeta(math.atan2(s, c))
