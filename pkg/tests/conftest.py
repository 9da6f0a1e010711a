"""Shared sampling helpers for the test suite."""

import math

import numpy as np

from ncdist import QutritChart, Spectrum, haar_unitary

SQRT3 = math.sqrt(3.0)
ZETA_MAX = math.pi / 3.0


def random_chamber_chart(rng: np.random.Generator) -> QutritChart:
    """Uniform point of the chamber triangle O=(0,0), A=(0,1/2), B=(s3/2,1/2)."""
    u, v = rng.random(), rng.random()
    root = math.sqrt(u)
    return QutritChart(SQRT3 / 2.0 * root * v, 0.5 * root)


def random_spectrum(rng: np.random.Generator, n: int) -> Spectrum:
    """Uniform (Dirichlet) point of the probability simplex, sorted."""
    return Spectrum(tuple(float(x) for x in rng.dirichlet(np.ones(n))))


def random_density_matrix(rng: np.random.Generator, n: int) -> np.ndarray:
    """Random mixed state: uniform spectrum conjugated by a Haar unitary."""
    r = random_spectrum(rng, n)
    u = haar_unitary(n, rng)
    return (u * r.as_array()) @ u.conj().T
