"""Seeded random matrix ensembles for benchmarking.

Reproducibility contract: matrix ``i`` of an ensemble is drawn from a
PCG64 stream derived from ``SeedSequence(seed, spawn_key=(i,))``, so the
same spec yields bit-identical matrices on any platform and the ensemble
can be regenerated one matrix at a time.
"""

import enum
from dataclasses import dataclass

import numpy as np

__all__ = ["Distribution", "EnsembleSpec", "generate_ensemble", "generate_matrix"]


class Distribution(enum.Enum):
    STANDARD_NORMAL_REAL = "normal"
    UNIFORM_COMPLEX = "complex"


@dataclass(frozen=True)
class EnsembleSpec:
    dimension: int
    count: int
    seed: int = 0
    distribution: Distribution = Distribution.STANDARD_NORMAL_REAL

    def __post_init__(self):
        if self.dimension < 2:
            raise ValueError("dimension must be >= 2")
        if self.count < 1:
            raise ValueError("count must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


def generate_matrix(spec: EnsembleSpec, index: int) -> np.ndarray:
    """Draw matrix ``index`` of the ensemble described by ``spec``."""
    rng = np.random.Generator(
        np.random.PCG64(np.random.SeedSequence(spec.seed, spawn_key=(index,)))
    )
    n = spec.dimension
    if spec.distribution is Distribution.STANDARD_NORMAL_REAL:
        return rng.standard_normal((n, n)).astype(np.complex128)
    real = rng.uniform(-1.0, 1.0, (n, n))
    imag = rng.uniform(-1.0, 1.0, (n, n))
    return real + 1j * imag


def generate_ensemble(spec: EnsembleSpec) -> list[np.ndarray]:
    """All ``spec.count`` matrices, in index order."""
    return [generate_matrix(spec, i) for i in range(spec.count)]
