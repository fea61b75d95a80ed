"""Independent eigenvalue ground truth for small matrices.

The route is deliberately disjoint from the QR iteration: characteristic
polynomial coefficients come from the trace recurrence
M_1 = A, c_{n-1} = -tr(M_1), M_{k+1} = A (M_k + c_{n-k} I),
c_{n-k-1} = -tr(M_{k+1}) / (k+1), and the roots from simultaneous
fixed-point iteration. Both stages are exponentially ill-conditioned in the
degree, so the dimension is capped at ORACLE_MAX_DIM; above that, verify
with aggregate invariants (trace / second moment) instead.
"""

import itertools
from dataclasses import dataclass

import numpy as np

from .core import require_square

__all__ = [
    "ORACLE_MAX_DIM",
    "PolySpec",
    "RootConvergenceError",
    "char_poly",
    "poly_roots",
    "eigenvalues_oracle",
    "match_eigenvalues",
]

ORACLE_MAX_DIM = 12

_ROOT_TOL = 1e-13
_ROOT_MAX_SWEEPS = 1000


class RootConvergenceError(ArithmeticError):
    """The root iteration failed to settle within the sweep cap."""


@dataclass(frozen=True)
class PolySpec:
    """Monic polynomial p(x) = x^n + c_{n-1} x^{n-1} + ... + c_0.

    ``coefficients`` stores (c_0, ..., c_{n-1}); the leading 1 is implicit.
    """

    coefficients: tuple[complex, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients)

    def __call__(self, x: complex) -> complex:
        value = 1.0 + 0.0j
        for c in reversed(self.coefficients):
            value = value * x + c
        return value


def char_poly(a) -> PolySpec:
    """Monic characteristic polynomial of a square matrix, n <= ORACLE_MAX_DIM."""
    m = require_square(a)
    n = m.shape[0]
    if n > ORACLE_MAX_DIM:
        raise ValueError(
            f"characteristic-polynomial oracle is limited to n <= {ORACLE_MAX_DIM}, got {n}"
        )
    coeffs = np.zeros(n, dtype=np.complex128)
    work = m.copy()
    coeffs[n - 1] = -np.trace(work)
    eye = np.eye(n, dtype=np.complex128)
    for k in range(1, n):
        work = m @ (work + coeffs[n - k] * eye)
        coeffs[n - k - 1] = -np.trace(work) / (k + 1)
    return PolySpec(tuple(complex(c) for c in coeffs))


def poly_roots(p: PolySpec) -> list[complex]:
    """All roots of a monic polynomial by simultaneous iteration.

    Starts every root guess at (0.4 + 0.9i)^k so the guesses are distinct
    and non-real; a sweep updates each root in place by the standard
    correction p(z_i) / prod(z_i - z_j). Converged when the largest
    per-root update falls below 1e-13.
    """
    n = p.degree
    if n < 1:
        raise ValueError("polynomial degree must be >= 1")
    if n == 1:
        return [-p.coefficients[0]]
    roots = [(0.4 + 0.9j) ** k for k in range(n)]
    for _ in range(_ROOT_MAX_SWEEPS):
        max_step = 0.0
        for i in range(n):
            z = roots[i]
            denom = 1.0 + 0.0j
            for j in range(n):
                if j != i:
                    denom *= z - roots[j]
            if denom == 0.0:
                # Collided guesses: nudge apart and retry next sweep.
                roots[i] = z + 1e-12 * (1.0 + abs(z))
                max_step = max(max_step, abs(roots[i] - z))
                continue
            step = p(z) / denom
            roots[i] = z - step
            max_step = max(max_step, abs(step))
        if max_step < _ROOT_TOL:
            return roots
    raise RootConvergenceError(
        f"root iteration did not converge within {_ROOT_MAX_SWEEPS} sweeps"
    )


def eigenvalues_oracle(a) -> list[complex]:
    """Ground-truth eigenvalues via the polynomial route (n <= ORACLE_MAX_DIM)."""
    return poly_roots(char_poly(a))


def match_eigenvalues(computed, reference) -> float:
    """Distance between two eigenvalue multisets under the best pairing.

    For up to 8 values this is the exact minimum over all assignments of
    the maximum pairwise distance (brute force over permutations, pruned).
    Beyond 8 a greedy nearest-neighbor pairing with removal is used, which
    upper-bounds the optimum.
    """
    left = [complex(z) for z in computed]
    right = [complex(z) for z in reference]
    if len(left) != len(right):
        raise ValueError(
            f"cardinality mismatch: {len(left)} vs {len(right)} eigenvalues"
        )
    n = len(left)
    if n == 0:
        return 0.0
    dist = np.abs(np.subtract.outer(np.array(left), np.array(right)))
    if n <= 8:
        best = float("inf")
        for perm in itertools.permutations(range(n)):
            worst = 0.0
            for i, j in enumerate(perm):
                d = dist[i, j]
                if d > worst:
                    worst = d
                    if worst >= best:
                        break
            if worst < best:
                best = worst
        return float(best)
    order = sorted(range(n), key=lambda i: (left[i].real, left[i].imag))
    remaining = list(range(n))
    worst = 0.0
    for i in order:
        k = min(range(len(remaining)), key=lambda t: dist[i, remaining[t]])
        worst = max(worst, float(dist[i, remaining.pop(k)]))
    return worst
