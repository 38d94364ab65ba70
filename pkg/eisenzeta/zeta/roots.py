"""
Numerical roots of zeta polynomials and the RHA check

Roots are found with the Aberth-Ehrlich simultaneous iteration on the monic
polynomial in z = sqrt(q) T, whose roots lie on the unit circle when RHA
holds. The start points are a fixed perturbed circle, so reports are
reproducible bit for bit.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import List

import numpy as np

from eisenzeta.errors import RootFindingDivergedError
from eisenzeta.poly.univariate import UniPoly

logger = logging.getLogger("RootFinder")

ROOT_TOL = 1e-12
MAX_ITERATIONS = 10_000
# angular offset of the start points, keeps them off real-axis symmetries
START_OFFSET = 0.4


@dataclass
class RootReport:
    """
    Roots of a zeta polynomial measured against the critical circle

    Attributes:
        roots: Complex roots in T, sorted by argument
        radii: |root| for each root
        target_radius: 1/sqrt(q)
        max_radius_error: max | |root| - 1/sqrt(q) |, 0 for constant P
        tol: Tolerance the report was judged with
        passed: Every radius error is below tol
        iterations: Aberth iterations used
    """

    roots: List[complex]
    radii: List[float]
    target_radius: float
    max_radius_error: float
    tol: float
    passed: bool
    iterations: int = 0
    angles: List[float] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "roots": [[z.real, z.imag] for z in self.roots],
            "polar": [[r, a] for r, a in zip(self.radii, self.angles)],
            "target_radius": self.target_radius,
            "max_radius_error": self.max_radius_error,
            "tol": self.tol,
            "passed": self.passed,
        }


def _residuals_small(coeffs: np.ndarray, z: np.ndarray, tol: float) -> bool:
    """|P(z)| <= tol * sum |p_k| |z|^k at every approximation"""

    scale = np.polyval(np.abs(coeffs), np.abs(z))
    return bool(np.all(np.abs(np.polyval(coeffs, z)) <= tol * scale))


def _aberth(coeffs: np.ndarray, tol: float, max_iterations: int):
    """Aberth iteration on a monic polynomial, coefficients highest first"""

    degree = len(coeffs) - 1
    derivative = np.polyder(coeffs)

    radius = abs(coeffs[-1]) ** (1.0 / degree)
    k = np.arange(degree)
    z = radius * np.exp(1j * (2 * np.pi * k / degree + START_OFFSET / degree))

    for iteration in range(1, max_iterations + 1):
        values = np.polyval(coeffs, z)
        slopes = np.polyval(derivative, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            newton = values / slopes
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            repulsion = 1.0 / diff
            np.fill_diagonal(repulsion, 0.0)
            step = newton / (1.0 - newton * repulsion.sum(axis=1))
        step = np.where(np.isfinite(step), step, 0.0)
        z = z - step
        if np.max(np.abs(step)) <= tol * max(1.0, np.max(np.abs(z))) and _residuals_small(coeffs, z, tol):
            return z, iteration
    raise RootFindingDivergedError(
        f"Aberth iteration did not converge in {max_iterations} iterations"
    )


def find_roots(
    P: UniPoly, q, tol: float = ROOT_TOL, max_iterations: int = MAX_ITERATIONS
):
    """
    All complex roots of P(T).

    Args:
        P: Nonzero polynomial
        q: Rescaling parameter (any positive rational)
        tol: Relative step size at which the iteration stops
        max_iterations: Iteration cap

    Returns:
        tuple[list[complex], int]: Roots sorted by argument, iterations used

    Raises:
        RootFindingDivergedError: If the iteration cap is reached
    """

    if P.is_zero():
        raise ValueError("The zero polynomial has no well-defined roots")

    zero_roots = next(k for k, c in enumerate(P.coeffs) if c)
    trimmed = P.coeffs[zero_roots:]
    degree = len(trimmed) - 1
    roots: List[complex] = [0j] * zero_roots
    iterations = 0

    if degree > 0:
        scale = math.sqrt(float(q))
        # p_k T^k = p_k scale^-k z^k with z = scale * T
        rescaled = np.array(
            [float(c) / scale**k for k, c in enumerate(trimmed)][::-1], dtype=complex
        )
        rescaled = rescaled / rescaled[0]
        z, iterations = _aberth(rescaled, tol, max_iterations)
        roots.extend(complex(root) / scale for root in z)

    roots.sort(key=lambda t: (round(math.atan2(t.imag, t.real) % (2 * math.pi), 12), abs(t)))
    logger.debug(f"Found {len(roots)} roots of {P} in {iterations} iterations")
    return roots, iterations


def rha_check(P: UniPoly, q, tol: float) -> RootReport:
    """
    Check that every root of P has absolute value 1/sqrt(q).

    Args:
        P: Zeta polynomial
        q: Parameter
        tol: Admissible radius error

    Returns:
        RootReport: Passed iff every | |root| - 1/sqrt(q) | < tol

    Raises:
        RootFindingDivergedError: If the root finder does not converge
    """

    if tol <= 0:
        raise ValueError(f"Tolerance must be positive, got {tol}")

    target = 1.0 / math.sqrt(float(q))
    roots, iterations = find_roots(P, q)
    radii = [abs(z) for z in roots]
    angles = [math.atan2(z.imag, z.real) % (2 * math.pi) for z in roots]
    errors = [abs(r - target) for r in radii]
    max_error = max(errors, default=0.0)
    return RootReport(
        roots=roots,
        radii=radii,
        target_radius=target,
        max_radius_error=max_error,
        tol=tol,
        passed=all(e < tol for e in errors),
        iterations=iterations,
        angles=angles,
    )
