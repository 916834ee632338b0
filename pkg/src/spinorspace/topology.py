"""Topology of the covariant space: the regular-sector projection, sphere
constraints, and winding numbers of closed paths in the (sigma, omega) plane.

The quadratic identity J.J = sigma^2 + omega^2 keeps regular covariant
points away from the plane origin, so a closed path of regular states has a
well-defined integer count of encirclements.  Winding is computed from
summed signed angle increments, which is exact for polylines; the 1-form
(sigma d omega - omega d sigma) / (sigma^2 + omega^2) integrates to the same
number and is kept as a quadrature cross-check in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .bilinears import BilinearSet
from .fierz import fpk_residuals

__all__ = [
    "BilinearPoint",
    "WindingReport",
    "project_regular",
    "winding_number",
    "winding_report",
    "regular_sphere_check",
    "fpk_membership",
]

# a covariant-space point carries the same data as a covariant set
BilinearPoint = BilinearSet

MAX_SEGMENT_ANGLE = np.pi / 2
ROUNDING_RESIDUE_LIMIT = 0.01


def project_regular(p: BilinearPoint) -> BilinearPoint:
    """Zero K and S, keeping (sigma, J, omega); idempotent."""
    return replace(p, K=np.zeros(4), S=np.zeros(6))


@dataclass(frozen=True)
class WindingReport:
    winding: int
    angle_sum: float
    residue: float

    def as_dict(self) -> dict:
        return {
            "winding": self.winding,
            "angle_sum": self.angle_sum,
            "residue": self.residue,
        }


def _validate_path(path) -> np.ndarray:
    pts = np.asarray(path, dtype=float)
    if pts.ndim != 2 or pts.shape[1] != 2 or pts.shape[0] < 3:
        raise ValueError("path must be a list of at least 3 (sigma, omega) pairs")
    if not np.allclose(pts[0], pts[-1], atol=0.0):
        raise ValueError("path must be closed: first and last vertex must coincide")
    radii = np.hypot(pts[:, 0], pts[:, 1])
    if np.any(radii == 0.0):
        raise ValueError("path touches the excluded origin of the (sigma, omega) plane")
    return pts


def winding_report(path) -> WindingReport:
    """Winding number of a closed polyline around the plane origin.

    Per-segment angle increments must stay below pi/2; a coarser path risks
    a silent miscount (and a segment through the origin shows up as an
    increment of pi), so both cases raise.
    """
    pts = _validate_path(path)
    angles = np.arctan2(pts[:, 1], pts[:, 0])
    increments = np.diff(angles)
    increments = (increments + np.pi) % (2.0 * np.pi) - np.pi
    if np.any(np.abs(increments) >= MAX_SEGMENT_ANGLE):
        raise ValueError(
            "path too coarse: a segment turns by pi/2 or more around the origin "
            "(or passes through it); refine the path"
        )
    total = float(np.sum(increments))
    turns = total / (2.0 * np.pi)
    nearest = int(np.rint(turns))
    residue = float(abs(turns - nearest))
    if residue >= ROUNDING_RESIDUE_LIMIT:
        raise ValueError(
            f"angle sum is {residue:.4f} turns away from an integer; path too coarse"
        )
    return WindingReport(nearest, total, residue)


def winding_number(path) -> int:
    return winding_report(path).winding


def regular_sphere_check(psi, tol: float = 1e-8) -> float:
    """Deviation |J.J + omega^2 - 1| of a Euclidean-normalized spinor.

    The input must satisfy sigma = 1 (i.e. unit norm); anything else raises
    with a normalization hint.
    """
    from .bilinears import euclidean_components_closed_form

    sigma, omega, j = euclidean_components_closed_form(psi)
    if abs(sigma - 1.0) > tol:
        raise ValueError(
            f"sigma = {sigma:.6g}; normalize the spinor to unit norm first"
        )
    return float(abs(float(j @ j) + omega ** 2 - 1.0))


def fpk_membership(p: BilinearPoint, tol: float = 1e-8) -> bool:
    """Whether the point satisfies the quadratic covariant identities (the
    membership gate of the physical sector).  The all-zero point passes as a
    degenerate member."""
    scale = p.component_norm()
    if scale == 0.0:
        return True
    return fpk_residuals(p).max_abs() <= tol * scale ** 2
