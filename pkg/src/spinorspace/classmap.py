"""The singular linear map sending regular spinors to flag-dipole spinors.

Nine free complex parameters determine a 4x4 matrix whose second row is
proportional to the first and whose third row is proportional to the fourth,
with the cross ratio conjugated and negated:

    row2 = (m22 / m12) row1,        row3 = -(m22 / m12)^* row4.

This structure makes M^dag g0 M and M^dag g1 g2 g3 M vanish identically in
the chiral representation, so every image spinor has sigma = omega = 0, and
it forces det M = 0, so no inverse map exists.  Generic images carry the
full flag-dipole pattern (J, K, S all nonzero).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bilinears import bilinear_covariants
from .clifford import WEYL
from .spinor_forms import ClassicalSpinor

__all__ = [
    "MappingParams",
    "MappingMatrix",
    "MappedSpinor",
    "build_M",
    "constraint_residuals",
    "map_to_class4",
    "hermitian_constrain",
    "no_inverse_witness",
]

PARAM_NAMES = ("m11", "m12", "m13", "m14", "m22", "m41", "m42", "m43", "m44")


@dataclass(frozen=True)
class MappingParams:
    """Free entries of the mapping matrix; m12 must be nonzero since the
    dependent rows divide by it."""

    m11: complex
    m12: complex
    m13: complex
    m14: complex
    m22: complex
    m41: complex
    m42: complex
    m43: complex
    m44: complex

    def __post_init__(self) -> None:
        for name in PARAM_NAMES:
            object.__setattr__(self, name, complex(getattr(self, name)))
        if self.m12 == 0:
            raise ValueError("m12 must be nonzero")

    def as_dict(self) -> dict:
        return {name: getattr(self, name) for name in PARAM_NAMES}


@dataclass(frozen=True)
class MappingMatrix:
    matrix: np.ndarray
    params: MappingParams

    def __post_init__(self) -> None:
        m = np.array(self.matrix, dtype=np.complex128)
        if m.shape != (4, 4):
            raise ValueError("mapping matrix must be 4x4")
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    def frobenius(self) -> float:
        return float(np.linalg.norm(self.matrix))


def build_M(p: MappingParams) -> MappingMatrix:
    """Assemble the matrix from its nine free entries."""
    ratio = p.m22 / p.m12
    row1 = np.array([p.m11, p.m12, p.m13, p.m14], dtype=np.complex128)
    row4 = np.array([p.m41, p.m42, p.m43, p.m44], dtype=np.complex128)
    m = np.vstack([row1, ratio * row1, -np.conj(ratio) * row4, row4])
    return MappingMatrix(m, p)


def constraint_residuals(m: np.ndarray) -> tuple[float, float]:
    """Max-norms of M^dag g0 M and M^dag g1 g2 g3 M in the chiral
    representation; both vanish for matrices with the dependent-row
    structure."""
    mat = np.asarray(m, dtype=np.complex128)
    g = WEYL.gammas
    g123 = g[1] @ g[2] @ g[3]
    r0 = float(np.max(np.abs(mat.conj().T @ g[0] @ mat)))
    r123 = float(np.max(np.abs(mat.conj().T @ g123 @ mat)))
    return r0, r123


def no_inverse_witness(m: MappingMatrix | np.ndarray) -> float:
    """|det M|; vanishes for every assembled mapping matrix."""
    mat = m.matrix if isinstance(m, MappingMatrix) else np.asarray(m, dtype=np.complex128)
    return float(abs(np.linalg.det(mat)))


@dataclass(frozen=True)
class MappedSpinor:
    """Image spinor plus a degeneracy report: covariants that fell below the
    classification threshold even though a generic image keeps them."""

    spinor: ClassicalSpinor
    degenerate: tuple[str, ...]


def map_to_class4(
    m: MappingMatrix,
    phi: ClassicalSpinor,
    tol: float = 1e-8,
) -> MappedSpinor:
    """Apply the mapping to a regular spinor.

    The input must classify regular (class 1, 2, or 3) in the chiral
    representation.  The image always has sigma = omega = 0; K, S, or J
    falling below threshold is reported rather than silently accepted, since
    the flag-dipole outcome is generic but not universal.
    """
    from .lounesto import classify

    if phi.rep is not WEYL:
        raise ValueError("the mapping is written in the chiral representation")
    report = classify(phi, tol)
    if not report.lounesto_class.is_regular:
        raise ValueError(
            f"input must be a regular spinor (class 1-3), got {report.lounesto_class.value}"
        )
    image = m.matrix @ phi.components
    norm2 = float(np.vdot(image, image).real)
    if norm2 <= (tol * phi.norm()) ** 2:
        raise ValueError(
            "image vanishes: phi lies in the kernel of the mapping (det M = 0 "
            "guarantees a nontrivial kernel)"
        )
    out = ClassicalSpinor(image, WEYL)
    b = bilinear_covariants(out)
    threshold = tol * norm2
    degenerate = tuple(
        name
        for name, value in (
            ("J", float(np.linalg.norm(b.J))),
            ("K", float(np.linalg.norm(b.K))),
            ("S", float(np.linalg.norm(b.S))),
        )
        if value <= threshold
    )
    return MappedSpinor(out, degenerate)


def hermitian_constrain(p: MappingParams, tol: float = 1e-12) -> MappingMatrix:
    """Build the mapping matrix from parameters obeying the self-adjointness
    relations: m11, m12, m22 real with m11 m22 = m12^2, m41 = m14^*,
    m13 = -m22 m14 / m12 = -m42^*, m43 real, and m44 = -m12 m43 / m22.

    Violated relations are reported together; the returned matrix satisfies
    M = M^dag to machine precision.
    """
    violations = []
    for name in ("m11", "m12", "m22"):
        value = getattr(p, name)
        if abs(value.imag) > tol * max(1.0, abs(value)):
            violations.append(f"{name} must be real")
    if abs(p.m11 * p.m22 - p.m12 ** 2) > tol * max(1.0, abs(p.m12) ** 2):
        violations.append("m11 m22 must equal m12^2")
    if abs(p.m41 - np.conj(p.m14)) > tol * max(1.0, abs(p.m14)):
        violations.append("m41 must equal conj(m14)")
    expected_m13 = -p.m22 * p.m14 / p.m12
    if abs(p.m13 - expected_m13) > tol * max(1.0, abs(expected_m13)):
        violations.append("m13 must equal -m22 m14 / m12")
    if abs(p.m42 + np.conj(p.m13)) > tol * max(1.0, abs(p.m13)):
        violations.append("m42 must equal -conj(m13)")
    if abs(p.m43.imag) > tol * max(1.0, abs(p.m43)):
        violations.append("m43 must be real")
    expected_m44 = -p.m12 * p.m43 / p.m22
    if abs(p.m44 - expected_m44) > tol * max(1.0, abs(expected_m44)):
        violations.append("m44 must equal -m12 m43 / m22")
    if violations:
        raise ValueError("self-adjointness relations violated: " + "; ".join(violations))
    m = build_M(p)
    herm = float(np.max(np.abs(m.matrix - m.matrix.conj().T)))
    if herm > 1e-12 * max(1.0, m.frobenius()):
        raise ValueError(f"assembled matrix is not self-adjoint (residual {herm:.3e})")
    return m


def random_hermitian_params(rng: np.random.Generator) -> MappingParams:
    """Draw parameters satisfying every self-adjointness relation."""
    m11 = rng.standard_normal()
    while abs(m11) < 0.2:
        m11 = rng.standard_normal()
    m12 = rng.standard_normal()
    while abs(m12) < 0.2:
        m12 = rng.standard_normal()
    m22 = m12 ** 2 / m11
    m14 = complex(rng.standard_normal(), rng.standard_normal())
    m41 = np.conj(m14)
    m13 = -m22 * m14 / m12
    m42 = -np.conj(m13)
    m43 = rng.standard_normal()
    m44 = -m12 * m43 / m22
    return MappingParams(m11, m12, m13, m14, m22, m41, m42, m43, m44)
