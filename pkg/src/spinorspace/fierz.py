"""Quadratic identities among the covariants, the multivector aggregate, and
spinor reconstruction.

Every nonzero spinor packs its observables into the complex aggregate

    Z = sigma + J + i S + i K e0123 + omega e0123

whose matrix image equals the rank-one operator 4 psi psibar.  That single
fact drives everything here: the scalar identities, the idempotency
Z Z = 4 sigma Z (nilpotency when sigma = 0), the quarter-sandwich identity
family, and the inversion Z xi proportional to psi.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from . import conventions
from .bilinears import BilinearSet, bilinear_covariants, minkowski_dot, minkowski_square
from .clifford import (
    Multivector,
    Signature,
    basis_vector,
    grade_projection,
    left_mul_matrix,
    pseudoscalar,
    rep_matrix,
    right_mul_matrix,
    scalar,
)
from .spinor_forms import BIVECTOR_ORDER, ClassicalSpinor

__all__ = [
    "FpkResiduals",
    "SingularAggregateParams",
    "fpk_residuals",
    "aggregate",
    "euclidean_aggregate",
    "is_boomerang",
    "generalized_fpk_residuals",
    "build_singular_aggregate",
    "reconstruct",
    "default_probe_spinor",
    "vector_multivector",
    "bivector_multivector",
]


def _raise_vector(v: np.ndarray) -> np.ndarray:
    return np.array([v[0], -v[1], -v[2], -v[3]])


def _raise_bivector(s: np.ndarray) -> np.ndarray:
    # one spatial index for the (0k) slots, two for the (jk) slots
    return np.array([-s[0], -s[1], -s[2], s[3], s[4], s[5]])


def vector_multivector(components, signature: Signature = Signature.MINKOWSKI) -> Multivector:
    """Grade-1 multivector with index-down components; raising is applied for
    the time-minus signature."""
    v = np.asarray(components, dtype=np.complex128)
    if signature is Signature.MINKOWSKI:
        v = _raise_vector(v)
    c = np.zeros(16, dtype=np.complex128)
    c[1:5] = v
    return Multivector(signature, c)


def bivector_multivector(components, signature: Signature = Signature.MINKOWSKI) -> Multivector:
    """Grade-2 multivector with index-down components in (01, 02, 03, 12, 13, 23) order."""
    s = np.asarray(components, dtype=np.complex128)
    if signature is Signature.MINKOWSKI:
        s = _raise_bivector(s)
    c = np.zeros(16, dtype=np.complex128)
    c[5:11] = s
    return Multivector(signature, c)


@dataclass(frozen=True)
class FpkResiduals:
    """Deviations from the four quadratic covariant identities.

    r1 = J.J - sigma^2 - omega^2, r2 = K.K + J.J, r3 = J.K, and r4 is the
    coefficient max-norm of J wedge K + (omega + sigma e0123) S.
    """

    r1: float
    r2: float
    r3: float
    r4: float

    def max_abs(self) -> float:
        return max(abs(self.r1), abs(self.r2), abs(self.r3), abs(self.r4))

    def passes(self, tol: float) -> bool:
        return self.max_abs() <= tol

    def as_dict(self) -> dict:
        return {"r1": self.r1, "r2": self.r2, "r3": self.r3, "r4": self.r4}


def fpk_residuals(b: BilinearSet) -> FpkResiduals:
    if b.signature is not Signature.MINKOWSKI:
        raise ValueError("covariant identities here use the time-minus contraction")
    j2 = minkowski_square(b.J)
    k2 = minkowski_square(b.K)
    r1 = j2 - b.sigma ** 2 - b.omega ** 2
    r2 = k2 + j2
    r3 = minkowski_dot(b.J, b.K)
    jmv = vector_multivector(b.J)
    kmv = vector_multivector(b.K)
    smv = bivector_multivector(b.S)
    wedge = grade_projection(jmv * kmv, 2)
    resid = wedge + (scalar(b.omega) + b.sigma * pseudoscalar()) * smv
    return FpkResiduals(float(r1), float(r2), float(r3), resid.max_abs())


def aggregate(b: BilinearSet) -> Multivector:
    """The complex multivector sigma + J + iS + iK e0123 + omega e0123."""
    if b.signature is not Signature.MINKOWSKI:
        raise ValueError("the aggregate is assembled in the time-minus signature")
    e5 = pseudoscalar()
    return (
        scalar(b.sigma)
        + vector_multivector(b.J)
        + 1j * bivector_multivector(b.S)
        + 1j * (vector_multivector(b.K) * e5)
        + b.omega * e5
    )


def euclidean_aggregate(b: BilinearSet) -> Multivector:
    """Euclidean counterpart sigma + J + iS + iK e0123 - omega e0123; the
    volume term is oriented opposite to the stored omega (the component
    formulas fix omega through the reversed volume element)."""
    if b.signature is not Signature.EUCLIDEAN:
        raise ValueError("expected Euclidean covariants")
    e5 = pseudoscalar(Signature.EUCLIDEAN)
    return (
        scalar(b.sigma, Signature.EUCLIDEAN)
        + vector_multivector(b.J, Signature.EUCLIDEAN)
        + 1j * bivector_multivector(b.S, Signature.EUCLIDEAN)
        + 1j * (vector_multivector(b.K, Signature.EUCLIDEAN) * e5)
        - b.omega * e5
    )


def is_boomerang(z: Multivector, sigma: float, tol: float = 1e-9) -> bool:
    """True when Z Z = 4 sigma Z within tol relative to |Z|^2."""
    n2 = z.norm() ** 2
    if n2 == 0.0:
        return True
    resid = z * z - (4.0 * sigma) * z
    return resid.max_abs() <= tol * n2


@functools.lru_cache(maxsize=None)
def _sandwich_probes() -> tuple[np.ndarray, ...]:
    """Coefficient vectors of the probe elements 1; g_mu; i [g_mu, g_nu];
    i g0123 g_mu; -g0123, grouped per identity line."""
    e5 = pseudoscalar()
    unit = scalar(1.0).coeffs
    vectors = np.stack([basis_vector(mu).coeffs for mu in range(4)])
    tensors = np.stack([
        (1j * (basis_vector(mu) * basis_vector(nu) - basis_vector(nu) * basis_vector(mu))).coeffs
        for mu, nu in BIVECTOR_ORDER
    ])
    axials = np.stack([(1j * (e5 * basis_vector(mu))).coeffs for mu in range(4)])
    volume = (-1 * e5).coeffs
    return unit, vectors, tensors, axials, volume


def generalized_fpk_residuals(z: Multivector, b: BilinearSet) -> np.ndarray:
    """Five residual max-norms for the quarter-sandwich identity family:

        (1/4) Z Z                    = sigma   Z
        (1/4) Z g_mu Z               = J_mu    Z
        (1/4) Z i [g_mu, g_nu] Z     = 2 S_munu Z
        (1/4) Z i g0123 g_mu Z       = K_mu    Z
       -(1/4) Z g0123 Z              = omega   Z

    The factor 2 on the tensor line is the calibrated companion of the S
    normalization; the remaining four lines carry no free constant.
    """
    kappa = conventions.GENERALIZED_S_FACTOR
    # (1/4) Z A Z is linear in the probe A: one sandwich matrix serves all
    sandwich = 0.25 * (left_mul_matrix(z) @ right_mul_matrix(z))
    unit, vectors, tensors, axials, volume = _sandwich_probes()
    zc = z.coeffs

    def resid(probe: np.ndarray, coefficient: float) -> float:
        return float(np.max(np.abs(sandwich @ probe - coefficient * zc)))

    res = np.zeros(5)
    res[0] = resid(unit, b.sigma)
    res[1] = max(resid(vectors[mu], b.J[mu]) for mu in range(4))
    res[2] = max(resid(tensors[i], kappa * b.S[i]) for i in range(6))
    res[3] = max(resid(axials[mu], b.K[mu]) for mu in range(4))
    res[4] = resid(volume, b.omega)
    return res


@dataclass(frozen=True)
class SingularAggregateParams:
    """Data of a singular aggregate J (1 + i s + i h e0123): a lightlike
    current J, a space-like s orthogonal to J, and a real helicity scalar h.
    Components are stored index-down."""

    J: np.ndarray
    s: np.ndarray
    h: float

    def __post_init__(self) -> None:
        j = np.array(self.J, dtype=float)
        s = np.array(self.s, dtype=float)
        if j.shape != (4,) or s.shape != (4,):
            raise ValueError("J and s must have 4 components")
        j.flags.writeable = False
        s.flags.writeable = False
        object.__setattr__(self, "J", j)
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "h", float(self.h))


def build_singular_aggregate(p: SingularAggregateParams, tol: float = 1e-9) -> Multivector:
    """Assemble J (1 + i s + i h e0123) after validating the parameter
    invariants; the result squares to zero."""
    j_scale = float(np.sum(p.J ** 2))
    s_scale = float(np.sum(p.s ** 2))
    if j_scale == 0.0:
        raise ValueError("J must be nonzero")
    if abs(minkowski_square(p.J)) > tol * j_scale:
        raise ValueError("J must be lightlike: J.J = 0")
    if s_scale == 0.0 or minkowski_square(p.s) >= -tol * s_scale:
        raise ValueError("s must be space-like: s.s < 0")
    if abs(minkowski_dot(p.J, p.s)) > tol * np.sqrt(j_scale * s_scale):
        raise ValueError("s must be orthogonal to J: J.s = 0")
    jmv = vector_multivector(p.J)
    smv = vector_multivector(p.s)
    factor = scalar(1.0) + 1j * smv + (1j * p.h) * pseudoscalar()
    return jmv * factor


def default_probe_spinor(z: Multivector, rep) -> ClassicalSpinor:
    """Deterministic probe: the canonical basis spinor maximizing the
    reconstruction kernel |xi^dag g0 Z xi|."""
    zm = rep_matrix(z, rep)
    g0 = rep.gammas[0]
    best, best_val = 0, -1.0
    for i in range(4):
        xi = np.zeros(4, dtype=np.complex128)
        xi[i] = 1.0
        val = abs(complex(xi.conj() @ g0 @ zm @ xi))
        if val > best_val:
            best, best_val = i, val
    comp = np.zeros(4, dtype=np.complex128)
    comp[best] = 1.0
    return ClassicalSpinor(comp, rep)


def reconstruct(
    z: Multivector,
    xi: ClassicalSpinor,
    psi_ref: ClassicalSpinor | None = None,
    tol: float = 1e-12,
) -> ClassicalSpinor:
    """Recover a spinor from its aggregate: psi' = exp(-i theta) Z xi / (2 sqrt(xi^dag g0 Z xi)).

    Without a reference the phase is set to zero and the result is the
    original spinor up to a unit phase.  With psi_ref supplied the phase is
    solved so the recovery is exact.
    """
    zm = rep_matrix(z, xi.rep)
    g0 = xi.rep.gammas[0]
    zxi = zm @ xi.components
    kernel = complex(xi.components.conj() @ g0 @ zxi)
    scale = float(np.max(np.abs(zm))) * float(np.vdot(xi.components, xi.components).real)
    if abs(kernel) <= max(tol * scale, 1e-300):
        raise ValueError(
            "degenerate probe: xi^dag g0 Z xi vanishes; choose a different test spinor"
        )
    psi = zxi / (2.0 * np.sqrt(complex(kernel)))
    if psi_ref is not None:
        ref = psi_ref.to_rep(xi.rep).components
        overlap = complex(np.vdot(psi, ref))
        if abs(overlap) <= tol * max(np.linalg.norm(psi) * np.linalg.norm(ref), 1e-300):
            raise ValueError("reference spinor is orthogonal to the reconstruction ray")
        psi = psi * (overlap / abs(overlap))
    return ClassicalSpinor(psi, xi.rep)


def spinor_aggregate(psi: ClassicalSpinor) -> Multivector:
    """Aggregate of a spinor's own covariants."""
    return aggregate(bilinear_covariants(psi))


def euclidean_fierz_residuals(b: BilinearSet) -> np.ndarray:
    """Residuals of the four Euclidean identities:

        J.J = sigma^2 - omega^2
        J.J = K.K
        J.K = 0
        J wedge K = (omega + sigma e0123) S

    contractions Euclidean throughout; the wedge identity mirrors the
    time-minus one with the opposite overall sign.
    """
    if b.signature is not Signature.EUCLIDEAN:
        raise ValueError("expected Euclidean covariants")
    j2 = float(b.J @ b.J)
    k2 = float(b.K @ b.K)
    e5 = pseudoscalar(Signature.EUCLIDEAN)
    jmv = vector_multivector(b.J, Signature.EUCLIDEAN)
    kmv = vector_multivector(b.K, Signature.EUCLIDEAN)
    smv = bivector_multivector(b.S, Signature.EUCLIDEAN)
    wedge = grade_projection(jmv * kmv, 2)
    resid = wedge - (scalar(b.omega, Signature.EUCLIDEAN) + b.sigma * e5) * smv
    return np.array([
        j2 - b.sigma ** 2 + b.omega ** 2,
        j2 - k2,
        float(b.J @ b.K),
        resid.max_abs(),
    ])
