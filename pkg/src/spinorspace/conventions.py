"""Frozen normalization constants for the bilinear covariants.

Conventions for the antisymmetric tensor bilinear drift between sources by
factors of 2 and i.  Rather than trusting any single printed form, the
constants below were fixed by a brute-force calibration oracle over random
spinors (scripts/calibrate_conventions.py): the time-minus scale is the
unique candidate for which

    J wedge K = -(omega + sigma e0123) S       (tensor identity)
    Z Z       = 4 sigma Z                      (aggregate idempotency)
    rep(Z)    = 4 psi psibar                   (rank-one matrix oracle)

all hold identically, and the Euclidean scale is the unique candidate for
which the mirrored identity J wedge K = +(omega + sigma e0123) S holds
together with the Euclidean rank-one expansion.  The test suite re-derives
every value.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class BilinearConventions:
    # S_{mu nu} = s_scale * Im(psibar [g_mu, g_nu] psi), time-minus signature
    s_scale: float
    # quarter-sandwich identity (1/4) Z i[g_mu, g_nu] Z = s_factor * S_{mu nu} Z
    generalized_s_factor: float
    # S_{mu nu} = s_scale_euclidean * Im(psi^dag [e_mu, e_nu] psi), Euclidean
    s_scale_euclidean: float


# values reproduced by scripts/calibrate_conventions.py and pinned in tests
CONVENTIONS = BilinearConventions(
    s_scale=-0.5,
    generalized_s_factor=2.0,
    s_scale_euclidean=-0.5,
)

S_SCALE = CONVENTIONS.s_scale
GENERALIZED_S_FACTOR = CONVENTIONS.generalized_s_factor
S_SCALE_EUCLIDEAN = CONVENTIONS.s_scale_euclidean
