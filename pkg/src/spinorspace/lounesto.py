"""Lounesto classification of spinors by the zero pattern of their covariants,
plus seeded generators producing representatives of each class.

The six classes split on which of sigma, omega, K, S vanish (J never does for
a column spinor, since J_0 equals the squared norm).  Three extra labels
cover covariant sets with J = 0 that still satisfy the quadratic identities;
such sets cannot come from a nonzero column spinor, so they are reachable
only through raw covariant input.  Anything violating the identities or
matching no known pattern is reported as anomalous.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .bilinears import BilinearSet, bilinear_covariants
from .clifford import GammaRep, Signature, WEYL, rep_by_tag
from .fierz import fpk_residuals
from .spinor_forms import ClassicalSpinor

__all__ = [
    "LounestoClass",
    "ClassificationReport",
    "DEFAULT_TOL",
    "classify",
    "classify_bilinears",
    "generate",
    "rescale_class_invariance",
]

DEFAULT_TOL = 1e-8


class LounestoClass(enum.Enum):
    C1 = "1"
    C2 = "2"
    C3 = "3"
    C4 = "4"
    C5 = "5"
    C6 = "6"
    POLE = "pole"
    FLAG = "flag"
    FLAG_POLE_J0 = "flag-pole-j0"
    ANOMALOUS = "anomalous"

    @property
    def is_regular(self) -> bool:
        return self in (LounestoClass.C1, LounestoClass.C2, LounestoClass.C3)

    @property
    def is_singular(self) -> bool:
        return self in (LounestoClass.C4, LounestoClass.C5, LounestoClass.C6)


@dataclass(frozen=True)
class ClassificationReport:
    lounesto_class: LounestoClass
    bilinears: BilinearSet
    zero_flags: dict
    tol: float
    margin: float

    def as_dict(self) -> dict:
        d = {"class": self.lounesto_class.value}
        d.update(self.bilinears.as_dict())
        d["zero_flags"] = dict(self.zero_flags)
        d["tol"] = self.tol
        d["margin"] = self.margin
        return d


def _norms(b: BilinearSet) -> dict:
    return {
        "sigma": abs(b.sigma),
        "omega": abs(b.omega),
        "J": float(np.linalg.norm(b.J)),
        "K": float(np.linalg.norm(b.K)),
        "S": float(np.linalg.norm(b.S)),
    }


def _pattern_class(nonzero: dict) -> LounestoClass:
    if nonzero["J"]:
        if nonzero["sigma"] and nonzero["omega"]:
            return LounestoClass.C1
        if nonzero["sigma"]:
            return LounestoClass.C2
        if nonzero["omega"]:
            return LounestoClass.C3
        if nonzero["K"] and nonzero["S"]:
            return LounestoClass.C4
        if nonzero["S"]:
            return LounestoClass.C5
        if nonzero["K"]:
            return LounestoClass.C6
        return LounestoClass.ANOMALOUS
    # J = 0 sector: the scalars must vanish too, else the identities fail
    if nonzero["sigma"] or nonzero["omega"]:
        return LounestoClass.ANOMALOUS
    if nonzero["K"] and nonzero["S"]:
        return LounestoClass.FLAG_POLE_J0
    if nonzero["K"]:
        return LounestoClass.POLE
    if nonzero["S"]:
        return LounestoClass.FLAG
    return LounestoClass.ANOMALOUS


def _report(b: BilinearSet, scale: float, tol: float) -> ClassificationReport:
    threshold = tol * scale
    norms = _norms(b)
    nonzero = {key: value > threshold for key, value in norms.items()}
    cls = _pattern_class(nonzero)
    kept = [norms[key] / threshold for key, flag in nonzero.items() if flag]
    margin = float(min(kept)) if kept else 0.0
    zero_flags = {key: not flag for key, flag in nonzero.items()}
    return ClassificationReport(cls, b, zero_flags, tol, margin)


def classify(psi: ClassicalSpinor, tol: float = DEFAULT_TOL) -> ClassificationReport:
    """Classify a nonzero spinor; thresholds are relative to |psi|^2."""
    if psi.is_zero:
        raise ValueError("zero spinor cannot be classified")
    b = bilinear_covariants(psi)
    return _report(b, psi.norm() ** 2, tol)


def classify_bilinears(b: BilinearSet, tol: float = DEFAULT_TOL) -> LounestoClass:
    """Classify a raw covariant set.  Sets breaking the quadratic identities
    are anomalous regardless of their zero pattern."""
    if b.signature is not Signature.MINKOWSKI:
        raise ValueError("classification applies to time-minus covariants")
    scale = b.component_norm()
    if scale == 0.0:
        return LounestoClass.ANOMALOUS
    if fpk_residuals(b).max_abs() > tol * scale ** 2:
        return LounestoClass.ANOMALOUS
    return _report(b, scale, tol).lounesto_class


def rescale_class_invariance(psi: ClassicalSpinor, c: complex, tol: float = DEFAULT_TOL) -> bool:
    """Whether classify(c psi) agrees with classify(psi); true for every c != 0
    since all covariants scale by |c|^2 and thresholds are norm-relative."""
    if c == 0:
        raise ValueError("rescaling factor must be nonzero")
    if psi.is_zero:
        raise ValueError("zero spinor cannot be classified")
    scaled = ClassicalSpinor(c * psi.components, psi.rep)
    return classify(scaled, tol).lounesto_class is classify(psi, tol).lounesto_class


# -- seeded generators --------------------------------------------------------

_GENERATABLE = {
    LounestoClass.C1, LounestoClass.C2, LounestoClass.C3,
    LounestoClass.C4, LounestoClass.C5, LounestoClass.C6,
}

_MAX_ATTEMPTS = 200


def _complex_vector(rng: np.random.Generator, n: int) -> np.ndarray:
    return rng.standard_normal(n) + 1j * rng.standard_normal(n)


def _draw_c1(rng: np.random.Generator) -> np.ndarray:
    return _complex_vector(rng, 4)


def _draw_c2(rng: np.random.Generator) -> np.ndarray:
    # upper and lower parts with a real, nonzero overlap kill omega but not sigma
    chi = _complex_vector(rng, 2)
    w = _complex_vector(rng, 2)
    w = w - (np.vdot(chi, w) / np.vdot(chi, chi)) * chi
    c = rng.standard_normal()
    while abs(c) < 0.2:
        c = rng.standard_normal()
    return np.concatenate([chi, c * chi + w])


def _draw_c3(rng: np.random.Generator) -> np.ndarray:
    # purely imaginary overlap kills sigma but not omega
    chi = _complex_vector(rng, 2)
    w = _complex_vector(rng, 2)
    w = w - (np.vdot(chi, w) / np.vdot(chi, chi)) * chi
    c = rng.standard_normal()
    while abs(c) < 0.2:
        c = rng.standard_normal()
    return np.concatenate([chi, 1j * c * chi + w])


def _draw_c5(rng: np.random.Generator) -> np.ndarray:
    # Majorana-type pairing of the chiral halves
    chi = _complex_vector(rng, 2)
    phase = np.exp(1j * rng.uniform(0.0, 2.0 * np.pi))
    lower = phase * np.array([-np.conj(chi[1]), np.conj(chi[0])])
    return np.concatenate([chi, lower])


def _draw_c6(rng: np.random.Generator) -> np.ndarray:
    chi = _complex_vector(rng, 2)
    if rng.integers(2) == 0:
        return np.concatenate([chi, np.zeros(2, dtype=np.complex128)])
    return np.concatenate([np.zeros(2, dtype=np.complex128), chi])


def _draw_c4(rng: np.random.Generator) -> np.ndarray:
    # push a generic regular spinor through a singular class-4 mapping
    from .classmap import MappingParams, build_M

    while True:
        values = _complex_vector(rng, 9)
        if abs(values[1]) > 0.2:
            break
    params = MappingParams(*values)
    m = build_M(params).matrix
    phi = _draw_c1(rng)
    return m @ phi


_DRAWERS = {
    LounestoClass.C1: _draw_c1,
    LounestoClass.C2: _draw_c2,
    LounestoClass.C3: _draw_c3,
    LounestoClass.C4: _draw_c4,
    LounestoClass.C5: _draw_c5,
    LounestoClass.C6: _draw_c6,
}


def generate(
    target: LounestoClass,
    seed: int,
    count: int,
    rep: GammaRep = WEYL,
    tol: float = DEFAULT_TOL,
) -> list[ClassicalSpinor]:
    """Deterministically generate `count` spinors classifying into `target`.

    Only the six column-spinor classes are generatable; the J = 0 labels have
    no nonzero column representative (J_0 = |psi|^2), and anomalous sets by
    definition come from no spinor at all.
    """
    if target not in _GENERATABLE:
        raise ValueError(f"cannot generate spinors for class {target.value!r}")
    if count < 1:
        raise ValueError("count must be at least 1")
    rng = np.random.default_rng(np.random.PCG64(seed))
    draw = _DRAWERS[target]
    out: list[ClassicalSpinor] = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > _MAX_ATTEMPTS * count:
            raise RuntimeError(
                f"generator for class {target.value} failed to converge"
            )
        candidate = ClassicalSpinor(draw(rng), WEYL)
        if candidate.norm() < 1e-6:
            continue
        if classify(candidate, tol).lounesto_class is target:
            out.append(candidate.to_rep(rep))
    return out


def rep_from_tag(tag: str) -> GammaRep:
    return rep_by_tag(tag)
