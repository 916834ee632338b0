"""Quaternions and the conversions between the three spinor encodings."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import random_spinor
from spinorspace import clifford as cl
from spinorspace import spinor_forms as sf

finite = st.floats(min_value=-100, max_value=100, allow_nan=False)


def rand_quat(rng):
    return sf.Quaternion(*rng.standard_normal(4))


def rand_quat_matrix(rng):
    return sf.quat_matrix(*(rand_quat(rng) for _ in range(4)))


# -- quaternions --------------------------------------------------------------


def test_hamilton_relations():
    qi = sf.Quaternion(0, 1, 0, 0)
    qj = sf.Quaternion(0, 0, 1, 0)
    qk = sf.Quaternion(0, 0, 0, 1)
    minus_one = sf.Quaternion(-1)
    assert (qi * qj).isclose(qk)
    assert (qj * qk).isclose(qi)
    assert (qk * qi).isclose(qj)
    assert (qi * qi).isclose(minus_one)
    assert (qi * qj * qk).isclose(minus_one)


def test_quaternion_units_match_spatial_bivectors():
    """i = e2e3, j = e3e1, k = e1e2 forces ij = k and ijk = -1."""
    e1, e2, e3 = (cl.basis_vector(m) for m in (1, 2, 3))
    qi, qj, qk = e2 * e3, e3 * e1, e1 * e2
    assert (qi * qj).isclose(qk)
    assert (qi * qj * qk).isclose(cl.scalar(-1.0))


@given(finite, finite, finite, finite, finite, finite, finite, finite)
def test_norm_multiplicativity(a, b, c, d, e, f, g, h):
    p = sf.Quaternion(a, b, c, d)
    q = sf.Quaternion(e, f, g, h)
    assert np.isclose((p * q).norm(), p.norm() * q.norm(), rtol=1e-9, atol=1e-9)


def test_complex_embedding_is_ring_homomorphism(rng):
    for _ in range(50):
        p, q = rand_quat(rng), rand_quat(rng)
        assert np.allclose((p * q).to_complex_matrix(),
                           p.to_complex_matrix() @ q.to_complex_matrix(), atol=1e-12)


# -- quaternionic generator images ---------------------------------------------


def test_quaternion_rep_displays():
    one, zero = sf.Quaternion(1), sf.Quaternion()
    qi = sf.Quaternion(0, 1, 0, 0)
    e0 = sf.quaternion_rep_e(0)
    assert e0.isclose(sf.quat_matrix(one, zero, zero, -one))
    e1 = sf.quaternion_rep_e(1)
    assert e1.isclose(sf.quat_matrix(zero, qi, qi, zero))
    with pytest.raises(ValueError):
        sf.quaternion_rep_e(4)


def test_quaternion_rep_clifford_relations():
    eta = (1, -1, -1, -1)
    zero = sf.Quaternion()
    for mu in range(4):
        for nu in range(4):
            em, en = sf.quaternion_rep_e(mu), sf.quaternion_rep_e(nu)
            total = (em @ en) + (en @ em)
            d = sf.Quaternion(2.0 * eta[mu]) if mu == nu else zero
            assert total.isclose(sf.quat_matrix(d, zero, zero, d))


def test_e1_squares_to_minus_identity():
    e1 = sf.quaternion_rep_e(1)
    sq = e1 @ e1
    minus = sf.Quaternion(-1)
    assert sq.isclose(sf.quat_matrix(minus, sf.Quaternion(), sf.Quaternion(), minus))


def test_h_to_c_functor_on_products(rng):
    for _ in range(100):
        a, b = rand_quat_matrix(rng), rand_quat_matrix(rng)
        assert np.allclose((a @ b).to_complex(), a.to_complex() @ b.to_complex(), atol=1e-12)


# -- operator packaging --------------------------------------------------------


def test_operator_from_coeffs_pinned():
    op = sf.operator_from_coeffs(1.0, np.zeros(6), 0.0)
    assert op.q1.isclose(sf.Quaternion(1)) and op.q2.isclose(sf.Quaternion())
    op = sf.operator_from_coeffs(0.0, np.zeros(6), 1.0)
    assert op.q1.isclose(sf.Quaternion()) and op.q2.isclose(sf.Quaternion(-1))
    b = np.zeros(6)
    b[5] = 1.0  # the (2,3) slot
    op = sf.operator_from_coeffs(0.0, b, 0.0)
    assert op.q1.isclose(sf.Quaternion(0, 1, 0, 0)) and op.q2.isclose(sf.Quaternion())


def test_classical_from_operator_pinned():
    psi = sf.classical_from_operator(sf.operator_from_coeffs(1.0, np.zeros(6), 0.0))
    assert np.allclose(psi.components, [1, 0, 0, 0])
    psi = sf.classical_from_operator(sf.operator_from_coeffs(0.0, np.zeros(6), 1.0))
    assert np.allclose(psi.components, [0, 0, 1, 0])
    assert psi.rep is cl.DIRAC


def test_operator_classical_round_trip(rng):
    for _ in range(100):
        op = sf.operator_from_coeffs(
            rng.standard_normal(), rng.standard_normal(6), rng.standard_normal()
        )
        back = sf.operator_from_classical(sf.classical_from_operator(op))
        assert op.q1.isclose(back.q1, 1e-12) and op.q2.isclose(back.q2, 1e-12)


def test_operator_embeds_into_even_subalgebra(rng):
    for _ in range(50):
        op = sf.operator_from_coeffs(
            rng.standard_normal(), rng.standard_normal(6), rng.standard_normal()
        )
        mv = sf.operator_to_even_multivector(op)
        assert mv.grade(1).max_abs() == 0.0
        assert mv.grade(3).max_abs() == 0.0
        back = sf.operator_from_even_multivector(mv)
        assert op.q1.isclose(back.q1) and op.q2.isclose(back.q2)


def test_quaternionic_image_is_homomorphism(rng):
    """Image of a product equals the product of images, and the complex
    functor route agrees."""
    for _ in range(50):
        op_a = sf.operator_from_coeffs(
            rng.standard_normal(), rng.standard_normal(6), rng.standard_normal()
        )
        op_b = sf.operator_from_coeffs(
            rng.standard_normal(), rng.standard_normal(6), rng.standard_normal()
        )
        prod = sf.operator_to_even_multivector(op_a) * sf.operator_to_even_multivector(op_b)
        op_ab = sf.operator_from_even_multivector(prod)
        ha, hb = sf.operator_to_quat_matrix(op_a), sf.operator_to_quat_matrix(op_b)
        assert (ha @ hb).isclose(sf.operator_to_quat_matrix(op_ab), 1e-10)
        assert np.allclose((ha @ hb).to_complex(), ha.to_complex() @ hb.to_complex(), atol=1e-12)


# -- algebraic form ------------------------------------------------------------


def test_algebraic_pinned_examples():
    xi = sf.algebraic_from_classical(sf.ClassicalSpinor([1, 0, 0, 0], cl.DIRAC))
    want = np.zeros((4, 4))
    want[0, 0] = 1.0
    assert np.allclose(xi.matrix, want)
    xi = sf.algebraic_from_classical(sf.ClassicalSpinor([0, 0, 0, 0], cl.DIRAC))
    assert np.all(xi.matrix == 0)


def test_algebraic_round_trip(rng):
    for _ in range(100):
        psi = random_spinor(rng, cl.DIRAC)
        back = sf.classical_from_algebraic(sf.algebraic_from_classical(psi))
        assert np.max(np.abs(back.components - psi.components)) < 1e-12


def test_algebraic_fixed_by_ideal_projector(rng):
    fmat = sf.ideal_projector_matrix()
    for _ in range(20):
        xi = sf.algebraic_from_classical(random_spinor(rng, cl.DIRAC))
        assert np.allclose(xi.matrix @ fmat, xi.matrix, atol=1e-14)


def test_algebraic_rejects_extra_columns():
    with pytest.raises(ValueError, match="first column"):
        sf.AlgebraicSpinor(np.eye(4))


# -- H + H packaging -----------------------------------------------------------


def test_ideal_element_pinned():
    one, zero = sf.Quaternion(1), sf.Quaternion()
    h = sf.ideal_element_H2(one, zero)
    assert h.isclose(sf.quat_matrix(one, zero, zero, zero))
    qi, qk = sf.Quaternion(0, 1, 0, 0), sf.Quaternion(0, 0, 0, 1)
    h = sf.ideal_element_H2(qi, qk)
    assert h.entries[0][0].isclose(qi) and h.entries[1][0].isclose(qk)
    assert h.entries[0][1].isclose(zero) and h.entries[1][1].isclose(zero)


def test_ideal_element_product_consistency(rng):
    """Left action of generator images keeps the single-column shape, and the
    complex functor route gives the same products."""
    zero = sf.Quaternion()
    for _ in range(50):
        h = sf.ideal_element_H2(rand_quat(rng), rand_quat(rng))
        mu = int(rng.integers(4))
        out = sf.quaternion_rep_e(mu) @ h
        assert out.entries[0][1].isclose(zero) and out.entries[1][1].isclose(zero)
        assert np.allclose(
            out.to_complex(),
            sf.quaternion_rep_e(mu).to_complex() @ h.to_complex(),
            atol=1e-12,
        )


# -- the isomorphism chain -----------------------------------------------------


def test_isomorphism_chain_round_trips(rng):
    for _ in range(200):
        op = sf.operator_from_coeffs(
            rng.standard_normal(), rng.standard_normal(6), rng.standard_normal()
        )
        psi = sf.classical_from_operator(op)
        xi = sf.algebraic_from_classical(psi)
        psi2 = sf.classical_from_algebraic(xi)
        op2 = sf.operator_from_classical(psi2)
        mv = sf.operator_to_even_multivector(op2)
        op3 = sf.operator_from_even_multivector(mv)
        assert np.max(np.abs(psi2.components - psi.components)) < 1e-12
        assert op.q1.isclose(op3.q1, 1e-12) and op.q2.isclose(op3.q2, 1e-12)


def test_rep_conversion_round_trip(rng):
    for _ in range(20):
        psi = random_spinor(rng, cl.WEYL)
        back = psi.to_rep(cl.DIRAC).to_rep(cl.WEYL)
        assert np.max(np.abs(back.components - psi.components)) < 1e-14


def test_zero_spinor_is_representable():
    psi = sf.ClassicalSpinor([0, 0, 0, 0], cl.WEYL)
    assert psi.is_zero


def test_nonfinite_components_rejected():
    with pytest.raises(ValueError, match="finite"):
        sf.ClassicalSpinor([np.inf, 0, 0, 0], cl.WEYL)
