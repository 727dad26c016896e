"""Quaternion algebra: multiplication table, conjugation, inverses, slices."""

import math

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from qmobius.errors import DivisionByZero, NotOnSphere, RealInput
from qmobius.quat import (
    I,
    J,
    K,
    ONE,
    ZERO,
    Quaternion,
    conjugate_sphere_check,
    get_tolerance,
    imaginary_unit,
    isclose,
    on_sphere,
    set_tolerance,
    slice_decompose,
)

component = st.floats(min_value=-10.0, max_value=10.0, allow_nan=False)
quaternions = st.builds(Quaternion, component, component, component, component)


def q(w=0.0, x=0.0, y=0.0, z=0.0):
    return Quaternion(float(w), float(x), float(y), float(z))


# -- multiplication ------------------------------------------------------


def test_multiplication_table():
    assert I * J == K
    assert J * K == I
    assert K * I == J
    assert J * I == -K
    assert K * J == -I
    assert I * K == -J
    assert I * I == -ONE
    assert J * J == -ONE
    assert K * K == -ONE


def test_one_is_identity():
    p = q(0.3, -1.5, 2.0, 0.7)
    assert ONE * p == p
    assert p * ONE == p


def test_expand_binomial_product():
    assert (ONE + I) * (ONE + J) == q(1, 1, 1, 1)


def test_scalar_mixing():
    assert 2.0 * I == q(0, 2, 0, 0)
    assert I * 2.0 == q(0, 2, 0, 0)
    assert (ONE + I) - 1.0 == I
    assert 1.0 + I == ONE + I


@given(quaternions, quaternions, quaternions)
@settings(deadline=None)
def test_multiplication_associative(p, r, s):
    lhs = (p * r) * s
    rhs = p * (r * s)
    assert abs(lhs - rhs) <= 1e-9 * (1.0 + abs(lhs))


@given(quaternions, quaternions)
@settings(deadline=None)
def test_norm_multiplicative(p, r):
    # |pq| = |p||q| within 1e-12 relative
    lhs = abs(p * r)
    rhs = abs(p) * abs(r)
    assert abs(lhs - rhs) <= 1e-12 * (1.0 + rhs)


# -- conjugation ---------------------------------------------------------


def test_conjugate_values():
    assert I.conj() == -I
    assert q(1, 1, 1, 1).conj() == q(1, -1, -1, -1)


def test_real_part_of_conjugate_product():
    p, r = I + J, ONE + K
    assert (p.conj() * r.conj()).w == pytest.approx((r * p).w, abs=1e-15)
    assert (p.conj() * r.conj()).w == 0.0


@given(quaternions, quaternions)
@settings(deadline=None)
def test_conjugation_antiautomorphism(p, r):
    lhs = (p * r).conj()
    rhs = r.conj() * p.conj()
    assert abs(lhs - rhs) <= 1e-9 * (1.0 + abs(lhs))


@given(quaternions)
@settings(deadline=None)
def test_conj_involution_and_norm(p):
    assert p.conj().conj() == p
    prod = p * p.conj()
    assert prod.im_norm() <= 1e-9 * (1.0 + prod.w)
    assert prod.w == pytest.approx(p.norm_sq(), rel=1e-12, abs=1e-12)


# -- inverse and division ------------------------------------------------


def test_inverse_values():
    assert I.inverse() == -I
    assert q(2).inverse() == q(0.5)
    assert (ONE + I).inverse().close_to(q(0.5, -0.5))


def test_inverse_of_zero_raises():
    with pytest.raises(DivisionByZero):
        ZERO.inverse()


@given(quaternions)
@settings(deadline=None)
def test_inverse_round_trip(p):
    assume(abs(p) > 1e-3)
    assert (p * p.inverse()).close_to(ONE, tol=1e-9)
    assert (p.inverse() * p).close_to(ONE, tol=1e-9)


def test_scalar_division_only():
    assert q(2, 4, 6, 8) / 2.0 == q(1, 2, 3, 4)
    with pytest.raises(TypeError):
        q(1) / I  # ambiguous side, must be explicit via inverse()


def test_unit_and_abs():
    p = q(3, 4)
    assert abs(p) == 5.0
    assert p.unit().close_to(q(0.6, 0.8))
    assert abs(p.unit()) == pytest.approx(1.0, abs=1e-15)


# -- formatting and serialization ---------------------------------------


def test_string_round_trip_exact():
    for p in (q(1, 2, 3, 4), q(-0.5, 0, 1.25, -8), ZERO, I - J):
        assert Quaternion.from_string(str(p)) == p


def test_from_string_spaces():
    assert Quaternion.from_string(" 1 +2i +3j +4k ") == q(1, 2, 3, 4)


@given(quaternions)
@settings(deadline=None)
def test_json_round_trip(p):
    assert Quaternion.from_json(p.to_json()) == p


# -- slice decomposition and spheres ------------------------------------


def test_slice_decompose_values():
    x, y, axis = slice_decompose(q(1, 2))
    assert (x, y) == (1.0, 2.0)
    assert axis == I

    x, y, axis = slice_decompose(q(3, 0, -4, 0))
    assert (x, y) == (3.0, 4.0)
    assert axis == -J


def test_slice_decompose_real_raises():
    with pytest.raises(RealInput):
        slice_decompose(q(5))


@given(quaternions)
@settings(deadline=None)
def test_slice_decompose_reconstructs(p):
    assume(p.im_norm() > 1e-3 * (1.0 + abs(p)))
    x, y, axis = slice_decompose(p)
    assert y > 0.0
    assert abs(axis) == pytest.approx(1.0, abs=1e-12)
    assert axis.w == 0.0
    rebuilt = q(x) + axis * y
    assert rebuilt.close_to(p, tol=1e-9)


def test_imaginary_unit():
    assert imaginary_unit(1, 0, 0) == I
    u = imaginary_unit(0.6, 0.8, 0)
    assert abs(u) == pytest.approx(1.0, abs=1e-15)
    with pytest.raises(ValueError):
        imaginary_unit(0.5, 0, 0)


def test_on_sphere():
    assert on_sphere(I, 0, 1)
    assert on_sphere(q(2, 3), 2, 3)
    assert not on_sphere(q(2), 0, 1)


def test_conjugate_sphere_check_values():
    assert conjugate_sphere_check(ONE + K, 0, 1, I)
    assert conjugate_sphere_check(J, 2, 3, q(2, 3))
    assert conjugate_sphere_check(ONE, 0, 1, K)


def test_conjugate_sphere_check_errors():
    with pytest.raises(DivisionByZero):
        conjugate_sphere_check(ZERO, 0, 1, I)
    with pytest.raises(NotOnSphere):
        conjugate_sphere_check(ONE, 0, 1, q(2))


@given(quaternions, component, st.floats(min_value=0.1, max_value=5.0),
       st.floats(min_value=0.0, max_value=2.0 * math.pi),
       st.floats(min_value=0.0, max_value=math.pi))
@settings(deadline=None)
def test_conjugation_preserves_spheres(p, x, y, phi, theta):
    assume(abs(p) > 1e-3)
    axis = q(0, math.sin(theta) * math.cos(phi), math.sin(theta) * math.sin(phi),
             math.cos(theta))
    point = q(x) + axis * y
    assert conjugate_sphere_check(p, x, y, point, tol=1e-6)


# -- tolerance switches --------------------------------------------------


def test_tolerance_override_and_restore():
    base = get_tolerance()
    try:
        assert isclose(1.0, 1.0 + 1e-10)
        set_tolerance(1e-14, 1e-14)
        assert not isclose(1.0, 1.0 + 1e-10)
        assert isclose(1.0, 1.0 + 1e-10, tol=1e-9)
    finally:
        set_tolerance(*base)
    assert get_tolerance() == base
