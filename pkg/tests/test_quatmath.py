import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from qubit_spheres.quatmath import (
    I,
    J,
    K,
    ONE,
    NonUnitPureImaginary,
    Quaternion,
    embed,
    exp_pure,
    join_complex_pair,
    split_complex_pair,
)

finite = st.floats(min_value=-1e3, max_value=1e3, allow_nan=False)
quaternions = st.builds(Quaternion, finite, finite, finite, finite)


def approx_eq(a: Quaternion, b: Quaternion, tol=1e-12):
    return all(abs(u - v) <= tol for u, v in zip(a.components(), b.components()))


def test_basis_multiplication_table():
    # Full 4x4 table spelled out as the independent reference.
    table = {
        (ONE, ONE): ONE, (ONE, I): I, (ONE, J): J, (ONE, K): K,
        (I, ONE): I, (I, I): -ONE, (I, J): K, (I, K): -J,
        (J, ONE): J, (J, I): -K, (J, J): -ONE, (J, K): I,
        (K, ONE): K, (K, I): J, (K, J): -I, (K, K): -ONE,
    }
    for (a, b), want in table.items():
        assert a * b == want


def test_mul_examples():
    assert I * J == K
    assert K * J == -I
    q = Quaternion(0.3, -1.5, 2.0, 0.25)
    assert q * ONE == q


def test_norm_and_conj():
    q = Quaternion(1.0, 2.0, -3.0, 0.5)
    assert q.norm_sq() == pytest.approx(1 + 4 + 9 + 0.25)
    prod = q * q.conj()
    assert approx_eq(prod, Quaternion(q.norm_sq()))


def test_conj_examples():
    assert (ONE + I).conj() == ONE - I
    assert J.conj() == -J
    assert (I * J).conj() == J.conj() * I.conj()
    assert (I * J).conj() == -K


def test_exp_pure_basics():
    assert approx_eq(exp_pure(K, math.pi / 2), K)
    t = Quaternion(0, 0.6, 0.8, 0.0)
    assert exp_pure(t, 0.0) == ONE


def test_exp_pure_value():
    t = Quaternion(0, 1 / math.sqrt(2), 0, 1 / math.sqrt(2))
    got = exp_pure(t, math.pi / 3)
    want = Quaternion(0.5, 0.6123724356957945, 0.0, 0.6123724356957945)
    assert approx_eq(got, want)


def test_exp_pure_addition_law():
    t = Quaternion(0, 1 / math.sqrt(2), 0, 1 / math.sqrt(2))
    lhs = exp_pure(t, 0.7) * exp_pure(t, 0.9)
    assert approx_eq(lhs, exp_pure(t, 1.6))


def test_exp_pure_rejects_bad_axis():
    with pytest.raises(NonUnitPureImaginary):
        exp_pure(Quaternion(0.1, 1, 0, 0), 1.0)  # nonzero real part
    with pytest.raises(NonUnitPureImaginary):
        exp_pure(Quaternion(0, 0.5, 0, 0), 1.0)  # not unit


def test_split_examples():
    assert split_complex_pair(ONE) == (1 + 0j, 0j)
    assert split_complex_pair(J) == (0j, 1 + 0j)
    a, b = split_complex_pair(I)
    assert join_complex_pair(a, b) == I


def test_embed_is_k_imaginary():
    assert embed(complex(2.5, -1.25)) == Quaternion(2.5, 0, 0, -1.25)


@given(quaternions, quaternions, quaternions)
def test_associativity(a, b, c):
    lhs, rhs = (a * b) * c, a * (b * c)
    scale = max(1.0, a.norm() * b.norm() * c.norm())
    assert all(abs(u - v) <= 1e-12 * scale
               for u, v in zip(lhs.components(), rhs.components()))


@given(quaternions, quaternions)
def test_norm_multiplicative(a, b):
    scale = max(1.0, a.norm() * b.norm())
    assert abs((a * b).norm() - a.norm() * b.norm()) <= 1e-12 * scale


@given(quaternions, quaternions)
def test_conj_antihomomorphism(a, b):
    lhs, rhs = (a * b).conj(), b.conj() * a.conj()
    scale = max(1.0, a.norm() * b.norm())
    assert all(abs(u - v) <= 1e-15 * scale
               for u, v in zip(lhs.components(), rhs.components()))


@given(quaternions)
def test_split_join_roundtrip_is_exact(q):
    a, b = split_complex_pair(q)
    assert join_complex_pair(a, b) == q


@given(finite, finite)
def test_j_commutes_with_conjugation(re, im):
    c = complex(re, im)
    assert J * embed(c) == embed(c.conjugate()) * J


@given(quaternions)
def test_conj_involution_and_norm(q):
    assert q.conj().conj() == q
    assert q.conj().norm() == q.norm()


def test_quaternion_is_immutable():
    q = Quaternion(1, 2, 3, 4)
    with pytest.raises(AttributeError):
        q.w = 5.0
