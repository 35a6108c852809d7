"""Exact quaternion algebra and its 2x2 complex representation."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quatmoments.quaternion import BASIS, I, J, K, ONE, MatrixRep, Quat

coord = st.integers(-20, 20)
quats = st.builds(Quat, coord, coord, coord, coord)


def test_defining_relations():
    minus_one = Quat(-1)
    assert I * I == minus_one
    assert J * J == minus_one
    assert K * K == minus_one
    assert I * J * K == minus_one
    assert I * J == K
    assert J * I == -K
    assert J * K == I
    assert K * I == J


def test_bilinear_expansion():
    assert Quat(1, 1) * Quat(1, 0, 1) == Quat(1, 1, 1, 1)


def test_norm_sq_example():
    q = Quat(1, 2, 3, 4)
    assert q * q.conj() == Quat(30)
    assert q.norm_sq() == 30


def test_conj_and_re():
    assert Quat(1, 1, 1, 1).conj() == Quat(1, -1, -1, -1)
    assert I.re() == 0
    assert (I * J * K).re() == -1
    # re(q1 q2 q3) = re(q2 q3 q1) on the basis example
    assert (I * J * K).re() == (J * K * I).re()


@given(quats, quats)
def test_conj_antihomomorphism(a, b):
    assert (a * b).conj() == b.conj() * a.conj()
    assert a.conj().conj() == a


@given(quats)
def test_norm_sq_is_real_nonnegative(q):
    p = q * q.conj()
    assert p.is_real()
    assert p.re() >= 0
    assert p.re() == q.norm_sq()


@given(quats)
def test_re_from_conjugate(q):
    doubled = q + q.conj()
    assert doubled == Quat(2 * q.re())


def test_associativity_bulk():
    rng = random.Random(20240819)
    for _ in range(1000):
        a, b, c = (Quat(*(rng.randint(-9, 9) for _ in range(4)))
                   for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_cyclic_real_part_random_tuples():
    rng = random.Random(7)
    for length in range(2, 7):
        for _ in range(50):
            qs = [Quat(*(rng.randint(-5, 5) for _ in range(4)))
                  for _ in range(length)]
            prod = ONE
            for q in qs:
                prod = prod * q
            rotated = ONE
            for q in qs[1:] + qs[:1]:
                rotated = rotated * q
            assert prod.re() == rotated.re()


def test_matrix_rep_identity():
    rep = Quat(1).to_matrix_rep()
    assert rep.entries == (((1, 0), (0, 0)), ((0, 0), (1, 0)))


def test_matrix_rep_of_basis_product():
    assert (I * J).to_matrix_rep() == I.to_matrix_rep() * J.to_matrix_rep()


def test_matrix_rep_trace():
    assert Quat(3, 1).to_matrix_rep().trace() == (6, 0)


@given(quats, quats)
@settings(max_examples=200)
def test_matrix_rep_homomorphism(a, b):
    assert (a * b).to_matrix_rep() == a.to_matrix_rep() * b.to_matrix_rep()


@given(quats)
def test_matrix_rep_trace_is_twice_re(q):
    assert q.to_matrix_rep().trace() == (2 * q.re(), 0)


def test_fraction_scalars():
    q = Quat(Fraction(1, 2), Fraction(1, 3))
    p = q * q.conj()
    assert p == Quat(Fraction(1, 4) + Fraction(1, 9))


def test_float_scalars_share_interface():
    q = Quat(0.5, 1.5, -2.0, 0.25)
    p = q * q.conj()
    assert p.x1 == p.x2 == p.x3 == 0.0
    assert p.x0 == pytest.approx(q.norm_sq())


def test_scalar_multiplication():
    assert 3 * I == Quat(0, 3)
    assert I * 3 == Quat(0, 3)
    assert str(Quat(1, 0, -2)) == "1 - 2j"
