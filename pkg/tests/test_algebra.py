"""Algebras, algebra maps, and tensor plumbing."""

import random
from fractions import Fraction

import pytest

from algebroids.exactfield import Matrix, PrimeField, RationalField
from algebroids.algebra import (
    ANTI,
    HOM,
    Algebra,
    AlgebraMap,
    flip_tensor,
    opposite,
    tensor_apply,
    tensor_square_product,
    tensor_vec,
    verify_algebra,
    verify_map,
)
from algebroids.catalog import FiniteGroup, group_algebra

QQ = RationalField()
one = QQ.one


def test_from_struct_solves_unit():
    # kZ3 without a declared unit: the unit must be found automatically
    z3 = FiniteGroup.cyclic(3)
    A = group_algebra(z3, QQ)
    assert A.one().vec == A.basis_vec(0)
    assert verify_algebra(A).passed


def test_from_struct_no_unit_raises():
    # the zero-multiplication algebra has no unit
    with pytest.raises(ValueError):
        Algebra.from_struct(QQ, ["x", "y"], {}, name="null")


def test_verify_algebra_catches_nonassociative():
    # e is a unit; x*x = y, x*y = e, y*x = 0 makes (xx)x = 0 but x(xx) = e
    struct = {(0, 0, 0): one,
              (0, 1, 1): one, (1, 0, 1): one,
              (0, 2, 2): one, (2, 0, 2): one,
              (1, 1, 2): one, (1, 2, 0): one}
    table = [[{} for _ in range(3)] for _ in range(3)]
    for (i, j, k), v in struct.items():
        table[i][j][k] = v
    A = Algebra(QQ, ["e", "x", "y"], tuple(tuple(r) for r in table),
                (one, QQ.zero, QQ.zero), name="bad")
    rep = verify_algebra(A)
    failed = {c.check_id for c in rep.failures()}
    assert failed == {"assoc"}
    assoc = rep.find("assoc")
    assert assoc.certificates  # a witness triple is reported


def test_opposite_involution(m2):
    A = m2.total
    assert opposite(opposite(A)) == A
    aop = opposite(A)
    # e12 * e21 = e11 in M2; opposite has e21 *op e12 = e11
    v = aop.mul_vec(A.basis_vec(2), A.basis_vec(1))
    assert v == A.basis_vec(0)


def test_mult_matrices_agree_with_mul(m2):
    A = m2.total
    rng = random.Random(5)
    for _ in range(10):
        u = tuple(QQ.of(rng.randrange(-2, 3)) for _ in range(A.dim))
        v = tuple(QQ.of(rng.randrange(-2, 3)) for _ in range(A.dim))
        assert A.left_mult_matrix(u).apply(v) == A.mul_vec(u, v)
        assert A.right_mult_matrix(v).apply(u) == A.mul_vec(u, v)


def test_is_commutative(m2, kz3):
    assert not m2.total.is_commutative()
    assert kz3.total.is_commutative()


def test_fmt_vec(kz2):
    A = kz2.total
    assert A.fmt_vec((one, QQ.of(-2))) == "1 + (-2)*g"
    assert A.fmt_vec((QQ.zero, QQ.zero)) == "0"
    assert A.fmt_vec((QQ.zero, QQ.parse("1/2"))) == "(1/2)*g"


def test_algebra_map_verify_hom_and_anti(m2):
    A = m2.total
    ident = AlgebraMap.identity(A)
    assert verify_map(ident).passed
    transp = m2.antipode_map()
    assert transp.kind == ANTI
    assert verify_map(transp).passed
    # transpose is NOT an algebra hom on M2
    not_hom = transp.with_kind(HOM)
    rep = verify_map(not_hom)
    assert not rep.passed
    assert {c.check_id for c in rep.failures()} == {"map-mult"}


def test_algebra_map_compose_kinds(m2):
    s = m2.antipode_map()
    # anti after anti = hom
    s2 = s.compose(s)
    assert s2.kind == HOM
    assert s2.matrix.is_identity()


def test_map_inverse(m2):
    s = m2.antipode_map()
    sinv = s.inverse()
    assert s.compose(sinv).matrix.is_identity()
    assert sinv.kind == ANTI


def test_tensor_apply_matches_componentwise():
    rng = random.Random(9)
    F = PrimeField(7)
    m1 = Matrix.from_rows(F, [tuple(F.of(rng.randrange(7)) for _ in range(2))
                              for _ in range(3)], 2)
    m2_ = Matrix.from_rows(F, [tuple(F.of(rng.randrange(7)) for _ in range(3))
                               for _ in range(2)], 3)
    for _ in range(10):
        u = tuple(F.of(rng.randrange(7)) for _ in range(2))
        v = tuple(F.of(rng.randrange(7)) for _ in range(3))
        w = tensor_vec(3, u, v)
        got = tensor_apply(m1, m2_, w)
        expect = tensor_vec(2, m1.apply(u), m2_.apply(v))
        assert got == expect


def test_flip_tensor_involution():
    rng = random.Random(4)
    v = tuple(QQ.of(rng.randrange(-5, 6)) for _ in range(6))
    flipped = flip_tensor(2, 3, v)
    assert flip_tensor(3, 2, flipped) == v


def test_tensor_square_product_unit(kz3):
    A = kz3.total
    d = A.dim
    unit2 = tensor_vec(d, A.unit, A.unit)
    rng = random.Random(12)
    w = tuple(QQ.of(rng.randrange(-2, 3)) for _ in range(d * d))
    assert tensor_square_product(A, A, unit2, w) == w
    assert tensor_square_product(A, A, w, unit2) == w


def test_tensor_square_product_componentwise(kz2):
    A = kz2.total
    d = A.dim
    rng = random.Random(13)
    for _ in range(10):
        a, b, c, e = (tuple(QQ.of(rng.randrange(-2, 3)) for _ in range(d))
                      for _ in range(4))
        lhs = tensor_square_product(A, A, tensor_vec(d, a, b),
                                    tensor_vec(d, c, e))
        rhs = tensor_vec(d, A.mul_vec(a, c), A.mul_vec(b, e))
        assert lhs == rhs


def test_into_opposite_and_back(m2):
    A = m2.total
    s = m2.lb.s
    sop = s.into_opposite(opposite(A))
    assert sop.kind == ANTI
    assert sop.matrix.rows == s.matrix.rows
    back = sop.from_opposite_source(opposite(s.source))
    assert back.kind == HOM
