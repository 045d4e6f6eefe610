"""Field arithmetic and exact linear algebra.

The rank computations are cross-checked against an independent oracle:
rank of a matrix over GF(7) recomputed by brute-force search for the largest
non-vanishing minor (Laplace expansion), never touching the row-reduction
code under test.
"""

import random
from fractions import Fraction

import pytest

from algebroids.exactfield import (
    GFElement,
    Matrix,
    PrimeField,
    RationalField,
    Subspace,
    SparseEchelon,
    field_from_name,
)

QQ = RationalField()
F7 = PrimeField(7)


def test_rational_field_basics():
    assert QQ.of(3) == Fraction(3)
    assert QQ.parse("2/3") == Fraction(2, 3)
    assert QQ.parse("-5") == Fraction(-5)
    assert QQ.zero == 0 and QQ.one == 1
    assert QQ.characteristic == 0
    assert QQ.name == "rational"
    assert QQ.fmt(Fraction(-1, 2)) == "-1/2"


def test_gf_arithmetic():
    a = F7.of(3)
    b = F7.of(5)
    assert (a + b).v == 1
    assert (a - b).v == 5
    assert (a * b).v == 1
    assert (a / b).v == (3 * pow(5, 5, 7)) % 7
    assert (-a).v == 4
    assert a ** 6 == F7.one
    assert not F7.zero
    assert a
    assert F7.parse("10") == F7.of(3)
    assert F7.parse("1/3") == F7.one / F7.of(3)
    assert F7.characteristic == 7


def test_gf_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        F7.one / F7.zero


def test_prime_field_rejects_composite():
    with pytest.raises(ValueError):
        PrimeField(6)
    with pytest.raises(ValueError):
        PrimeField(1)


def test_field_from_name():
    assert field_from_name("rational") is not None
    assert field_from_name("gf:11").characteristic == 11
    with pytest.raises(ValueError):
        field_from_name("gf:8")
    with pytest.raises(ValueError):
        field_from_name("real")


def test_gf_field_arithmetic_laws_random():
    rng = random.Random(7)
    for _ in range(200):
        a, b, c = (F7.of(rng.randrange(7)) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)
        if b:
            assert (a / b) * b == a


def _mat(field, rows):
    return Matrix.from_rows(field, [tuple(field.of(x) for x in r)
                                    for r in rows], len(rows[0]))


def test_rref_frozen_example():
    m = _mat(QQ, [[1, 2, 3], [2, 4, 6], [1, 1, 1]])
    r = m.rref()
    assert r.rows == _mat(QQ, [[1, 0, -1], [0, 1, 2], [0, 0, 0]]).rows
    assert m.rank() == 2


def test_kernel_frozen_example():
    m = _mat(QQ, [[1, 2, 3], [2, 4, 6]])
    k = m.kernel()
    assert k.dim == 2
    for v in k.basis.rows:
        assert all(x == 0 for x in m.apply(v))
    assert k.contains((QQ.of(-2), QQ.one, QQ.zero))
    assert k.contains((QQ.of(-3), QQ.zero, QQ.one))
    assert not k.contains((QQ.one, QQ.zero, QQ.zero))


def test_solve_and_inverse_frozen():
    m = _mat(QQ, [[2, 1], [5, 3]])
    inv = m.inverse()
    assert inv.rows == _mat(QQ, [[3, -1], [-5, 2]]).rows
    sol = m.solve((QQ.one, QQ.zero))
    assert sol == (QQ.of(3), QQ.of(-5))
    singular = _mat(QQ, [[1, 2], [2, 4]])
    assert singular.inverse() is None
    assert singular.solve((QQ.zero, QQ.one)) is None
    # consistent underdetermined system: canonical solution has free vars 0
    wide = _mat(QQ, [[1, 1, 0]])
    assert wide.solve((QQ.of(5),)) == (QQ.of(5), QQ.zero, QQ.zero)


def test_solve_matrix_batch():
    m = _mat(QQ, [[2, 1], [5, 3]])
    rhs = _mat(QQ, [[1, 0], [0, 1]])
    x = m.solve_matrix(rhs)
    assert (m @ x).is_identity()
    bad = _mat(QQ, [[1, 2], [2, 4]]).solve_matrix(rhs)
    assert bad is None


def _det_laplace(m, rows, cols):
    if len(rows) == 1:
        return m.entry(rows[0], cols[0])
    total = m.field.zero
    sign = m.field.one
    for k, r in enumerate(rows):
        piv = m.entry(r, cols[0])
        if piv:
            sub = _det_laplace(m, rows[:k] + rows[k + 1:], cols[1:])
            total = total + sign * piv * sub
        sign = -sign
    return total


def _rank_by_minors(m):
    best = 0
    import itertools
    for size in range(1, min(m.nrows, m.ncols) + 1):
        found = False
        for rows in itertools.combinations(range(m.nrows), size):
            for cols in itertools.combinations(range(m.ncols), size):
                if _det_laplace(m, list(rows), list(cols)):
                    found = True
                    break
            if found:
                break
        if found:
            best = size
        else:
            break
    return best


def test_rank_against_minor_oracle_gf7():
    rng = random.Random(2024)
    for _ in range(25):
        rows = [[F7.of(rng.randrange(7)) for _ in range(5)]
                for _ in range(4)]
        m = Matrix.from_rows(F7, [tuple(r) for r in rows], 5)
        assert m.rank() == _rank_by_minors(m)


def test_matmul_associativity_random():
    rng = random.Random(11)
    for _ in range(20):
        a = Matrix.from_rows(F7, [tuple(F7.of(rng.randrange(7))
                                        for _ in range(3))
                                  for _ in range(2)], 3)
        b = Matrix.from_rows(F7, [tuple(F7.of(rng.randrange(7))
                                        for _ in range(4))
                                  for _ in range(3)], 4)
        c = Matrix.from_rows(F7, [tuple(F7.of(rng.randrange(7))
                                        for _ in range(2))
                                  for _ in range(4)], 2)
        assert ((a @ b) @ c).rows == (a @ (b @ c)).rows


def test_subspace_membership_and_coords():
    u = Subspace.from_vectors(QQ, 3, [
        (QQ.one, QQ.zero, QQ.one),
        (QQ.zero, QQ.one, QQ.one),
    ])
    assert u.dim == 2
    v = (QQ.of(2), QQ.of(3), QQ.of(5))
    coords = u.coords_of(v)
    assert coords == (QQ.of(2), QQ.of(3))
    assert u.coords_of((QQ.one, QQ.zero, QQ.zero)) is None


def test_subspace_sum_and_intersection():
    e1 = (QQ.one, QQ.zero, QQ.zero)
    e2 = (QQ.zero, QQ.one, QQ.zero)
    e3 = (QQ.zero, QQ.zero, QQ.one)
    # two planes in k^3 meeting in a line
    u = Subspace.from_vectors(QQ, 3, [e1, e2])
    w = Subspace.from_vectors(QQ, 3, [e2, e3])
    cap = u.intersect(w)
    assert cap.dim == 1
    assert cap.contains(e2)
    assert u.plus(w).dim == 3


def test_sparse_echelon_matches_subspace():
    rng = random.Random(3)
    vecs = []
    ech = SparseEchelon(QQ, 6)
    for _ in range(8):
        v = tuple(QQ.of(rng.randrange(-3, 4)) for _ in range(6))
        vecs.append(v)
        ech.insert({i: x for i, x in enumerate(v) if x})
    sub = Subspace.from_vectors(QQ, 6, vecs)
    assert ech.to_subspace().dim == sub.dim
    for _ in range(20):
        w = tuple(QQ.of(rng.randrange(-3, 4)) for _ in range(6))
        in_sub = sub.contains(w)
        red = ech.reduce({i: x for i, x in enumerate(w) if x})
        assert in_sub == (not red)
