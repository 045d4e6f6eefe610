"""Balanced tensor products over declared base actions."""

import random

from algebroids.exactfield import RationalField
from algebroids.bimodtensor import (
    PRE,
    POST,
    ActionSpec,
    BalancedTensorSpace,
    Junction,
    plain_tensor_space,
)
from algebroids.algebra import tensor_vec

import pytest

QQ = RationalField()


def test_junction_kind_validation(m2):
    lb = m2.lb
    # the left-bialgebroid junction: right action by t (PRE, needs ANTI),
    # left action by s (PRE, needs HOM)
    Junction(ActionSpec(lb.t, PRE), ActionSpec(lb.s, PRE))
    # wrong kinds in either slot must be rejected
    with pytest.raises(ValueError):
        Junction(ActionSpec(lb.s, PRE), ActionSpec(lb.s, PRE))
    with pytest.raises(ValueError):
        Junction(ActionSpec(lb.t, PRE), ActionSpec(lb.t, PRE))
    # right-bialgebroid junction: right action by s (POST, HOM), left by t
    rb = m2.rb
    Junction(ActionSpec(rb.s, POST), ActionSpec(rb.t, POST))
    with pytest.raises(ValueError):
        Junction(ActionSpec(rb.t, POST), ActionSpec(rb.s, POST))


def test_m2_tensor_square_dimension(m2):
    space = m2.lb.tensor_space
    assert space.dim == 8
    assert space.relation_rank == 16 - 8


def test_m2_triple_dimension(m2):
    space = m2.lb.coassoc_space
    # A ⊗_L A ⊗_L A for the pair groupoid: composable triples
    assert space.dim == 16


def test_plain_tensor_space(kz2):
    A = kz2.total
    sp = plain_tensor_space([A, A])
    assert sp.dim == 4
    assert sp.relation_rank == 0


def test_project_lift_roundtrip(m2):
    space = m2.lb.tensor_space
    rng = random.Random(21)
    d = space.total_dim if hasattr(space, "total_dim") else 16
    for _ in range(20):
        w = tuple(QQ.of(rng.randrange(-3, 4)) for _ in range(16))
        q = space.project(w)
        # lift of the class is equal to w modulo relations
        assert space.equal(space.lift(q), w)
        # projecting again is stable
        assert space.project(space.lift(q)) == q


def test_normal_form_idempotent(m2):
    space = m2.lb.tensor_space
    rng = random.Random(22)
    for _ in range(10):
        w = tuple(QQ.of(rng.randrange(-3, 4)) for _ in range(16))
        nf = space.normal_form(w)
        assert space.normal_form(nf) == nf
        assert space.equal(nf, w)


def test_projection_section_matrices(m2):
    space = m2.lb.tensor_space
    p = space.projection_matrix()
    s = space.section_matrix()
    assert (p @ s).is_identity()


def test_relations_die_in_quotient(m2):
    lb = m2.lb
    A = lb.total
    L = lb.base
    space = lb.tensor_space
    rng = random.Random(23)
    for _ in range(20):
        a = tuple(QQ.of(rng.randrange(-2, 3)) for _ in range(A.dim))
        b = tuple(QQ.of(rng.randrange(-2, 3)) for _ in range(A.dim))
        lidx = rng.randrange(L.dim)
        tl = lb.t.apply(L.basis_vec(lidx))
        sl = lb.s.apply(L.basis_vec(lidx))
        # (t(l) a) ⊗ b  ~  a ⊗ (s(l) b)
        left = tensor_vec(A.dim, A.mul_vec(tl, a), b)
        right = tensor_vec(A.dim, a, A.mul_vec(sl, b))
        assert space.is_zero_class(tuple(x - y for x, y in
                                         zip(left, right)))
        assert space.equal(left, right)


def test_permuted_basis_same_dimension(qq):
    # rebuild M3's tensor square with a shuffled basis order: the quotient
    # dimension is basis independent
    from algebroids.catalog import pair_groupoid_hopf_algebroid
    import random as _r

    h = pair_groupoid_hopf_algebroid(3, qq)
    base_dim = h.lb.tensor_space.dim
    assert base_dim == 27

    from algebroids.exactfield import Matrix
    from algebroids.algebra import Algebra, AlgebraMap, HOM, ANTI
    from algebroids.bialgebroid import LeftBialgebroid

    A = h.total
    perm = list(range(A.dim))
    _r.Random(99).shuffle(perm)
    inv = [perm.index(i) for i in range(A.dim)]
    names = [A.basis_names[perm[i]] for i in range(A.dim)]
    struct = {}
    for i in range(A.dim):
        for j in range(A.dim):
            for k, val in A.table[perm[i]][perm[j]].items():
                struct[(i, j, inv[k])] = val
    A2 = Algebra.from_struct(qq, names, struct, name="M3-shuffled")
    s_cols = [tuple(h.lb.s.matrix.col(j)[perm[i]] for i in range(A.dim))
              for j in range(h.lb.base.dim)]
    s2 = AlgebraMap(h.lb.base, A2,
                    Matrix.from_cols(qq, s_cols, A.dim), HOM, "s")
    t2 = s2.with_kind(ANTI)
    junction = Junction(ActionSpec(t2, PRE), ActionSpec(s2, PRE))
    space = BalancedTensorSpace([A2, A2], [junction])
    assert space.dim == base_dim
