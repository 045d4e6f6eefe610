"""Worked examples: groups, characters, and the stock of verified fixtures.

Everything here is plain constructive data — multiplication tables, group
characters, matrix units — assembled into the structures the rest of the
package analyzes.  The fixtures double as regression anchors: each one is
expected to pass its full verification report.
"""

import itertools

from .exactfield import Matrix
from .algebra import HOM, ANTI, Algebra, AlgebraMap
from .bialgebroid import LeftBialgebroid, RightBialgebroid
from .hopfcore import HopfAlgebroid, reconstruct_right


class FiniteGroup:
    """A finite group given by its multiplication table."""

    def __init__(self, names, table, name="G"):
        self.names = list(names)
        self.table = [list(row) for row in table]
        self.name = name
        n = len(self.names)
        if len(self.table) != n or any(len(r) != n for r in self.table):
            raise ValueError("multiplication table has wrong shape")
        self.identity = None
        for e in range(n):
            if all(self.table[e][g] == g == self.table[g][e]
                   for g in range(n)):
                self.identity = e
                break
        if self.identity is None:
            raise ValueError("no identity element")
        self.inv = [None] * n
        for g in range(n):
            for h in range(n):
                if self.table[g][h] == self.identity:
                    self.inv[g] = h
                    break
            if self.inv[g] is None or \
                    self.table[self.inv[g]][g] != self.identity:
                raise ValueError(f"element {self.names[g]} has no inverse")
        for a in range(n):
            for b in range(n):
                for c in range(n):
                    if self.table[self.table[a][b]][c] != \
                            self.table[a][self.table[b][c]]:
                        raise ValueError("multiplication is not associative")

    @property
    def order(self):
        return len(self.names)

    def mul(self, g, h):
        return self.table[g][h]

    def inverse(self, g):
        return self.inv[g]

    @classmethod
    def from_table(cls, names, table, name="G"):
        return cls(names, table, name)

    @classmethod
    def cyclic(cls, n):
        names = ["1"] + [f"g{'' if k == 1 else k}" for k in range(1, n)]
        table = [[(i + j) % n for j in range(n)] for i in range(n)]
        return cls(names, table, name=f"Z{n}")

    @classmethod
    def symmetric(cls, n):
        perms = sorted(itertools.permutations(range(n)))
        index = {p: i for i, p in enumerate(perms)}
        table = [[index[tuple(p[q[k]] for k in range(n))] for q in perms]
                 for p in perms]
        names = [_cycle_notation(p) for p in perms]
        return cls(names, table, name=f"S{n}")

    def __repr__(self):
        return f"FiniteGroup({self.name}, order {self.order})"


def _cycle_notation(perm):
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start] or perm[start] == start:
            seen[start] = True
            continue
        cyc = [start]
        seen[start] = True
        k = perm[start]
        while k != start:
            cyc.append(k)
            seen[k] = True
            k = perm[k]
        cycles.append("(" + " ".join(str(i + 1) for i in cyc) + ")")
    return "".join(cycles) if cycles else "id"


class Character:
    """A group character with values in the multiplicative group of a field."""

    def __init__(self, group, field, values):
        self.group = group
        self.field = field
        self.values = tuple(values)
        if len(self.values) != group.order:
            raise ValueError("one value per group element required")
        for g in range(group.order):
            for h in range(group.order):
                if self.values[g] * self.values[h] != \
                        self.values[group.mul(g, h)]:
                    raise ValueError("values do not define a character")
        if not self.values[group.identity]:
            raise ValueError("character vanishes at the identity")

    @classmethod
    def trivial(cls, group, field):
        return cls(group, field, [field.one] * group.order)

    @classmethod
    def sign(cls, group, field):
        """The parity character of a symmetric group built by
        ``FiniteGroup.symmetric`` (order of an element decides nothing; we
        recover parity from the cycle structure encoded in the names)."""
        vals = []
        for nm in group.names:
            if nm == "id":
                vals.append(field.one)
                continue
            parity = 0
            for chunk in nm[1:-1].split(")("):
                parity += len(chunk.split()) - 1
            vals.append(field.one if parity % 2 == 0 else -field.one)
        return cls(group, field, vals)

    @classmethod
    def cyclic_power(cls, group, field, root):
        """χ(g^k) = root^k on a cyclic group listed in power order."""
        vals = [field.one]
        for _ in range(1, group.order):
            vals.append(vals[-1] * root)
        if vals[-1] * root != field.one:
            raise ValueError("root is not an n-th root of unity")
        return cls(group, field, vals)

    def __call__(self, g):
        return self.values[g]


# ---------------------------------------------------------------------------
# algebras and Hopf algebroids from groups


def group_algebra(group, field, name=None):
    n = group.order
    struct = {(i, j, group.mul(i, j)): field.one
              for i in range(n) for j in range(n)}
    unit = tuple(field.one if i == group.identity else field.zero
                 for i in range(n))
    return Algebra.from_struct(field, group.names, struct, unit=unit,
                               name=name or f"k[{group.name}]")


def scalar_base(field, name="k"):
    """The one-dimensional base ring."""
    return Algebra.from_struct(field, ["1"], {(0, 0, 0): field.one},
                               name=name)


def group_hopf_algebroid(group, field, name=None):
    """The group algebra as a Hopf algebroid over the scalar base:
    grouplike coproduct, augmentation counit, inversion antipode."""
    A = group_algebra(group, field, name=name)
    k = scalar_base(field)
    n = group.order
    inc = AlgebraMap(k, A, Matrix.from_cols(field, [A.unit], n), HOM, "s")
    inct = inc.with_kind(ANTI)
    cols = []
    for g in range(n):
        v = [field.zero] * (n * n)
        v[g * n + g] = field.one
        cols.append(tuple(v))
    gamma = Matrix.from_cols(field, cols, n * n)
    counit = Matrix.from_rows(field, [tuple(field.one for _ in range(n))], n)
    lb = LeftBialgebroid(A, k, inc, inct, gamma, counit,
                         name=f"{A.name}_L")
    rb = RightBialgebroid(A, k, inc, inct, gamma, counit,
                          name=f"{A.name}_R")
    s_cols = [A.basis_vec(group.inverse(g)) for g in range(n)]
    antipode = Matrix.from_cols(field, s_cols, n)
    return HopfAlgebroid(lb, rb, antipode, name=A.name)


def character_twisted_hopf(group, field, chi, name=None):
    """The group algebra with the character-deformed antipode
    S(g) = χ(g) g⁻¹; the right-handed structure is reconstructed from it."""
    h0 = group_hopf_algebroid(group, field)
    n = group.order
    s_cols = [tuple((chi(g) if i == group.inverse(g) else field.zero)
                    for i in range(n)) for g in range(n)]
    antipode = Matrix.from_cols(field, s_cols, n)
    h = reconstruct_right(h0.lb, antipode)
    h.name = name or f"{h0.lb.total.name}_χ"
    return h


def pair_groupoid_hopf_algebroid(n, field, name=None):
    """The full matrix algebra as the pair-groupoid Hopf algebroid over the
    diagonal base: γ(e_ij) = e_ij ⊗ e_ij, π_L(e_ij) = d_i, S = transpose."""
    struct = {}
    for i in range(n):
        for j in range(n):
            for l in range(n):
                struct[(n * i + j, n * j + l, n * i + l)] = field.one
    names = [f"e{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    A = Algebra.from_struct(field, names, struct,
                            name=name or f"M{n}")
    L = Algebra.from_struct(
        field, [f"d{i + 1}" for i in range(n)],
        {(i, i, i): field.one for i in range(n)}, name=f"k^{n}")
    d = n * n
    s_cols = [A.basis_vec(n * i + i) for i in range(n)]
    smap = AlgebraMap(L, A, Matrix.from_cols(field, s_cols, d), HOM, "s")
    tmap = smap.with_kind(ANTI)
    cols = []
    for idx in range(d):
        v = [field.zero] * (d * d)
        v[idx * d + idx] = field.one
        cols.append(tuple(v))
    gamma = Matrix.from_cols(field, cols, d * d)
    piL_rows = [tuple(field.one if idx // n == i else field.zero
                      for idx in range(d)) for i in range(n)]
    piL = Matrix.from_rows(field, piL_rows, d)
    lb = LeftBialgebroid(A, L, smap, tmap, gamma, piL, name=f"{A.name}_L")
    piR_rows = [tuple(field.one if idx % n == j else field.zero
                      for idx in range(d)) for j in range(n)]
    piR = Matrix.from_rows(field, piR_rows, d)
    rb = RightBialgebroid(A, L, smap, tmap, gamma, piR, name=f"{A.name}_R")
    transpose_cols = [A.basis_vec(n * (idx % n) + idx // n)
                      for idx in range(d)]
    antipode = Matrix.from_cols(field, transpose_cols, d)
    return HopfAlgebroid(lb, rb, antipode, name=A.name)


def function_algebra_hopf(group, field, name=None):
    """Functions on a finite group: pointwise product, convolution-dual
    coproduct γ(δ_g) = Σ_{hk=g} δ_h ⊗ δ_k, counit = evaluation at the
    identity, antipode δ_g ↦ δ_{g⁻¹}."""
    n = group.order
    names = [f"δ_{group.names[g]}" for g in range(n)]
    struct = {(g, g, g): field.one for g in range(n)}
    A = Algebra.from_struct(field, names, struct,
                            name=name or f"k^{group.name}")
    k = scalar_base(field)
    inc = AlgebraMap(k, A, Matrix.from_cols(field, [A.unit], n), HOM, "s")
    inct = inc.with_kind(ANTI)
    cols = []
    for g in range(n):
        v = [field.zero] * (n * n)
        for h in range(n):
            for k2 in range(n):
                if group.mul(h, k2) == g:
                    v[h * n + k2] = field.one
        cols.append(tuple(v))
    gamma = Matrix.from_cols(field, cols, n * n)
    counit = Matrix.from_rows(
        field, [tuple(field.one if g == group.identity else field.zero
                      for g in range(n))], n)
    lb = LeftBialgebroid(A, k, inc, inct, gamma, counit, name=f"{A.name}_L")
    rb = RightBialgebroid(A, k, inc, inct, gamma, counit, name=f"{A.name}_R")
    antipode = Matrix.from_cols(
        field, [A.basis_vec(group.inverse(g)) for g in range(n)], n)
    return HopfAlgebroid(lb, rb, antipode, name=A.name)


# ---------------------------------------------------------------------------
# weak Hopf algebras


def group_weak_hopf(group, field, name=None):
    """The group algebra as a (trivially weak) Hopf algebra over k:
    Δ(g) = g ⊗ g, ε = 1, S(g) = g⁻¹."""
    from .twistlab import WeakHopfAlgebra
    A = group_algebra(group, field, name=name)
    n = group.order
    cols = []
    for g in range(n):
        v = [field.zero] * (n * n)
        v[g * n + g] = field.one
        cols.append(tuple(v))
    delta = Matrix.from_cols(field, cols, n * n)
    eps = Matrix.from_rows(field, [tuple(field.one for _ in range(n))], n)
    antipode = Matrix.from_cols(
        field, [A.basis_vec(group.inverse(g)) for g in range(n)], n)
    return WeakHopfAlgebra(A, delta, eps, antipode, name=f"W({A.name})")


def pair_groupoid_weak_hopf(n, field, name=None):
    """The full matrix algebra as a genuinely weak Hopf algebra:
    Δ(e_ij) = e_ij ⊗ e_ij, ε ≡ 1, S = transpose.  Δ(1) ≠ 1 ⊗ 1 for
    n > 1, so this is not a Hopf algebra."""
    from .twistlab import WeakHopfAlgebra
    struct = {}
    for i in range(n):
        for j in range(n):
            for l in range(n):
                struct[(n * i + j, n * j + l, n * i + l)] = field.one
    names = [f"e{i + 1}{j + 1}" for i in range(n) for j in range(n)]
    A = Algebra.from_struct(field, names, struct, name=name or f"M{n}")
    d = n * n
    cols = []
    for b in range(d):
        v = [field.zero] * (d * d)
        v[b * d + b] = field.one
        cols.append(tuple(v))
    delta = Matrix.from_cols(field, cols, d * d)
    eps = Matrix.from_rows(field, [tuple(field.one for _ in range(d))], d)
    transpose_cols = [A.basis_vec(n * (idx % n) + idx // n)
                      for idx in range(d)]
    antipode = Matrix.from_cols(field, transpose_cols, d)
    return WeakHopfAlgebra(A, delta, eps, antipode, name=f"W(M{n})")


# ---------------------------------------------------------------------------
# canonical nondegenerate integrals


def group_sum_integral(h):
    """ℓ = Σ_g g, the canonical two-sided integral of a group algebra."""
    A = h.total
    return tuple(h.field.one for _ in range(A.dim))


def matrix_sum_integral(h):
    """ℓ = Σ_ij e_ij for the pair-groupoid fixture."""
    A = h.total
    return tuple(h.field.one for _ in range(A.dim))


def delta_identity_integral(group, h):
    """ℓ = δ_e for the function-algebra fixture."""
    A = h.total
    return A.basis_vec(group.identity)


# ---------------------------------------------------------------------------
# the fixture stock


def all_fixtures(field=None):
    """The standing catalog: name, Hopf algebroid, and — where the canonical
    one is on file — a nondegenerate left integral."""
    from .exactfield import RationalField, PrimeField
    field = field or RationalField()
    out = []
    z2 = FiniteGroup.cyclic(2)
    z3 = FiniteGroup.cyclic(3)
    s3 = FiniteGroup.symmetric(3)
    h = group_hopf_algebroid(z2, field)
    out.append({"name": "kz2", "hopf": h,
                "integral": group_sum_integral(h)})
    sign2 = Character(z2, field, [field.one, -field.one])
    ht = character_twisted_hopf(z2, field, sign2)
    out.append({"name": "kz2-twisted", "hopf": ht,
                "integral": group_sum_integral(ht)})
    h = group_hopf_algebroid(z3, field)
    out.append({"name": "kz3", "hopf": h,
                "integral": group_sum_integral(h)})
    h = group_hopf_algebroid(s3, field)
    out.append({"name": "ks3", "hopf": h,
                "integral": group_sum_integral(h)})
    h = pair_groupoid_hopf_algebroid(2, field)
    out.append({"name": "m2-groupoid", "hopf": h,
                "integral": matrix_sum_integral(h)})
    h = pair_groupoid_hopf_algebroid(3, field)
    out.append({"name": "m3-groupoid", "hopf": h,
                "integral": matrix_sum_integral(h)})
    h = function_algebra_hopf(s3, field)
    out.append({"name": "fn-s3", "hopf": h,
                "integral": delta_identity_integral(s3, h)})
    gf7 = PrimeField(7)
    ht = character_twisted_hopf(z3, gf7,
                                Character.cyclic_power(z3, gf7, gf7.of(2)))
    out.append({"name": "gf7-kz3-twisted", "hopf": ht,
                "integral": group_sum_integral(ht)})
    return out
