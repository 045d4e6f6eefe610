"""Base-valued duals of a bialgebroid and the dual bialgebroid construction.

A left bialgebroid has two distinguished duals of module maps into the base,
one for each of the two base actions carried by the target/source maps; a
right bialgebroid likewise.  Each dual is a subspace of the linear maps
A → base cut out by one intertwining constraint, and each carries a
convolution-style ring structure transported through the coproduct.

The distinguished one here is the ``lower-star`` dual of a left bialgebroid:
it becomes a right bialgebroid over the same base, with coproduct determined
by the pairing  ⟨φ' ⊗ φ'', a ⊗ b⟩ = φ'(a t_L(φ''(b)))  — the unique solution
of  ⟨γ̂(φ), a ⊗ b⟩ = φ(ab).  The pairing is invariant under the dual-side
junction exchange φŝ(l) ⊗ ψ ↔ φ ⊗ ψt̂(l) on the nose, because
(φŝ(l))(y) = φ(y t_L(l)) and (ψt̂(l))(b) = l ψ(b); solving the pairing
identity therefore determines γ̂ uniquely modulo the junction as soon as the
pairing kernel is no larger than the junction relations, which is asserted.
The other three duals are reached from it by the opposite/co-opposite
symmetries, which is both the construction and a useful cross-check: their
ring products come out opposite exactly the way the direct convolution
formulas swap their factors.
"""

from .exactfield import Matrix, Subspace
from .algebra import HOM, ANTI, Algebra, AlgebraMap, verify_algebra
from .bialgebroid import (
    LeftBialgebroid,
    RightBialgebroid,
    mul_map_first,
    mul_first_map_second,
    mul_second_map_first,
    mul_map_second_first,
)
from .report import Report

LOWER_STAR = "lower-star"    # φ(t_L(l) a) = φ(a) l   on a left bialgebroid
STAR_LOWER = "star-lower"    # φ(s_L(l) a) = l φ(a)   on a left bialgebroid
UPPER_STAR = "upper-star"    # φ(a s_R(r)) = φ(a) r   on a right bialgebroid
STAR_UPPER = "star-upper"    # φ(a t_R(r)) = r φ(a)   on a right bialgebroid

_LEFT_KINDS = (LOWER_STAR, STAR_LOWER)
_RIGHT_KINDS = (UPPER_STAR, STAR_UPPER)


class DualModule:
    """One of the four base-valued duals, as an explicit constraint subspace.

    Functionals are base-valued: a functional is a dim(base) × dim(total)
    matrix, flattened row-major into the ambient coordinate space.
    """

    def __init__(self, bgd, kind):
        if kind not in _LEFT_KINDS + _RIGHT_KINDS:
            raise ValueError(f"unknown dual kind {kind!r}")
        if kind in _LEFT_KINDS and not isinstance(bgd, LeftBialgebroid):
            raise ValueError(f"{kind} dual needs a left bialgebroid")
        if kind in _RIGHT_KINDS and not isinstance(bgd, RightBialgebroid):
            raise ValueError(f"{kind} dual needs a right bialgebroid")
        self.bgd = bgd
        self.kind = kind
        self.total = bgd.total
        self.base = bgd.base
        self.field = bgd.field
        self.space = self._solve_constraints()
        self.basis = [self._unflatten(row)
                      for row in self.space.basis.rows]

    def _unflatten(self, flat):
        dl, da = self.base.dim, self.total.dim
        rows = [flat[m * da:(m + 1) * da] for m in range(dl)]
        return Matrix(self.field, dl, da, rows)

    def _flatten(self, matrix):
        out = []
        for row in matrix.rows:
            out.extend(row)
        return tuple(out)

    def _solve_constraints(self):
        A, B = self.total, self.base
        da, dl = A.dim, B.dim
        zero = self.field.zero
        rows = []
        for lidx in range(dl):
            lvec = B.basis_vec(lidx)
            if self.kind == LOWER_STAR:
                mult = A.left_mult_matrix(self.bgd.t.apply(lvec))
            elif self.kind == STAR_LOWER:
                mult = A.left_mult_matrix(self.bgd.s.apply(lvec))
            elif self.kind == UPPER_STAR:
                mult = A.right_mult_matrix(self.bgd.s.apply(lvec))
            else:
                mult = A.right_mult_matrix(self.bgd.t.apply(lvec))
            for aidx in range(da):
                moved = mult.col(aidx)   # the acted-on algebra element
                for m in range(dl):
                    # equation: φ(moved)_m - (base action on φ(a))_m = 0
                    row = [zero] * (dl * da)
                    for i, c in enumerate(moved):
                        if c:
                            row[m * da + i] = row[m * da + i] + c
                    for mp in range(dl):
                        if self.kind in (LOWER_STAR, UPPER_STAR):
                            # φ(a) l  (multiply by l on the right)
                            c = B.table[mp][lidx].get(m, zero)
                        else:
                            # l φ(a)
                            c = B.table[lidx][mp].get(m, zero)
                        if c:
                            row[mp * da + aidx] = row[mp * da + aidx] - c
                    if any(row):
                        rows.append(tuple(row))
        if not rows:
            return Subspace.full(self.field, dl * da)
        m = Matrix.from_rows(self.field, rows, dl * da)
        return m.kernel()

    @property
    def dim(self):
        return self.space.dim

    def contains(self, matrix):
        return self.space.contains(self._flatten(matrix))

    def coords(self, matrix):
        return self.space.coords_of(self._flatten(matrix))

    def element(self, coords):
        dl, da = self.base.dim, self.total.dim
        acc = Matrix.zeros(self.field, dl, da)
        for c, mat in zip(coords, self.basis):
            if c:
                acc = acc + mat.scale(c)
        return acc

    def unit_matrix(self):
        """The convolution unit: the counit of the underlying bialgebroid."""
        return self.bgd.counit

    def product(self, phi, psi):
        """Convolution product of two functionals (base-valued matrices)."""
        A = self.total
        d = A.dim
        out_cols = []
        for aidx in range(d):
            if self.kind == LOWER_STAR:
                # (φψ)(a) = ψ(s_L(φ(a_(1))) a_(2))
                w = self.bgd.coproduct_lift(A.basis_vec(aidx))
                acc = self.base.zero_vec()
                for k in range(d):
                    block = w[k * d:(k + 1) * d]
                    if any(block):
                        moved = A.mul_vec(self.bgd.s.apply(phi.col(k)), block)
                        acc = tuple(x + y for x, y in zip(acc, psi.apply(moved)))
            elif self.kind == STAR_LOWER:
                # (φψ)(a) = ψ(t_L(φ(a_(2))) a_(1))
                w = self.bgd.coproduct_lift(A.basis_vec(aidx))
                acc = self.base.zero_vec()
                for k in range(d):
                    block = w[k * d:(k + 1) * d]
                    if any(block):
                        moved = A.mul_vec(self.bgd.t.apply(phi.apply(block)),
                                          A.basis_vec(k))
                        acc = tuple(x + y for x, y in zip(acc, psi.apply(moved)))
            elif self.kind == UPPER_STAR:
                # (φψ)(a) = φ(a^(2) t_R(ψ(a^(1))))
                w = self.bgd.coproduct_lift(A.basis_vec(aidx))
                acc = self.base.zero_vec()
                for k in range(d):
                    block = w[k * d:(k + 1) * d]
                    if any(block):
                        moved = A.mul_vec(block, self.bgd.t.apply(psi.col(k)))
                        acc = tuple(x + y for x, y in zip(acc, phi.apply(moved)))
            else:
                # (φψ)(a) = φ(a^(1) s_R(ψ(a^(2))))
                w = self.bgd.coproduct_lift(A.basis_vec(aidx))
                acc = self.base.zero_vec()
                for k in range(d):
                    block = w[k * d:(k + 1) * d]
                    if any(block):
                        moved = A.mul_vec(A.basis_vec(k),
                                          self.bgd.s.apply(psi.apply(block)))
                        acc = tuple(x + y for x, y in zip(acc, phi.apply(moved)))
            out_cols.append(acc)
        return Matrix.from_cols(self.field, out_cols, self.base.dim)

    def __repr__(self):
        return f"DualModule({self.kind}, dim {self.dim})"


# ---------------------------------------------------------------------------
# actions of functionals on the total algebra (used throughout the integral
# machinery) and transpose actions of the algebra on functionals


def act_lower_star(lb, avec, phi):
    """a ↼ φ = s_L(φ(a_(1))) a_(2), for φ in the lower-star dual."""
    return mul_map_first(lb.total, lb.s.matrix @ phi,
                         lb.coproduct_lift(avec))


def act_star_lower(lb, avec, phi):
    """a ⇂ φ = t_L(φ(a_(2))) a_(1), for φ in the star-lower dual."""
    return mul_map_second_first(lb.total, lb.t.matrix @ phi,
                                lb.coproduct_lift(avec))


def act_upper_star(rb, phi, avec):
    """φ ⇀ a = a^(2) t_R(φ(a^(1))), for φ in the upper-star dual."""
    return mul_second_map_first(rb.total, rb.t.matrix @ phi,
                                rb.coproduct_lift(avec))


def act_star_upper(rb, phi, avec):
    """φ ⇁ a = a^(1) s_R(φ(a^(2))), for φ in the star-upper dual."""
    return mul_first_map_second(rb.total, rb.s.matrix @ phi,
                                rb.coproduct_lift(avec))


def transpose_left(phi, algebra, avec):
    """a ⇀ φ: the functional b ↦ φ(b a)."""
    return phi @ algebra.right_mult_matrix(avec)


def transpose_right(phi, algebra, avec):
    """φ ↼ a: the functional b ↦ φ(a b)."""
    return phi @ algebra.left_mult_matrix(avec)


# ---------------------------------------------------------------------------
# the dual bialgebroid


class DualBialgebroid:
    """Bundle of one dual construction: the constraint module, its ring,
    the induced bialgebroid on it, and the construction report.

    The ring basis is the module's echelon basis, in order: the functional
    ``module.basis[i]`` is the ring's i-th basis element.
    """

    def __init__(self, module, ring, bgd, report):
        self.module = module
        self.ring = ring
        self.bgd = bgd
        self.report = report

    @property
    def ok(self):
        return self.report.passed and self.bgd is not None


def dual_lower_star(lb, name=None):
    """The lower-star dual of a left bialgebroid, as a right bialgebroid
    over the same base.

    The coproduct is the unique solution of the defining pairing identity
    ⟨γ̂(φ), a ⊗ b⟩ = φ(ab); uniqueness modulo the dual junction is asserted
    by checking that the pairing's kernel lies inside the junction relations.
    """
    name = name or f"{lb.name}_*"
    rep = Report(f"dual bialgebroid {name}")
    module = DualModule(lb, LOWER_STAR)
    A, L = lb.total, lb.base
    field = lb.field
    n = module.dim
    d = A.dim
    dl = L.dim

    # ring structure constants
    struct = {}
    closed_bad = []
    for i in range(n):
        for j in range(n):
            prod = module.product(module.basis[i], module.basis[j])
            coords = module.coords(prod)
            if coords is None:
                closed_bad.append(
                    f"f{i} * f{j} leaves the constraint subspace")
                continue
            for k, c in enumerate(coords):
                if c:
                    struct[(i, j, k)] = c
    rep.add("dual-closed", "convolution products stay in the dual",
            not closed_bad, closed_bad)

    unit_coords = module.coords(module.unit_matrix())
    rep.add("dual-unit-member", "the counit lies in the dual",
            unit_coords is not None,
            [] if unit_coords is not None else
            ["π is not a member of the constraint subspace"])

    if closed_bad or unit_coords is None:
        return DualBialgebroid(module, None, None, rep)

    ring = Algebra.from_struct(field, [f"f{i}" for i in range(n)], struct,
                               unit=unit_coords, name=name)
    rep.extend(verify_algebra(ring), prefix="ring-")
    if not rep.passed:
        return DualBialgebroid(module, ring, None, rep)

    # structure maps of the dual right bialgebroid over L:
    #   ŝ(l) = π_L((-) s_L(l)),  t̂(l) = l π_L(-),  π̂(φ) = φ(1)
    shat_cols, that_cols = [], []
    member_bad = []
    for lidx in range(dl):
        lvec = L.basis_vec(lidx)
        sl = lb.s.apply(lvec)
        cand = lb.counit @ A.right_mult_matrix(sl)
        coords = module.coords(cand)
        if coords is None:
            member_bad.append(f"ŝ({L.basis_names[lidx]}) is not in the dual")
            coords = (field.zero,) * n
        shat_cols.append(coords)
        cand = L.left_mult_matrix(lvec) @ lb.counit
        coords = module.coords(cand)
        if coords is None:
            member_bad.append(f"t̂({L.basis_names[lidx]}) is not in the dual")
            coords = (field.zero,) * n
        that_cols.append(coords)
    rep.add("dual-maps-member", "ŝ and t̂ land in the dual",
            not member_bad, member_bad)
    if member_bad:
        return DualBialgebroid(module, ring, None, rep)

    shat = AlgebraMap(L, ring, Matrix.from_cols(field, shat_cols, n), HOM, "ŝ")
    that = AlgebraMap(L, ring, Matrix.from_cols(field, that_cols, n), ANTI, "t̂")
    pihat = Matrix.from_cols(
        field, [module.basis[i].apply(A.unit) for i in range(n)], dl)

    # the coproduct, solved from the pairing identity
    #   ⟨γ̂(φ), a⊗b⟩ = φ(ab)  with  ⟨u⊗v, a⊗b⟩ = u(a t_L(v(b)))
    # pairing matrix: row index (a, b, m) over basis pairs of A and base
    # coordinates; column index (u, v) over basis pairs of the dual
    t_of_val = [[lb.t.apply(module.basis[v].col(bidx)) for bidx in range(d)]
                for v in range(n)]
    pairing_cols = []
    for u in range(n):
        for v in range(n):
            # column of values u(e_a · t_L(v(e_b)))
            col = []
            for aidx in range(d):
                avec = A.basis_vec(aidx)
                for bidx in range(d):
                    col.extend(module.basis[u].apply(
                        A.mul_vec(avec, t_of_val[v][bidx])))
            pairing_cols.append(tuple(col))
    pairing = Matrix.from_cols(field, pairing_cols, d * d * dl)

    rhs_cols = []
    for w in range(n):
        col = []
        for aidx in range(d):
            for bidx in range(d):
                prod = A.mul_vec(A.basis_vec(aidx), A.basis_vec(bidx))
                col.extend(module.basis[w].apply(prod))
        rhs_cols.append(tuple(col))
    rhs = Matrix.from_cols(field, rhs_cols, d * d * dl)

    sol = pairing.solve_matrix(rhs)
    rep.add("dual-coproduct-solvable",
            "the pairing identity for γ̂ has a solution", sol is not None,
            [] if sol is not None else
            ["no γ̂ satisfies ⟨γ̂(φ), a⊗b⟩ = φ(ab)"])
    if sol is None:
        return DualBialgebroid(module, ring, None, rep)

    rbd = RightBialgebroid(ring, L, shat, that, sol, pihat, name=name)

    # uniqueness of γ̂ modulo the dual junction: the pairing kernel must lie
    # inside the junction relation span
    kern = pairing.kernel()
    bad = []
    tspace = rbd.tensor_space
    for row in kern.basis.rows:
        if not tspace.is_zero_class(row):
            bad.append("a pairing-kernel vector is nonzero in the dual "
                       "tensor square: " + tspace.fmt(row))
    rep.add("dual-coproduct-wd",
            "γ̂ is unique modulo the dual junction relations", not bad, bad)
    return DualBialgebroid(module, ring, rbd, rep)


def _rebase(bgd, base, name):
    """Relabel a bialgebroid over a double-opposite base onto the original
    base object.

    A double opposite has the original structure constants, so only the
    label changes; the maps are rebuilt with the requested source object.
    """
    s = AlgebraMap(base, bgd.total, bgd.s.matrix, bgd.s.kind, bgd.s.name)
    t = AlgebraMap(base, bgd.total, bgd.t.matrix, bgd.t.kind, bgd.t.name)
    return type(bgd)(bgd.total, base, s, t, bgd.gamma_lift, bgd.counit,
                     name=name)


def dual_star_lower(lb, name=None):
    """The star-lower dual of a left bialgebroid: a right bialgebroid over
    the same base.

    The co-opposite of the parent turns the star-lower constraint and
    convolution into lower-star ones in the same factor order, so the inner
    construction is reused verbatim; a final co-opposite (relabelled back
    onto the original base, which the double opposite equals) restores the
    star-lower coproduct orientation.  That orientation is pinned
    operationally: with it, the four arrows of the duality square are
    bialgebroid isomorphisms on every catalog example.
    """
    name = name or f"{lb.name}_{{*}}"
    inner = dual_lower_star(lb.cop(), name=name)
    module = DualModule(lb, STAR_LOWER)
    if inner.bgd is None:
        return DualBialgebroid(module, inner.ring, None, inner.report)
    outer = _rebase(inner.bgd.cop(), lb.base, name)
    return DualBialgebroid(module, inner.ring, outer, inner.report)


def dual_upper_star(rb, name=None):
    """The upper-star dual of a right bialgebroid: a left bialgebroid over
    the same base, reached through the opposite.

    The opposite swaps the convolution factors relative to the direct
    upper-star formula; taking the opposite of the resulting right
    bialgebroid swaps them back, so the returned total ring multiplies by
    the direct formula.
    """
    name = name or f"{rb.name}^*"
    inner = dual_lower_star(rb.op(), name=name)
    module = DualModule(rb, UPPER_STAR)
    if inner.bgd is None:
        return DualBialgebroid(module, inner.ring, None, inner.report)
    outer = inner.bgd.op()
    return DualBialgebroid(module, outer.total, outer, inner.report)


def dual_star_upper(rb, name=None):
    """The star-upper dual of a right bialgebroid: a left bialgebroid over
    the same base, reached through the opposite co-opposite.

    As with the star-lower dual, a final co-opposite (relabelled onto the
    original base) fixes the coproduct orientation so the duality square's
    arrows are honest bialgebroid morphisms.
    """
    name = name or f"^*{rb.name}"
    inner = dual_lower_star(rb.op().cop(), name=name)
    module = DualModule(rb, STAR_UPPER)
    if inner.bgd is None:
        return DualBialgebroid(module, inner.ring, None, inner.report)
    outer = _rebase(inner.bgd.op().cop(), rb.base, name)
    return DualBialgebroid(module, outer.total, outer, inner.report)
