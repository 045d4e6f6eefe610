"""Finite-dimensional unital associative algebras presented by structure constants.

An Algebra fixes a distinguished basis; elements are coefficient tuples in
that basis.  Maps between algebras are matrices tagged as multiplicative
("hom") or anti-multiplicative ("anti"), which keeps source/target bookkeeping
honest when opposites get involved.
"""

from .exactfield import Matrix, vec_add, vec_is_zero, unit_vector
from .report import Report

HOM = "hom"
ANTI = "anti"


class Algebra:
    """A unital associative algebra with a fixed basis.

    The multiplication table is stored sparsely: ``table[i][j]`` is a dict
    mapping a basis index ``k`` to the coefficient of ``e_k`` in ``e_i e_j``.
    """

    def __init__(self, field, basis_names, table, unit, name="A"):
        self.field = field
        self.dim = len(basis_names)
        self.basis_names = tuple(basis_names)
        self.table = table
        self.unit = tuple(unit)
        self.name = name
        if len(self.unit) != self.dim:
            raise ValueError("unit vector length mismatch")

    # -- construction -------------------------------------------------------

    @classmethod
    def from_struct(cls, field, basis_names, struct, unit=None, name="A"):
        """Build from sparse structure constants {(i, j, k): scalar}.

        If no unit vector is supplied, the (unique) two-sided unit is solved
        for; a ValueError is raised when none exists.
        """
        dim = len(basis_names)
        table = [[{} for _ in range(dim)] for _ in range(dim)]
        for (i, j, k), val in struct.items():
            c = field.of(val)
            if c:
                table[i][j][k] = c
        table = tuple(tuple(row) for row in table)
        if unit is None:
            unit = cls._solve_unit(field, dim, table)
            if unit is None:
                raise ValueError(f"algebra {name!r} has no two-sided unit")
        else:
            unit = tuple(field.of(x) for x in unit)
        return cls(field, basis_names, table, unit, name)

    @staticmethod
    def _solve_unit(field, dim, table):
        # rows: for each j, k two equations sum_i u_i c_{ijk} = d_{jk} and
        # sum_i u_i c_{jik} = d_{jk}
        zero, one = field.zero, field.one
        rows, rhs = [], []
        for j in range(dim):
            for k in range(dim):
                left = [table[i][j].get(k, zero) for i in range(dim)]
                right = [table[j][i].get(k, zero) for i in range(dim)]
                target = one if j == k else zero
                rows.append(left)
                rhs.append(target)
                rows.append(right)
                rhs.append(target)
        m = Matrix.from_rows(field, rows, dim)
        return m.solve(tuple(rhs))

    # -- basics --------------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Algebra)
            and self.field == other.field
            and self.dim == other.dim
            and self.table == other.table
            and self.unit == other.unit
        )

    def __repr__(self):
        return f"Algebra({self.name!r}, dim {self.dim} over {self.field!r})"

    def zero_vec(self):
        return (self.field.zero,) * self.dim

    def basis_vec(self, i):
        return unit_vector(self.field, self.dim, i)

    def mul_vec(self, u, v):
        """Product of two coefficient vectors."""
        out = [self.field.zero] * self.dim
        for i, a in enumerate(u):
            if not a:
                continue
            row = self.table[i]
            for j, b in enumerate(v):
                if not b:
                    continue
                ab = a * b
                for k, c in row[j].items():
                    out[k] = out[k] + ab * c
        return tuple(out)

    def element(self, coeffs):
        return AlgebraElement(self, tuple(self.field.of(c) for c in coeffs))

    def basis_element(self, i):
        return AlgebraElement(self, self.basis_vec(i))

    def one(self):
        return AlgebraElement(self, self.unit)

    def basis_elements(self):
        return [self.basis_element(i) for i in range(self.dim)]

    def left_mult_matrix(self, u):
        """Matrix of x -> u * x in the fixed basis."""
        cols = [self.mul_vec(u, self.basis_vec(j)) for j in range(self.dim)]
        return Matrix.from_cols(self.field, cols, self.dim)

    def right_mult_matrix(self, u):
        """Matrix of x -> x * u in the fixed basis."""
        cols = [self.mul_vec(self.basis_vec(j), u) for j in range(self.dim)]
        return Matrix.from_cols(self.field, cols, self.dim)

    def is_commutative(self):
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                if (self.mul_vec(self.basis_vec(i), self.basis_vec(j))
                        != self.mul_vec(self.basis_vec(j), self.basis_vec(i))):
                    return False
        return True

    # -- formatting -----------------------------------------------------------

    def fmt_vec(self, vec):
        """Human-readable form of a coefficient vector, e.g. ``e - 2*t``."""
        terms = []
        for i, c in enumerate(vec):
            if not c:
                continue
            name = self.basis_names[i]
            cs = self.field.fmt(c)
            if cs == "1":
                term = name
            elif cs == "-1":
                term = f"-{name}"
            elif "/" in cs or cs.startswith("-"):
                term = f"({cs})*{name}"
            else:
                term = f"{cs}*{name}"
            terms.append(term)
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            if t.startswith("-"):
                out += " - " + t[1:]
            elif t.startswith("(-"):
                out += " + " + t
            else:
                out += " + " + t
        return out


class AlgebraElement:
    """A coefficient vector bound to its algebra, with arithmetic sugar."""

    __slots__ = ("algebra", "vec")

    def __init__(self, algebra, vec):
        self.algebra = algebra
        self.vec = tuple(vec)

    def __add__(self, other):
        return AlgebraElement(self.algebra, vec_add(self.vec, other.vec))

    def __sub__(self, other):
        return AlgebraElement(self.algebra,
                              tuple(a - b for a, b in zip(self.vec, other.vec)))

    def __neg__(self):
        return AlgebraElement(self.algebra, tuple(-a for a in self.vec))

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return AlgebraElement(self.algebra,
                                  self.algebra.mul_vec(self.vec, other.vec))
        c = self.algebra.field.of(other)
        return AlgebraElement(self.algebra, tuple(c * a for a in self.vec))

    def __rmul__(self, other):
        c = self.algebra.field.of(other)
        return AlgebraElement(self.algebra, tuple(c * a for a in self.vec))

    def __eq__(self, other):
        return (isinstance(other, AlgebraElement)
                and self.algebra == other.algebra and self.vec == other.vec)

    def __hash__(self):
        return hash(self.vec)

    def is_zero(self):
        return vec_is_zero(self.vec)

    def __repr__(self):
        return self.algebra.fmt_vec(self.vec)


def opposite(algebra):
    """The opposite algebra: same space, reversed multiplication."""
    table = tuple(tuple(algebra.table[j][i] for j in range(algebra.dim))
                  for i in range(algebra.dim))
    if algebra.name.endswith("^op"):
        name = algebra.name[:-3]
    else:
        name = algebra.name + "^op"
    return Algebra(algebra.field, algebra.basis_names, table, algebra.unit, name)


def verify_algebra(algebra, report_title=None):
    """Check unit laws and associativity on all basis triples."""
    rep = Report(report_title or f"algebra {algebra.name}")
    d = algebra.dim

    bad = []
    for i in range(d):
        e = algebra.basis_vec(i)
        if algebra.mul_vec(algebra.unit, e) != e:
            bad.append(f"1*{algebra.basis_names[i]} != {algebra.basis_names[i]}")
        if algebra.mul_vec(e, algebra.unit) != e:
            bad.append(f"{algebra.basis_names[i]}*1 != {algebra.basis_names[i]}")
    rep.add("unit", "two-sided unit law on basis", not bad, bad)

    bad = []
    for i in range(d):
        for j in range(d):
            ij = algebra.mul_vec(algebra.basis_vec(i), algebra.basis_vec(j))
            for k in range(d):
                lhs = algebra.mul_vec(ij, algebra.basis_vec(k))
                jk = algebra.mul_vec(algebra.basis_vec(j), algebra.basis_vec(k))
                rhs = algebra.mul_vec(algebra.basis_vec(i), jk)
                if lhs != rhs:
                    ni, nj, nk = (algebra.basis_names[x] for x in (i, j, k))
                    bad.append(
                        f"({ni}*{nj})*{nk} = {algebra.fmt_vec(lhs)} but "
                        f"{ni}*({nj}*{nk}) = {algebra.fmt_vec(rhs)}")
    rep.add("assoc", "associativity on basis triples", not bad, bad)
    return rep


class AlgebraMap:
    """A linear map between algebras tagged hom (multiplicative) or anti.

    The matrix sends source coordinates to target coordinates.
    """

    def __init__(self, source, target, matrix, kind=HOM, name="f"):
        if kind not in (HOM, ANTI):
            raise ValueError(f"map kind must be {HOM!r} or {ANTI!r}")
        if matrix.nrows != target.dim or matrix.ncols != source.dim:
            raise ValueError("map matrix shape mismatch")
        self.source = source
        self.target = target
        self.matrix = matrix
        self.kind = kind
        self.name = name

    @classmethod
    def from_images(cls, source, target, images, kind=HOM, name="f"):
        """Build from the images of the source basis vectors."""
        cols = [tuple(target.field.of(c) for c in img) for img in images]
        if len(cols) != source.dim:
            raise ValueError("need one image per source basis vector")
        m = Matrix.from_cols(target.field, cols, target.dim)
        return cls(source, target, m, kind, name)

    @classmethod
    def identity(cls, algebra, name="id"):
        return cls(algebra, algebra,
                   Matrix.identity(algebra.field, algebra.dim), HOM, name)

    def __call__(self, vec):
        if isinstance(vec, AlgebraElement):
            return AlgebraElement(self.target, self.matrix.apply(vec.vec))
        return self.matrix.apply(vec)

    def apply(self, vec):
        return self.matrix.apply(vec)

    def compose(self, other):
        """self after other (so ``other`` runs first)."""
        if other.target.dim != self.source.dim:
            raise ValueError("composition shape mismatch")
        kind = HOM if self.kind == other.kind else ANTI
        return AlgebraMap(other.source, self.target, self.matrix @ other.matrix,
                          kind, f"{self.name}∘{other.name}")

    def is_bijective(self):
        return (self.source.dim == self.target.dim
                and self.matrix.rank() == self.source.dim)

    def inverse(self):
        inv = self.matrix.inverse()
        if inv is None:
            return None
        return AlgebraMap(self.target, self.source, inv, self.kind,
                          f"{self.name}^-1")

    def with_kind(self, kind, name=None):
        return AlgebraMap(self.source, self.target, self.matrix, kind,
                          name or self.name)

    def into_opposite(self, opp_target=None):
        """The same linear map viewed into the opposite target algebra.

        Multiplicative maps become anti-multiplicative and vice versa.
        """
        tgt = opp_target if opp_target is not None else opposite(self.target)
        kind = ANTI if self.kind == HOM else HOM
        return AlgebraMap(self.source, tgt, self.matrix, kind, self.name)

    def from_opposite_source(self, opp_source=None):
        """The same linear map viewed from the opposite source algebra."""
        src = opp_source if opp_source is not None else opposite(self.source)
        kind = ANTI if self.kind == HOM else HOM
        return AlgebraMap(src, self.target, self.matrix, kind, self.name)

    def __eq__(self, other):
        return (isinstance(other, AlgebraMap)
                and self.source == other.source and self.target == other.target
                and self.matrix == other.matrix and self.kind == other.kind)

    def __repr__(self):
        arrow = "→" if self.kind == HOM else "→(anti)"
        return f"{self.name}: {self.source.name} {arrow} {self.target.name}"


def verify_map(f, report_title=None):
    """Check that f preserves the unit and is (anti)multiplicative on basis pairs."""
    rep = Report(report_title or f"map {f.name}")
    src, tgt = f.source, f.target

    img_one = f.apply(src.unit)
    ok = img_one == tgt.unit
    rep.add("map-unit", f"{f.name}(1) = 1",
            ok, [] if ok else [f"{f.name}(1) = {tgt.fmt_vec(img_one)}"])

    bad = []
    for i in range(src.dim):
        fi = f.apply(src.basis_vec(i))
        for j in range(src.dim):
            fj = f.apply(src.basis_vec(j))
            lhs = f.apply(src.mul_vec(src.basis_vec(i), src.basis_vec(j)))
            if f.kind == HOM:
                rhs = tgt.mul_vec(fi, fj)
            else:
                rhs = tgt.mul_vec(fj, fi)
            if lhs != rhs:
                ni, nj = src.basis_names[i], src.basis_names[j]
                bad.append(
                    f"{f.name}({ni}*{nj}) = {tgt.fmt_vec(lhs)} but expected "
                    f"{tgt.fmt_vec(rhs)}")
    word = "multiplicative" if f.kind == HOM else "anti-multiplicative"
    rep.add("map-mult", f"{f.name} is {word} on basis pairs", not bad, bad)
    return rep


# ---------------------------------------------------------------------------
# tensor-square helpers (coordinates: index i*dimB + j for e_i ⊗ f_j)


def tensor_vec(dim_b, u, v):
    """Kronecker product of coefficient vectors: (u ⊗ v)[i*dim_b + j] = u_i v_j."""
    out = []
    for a in u:
        if a:
            out.extend(a * b for b in v)
        else:
            zero = a  # a is the field zero here
            out.extend(zero for _ in v)
    return tuple(out)


def tensor_entries(u, v):
    """Sparse Kronecker product as {(i, j): u_i * v_j}, nonzeros only."""
    out = {}
    for i, a in enumerate(u):
        if not a:
            continue
        for j, b in enumerate(v):
            if b:
                out[(i, j)] = a * b
    return out


def tensor_square_product(alg_a, alg_b, w1, w2):
    """Componentwise product on A ⊗ B: (a⊗b)(a'⊗b') = aa' ⊗ bb'."""
    da, db = alg_a.dim, alg_b.dim
    field = alg_a.field
    out = [field.zero] * (da * db)
    nz1 = [(idx, c) for idx, c in enumerate(w1) if c]
    nz2 = [(idx, c) for idx, c in enumerate(w2) if c]
    for idx1, c1 in nz1:
        i1, j1 = divmod(idx1, db)
        row_a = alg_a.table[i1]
        row_b = alg_b.table[j1]
        for idx2, c2 in nz2:
            i2, j2 = divmod(idx2, db)
            c = c1 * c2
            prod_a = row_a[i2]
            prod_b = row_b[j2]
            for ka, ca in prod_a.items():
                cca = c * ca
                base = ka * db
                for kb, cb in prod_b.items():
                    out[base + kb] = out[base + kb] + cca * cb
    return tuple(out)


def tensor_apply(m1, m2, vec):
    """Apply m1 ⊗ m2 to a vector in A⊗B coordinates without forming the Kronecker.

    ``vec`` has length m1.ncols * m2.ncols; the result has length
    m1.nrows * m2.nrows.  Two-stage contraction keeps this at O(n^3).
    """
    n1_in, n2_in = m1.ncols, m2.ncols
    n1_out, n2_out = m1.nrows, m2.nrows
    if len(vec) != n1_in * n2_in:
        raise ValueError("tensor_apply vector length mismatch")
    field = m1.field
    zero = field.zero
    # stage 1: contract the second index with m2
    mid = [[zero] * n2_out for _ in range(n1_in)]
    for i in range(n1_in):
        seg = vec[i * n2_in:(i + 1) * n2_in]
        if any(seg):
            mid[i] = list(m2.apply(seg))
    # stage 2: contract the first index with m1
    out = [zero] * (n1_out * n2_out)
    for i in range(n1_in):
        row_mid = mid[i]
        if not any(row_mid):
            continue
        for k in range(n1_out):
            c = m1.rows[k][i]
            if not c:
                continue
            base = k * n2_out
            for l, x in enumerate(row_mid):
                if x:
                    out[base + l] = out[base + l] + c * x
    return tuple(out)


def flip_tensor(dim_a, dim_b, vec):
    """Swap tensor factors: e_i ⊗ f_j  ->  f_j ⊗ e_i."""
    if len(vec) != dim_a * dim_b:
        raise ValueError("flip_tensor length mismatch")
    out = [None] * (dim_a * dim_b)
    for i in range(dim_a):
        for j in range(dim_b):
            out[j * dim_a + i] = vec[i * dim_b + j]
    return tuple(out)


def fmt_tensor(alg_a, alg_b, vec):
    """Readable form of a vector in A ⊗ B, e.g. ``e⊗t - t⊗e``."""
    db = alg_b.dim
    terms = []
    for idx, c in enumerate(vec):
        if not c:
            continue
        i, j = divmod(idx, db)
        name = f"{alg_a.basis_names[i]}⊗{alg_b.basis_names[j]}"
        cs = alg_a.field.fmt(c)
        if cs == "1":
            term = name
        elif cs == "-1":
            term = f"-{name}"
        elif "/" in cs or cs.startswith("-"):
            term = f"({cs})*{name}"
        else:
            term = f"{cs}*{name}"
        terms.append(term)
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        if t.startswith("-"):
            out += " - " + t[1:]
        else:
            out += " + " + t
    return out


def fmt_tensor_multi(algebras, vec):
    """Readable form of a vector in A_1 ⊗ ... ⊗ A_m (row-major index)."""
    dims = [a.dim for a in algebras]
    total = 1
    for d in dims:
        total *= d
    if len(vec) != total:
        raise ValueError("fmt_tensor_multi length mismatch")
    terms = []
    for idx, c in enumerate(vec):
        if not c:
            continue
        rem = idx
        parts = []
        for d in reversed(dims):
            rem, r = divmod(rem, d)
            parts.append(r)
        parts.reverse()
        name = "⊗".join(a.basis_names[p] for a, p in zip(algebras, parts))
        cs = algebras[0].field.fmt(c)
        if cs == "1":
            term = name
        elif cs == "-1":
            term = f"-{name}"
        else:
            term = f"({cs})*{name}" if ("/" in cs or cs.startswith("-")) else f"{cs}*{name}"
        terms.append(term)
    if not terms:
        return "0"
    out = terms[0]
    for t in terms[1:]:
        if t.startswith("-"):
            out += " - " + t[1:]
        else:
            out += " + " + t
    return out
