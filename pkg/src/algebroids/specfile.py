"""Declarative JSON spec files: parse, validate, and emit.

A spec file is a UTF-8 JSON document with the versioned header
``"format": "algebroid-spec/1"``.  Scalars are written as exact strings:
rationals as ``"p/q"`` (or plain integers), prime-field values as canonical
representatives ``0 .. p-1``.  Matrices are dense row lists; structure
constants are sparse quadruples.

Top-level keys (all object-valued maps keyed by name, every key optional
except ``format`` and ``field``):

``field``
    ``"rational"`` or ``"gf:p"`` with ``p`` prime.
``algebras``
    ``{"dim": n, "basis": [names], "struct": [[i, j, k, val], ...],
    "unit": [vals]}`` — ``e_i e_j = Σ_k struct[i][j][k] e_k``; ``unit`` is
    optional (the unique two-sided unit is solved for when omitted).
``maps``
    ``{"domain": alg, "codomain": alg, "kind": "hom" | "anti",
    "matrix": rows}`` — the matrix sends domain coordinates to codomain
    coordinates (``codomain.dim x domain.dim``).
``left_bialgebroids`` / ``right_bialgebroids``
    ``{"total": alg, "base": alg, "s": map, "t": map, "gamma": rows,
    "counit": rows}`` — ``gamma`` is the ``d^2 x d`` coproduct lift,
    ``counit`` is ``dim(base) x d``.
``hopf_algebroids``
    ``{"left": lb, "right": rb, "antipode": rows,
    "antipode_inv": rows?}``.
``weak_hopf``
    ``{"algebra": alg, "delta": rows (d^2 x d), "counit": [row],
    "antipode": rows}``.
``elements``
    ``{"algebra": alg, "coords": [vals]}`` — named total-ring elements
    (integrals, twist candidates for transport, ...).
``functionals``
    ``{"bialgebroid": lb-name, "matrix": rows (dim(base) x d)}`` — named
    elements of the lower-star dual (twists, characters).
``sections``
    ``{"bialgebroid": lb-name, "matrix": rows}`` — a linear section of the
    balanced-tensor-square projection, for the convolution-axiom check
    (``d^2 x q`` where ``q`` is the quotient dimension).

Parse errors carry a location: JSON syntax errors report line/column,
semantic errors report the offending key path.
"""

import json

from .algebra import ANTI, HOM, Algebra, AlgebraMap
from .bialgebroid import LeftBialgebroid, RightBialgebroid
from .exactfield import Matrix, PrimeField, RationalField
from .hopfcore import HopfAlgebroid
from .twistlab import WeakHopfAlgebra

FORMAT = "algebroid-spec/1"


class SpecError(Exception):
    """A spec-file problem, with a human-readable location."""

    def __init__(self, message, location=""):
        self.message = message
        self.location = location
        super().__init__(f"{location}: {message}" if location else message)


def parse_field(text):
    """``"rational"`` or ``"gf:p"`` to a field object."""
    if text == "rational":
        return RationalField()
    if isinstance(text, str) and text.startswith("gf:"):
        try:
            p = int(text[3:])
        except ValueError:
            raise SpecError(f"bad prime-field modulus {text[3:]!r}", "field")
        try:
            return PrimeField(p)
        except ValueError as exc:
            raise SpecError(str(exc), "field")
    raise SpecError(f"unknown field {text!r} (want 'rational' or 'gf:p')",
                    "field")


class SpecFile:
    """A fully resolved spec file."""

    def __init__(self, field, source="<spec>"):
        self.field = field
        self.source = source
        self.algebras = {}
        self.maps = {}
        self.left_bialgebroids = {}
        self.right_bialgebroids = {}
        self.hopf_algebroids = {}
        self.weak_hopf = {}
        self.elements = {}       # name -> (algebra name, coords tuple)
        self.functionals = {}    # name -> (left-bialgebroid name, Matrix)
        self.sections = {}       # name -> (left-bialgebroid name, Matrix)

    # -- lookup helpers ---------------------------------------------------

    def _pick(self, table, what, name=None):
        if name is not None:
            if name not in table:
                raise SpecError(f"no {what} named {name!r} in {self.source}")
            return name, table[name]
        if len(table) == 1:
            return next(iter(table.items()))
        if not table:
            raise SpecError(f"{self.source} declares no {what}")
        raise SpecError(
            f"{self.source} declares {len(table)} {what}s "
            f"({', '.join(sorted(table))}); pick one with --name")

    def hopf(self, name=None):
        return self._pick(self.hopf_algebroids, "hopf_algebroid", name)

    def right_bialgebroid(self, name=None):
        """A right bialgebroid: declared directly, or a Hopf assembly's."""
        if self.right_bialgebroids or not self.hopf_algebroids:
            return self._pick(self.right_bialgebroids, "right_bialgebroid",
                              name)
        nm, h = self.hopf(name)
        return nm, h.rb

    def left_bialgebroid(self, name=None):
        if self.left_bialgebroids or not self.hopf_algebroids:
            return self._pick(self.left_bialgebroids, "left_bialgebroid",
                              name)
        nm, h = self.hopf(name)
        return nm, h.lb

    def weak(self, name=None):
        return self._pick(self.weak_hopf, "weak_hopf", name)

    def element_for(self, algebra, name=None):
        """A named element of the given total algebra; sole match default."""
        table = {nm: coords for nm, (alg, coords) in self.elements.items()
                 if self.algebras[alg] is algebra}
        nm, coords = self._pick(table, f"element of {algebra.name}", name)
        return nm, coords

    def functional_for(self, name=None):
        nm, (lbname, mat) = self._pick(
            {k: v for k, v in self.functionals.items()}, "functional", name)
        return nm, lbname, mat


# ---------------------------------------------------------------------------
# parsing


def _expect(cond, message, loc):
    if not cond:
        raise SpecError(message, loc)


def _scalar(field, raw, loc):
    try:
        return field.of(raw)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise SpecError(f"bad scalar {raw!r} ({exc})", loc)


def _vector(field, raw, length, loc):
    _expect(isinstance(raw, list), "expected a list of scalars", loc)
    _expect(len(raw) == length,
            f"expected {length} entries, got {len(raw)}", loc)
    return tuple(_scalar(field, x, f"{loc}[{i}]") for i, x in enumerate(raw))


def _matrix(field, raw, nrows, ncols, loc):
    _expect(isinstance(raw, list), "expected a list of rows", loc)
    _expect(len(raw) == nrows, f"expected {nrows} rows, got {len(raw)}", loc)
    rows = [_vector(field, row, ncols, f"{loc}[{i}]")
            for i, row in enumerate(raw)]
    return Matrix.from_rows(field, rows, ncols)


def _parse_algebra(field, name, body, loc):
    _expect(isinstance(body, dict), "expected an object", loc)
    basis = body.get("basis")
    _expect(isinstance(basis, list) and basis, "missing basis names",
            f"{loc}.basis")
    dim = body.get("dim", len(basis))
    _expect(dim == len(basis),
            f"dim {dim} != {len(basis)} basis names", f"{loc}.dim")
    struct = {}
    for idx, quad in enumerate(body.get("struct", [])):
        qloc = f"{loc}.struct[{idx}]"
        _expect(isinstance(quad, list) and len(quad) == 4,
                "expected a quadruple [i, j, k, value]", qloc)
        i, j, k, val = quad
        for pos, ix in (("i", i), ("j", j), ("k", k)):
            _expect(isinstance(ix, int) and 0 <= ix < dim,
                    f"index {pos}={ix} out of range 0..{dim - 1}", qloc)
        struct[(i, j, k)] = _scalar(field, val, qloc)
    unit = body.get("unit")
    if unit is not None:
        unit = _vector(field, unit, dim, f"{loc}.unit")
    try:
        return Algebra.from_struct(field, list(basis), struct, unit=unit,
                                   name=name)
    except ValueError as exc:
        raise SpecError(str(exc), loc)


def _ref(table, key, loc, what):
    _expect(key in table, f"unresolved {what} reference {key!r}", loc)
    return table[key]


def parse_data(data, source="<spec>", field=None):
    """Validate a decoded JSON object into a :class:`SpecFile`."""
    _expect(isinstance(data, dict), "top level must be a JSON object", source)
    _expect(data.get("format") == FORMAT,
            f"missing or unsupported format (want {FORMAT!r})", "format")
    if field is None:
        field = parse_field(data.get("field", "rational"))
    spec = SpecFile(field, source=source)

    for name, body in (data.get("algebras") or {}).items():
        spec.algebras[name] = _parse_algebra(field, name, body,
                                             f"algebras.{name}")

    for name, body in (data.get("maps") or {}).items():
        loc = f"maps.{name}"
        dom = _ref(spec.algebras, body.get("domain"), f"{loc}.domain",
                   "algebra")
        cod = _ref(spec.algebras, body.get("codomain"), f"{loc}.codomain",
                   "algebra")
        kind = body.get("kind", HOM)
        _expect(kind in (HOM, ANTI), f"kind must be '{HOM}' or '{ANTI}'",
                f"{loc}.kind")
        mat = _matrix(field, body.get("matrix"), cod.dim, dom.dim,
                      f"{loc}.matrix")
        spec.maps[name] = AlgebraMap(dom, cod, mat, kind, name)

    def parse_bgd(cls, name, body, loc):
        total = _ref(spec.algebras, body.get("total"), f"{loc}.total",
                     "algebra")
        base = _ref(spec.algebras, body.get("base"), f"{loc}.base", "algebra")
        smap = _ref(spec.maps, body.get("s"), f"{loc}.s", "map")
        tmap = _ref(spec.maps, body.get("t"), f"{loc}.t", "map")
        d = total.dim
        gamma = _matrix(field, body.get("gamma"), d * d, d, f"{loc}.gamma")
        counit = _matrix(field, body.get("counit"), base.dim, d,
                         f"{loc}.counit")
        try:
            return cls(total, base, smap, tmap, gamma, counit, name=name)
        except ValueError as exc:
            raise SpecError(str(exc), loc)

    for name, body in (data.get("left_bialgebroids") or {}).items():
        spec.left_bialgebroids[name] = parse_bgd(
            LeftBialgebroid, name, body, f"left_bialgebroids.{name}")

    for name, body in (data.get("right_bialgebroids") or {}).items():
        spec.right_bialgebroids[name] = parse_bgd(
            RightBialgebroid, name, body, f"right_bialgebroids.{name}")

    for name, body in (data.get("hopf_algebroids") or {}).items():
        loc = f"hopf_algebroids.{name}"
        lb = _ref(spec.left_bialgebroids, body.get("left"), f"{loc}.left",
                  "left_bialgebroid")
        rb = _ref(spec.right_bialgebroids, body.get("right"), f"{loc}.right",
                  "right_bialgebroid")
        _expect(lb.total is rb.total,
                "left and right sides must share the total algebra", loc)
        d = lb.total.dim
        anti = _matrix(field, body.get("antipode"), d, d, f"{loc}.antipode")
        anti_inv = body.get("antipode_inv")
        if anti_inv is not None:
            anti_inv = _matrix(field, anti_inv, d, d, f"{loc}.antipode_inv")
        elif anti.inverse() is None:
            raise SpecError("antipode matrix is singular", f"{loc}.antipode")
        spec.hopf_algebroids[name] = HopfAlgebroid(
            lb, rb, anti, antipode_inv=anti_inv, name=name)

    for name, body in (data.get("weak_hopf") or {}).items():
        loc = f"weak_hopf.{name}"
        alg = _ref(spec.algebras, body.get("algebra"), f"{loc}.algebra",
                   "algebra")
        d = alg.dim
        delta = _matrix(field, body.get("delta"), d * d, d, f"{loc}.delta")
        counit = _matrix(field, body.get("counit"), 1, d, f"{loc}.counit")
        anti = _matrix(field, body.get("antipode"), d, d, f"{loc}.antipode")
        spec.weak_hopf[name] = WeakHopfAlgebra(alg, delta, counit, anti,
                                               name=name)

    for name, body in (data.get("elements") or {}).items():
        loc = f"elements.{name}"
        algname = body.get("algebra")
        alg = _ref(spec.algebras, algname, f"{loc}.algebra", "algebra")
        coords = _vector(field, body.get("coords"), alg.dim, f"{loc}.coords")
        spec.elements[name] = (algname, coords)

    def parse_dual_row(table_name, store):
        for name, body in (data.get(table_name) or {}).items():
            loc = f"{table_name}.{name}"
            lbname = body.get("bialgebroid")
            lb = _ref(spec.left_bialgebroids, lbname, f"{loc}.bialgebroid",
                      "left_bialgebroid")
            if table_name == "functionals":
                mat = _matrix(field, body.get("matrix"), lb.base.dim,
                              lb.total.dim, f"{loc}.matrix")
            else:
                raw = body.get("matrix")
                _expect(isinstance(raw, list) and raw, "missing matrix", loc)
                mat = _matrix(field, raw, len(raw), len(raw[0]),
                              f"{loc}.matrix")
            store[name] = (lbname, mat)

    parse_dual_row("functionals", spec.functionals)
    parse_dual_row("sections", spec.sections)
    return spec


def parse_text(text, source="<spec>", field=None):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(
            f"JSON syntax error: {exc.msg} (line {exc.lineno}, "
            f"column {exc.colno})", source)
    return parse_data(data, source=source, field=field)


def parse(path, field=None):
    """Read and resolve a spec file; raises :class:`SpecError` on any
    syntax, reference, or dimension problem."""
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SpecError(str(exc), str(path))
    return parse_text(text, source=str(path), field=field)


# ---------------------------------------------------------------------------
# emission


def _scalar_str(x):
    return str(x)


def _matrix_json(m):
    return [[_scalar_str(x) for x in row] for row in m.rows]


def _algebra_json(A):
    struct = []
    for i in range(A.dim):
        for j in range(A.dim):
            for k in sorted(A.table[i][j]):
                struct.append([i, j, k, _scalar_str(A.table[i][j][k])])
    return {
        "dim": A.dim,
        "basis": list(A.basis_names),
        "struct": struct,
        "unit": [_scalar_str(x) for x in A.unit],
    }


class SpecBuilder:
    """Accumulates objects into a serializable spec document, deduplicating
    shared algebras and maps by identity."""

    def __init__(self, field):
        self.data = {"format": FORMAT, "field": field.name}
        self._algebra_names = {}
        self._map_names = {}

    def _fresh(self, table, want):
        name = want
        n = 2
        while name in self.data.get(table, {}):
            name = f"{want}.{n}"
            n += 1
        return name

    def add_algebra(self, A):
        if id(A) in self._algebra_names:
            return self._algebra_names[id(A)]
        name = self._fresh("algebras", A.name)
        self.data.setdefault("algebras", {})[name] = _algebra_json(A)
        self._algebra_names[id(A)] = name
        return name

    def add_map(self, m):
        if id(m) in self._map_names:
            return self._map_names[id(m)]
        name = self._fresh("maps", m.name)
        self.data.setdefault("maps", {})[name] = {
            "domain": self.add_algebra(m.source),
            "codomain": self.add_algebra(m.target),
            "kind": m.kind,
            "matrix": _matrix_json(m.matrix),
        }
        self._map_names[id(m)] = name
        return name

    def add_bialgebroid(self, bgd, name=None):
        table = ("left_bialgebroids" if isinstance(bgd, LeftBialgebroid)
                 else "right_bialgebroids")
        name = self._fresh(table, name or bgd.name)
        self.data.setdefault(table, {})[name] = {
            "total": self.add_algebra(bgd.total),
            "base": self.add_algebra(bgd.base),
            "s": self.add_map(bgd.s),
            "t": self.add_map(bgd.t),
            "gamma": _matrix_json(bgd.gamma_lift),
            "counit": _matrix_json(bgd.counit),
        }
        return name

    def add_hopf(self, h, name=None):
        name = self._fresh("hopf_algebroids", name or h.name)
        self.data.setdefault("hopf_algebroids", {})[name] = {
            "left": self.add_bialgebroid(h.lb),
            "right": self.add_bialgebroid(h.rb),
            "antipode": _matrix_json(h.S),
            "antipode_inv": _matrix_json(h.S_inv),
        }
        return name

    def add_weak_hopf(self, w, name=None):
        name = self._fresh("weak_hopf", name or w.name)
        self.data.setdefault("weak_hopf", {})[name] = {
            "algebra": self.add_algebra(w.algebra),
            "delta": _matrix_json(w.delta),
            "counit": _matrix_json(w.counit),
            "antipode": _matrix_json(w.antipode),
        }
        return name

    def add_element(self, name, algebra, coords):
        name = self._fresh("elements", name)
        self.data.setdefault("elements", {})[name] = {
            "algebra": self.add_algebra(algebra),
            "coords": [_scalar_str(x) for x in coords],
        }
        return name

    def add_functional(self, name, lb_name, matrix):
        name = self._fresh("functionals", name)
        self.data.setdefault("functionals", {})[name] = {
            "bialgebroid": lb_name,
            "matrix": _matrix_json(matrix),
        }
        return name

    def add_section(self, name, lb_name, matrix):
        name = self._fresh("sections", name)
        self.data.setdefault("sections", {})[name] = {
            "bialgebroid": lb_name,
            "matrix": _matrix_json(matrix),
        }
        return name

    def emit(self):
        """Canonical deterministic text (sorted keys, trailing newline)."""
        return json.dumps(self.data, indent=2, sort_keys=True) + "\n"


def spec_from_hopf(h, name=None, integral=None, integral_name="integral"):
    """A complete spec document for one Hopf algebroid, optionally with a
    named integral element."""
    b = SpecBuilder(h.field)
    b.add_hopf(h, name=name)
    if integral is not None:
        b.add_element(integral_name, h.total, integral)
    return b.emit()


def spec_from_right_bialgebroid(rb, name=None, integral=None,
                                integral_name="integral"):
    b = SpecBuilder(rb.field)
    b.add_bialgebroid(rb, name=name)
    if integral is not None:
        b.add_element(integral_name, rb.total, integral)
    return b.emit()
