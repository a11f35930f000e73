"""Built-in algebra families, superpotentials, and projective-geometry helpers.

Recognized preset names (see :func:`preset`):

  poly            commutative polynomial ring in three variables
  sklyanin        a*yz + b*zy + c*x^2 and its two cyclic rotations
  degenerate      the three monomial vertex cases [0:0:1], [1:0:0], [0:1:0]
  T               quotient of the [0:0:1] vertex algebra by two cubics,
                  parametrized projectively by [A:B] with t = B/A
  M               further quotient of T by its central cubic, presented
                  by x^2, y^2, z^2 and A*zxy + B*yxz (plus rotations)
  clifford        Clifford algebra of the generic rank-3 quadric over
                  k[u0,u1,u2]: squares vanish, {x_i, x_{i+1}} is central
  badC            T at the endpoint t = 0
  badA            badC modulo its annihilating cubic: x^2, y^2, z^2,
                  xyz, yzx, zxy
  zhang           twisted analogue living over the [1:0:0] vertex
"""

from __future__ import annotations

from dataclasses import dataclass

from .cyclotomic import CycNum, FieldCtx
from .engine import EngineState, Presentation, RowReducer, nullspace, span_basis
from .errors import ConfigurationError, ConsistencyError, InputError
from .freealg import NcPoly, word_from_text

GENS = ("x", "y", "z")


def _as_cyc(ctx: FieldCtx, value) -> CycNum:
    if isinstance(value, CycNum):
        if value.ctx.m != ctx.m:
            raise ConfigurationError("parameter from a different field context")
        return value
    return ctx.from_rational(value)


@dataclass(frozen=True)
class ParamPoint:
    """Homogeneous parameter point, normalized so the first nonzero
    coordinate is 1."""

    coords: tuple[CycNum, ...]

    def __post_init__(self):
        coords = self.coords
        lead = next((c for c in coords if not c.is_zero()), None)
        if lead is None:
            raise InputError("parameter point has all coordinates zero")
        inv = lead.inv()
        object.__setattr__(self, "coords", tuple(c * inv for c in coords))

    @classmethod
    def of(cls, ctx: FieldCtx, *values) -> "ParamPoint":
        return cls(tuple(_as_cyc(ctx, v) for v in values))

    def __str__(self):
        return "[" + ":".join(str(c) for c in self.coords) + "]"


@dataclass(frozen=True)
class PluckerLine:
    """A 2-plane in a 3-space, by its Plucker coordinates (p01, p20, p12)."""

    p01: CycNum
    p20: CycNum
    p12: CycNum

    def __post_init__(self):
        if self.p01.is_zero() and self.p20.is_zero() and self.p12.is_zero():
            raise InputError("degenerate line: all Plucker coordinates are zero")

    def contains(self, point: tuple[CycNum, CycNum, CycNum]) -> bool:
        q0, q1, q2 = point
        return (self.p12 * q0 + self.p20 * q1 + self.p01 * q2).is_zero()

    def spanning_rows(self) -> tuple[tuple[CycNum, ...], tuple[CycNum, ...]]:
        """Two independent vectors spanning the plane.

        The plane is the orthogonal complement of n = (p12, p20, p01);
        the cross product of the returned rows is a nonzero multiple of n.
        """
        n0, n1, n2 = self.p12, self.p20, self.p01
        if not n0.is_zero():
            return (-n1, n0, n0 - n0), (-n2, n0 - n0, n0)
        if not n1.is_zero():
            return (n1, -n0, n1 - n1), (n1 - n1, -n2, n1)
        return (n2, n2 - n2, -n0), (n2 - n2, n2, -n1)

    def __str__(self):
        return f"(p01={self.p01}, p20={self.p20}, p12={self.p12})"


def _poly(ctx, pairs) -> NcPoly:
    terms = {}
    for text, coeff in pairs:
        w = word_from_text(text, GENS)
        c = _as_cyc(ctx, coeff)
        terms[w] = terms.get(w, ctx.zero) + c
    degree = len(next(iter(terms)))
    return NcPoly(ctx, GENS, degree, terms)


def _require_omega(ctx: FieldCtx, name: str) -> CycNum:
    if ctx.m % 3 != 0:
        raise ConfigurationError(
            f"preset {name!r} needs a cube root of unity; use a field order"
            f" divisible by 3 (got m={ctx.m})"
        )
    return ctx.omega()


_VERTEX_RELATIONS = {
    (1, 0, 0): ("yz", "zx", "xy"),
    (0, 1, 0): ("zy", "xz", "yx"),
    (0, 0, 1): ("xx", "yy", "zz"),
}


def sklyanin_relations(ctx: FieldCtx, a, b, c) -> tuple[NcPoly, NcPoly, NcPoly]:
    a, b, c = (_as_cyc(ctx, v) for v in (a, b, c))
    return (
        _poly(ctx, [("yz", a), ("zy", b), ("xx", c)]),
        _poly(ctx, [("zx", a), ("xz", b), ("yy", c)]),
        _poly(ctx, [("xy", a), ("yx", b), ("zz", c)]),
    )


def deformation_cubics(ctx: FieldCtx, a1, b1, a2, b2) -> tuple[NcPoly, NcPoly]:
    """The two isotypic degree-3 relations with independent parameters."""
    w = _require_omega(ctx, "T")
    w2 = w * w
    a1, b1, a2, b2 = (_as_cyc(ctx, v) for v in (a1, b1, a2, b2))
    v1 = _poly(ctx, [
        ("zxy", a1), ("xyz", a1 * w), ("yzx", a1 * w2),
        ("yxz", b1), ("zyx", b1 * w), ("xzy", b1 * w2),
    ])
    v2 = _poly(ctx, [
        ("zxy", a2), ("xyz", a2 * w2), ("yzx", a2 * w),
        ("yxz", b2), ("zyx", b2 * w2), ("xzy", b2 * w),
    ])
    return v1, v2


def deformation_family(ctx: FieldCtx, a1, b1, a2, b2) -> Presentation:
    """Quotient of the [0:0:1] vertex algebra by the two cubics above."""
    v1, v2 = deformation_cubics(ctx, a1, b1, a2, b2)
    squares = [_poly(ctx, [(t, 1)]) for t in _VERTEX_RELATIONS[(0, 0, 1)]]
    return Presentation(ctx, GENS, tuple(squares) + (v1, v2))


def zhang_cubics(ctx: FieldCtx, t) -> tuple[NcPoly, NcPoly]:
    w = _require_omega(ctx, "zhang")
    w2 = w * w
    t = _as_cyc(ctx, t)
    v1 = _poly(ctx, [
        ("zyx", 1), ("xzy", w), ("yxz", w2),
        ("yyy", t), ("zzz", t * w), ("xxx", t * w2),
    ])
    v2 = _poly(ctx, [
        ("zyx", 1), ("xzy", w2), ("yxz", w),
        ("yyy", t), ("zzz", t * w2), ("xxx", t * w),
    ])
    return v1, v2


def preset(name: str, params=(), ctx: FieldCtx | None = None) -> Presentation:
    """Build a named presentation; parameters are field elements."""
    ctx = ctx or FieldCtx(3)
    params = tuple(params)

    def arity(k):
        if len(params) != k:
            raise ConfigurationError(
                f"preset {name!r} expects {k} parameter(s), got {len(params)}"
            )

    if name == "poly":
        arity(0)
        rels = (
            _poly(ctx, [("xy", 1), ("yx", -1)]),
            _poly(ctx, [("xz", 1), ("zx", -1)]),
            _poly(ctx, [("yz", 1), ("zy", -1)]),
        )
        return Presentation(ctx, GENS, rels)
    if name == "sklyanin":
        arity(3)
        return Presentation(ctx, GENS, sklyanin_relations(ctx, *params))
    if name == "degenerate":
        arity(3)
        point = tuple(
            0 if _as_cyc(ctx, v).is_zero() else 1 for v in params
        )
        if point not in _VERTEX_RELATIONS or sum(point) != 1:
            raise ConfigurationError(
                "degenerate preset takes a coordinate vertex such as 0,0,1"
            )
        for v in params:
            c = _as_cyc(ctx, v)
            if not c.is_zero() and c != ctx.one:
                raise ConfigurationError("vertex coordinates must be 0 or 1")
        rels = tuple(_poly(ctx, [(t, 1)]) for t in _VERTEX_RELATIONS[point])
        return Presentation(ctx, GENS, rels)
    if name == "T":
        arity(2)
        a, b = (_as_cyc(ctx, v) for v in params)
        if a.is_zero() and b.is_zero():
            raise ConfigurationError("T parameter [A:B] must be nonzero")
        return deformation_family(ctx, a, b, a, b)
    if name == "M":
        arity(2)
        a, b = (_as_cyc(ctx, v) for v in params)
        if a.is_zero() and b.is_zero():
            raise ConfigurationError("M parameter [A:B] must be nonzero")
        rels = tuple(
            _poly(ctx, [(t, 1)]) for t in _VERTEX_RELATIONS[(0, 0, 1)]
        ) + (
            _poly(ctx, [("zxy", a), ("yxz", b)]),
            _poly(ctx, [("xyz", a), ("zyx", b)]),
            _poly(ctx, [("yzx", a), ("xzy", b)]),
        )
        return Presentation(ctx, GENS, rels)
    if name == "clifford":
        arity(0)
        squares = tuple(
            _poly(ctx, [(t, 1)]) for t in _VERTEX_RELATIONS[(0, 0, 1)]
        )
        # [{x_i, x_{i+1}}, x_{i+2}] = 0 for the cyclic order (x, y, z).
        comm = (
            _poly(ctx, [("xyz", 1), ("yxz", 1), ("zxy", -1), ("zyx", -1)]),
            _poly(ctx, [("yzx", 1), ("zyx", 1), ("xyz", -1), ("xzy", -1)]),
            _poly(ctx, [("zxy", 1), ("xzy", 1), ("yzx", -1), ("yxz", -1)]),
        )
        return Presentation(ctx, GENS, squares + comm)
    if name == "badC":
        arity(0)
        return preset("T", (1, 0), ctx)
    if name == "badA":
        arity(0)
        rels = tuple(
            _poly(ctx, [(t, 1)])
            for t in ("xx", "yy", "zz", "xyz", "yzx", "zxy")
        )
        return Presentation(ctx, GENS, rels)
    if name == "zhang":
        arity(1)
        v1, v2 = zhang_cubics(ctx, params[0])
        rels = tuple(
            _poly(ctx, [(t, 1)]) for t in _VERTEX_RELATIONS[(1, 0, 0)]
        ) + (v1, v2)
        return Presentation(ctx, GENS, rels)
    raise ConfigurationError(f"unknown preset {name!r}")


def superpotential(ctx: FieldCtx, point) -> NcPoly:
    """The invariant cubic a(zxy+xyz+yzx) + b(yxz+zyx+xzy) + c(x^3+y^3+z^3)."""
    if isinstance(point, ParamPoint):
        a, b, c = point.coords
    else:
        a, b, c = (_as_cyc(ctx, v) for v in point)
    return _poly(ctx, [
        ("zxy", a), ("xyz", a), ("yzx", a),
        ("yxz", b), ("zyx", b), ("xzy", b),
        ("xxx", c), ("yyy", c), ("zzz", c),
    ])


def central_g(ctx: FieldCtx, kind: str, t) -> NcPoly:
    """The degree-3 element that is central in the named family."""
    t = _as_cyc(ctx, t)
    if kind == "T":
        return _poly(ctx, [
            ("zxy", 1), ("xyz", 1), ("yzx", 1),
            ("yxz", t), ("zyx", t), ("xzy", t),
        ])
    if kind == "zhang":
        return _poly(ctx, [
            ("zyx", 1), ("xzy", 1), ("yxz", 1),
            ("yyy", t), ("zzz", t), ("xxx", t),
        ])
    raise ConfigurationError(f"unknown central element family {kind!r}")


def nonregular_points(ctx: FieldCtx) -> list[ParamPoint]:
    """The 12 parameter points with non-generic behaviour: the three
    coordinate vertices and the nine points [1 : w^i : w^j]."""
    w = _require_omega(ctx, "nonregular_points")
    pts = [
        ParamPoint.of(ctx, 1, 0, 0),
        ParamPoint.of(ctx, 0, 1, 0),
        ParamPoint.of(ctx, 0, 0, 1),
    ]
    for i in range(3):
        for j in range(3):
            pts.append(ParamPoint((ctx.one, w**i, w**j)))
    return pts


def blowup_condition(p: ParamPoint,
                     line: PluckerLine) -> tuple[int, bool, bool]:
    """Incidence test for the degree-3 deformation data over a base point.

    Returns (rank, eqs_hold, plucker_relation) where rank is the rank of
    the 4 x 3 matrix stacking (c, a*w^2, b*w), (c, a*w, b*w^2) on two rows
    spanning the given plane; eqs_hold checks the two linear conditions
      p12 + a*w*p20 + b*w^2*p01 = 0 and p12 + a*w^2*p20 + b*w*p01 = 0,
    and plucker_relation checks a*p20 = b*p01.  On the chart c = 1 the
    rank is at most 2 exactly when both equations hold.
    """
    ctx = p.coords[0].ctx
    w = _require_omega(ctx, "blowup_condition")
    a, b, c = p.coords
    if c.is_zero():
        raise InputError("blowup_condition expects the chart c != 0")
    cinv = c.inv()
    a, b, c = a * cinv, b * cinv, ctx.one
    u, v = line.spanning_rows()
    rows = [
        (c, a * w * w, b * w),
        (c, a * w, b * w * w),
        u,
        v,
    ]
    red = RowReducer()
    for row in rows:
        red.add({i: val for i, val in enumerate(row) if not val.is_zero()})
    rank = red.rank
    eq1 = line.p12 + a * w * line.p20 + b * w * w * line.p01
    eq2 = line.p12 + a * w * w * line.p20 + b * w * line.p01
    eqs_hold = eq1.is_zero() and eq2.is_zero()
    plucker_relation = (a * line.p20 - b * line.p01).is_zero()
    return rank, eqs_hold, plucker_relation


def invariant_cubic_basis(ctx: FieldCtx) -> tuple[NcPoly, NcPoly, NcPoly]:
    """Basis w1, w2, w3 of the symmetric cubics used as line coordinates."""
    return (
        superpotential(ctx, (1, 0, 0)),
        superpotential(ctx, (0, 1, 0)),
        superpotential(ctx, (0, 0, 1)),
    )


def central_preimage_basis(p: ParamPoint) -> list[tuple[CycNum, ...]]:
    """Coefficient triples over (w1, w2, w3) spanning the invariant cubics
    whose class in degree 3 is a multiple of the central cubic."""
    ctx = p.coords[0].ctx
    _require_omega(ctx, "central_preimage_basis")
    if any(p == q for q in nonregular_points(ctx)):
        raise InputError(f"point {p} is non-regular; the preimage line "
                         "is defined away from the 12 special points")
    a, b, c = p.coords
    pres = preset("sklyanin", (a, b, c), ctx)
    state = EngineState(pres)
    state.extend_to_degree(4)
    c3 = _invariant_central_cubic(state)
    w_basis = invariant_cubic_basis(ctx)
    columns = [state.poly_to_vec(w) for w in w_basis]
    columns.append({j: -v for j, v in state.poly_to_vec(c3).items()})
    # Kernel of (alpha, beta) -> sum alpha_i nf(w_i) - beta nf(c3).
    by_row: dict[int, dict[int, CycNum]] = {}
    for idx, colvec in enumerate(columns):
        for row, val in colvec.items():
            by_row.setdefault(row, {})[idx] = val
    kernel = nullspace(list(by_row.values()), 4, ctx.one)
    zero = ctx.zero
    triples = [
        tuple(vec.get(i, zero) for i in range(3))
        for vec in kernel
    ]
    triples = [t for t in triples if any(not c.is_zero() for c in t)]
    red = RowReducer()
    basis = []
    for t in triples:
        if red.add({i: c for i, c in enumerate(t) if not c.is_zero()}) is not None:
            basis.append(t)
    return basis


def _invariant_central_cubic(state: EngineState) -> NcPoly:
    from .groups import heisenberg_action, apply_matrix

    ctx = state.ctx
    center = state.center_basis(3)
    if not center:
        raise ConsistencyError("no degree-3 central element found")
    action = heisenberg_action(ctx)
    for cand in center:
        avg = NcPoly.zero(ctx, cand.gens, 3)
        for g in action.elements:
            avg = avg + state.normal_form(apply_matrix(g, cand))
        if not avg.is_zero():
            return avg
    raise ConsistencyError("no invariant element in the degree-3 center")


def central_preimage_line(p: ParamPoint) -> PluckerLine:
    """Line in the invariant-cubic plane mapping onto the central class.

    The returned line always contains the direction of the superpotential
    at p (the kernel of the projection) and the point p itself.
    """
    basis = central_preimage_basis(p)
    if len(basis) != 2:
        raise ConsistencyError(
            f"preimage of the central class has dimension {len(basis)}, not 2"
        )
    (a0, a1, a2), (b0, b1, b2) = basis
    return PluckerLine(
        p01=a0 * b1 - a1 * b0,
        p20=a2 * b0 - a0 * b2,
        p12=a1 * b2 - a2 * b1,
    )
