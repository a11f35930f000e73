"""Degree-by-degree linear algebra for finitely presented graded algebras.

For a presentation A = k<gens>/(relations) the degree-d slice of the
relation ideal is

    I_d = V * I_{d-1}  +  sum_k R_k * V^(d-k),

with R_k the span of the degree-k relations.  Rather than materializing
reduced rows inside the n^d-dimensional tensor slice, each degree is
eliminated in the quotient coordinates V (x) A_{d-1}: the columns are the
words x_i * b with b a monomial basis word of A_{d-1}, and the rows are
the images of r * b for relations r and basis words b of the matching
lower degree.  Products r * w with w a non-basis word are redundant since
r * (w - nf(w)) already lies in V * I_{d-1}.

The non-pivot columns are exactly the monomial basis of A_d under the
degree-lexicographic order, and the eliminated rows are the left
multiplication table x_i * b -> A_d.  This reproduces, degree by degree,
the same pivot words and reduced rows as a full reduced row echelon form
of I_d with "largest word first" pivoting, while the work grows with
dim A_d instead of n^d.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from .cyclotomic import CycNum, FieldCtx, format_coeff
from .errors import ConfigurationError, InputError, ResourceLimitError
from .freealg import NcPoly, Word, slice_index, word_from_index, word_to_text
from .linalg import RowReducer, nullspace

Vec = dict[int, CycNum]

DEFAULT_DEGREE_CAP = 10


@dataclass(frozen=True)
class Presentation:
    """Field context, generators, and homogeneous defining relations.

    ``order`` maps each generator index to its rank in the word order:
    rank 0 is the largest letter.  The default order is the listing
    order, i.e. x > y > z for generators ("x", "y", "z").
    """

    ctx: FieldCtx
    gens: tuple[str, ...]
    relations: tuple[NcPoly, ...]
    order: tuple[int, ...] = ()

    def __post_init__(self):
        if not self.gens or len(set(self.gens)) != len(self.gens):
            raise ConfigurationError("generator names must be nonempty and unique")
        object.__setattr__(self, "relations", tuple(self.relations))
        order = self.order or tuple(range(len(self.gens)))
        if sorted(order) != list(range(len(self.gens))):
            raise ConfigurationError("order must be a permutation of the generators")
        object.__setattr__(self, "order", order)
        for rel in self.relations:
            if rel.is_zero():
                raise ConfigurationError("zero relation")
            if rel.degree < 1:
                raise ConfigurationError("relations must have degree >= 1")
            if rel.gens != self.gens or rel.ctx.m != self.ctx.m:
                raise ConfigurationError("relation over a different presentation")

    @property
    def n(self) -> int:
        return len(self.gens)

    def relation_degrees(self) -> tuple[int, ...]:
        return tuple(sorted({r.degree for r in self.relations}))

    def content_hash(self) -> str:
        doc = {
            "m": self.ctx.m,
            "gens": list(self.gens),
            "order": list(self.order),
            "relations": [
                [[word_to_text(w, self.gens), format_coeff(c)]
                 for w, c in rel.sorted_terms()]
                for rel in self.relations
            ],
        }
        blob = json.dumps(doc, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()


@dataclass
class DegreeSlice:
    """Reduced echelon data of one ideal slice, in quotient coordinates.

    ``basis`` lists the monomial basis of A_d (largest word first);
    ``lmul[i][j]`` is the normal form of x_i * basis_{d-1}[j] as a sparse
    vector over ``basis``.  Pivot words and their reduced rows are
    recoverable on demand (see EngineState.rref_rows) and agree with the
    unique RREF of I_d inside the full tensor slice.
    """

    d: int
    basis: tuple[Word, ...]
    lmul: tuple[tuple[Vec, ...], ...]
    index: dict[Word, int] = field(repr=False, default_factory=dict)
    rmul: tuple[tuple[Vec, ...], ...] | None = field(repr=False, default=None)

    def __post_init__(self):
        if not self.index:
            self.index = {w: i for i, w in enumerate(self.basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)


class EngineState:
    """Slice cache for one presentation; degrees are built incrementally."""

    def __init__(self, presentation: Presentation,
                 degree_cap: int = DEFAULT_DEGREE_CAP):
        self.presentation = presentation
        self.degree_cap = degree_cap
        base = DegreeSlice(d=0, basis=((),), lmul=())
        self.slices: list[DegreeSlice] = [base]
        self._rank = presentation.order
        self._unrank = tuple(
            self._rank.index(r) for r in range(presentation.n)
        )

    @property
    def n(self) -> int:
        return self.presentation.n

    @property
    def ctx(self) -> FieldCtx:
        return self.presentation.ctx

    def extend_to_degree(self, target: int) -> "EngineState":
        if target > self.degree_cap:
            raise ResourceLimitError(
                f"degree {target} exceeds the configured cap {self.degree_cap}"
            )
        while len(self.slices) <= target:
            self._build_next_slice()
        return self

    def _build_next_slice(self) -> None:
        d = len(self.slices)
        prev = self.slices[d - 1]
        n = self.n
        nb = prev.dim
        one = self.ctx.one
        red = RowReducer()
        for rel in self.presentation.relations:
            k = rel.degree
            if k > d:
                continue
            lower = self.slices[d - k]
            for j in range(lower.dim):
                row: Vec = {}
                for v, c in rel.terms.items():
                    head, tail = v[0], v[1:]
                    vec: Vec = {j: one}
                    deg = d - k
                    for letter in reversed(tail):
                        deg += 1
                        vec = self._lmul_apply(deg, letter, vec)
                    block = self._rank[head] * nb
                    for jb, w in vec.items():
                        col = block + jb
                        cur = row.get(col)
                        new = c * w if cur is None else cur + c * w
                        if new.is_zero():
                            row.pop(col, None)
                        else:
                            row[col] = new
                red.add(row)
        ncols = n * nb
        pivot_cols = red.rows.keys()
        basis_cols = [col for col in range(ncols) if col not in pivot_cols]
        col_pos = {col: i for i, col in enumerate(basis_cols)}

        def col_word(col: int) -> Word:
            block, j = divmod(col, nb)
            return (self._unrank[block],) + prev.basis[j]

        basis = tuple(col_word(col) for col in basis_cols)
        lmul = []
        for i in range(n):
            block = self._rank[i] * nb
            maps: list[Vec] = []
            for j in range(nb):
                col = block + j
                if col in pivot_cols:
                    maps.append({
                        col_pos[c]: -v
                        for c, v in red.rows[col].items()
                        if c != col
                    })
                else:
                    maps.append({col_pos[col]: one})
            lmul.append(tuple(maps))
        self.slices.append(DegreeSlice(d=d, basis=basis, lmul=tuple(lmul)))

    # -- normal forms ---------------------------------------------------

    def _lmul_apply(self, d: int, letter: int, vec: Vec) -> Vec:
        maps = self.slices[d].lmul[letter]
        out: Vec = {}
        for j, c in vec.items():
            for jb, w in maps[j].items():
                cur = out.get(jb)
                new = c * w if cur is None else cur + c * w
                if new.is_zero():
                    out.pop(jb, None)
                else:
                    out[jb] = new
        return out

    def nf_word(self, word: Word) -> Vec:
        """Normal-form coordinates of a word over basis(len(word))."""
        self.extend_to_degree(len(word))
        vec: Vec = {0: self.ctx.one}
        deg = 0
        for letter in reversed(word):
            deg += 1
            vec = self._lmul_apply(deg, letter, vec)
        return vec

    def vec_to_poly(self, d: int, vec: Vec) -> NcPoly:
        basis = self.slices[d].basis
        return NcPoly(self.ctx, self.presentation.gens, d,
                      {basis[j]: c for j, c in vec.items()})

    def poly_to_vec(self, poly: NcPoly) -> Vec:
        """Normal-form coordinates of an arbitrary homogeneous polynomial."""
        self.extend_to_degree(poly.degree)
        out: Vec = {}
        for w, c in poly.terms.items():
            for j, v in self.nf_word(w).items():
                cur = out.get(j)
                new = c * v if cur is None else cur + c * v
                if new.is_zero():
                    out.pop(j, None)
                else:
                    out[j] = new
        return out

    def normal_form(self, poly: NcPoly) -> NcPoly:
        if poly.gens != self.presentation.gens or poly.ctx.m != self.ctx.m:
            raise ConfigurationError("polynomial over a different presentation")
        return self.vec_to_poly(poly.degree, self.poly_to_vec(poly))

    # -- dimensions and bases -------------------------------------------

    def ideal_dim(self, d: int) -> int:
        self.extend_to_degree(d)
        return self.n**d - self.slices[d].dim

    def hilbert(self, max_degree: int) -> list[int]:
        self.extend_to_degree(max_degree)
        return [self.slices[d].dim for d in range(max_degree + 1)]

    def quotient_basis(self, d: int) -> list[Word]:
        self.extend_to_degree(d)
        return list(self.slices[d].basis)

    def pivot_words(self, d: int) -> list[Word]:
        """All non-basis words of degree d; only sensible for small d."""
        self.extend_to_degree(d)
        if self.n**d > 300000:
            raise ResourceLimitError("pivot words of a huge slice requested")
        in_basis = set(self.slices[d].basis)
        words = [word_from_index(i, self.n, d) for i in range(self.n**d)]
        return [w for w in words if w not in in_basis]

    def rref_rows(self, d: int) -> dict[Word, NcPoly]:
        """The reduced rows of I_d: pivot word minus its normal form."""
        gens = self.presentation.gens
        rows = {}
        for w in self.pivot_words(d):
            mono = NcPoly.monomial(self.ctx, gens, w, 1)
            rows[w] = mono - self.normal_form(mono)
        return rows

    # -- right multiplication and quotient products ---------------------

    def _rmul_table(self, d: int) -> tuple[tuple[Vec, ...], ...]:
        self.extend_to_degree(d)
        sl = self.slices[d]
        if sl.rmul is not None:
            return sl.rmul
        prev = self.slices[d - 1]
        one = self.ctx.one
        table = []
        if d == 1:
            for i in range(self.n):
                table.append((self.nf_word((i,)),))
        else:
            below = self._rmul_table(d - 1)
            lower = self.slices[d - 2]
            for i in range(self.n):
                maps: list[Vec] = []
                for b in prev.basis:
                    j2 = lower.index[b[1:]]
                    maps.append(self._lmul_apply(d, b[0], below[i][j2]))
                table.append(tuple(maps))
        sl.rmul = tuple(table)
        return sl.rmul

    def _rmul_apply(self, d: int, letter: int, vec: Vec) -> Vec:
        maps = self._rmul_table(d)[letter]
        out: Vec = {}
        for j, c in vec.items():
            for jb, w in maps[j].items():
                cur = out.get(jb)
                new = c * w if cur is None else cur + c * w
                if new.is_zero():
                    out.pop(jb, None)
                else:
                    out[jb] = new
        return out

    def quotient_mul(self, p: NcPoly, q: NcPoly) -> NcPoly:
        """Normal form of the product p * q, computed inside the quotient."""
        dp, dq = p.degree, q.degree
        self.extend_to_degree(dp + dq)
        start = self.poly_to_vec(p)
        out: Vec = {}
        for w, c in self.vec_to_poly(dq, self.poly_to_vec(q)).terms.items():
            cur = start
            deg = dp
            for letter in w:
                deg += 1
                cur = self._rmul_apply(deg, letter, cur)
            for j, v in cur.items():
                prev = out.get(j)
                new = c * v if prev is None else prev + c * v
                if new.is_zero():
                    out.pop(j, None)
                else:
                    out[j] = new
        return self.vec_to_poly(dp + dq, out)

    # -- centers and annihilators ---------------------------------------

    def center_basis(self, k: int) -> list[NcPoly]:
        """Basis of the degree-k elements commuting with every generator.

        Commuting with the generators is equivalent to centrality since
        the algebra is generated in degree 1; the commutator with each
        generator is tested exactly at degree k+1.
        """
        self.extend_to_degree(k + 1)
        sl = self.slices[k]
        nb = sl.dim
        one = self.ctx.one
        rows: list[Vec] = []
        # Transposed assembly: constraint rows indexed by (generator,
        # degree-(k+1) basis element), one column per unknown coefficient.
        by_constraint: dict[tuple[int, int], Vec] = {}
        rtab = self._rmul_table(k + 1)
        for j in range(nb):
            for i in range(self.n):
                left = self.slices[k + 1].lmul[i][j]
                right = rtab[i][j]
                keys = set(left) | set(right)
                for b in keys:
                    diff = left.get(b, self.ctx.zero) - right.get(b, self.ctx.zero)
                    if not diff.is_zero():
                        by_constraint.setdefault((i, b), {})[j] = diff
        rows = list(by_constraint.values())
        kernel = nullspace(rows, nb, one)
        return [self.vec_to_poly(k, vec) for vec in kernel]

    def annihilator_check(self, poly: NcPoly) -> bool:
        """True when poly * x_i and x_i * poly vanish for every generator."""
        d = poly.degree
        self.extend_to_degree(d + 1)
        vec = self.poly_to_vec(poly)
        for i in range(self.n):
            if self._lmul_apply(d + 1, i, vec):
                return False
            if self._rmul_apply(d + 1, i, vec):
                return False
        return True

    def in_ideal(self, poly: NcPoly) -> bool:
        return not self.poly_to_vec(poly)


# -- plain subspace computations on homogeneous polynomials -------------


def _polys_to_vecs(polys, n):
    return [
        {slice_index(w, n): c for w, c in p.terms.items()}
        for p in polys
    ]


def _common_degree(vectors1, vectors2):
    degrees = {p.degree for p in vectors1} | {p.degree for p in vectors2}
    if len(degrees) > 1:
        raise InputError(f"mixed degrees {sorted(degrees)} in subspace input")


def subspace_dims(vectors1: list[NcPoly],
                  vectors2: list[NcPoly]) -> tuple[int, int, int, int]:
    """Exact (dim1, dim2, dim of sum, dim of intersection) of two spans."""
    _common_degree(vectors1, vectors2)
    if not vectors1 and not vectors2:
        return 0, 0, 0, 0
    n = vectors1[0].n if vectors1 else vectors2[0].n
    red1, red2, red_sum = RowReducer(), RowReducer(), RowReducer()
    red1.extend(_polys_to_vecs(vectors1, n))
    red2.extend(_polys_to_vecs(vectors2, n))
    red_sum.extend(row.copy() for row in red1.rows.values())
    red_sum.extend(row.copy() for row in red2.rows.values())
    d1, d2, ds = red1.rank, red2.rank, red_sum.rank
    return d1, d2, ds, d1 + d2 - ds


def span_basis(vectors: list[NcPoly]) -> list[NcPoly]:
    """Reduced echelon basis of the span, as polynomials."""
    if not vectors:
        return []
    first = vectors[0]
    n = first.n
    red = RowReducer()
    red.extend(_polys_to_vecs(vectors, n))
    out = []
    for pivot in red.pivots():
        row = red.rows[pivot]
        terms = {
            word_from_index(col, n, first.degree): c for col, c in row.items()
        }
        out.append(NcPoly(first.ctx, first.gens, first.degree, terms))
    return out


def span_intersection(vectors1: list[NcPoly],
                      vectors2: list[NcPoly]) -> list[NcPoly]:
    """Basis of span(vectors1) & span(vectors2)."""
    _common_degree(vectors1, vectors2)
    basis1 = span_basis(vectors1)
    basis2 = span_basis(vectors2)
    if not basis1 or not basis2:
        return []
    ctx = basis1[0].ctx
    stacked = _polys_to_vecs(basis1, basis1[0].n) + _polys_to_vecs(
        basis2, basis1[0].n
    )
    # Kernel of (a, b) -> sum a_i u_i + sum b_j v_j, via the transpose.
    columns: dict[int, Vec] = {}
    for idx, vec in enumerate(stacked):
        for col, c in vec.items():
            columns.setdefault(col, {})[idx] = c
    kernel = nullspace(list(columns.values()), len(stacked), ctx.one)
    members = []
    for coeffs in kernel:
        acc = NcPoly.zero(ctx, basis1[0].gens, basis1[0].degree)
        for idx, c in coeffs.items():
            if idx < len(basis1):
                acc = acc + basis1[idx].scale(c)
        if not acc.is_zero():
            members.append(acc)
    return span_basis(members)


def in_span(vectors: list[NcPoly], candidate: NcPoly) -> bool:
    if not vectors:
        return candidate.is_zero()
    n = vectors[0].n
    red = RowReducer()
    red.extend(_polys_to_vecs(vectors, n))
    return red.contains(_polys_to_vecs([candidate], n)[0])


def ideal_dim_bruteforce(presentation: Presentation, d: int) -> int:
    """Independent oracle: rank of all products u * r * v of degree d.

    Enumerates every word pair around every relation instead of reusing
    lower slices; exponential in d, intended for cross-checks at d <= 5.
    """
    from itertools import product as iproduct

    n = presentation.n
    red = RowReducer()
    gens = presentation.gens
    ctx = presentation.ctx
    for rel in presentation.relations:
        k = rel.degree
        if k > d:
            continue
        for left_len in range(d - k + 1):
            right_len = d - k - left_len
            for u in iproduct(range(n), repeat=left_len):
                mono_u = NcPoly.monomial(ctx, gens, u, 1)
                for v in iproduct(range(n), repeat=right_len):
                    mono_v = NcPoly.monomial(ctx, gens, v, 1)
                    prod = mono_u * rel * mono_v
                    red.add({slice_index(w, n): c for w, c in prod.terms.items()})
    return red.rank
