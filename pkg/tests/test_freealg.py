import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncalg.cyclotomic import FieldCtx
from ncalg.errors import InputError, ParseError
from ncalg.freealg import (
    NcPoly,
    cyclic_derivative,
    cyclic_shift,
    format_poly,
    parse_poly,
    slice_index,
    word_from_index,
    word_from_text,
    word_to_text,
)

CTX = FieldCtx(3)
GENS = ("x", "y", "z")


def mono(text, coeff=1):
    return NcPoly.monomial(CTX, GENS, word_from_text(text, GENS), coeff)


class TestSliceIndex:
    def test_empty_word(self):
        assert slice_index((), 3) == 0

    def test_xy(self):
        assert slice_index(word_from_text("xy", GENS), 3) == 1

    def test_zxy(self):
        # 2*9 + 0*3 + 1
        assert slice_index(word_from_text("zxy", GENS), 3) == 19

    def test_out_of_range(self):
        with pytest.raises(InputError):
            slice_index((0, 3), 3)

    @pytest.mark.parametrize("degree", range(6))
    def test_bijection_exhaustive(self, degree):
        for word in itertools.product(range(3), repeat=degree):
            assert word_from_index(slice_index(word, 3), 3, degree) == word


class TestProduct:
    def test_single_letters(self):
        assert mono("x") * mono("y") == mono("xy")

    def test_free_square_expansion(self):
        p = mono("x") + mono("y")
        sq = p * p
        assert sq == mono("xx") + mono("xy") + mono("yx") + mono("yy")

    def test_g0_times_x(self):
        g0 = mono("zxy") + mono("xyz") + mono("yzx")
        assert g0 * mono("x") == mono("zxyx") + mono("xyzx") + mono("yzxx")

    def test_degree_mismatch_add(self):
        with pytest.raises(InputError):
            mono("x") + mono("xy")


def small_polys(degree):
    words = list(itertools.product(range(3), repeat=degree))
    coeff = st.integers(min_value=-3, max_value=3)
    return st.lists(
        st.tuples(st.sampled_from(words), coeff), min_size=0, max_size=4
    ).map(
        lambda pairs: NcPoly(
            CTX, GENS, degree,
            {w: CTX.from_rational(c) for w, c in pairs},
        )
        if pairs
        else NcPoly.zero(CTX, GENS, degree)
    )


class TestProductLaws:
    @given(small_polys(1), small_polys(2), small_polys(1))
    @settings(max_examples=40, deadline=None)
    def test_associative(self, p, q, r):
        assert (p * q) * r == p * (q * r)

    @given(small_polys(2), small_polys(1), small_polys(1))
    @settings(max_examples=40, deadline=None)
    def test_distributive(self, p, q, r):
        assert p * (q + r) == p * q + p * r


class TestCyclicDerivative:
    def test_x_cubed(self):
        assert cyclic_derivative(mono("xxx"), 0) == mono("xx", 3)

    def test_no_occurrence(self):
        assert cyclic_derivative(mono("xz"), 1).is_zero()

    def test_superpotential_recovers_relation(self):
        # d/dx of a(zxy+xyz+yzx) + b(yxz+zyx+xzy) + c x^3
        # must equal 3*(a yz + b zy + c x^2) for every (a, b, c).
        a, b, c = CTX.from_rational(5), CTX.from_rational(7), CTX.from_rational(11)
        s = (
            (mono("zxy") + mono("xyz") + mono("yzx")).scale(a)
            + (mono("yxz") + mono("zyx") + mono("xzy")).scale(b)
            + mono("xxx").scale(c)
        )
        relation = mono("yz").scale(a) + mono("zy").scale(b) + mono("xx").scale(c)
        assert cyclic_derivative(s, 0) == relation.scale(3)

    def test_shifted_superpotential_spans_same_relations(self):
        s = (
            mono("zxy") + mono("xyz") + mono("yzx")
            + (mono("yxz") + mono("zyx") + mono("xzy")).scale(2)
            + (mono("xxx") + mono("yyy") + mono("zzz")).scale(3)
        )
        assert cyclic_shift(s) == s
        for g in range(3):
            assert cyclic_derivative(cyclic_shift(s), g) == cyclic_derivative(s, g)


class TestTextForms:
    def test_word_roundtrip(self):
        w = word_from_text("zxy", GENS)
        assert word_to_text(w, GENS) == "zxy"

    def test_parse_simple(self):
        assert parse_poly(CTX, GENS, "1*yz + 2*zy + 3*xx") == (
            mono("yz") + mono("zy", 2) + mono("xx", 3)
        )

    def test_parse_bare_word_and_signs(self):
        assert parse_poly(CTX, GENS, "xy - yx") == mono("xy") - mono("yx")

    def test_parse_omega_coefficients(self):
        w = CTX.omega()
        p = parse_poly(CTX, GENS, "1*zxy + (1*w)*xyz + w^2*yzx")
        assert p == mono("zxy") + mono("xyz", w) + mono("yzx", w * w)

    def test_parse_rejects_mixed_degrees(self):
        with pytest.raises(InputError):
            parse_poly(CTX, GENS, "1*x + 1*xy")

    def test_parse_rejects_garbage(self):
        with pytest.raises(ParseError):
            parse_poly(CTX, GENS, "1*xq")

    @given(small_polys(3))
    @settings(max_examples=80, deadline=None)
    def test_roundtrip(self, p):
        if p.is_zero():
            return
        assert parse_poly(CTX, GENS, format_poly(p)) == p

    def test_roundtrip_with_cyclotomic_coeffs(self):
        w = CTX.omega()
        p = mono("zxy", w) + mono("xyz", w + 1) - mono("yzx", CTX.from_rational(1) / 3)
        assert parse_poly(CTX, GENS, format_poly(p)) == p
