from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncalg.cyclotomic import (
    CycNum,
    FieldCtx,
    cyc_arith,
    cyc_inv,
    cyclotomic_polynomial,
    format_coeff,
    parse_coeff,
    root_of_unity,
)
from ncalg.errors import ConfigurationError, ParseError


def poly_mod_oracle(exponent, phi):
    """Brute-force remainder of x^exponent modulo phi (monic, int coeffs)."""
    rem = [0] * exponent + [1]
    deg = len(phi) - 1
    while len(rem) > deg:
        lead = rem[-1]
        shift = len(rem) - 1 - deg
        for j, c in enumerate(phi):
            rem[shift + j] -= lead * c
        while len(rem) > 1 and rem[-1] == 0:
            rem.pop()
    rem += [0] * (deg - len(rem))
    return rem


class TestCyclotomicPolynomial:
    def test_small_orders(self):
        assert cyclotomic_polynomial(1) == (-1, 1)
        assert cyclotomic_polynomial(2) == (1, 1)
        assert cyclotomic_polynomial(3) == (1, 1, 1)
        assert cyclotomic_polynomial(4) == (1, 0, 1)
        assert cyclotomic_polynomial(6) == (1, -1, 1)
        assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)

    def test_degree_is_totient(self):
        totients = {1: 1, 2: 1, 3: 2, 4: 2, 5: 4, 6: 2, 7: 6, 8: 4, 9: 6, 12: 4}
        for m, phi in totients.items():
            assert FieldCtx(m).degree == phi


class TestArithmetic:
    def test_omega_squared_times_omega(self):
        ctx = FieldCtx(3)
        w = ctx.omega()
        assert cyc_arith("mul", w, w * w) == ctx.one

    def test_one_plus_omega_plus_omega_squared(self):
        ctx = FieldCtx(3)
        w = ctx.omega()
        assert ctx.one + w + w * w == ctx.zero

    def test_zeta12_sixth_power(self):
        # Oracle: reduce x^6 mod Phi_12 by brute-force polynomial division.
        ctx = FieldCtx(12)
        expected = poly_mod_oracle(6, cyclotomic_polynomial(12))
        assert expected == [-1, 0, 0, 0]
        assert ctx.zeta(6) + ctx.one == ctx.zero

    def test_context_mismatch(self):
        with pytest.raises(ConfigurationError):
            cyc_arith("add", FieldCtx(3).one, FieldCtx(4).one)

    def test_sub(self):
        ctx = FieldCtx(3)
        assert cyc_arith("sub", ctx.zeta(1), ctx.zeta(1)) == ctx.zero


class TestInverse:
    def test_inverse_of_one_minus_omega(self):
        ctx = FieldCtx(3)
        w = ctx.omega()
        inv = cyc_inv(ctx.one - w)
        # Oracle: expand the claimed identity (1 - w)(2 + w)/3 = 1 mod Phi_3.
        assert (ctx.one - w) * (ctx.from_rational(2) + w) == ctx.from_rational(3)
        assert inv == (ctx.from_rational(2) + w) * Fraction(1, 3)
        assert inv * (ctx.one - w) == ctx.one

    def test_inverse_of_one(self):
        ctx = FieldCtx(3)
        assert cyc_inv(ctx.one) == ctx.one

    def test_inverse_of_omega(self):
        ctx = FieldCtx(3)
        assert cyc_inv(ctx.omega()) == ctx.zeta(2)

    def test_zero_division(self):
        with pytest.raises(ZeroDivisionError):
            cyc_inv(FieldCtx(3).zero)


class TestRootOfUnity:
    def test_identity(self):
        ctx = FieldCtx(3)
        assert root_of_unity(ctx, 0) == ctx.one

    def test_exponent_reduction(self):
        ctx = FieldCtx(3)
        assert root_of_unity(ctx, 4) == ctx.omega()

    def test_minus_one_in_q_i(self):
        # Oracle: x^2 mod Phi_4 = x^2 + 1 gives -1.
        ctx = FieldCtx(4)
        expected = poly_mod_oracle(2, cyclotomic_polynomial(4))
        assert expected == [-1, 0]
        assert root_of_unity(ctx, 2) == ctx.from_rational(-1)

    @pytest.mark.parametrize("m", [1, 2, 3, 4, 6, 12])
    def test_primitive_order(self, m):
        ctx = FieldCtx(m)
        z = ctx.zeta(1)
        assert z**m == ctx.one
        for j in range(1, m):
            assert z**j != ctx.one


def cyc_numbers(m=3):
    ctx = FieldCtx(m)
    rat = st.fractions(
        min_value=-4, max_value=4, max_denominator=6
    )
    return st.tuples(*[rat] * ctx.degree).map(
        lambda coords: CycNum(ctx, tuple(Fraction(c) for c in coords))
    )


class TestFieldAxioms:
    @given(cyc_numbers(), cyc_numbers(), cyc_numbers())
    @settings(max_examples=60, deadline=None)
    def test_associativity_and_distributivity(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) + c == a + (b + c)

    @given(cyc_numbers())
    @settings(max_examples=60, deadline=None)
    def test_inverse_roundtrip(self, a):
        if not a.is_zero():
            assert a.inv() * a == FieldCtx(3).one

    @given(cyc_numbers(m=12))
    @settings(max_examples=40, deadline=None)
    def test_conjugation_is_involutive_hom(self, a):
        assert a.conjugate().conjugate() == a


class TestCoefficientStrings:
    @pytest.mark.parametrize(
        "text",
        ["0", "1", "-1", "2/3", "-1/3*w^2 + 2", "1*w", "w^2", "-w", "2 - 1/3*w^2"],
    )
    def test_parse_accepts_grammar(self, text):
        parse_coeff(FieldCtx(3), text)

    def test_example_value(self):
        ctx = FieldCtx(3)
        x = parse_coeff(ctx, "-1/3*w^2 + 2")
        assert x == ctx.from_rational(2) - ctx.zeta(2) * Fraction(1, 3)

    def test_bad_syntax(self):
        with pytest.raises(ParseError):
            parse_coeff(FieldCtx(3), "2**w")
        with pytest.raises(ParseError):
            parse_coeff(FieldCtx(3), "")

    @given(cyc_numbers())
    @settings(max_examples=100, deadline=None)
    def test_roundtrip_m3(self, a):
        assert parse_coeff(FieldCtx(3), format_coeff(a)) == a

    @given(cyc_numbers(m=12))
    @settings(max_examples=60, deadline=None)
    def test_roundtrip_m12(self, a):
        assert parse_coeff(FieldCtx(12), format_coeff(a)) == a
