"""Exact arithmetic in the cyclotomic field Q(zeta_m).

Elements are stored by their coordinates in the power basis
1, w, ..., w^(deg-1) of Q[x]/(Phi_m(x)), where w is a primitive m-th
root of unity and Phi_m is the m-th cyclotomic polynomial.  Using
Phi_m rather than x^m - 1 makes the quotient a field for every m, so
exact division is always available.

Coefficient strings use the grammar accepted by :func:`parse_coeff`:
signed sums of terms ``R`` or ``R*w^K`` with ``R`` an integer or a
fraction ``int/int``, for example ``-1/3*w^2 + 2``.  Printing with
:func:`format_coeff` round-trips bit-exactly through the parser.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ConfigurationError, ParseError

_ZERO = Fraction(0)
_ONE = Fraction(1)


def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_m, constant term first, monic."""
    if m < 1:
        raise ConfigurationError(f"root-of-unity order must be positive, got {m}")
    # x^m - 1 = prod_{d | m} Phi_d, so divide out the proper divisors.
    num = [-1] + [0] * (m - 1) + [1]
    for d in range(1, m):
        if m % d == 0:
            num = _divexact_int(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _divexact_int(num: list[int], den: list[int]) -> list[int]:
    # Exact division of integer polynomials, den monic.
    out = [0] * (len(num) - len(den) + 1)
    rem = list(num)
    for i in reversed(range(len(out))):
        c = rem[i + len(den) - 1]
        out[i] = c
        for j, dc in enumerate(den):
            rem[i + j] -= c * dc
    if any(rem):
        raise ArithmeticError("non-exact polynomial division")
    return out


class FieldCtx:
    """Field context for Q(zeta_m): the minimal polynomial plus reduction data.

    Read-only after construction; share freely between threads.
    """

    __slots__ = ("m", "phi_coeffs", "degree", "_powers", "_red", "_zero", "_one")

    def __init__(self, m: int = 3):
        self.m = m
        self.phi_coeffs = cyclotomic_polynomial(m)
        self.degree = len(self.phi_coeffs) - 1
        deg = self.degree
        # w^deg expressed in the power basis.
        top = tuple(Fraction(-c) for c in self.phi_coeffs[:deg])
        # w^e for e = deg .. 2*deg-2, used to fold products back into the basis.
        red = [top]
        for _ in range(deg - 2):
            prev = red[-1]
            shifted = (_ZERO,) + prev[: deg - 1]
            carry = prev[deg - 1]
            red.append(tuple(shifted[i] + carry * top[i] for i in range(deg)))
        self._red = tuple(red)
        # w^k for k = 0 .. m-1.
        powers = [tuple(_ONE if i == 0 else _ZERO for i in range(deg))]
        for _ in range(m - 1):
            powers.append(self._mul_by_w(powers[-1]))
        self._powers = tuple(powers)
        self._zero = CycNum(self, tuple(_ZERO for _ in range(deg)))
        self._one = CycNum(self, powers[0])

    def _mul_by_w(self, coords):
        deg = self.degree
        shifted = [_ZERO] + list(coords[: deg - 1])
        carry = coords[deg - 1]
        if carry:
            top = self._red[0]
            shifted = [shifted[i] + carry * top[i] for i in range(deg)]
        return tuple(shifted)

    @property
    def zero(self) -> CycNum:
        return self._zero

    @property
    def one(self) -> CycNum:
        return self._one

    def zeta(self, k: int = 1) -> CycNum:
        """The root of unity w^k, reduced to the power basis."""
        return CycNum(self, self._powers[k % self.m])

    def omega(self) -> CycNum:
        """A primitive cube root of unity; requires 3 | m."""
        if self.m % 3 != 0:
            raise ConfigurationError(
                f"field order {self.m} has no cube root of unity (need 3 | m)"
            )
        return self.zeta(self.m // 3)

    def from_rational(self, value) -> CycNum:
        r = Fraction(value)
        return CycNum(self, (r,) + tuple(_ZERO for _ in range(self.degree - 1)))

    def __eq__(self, other):
        return isinstance(other, FieldCtx) and other.m == self.m

    def __hash__(self):
        return hash(("FieldCtx", self.m))

    def __repr__(self):
        return f"FieldCtx(m={self.m})"


def _check_ctx(a: FieldCtx, b: FieldCtx) -> None:
    if a.m != b.m:
        raise ConfigurationError(f"field context mismatch: m={a.m} vs m={b.m}")


class CycNum:
    """An element of Q(zeta_m); immutable and hashable."""

    __slots__ = ("ctx", "coords")

    def __init__(self, ctx: FieldCtx, coords: tuple[Fraction, ...]):
        self.ctx = ctx
        self.coords = coords

    def _coerce(self, other):
        if isinstance(other, CycNum):
            _check_ctx(self.ctx, other.ctx)
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.from_rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycNum(self.ctx, tuple(a + b for a, b in zip(self.coords, o.coords)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycNum(self.ctx, tuple(a - b for a, b in zip(self.coords, o.coords)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return CycNum(self.ctx, tuple(-a for a in self.coords))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        ctx = self.ctx
        deg = ctx.degree
        if deg == 1:
            return CycNum(ctx, (self.coords[0] * o.coords[0],))
        a, b = self.coords, o.coords
        conv = [_ZERO] * (2 * deg - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        out = conv[:deg]
        red = ctx._red
        for e in range(deg, 2 * deg - 1):
            c = conv[e]
            if c:
                row = red[e - deg]
                for i in range(deg):
                    if row[i]:
                        out[i] += c * row[i]
        return CycNum(ctx, tuple(out))

    __rmul__ = __mul__

    def inv(self) -> CycNum:
        """Multiplicative inverse, via the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_m)")
        ctx = self.ctx
        # Run xgcd(self, Phi_m) over Q[x]; the gcd is a nonzero constant.
        a = list(self.coords)
        b = [Fraction(c) for c in ctx.phi_coeffs]
        sa, sb = [_ONE], [_ZERO]
        while True:
            a = _trim(a)
            if len(a) == 1:
                break
            b = _trim(b)
            if len(b) < len(a):
                a, b, sa, sb = b, a, sb, sa
                continue
            factor = b[-1] / a[-1]
            shift = len(b) - len(a)
            b = [
                bc - factor * a[i - shift] if 0 <= i - shift < len(a) else bc
                for i, bc in enumerate(b)
            ]
            sb = _poly_sub_shifted(sb, sa, factor, shift)
            a, b, sa, sb = b, a, sb, sa
        const = a[0]
        inv_coords = [c / const for c in sa]
        inv_coords += [_ZERO] * (ctx.degree - len(inv_coords))
        return CycNum(ctx, tuple(inv_coords[: ctx.degree]))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self.inv() if exponent < 0 else self
        out = self.ctx.one
        for _ in range(abs(exponent)):
            out = out * base
        return out

    def conjugate(self) -> CycNum:
        """Complex conjugation, the field automorphism w -> w^(-1)."""
        ctx = self.ctx
        out = ctx.zero
        for k, c in enumerate(self.coords):
            if c:
                out = out + CycNum(ctx, ctx._powers[(-k) % ctx.m]) * c
        return out

    def is_zero(self) -> bool:
        return not any(self.coords)

    def is_rational(self) -> bool:
        return not any(self.coords[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coords[0]

    def as_integer(self) -> int:
        r = self.as_fraction()
        if r.denominator != 1:
            raise ValueError(f"{self} is not an integer")
        return r.numerator

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ctx.from_rational(other)
        if not isinstance(other, CycNum):
            return NotImplemented
        return self.ctx.m == other.ctx.m and self.coords == other.coords

    def __hash__(self):
        return hash((self.ctx.m, self.coords))

    def __repr__(self):
        return f"CycNum({self.ctx.m}, {format_coeff(self)!r})"

    def __str__(self):
        return format_coeff(self)


def _trim(poly):
    end = len(poly)
    while end > 1 and not poly[end - 1]:
        end -= 1
    return poly[:end]


def _poly_sub_shifted(p, q, factor, shift):
    # p - factor * x^shift * q, over Fraction lists.
    out = list(p) + [_ZERO] * max(0, shift + len(q) - len(p))
    for i, qc in enumerate(q):
        out[shift + i] -= factor * qc
    return out


_RAT = r"\d+(?:/\d+)?"
_TERM_RE = re.compile(
    rf"^(?:(?P<rat>{_RAT})(?:\*w(?:\^(?P<pow>\d+))?)?|w(?:\^(?P<solo>\d+))?)$"
)


def parse_coeff(ctx: FieldCtx, text: str) -> CycNum:
    """Parse a coefficient string: signed sums of ``R`` or ``R*w^K`` terms."""
    compact = text.replace(" ", "")
    if not compact:
        raise ParseError("empty coefficient string")
    # Split into signed terms.
    pieces: list[tuple[int, str]] = []
    sign, start = 1, 0
    if compact[0] in "+-":
        sign = -1 if compact[0] == "-" else 1
        start = 1
    cur = []
    for ch in compact[start:]:
        if ch in "+-":
            pieces.append((sign, "".join(cur)))
            sign = -1 if ch == "-" else 1
            cur = []
        else:
            cur.append(ch)
    pieces.append((sign, "".join(cur)))
    out = ctx.zero
    for s, term in pieces:
        m = _TERM_RE.match(term)
        if not m:
            raise ParseError(f"bad coefficient term {term!r} in {text!r}")
        rat = Fraction(m.group("rat")) if m.group("rat") else _ONE
        if m.group("rat") and m.group("pow") is None and "*" not in term:
            power = 0
        elif m.group("rat"):
            power = int(m.group("pow") or 1) if "*" in term else 0
        else:
            power = int(m.group("solo") or 1)
        out = out + ctx.zeta(power) * (s * rat)
    return out


def format_coeff(x: CycNum) -> str:
    """Canonical coefficient string; ``parse_coeff`` recovers x exactly."""
    parts: list[tuple[bool, str]] = []
    for k, c in enumerate(x.coords):
        if not c:
            continue
        mag = -c if c < 0 else c
        if k == 0:
            body = str(mag)
        elif k == 1:
            body = f"{mag}*w"
        else:
            body = f"{mag}*w^{k}"
        parts.append((c < 0, body))
    if not parts:
        return "0"
    neg, body = parts[0]
    out = ("-" if neg else "") + body
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out


def cyc_arith(op: str, x: CycNum, y: CycNum) -> CycNum:
    """Dispatch form of field arithmetic: op in {"add", "sub", "mul"}."""
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    raise ConfigurationError(f"unknown operation {op!r}")


def cyc_inv(x: CycNum) -> CycNum:
    return x.inv()


def root_of_unity(ctx: FieldCtx, k: int) -> CycNum:
    return ctx.zeta(k)
