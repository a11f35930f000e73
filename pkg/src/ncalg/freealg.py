"""Words and homogeneous noncommutative polynomials over a generator set.

A word is a tuple of generator indices; a polynomial is a finite map
from words of one common length to field coefficients.  Everything is
graded: inhomogeneous sums are rejected.

Text forms (single-character generator names required):
  word   ->  plain concatenation, e.g. ``zxy``
  poly   ->  ``coeff*word`` terms joined by ``+`` / ``-``; coefficients
             that are sums are parenthesized, e.g. ``(1 + 2*w)*xyz - 3*yzx``
"""

from __future__ import annotations

from .cyclotomic import CycNum, FieldCtx, format_coeff, parse_coeff
from .errors import ConfigurationError, InputError, ParseError

Word = tuple[int, ...]


def slice_index(word: Word, n: int) -> int:
    """Bijective base-n encoding of words of fixed length into [0, n^len)."""
    out = 0
    for letter in word:
        if not 0 <= letter < n:
            raise InputError(f"letter {letter} out of range for {n} generators")
        out = out * n + letter
    return out


def word_from_index(index: int, n: int, degree: int) -> Word:
    """Inverse of :func:`slice_index` on words of the given length."""
    letters = []
    for _ in range(degree):
        index, r = divmod(index, n)
        letters.append(r)
    return tuple(reversed(letters))


def word_to_text(word: Word, gens: tuple[str, ...]) -> str:
    if any(len(g) != 1 for g in gens):
        raise ParseError("text form needs single-character generator names")
    return "".join(gens[i] for i in word)


def word_from_text(text: str, gens: tuple[str, ...]) -> Word:
    if any(len(g) != 1 for g in gens):
        raise ParseError("text form needs single-character generator names")
    lookup = {g: i for i, g in enumerate(gens)}
    try:
        return tuple(lookup[ch] for ch in text)
    except KeyError as exc:
        raise ParseError(f"unknown generator {exc.args[0]!r} in word {text!r}") from None


class NcPoly:
    """Homogeneous noncommutative polynomial; treat as immutable."""

    __slots__ = ("ctx", "gens", "degree", "terms")

    def __init__(self, ctx: FieldCtx, gens: tuple[str, ...], degree: int,
                 terms: dict[Word, CycNum]):
        self.ctx = ctx
        self.gens = tuple(gens)
        self.degree = degree
        self.terms = {w: c for w, c in terms.items() if c}
        for w in self.terms:
            if len(w) != degree:
                raise InputError(
                    f"word {w} has length {len(w)}, expected degree {degree}"
                )

    @classmethod
    def zero(cls, ctx, gens, degree: int) -> NcPoly:
        return cls(ctx, gens, degree, {})

    @classmethod
    def monomial(cls, ctx, gens, word: Word, coeff=1) -> NcPoly:
        if not isinstance(coeff, CycNum):
            coeff = ctx.from_rational(coeff)
        return cls(ctx, gens, len(word), {tuple(word): coeff})

    @property
    def n(self) -> int:
        return len(self.gens)

    def is_zero(self) -> bool:
        return not self.terms

    def _compat(self, other: NcPoly) -> None:
        if self.ctx.m != other.ctx.m or self.gens != other.gens:
            raise ConfigurationError("polynomials live over different presentations")

    def __add__(self, other: NcPoly) -> NcPoly:
        self._compat(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.degree != other.degree:
            raise InputError("cannot add polynomials of different degrees")
        terms = dict(self.terms)
        for w, c in other.terms.items():
            s = terms.get(w)
            terms[w] = c if s is None else s + c
        return NcPoly(self.ctx, self.gens, self.degree, terms)

    def __neg__(self) -> NcPoly:
        return NcPoly(self.ctx, self.gens, self.degree,
                      {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: NcPoly) -> NcPoly:
        return self + (-other)

    def scale(self, coeff) -> NcPoly:
        if not isinstance(coeff, CycNum):
            coeff = self.ctx.from_rational(coeff)
        return NcPoly(self.ctx, self.gens, self.degree,
                      {w: c * coeff for w, c in self.terms.items()})

    def __mul__(self, other: NcPoly) -> NcPoly:
        """Free product: exact convolution over concatenated words."""
        self._compat(other)
        terms: dict[Word, CycNum] = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                s = terms.get(w)
                terms[w] = c if s is None else s + c
        return NcPoly(self.ctx, self.gens, self.degree + other.degree, terms)

    def sorted_terms(self) -> list[tuple[Word, CycNum]]:
        """Terms sorted with the largest word (x before y before z) first."""
        return sorted(self.terms.items(), key=lambda item: item[0])

    def __eq__(self, other):
        if not isinstance(other, NcPoly):
            return NotImplemented
        return (self.ctx.m == other.ctx.m and self.gens == other.gens
                and self.degree == other.degree and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ctx.m, self.gens, self.degree,
                     frozenset(self.terms.items())))

    def __repr__(self):
        return f"NcPoly({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def cyclic_derivative(poly: NcPoly, gen: int) -> NcPoly:
    """Cyclic derivative with respect to one generator.

    Every occurrence of the generator splits its word as u*g*v and
    contributes coeff * (v*u); the degree drops by one.
    """
    if poly.degree < 1:
        raise InputError("cyclic derivative needs degree >= 1")
    terms: dict[Word, CycNum] = {}
    for w, c in poly.terms.items():
        for pos, letter in enumerate(w):
            if letter == gen:
                rotated = w[pos + 1:] + w[:pos]
                s = terms.get(rotated)
                terms[rotated] = c if s is None else s + c
    return NcPoly(poly.ctx, poly.gens, poly.degree - 1, terms)


def cyclic_shift(poly: NcPoly) -> NcPoly:
    """Rotate every word one step: the last letter moves to the front."""
    terms: dict[Word, CycNum] = {}
    for w, c in poly.terms.items():
        rotated = w[-1:] + w[:-1]
        s = terms.get(rotated)
        terms[rotated] = c if s is None else s + c
    return NcPoly(poly.ctx, poly.gens, poly.degree, terms)


def format_poly(poly: NcPoly) -> str:
    """Canonical text form; :func:`parse_poly` recovers the input exactly."""
    if poly.is_zero():
        return "0"
    parts: list[tuple[bool, str]] = []
    for word, coeff in poly.sorted_terms():
        nonzero = [k for k, c in enumerate(coeff.coords) if c]
        word_text = word_to_text(word, poly.gens)
        if len(nonzero) == 1:
            k = nonzero[0]
            rat = coeff.coords[k]
            neg = rat < 0
            mag = -rat if neg else rat
            body = str(mag) if k == 0 else (f"{mag}*w" if k == 1 else f"{mag}*w^{k}")
        else:
            neg = False
            body = f"({format_coeff(coeff)})"
        parts.append((neg, f"{body}*{word_text}" if word_text else body))
    neg, body = parts[0]
    out = ("-" if neg else "") + body
    for neg, body in parts[1:]:
        out += (" - " if neg else " + ") + body
    return out


def parse_poly(ctx: FieldCtx, gens: tuple[str, ...], text: str) -> NcPoly:
    """Parse the poly text form; all words must have one common length."""
    compact = text.strip()
    if compact in ("", "0"):
        raise ParseError("cannot parse a zero/empty polynomial without a degree")
    term_texts = _split_signed(compact)
    terms: dict[Word, CycNum] = {}
    degree = None
    for sign, body in term_texts:
        coeff_text, word_text = _split_term(body, gens)
        coeff = parse_coeff(ctx, coeff_text) * sign
        word = word_from_text(word_text, gens)
        if degree is None:
            degree = len(word)
        elif len(word) != degree:
            raise InputError(f"mixed degrees in polynomial {text!r}")
        s = terms.get(word)
        terms[word] = coeff if s is None else s + coeff
    return NcPoly(ctx, gens, degree, terms)


def _split_signed(text: str) -> list[tuple[int, str]]:
    # Top-level +/- always separate terms: multi-term coefficients are
    # required to be parenthesized in the poly text form.
    out = []
    i, text = 0, text.strip()
    while i < len(text):
        sign = 1
        while i < len(text) and text[i] in "+- ":
            if text[i] == "-":
                sign = -sign
            i += 1
        start, depth = i, 0
        while i < len(text):
            ch = text[i]
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            elif ch in "+-" and depth == 0:
                break
            i += 1
        body = text[start:i].strip()
        if not body:
            raise ParseError(f"empty term in polynomial {text!r}")
        out.append((sign, body))
    return out


def _split_term(body: str, gens: tuple[str, ...]) -> tuple[str, str]:
    gen_chars = set(gens)
    if body.startswith("("):
        if ")" not in body:
            raise ParseError(f"unbalanced parentheses in {body!r}")
        close = body.rindex(")")
        coeff = body[1:close]
        rest = body[close + 1:]
        if rest.startswith("*"):
            rest = rest[1:]
        return coeff, rest.strip()
    star = body.rfind("*")
    tail = body[star + 1:]
    if star >= 0 and tail and all(ch in gen_chars for ch in tail):
        return body[:star], tail
    if tail and all(ch in gen_chars for ch in tail) and not any(
        ch.isdigit() or ch == "/" for ch in body
    ) and star < 0:
        return "1", body
    return body, ""
