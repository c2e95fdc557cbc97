"""Sparse multivariate polynomials over Q with selectable monomial orders.

Monomials are exponent tuples of a fixed length.  By convention the
equivariant contexts use n+1 slots, positions 0..n-1 for x1..xn and the
last position for t; ordinary (non-equivariant) ideals simply use n
slots.  All variables have weight one, so every generator handled by
this package is homogeneous in the total degree.
"""

from __future__ import annotations

import re
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Union

Monomial = tuple[int, ...]
Scalar = Union[int, Fraction]


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    """True when a divides b."""
    return all(x <= y for x, y in zip(a, b))


def monomial_div(a: Monomial, b: Monomial) -> Monomial:
    """The quotient a / b; the caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_degree(a: Monomial) -> int:
    return sum(a)


class MonomialOrder(Enum):
    """Total orders on monomials with precedence x1 > x2 > ... > xn > t.

    The graded orders refine total degree; all three are well-orders on
    the exponent tuples, which is what Buchberger's algorithm needs.
    """

    GREVLEX = "grevlex"
    GRLEX = "grlex"
    LEX = "lex"

    def key(self, m: Monomial):
        """Sort key; larger key means larger monomial."""
        if self is MonomialOrder.LEX:
            return m
        if self is MonomialOrder.GRLEX:
            return (sum(m), m)
        return (sum(m), tuple(-e for e in reversed(m)))


DEFAULT_ORDER = MonomialOrder.GREVLEX


class MPoly:
    """A polynomial stored as a map from exponent tuple to Fraction.

    Instances are immutable by convention: no operation mutates its
    arguments, and stored coefficients are never zero.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, Scalar] | None = None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                mono = tuple(mono)
                if len(mono) != nvars:
                    raise ValueError(
                        f"monomial {mono} has {len(mono)} exponents, expected {nvars}"
                    )
                if any(e < 0 for e in mono):
                    raise ValueError(f"negative exponent in {mono}")
                c = Fraction(coeff)
                if c:
                    clean[mono] = c
        self.nvars = nvars
        self.terms: dict[Monomial, Fraction] = clean

    @classmethod
    def _make(cls, nvars: int, terms: dict[Monomial, Fraction]) -> "MPoly":
        # trusted constructor: terms already normalized
        p = object.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def zero(cls, nvars: int) -> "MPoly":
        return cls._make(nvars, {})

    @classmethod
    def constant(cls, nvars: int, value: Scalar) -> "MPoly":
        c = Fraction(value)
        if not c:
            return cls.zero(nvars)
        return cls._make(nvars, {(0,) * nvars: c})

    @classmethod
    def one(cls, nvars: int) -> "MPoly":
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars: int, position: int) -> "MPoly":
        """The variable at a 0-based position."""
        if not 0 <= position < nvars:
            raise ValueError(f"variable position {position} out of range")
        mono = tuple(1 if i == position else 0 for i in range(nvars))
        return cls._make(nvars, {mono: Fraction(1)})

    @classmethod
    def from_monomial(cls, mono: Monomial, coeff: Scalar = 1) -> "MPoly":
        c = Fraction(coeff)
        if not c:
            return cls.zero(len(mono))
        return cls._make(len(mono), {tuple(mono): c})

    # -- queries ---------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, MPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __len__(self) -> int:
        return len(self.terms)

    def coefficient(self, mono: Monomial) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def total_degree(self) -> int:
        """Maximum total degree of a term; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(m) for m in self.terms}
        return len(degrees) <= 1

    def homogeneous_components(self) -> dict[int, "MPoly"]:
        parts: dict[int, dict[Monomial, Fraction]] = {}
        for mono, c in self.terms.items():
            parts.setdefault(sum(mono), {})[mono] = c
        return {d: MPoly._make(self.nvars, t) for d, t in sorted(parts.items())}

    def leading_monomial(self, order: MonomialOrder = DEFAULT_ORDER) -> Monomial:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading monomial")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder = DEFAULT_ORDER) -> Fraction:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder = DEFAULT_ORDER) -> "MPoly":
        if not self.terms:
            return self
        lc = self.leading_coefficient(order)
        if lc == 1:
            return self
        return MPoly._make(self.nvars, {m: c / lc for m, c in self.terms.items()})

    # -- arithmetic ------------------------------------------------------

    def _check(self, other: "MPoly") -> None:
        if self.nvars != other.nvars:
            raise ValueError(
                f"variable count mismatch: {self.nvars} vs {other.nvars}"
            )

    def __neg__(self) -> "MPoly":
        return MPoly._make(self.nvars, {m: -c for m, c in self.terms.items()})

    def __add__(self, other) -> "MPoly":
        if isinstance(other, (int, Fraction)):
            other = MPoly.constant(self.nvars, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, Fraction(0)) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return MPoly._make(self.nvars, out)

    __radd__ = __add__

    def __sub__(self, other) -> "MPoly":
        if isinstance(other, (int, Fraction)):
            other = MPoly.constant(self.nvars, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "MPoly":
        return (-self) + other

    def __mul__(self, other) -> "MPoly":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return MPoly.zero(self.nvars)
            return MPoly._make(self.nvars, {m: v * c for m, v in self.terms.items()})
        if not isinstance(other, MPoly):
            return NotImplemented
        self._check(other)
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = monomial_mul(m1, m2)
                s = out.get(mono, Fraction(0)) + c1 * c2
                if s:
                    out[mono] = s
                else:
                    del out[mono]
        return MPoly._make(self.nvars, out)

    __rmul__ = __mul__

    def times_monomial(self, mono: Monomial, coeff: Scalar = 1) -> "MPoly":
        """Multiply by coeff * x**mono without building an intermediate MPoly."""
        c = Fraction(coeff)
        if not c:
            return MPoly.zero(self.nvars)
        return MPoly._make(
            self.nvars, {monomial_mul(m, mono): v * c for m, v in self.terms.items()}
        )

    def __pow__(self, exponent: int) -> "MPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = MPoly.one(self.nvars)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def substitute(self, values: Mapping[int, "MPoly"]) -> "MPoly":
        """Replace the variables at the given 0-based positions by polynomials."""
        for pos, val in values.items():
            if not 0 <= pos < self.nvars:
                raise ValueError(f"variable position {pos} out of range")
            if val.nvars != self.nvars:
                raise ValueError(
                    f"variable count mismatch: {val.nvars} vs {self.nvars}"
                )
        result = MPoly.zero(self.nvars)
        for mono, c in self.terms.items():
            kept = tuple(
                0 if i in values else e for i, e in enumerate(mono)
            )
            piece = MPoly.from_monomial(kept, c)
            for pos, val in values.items():
                e = mono[pos]
                if e:
                    piece = piece * (val ** e)
            result = result + piece
        return result

    def eval_last_var_zero(self) -> "MPoly":
        """Set the last variable to zero and drop its slot."""
        out = {
            m[:-1]: c for m, c in self.terms.items() if m[-1] == 0
        }
        return MPoly._make(self.nvars - 1, out)

    def sorted_terms(self, order: MonomialOrder = DEFAULT_ORDER):
        """Terms as (monomial, coefficient) pairs, descending in the order."""
        return [
            (m, self.terms[m])
            for m in sorted(self.terms, key=order.key, reverse=True)
        ]

    def __repr__(self) -> str:
        return f"MPoly({self.nvars}, {dict(self.terms)!r})"


def elementary_symmetric(nvars: int, degree: int, positions: Iterable[int]) -> MPoly:
    """The elementary symmetric polynomial of the given degree in the
    variables at the given 0-based positions.

    Degree zero gives 1; a degree exceeding the number of chosen
    variables gives the zero polynomial (there is no squarefree monomial
    of that degree).
    """
    pos = sorted(set(positions))
    if any(not 0 <= p < nvars for p in pos):
        raise ValueError("variable position out of range")
    if degree < 0:
        raise ValueError("degree must be non-negative")
    if degree == 0:
        return MPoly.one(nvars)
    if degree > len(pos):
        return MPoly.zero(nvars)
    terms: dict[Monomial, Fraction] = {}
    for chosen in combinations(pos, degree):
        mono = [0] * nvars
        for p in chosen:
            mono[p] = 1
        terms[tuple(mono)] = Fraction(1)
    return MPoly._make(nvars, terms)


# -- text format -----------------------------------------------------------
#
# Grammar: terms joined by '+'/'-'; a term is a '*'-separated product of an
# optional rational coefficient ("5", "3/2") and powers "x1^2", "t" (an
# exponent of 1 may be omitted).  Canonical printing sorts terms by the
# active monomial order, descending, e.g. "3/2*x1^2*t - x2*x3 + 5*t^2".


def variable_names(n_x: int, include_t: bool = True) -> tuple[str, ...]:
    """Canonical variable names x1..xn, optionally followed by t."""
    names = tuple(f"x{i}" for i in range(1, n_x + 1))
    return names + ("t",) if include_t else names


class PolyParseError(ValueError):
    """Raised on malformed polynomial text; carries the failure position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9]*)|([-+*^/]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise PolyParseError(
                f"unexpected character {stripped[0]!r}", pos + (len(text[pos:]) - len(stripped))
            )
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            tokens.append(("op", m.group(3), start))
        pos = m.end()
    return tokens


def parse_poly(text: str, names: Iterable[str]) -> MPoly:
    """Parse polynomial text over the given variable names."""
    names = tuple(names)
    index = {name: i for i, name in enumerate(names)}
    nvars = len(names)
    tokens = _tokenize(text)
    if not tokens:
        raise PolyParseError("empty polynomial", 0)

    result = MPoly.zero(nvars)
    i = 0

    def peek():
        return tokens[i] if i < len(tokens) else (None, None, len(text))

    while i < len(tokens):
        sign = 1
        kind, value, pos = peek()
        while kind == "op" and value in "+-":
            if value == "-":
                sign = -sign
            i += 1
            kind, value, pos = peek()
        coeff = Fraction(sign)
        mono = [0] * nvars
        expect_factor = True
        while expect_factor:
            kind, value, pos = peek()
            if kind == "int":
                i += 1
                num = int(value)
                kind2, value2, _ = peek()
                if kind2 == "op" and value2 == "/":
                    i += 1
                    kind3, value3, pos3 = peek()
                    if kind3 != "int":
                        raise PolyParseError("expected denominator", pos3)
                    i += 1
                    den = int(value3)
                    if den == 0:
                        raise PolyParseError("zero denominator", pos3)
                    coeff *= Fraction(num, den)
                else:
                    coeff *= num
            elif kind == "name":
                if value not in index:
                    raise PolyParseError(f"unknown variable {value!r}", pos)
                i += 1
                exp = 1
                kind2, value2, _ = peek()
                if kind2 == "op" and value2 == "^":
                    i += 1
                    kind3, value3, pos3 = peek()
                    if kind3 != "int":
                        raise PolyParseError("expected exponent", pos3)
                    i += 1
                    exp = int(value3)
                mono[index[value]] += exp
            else:
                raise PolyParseError("expected a coefficient or variable", pos)
            kind, value, pos = peek()
            if kind == "op" and value == "*":
                i += 1
            else:
                expect_factor = False
        result = result + MPoly.from_monomial(tuple(mono), coeff)
        kind, value, pos = peek()
        if kind is not None and not (kind == "op" and value in "+-"):
            raise PolyParseError("expected '+' or '-'", pos)
    return result


def format_poly(
    p: MPoly,
    names: Iterable[str],
    order: MonomialOrder = DEFAULT_ORDER,
) -> str:
    """Canonical text for a polynomial: terms descending in the order."""
    names = tuple(names)
    if len(names) != p.nvars:
        raise ValueError(f"expected {p.nvars} variable names, got {len(names)}")
    if not p.terms:
        return "0"
    pieces = []
    for mono, coeff in p.sorted_terms(order):
        mag = abs(coeff)
        factors = []
        for i, e in enumerate(mono):
            if e == 1:
                factors.append(names[i])
            elif e > 1:
                factors.append(f"{names[i]}^{e}")
        if factors:
            body = "*".join(factors)
            if mag != 1:
                body = f"{mag}*{body}"
        else:
            body = str(mag)
        if not pieces:
            pieces.append(body if coeff > 0 else "-" + body)
        else:
            pieces.append(("+ " if coeff > 0 else "- ") + body)
    return " ".join(pieces)
