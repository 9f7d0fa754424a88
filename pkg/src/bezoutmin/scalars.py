"""Exact coefficient rings.

Every ring here is an integral Bezout domain with an effective extended gcd.
Elements are plain Python values that support ``+ - *`` and ``==``:

* ``INT``      -- Python ``int``
* ``RAT``      -- ``fractions.Fraction``
* ``POLY``     -- :class:`RationalPolynomial` (univariate over Q)
* ``FRACPOLY`` -- :class:`FractionalPowerPolynomial` (non-negative rational
  exponents over Q; Bezout but not a PID)

A ring object carries the operations that are not expressible with operators
(exact division, extended gcd, units, parsing) and builds its fraction field.
"""
from __future__ import annotations

import math
import re
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any, Iterable


class InexactDivision(ArithmeticError):
    """Raised when ``exact_divide(a, b)`` is asked for a non-multiple ``a``."""


class DivisionByZero(ZeroDivisionError):
    pass


class ScalarParseError(ValueError):
    pass


_RAT_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def parse_rational(text: str) -> Fraction:
    m = _RAT_RE.match(text)
    if not m:
        raise ScalarParseError(f"not a rational number: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ScalarParseError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


# --------------------------------------------------------------------------
# ring contract


class BezoutRing(ABC):
    """Contract for an integral Bezout domain with effective gcd.

    Subclasses provide ``zero``, ``one`` and the abstract methods below;
    ring addition and multiplication are the elements' own operators.
    """

    name: str
    zero: Any
    one: Any

    def add(self, a, b):
        return a + b

    def negate(self, a):
        return -a

    def multiply(self, a, b):
        return a * b

    def is_zero(self, a) -> bool:
        return a == self.zero

    @abstractmethod
    def coerce(self, value): ...

    @abstractmethod
    def exact_divide(self, a, b): ...

    @abstractmethod
    def extended_gcd(self, a, b) -> tuple:
        """Return ``(d, alpha, beta)`` with ``alpha*a + beta*b == d``.

        ``d`` is the canonical associate of gcd(a, b); gcd(0, 0) is 0 with
        coefficients (0, 0).
        """

    @abstractmethod
    def is_unit(self, a) -> bool: ...

    @abstractmethod
    def canonical_unit(self, a):
        """Unit ``u`` such that ``u*a`` is the canonical associate of ``a``.

        For ``a == 0`` this is ``one``.
        """

    @abstractmethod
    def parse(self, text: str): ...

    @abstractmethod
    def format(self, a) -> str: ...

    @abstractmethod
    def fraction_field(self) -> "Field": ...

    # derived helpers

    def canonical(self, a):
        return self.canonical_unit(a) * a

    def gcd(self, a, b):
        return self.extended_gcd(a, b)[0]

    def lcm(self, a, b):
        if self.is_zero(a) or self.is_zero(b):
            return self.zero
        return self.canonical(self.exact_divide(a * b, self.gcd(a, b)))

    def divides(self, d, a) -> bool:
        if self.is_zero(d):
            return self.is_zero(a)
        try:
            self.exact_divide(a, d)
        except InexactDivision:
            return False
        return True

    def inverse(self, u):
        return self.exact_divide(self.one, u)

    def __eq__(self, other):
        return isinstance(other, BezoutRing) and other.name == self.name

    def __hash__(self):
        return hash(self.name)

    def __repr__(self):
        return f"<ring {self.name}>"


class IntegerRing(BezoutRing):
    name = "int"
    zero = 0
    one = 1

    def coerce(self, value):
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise TypeError(f"{value} is not an integer")
            return value.numerator
        if isinstance(value, bool) or not isinstance(value, int):
            raise TypeError(f"{value!r} is not an integer")
        return value

    def exact_divide(self, a, b):
        if b == 0:
            raise DivisionByZero("division by zero")
        q, r = divmod(a, b)
        if r:
            raise InexactDivision(f"{b} does not divide {a}")
        return q

    def extended_gcd(self, a, b):
        old_r, r = a, b
        old_s, s = 1, 0
        old_t, t = 0, 1
        while r:
            q = old_r // r
            old_r, r = r, old_r - q * r
            old_s, s = s, old_s - q * s
            old_t, t = t, old_t - q * t
        if old_r == 0:
            return 0, 0, 0
        if old_r < 0:
            return -old_r, -old_s, -old_t
        return old_r, old_s, old_t

    def is_unit(self, a):
        return a in (1, -1)

    def canonical_unit(self, a):
        return -1 if a < 0 else 1

    def parse(self, text):
        m = _RAT_RE.match(text)
        if not m or m.group(2) is not None:
            raise ScalarParseError(f"not an integer: {text!r}")
        return int(m.group(1))

    def format(self, a):
        return str(a)

    def fraction_field(self):
        return _INT_FIELD


class RationalRing(BezoutRing):
    """Q as a (trivially) Bezout ring: gcd of anything nonzero is 1."""

    name = "rat"
    zero = Fraction(0)
    one = Fraction(1)

    def coerce(self, value):
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise TypeError(f"{value!r} is not rational")
        return Fraction(value)

    def exact_divide(self, a, b):
        if b == 0:
            raise DivisionByZero("division by zero")
        return Fraction(a) / b

    def extended_gcd(self, a, b):
        if a != 0:
            return self.one, 1 / Fraction(a), self.zero
        if b != 0:
            return self.one, self.zero, 1 / Fraction(b)
        return self.zero, self.zero, self.zero

    def is_unit(self, a):
        return a != 0

    def canonical_unit(self, a):
        return self.one if a == 0 else 1 / Fraction(a)

    def parse(self, text):
        return parse_rational(text)

    def format(self, a):
        return format_rational(a)

    def fraction_field(self):
        return _RAT_FIELD


# --------------------------------------------------------------------------
# polynomials with rational (or integer) exponents


class FractionalPowerPolynomial:
    """Finite sum of terms ``c * X**e`` with ``e`` a non-negative rational.

    Stored as a tuple of ``(exponent, coefficient)`` pairs sorted by
    increasing exponent, with no zero coefficients.  Immutable and hashable.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Any = ()):
        if isinstance(terms, dict):
            items = terms.items()
        else:
            items = terms
        acc: dict[Fraction, Fraction] = {}
        for e, c in items:
            e = Fraction(e)
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            acc[e] = acc.get(e, Fraction(0)) + Fraction(c)
        self._check_exponents(acc)
        object.__setattr__(
            self, "terms", tuple(sorted((e, c) for e, c in acc.items() if c != 0))
        )

    def _check_exponents(self, acc):
        pass

    def __setattr__(self, key, value):
        raise AttributeError("polynomials are immutable")

    @classmethod
    def constant(cls, c):
        return cls({0: c})

    @classmethod
    def monomial(cls, c, e):
        return cls({e: c})

    def _lift(self, other):
        if isinstance(other, FractionalPowerPolynomial):
            if type(other) is not type(self):
                raise TypeError(f"cannot mix {type(self).__name__} and {type(other).__name__}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return type(self).constant(other)
        return NotImplemented

    @property
    def degree(self):
        return self.terms[-1][0] if self.terms else None

    @property
    def leading_coefficient(self) -> Fraction:
        return self.terms[-1][1] if self.terms else Fraction(0)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.terms[0][0] == 0)

    def radix(self) -> int:
        """Least common multiple of the exponent denominators."""
        return math.lcm(1, *(e.denominator for e, _ in self.terms))

    def to_dense(self, radix: int) -> list[Fraction]:
        """Coefficient list (low to high) in ``Y = X**(1/radix)``."""
        if not self.terms:
            return []
        out = [Fraction(0)] * (int(self.degree * radix) + 1)
        for e, c in self.terms:
            k = e * radix
            if k.denominator != 1:
                raise ValueError(f"radix {radix} does not clear exponent {e}")
            out[int(k)] = c
        return out

    @classmethod
    def from_dense(cls, coeffs: Iterable[Fraction], radix: int):
        return cls((Fraction(k, radix), c) for k, c in enumerate(coeffs) if c != 0)

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = acc.get(e, 0) + c
        return type(self)(acc)

    __radd__ = __add__

    def __neg__(self):
        return type(self)((e, -c) for e, c in self.terms)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        acc: dict[Fraction, Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return type(self)(acc)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, FractionalPowerPolynomial):
            return type(other) is type(self) and self.terms == other.terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.terms == type(self).constant(other).terms
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.terms[0][1] if self.terms else 0)
        return hash(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"{type(self).__name__}({format_polynomial(self)!r})"

    def __str__(self):
        return format_polynomial(self)


class RationalPolynomial(FractionalPowerPolynomial):
    """Ordinary polynomial in X over Q (integer exponents only)."""

    __slots__ = ()

    def _check_exponents(self, acc):
        for e, c in acc.items():
            if c != 0 and e.denominator != 1:
                raise ValueError(f"fractional exponent {e} in an ordinary polynomial")


def _dense_trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _dense_sub_mul(a: list, b: list, c: Fraction, shift: int) -> list:
    out = list(a) + [Fraction(0)] * max(0, len(b) + shift - len(a))
    for i, bc in enumerate(b):
        out[i + shift] -= c * bc
    return _dense_trim(out)


def _dense_mul(a: list, b: list) -> list:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _dense_trim(out)


def _dense_add(a: list, b: list) -> list:
    n = max(len(a), len(b))
    return _dense_trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def dense_divmod(a: list, b: list) -> tuple[list, list]:
    """Polynomial long division over Q on coefficient lists."""
    if not b:
        raise DivisionByZero("polynomial division by zero")
    r = _dense_trim(list(a))
    q = [Fraction(0)] * max(0, len(r) - len(b) + 1)
    while len(r) >= len(b):
        c = r[-1] / b[-1]
        shift = len(r) - len(b)
        q[shift] = c
        r = _dense_sub_mul(r, b, c, shift)
    return _dense_trim(q), r


def dense_extended_gcd(a: list, b: list) -> tuple[list, list, list]:
    """Euclid on coefficient lists; the gcd is monic (or empty for 0, 0)."""
    old_r, r = _dense_trim(list(a)), _dense_trim(list(b))
    old_s, s = [Fraction(1)], []
    old_t, t = [], [Fraction(1)]
    while r:
        q, rem = dense_divmod(old_r, r)
        old_r, r = r, rem
        old_s, s = s, _dense_add(old_s, [-c for c in _dense_mul(q, s)])
        old_t, t = t, _dense_add(old_t, [-c for c in _dense_mul(q, t)])
    if not old_r:
        return [], [], []
    u = 1 / old_r[-1]
    scale = lambda p: [u * c for c in p]  # noqa: E731
    return scale(old_r), scale(old_s), scale(old_t)


class PolynomialRing(BezoutRing):
    """Q[X], or with ``fractional=True`` the ring of fractional-power polynomials.

    All gcd and division work happens in Q[Y] with ``Y = X**(1/L)`` where L
    clears every exponent denominator of the operands.
    """

    def __init__(self, fractional: bool = False):
        self.fractional = fractional
        self.element = FractionalPowerPolynomial if fractional else RationalPolynomial
        self.name = "fracpoly" if fractional else "poly"
        self.zero = self.element()
        self.one = self.element.constant(1)

    def coerce(self, value):
        if isinstance(value, FractionalPowerPolynomial):
            if type(value) is not self.element:
                raise TypeError(f"{value!r} is not in {self.name}")
            return value
        if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
            return self.element.constant(value)
        raise TypeError(f"{value!r} is not in {self.name}")

    def common_radix(self, *polys) -> int:
        return math.lcm(1, *(p.radix() for p in polys))

    def exact_divide(self, a, b, radix: int | None = None):
        if not b:
            raise DivisionByZero("division by zero")
        L = radix or self.common_radix(a, b)
        q, r = dense_divmod(a.to_dense(L), b.to_dense(L))
        if r:
            raise InexactDivision(f"{b} does not divide {a}")
        return self.element.from_dense(q, L)

    def extended_gcd(self, a, b, radix: int | None = None):
        L = radix or self.common_radix(a, b)
        d, s, t = dense_extended_gcd(a.to_dense(L), b.to_dense(L))
        back = lambda p: self.element.from_dense(p, L)  # noqa: E731
        return back(d), back(s), back(t)

    def is_unit(self, a):
        return bool(a) and a.is_constant()

    def canonical_unit(self, a):
        if not a:
            return self.one
        return self.element.constant(1 / a.leading_coefficient)

    def parse(self, text):
        return parse_polynomial(text, self.element)

    def format(self, a):
        return format_polynomial(a)

    def fraction_field(self):
        return FractionField(self)


_TERM_RE = re.compile(
    r"""^(?P<coef>\d+(?:/\d+)?)?
        (?:(?P<star>\*)?X(?:\^(?:(?P<iexp>\d+)|\((?P<fexp>\d+(?:/\d+)?)\)))?)?$""",
    re.VERBOSE,
)


def parse_polynomial(text: str, cls=FractionalPowerPolynomial):
    """Parse sums of ``c*X^e`` terms, e.g. ``"2*X^(1/2)+1"`` or ``"-X^2+3/4"``."""
    s = text.replace(" ", "")
    if not s:
        raise ScalarParseError("empty polynomial")
    pieces = re.findall(r"[+-]?[^+-]+", s)
    if "".join(pieces) != s:
        raise ScalarParseError(f"malformed polynomial {text!r}")
    acc: dict[Fraction, Fraction] = {}
    for piece in pieces:
        sign = -1 if piece[0] == "-" else 1
        body = piece.lstrip("+-")
        m = _TERM_RE.match(body)
        has_x = "X" in body
        if not m or not body or bool(m.group("star")) != bool(m.group("coef") and has_x):
            raise ScalarParseError(f"malformed term {piece!r} in {text!r}")
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        if has_x:
            exp = Fraction(m.group("iexp") or m.group("fexp") or 1)
        else:
            exp = Fraction(0)
        acc[exp] = acc.get(exp, 0) + sign * coef
    try:
        return cls(acc)
    except ValueError as exc:
        raise ScalarParseError(str(exc)) from exc


def _format_exponent(e: Fraction) -> str:
    if e == 1:
        return "X"
    if e.denominator == 1:
        return f"X^{e.numerator}"
    return f"X^({e.numerator}/{e.denominator})"


def format_polynomial(p: FractionalPowerPolynomial) -> str:
    if not p.terms:
        return "0"
    out = []
    for e, c in reversed(p.terms):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e == 0:
            body = format_rational(mag)
        elif mag == 1:
            body = _format_exponent(e)
        else:
            body = f"{format_rational(mag)}*{_format_exponent(e)}"
        out.append((sign, body))
    first_sign, first = out[0]
    text = ("-" if first_sign == "-" else "") + first
    return text + "".join(sign + body for sign, body in out[1:])


# --------------------------------------------------------------------------
# fraction fields


class Field(ABC):
    """Fraction field of a Bezout ring; elements support ``+ - * /``."""

    base: BezoutRing
    zero: Any
    one: Any

    def is_zero(self, x) -> bool:
        return x == self.zero

    @abstractmethod
    def embed(self, k): ...

    @abstractmethod
    def parts(self, x) -> tuple:
        """``(numerator, denominator)`` in the base ring, denominator canonical."""

    def divide(self, x, y):
        if self.is_zero(y):
            raise DivisionByZero("division by zero")
        return x / y

    def in_base(self, x) -> bool:
        return self.base.is_unit(self.parts(x)[1])

    def to_base(self, x):
        n, d = self.parts(x)
        return self.base.exact_divide(n, d)

    def format(self, x) -> str:
        n, d = self.parts(x)
        if self.base.is_unit(d):
            return self.base.format(self.base.exact_divide(n, d))
        fn, fd = self.base.format(n), self.base.format(d)
        if isinstance(n, FractionalPowerPolynomial):
            fn = fn if len(n.terms) <= 1 else f"({fn})"
            fd = fd if len(d.terms) <= 1 else f"({fd})"
        return f"{fn}/{fd}"


class _FractionsOfIntegers(Field):
    base = IntegerRing()
    zero = Fraction(0)
    one = Fraction(1)

    def embed(self, k):
        return Fraction(k)

    def parts(self, x):
        return x.numerator, x.denominator


class _RationalsAsOwnField(Field):
    base = RationalRing()
    zero = Fraction(0)
    one = Fraction(1)

    def embed(self, k):
        return Fraction(k)

    def parts(self, x):
        return Fraction(x), Fraction(1)


class FractionElement:
    """Normalized ``numerator / denominator`` over a Bezout ring."""

    __slots__ = ("ring", "numerator", "denominator")

    def __init__(self, ring: BezoutRing, numerator, denominator=None):
        if denominator is None:
            denominator = ring.one
        if ring.is_zero(denominator):
            raise DivisionByZero("zero denominator")
        g = ring.gcd(numerator, denominator)
        n = ring.exact_divide(numerator, g)
        d = ring.exact_divide(denominator, g)
        u = ring.canonical_unit(d)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "numerator", u * n)
        object.__setattr__(self, "denominator", u * d)

    def __setattr__(self, key, value):
        raise AttributeError("fractions are immutable")

    def _lift(self, other):
        if isinstance(other, FractionElement):
            return other
        try:
            return FractionElement(self.ring, self.ring.coerce(other))
        except TypeError:
            return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return FractionElement(
            self.ring,
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self):
        return FractionElement(self.ring, -self.numerator, self.denominator)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return -self + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return FractionElement(
            self.ring, self.numerator * other.numerator, self.denominator * other.denominator
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return FractionElement(
            self.ring, self.numerator * other.denominator, self.denominator * other.numerator
        )

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other / self

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.numerator == other.numerator and self.denominator == other.denominator

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __bool__(self):
        return not self.ring.is_zero(self.numerator)

    def __repr__(self):
        return f"FractionElement({self.numerator!s}, {self.denominator!s})"


class FractionField(Field):
    def __init__(self, base: BezoutRing):
        self.base = base
        self.zero = FractionElement(base, base.zero)
        self.one = FractionElement(base, base.one)

    def embed(self, k):
        return FractionElement(self.base, k)

    def parts(self, x):
        return x.numerator, x.denominator


_INT_FIELD = _FractionsOfIntegers()
_RAT_FIELD = _RationalsAsOwnField()

INT = IntegerRing()
RAT = RationalRing()
POLY = PolynomialRing()
FRACPOLY = PolynomialRing(fractional=True)

RINGS: dict[str, BezoutRing] = {r.name: r for r in (INT, RAT, POLY, FRACPOLY)}


def ring_by_name(name: str) -> BezoutRing:
    try:
        return RINGS[name]
    except KeyError:
        raise ValueError(f"unknown ring {name!r}; expected one of {sorted(RINGS)}") from None
