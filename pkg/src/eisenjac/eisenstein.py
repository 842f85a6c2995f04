"""Eisenstein integers Z[w] and their fraction field Q(w).

Elements are stored in the basis {1, w} where w = exp(i*pi/3) is a primitive
sixth root of unity, so that w**2 = w - 1 and w**3 = -1.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational

__all__ = [
    "Eisenstein",
    "EisensteinRational",
    "W",
    "UNITS",
    "H_ELEMENTS",
    "is_unit",
    "in_h",
    "unit_power",
    "euclidean_div",
    "gcd",
    "canonical_associate",
    "sixth_power_is_integer",
    "parse_eisenstein",
]


def _round_half_even(num: int, den: int) -> int:
    """Nearest integer to num/den (den > 0), ties to even."""
    q, r = divmod(num, den)
    twice = 2 * r
    if twice > den or (twice == den and q % 2 == 1):
        q += 1
    return q


class Eisenstein:
    """An Eisenstein integer a + b*w."""

    __slots__ = ("a", "b")

    def __init__(self, a: int = 0, b: int = 0) -> None:
        object.__setattr__(self, "a", int(a))
        object.__setattr__(self, "b", int(b))

    def __setattr__(self, name, value):
        raise AttributeError("Eisenstein is immutable")

    @classmethod
    def coerce(cls, x) -> Eisenstein:
        if isinstance(x, Eisenstein):
            return x
        if isinstance(x, int):
            return cls(x, 0)
        if isinstance(x, str):
            return parse_eisenstein(x)
        raise TypeError(f"cannot convert {type(x).__name__} to Eisenstein")

    # ring structure

    def __add__(self, other):
        if isinstance(other, Eisenstein):
            return Eisenstein(self.a + other.a, self.b + other.b)
        if isinstance(other, int):
            return Eisenstein(self.a + other, self.b)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Eisenstein(-self.a, -self.b)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if isinstance(other, Eisenstein):
            return Eisenstein(self.a - other.a, self.b - other.b)
        if isinstance(other, int):
            return Eisenstein(self.a - other, self.b)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return Eisenstein(other - self.a, -self.b)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Eisenstein):
            a, b, c, d = self.a, self.b, other.a, other.b
            bd = b * d
            return Eisenstein(a * c - bd, a * d + b * c + bd)
        if isinstance(other, int):
            return Eisenstein(self.a * other, self.b * other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not is_unit(self):
                raise ValueError("negative powers only for units")
            return self.conj() ** (-k)
        result, base = Eisenstein(1, 0), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        return EisensteinRational.coerce(self) / other

    def __rtruediv__(self, other):
        return EisensteinRational.coerce(other) / self

    def __floordiv__(self, other):
        return euclidean_div(self, other)[0]

    def __mod__(self, other):
        return euclidean_div(self, other)[1]

    def __divmod__(self, other):
        return euclidean_div(self, other)

    def exact_div(self, other) -> Eisenstein:
        """Quotient self/other, which must lie in Z[w]."""
        other = Eisenstein.coerce(other)
        n = other.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Z[w]")
        t = self * other.conj()
        qa, ra = divmod(t.a, n)
        qb, rb = divmod(t.b, n)
        if ra or rb:
            raise ValueError(f"{other} does not divide {self}")
        return Eisenstein(qa, qb)

    def divides(self, other) -> bool:
        other = Eisenstein.coerce(other)
        if not self:
            return not other
        t = other * self.conj()
        n = self.norm()
        return t.a % n == 0 and t.b % n == 0

    # complex structure

    def conj(self) -> Eisenstein:
        return Eisenstein(self.a + self.b, -self.b)

    def norm(self) -> int:
        a, b = self.a, self.b
        return a * a + a * b + b * b

    def __complex__(self) -> complex:
        return complex(self.a + 0.5 * self.b, self.b * 0.8660254037844386)

    # value semantics

    def __eq__(self, other):
        if isinstance(other, Eisenstein):
            return self.a == other.a and self.b == other.b
        if isinstance(other, int):
            return self.b == 0 and self.a == other
        if isinstance(other, EisensteinRational):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __bool__(self):
        return bool(self.a or self.b)

    def __repr__(self):
        return f"Eisenstein({self.a}, {self.b})"

    def __str__(self):
        return _format(self.a, self.b)


def _format(a, b) -> str:
    if b == 0:
        return str(a)
    if b == 1:
        wpart = "w"
    elif b == -1:
        wpart = "-w"
    else:
        wpart = f"{b}w"
    if a == 0:
        return wpart
    return f"{a}{wpart}" if wpart.startswith("-") else f"{a}+{wpart}"


W = Eisenstein(0, 1)
# UNITS[k] == w**k
UNITS = (
    Eisenstein(1, 0),
    Eisenstein(0, 1),
    Eisenstein(-1, 1),
    Eisenstein(-1, 0),
    Eisenstein(0, -1),
    Eisenstein(1, -1),
)
H_ELEMENTS = (Eisenstein(0, 0),) + UNITS


def is_unit(x: Eisenstein) -> bool:
    return x.norm() == 1


def in_h(x: Eisenstein) -> bool:
    return x.norm() <= 1


def unit_power(u: Eisenstein) -> int:
    """The k in 0..5 with u == w**k."""
    try:
        return UNITS.index(u)
    except ValueError:
        raise ValueError(f"{u} is not a sixth root of unity") from None


def euclidean_div(x, y) -> tuple[Eisenstein, Eisenstein]:
    """Return (q, r) with x = q*y + r and norm(r) <= 3/4 norm(y).

    q rounds each coordinate of x/y to the nearest integer, ties to even.
    """
    x = Eisenstein.coerce(x)
    y = Eisenstein.coerce(y)
    n = y.norm()
    if n == 0:
        raise ZeroDivisionError("Euclidean division by zero")
    t = x * y.conj()
    q = Eisenstein(_round_half_even(t.a, n), _round_half_even(t.b, n))
    return q, x - q * y


def canonical_associate(x) -> tuple[Eisenstein, Eisenstein]:
    """Return (c, u) with c = u*x, u a unit and c in {a >= 1, b >= 0} or c = 0."""
    x = Eisenstein.coerce(x)
    if not x:
        return x, UNITS[0]
    for u in UNITS:
        c = u * x
        if c.a >= 1 and c.b >= 0:
            return c, u
    raise AssertionError("unreachable: every nonzero element has a canonical associate")


def gcd(x, y) -> Eisenstein:
    """Canonical greatest common divisor via the Euclidean algorithm."""
    x = Eisenstein.coerce(x)
    y = Eisenstein.coerce(y)
    if not x and not y:
        raise ValueError("gcd(0, 0) is undefined")
    while y:
        x, y = y, euclidean_div(x, y)[1]
    return canonical_associate(x)[0]


def sixth_power_is_integer(x) -> bool:
    return (Eisenstein.coerce(x) ** 6).b == 0


_INT = re.compile(r"^[+-]?\d+$")
_WPOW = re.compile(r"^(?P<s>[+-]?)w\^(?P<k>[+-]?\d+)$")
_AFFINE = re.compile(r"^(?:(?P<a>[+-]?\d+)(?=[+-]))?(?P<s>[+-]?)(?P<b>\d*)\*?w$")


def parse_eisenstein(text: str) -> Eisenstein:
    """Parse "a", "bw", "a+bw", "a-bw", "w", "-w" or "w^k" (k taken mod 6)."""
    t = "".join(text.split())
    if _INT.match(t):
        return Eisenstein(int(t), 0)
    m = _WPOW.match(t)
    if m:
        u = UNITS[int(m.group("k")) % 6]
        return -u if m.group("s") == "-" else u
    m = _AFFINE.match(t)
    if m:
        b = int(m.group("b")) if m.group("b") else 1
        if m.group("s") == "-":
            b = -b
        return Eisenstein(int(m.group("a") or 0), b)
    raise ValueError(f"not an Eisenstein integer: {text!r}")


class EisensteinRational:
    """An element p + q*w of Q(w) with Fraction coordinates."""

    __slots__ = ("p", "q")

    def __init__(self, p=0, q=0) -> None:
        object.__setattr__(self, "p", Fraction(p))
        object.__setattr__(self, "q", Fraction(q))

    def __setattr__(self, name, value):
        raise AttributeError("EisensteinRational is immutable")

    @classmethod
    def coerce(cls, x) -> EisensteinRational:
        if isinstance(x, EisensteinRational):
            return x
        if isinstance(x, Eisenstein):
            return cls(x.a, x.b)
        if isinstance(x, (int, Rational)):
            return cls(x, 0)
        raise TypeError(f"cannot convert {type(x).__name__} to EisensteinRational")

    def is_integral(self) -> bool:
        return self.p.denominator == 1 and self.q.denominator == 1

    def to_eisenstein(self) -> Eisenstein:
        if not self.is_integral():
            raise ValueError(f"{self} is not an Eisenstein integer")
        return Eisenstein(self.p.numerator, self.q.numerator)

    def denominator(self) -> int:
        """Least positive integer d with d*self in Z[w]."""
        return math.lcm(self.p.denominator, self.q.denominator)

    def __add__(self, other):
        try:
            o = EisensteinRational.coerce(other)
        except TypeError:
            return NotImplemented
        return EisensteinRational(self.p + o.p, self.q + o.q)

    __radd__ = __add__

    def __neg__(self):
        return EisensteinRational(-self.p, -self.q)

    def __sub__(self, other):
        try:
            o = EisensteinRational.coerce(other)
        except TypeError:
            return NotImplemented
        return EisensteinRational(self.p - o.p, self.q - o.q)

    def __rsub__(self, other):
        return EisensteinRational.coerce(other) - self

    def __mul__(self, other):
        try:
            o = EisensteinRational.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, c, d = self.p, self.q, o.p, o.q
        bd = b * d
        return EisensteinRational(a * c - bd, a * d + b * c + bd)

    __rmul__ = __mul__

    def conj(self) -> EisensteinRational:
        return EisensteinRational(self.p + self.q, -self.q)

    def norm(self) -> Fraction:
        return self.p * self.p + self.p * self.q + self.q * self.q

    def inverse(self) -> EisensteinRational:
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        c = self.conj()
        return EisensteinRational(c.p / n, c.q / n)

    def __truediv__(self, other):
        try:
            o = EisensteinRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return EisensteinRational.coerce(other) * self.inverse()

    def __complex__(self):
        return complex(float(self.p) + 0.5 * float(self.q), float(self.q) * 0.8660254037844386)

    def __eq__(self, other):
        try:
            o = EisensteinRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.p == o.p and self.q == o.q

    def __hash__(self):
        if self.is_integral():
            return hash(self.to_eisenstein())
        return hash((self.p, self.q))

    def __bool__(self):
        return bool(self.p or self.q)

    def __repr__(self):
        return f"EisensteinRational({self.p!s}, {self.q!s})"

    def __str__(self):
        return _format(self.p, self.q)

