"""Exact arithmetic in the field K = Q(i, sqrt2).

Elements are written a + b*i + c*sqrt2 + d*i*sqrt2 with rational a, b, c, d.
Internally a KScalar keeps four integers over one positive common
denominator, reduced so the gcd of all five numbers is 1.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Union

Rational = Fraction
Number = Union[int, Fraction, "KScalar"]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot read {x!r} as a rational")


class KScalar:
    """An element of Q(i, sqrt2); immutable and hashable."""

    __slots__ = ("_n", "_den")

    def __init__(self, a=0, b=0, c=0, d=0):
        fs = [_frac(x) for x in (a, b, c, d)]
        den = 1
        for f in fs:
            den = den * f.denominator // gcd(den, f.denominator)
        self._set(tuple(f.numerator * (den // f.denominator) for f in fs), den)

    def _set(self, n, den):
        g = den
        for x in n:
            g = gcd(g, x)
        if g != 1:
            n = tuple(x // g for x in n)
            den //= g
        self._n = n
        self._den = den

    @classmethod
    def _raw(cls, n, den) -> "KScalar":
        obj = cls.__new__(cls)
        if den < 0:
            n = tuple(-x for x in n)
            den = -den
        obj._set(n, den)
        return obj

    @classmethod
    def coerce(cls, x) -> "KScalar":
        if isinstance(x, KScalar):
            return x
        if isinstance(x, int):
            return cls._raw((x, 0, 0, 0), 1)
        if isinstance(x, Fraction):
            return cls._raw((x.numerator, 0, 0, 0), x.denominator)
        if isinstance(x, complex):
            raise TypeError("floating complex numbers are not exact")
        raise TypeError(f"cannot coerce {x!r} to KScalar")

    # components
    @property
    def a(self) -> Fraction:
        return Fraction(self._n[0], self._den)

    @property
    def b(self) -> Fraction:
        return Fraction(self._n[1], self._den)

    @property
    def c(self) -> Fraction:
        return Fraction(self._n[2], self._den)

    @property
    def d(self) -> Fraction:
        return Fraction(self._n[3], self._den)

    def parts(self) -> tuple:
        return (self.a, self.b, self.c, self.d)

    def is_zero(self) -> bool:
        return not any(self._n)

    def is_rational(self) -> bool:
        return not (self._n[1] or self._n[2] or self._n[3])

    def __bool__(self) -> bool:
        return any(self._n)

    # arithmetic
    def __add__(self, other):
        if not isinstance(other, KScalar):
            try:
                other = KScalar.coerce(other)
            except TypeError:
                return NotImplemented
        n1, d1 = self._n, self._den
        n2, d2 = other._n, other._den
        if d1 == d2:
            return KScalar._raw(tuple(x + y for x, y in zip(n1, n2)), d1)
        return KScalar._raw(tuple(x * d2 + y * d1 for x, y in zip(n1, n2)), d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return KScalar._raw(tuple(-x for x in self._n), self._den)

    def __sub__(self, other):
        if not isinstance(other, KScalar):
            try:
                other = KScalar.coerce(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return KScalar._raw(tuple(x * other for x in self._n), self._den)
        if isinstance(other, Fraction):
            return KScalar._raw(tuple(x * other.numerator for x in self._n),
                                self._den * other.denominator)
        if not isinstance(other, KScalar):
            return NotImplemented
        a, b, c, d = self._n
        e, f, g, h = other._n
        n = (a * e - b * f + 2 * c * g - 2 * d * h,
             a * f + b * e + 2 * c * h + 2 * d * g,
             a * g + c * e - b * h - d * f,
             a * h + d * e + b * g + c * f)
        return KScalar._raw(n, self._den * other._den)

    __rmul__ = __mul__

    def conj(self) -> "KScalar":
        """Complex conjugation i -> -i (fixes sqrt2)."""
        a, b, c, d = self._n
        return KScalar._raw((a, -b, c, -d), self._den)

    def sqrt2_conj(self) -> "KScalar":
        """The Galois automorphism sqrt2 -> -sqrt2 (fixes i)."""
        a, b, c, d = self._n
        return KScalar._raw((a, b, -c, -d), self._den)

    def inv(self) -> "KScalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in K")
        # over Q(sqrt2): x * conj(x) lies in Q(sqrt2), then rationalize sqrt2
        m = self * self.conj()
        r = m * m.sqrt2_conj()
        assert r.is_rational()
        q = r.a
        return self.conj() * m.sqrt2_conj() * (1 / q)

    def __truediv__(self, other):
        if not isinstance(other, KScalar):
            try:
                other = KScalar.coerce(other)
            except TypeError:
                return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return KScalar.coerce(other) * self.inv()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        out, base = ONE, self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def norm(self) -> Fraction:
        """Product of the four Galois conjugates; zero only for zero."""
        m = self * self.conj()
        r = m * m.sqrt2_conj()
        return r.a

    # comparison and hashing
    def __eq__(self, other):
        if isinstance(other, KScalar):
            return self._n == other._n and self._den == other._den
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.a)
        return hash((self._n, self._den))

    def __repr__(self):
        return f"KScalar({self})"

    def __str__(self):
        terms = []
        for val, unit in zip(self.parts(), ("", "i", "sqrt2", "i*sqrt2")):
            if val == 0:
                continue
            if unit == "":
                terms.append(str(val))
            elif val == 1:
                terms.append(unit)
            elif val == -1:
                terms.append("-" + unit)
            else:
                terms.append(f"{val}*{unit}")
        if not terms:
            return "0"
        return "+".join(terms).replace("+-", "-")

    def to_json(self) -> dict:
        return {k: str(v) for k, v in zip("abcd", self.parts())}

    @classmethod
    def from_json(cls, obj: dict) -> "KScalar":
        return cls(*(Fraction(obj[k]) for k in "abcd"))


ZERO = KScalar()
ONE = KScalar(1)
I = KScalar(0, 1)
SQRT2 = KScalar(0, 0, 1)
HALF = KScalar(Fraction(1, 2))
# primitive eighth root of unity (1 + i) / sqrt2
ZETA8 = KScalar(0, 0, Fraction(1, 2), Fraction(1, 2))
UNITS = (ONE, I, -ONE, -I)


def k_add(x: KScalar, y: KScalar) -> KScalar:
    return x + y


def k_mul(x: KScalar, y: KScalar) -> KScalar:
    return x * y


def k_conj(x: KScalar) -> KScalar:
    return x.conj()


def k_inv(x: KScalar) -> KScalar:
    return x.inv()


def k(x) -> KScalar:
    """Coerce an int, Fraction or KScalar to KScalar."""
    return KScalar.coerce(x)


def zeta8_power(m: int) -> KScalar:
    """exp(i*pi*m/4), exactly."""
    return _ZETA_POWERS[m % 8]


_ZETA_POWERS = []
_z = ONE
for _ in range(8):
    _ZETA_POWERS.append(_z)
    _z = _z * ZETA8
del _z
