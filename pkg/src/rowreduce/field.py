"""Exact scalar fields: the rationals and prime fields GF(p).

A :class:`FieldSpec` names a field; a :class:`FieldElement` is one canonical
value in it. Rational values are stored as :class:`fractions.Fraction` (always
reduced, positive denominator); GF(p) values as ``int`` in ``[0, p)``. Because
the stored form is canonical, structural equality is field equality.

    >>> F = GF(7)
    >>> F(3) * F(5)
    GF(7)(1)
    >>> QQ("2/3").inverse()
    QQ(3/2)
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Union

from .errors import DivisionByZero, FieldMismatch, UsageError

RATIONAL = "rational"
PRIME_FIELD = "gf"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class FieldSpec:
    """Declaration of a concrete field. Use :data:`QQ` or :func:`GF`."""

    __slots__ = ("kind", "modulus", "_zero", "_one")

    def __init__(self, kind: str, modulus: int | None = None):
        if kind == RATIONAL:
            if modulus is not None:
                raise UsageError("the rational field takes no modulus")
        elif kind == PRIME_FIELD:
            if not isinstance(modulus, int) or isinstance(modulus, bool):
                raise UsageError(f"prime field modulus must be an integer, got {modulus!r}")
            if not is_prime(modulus):
                raise UsageError(f"composite modulus {modulus}: GF(p) needs p prime")
        else:
            raise UsageError(f"unknown field kind {kind!r}")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "modulus", modulus)
        zero, one = (Fraction(0), Fraction(1)) if kind == RATIONAL else (0, 1)
        object.__setattr__(self, "_zero", FieldElement(self, zero))
        object.__setattr__(self, "_one", FieldElement(self, one))

    def __setattr__(self, name, value):
        raise AttributeError("FieldSpec is immutable")

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return self.kind == other.kind and self.modulus == other.modulus

    def __hash__(self):
        return hash((self.kind, self.modulus))

    def __repr__(self):
        return "QQ" if self.kind == RATIONAL else f"GF({self.modulus})"

    def __reduce__(self):
        return (FieldSpec, (self.kind, self.modulus))

    @property
    def is_rational(self) -> bool:
        return self.kind == RATIONAL

    def zero(self) -> FieldElement:
        return self._zero

    def one(self) -> FieldElement:
        return self._one

    def __call__(self, value: Union[int, Fraction, str, FieldElement]) -> FieldElement:
        """Coerce ``value`` into this field.

        Integers map through the canonical ring homomorphism (so ``GF(7)(-1)``
        is 6). Strings use the textual element syntax; see
        :func:`rowreduce.textio.parse_element` for the strict file grammar.
        """
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatch(f"cannot use an element of {value.field!r} as {self!r}")
            return value
        if isinstance(value, str):
            value = Fraction(value.strip())
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            raise UsageError(f"cannot convert {value!r} to a field element")
        if self.kind == RATIONAL:
            return FieldElement(self, Fraction(value))
        p = self.modulus
        if isinstance(value, int):
            return FieldElement(self, value % p)
        den = value.denominator % p
        if den == 0:
            raise DivisionByZero(f"denominator of {value} vanishes in {self!r}")
        return FieldElement(self, value.numerator * pow(den, -1, p) % p)

    def elements(self):
        """Iterate over every element of a prime field."""
        if self.kind == RATIONAL:
            raise UsageError("the rational field is infinite")
        return (FieldElement(self, v) for v in range(self.modulus))


class FieldElement:
    """Immutable exact scalar. Arithmetic operators stay inside one field."""

    __slots__ = ("_f", "_v")

    def __init__(self, field: FieldSpec, value):
        # Trusted constructor: ``value`` must already be canonical.
        object.__setattr__(self, "_f", field)
        object.__setattr__(self, "_v", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def __reduce__(self):
        return (FieldElement, (self._f, self._v))

    @property
    def field(self) -> FieldSpec:
        return self._f

    @property
    def value(self):
        return self._v

    def _other(self, other) -> FieldElement:
        if other.__class__ is FieldElement:
            if other._f is self._f or other._f == self._f:
                return other
            raise FieldMismatch(f"field mismatch: {self._f!r} vs {other._f!r}")
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._f(other)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        f = self._f
        if f.modulus is None:
            return FieldElement(f, self._v + o._v)
        return FieldElement(f, (self._v + o._v) % f.modulus)

    __radd__ = __add__

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        f = self._f
        if f.modulus is None:
            return FieldElement(f, self._v * o._v)
        return FieldElement(f, (self._v * o._v) % f.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        f = self._f
        if f.modulus is None:
            return FieldElement(f, -self._v)
        return FieldElement(f, -self._v % f.modulus)

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def inverse(self) -> FieldElement:
        f = self._f
        if not self._v:
            raise DivisionByZero(f"zero has no multiplicative inverse in {f!r}")
        if f.modulus is None:
            return FieldElement(f, 1 / self._v)
        # pow with exponent -1 runs the extended Euclidean algorithm
        return FieldElement(f, pow(self._v, -1, f.modulus))

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def is_zero(self) -> bool:
        return not self._v

    def __bool__(self):
        return bool(self._v)

    def __eq__(self, other):
        if other.__class__ is FieldElement:
            return self._v == other._v and (other._f is self._f or other._f == self._f)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            try:
                return self._v == self._f(other)._v
            except DivisionByZero:
                return False
        return NotImplemented

    def __hash__(self):
        return hash((self._f, self._v))

    def __str__(self):
        return str(self._v)

    def __repr__(self):
        return f"{self._f!r}({self._v})"


QQ = FieldSpec(RATIONAL)


@lru_cache(maxsize=None)
def GF(p: int) -> FieldSpec:
    """The prime field of order ``p``; raises :class:`UsageError` if ``p`` is composite."""
    return FieldSpec(PRIME_FIELD, p)


def _same_field(a: FieldElement, b: FieldElement) -> None:
    if not isinstance(a, FieldElement) or not isinstance(b, FieldElement):
        raise UsageError("field operations take FieldElement operands")
    if a.field != b.field:
        raise FieldMismatch(f"field mismatch: {a.field!r} vs {b.field!r}")


def f_add(a: FieldElement, b: FieldElement) -> FieldElement:
    _same_field(a, b)
    return a + b


def f_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _same_field(a, b)
    return a * b


def f_neg(a: FieldElement) -> FieldElement:
    return -a


def f_inv(a: FieldElement) -> FieldElement:
    return a.inverse()
