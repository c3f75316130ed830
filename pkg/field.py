# field.py

"""
Exakte Arithmetik im Primkörper F_p.

Alle Konstruktionen ziehen nur endlich viele verschiedene Körperelemente, und
alle Dimensionsaussagen werden idealtheoretisch berechnet (gültig über dem
algebraischen Abschluss). Deshalb genügt ein großer Primkörper.

Intern rechnen die Module mit kanonischen Repräsentanten `0 <= v < p` als
`int`; `Scalar` ist die gekapselte Form für die öffentliche Schnittstelle.
"""
from dataclasses import dataclass, field as dc_field

import sympy

import config
from errors import FieldMismatch, FieldTooSmall, InvalidField, ZeroInverse


@dataclass(frozen=True)
class FieldConfig:
    """Der Grundkörper F_p. Der Tag dient nur der Herkunftsangabe."""
    prime: int = config.DEFAULT_PRIME
    tag: str = dc_field(default="default", compare=False)

    def __post_init__(self):
        # F_2 bietet keine zwei Elemente ungleich null
        if not isinstance(self.prime, int) or self.prime <= 2 or self.prime >= config.MAX_PRIME:
            raise InvalidField(f"Primzahl muss 2 < p < 2^63 erfüllen, erhalten: {self.prime}")
        if not sympy.isprime(self.prime):
            raise InvalidField(f"{self.prime} ist keine Primzahl")

    def __call__(self, value):
        return Scalar(int(value) % self.prime, self)

    @property
    def zero(self):
        return Scalar(0, self)

    @property
    def one(self):
        return Scalar(1, self)

    def require_more_than(self, needed, what=""):
        """Stellt sicher, dass p > needed gilt; sonst FieldTooSmall."""
        if self.prime <= needed:
            raise FieldTooSmall(self.prime, needed, what)

    def canonical(self, value):
        """Kanonischer Repräsentant einer ganzen Zahl (oder eines Scalar)."""
        if isinstance(value, Scalar):
            self._check(value.field)
            return value.value
        return int(value) % self.prime

    def _check(self, other):
        if other.prime != self.prime:
            raise FieldMismatch(f"Arithmetik zwischen F_{self.prime} und F_{other.prime}")


@dataclass(frozen=True)
class Scalar:
    value: int
    field: FieldConfig

    def __post_init__(self):
        if not 0 <= self.value < self.field.prime:
            raise InvalidField(f"{self.value} ist kein kanonischer Repräsentant in F_{self.field.prime}")

    def _other(self, other):
        if isinstance(other, Scalar):
            self.field._check(other.field)
            return other.value
        if isinstance(other, int):
            return other % self.field.prime
        return NotImplemented

    def __add__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return Scalar((self.value + v) % self.field.prime, self.field)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return Scalar((self.value - v) % self.field.prime, self.field)

    def __rsub__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return Scalar((v - self.value) % self.field.prime, self.field)

    def __mul__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return Scalar((self.value * v) % self.field.prime, self.field)

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar((-self.value) % self.field.prime, self.field)

    def __truediv__(self, other):
        v = self._other(other)
        if v is NotImplemented:
            return v
        return self * inv(Scalar(v, self.field))

    def __pow__(self, exp):
        return power(self, exp)

    def __int__(self):
        return self.value

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"F{self.field.prime}({self.value})"


def power(base, exp):
    """base^exp mod p für exp >= 0; pow(b, 0) = 1."""
    if exp < 0:
        raise InvalidField(f"Negativer Exponent {exp}")
    return Scalar(pow(base.value, exp, base.field.prime), base.field)


def inv(a):
    """Multiplikatives Inverses; ZeroInverse für a = 0."""
    if a.value == 0:
        raise ZeroInverse("0 ist in F_p nicht invertierbar")
    return Scalar(pow(a.value, -1, a.field.prime), a.field)


def vandermonde_row(gamma, length):
    """Der Koeffizientenvektor (1, γ, γ², …, γ^(length-1))."""
    if length < 1:
        raise InvalidField(f"Länge muss positiv sein, erhalten: {length}")
    p = gamma.field.prime
    row, acc = [], 1
    for _ in range(length):
        row.append(Scalar(acc, gamma.field))
        acc = acc * gamma.value % p
    return tuple(row)


def vandermonde_ints(gamma, length, prime):
    """Wie vandermonde_row, aber auf kanonischen int-Repräsentanten."""
    row, acc = [], 1
    for _ in range(length):
        row.append(acc)
        acc = acc * gamma % prime
    return tuple(row)
