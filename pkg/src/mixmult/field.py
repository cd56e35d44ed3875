"""Exact coefficient fields: the rationals and prime fields GF(p).

Rational elements are ``gmpy2.mpq`` values (always reduced, positive
denominator). Prime-field elements are plain ``int`` residues in ``[0, p)``.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational

import gmpy2
from gmpy2 import mpq

from .errors import PreconditionError

MAX_PRIME = 2**31


class Field:
    characteristic: int
    name: str

    def __call__(self, value):
        return self.convert(value)

    def __repr__(self) -> str:
        return self.name

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and self.name == other.name

    def __hash__(self) -> int:
        return hash(self.name)


class RationalField(Field):
    characteristic = 0
    name = "QQ"
    modulus = None

    def __init__(self):
        self.zero = mpq(0)
        self.one = mpq(1)

    def convert(self, value):
        if isinstance(value, (int, Rational)) or type(value) is type(self.one):
            return mpq(value)
        if isinstance(value, str):
            return mpq(Fraction(value))
        raise TypeError(f"cannot convert {value!r} to a rational")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a

    def to_string(self, a) -> str:
        return str(a)


class PrimeField(Field):
    def __init__(self, p: int):
        if p < 2 or p >= MAX_PRIME or not gmpy2.is_prime(p):
            raise PreconditionError(f"GF({p}): modulus must be a prime below 2^31")
        self.characteristic = p
        self.modulus = p
        self.name = f"GF({p})"
        self.zero = 0
        self.one = 1

    def convert(self, value):
        p = self.modulus
        if isinstance(value, int):
            return value % p
        if isinstance(value, str):
            value = Fraction(value)
        num, den = int(value.numerator), int(value.denominator)
        if den % p == 0:
            raise ZeroDivisionError(f"denominator {den} vanishes in {self.name}")
        return num * pow(den, -1, p) % p

    def add(self, a, b):
        return (a + b) % self.modulus

    def sub(self, a, b):
        return (a - b) % self.modulus

    def mul(self, a, b):
        return a * b % self.modulus

    def neg(self, a):
        return -a % self.modulus

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.modulus)

    def to_string(self, a) -> str:
        return str(a)


QQ = RationalField()


def GF(p: int) -> PrimeField:
    return PrimeField(p)


def field_from_name(name: str) -> Field:
    """Build a field from ``QQ`` or ``GF(p)``."""
    text = name.replace(" ", "")
    if text == "QQ":
        return QQ
    if text.startswith("GF(") and text.endswith(")") and text[3:-1].isdigit():
        return GF(int(text[3:-1]))
    if text.startswith("ZZ/") and text[3:].isdigit():
        return GF(int(text[3:]))
    raise PreconditionError(f"unknown coefficient field {name!r}")
