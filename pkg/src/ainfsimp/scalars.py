"""Exact scalar fields: the rationals and prime fields of odd characteristic.

Rational scalars are plain ``fractions.Fraction`` objects.  Prime-field
scalars are ``FpElement`` instances supporting the same operators, so the
linear algebra layer never needs to know which field it is working over.
Characteristic 2 is rejected: there +1 = -1 and a sign-checking library
would silently verify nothing.
"""

from __future__ import annotations

from fractions import Fraction


class FieldError(ValueError):
    """Raised for invalid field constructions or mixed-field arithmetic."""


class FpElement:
    """An element of Z/p, normalized to the representative 0 <= value < p."""

    __slots__ = ("value", "p")

    def __init__(self, value, p):
        self.value = value % p
        self.p = p

    def _check(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise FieldError(f"mixed moduli {self.p} and {other.p}")
            return other
        if isinstance(other, int):
            return FpElement(other, self.p)
        return None

    def __add__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return FpElement(self.value + o.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return FpElement(self.value - o.value, self.p)

    def __rsub__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return FpElement(o.value - self.value, self.p)

    def __mul__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        return FpElement(self.value * o.value, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._check(other)
        if o is None:
            return NotImplemented
        if o.value == 0:
            raise ZeroDivisionError(f"division by zero in Z/{self.p}")
        return FpElement(self.value * pow(o.value, -1, self.p), self.p)

    def __neg__(self):
        return FpElement(-self.value, self.p)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Rationals:
    """The field of rational numbers; elements are ``Fraction``."""

    name = "rational"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, k):
        return Fraction(k)

    def parse(self, text):
        try:
            return Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"bad rational scalar {text!r}") from exc

    def format(self, x):
        return str(x)

    def random(self, rng, span=2):
        # Small integers keep generated instances readable and arithmetic cheap.
        return Fraction(rng.randint(-span, span))

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "Rationals()"


class PrimeField:
    """The field Z/p for an odd prime p."""

    name = "prime"

    def __init__(self, p):
        if not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        if p == 2:
            raise FieldError("characteristic 2 is not allowed: signs would be invisible")
        self.p = p

    def zero(self):
        return FpElement(0, self.p)

    def one(self):
        return FpElement(1, self.p)

    def from_int(self, k):
        return FpElement(k, self.p)

    def parse(self, text):
        try:
            return FpElement(int(text), self.p)
        except ValueError as exc:
            raise FieldError(f"bad prime-field scalar {text!r}") from exc

    def format(self, x):
        return str(x.value)

    def random(self, rng, span=None):
        return FpElement(rng.randrange(self.p), self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("prime", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


def field_to_descriptor(field):
    if isinstance(field, Rationals):
        return {"kind": "rational"}
    if isinstance(field, PrimeField):
        return {"kind": "prime", "p": field.p}
    raise FieldError(f"unknown field {field!r}")


def field_from_descriptor(desc):
    kind = desc.get("kind")
    if kind == "rational":
        return Rationals()
    if kind == "prime":
        return PrimeField(int(desc["p"]))
    raise FieldError(f"unknown ring descriptor {desc!r}")
