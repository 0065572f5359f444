"""Exact scalars: rationals and the cyclotomic field Q(w), w^2 + w + 1 = 0.

Rationals are ``gmpy2.mpq``. Elements of Q(w) are :class:`Cyc3` values
``a + b*w`` in the basis {1, w}. A rational embeds into Q(w) with b = 0;
there is no other coercion.

>>> w = q_root_of_unity(+1)
>>> w * w * w
Cyc3(1, 0)
>>> w + 1 / w
Cyc3(-1, 0)
"""
from __future__ import annotations

import numbers
from fractions import Fraction
from typing import Union

from gmpy2 import mpq

Rat = type(mpq())

__all__ = [
    "Rat", "Cyc3", "ExactScalar", "rat", "to_scalar", "cyc_invert",
    "q_root_of_unity", "is_zero", "render", "parse_scalar", "scalar_pow",
    "DegenerateParameters",
]


def rat(x, den=None) -> Rat:
    """Build an exact rational from an int, Fraction, mpq or a string like ``"3/2"``."""
    if den is not None:
        return mpq(x, den)
    if isinstance(x, str):
        return mpq(x.strip())
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, (float, complex)):
        raise TypeError("floating point values are not exact scalars")
    return mpq(x)


class Cyc3:
    """An element a + b*w of Q(w), with w a primitive cube root of unity."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = a if type(a) is Rat else rat(a)
        self.b = b if type(b) is Rat else rat(b)

    @staticmethod
    def _lift(other):
        if isinstance(other, Cyc3):
            return other
        if isinstance(other, numbers.Rational):
            return Cyc3(other, 0)
        return None

    def __add__(self, other):
        if isinstance(other, Cyc3):
            return Cyc3(self.a + other.a, self.b + other.b)
        if isinstance(other, numbers.Rational):
            return Cyc3(self.a + other, self.b)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Cyc3(-self.a, -self.b)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if isinstance(other, Cyc3):
            return Cyc3(self.a - other.a, self.b - other.b)
        if isinstance(other, numbers.Rational):
            return Cyc3(self.a - other, self.b)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, numbers.Rational):
            return Cyc3(other - self.a, -self.b)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Cyc3):
            a, b, c, d = self.a, self.b, other.a, other.b
            bd = b * d
            # w^2 = -1 - w
            return Cyc3(a * c - bd, a * d + b * c - bd)
        if isinstance(other, numbers.Rational):
            return Cyc3(self.a * other, self.b * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Cyc3):
            return self * cyc_invert(other)
        if isinstance(other, numbers.Rational):
            if other == 0:
                raise ZeroDivisionError("division by zero in Q(w)")
            return Cyc3(self.a / other, self.b / other)
        return NotImplemented

    def __rtruediv__(self, other):
        lifted = Cyc3._lift(other)
        if lifted is None:
            return NotImplemented
        return lifted * cyc_invert(self)

    def __pow__(self, k: int):
        return scalar_pow(self, k)

    def __eq__(self, other):
        if isinstance(other, Cyc3):
            return self.a == other.a and self.b == other.b
        if isinstance(other, numbers.Rational):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def conjugate(self) -> Cyc3:
        """Galois conjugate w -> w^2."""
        return Cyc3(self.a - self.b, -self.b)

    def norm(self) -> Rat:
        return self.a * self.a - self.a * self.b + self.b * self.b

    def __repr__(self):
        return f"Cyc3({self.a}, {self.b})"

    def __str__(self):
        return render(self)


ExactScalar = Union[Rat, Cyc3]


def cyc_invert(x: Cyc3) -> Cyc3:
    """Exact inverse in Q(w) via the norm a^2 - ab + b^2.

    >>> cyc_invert(Cyc3(0, 1))
    Cyc3(-1, -1)
    """
    nrm = x.norm()
    if nrm == 0:
        raise ZeroDivisionError("cannot invert zero in Q(w)")
    c = x.conjugate()
    return Cyc3(c.a / nrm, c.b / nrm)


def q_root_of_unity(sign: int = 1) -> Cyc3:
    """q = exp(+-2 pi i / 3) as an element of Q(w): w for +1, w^2 = -1 - w for -1."""
    if sign == 1:
        return Cyc3(0, 1)
    if sign == -1:
        return Cyc3(-1, -1)
    raise ValueError("sign must be +1 or -1")


def to_scalar(x) -> ExactScalar:
    if isinstance(x, Cyc3):
        return x
    return rat(x)


def is_zero(x) -> bool:
    return not x


def scalar_pow(x, k: int):
    """Integer power, negative exponents allowed for nonzero x."""
    if k < 0:
        return scalar_pow(1 / x, -k)
    result = 1
    base = x
    while k:
        if k & 1:
            result = base * result
        base = base * base
        k >>= 1
    return result if not isinstance(result, int) else rat(result)


def render(x) -> str:
    """Canonical text: ``p/q`` for rationals, ``p/q + r/s*w`` for Q(w)."""
    if isinstance(x, Cyc3):
        return f"{_render_rat(x.a)} + {_render_rat(x.b)}*w"
    return _render_rat(rat(x))


def _render_rat(r) -> str:
    r = rat(r)
    return f"{r.numerator}/{r.denominator}"


def parse_scalar(text: str) -> ExactScalar:
    """Inverse of :func:`render`; also accepts ``omega+``/``omega-`` and plain rationals."""
    t = text.strip()
    if t in ("omega", "omega+", "w"):
        return q_root_of_unity(+1)
    if t == "omega-":
        return q_root_of_unity(-1)
    if t.endswith("*w"):
        head, _, tail = t[:-2].rpartition("+")
        return Cyc3(rat(head), rat(tail))
    return rat(t)


class DegenerateParameters(ValueError):
    """Spectral parameters or q violate a genericity precondition."""
