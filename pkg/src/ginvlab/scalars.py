"""Exact scalar arithmetic over the rationals Q and the Gaussian rationals Q(i).

Rational values are gmpy2.mpq instances (always normalized: gcd-reduced,
positive denominator), and their str() form is exactly the serialization
grammar used by this package::

    scalar   := rational | rational ("+" | "-") rational "*i"
    rational := ["-"] DIGITS ["/" DIGITS]

Examples:

>>> format_scalar(parse_scalar("3/6", FIELD_RATIONAL))
'1/2'
>>> z = parse_scalar("1/2-3*i", FIELD_GAUSSIAN)
>>> z.conjugate()
GaussianRational('1/2+3*i')
>>> format_scalar(z * z.conjugate())
'37/4'
"""

from __future__ import annotations

import re as _re

from gmpy2 import mpq

FIELD_RATIONAL = "Q"
FIELD_GAUSSIAN = "Q(i)"
FIELDS = (FIELD_RATIONAL, FIELD_GAUSSIAN)

_RATIONAL_RE = _re.compile(r"^(-?\d+)(?:/(\d+))?$")
_GAUSSIAN_RE = _re.compile(r"^(-?\d+(?:/\d+)?)([+-]\d+(?:/\d+)?)\*i$")


class GaussianRational:
    """A Gaussian rational re + im*i with exact mpq components.

    Instances are immutable; arithmetic returns new values.

    >>> a = GaussianRational(mpq(1, 2), mpq(3))
    >>> b = GaussianRational(0, 1)
    >>> format_scalar(a * b)
    '-3+1/2*i'
    >>> a - a == 0
    True
    >>> (a / a) == 1
    True
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, str):
            m = _GAUSSIAN_RE.match(re.strip())
            if m is not None and im == 0:
                re, im = _parse_rational(m.group(1)), _parse_imaginary(m.group(2))
        object.__setattr__(self, "re", mpq(re))
        object.__setattr__(self, "im", mpq(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, type(mpq()))):
            return GaussianRational(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        norm = o.re * o.re + o.im * o.im
        if norm == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / norm,
            (self.im * o.re - self.re * o.im) / norm,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def __repr__(self):
        return f"GaussianRational({format_scalar(self)!r})"


def parse_scalar(text, field):
    """Parse the canonical string form of a scalar in the given field.

    >>> parse_scalar("-4/6", FIELD_RATIONAL)
    mpq(-2,3)
    >>> parse_scalar("2", FIELD_GAUSSIAN)
    GaussianRational('2')
    >>> parse_scalar("0-1*i", FIELD_GAUSSIAN)
    GaussianRational('0-1*i')
    >>> parse_scalar("3+1/2*i", FIELD_GAUSSIAN)
    GaussianRational('3+1/2*i')
    """
    if field not in FIELDS:
        raise ValueError(f"unknown field {field!r}; expected one of {FIELDS}")
    if not isinstance(text, str):
        raise ValueError(f"scalar must be a string, got {type(text).__name__}")
    text = text.strip()
    if field == FIELD_RATIONAL:
        return _parse_rational(text)
    m = _GAUSSIAN_RE.match(text)
    if m:
        return GaussianRational(_parse_rational(m.group(1)), _parse_imaginary(m.group(2)))
    return GaussianRational(_parse_rational(text), 0)


def _parse_rational(text):
    m = _RATIONAL_RE.match(text)
    if not m:
        raise ValueError(
            f"invalid rational {text!r}: expected INT or INT/POSINT (e.g. '-3', '1/2')"
        )
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"invalid rational {text!r}: zero denominator")
    return mpq(num, den)


def _parse_imaginary(text):
    # The captured imaginary part keeps its separator sign, e.g. '+1/2';
    # a bare leading '+' is structural there, not part of the rational.
    return _parse_rational(text[1:] if text.startswith("+") else text)


def format_scalar(value):
    """Canonical string form (inverse of parse_scalar on its field).

    >>> format_scalar(mpq(-2, 4))
    '-1/2'
    >>> format_scalar(GaussianRational(mpq(1, 3), mpq(-1, 2)))
    '1/3-1/2*i'
    """
    if isinstance(value, GaussianRational):
        if value.im == 0:
            return str(value.re)
        if value.im < 0:
            return f"{value.re}-{-value.im}*i"
        return f"{value.re}+{value.im}*i"
    return str(mpq(value))


def scalar_zero(field):
    return mpq(0) if field == FIELD_RATIONAL else GaussianRational(0, 0)


def scalar_one(field):
    return mpq(1) if field == FIELD_RATIONAL else GaussianRational(1, 0)


def conjugate(value):
    """Complex conjugate; the identity on rationals."""
    if isinstance(value, GaussianRational):
        return value.conjugate()
    return mpq(value)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
