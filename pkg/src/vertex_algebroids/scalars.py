"""Exact arithmetic in the Gaussian rationals Q(i).

Every structure constant in this package is a :class:`GaussianRational`.
The real and imaginary parts are ``gmpy2.mpq`` values, so they are always
in lowest terms with a positive denominator.
"""

from __future__ import annotations

import re

from gmpy2 import is_square, isqrt, mpq

__all__ = ["GaussianRational", "Q", "ZERO", "ONE", "I", "sqrt_if_square", "parse_scalar"]


class GaussianRational:
    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is type(_MPQ0) else mpq(re)
        self.im = im if type(im) is type(_MPQ0) else mpq(im)

    # -- construction helpers -------------------------------------------------
    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, str):
            return parse_scalar(x)
        if isinstance(x, complex):
            raise TypeError("floating point complex numbers are not exact")
        if isinstance(x, float):
            raise TypeError("floating point numbers are not exact")
        return cls(x, 0)

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, GaussianRational):
            other = GaussianRational.coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, GaussianRational):
            other = GaussianRational.coerce(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if not isinstance(other, GaussianRational):
            other = GaussianRational.coerce(other)
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussianRational(a * c, _MPQ0)
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inv(self) -> "GaussianRational":
        norm = self.re * self.re + self.im * self.im
        if not norm:
            raise ZeroDivisionError("inverse of 0 in Q(i)")
        return GaussianRational(self.re / norm, -self.im / norm)

    def __truediv__(self, other):
        return self * GaussianRational.coerce(other).inv()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inv()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inv() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self):
        return self.re * self.re + self.im * self.im

    # -- comparison / hashing -------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, str)) or type(other) is type(_MPQ0):
            try:
                other = GaussianRational.coerce(other)
            except ValueError:
                return False
            return self.re == other.re and self.im == other.im
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return not self.im

    # -- text -----------------------------------------------------------------
    def __str__(self):
        if not self.im:
            return _fmt(self.re)
        if not self.re:
            return _fmt_imag(self.im)
        im = _fmt_imag(self.im)
        if not im.startswith("-"):
            im = "+" + im
        return _fmt(self.re) + im

    def __repr__(self):
        return f"Q({str(self)!r})"


def _fmt(q) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _fmt_imag(q) -> str:
    if q == 1:
        return "i"
    if q == -1:
        return "-i"
    return _fmt(q) + "i"


_MPQ0 = mpq(0)
ZERO = GaussianRational(0, 0)
ONE = GaussianRational(1, 0)
I = GaussianRational(0, 1)

_RAT = r"[+-]?\d+(?:/\d+)?"
_SCALAR_RE = re.compile(
    rf"^(?:(?P<re>{_RAT})(?P<im>[+-](?:\d+(?:/\d+)?)?i)?|(?P<imonly>[+-]?(?:\d+(?:/\d+)?)?i))$"
)


def _parse_imag(text: str):
    body = text[:-1]
    if body in ("", "+"):
        return mpq(1)
    if body == "-":
        return mpq(-1)
    return mpq(body.lstrip("+"))


def parse_scalar(text) -> GaussianRational:
    """Parse ``"a/b+c/di"`` style text (whitespace ignored)."""
    if isinstance(text, GaussianRational):
        return text
    if isinstance(text, int):
        return GaussianRational(text)
    s = "".join(str(text).split())
    m = _SCALAR_RE.match(s)
    if not m:
        raise ValueError(f"not a Gaussian rational: {text!r}")
    if m.group("imonly") is not None:
        return GaussianRational(0, _parse_imag(m.group("imonly")))
    re_part = mpq(m.group("re").lstrip("+"))
    im_part = _parse_imag(m.group("im")) if m.group("im") else mpq(0)
    return GaussianRational(re_part, im_part)


def Q(x=0, y=0) -> GaussianRational:
    """Shorthand constructor: ``Q("1/2-3i")``, ``Q(1, 2)``, ``Q(3)``."""
    if isinstance(x, str):
        if y:
            raise TypeError("Q(text) takes no imaginary argument")
        return parse_scalar(x)
    if isinstance(x, GaussianRational):
        return x + GaussianRational(0, y) if y else x
    return GaussianRational(x, y)


def _rational_sqrt(q):
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    if not (is_square(n) and is_square(d)):
        return None
    return mpq(isqrt(n), isqrt(d))


def sqrt_if_square(x) -> GaussianRational | None:
    """Square root in Q(i), or ``None`` when ``x`` is not a square there.

    Of the two roots, the one with positive real part is returned (positive
    imaginary part when the real part is zero).
    """
    x = GaussianRational.coerce(x)
    if not x:
        return ZERO
    modulus = _rational_sqrt(x.norm())
    if modulus is None:
        return None
    p2 = (modulus + x.re) / 2
    p = _rational_sqrt(p2)
    if p is None:
        return None
    if p:
        q = x.im / (2 * p)
    else:
        q = _rational_sqrt((modulus - x.re) / 2)
        if q is None:
            return None
    root = GaussianRational(p, q)
    if root.re < 0 or (root.re == 0 and root.im < 0):
        root = -root
    if root * root != x:
        return None
    return root
