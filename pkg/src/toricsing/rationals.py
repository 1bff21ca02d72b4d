"""Exact Gaussian-rational arithmetic.

A GaussianRational is a complex number a + b*i with rational real and
imaginary parts, stored as Fractions (always in lowest terms). This is the
coefficient field for every polynomial in the library; no floating point
is used anywhere.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot build an exact rational from {type(x).__name__}")


class GaussianRational:
    """An element of Q(i), with exact arithmetic."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", _as_fraction(re))
        object.__setattr__(self, "im", _as_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_string(text: str) -> "GaussianRational":
        """Parse 'a', 'a/b', 'a+b*i', 'a-b*i', 'b*i', 'i', '-i'.

        Whitespace is ignored. Raises ValueError on malformed input.
        """
        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty coefficient")
        m = re.fullmatch(
            r"(?P<re>[+-]?\d+(?:/\d+)?)?"
            r"(?P<im>(?:[+-]|(?<=^))(?:\d+(?:/\d+)?\*)?i)?",
            s,
        )
        if not m or (m.group("re") is None and m.group("im") is None):
            raise ValueError(f"malformed Gaussian rational: {text!r}")
        re_part = Fraction(m.group("re")) if m.group("re") else Fraction(0)
        im_txt = m.group("im")
        if im_txt is None:
            im_part = Fraction(0)
        else:
            sign = -1 if im_txt.startswith("-") else 1
            body = im_txt.lstrip("+-")
            body = body[:-1].rstrip("*")  # strip trailing 'i' and '*'
            im_part = sign * (Fraction(body) if body else Fraction(1))
        return GaussianRational(re_part, im_part)

    # -- predicates ----------------------------------------------------

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_rational(self) -> bool:
        return self.im == 0

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other)
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

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

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
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent == 0:
            return GaussianRational(1)
        base = self
        if exponent < 0:
            base = GaussianRational(1) / self
            exponent = -exponent
        result = GaussianRational(1)
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """The field norm re^2 + im^2 (a nonnegative rational)."""
        return self.re * self.re + self.im * self.im

    # -- comparison / hashing -------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    # -- rendering -------------------------------------------------------

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        im = f"{abs(self.im)}*i" if abs(self.im) != 1 else "i"
        sign = "+" if self.im > 0 else "-"
        if self.re == 0:
            return im if self.im > 0 else f"-{im}"
        return f"{self.re}{sign}{im}"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def _fraction_sqrt(q: Fraction):
    """Exact square root of a nonnegative rational, or None."""
    if q < 0:
        return None
    num, den = q.numerator, q.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return Fraction(rn, rd)
    return None


def gaussian_sqrt(z: GaussianRational):
    """A square root of z inside Q(i), or None if no such root exists."""
    if z.is_zero():
        return GaussianRational(0)
    if z.im == 0:
        r = _fraction_sqrt(z.re)
        if r is not None:
            return GaussianRational(r)
        r = _fraction_sqrt(-z.re)
        if r is not None:
            return GaussianRational(0, r)
        return None
    # w = c + d*i with c^2 - d^2 = re, 2cd = im requires |z| rational.
    mod = _fraction_sqrt(z.norm())
    if mod is None:
        return None
    c2 = (z.re + mod) / 2
    c = _fraction_sqrt(c2)
    if c is None or c == 0:
        return None
    d = z.im / (2 * c)
    return GaussianRational(c, d)


def gaussian_nth_root(z: GaussianRational, n: int):
    """Some n-th root of z in Q(i), or None.

    Exact for n in {1, 2}; higher n is attempted by iterated square roots
    and a small search over simple candidates, which is enough for the
    lattice indices that occur in practice.
    """
    if n <= 0:
        raise ValueError("root order must be positive")
    if n == 1:
        return z
    if z.is_zero():
        return GaussianRational(0)
    if n == 2:
        return gaussian_sqrt(z)
    if n % 2 == 0:
        s = gaussian_sqrt(z)
        if s is not None:
            r = gaussian_nth_root(s, n // 2)
            if r is not None:
                return r
            return gaussian_nth_root(-s, n // 2)
        return None
    # odd n: try simple candidates w with small numerators/denominators
    for cand in _simple_root_candidates(z, n):
        if cand ** n == z:
            return cand
    return None


def _simple_root_candidates(z: GaussianRational, n: int):
    seen = set()
    if z.im == 0:
        q = z.re
        for num, den in ((q.numerator, q.denominator), (-q.numerator, q.denominator)):
            # try integer n-th roots of numerator and denominator
            rn = round(abs(num) ** (1.0 / n)) if num else 0
            rd = round(den ** (1.0 / n))
            for dn in (rn - 1, rn, rn + 1):
                for dd in (rd - 1, rd, rd + 1):
                    if dd <= 0:
                        continue
                    for sign in (1, -1):
                        c = GaussianRational(Fraction(sign * dn, dd))
                        if c not in seen:
                            seen.add(c)
                            yield c
    for a in (-2, -1, 0, 1, 2):
        for b in (-2, -1, 0, 1, 2):
            c = GaussianRational(a, b)
            if not c.is_zero() and c not in seen:
                seen.add(c)
                yield c
