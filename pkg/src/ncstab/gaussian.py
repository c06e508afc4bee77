"""Exact Gaussian-rational numbers and the p/q wire format.

Every quantity that enters a comparison anywhere in this package is either an
integer or a ratio of integers; no floating point is used outside of display
helpers.  Complex values are pairs of `fractions.Fraction`.
"""

from __future__ import annotations

import re as _re
from dataclasses import dataclass
from fractions import Fraction

# Reduced p/q with q > 0 is exactly the canonical form fractions.Fraction keeps.
Rational = Fraction

_RATIONAL_RE = _re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(text: str) -> Rational:
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(text)


def format_rational(x: Rational) -> str:
    return str(x)  # Fraction renders "p" or "p/q" reduced, q > 0


@dataclass(frozen=True)
class GaussianRational:
    """Complex number with rational real and imaginary parts."""

    re: Rational
    im: Rational

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def scale(self, r: Rational | int) -> "GaussianRational":
        r = Fraction(r)
        return GaussianRational(self.re * r, self.im * r)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def norm_sq(self) -> Rational:
        return self.re * self.re + self.im * self.im

    def __str__(self) -> str:
        return f"{self.re}{'+' if self.im >= 0 else ''}{self.im}i"


def gr(re, im=0) -> GaussianRational:
    return GaussianRational(Fraction(re), Fraction(im))


ZERO = gr(0)
ONE = gr(1)
I = gr(0, 1)


def cross(a: GaussianRational, b: GaussianRational) -> Rational:
    """Signed area re(a)im(b) - im(a)re(b); the sign decides angular order."""
    return a.re * b.im - a.im * b.re


def dot(a: GaussianRational, b: GaussianRational) -> Rational:
    return a.re * b.re + a.im * b.im


def parse_gaussian(obj) -> GaussianRational:
    if not isinstance(obj, dict) or set(obj) - {"re", "im"}:
        raise ValueError(f"gaussian rational must be {{re, im}}, got {obj!r}")
    return GaussianRational(
        parse_rational(str(obj.get("re", "0"))),
        parse_rational(str(obj.get("im", "0"))),
    )


def gaussian_json(z: GaussianRational) -> dict:
    return {"re": format_rational(z.re), "im": format_rational(z.im)}
