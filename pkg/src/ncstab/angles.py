"""Exact phases and window-normalized arguments.

A real phase t is stored as (dir, sheet): a nonzero primitive Gaussian-integer
direction together with the integer n such that t lies in (n, n+1].  The
direction is normalized so that (-1)^n * z points along `dir`, and `dir`
itself lies in the closed upper half-plane minus the positive real axis
(the image of exp(i*pi*s) for s in (0, 1]).  Two phases are equal iff their
records coincide, and every comparison reduces to the sign of a 2x2 integer
determinant, so the order is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .gaussian import GaussianRational, cross, dot, gaussian_json, gr, parse_gaussian


class SheetMismatch(ValueError):
    """The supplied (charge, sheet) pair is inconsistent."""


class OutsideWindow(ValueError):
    """The charge does not lie in the admissible half-plane of the window."""


OPEN_OPEN = "open_open"          # (a, a+1)
OPEN_CLOSED = "open_closed"      # (a, a+1]
CLOSED_OPEN = "closed_open"      # [a, a+1)


def _in_upper_region(z: GaussianRational) -> bool:
    """Closed upper half-plane minus the positive real axis, origin excluded."""
    return z.im > 0 or (z.im == 0 and z.re < 0)


def canonical_direction(z: GaussianRational) -> GaussianRational:
    """Scale z by a positive rational onto coprime integer coordinates."""
    if z.is_zero():
        raise ValueError("zero has no direction")
    lcm = z.re.denominator * z.im.denominator // math.gcd(
        z.re.denominator, z.im.denominator
    )
    a = z.re.numerator * (lcm // z.re.denominator)
    b = z.im.numerator * (lcm // z.im.denominator)
    g = math.gcd(abs(a), abs(b))
    return GaussianRational(Fraction(a // g), Fraction(b // g))


@dataclass(frozen=True, order=False)
class Phase:
    dir: GaussianRational
    sheet: int

    def __post_init__(self):
        if not _in_upper_region(self.dir):
            raise SheetMismatch(f"direction {self.dir} outside the canonical region")

    def approx(self) -> float:
        """Float value for display only; all decisions are exact."""
        frac = math.atan2(float(self.dir.im), float(self.dir.re)) / math.pi
        if frac <= 0:  # atan2 of the negative real axis may give -pi
            frac += 2
        return self.sheet + frac

    def __lt__(self, other):
        return phase_compare(self, other) < 0

    def __le__(self, other):
        return phase_compare(self, other) <= 0

    def __gt__(self, other):
        return phase_compare(self, other) > 0

    def __ge__(self, other):
        return phase_compare(self, other) >= 0

    def plus(self, k: int) -> "Phase":
        return phase_add_int(self, k)

    def exp_direction(self) -> GaussianRational:
        """A vector positively proportional to exp(i*pi*value)."""
        return self.dir if self.sheet % 2 == 0 else -self.dir

    def __str__(self) -> str:
        return f"phase({self.approx():.4f}; dir={self.dir}, sheet={self.sheet})"


def phase_from_charge(z: GaussianRational, sheet: int) -> Phase:
    """The phase in (sheet, sheet+1] whose exp(i*pi*-) ray carries z."""
    if z.is_zero():
        raise SheetMismatch("zero charge has no phase")
    w = z if sheet % 2 == 0 else -z
    if not _in_upper_region(w):
        raise SheetMismatch(
            f"charge {z} cannot have a phase in ({sheet}, {sheet + 1}]"
        )
    return Phase(canonical_direction(w), sheet)


def phase_compare(p: Phase, q: Phase) -> int:
    """-1, 0 or 1 according to the real numbers represented."""
    if p.sheet != q.sheet:
        return -1 if p.sheet < q.sheet else 1
    c = cross(p.dir, q.dir)
    if c > 0:
        return -1  # q sits further along the half-turn
    if c < 0:
        return 1
    return 0  # same ray within (n, n+1] forces equality


def phase_add_int(p: Phase, k: int) -> Phase:
    return Phase(p.dir, p.sheet + k)


def halfplane_side(w: GaussianRational, v: GaussianRational) -> str:
    """Which side of the real line R*v the point w falls on."""
    if v.is_zero():
        raise ValueError("reference direction must be nonzero")
    c = cross(v, w)
    if c > 0:
        return "Plus"
    if c < 0:
        return "Minus"
    return "OnLine"


def arg_in_window(w: GaussianRational, a: Phase, closure: str = OPEN_OPEN) -> Phase:
    """The unique phase in the length-one window above `a` carried by w.

    closure selects (a, a+1), (a, a+1] or [a, a+1).  Raises OutsideWindow when
    w lies outside the admissible (half-)plane for that closure.
    """
    if w.is_zero():
        raise OutsideWindow("zero charge has no argument")
    v = a.exp_direction()
    c = cross(v, w)
    if c < 0:
        raise OutsideWindow(f"{w} lies below the window anchored at {a}")
    if c == 0:
        d = dot(v, w)
        if d > 0:  # on the ray of a itself
            if closure != CLOSED_OPEN:
                raise OutsideWindow(f"{w} sits on the excluded endpoint {a}")
        else:  # on the opposite ray, value a+1
            if closure != OPEN_CLOSED:
                raise OutsideWindow(f"{w} sits on the excluded endpoint {a}+1")
    direction = canonical_direction(w if _in_upper_region(w) else -w)
    parity_even = _in_upper_region(w)
    sheet = a.sheet if (a.sheet % 2 == 0) == parity_even else a.sheet + 1
    return Phase(direction, sheet)


def charge_from_polar(radius: str | float, phase: str | float,
                      max_denominator: int = 64) -> tuple[GaussianRational, int]:
    """Nearby exact charge for a decimal (radius, phase) input.

    tan(pi*frac) is rounded to a rational by continued fractions, so the
    result is exact but only approximates the requested direction; callers
    must mark the output as approximate.
    """
    r = Fraction(str(radius)).limit_denominator(10 ** 6)
    if r <= 0:
        raise ValueError("radius must be positive")
    t = Fraction(str(phase)).limit_denominator(10 ** 6)
    sheet = math.ceil(t) - 1
    frac = t - sheet  # in (0, 1]
    if frac == 1:
        direction = gr(-1, 0)
    elif frac == Fraction(1, 2):
        direction = gr(0, 1)
    else:
        slope = Fraction(math.tan(math.pi * float(frac))).limit_denominator(max_denominator)
        direction = gr(1, slope) if frac < Fraction(1, 2) else gr(-1, -slope)
    z = direction.scale(r if sheet % 2 == 0 else -r)
    return z, sheet


def phase_json(p: Phase) -> dict:
    return {"dir": gaussian_json(p.dir), "sheet": p.sheet, "approx": round(p.approx(), 6)}


def parse_phase(obj) -> Phase:
    return Phase(canonical_direction(parse_gaussian(obj["dir"])), int(obj["sheet"]))
