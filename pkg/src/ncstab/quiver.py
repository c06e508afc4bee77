"""K-theory and the exceptional-object catalog of the acyclic triangular quiver.

The quiver has vertices x, z, y and arrows x->z, x->y, y->z.  Its bounded
derived category carries, up to shift, the exceptional objects a^m, b^m
(m ranging over all integers) together with the distinguished pair M, M'.
Classes live in K_0 = Z^3 with basis the simples ([S_x], [S_z], [S_y]).

Derived points are the subcategories generated by a single exceptional
object; the non-commutative curves are A, B (genus one) and alpha^m, beta^m
(genus zero).
"""

from __future__ import annotations

import re as _re
from dataclasses import dataclass

A_KIND = "a"
B_KIND = "b"
M_KIND = "M"
MP_KIND = "Mp"


@dataclass(frozen=True)
class KClass:
    x: int
    z: int
    y: int

    def __add__(self, other: "KClass") -> "KClass":
        return KClass(self.x + other.x, self.z + other.z, self.y + other.y)

    def __sub__(self, other: "KClass") -> "KClass":
        return KClass(self.x - other.x, self.z - other.z, self.y - other.y)

    def __neg__(self) -> "KClass":
        return KClass(-self.x, -self.z, -self.y)

    def scale(self, k: int) -> "KClass":
        return KClass(k * self.x, k * self.z, k * self.y)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.x, self.z, self.y)


DELTA = KClass(1, 1, 1)  # [M] + [M'], the step of all charge recurrences


@dataclass(frozen=True)
class ExcObject:
    kind: str          # "a" | "b" | "M" | "Mp"
    m: int | None = None
    shift: int = 0

    def __post_init__(self):
        if self.kind in (A_KIND, B_KIND):
            if self.m is None:
                raise ValueError(f"{self.kind} needs an index")
        elif self.kind in (M_KIND, MP_KIND):
            if self.m is not None:
                raise ValueError(f"{self.kind} carries no index")
        else:
            raise ValueError(f"unknown kind {self.kind!r}")

    def shifted(self, k: int) -> "ExcObject":
        return ExcObject(self.kind, self.m, self.shift + k)

    def at_shift_zero(self) -> "ExcObject":
        return ExcObject(self.kind, self.m, 0)

    def __str__(self) -> str:
        base = {M_KIND: "M", MP_KIND: "M'"}.get(self.kind, f"{self.kind}:{self.m}")
        return base if self.shift == 0 else f"{base}[{self.shift}]"


def a(m: int, shift: int = 0) -> ExcObject:
    return ExcObject(A_KIND, m, shift)


def b(m: int, shift: int = 0) -> ExcObject:
    return ExcObject(B_KIND, m, shift)


M = ExcObject(M_KIND)
MP = ExcObject(MP_KIND)

_OBJ_RE = _re.compile(r"^(a|b):(-?\d+)(\[(-?\d+)\])?$|^(M'|M|Mp)(\[(-?\d+)\])?$")


def parse_object(text: str) -> ExcObject:
    m = _OBJ_RE.match(text.strip())
    if not m:
        raise ValueError(f"not an object literal: {text!r}")
    if m.group(1):
        return ExcObject(m.group(1), int(m.group(2)), int(m.group(4) or 0))
    kind = MP_KIND if m.group(5) in ("M'", "Mp") else M_KIND
    return ExcObject(kind, None, int(m.group(7) or 0))


def format_object(obj: ExcObject) -> str:
    return str(obj)


@dataclass(frozen=True)
class DerivedPoint:
    """Shift-invariant class <E> of an exceptional object."""

    kind: str
    m: int | None = None

    @staticmethod
    def of(obj: ExcObject) -> "DerivedPoint":
        return DerivedPoint(obj.kind, obj.m)

    def generator(self) -> ExcObject:
        return ExcObject(self.kind, self.m)

    def __str__(self) -> str:
        return str(self.generator())


@dataclass(frozen=True)
class NCCurve:
    kind: str          # "A" | "B" | "alpha" | "beta"
    m: int | None = None

    def __post_init__(self):
        if self.kind in ("A", "B"):
            if self.m is not None:
                raise ValueError("genus-one curves carry no index")
        elif self.kind in ("alpha", "beta"):
            if self.m is None:
                raise ValueError("genus-zero curves need an index")
        else:
            raise ValueError(f"unknown curve {self.kind!r}")

    def __str__(self) -> str:
        return self.kind if self.m is None else f"{self.kind}:{self.m}"


CURVE_A = NCCurve("A")
CURVE_B = NCCurve("B")


def alpha(m: int) -> NCCurve:
    return NCCurve("alpha", m)


def beta(m: int) -> NCCurve:
    return NCCurve("beta", m)


def class_of(obj: ExcObject) -> KClass:
    """K_0 class, including the sign (-1)^shift."""
    if obj.kind == A_KIND:
        base = KClass(1 - obj.m, -obj.m, -obj.m)
    elif obj.kind == B_KIND:
        base = KClass(1 - obj.m, -obj.m, 1 - obj.m)
    elif obj.kind == M_KIND:
        base = KClass(0, 0, 1)
    else:
        base = KClass(1, 1, 0)
    return base if obj.shift % 2 == 0 else -base


def euler_form(d: KClass, e: KClass) -> int:
    """Euler pairing of the hereditary path algebra (arrows x->z, x->y, y->z)."""
    return (d.x * e.x + d.z * e.z + d.y * e.y) - (d.x * e.z + d.x * e.y + d.y * e.z)


@dataclass(frozen=True)
class HomProfile:
    """The single nonvanishing Hom degree between two exceptionals, if any."""

    degree: int | None
    dimension: int

    def __post_init__(self):
        if (self.degree is None) != (self.dimension == 0):
            raise ValueError("degree absent iff dimension zero")


def _base_degree(x: ExcObject, y: ExcObject) -> int | None:
    """Nonvanishing degree for shift-0 representatives.

    Transcribes the hom/ext decision table for the catalog: within one family
    hom lives in degree 0 for m <= n, vanishes entirely for m = n+1 and moves
    to degree 1 for m > n+1; across families and against M, M' the table is
    asymmetric.
    """
    xk, yk, m, n = x.kind, y.kind, x.m, y.m
    if xk in (A_KIND, B_KIND) and yk in (A_KIND, B_KIND):
        if xk == yk:
            if m <= n:
                return 0
            if m == n + 1:
                return None
            return 1
        if xk == B_KIND:  # b^m -> a^n
            if m <= n:
                return 0
            if m == n + 1:
                return None
            return 1
        # a^m -> b^n
        if n >= m + 1:
            return 0
        if n == m:
            return None
        return 1
    if xk == yk:  # M -> M or M' -> M'
        return 0
    if {xk, yk} == {M_KIND, MP_KIND}:
        return 1
    if xk == MP_KIND and yk == A_KIND:
        return 0
    if xk == M_KIND and yk == B_KIND:
        return 0
    if xk == A_KIND and yk == M_KIND:
        return 1
    if xk == B_KIND and yk == MP_KIND:
        return 1
    # a -> M', b -> M, M -> a, M' -> b all vanish
    return None


def hom_profile(x: ExcObject, y: ExcObject) -> HomProfile:
    deg0 = _base_degree(x.at_shift_zero(), y.at_shift_zero())
    if deg0 is None:
        return HomProfile(None, 0)
    dim = abs(euler_form(class_of(x.at_shift_zero()), class_of(y.at_shift_zero())))
    return HomProfile(deg0 + x.shift - y.shift, dim)


def zeta(obj: ExcObject) -> ExcObject:
    """The autoequivalence a^m -> b^m, b^m -> a^{m-1}, M <-> M' (shifts kept)."""
    if obj.kind == A_KIND:
        return ExcObject(B_KIND, obj.m, obj.shift)
    if obj.kind == B_KIND:
        return ExcObject(A_KIND, obj.m - 1, obj.shift)
    if obj.kind == M_KIND:
        return ExcObject(MP_KIND, None, obj.shift)
    return ExcObject(M_KIND, None, obj.shift)


def zeta_inverse(obj: ExcObject) -> ExcObject:
    if obj.kind == A_KIND:
        return ExcObject(B_KIND, obj.m + 1, obj.shift)
    if obj.kind == B_KIND:
        return ExcObject(A_KIND, obj.m, obj.shift)
    if obj.kind == M_KIND:
        return ExcObject(MP_KIND, None, obj.shift)
    return ExcObject(M_KIND, None, obj.shift)


def zeta_curve(c: NCCurve) -> NCCurve:
    if c.kind == "A":
        return CURVE_B
    if c.kind == "B":
        return CURVE_A
    if c.kind == "alpha":
        return beta(c.m)
    return alpha(c.m - 1)


def zeta_point(p: DerivedPoint) -> DerivedPoint:
    return DerivedPoint.of(zeta(p.generator()))


def zeta_class_matrix() -> tuple[tuple[int, int, int], ...]:
    """Matrix of the induced map on K_0, columns indexed by (x, z, y)."""
    x_img = class_of(zeta(a(0)))                 # [S_x] = [a^0]
    y_img = class_of(zeta(M))                    # [S_y] = [M]
    z_img = -class_of(zeta(a(1))) - y_img        # [S_z] = -[a^1] - [M]
    return tuple(
        (getattr(x_img, c), getattr(z_img, c), getattr(y_img, c))
        for c in ("x", "z", "y")
    )
