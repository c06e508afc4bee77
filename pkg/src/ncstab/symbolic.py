"""Symbolic (possibly infinite) answer sets for the classifier.

The classification tables only ever produce index sets of five shapes:
empty, a bounded block [lo, hi], a tail [lo, +inf), a head (-inf, hi] and all
of Z.  IndexSet normalizes those shapes; the curve and derived-point sets are
products of index sets with two membership flags.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .quiver import DerivedPoint, NCCurve

INF = math.inf


@dataclass(frozen=True)
class IndexSet:
    """Subset of Z: empty, or the integers lo..hi with None meaning unbounded."""

    empty: bool = True
    lo: int | None = None
    hi: int | None = None

    def __post_init__(self):
        if not self.empty and self.lo is not None and self.hi is not None:
            if self.lo > self.hi:
                raise ValueError(f"bad range [{self.lo}, {self.hi}]")

    @staticmethod
    def none() -> "IndexSet":
        return IndexSet(True)

    @staticmethod
    def all() -> "IndexSet":
        return IndexSet(False, None, None)

    @staticmethod
    def single(m: int) -> "IndexSet":
        return IndexSet(False, m, m)

    @staticmethod
    def block(lo: int, hi: int) -> "IndexSet":
        return IndexSet(False, lo, hi)

    @staticmethod
    def at_least(lo: int) -> "IndexSet":
        return IndexSet(False, lo, None)

    @staticmethod
    def at_most(hi: int) -> "IndexSet":
        return IndexSet(False, None, hi)

    def __contains__(self, m: int) -> bool:
        if self.empty:
            return False
        if self.lo is not None and m < self.lo:
            return False
        if self.hi is not None and m > self.hi:
            return False
        return True

    def cardinality(self) -> int | float:
        if self.empty:
            return 0
        if self.lo is None or self.hi is None:
            return INF
        return self.hi - self.lo + 1

    def is_finite(self) -> bool:
        return self.cardinality() != INF

    def shift(self, k: int) -> "IndexSet":
        if self.empty:
            return self
        return IndexSet(
            False,
            None if self.lo is None else self.lo + k,
            None if self.hi is None else self.hi + k,
        )

    def iter_finite(self):
        if self.empty:
            return
        if self.lo is None or self.hi is None:
            raise ValueError("infinite index set")
        yield from range(self.lo, self.hi + 1)

    def json(self) -> dict | None:
        if self.empty:
            return None
        return {"lo": self.lo, "hi": self.hi}


@dataclass(frozen=True)
class CurveSet:
    """Symbolic set of genus-zero curves alpha^j, beta^j."""

    alpha: IndexSet = field(default_factory=IndexSet.none)
    beta: IndexSet = field(default_factory=IndexSet.none)

    def __contains__(self, c: NCCurve) -> bool:
        if c.kind == "alpha":
            return c.m in self.alpha
        if c.kind == "beta":
            return c.m in self.beta
        return False

    def cardinality(self) -> int | float:
        return self.alpha.cardinality() + self.beta.cardinality()

    def zeta_image(self) -> "CurveSet":
        # alpha^m -> beta^m, beta^m -> alpha^{m-1}
        return CurveSet(alpha=self.beta.shift(-1), beta=self.alpha)

    def zeta_preimage(self) -> "CurveSet":
        return CurveSet(alpha=self.beta, beta=self.alpha.shift(1))


@dataclass(frozen=True)
class DerivedSet:
    """Symbolic set of derived points <a^j>, <b^j>, <M>, <M'>."""

    a: IndexSet = field(default_factory=IndexSet.none)
    b: IndexSet = field(default_factory=IndexSet.none)
    m: bool = False
    mp: bool = False

    def __contains__(self, p: DerivedPoint) -> bool:
        if p.kind == "a":
            return p.m in self.a
        if p.kind == "b":
            return p.m in self.b
        if p.kind == "M":
            return self.m
        return self.mp

    def cardinality(self) -> int | float:
        return (
            self.a.cardinality()
            + self.b.cardinality()
            + (1 if self.m else 0)
            + (1 if self.mp else 0)
        )

    def zeta_image(self) -> "DerivedSet":
        # a^m -> b^m, b^m -> a^{m-1}, M <-> M'
        return DerivedSet(a=self.b.shift(-1), b=self.a, m=self.mp, mp=self.m)

    def zeta_preimage(self) -> "DerivedSet":
        return DerivedSet(a=self.b, b=self.a.shift(1), m=self.mp, mp=self.m)


def _card_str(c: int | float) -> str:
    return "inf" if c == INF else str(int(c))


_EXPAND_LIMIT = 64


def _family_parts(name_prefix: str, s: IndexSet, finite: list, ranges: list):
    card = s.cardinality()
    if card == 0:
        return
    if card != INF and card <= _EXPAND_LIMIT:
        finite.extend(f"{name_prefix}:{j}" for j in s.iter_finite())
    else:
        ranges.append({"family": name_prefix, "lo": s.lo, "hi": s.hi})


def curve_set_json(cs: CurveSet) -> dict:
    finite: list[str] = []
    ranges: list[dict] = []
    _family_parts("alpha", cs.alpha, finite, ranges)
    _family_parts("beta", cs.beta, finite, ranges)
    return {"constants": [], "finite": finite, "ranges": ranges}


def derived_set_json(ds: DerivedSet) -> dict:
    finite: list[str] = []
    ranges: list[dict] = []
    _family_parts("da", ds.a, finite, ranges)
    _family_parts("db", ds.b, finite, ranges)
    constants = [name for name, flag in (("M", ds.m), ("M'", ds.mp)) if flag]
    return {"constants": constants, "finite": finite, "ranges": ranges}


@dataclass(frozen=True)
class Classification:
    derived_ss: DerivedSet
    c0_ss: CurveSet
    c1_s: frozenset[str]
    c1_ss: frozenset[str]
    witnesses: dict

    def zeta_preimage(self) -> "Classification":
        swap = {"A": "B", "B": "A"}
        return Classification(
            derived_ss=self.derived_ss.zeta_preimage(),
            c0_ss=self.c0_ss.zeta_preimage(),
            c1_s=frozenset(swap[x] for x in self.c1_s),
            c1_ss=frozenset(swap[x] for x in self.c1_ss),
            witnesses=self.witnesses,
        )

    def zeta_image(self) -> "Classification":
        swap = {"A": "B", "B": "A"}
        return Classification(
            derived_ss=self.derived_ss.zeta_image(),
            c0_ss=self.c0_ss.zeta_image(),
            c1_s=frozenset(swap[x] for x in self.c1_s),
            c1_ss=frozenset(swap[x] for x in self.c1_ss),
            witnesses=self.witnesses,
        )

    def sets_equal(self, other: "Classification") -> bool:
        return (
            self.derived_ss == other.derived_ss
            and self.c0_ss == other.c0_ss
            and self.c1_s == other.c1_s
            and self.c1_ss == other.c1_ss
        )


def classification_json(c: Classification) -> dict:
    from .angles import Phase, phase_json

    def encode(v):
        if isinstance(v, Phase):
            return phase_json(v)
        if isinstance(v, dict):
            return {k: encode(x) for k, x in v.items()}
        if isinstance(v, (list, tuple)):
            return [encode(x) for x in v]
        return v

    return {
        "derived_ss": derived_set_json(c.derived_ss),
        "c0_ss": curve_set_json(c.c0_ss),
        "c1_s": sorted(c.c1_s),
        "c1_ss": sorted(c.c1_ss),
        "witnesses": encode(c.witnesses),
        "cardinalities": {
            "c0": _card_str(c.c0_ss.cardinality()),
            "derived": _card_str(c.derived_ss.cardinality()),
            "c1_s": str(len(c.c1_s)),
            "c1_ss": str(len(c.c1_ss)),
        },
    }
