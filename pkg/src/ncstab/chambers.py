"""Walls-and-chambers location and exact path walking.

The stable-genus-one picture decomposes the stability manifold into the two
chamber interiors Ch(A), Ch(B), the countable family of empty chambers O_m,
the codimension-one walls W(...) where a consecutive pair collapses to phase
distance one, and the codimension-two strata W0(A, B) and G(...) where both
curves are stable.  A point's tag is read off from the chart presentation in
which its classification row fired; walls take precedence over interiors and
the codimension-two strata over walls by construction of the row dispatch.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .classifier import Analysis, SearchBudget, analyze
from .stability import (
    A_A_M,
    A_B_A,
    A_M_B,
    B_A_B,
    B_B_MP,
    ChartViolation,
    M_B_B,
    MP_A_A,
    StabilityPoint,
    make_point,
)
from .angles import SheetMismatch


@dataclass(frozen=True)
class ChamberLocation:
    tag: str               # ChA_interior | ChB_interior | O | W_* | W0_AB | G_*
    m: int | None = None

    def __str__(self) -> str:
        return self.tag if self.m is None else f"{self.tag}({self.m})"


_WALL_TAG = {A_A_M: "W_aaM", MP_A_A: "W_MpAa", B_B_MP: "W_bbMp", M_B_B: "W_Mbb"}
_INTERIOR_TAG = {A_A_M: "ChA_interior", MP_A_A: "ChA_interior",
                 B_B_MP: "ChB_interior", M_B_B: "ChB_interior"}


def _locate_analysis(an: Analysis) -> ChamberLocation:
    family, index, row = an.effective()
    if family in (A_B_A, B_A_B):
        return ChamberLocation("O", index)
    if family in _WALL_TAG:
        if row in ("R1", "R2"):
            return ChamberLocation("O", index)
        if row in ("R3", "R4", "R5"):
            return ChamberLocation(_WALL_TAG[family], index)
        return ChamberLocation(_INTERIOR_TAG[family], None)
    # middle charts: only the untransferred cases reach here
    if row in ("C", "CEQ", "D"):
        return ChamberLocation("O", index)
    if row == "A23":
        return ChamberLocation("W0_AB", None)
    if row == "F":
        return ChamberLocation("G_aMb" if family == A_M_B else "G_bMpa", index)
    raise AssertionError(f"unlocatable row {row} in {family}")


def locate(point: StabilityPoint,
           budget: SearchBudget | None = None) -> ChamberLocation:
    return _locate_analysis(analyze(point, budget))


@dataclass(frozen=True)
class PathStep:
    step: int
    location: ChamberLocation | None
    transition: bool
    error: str | None = None

    def json(self) -> dict:
        entry = {
            "step": self.step,
            "location": None if self.location is None else str(self.location),
            "transition": self.transition,
        }
        if self.error is not None:
            entry["error"] = self.error
        return entry


def walk(start: StabilityPoint, end: StabilityPoint, steps: int,
         budget: SearchBudget | None = None) -> list[PathStep]:
    """Locate the exact convex combinations between two points of one chart.

    Interpolation happens in charge space with rational weights; a step whose
    charges leave the chart (or the sheets' half-planes) is reported inline
    as having left the chart rather than raising.
    """
    if steps < 1:
        raise ValueError("steps must be positive")
    if start.chart != end.chart:
        raise ValueError("walk endpoints must share one chart")
    if start.sheets != end.sheets:
        raise ValueError("walk endpoints must agree on sheets")
    report: list[PathStep] = []
    previous: ChamberLocation | None = None
    for k in range(steps + 1):
        lam = Fraction(k, steps)
        charges = tuple(
            s.scale(1 - lam) + e.scale(lam)
            for s, e in zip(start.charges, end.charges)
        )
        try:
            point = make_point(start.chart, charges, start.sheets)
        except (ChartViolation, SheetMismatch) as exc:
            report.append(PathStep(k, None, False, f"left chart: {exc}"))
            continue
        loc = locate(point, budget)
        transition = previous is not None and loc != previous
        report.append(PathStep(k, loc, transition))
        previous = loc
    return report
