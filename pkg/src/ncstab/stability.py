"""Stability points: a chart plus exact central-charge data.

A stability condition is presented in one of eight chart families, each the
locus where a full exceptional triple is semistable subject to three strict
phase inequalities.  A point records the chart, the three charge values and
the three integer sheets; the central charge on all of K_0 is solved exactly
from the triple's classes, which always form a Z-basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .angles import (
    OPEN_CLOSED,
    OPEN_OPEN,
    Phase,
    arg_in_window,
    phase_add_int,
    phase_from_charge,
)
from .gaussian import GaussianRational, gaussian_json, parse_gaussian
from .quiver import DELTA, ExcObject, KClass, M, MP, a, b, class_of

MP_A_A = "Mp_a_a"
A_B_A = "a_b_a"
A_A_M = "a_a_M"
A_M_B = "a_M_b"
B_MP_A = "b_Mp_a"
M_B_B = "M_b_b"
B_A_B = "b_a_b"
B_B_MP = "b_b_Mp"

FAMILIES = (MP_A_A, A_B_A, A_A_M, A_M_B, B_MP_A, M_B_B, B_A_B, B_B_MP)

A_SIDE = (MP_A_A, A_B_A, A_A_M)
B_SIDE = (M_B_B, B_A_B, B_B_MP)


class ChartViolation(ValueError):
    def __init__(self, failures: list[str]):
        self.failures = failures
        super().__init__("; ".join(failures))


def chart_objects(family: str, m: int) -> tuple[ExcObject, ExcObject, ExcObject]:
    if family == MP_A_A:
        return (MP, a(m), a(m + 1))
    if family == A_B_A:
        return (a(m), b(m + 1), a(m + 1))
    if family == A_A_M:
        return (a(m), a(m + 1), M)
    if family == A_M_B:
        return (a(m), M, b(m + 1))
    if family == B_MP_A:
        return (b(m), MP, a(m))
    if family == M_B_B:
        return (M, b(m), b(m + 1))
    if family == B_A_B:
        return (b(m), a(m), b(m + 1))
    if family == B_B_MP:
        return (b(m), b(m + 1), MP)
    raise ValueError(f"unknown chart family {family!r}")


# Each triple (i, j, k) encodes the strict inequality phi_i < phi_j + k.
CHART_INEQUALITIES: dict[str, tuple[tuple[int, int, int], ...]] = {
    MP_A_A: ((0, 1, 0), (0, 2, -1), (1, 2, 0)),
    A_B_A: ((0, 1, 0), (0, 2, -1), (1, 2, 0)),
    A_A_M: ((0, 1, 0), (0, 2, 0), (1, 2, 1)),
    A_M_B: ((0, 1, 1), (0, 2, 0), (1, 2, 0)),
    B_MP_A: ((0, 1, 1), (0, 2, 0), (1, 2, 0)),
    M_B_B: ((0, 1, 0), (0, 2, -1), (1, 2, 0)),
    B_A_B: ((0, 1, 0), (0, 2, -1), (1, 2, 0)),
    B_B_MP: ((0, 1, 0), (0, 2, 0), (1, 2, 1)),
}

# Image of a chart under the autoequivalence zeta: family and index shift.
ZETA_CHART_MAP: dict[str, tuple[str, int]] = {
    A_A_M: (B_B_MP, 0),
    MP_A_A: (M_B_B, 0),
    A_B_A: (B_A_B, 0),
    A_M_B: (B_MP_A, 0),
    B_B_MP: (A_A_M, -1),
    M_B_B: (MP_A_A, -1),
    B_A_B: (A_B_A, -1),
    B_MP_A: (A_M_B, -1),
}

ZETA_CHART_INVERSE: dict[str, tuple[str, int]] = {
    fam: (src, -shift)
    for src, (fam, shift) in ZETA_CHART_MAP.items()
}


@dataclass(frozen=True)
class ChartId:
    family: str
    index: int

    def objects(self) -> tuple[ExcObject, ExcObject, ExcObject]:
        return chart_objects(self.family, self.index)

    def __str__(self) -> str:
        return f"{self.family}({self.index})"


@dataclass(frozen=True)
class CentralCharge:
    """Z-linear functional K_0 -> C given by its values on the simples."""

    zx: GaussianRational
    zz: GaussianRational
    zy: GaussianRational

    def of_class(self, c: KClass) -> GaussianRational:
        return self.zx.scale(c.x) + self.zz.scale(c.z) + self.zy.scale(c.y)

    def of(self, obj: ExcObject) -> GaussianRational:
        return self.of_class(class_of(obj))


def _solve_central_charge(
    objs: tuple[ExcObject, ...], charges: tuple[GaussianRational, ...]
) -> CentralCharge:
    rows = [class_of(o).as_tuple() for o in objs]
    det = (
        rows[0][0] * (rows[1][1] * rows[2][2] - rows[1][2] * rows[2][1])
        - rows[0][1] * (rows[1][0] * rows[2][2] - rows[1][2] * rows[2][0])
        + rows[0][2] * (rows[1][0] * rows[2][1] - rows[1][1] * rows[2][0])
    )
    assert abs(det) == 1, "chart triples are Z-bases of K_0"
    # Cramer's rule over the Gaussian rationals, one column at a time.
    def solve(col: int) -> GaussianRational:
        m = [list(r) for r in rows]
        acc = None
        for i in range(3):
            cof_rows = [m[j][:col] + m[j][col + 1:] for j in range(3) if j != i]
            minor = (
                cof_rows[0][0] * cof_rows[1][1] - cof_rows[0][1] * cof_rows[1][0]
            )
            sign = (-1) ** (i + col)
            term = charges[i].scale(sign * minor)
            acc = term if acc is None else acc + term
        return acc.scale(Fraction(1, det))

    return CentralCharge(solve(0), solve(1), solve(2))


@dataclass(frozen=True)
class StabilityPoint:
    chart: ChartId
    charges: tuple[GaussianRational, GaussianRational, GaussianRational]
    sheets: tuple[int, int, int]
    phases: tuple[Phase, Phase, Phase]
    central: CentralCharge

    def charge_of(self, obj: ExcObject) -> GaussianRational:
        return self.central.of(obj)

    def phase_of_chart_object(self, i: int) -> Phase:
        return self.phases[i]

    def __str__(self) -> str:
        return f"{self.chart}[{', '.join(map(str, self.charges))}]"


def make_point(
    chart: ChartId,
    charges: tuple[GaussianRational, GaussianRational, GaussianRational],
    sheets: tuple[int, int, int],
) -> StabilityPoint:
    """Validate (charges, sheets) against the chart and solve the charge."""
    objs = chart.objects()
    phases = tuple(phase_from_charge(z, n) for z, n in zip(charges, sheets))
    failures = []
    for i, j, k in CHART_INEQUALITIES[chart.family]:
        if not phases[i] < phase_add_int(phases[j], k):
            shift = "" if k == 0 else f"{k:+d}"
            failures.append(
                f"phi({objs[i]}) < phi({objs[j]}){shift} fails "
                f"({phases[i].approx():.4f} vs {phases[j].approx() + k:.4f})"
            )
    if failures:
        raise ChartViolation(failures)
    central = _solve_central_charge(objs, charges)
    for o, z in zip(objs, charges):
        assert central.of(o) == z
    return StabilityPoint(chart, tuple(charges), tuple(sheets), phases, central)


def charge_of(point: StabilityPoint, obj: ExcObject) -> GaussianRational:
    return point.charge_of(obj)


# Position of the consecutive pair (e^p, e^{p+1}) inside each chart triple.
_T_ANCHOR = {A_A_M: 0, M_B_B: 1, B_B_MP: 0, MP_A_A: 1}


def chart_t(point: StabilityPoint) -> Phase:
    """Window-normalized argument of Z(delta) below the chart's pair anchor.

    Defined in the four families whose triple contains a consecutive pair;
    the window is (phi(e^p) - 1, phi(e^p)), open on both sides.
    """
    family = point.chart.family
    if family not in _T_ANCHOR:
        raise ValueError(f"t is not defined in family {family}")
    anchor = point.phases[_T_ANCHOR[family]]
    z_delta = point.central.of_class(DELTA)
    return arg_in_window(z_delta, phase_add_int(anchor, -1), OPEN_OPEN)


def zeta_point(point: StabilityPoint) -> StabilityPoint:
    """Transport the point along the autoequivalence.

    The image chart's objects are the zeta-images of the original triple, and
    both charge values and phases are preserved objectwise, so the raw data
    carries over unchanged; only the chart label moves.
    """
    family, shift = ZETA_CHART_MAP[point.chart.family]
    target = ChartId(family, point.chart.index + shift)
    return make_point(target, point.charges, point.sheets)


# Licenses for re-expressing a middle-chart point in another chart.
LICENSE_IDENTITY = "identity"
LICENSE_AMB_A1 = "amb_a1"      # target (a^p, a^{p+1}, M)
LICENSE_AMB_A21 = "amb_a21"    # target (a^j, a^{j+1}, M), j supplied
LICENSE_AMB_A22 = "amb_a22"    # target (b^j, b^{j+1}, M'), j supplied
LICENSE_AMB_B = "amb_b"        # target (M, b^p, b^{p+1})
LICENSE_AMB_E = "amb_e"        # target (b^j, b^{j+1}, M'), j supplied


def reexpress(point: StabilityPoint, target: ChartId, license: str) -> StabilityPoint:
    """Present the same stability condition in a licensed target chart.

    The caller vouches (via the license tag) that the point satisfies the
    hypotheses under which the transfer formulas are valid; the constructed
    point is re-validated, so a false license surfaces as ChartViolation.
    """
    if license == LICENSE_IDENTITY:
        if target != point.chart:
            raise ValueError("identity transfer must keep the chart")
        return point
    if point.chart.family != A_M_B:
        raise ValueError(f"license {license} applies to {A_M_B} points")
    p = point.chart.index
    z = point.central
    phi_a_p, phi_m, phi_b_p1 = point.phases

    if license == LICENSE_AMB_A1:
        if target != ChartId(A_A_M, p):
            raise ValueError("a1 transfer targets (a^p, a^{p+1}, M)")
        z_a_next = z.of(a(p + 1))
        phi_a_next = arg_in_window(z_a_next, phi_b_p1, OPEN_CLOSED)
        return make_point(
            target,
            (point.charges[0], z_a_next, point.charges[1]),
            (point.sheets[0], phi_a_next.sheet, point.sheets[1]),
        )
    if license == LICENSE_AMB_B:
        if target != ChartId(M_B_B, p):
            raise ValueError("b transfer targets (M, b^p, b^{p+1})")
        z_b_p = z.of(b(p))
        phi_b_p = arg_in_window(z_b_p, phi_m, OPEN_CLOSED)
        return make_point(
            target,
            (point.charges[1], z_b_p, point.charges[2]),
            (point.sheets[1], phi_b_p.sheet, point.sheets[2]),
        )
    if license == LICENSE_AMB_A21:
        if target.family != A_A_M:
            raise ValueError("a21 transfer targets an (a^j, a^{j+1}, M) chart")
        j = target.index
        phi_mp = arg_in_window(z.of(MP), phase_add_int(phi_b_p1, -1), OPEN_OPEN)
        t_a = arg_in_window(z.of_class(DELTA), phi_mp, OPEN_OPEN)
        pa = arg_in_window(z.of(a(j)), t_a, OPEN_OPEN)
        pa1 = arg_in_window(z.of(a(j + 1)), t_a, OPEN_OPEN)
        return make_point(
            target,
            (z.of(a(j)), z.of(a(j + 1)), point.charges[1]),
            (pa.sheet, pa1.sheet, point.sheets[1]),
        )
    if license in (LICENSE_AMB_A22, LICENSE_AMB_E):
        if target.family != B_B_MP:
            raise ValueError("a22/e transfers target a (b^j, b^{j+1}, M') chart")
        j = target.index
        z_mp = z.of(MP)
        phi_mp = arg_in_window(z_mp, phase_add_int(phi_a_p, -1), OPEN_OPEN)
        t = arg_in_window(z.of_class(DELTA), phi_m, OPEN_OPEN)
        pb = arg_in_window(z.of(b(j)), t, OPEN_OPEN)
        pb1 = arg_in_window(z.of(b(j + 1)), t, OPEN_OPEN)
        return make_point(
            target,
            (z.of(b(j)), z.of(b(j + 1)), z_mp),
            (pb.sheet, pb1.sheet, phi_mp.sheet),
        )
    raise ValueError(f"unknown transfer license {license!r}")


def point_json(point: StabilityPoint) -> dict:
    return {
        "chart": {"family": point.chart.family, "index": point.chart.index},
        "charges": [gaussian_json(zc) for zc in point.charges],
        "sheets": list(point.sheets),
    }


def parse_point(obj) -> tuple[StabilityPoint, bool]:
    """Build a point from its JSON form; returns (point, exact_flag)."""
    from .angles import charge_from_polar

    if not isinstance(obj, dict):
        raise ValueError("point must be a JSON object")
    chart_spec = obj.get("chart")
    if not isinstance(chart_spec, dict) or "family" not in chart_spec:
        raise ValueError("point.chart must carry family and index")
    family = chart_spec["family"]
    if family not in FAMILIES:
        raise ValueError(f"unknown chart family {family!r}")
    chart = ChartId(family, int(chart_spec.get("index", 0)))
    raw_charges = obj.get("charges")
    if not isinstance(raw_charges, list) or len(raw_charges) != 3:
        raise ValueError("point.charges must list three values")
    exact = True
    charges = []
    sheets_override: list[int | None] = []
    for entry in raw_charges:
        if isinstance(entry, dict) and ("r" in entry or "phi" in entry):
            zc, sheet = charge_from_polar(entry["r"], entry["phi"],
                                          int(entry.get("max_denominator", 64)))
            charges.append(zc)
            sheets_override.append(sheet)
            exact = False
        else:
            charges.append(parse_gaussian(entry))
            sheets_override.append(None)
    raw_sheets = obj.get("sheets", [0, 0, 0])
    if not isinstance(raw_sheets, list) or len(raw_sheets) != 3:
        raise ValueError("point.sheets must list three integers")
    sheets = tuple(
        s if s is not None else int(n)
        for s, n in zip(sheets_override, raw_sheets)
    )
    return make_point(chart, tuple(charges), sheets), exact


def chart_catalog() -> list[dict]:
    """The eight families with their object patterns and inequality templates."""
    entries = []
    for family in FAMILIES:
        objs = chart_objects(family, 0)
        names = [str(o).replace(":0", ":m").replace(":1", ":m+1") for o in objs]
        ineqs = []
        for i, j, k in CHART_INEQUALITIES[family]:
            shift = "" if k == 0 else f" {'+' if k > 0 else '-'} {abs(k)}"
            ineqs.append(f"phi({names[i]}) < phi({names[j]}){shift}")
        entries.append({"family": family, "objects": names, "inequalities": ineqs})
    return entries
