"""The table engine: from a stability point to its full classification.

Only the b-side tables and the middle (a^p, M, b^{p+1}) case analysis are
implemented directly; every a-side chart is answered by conjugating through
the autoequivalence zeta and pulling the answer back, and the transferable
middle cases are answered by re-expressing the point in a licensed chart.
Row guards are evaluated exhaustively and asserted mutually exclusive, so a
transcription error aborts instead of silently picking a row.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .angles import (
    CLOSED_OPEN,
    OPEN_CLOSED,
    OPEN_OPEN,
    Phase,
    arg_in_window,
    phase_add_int,
    phase_compare,
)
from .quiver import DELTA, ExcObject, M, MP, a, b, zeta
from .stability import (
    A_A_M,
    A_M_B,
    B_A_B,
    B_B_MP,
    ChartId,
    LICENSE_AMB_A1,
    LICENSE_AMB_A21,
    LICENSE_AMB_A22,
    LICENSE_AMB_B,
    LICENSE_AMB_E,
    M_B_B,
    MP_A_A,
    StabilityPoint,
    ZETA_CHART_INVERSE,
    reexpress,
    zeta_point,
)
from .symbolic import Classification, CurveSet, DerivedSet, IndexSet


class NoRowFired(RuntimeError):
    """No table row matched; signals a transcription bug, not bad input."""


class MultipleRowsFired(RuntimeError):
    """Overlapping table guards; signals a transcription bug."""


class SearchBudgetExceeded(RuntimeError):
    """An index search ran past its cap; signals mis-guarded input."""


@dataclass(frozen=True)
class SearchBudget:
    max_index_distance: int = 10 ** 6


DEFAULT_BUDGET = SearchBudget()


@dataclass(frozen=True)
class Analysis:
    """One resolved point: which row fired, where, and through what route."""

    point: StabilityPoint
    row: str                      # R1..R7, BAB, C, CEQ, D, F, A23, or transfer tags
    data: dict = field(default_factory=dict, compare=False, hash=False)
    inner: "Analysis | None" = None
    via: str | None = None        # "zeta" | "reexpress"

    def effective(self) -> tuple[str, int, str]:
        """(family, index, row) of the chart presentation that fired a row.

        Transfers keep the inner presentation; zeta conjugation pulls the
        inner presentation back through the chart map.
        """
        if self.inner is None:
            return (self.point.chart.family, self.point.chart.index, self.row)
        fam, idx, row = self.inner.effective()
        if self.via == "reexpress":
            return (fam, idx, row)
        pre_fam, shift = ZETA_CHART_INVERSE[fam]
        return (pre_fam, idx + shift, row)


def _phase_seq(point: StabilityPoint, kind: str, t: Phase):
    """j -> arg in (t, t+1) of Z(a^j) or Z(b^j)."""
    central = point.central
    mk = a if kind == "a" else b

    def phi(j: int) -> Phase:
        return arg_in_window(central.of(mk(j)), t, OPEN_OPEN)

    return phi


def _largest_index(pred, anchor: int, budget: SearchBudget) -> int:
    """Largest j with pred(j), where pred is downward closed in j."""
    cap = budget.max_index_distance
    if pred(anchor):
        step = 1
        while pred(anchor + step):
            step *= 2
            if step > cap:
                raise SearchBudgetExceeded(f"ascent past {cap} from {anchor}")
        lo, hi = anchor + step // 2, anchor + step
        if step == 1:
            lo = anchor
    else:
        step = 1
        while not pred(anchor - step):
            step *= 2
            if step > cap:
                raise SearchBudgetExceeded(f"descent past {cap} from {anchor}")
        lo, hi = anchor - step, anchor - step // 2
        if step == 1:
            hi = anchor
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if pred(mid):
            lo = mid
        else:
            hi = mid
    return lo


def _find_n_u(point: StabilityPoint, t: Phase, theta_n: Phase, theta_u: Phase,
              budget: SearchBudget) -> tuple[int, int]:
    """The unique N, u with phi(b^N) < theta_n <= phi(b^{N+1}) and
    phi(b^u) <= theta_u < phi(b^{u+1}), phases read in the (t, t+1) window."""
    phi = _phase_seq(point, "b", t)
    anchor = point.chart.index
    n = _largest_index(lambda j: phi(j) < theta_n, anchor, budget)
    u = _largest_index(lambda j: phi(j) <= theta_u, max(anchor, n), budget)
    assert n <= u, "threshold order violated"
    return n, u


def _analyze_bbmp(point: StabilityPoint, budget: SearchBudget) -> Analysis:
    p = point.chart.index
    phi0, phi1, q = point.phases      # b^p, b^{p+1}, M'
    v = phase_add_int(phi0, 1)
    central = point.central
    top = phase_compare(phi1, v)      # sign of phi(b^{p+1}) - (phi(b^p)+1)

    guards = {}
    guards["R1"] = top > 0 and q > phi1
    guards["R2"] = top > 0 and q <= phi1
    guards["R3"] = top == 0 and q > v
    guards["R4"] = top == 0 and q < v
    guards["R5"] = top == 0 and phase_compare(q, v) == 0
    t = None
    if top < 0:
        t = arg_in_window(central.of_class(DELTA), phase_add_int(phi0, -1), OPEN_OPEN)
        guards["R6"] = phase_add_int(q, -1) >= t
        guards["R7"] = phase_add_int(q, -1) < t
    else:
        guards["R6"] = guards["R7"] = False
    row = _fire(guards, point)

    data: dict = {"v": v, "q": q}
    if row == "R2":
        phi_a_p = arg_in_window(central.of(a(p)), q, CLOSED_OPEN)
        data["phi_a_p"] = phi_a_p
        data["m_ss"] = phi_a_p <= v
    elif row == "R6":
        data["t"] = t
        data["m_ss"] = phase_compare(phase_add_int(q, -1), t) == 0
    elif row == "R7":
        u_big = arg_in_window(-central.of(M), t, OPEN_OPEN)
        n, u = _find_n_u(point, t, q, u_big, budget)
        data.update(t=t, U=u_big, N=n, u=u)
    return Analysis(point, row, data)


def _analyze_mbb(point: StabilityPoint, budget: SearchBudget) -> Analysis:
    p = point.chart.index
    phi_m, phi0, phi1 = point.phases  # M, b^p, b^{p+1}
    v = phase_add_int(phi1, -1)
    s = phase_add_int(phi_m, 1)
    central = point.central
    top = phase_compare(v, phi0)

    guards = {}
    guards["R1"] = top > 0 and s < phi0
    guards["R2"] = top > 0 and s >= phi0
    guards["R3"] = top == 0 and s < phi0
    guards["R4"] = top == 0 and s > phi0
    guards["R5"] = top == 0 and phase_compare(s, phi0) == 0
    t = None
    if top < 0:
        t = arg_in_window(central.of_class(DELTA), phase_add_int(phi0, -1), OPEN_OPEN)
        guards["R6"] = s <= t
        guards["R7"] = s > t
    else:
        guards["R6"] = guards["R7"] = False
    row = _fire(guards, point)

    data: dict = {"v": v, "s": s}
    if row == "R2":
        phi_a_p = arg_in_window(central.of(a(p)), phase_add_int(s, -1), OPEN_CLOSED)
        data["phi_a_p"] = phi_a_p
        data["mp_ss"] = v <= phi_a_p
    elif row == "R6":
        data["t"] = t
        data["mp_ss"] = phase_compare(s, t) == 0
    elif row == "R7":
        v_small = arg_in_window(central.of(MP), t, OPEN_OPEN)
        n, u = _find_n_u(point, t, v_small, s, budget)
        data.update(t=t, V=v_small, N=n, u=u)
    return Analysis(point, row, data)


def _analyze_bab(point: StabilityPoint) -> Analysis:
    phi0, phi_a, phi1 = point.phases  # b^p, a^p, b^{p+1}
    m_ss = phase_add_int(phi_a, -1) <= phi0
    mp_ss = phase_add_int(phi1, -1) <= phi_a
    return Analysis(point, "BAB", {"m_ss": m_ss, "mp_ss": mp_ss})


def _amb_case(point: StabilityPoint) -> tuple[str, dict]:
    """Which of the middle-chart cases the point satisfies."""
    phi_a, phi_m, phi_b1 = point.phases
    central = point.central
    top = phase_compare(phi_b1, phase_add_int(phi_m, 1))
    if top < 0:
        if phi_a < phi_m:
            return "A1", {}
        phi_mp = arg_in_window(central.of(MP), phase_add_int(phi_b1, -1), OPEN_OPEN)
        c = phase_compare(phi_mp, phi_m)
        if c < 0:
            return "A21", {"phi_mp": phi_mp}
        if c > 0:
            return "A22", {"phi_mp": phi_mp}
        return "A23", {"phi_mp": phi_mp}
    if top > 0:
        if phi_m < phi_a:
            return "B", {}
        if phase_compare(phi_a, phi_m) == 0:
            return "CEQ", {}
        return "C", {}
    c = phase_compare(phi_a, phi_m)
    if c < 0:
        return "D", {}
    if c > 0:
        return "E", {}
    return "F", {}


def find_transfer_index(point: StabilityPoint, target_family: str,
                        budget: SearchBudget = DEFAULT_BUDGET) -> int:
    """A chart index for which the licensed transfer of a middle point holds.

    The target chart inequalities hold for all small enough indices; a
    descending doubling search returns the first witness, and the constructed
    point is re-validated by the caller.
    """
    if point.chart.family != A_M_B:
        raise ValueError("transfer search starts from an (a^p, M, b^{p+1}) point")
    case, extra = _amb_case(point)
    p = point.chart.index
    central = point.central
    phi_m = point.phases[1]
    if target_family == A_A_M:
        if case == "A1":
            return p
        if case != "A21":
            raise ValueError(f"case {case} does not license an a-side transfer")
        phi_mp = extra["phi_mp"]
        t_a = arg_in_window(central.of_class(DELTA), phi_mp, OPEN_OPEN)
        phi = _phase_seq(point, "a", t_a)
        guard = lambda j: phi(j) < phi_m
    elif target_family == B_B_MP:
        if case not in ("A22", "E"):
            raise ValueError(f"case {case} does not license a b-side transfer")
        if case == "E":
            phi_mp = arg_in_window(
                central.of(MP), phase_add_int(point.phases[0], -1), OPEN_OPEN
            )
        else:
            phi_mp = extra["phi_mp"]
        t = arg_in_window(central.of_class(DELTA), phi_m, OPEN_OPEN)
        phi = _phase_seq(point, "b", t)
        guard = lambda j: phi(j) < phi_mp
    elif target_family == M_B_B and case == "B":
        return p
    else:
        raise ValueError(f"no licensed transfer from case {case} to {target_family}")

    j, step = p, 1
    while not guard(j):
        j = p - step
        step *= 2
        if step > budget.max_index_distance:
            raise SearchBudgetExceeded("transfer index descent exceeded cap")
    return j


def _analyze_amb(point: StabilityPoint, budget: SearchBudget) -> Analysis:
    case, extra = _amb_case(point)
    p = point.chart.index
    if case in ("C", "CEQ", "D", "F", "A23"):
        data = dict(extra)
        if case in ("F", "A23"):
            data["t"] = point.phases[1]
        return Analysis(point, case, data)
    if case == "A1":
        target = reexpress(point, ChartId(A_A_M, p), LICENSE_AMB_A1)
        license = LICENSE_AMB_A1
    elif case == "B":
        target = reexpress(point, ChartId(M_B_B, p), LICENSE_AMB_B)
        license = LICENSE_AMB_B
    elif case == "A21":
        j = find_transfer_index(point, A_A_M, budget)
        target = reexpress(point, ChartId(A_A_M, j), LICENSE_AMB_A21)
        license = LICENSE_AMB_A21
    else:  # A22 or E
        j = find_transfer_index(point, B_B_MP, budget)
        license = LICENSE_AMB_A22 if case == "A22" else LICENSE_AMB_E
        target = reexpress(point, ChartId(B_B_MP, j), license)
    inner = _analyze(target, budget)
    return Analysis(point, case, {"license": license, **extra}, inner, "reexpress")


def _fire(guards: dict[str, bool], point: StabilityPoint) -> str:
    hits = [row for row, g in guards.items() if g]
    if not hits:
        raise NoRowFired(f"no row guard matched at {point}")
    if len(hits) > 1:
        raise MultipleRowsFired(f"rows {hits} overlap at {point}")
    return hits[0]


def _analyze(point: StabilityPoint, budget: SearchBudget) -> Analysis:
    family = point.chart.family
    if family == B_B_MP:
        return _analyze_bbmp(point, budget)
    if family == M_B_B:
        return _analyze_mbb(point, budget)
    if family == B_A_B:
        return _analyze_bab(point)
    if family == A_M_B:
        return _analyze_amb(point, budget)
    # a-side charts and (b^q, M', a^q): conjugate through zeta
    image = zeta_point(point)
    inner = _analyze(image, budget)
    return Analysis(point, inner.row, {}, inner, "zeta")


@lru_cache(maxsize=4096)
def _analyze_cached(point: StabilityPoint) -> Analysis:
    return _analyze(point, DEFAULT_BUDGET)


def analyze(point: StabilityPoint,
            budget: SearchBudget | None = None) -> Analysis:
    if budget is None or budget == DEFAULT_BUDGET:
        return _analyze_cached(point)
    return _analyze(point, budget)


def find_N_u(point: StabilityPoint, side: str, variant: str,
             budget: SearchBudget = DEFAULT_BUDGET) -> tuple[int, int]:
    """The (N, u) pair of the last b-side table row (or its a-side mirror)."""
    expected = {
        ("b_side", "tail_Mp"): B_B_MP,
        ("b_side", "head_M"): M_B_B,
        ("a_side", "tail_Mp"): A_A_M,
        ("a_side", "head_M"): MP_A_A,
    }.get((side, variant))
    if expected is None:
        raise ValueError(f"unknown search variant {side}/{variant}")
    if point.chart.family != expected:
        raise ValueError(f"{side}/{variant} expects a {expected} point")
    analysis = analyze(point, budget)
    while analysis.inner is not None:
        analysis = analysis.inner
    if analysis.row != "R7":
        raise ValueError(f"point is in row {analysis.row}; N, u exist only in R7")
    return analysis.data["N"], analysis.data["u"]


# ---------------------------------------------------------------------------
# Classification assembly
# ---------------------------------------------------------------------------

_EMPTY = frozenset()
_ONLY_A = frozenset({"A"})
_ONLY_B = frozenset({"B"})
_BOTH = frozenset({"A", "B"})


def _sets_bbmp(an: Analysis) -> Classification:
    p = an.point.chart.index
    row, d = an.row, an.data
    if row == "R1":
        return _mk(a_idx=IndexSet.none(), b_idx=IndexSet.block(p, p + 1),
                   m=False, mp=True, alpha=IndexSet.none(), beta=IndexSet.none(),
                   c1s=_EMPTY, c1ss=_EMPTY, an=an)
    if row == "R2":
        m_ss = d["m_ss"]
        return _mk(a_idx=IndexSet.single(p), b_idx=IndexSet.block(p, p + 1),
                   m=m_ss, mp=True, alpha=IndexSet.single(p),
                   beta=IndexSet.single(p) if m_ss else IndexSet.none(),
                   c1s=_EMPTY, c1ss=_EMPTY, an=an)
    if row == "R3":
        return _mk(a_idx=IndexSet.none(), b_idx=IndexSet.all(),
                   m=False, mp=True, alpha=IndexSet.none(), beta=IndexSet.none(),
                   c1s=_ONLY_B, c1ss=_ONLY_B, an=an)
    if row == "R4":
        return _mk(a_idx=IndexSet.single(p), b_idx=IndexSet.all(),
                   m=True, mp=True, alpha=IndexSet.single(p), beta=IndexSet.single(p),
                   c1s=_ONLY_B, c1ss=_ONLY_B, an=an,
                   extra={"row4_footnote": "M semistable with phi(M') < phi(M)+1"})
    if row == "R5":
        return _mk(a_idx=IndexSet.at_least(p), b_idx=IndexSet.all(),
                   m=True, mp=True, alpha=IndexSet.at_least(p),
                   beta=IndexSet.at_least(p), c1s=_BOTH, c1ss=_ONLY_B, an=an)
    if row == "R6":
        return _mk(a_idx=IndexSet.none(), b_idx=IndexSet.all(),
                   m=d["m_ss"], mp=True, alpha=IndexSet.none(), beta=IndexSet.none(),
                   c1s=_ONLY_B, c1ss=_ONLY_B, an=an)
    if row == "R7":
        blk = IndexSet.block(d["N"], d["u"])
        return _mk(a_idx=blk, b_idx=IndexSet.all(), m=True, mp=True,
                   alpha=blk, beta=blk, c1s=_ONLY_B, c1ss=_ONLY_B, an=an)
    raise NoRowFired(row)


def _sets_mbb(an: Analysis) -> Classification:
    p = an.point.chart.index
    row, d = an.row, an.data
    if row == "R1":
        return _mk(a_idx=IndexSet.none(), b_idx=IndexSet.block(p, p + 1),
                   m=True, mp=False, alpha=IndexSet.none(), beta=IndexSet.none(),
                   c1s=_EMPTY, c1ss=_EMPTY, an=an)
    if row == "R2":
        mp_ss = d["mp_ss"]
        return _mk(a_idx=IndexSet.single(p), b_idx=IndexSet.block(p, p + 1),
                   m=True, mp=mp_ss,
                   alpha=IndexSet.single(p) if mp_ss else IndexSet.none(),
                   beta=IndexSet.single(p), c1s=_EMPTY, c1ss=_EMPTY, an=an)
    if row == "R3":
        return _mk(a_idx=IndexSet.none(), b_idx=IndexSet.all(),
                   m=True, mp=False, alpha=IndexSet.none(), beta=IndexSet.none(),
                   c1s=_ONLY_B, c1ss=_ONLY_B, an=an)
    if row == "R4":
        return _mk(a_idx=IndexSet.single(p), b_idx=IndexSet.all(),
                   m=True, mp=True, alpha=IndexSet.single(p), beta=IndexSet.single(p),
                   c1s=_ONLY_B, c1ss=_ONLY_B, an=an)
    if row == "R5":
        return _mk(a_idx=IndexSet.at_most(p), b_idx=IndexSet.all(),
                   m=True, mp=True, alpha=IndexSet.at_most(p),
                   beta=IndexSet.at_most(p), c1s=_BOTH, c1ss=_ONLY_B, an=an)
    if row == "R6":
        return _mk(a_idx=IndexSet.none(), b_idx=IndexSet.all(),
                   m=True, mp=d["mp_ss"], alpha=IndexSet.none(), beta=IndexSet.none(),
                   c1s=_ONLY_B, c1ss=_ONLY_B, an=an)
    if row == "R7":
        blk = IndexSet.block(d["N"], d["u"])
        return _mk(a_idx=blk, b_idx=IndexSet.all(), m=True, mp=True,
                   alpha=blk, beta=blk, c1s=_ONLY_B, c1ss=_ONLY_B, an=an)
    raise NoRowFired(row)


def _sets_bab(an: Analysis) -> Classification:
    p = an.point.chart.index
    d = an.data
    return _mk(a_idx=IndexSet.single(p), b_idx=IndexSet.block(p, p + 1),
               m=d["m_ss"], mp=d["mp_ss"],
               alpha=IndexSet.single(p) if d["mp_ss"] else IndexSet.none(),
               beta=IndexSet.single(p) if d["m_ss"] else IndexSet.none(),
               c1s=_EMPTY, c1ss=_EMPTY, an=an)


def _sets_amb(an: Analysis) -> Classification:
    p = an.point.chart.index
    row = an.row
    if row == "C":
        return _mk(a_idx=IndexSet.single(p), b_idx=IndexSet.single(p + 1),
                   m=True, mp=False, alpha=IndexSet.none(), beta=IndexSet.none(),
                   c1s=_EMPTY, c1ss=_EMPTY, an=an)
    if row == "CEQ":
        return _mk(a_idx=IndexSet.single(p), b_idx=IndexSet.block(p, p + 1),
                   m=True, mp=False, alpha=IndexSet.none(), beta=IndexSet.single(p),
                   c1s=_EMPTY, c1ss=_EMPTY, an=an)
    if row == "D":
        return _mk(a_idx=IndexSet.block(p, p + 1), b_idx=IndexSet.single(p + 1),
                   m=True, mp=False, alpha=IndexSet.none(),
                   beta=IndexSet.single(p + 1), c1s=_EMPTY, c1ss=_EMPTY, an=an)
    if row in ("F", "A23"):
        return _mk(a_idx=IndexSet.all(), b_idx=IndexSet.all(), m=True, mp=True,
                   alpha=IndexSet.all(), beta=IndexSet.all(),
                   c1s=_BOTH, c1ss=_BOTH, an=an)
    raise NoRowFired(row)


def _witnesses(an: Analysis) -> dict:
    fam, idx, row = an.effective()
    w = {"chart": str(an.point.chart), "row": f"{fam}({idx}):{row}"}
    for key in ("t", "q", "v", "s", "U", "V", "N", "u", "phi_a_p", "phi_mp"):
        if key in an.data:
            w[key] = an.data[key]
    if an.inner is not None:
        w["via"] = an.via
        w["inner"] = _witnesses(an.inner)
    return w


def _mk(*, a_idx, b_idx, m, mp, alpha, beta, c1s, c1ss, an, extra=None):
    witnesses = _witnesses(an)
    if extra:
        witnesses.update(extra)
    return Classification(
        derived_ss=DerivedSet(a=a_idx, b=b_idx, m=m, mp=mp),
        c0_ss=CurveSet(alpha=alpha, beta=beta),
        c1_s=c1s,
        c1_ss=c1ss,
        witnesses=witnesses,
    )


def _classification(an: Analysis) -> Classification:
    if an.via == "zeta":
        inner = _classification(an.inner)
        pulled = inner.zeta_preimage()
        return Classification(pulled.derived_ss, pulled.c0_ss, pulled.c1_s,
                              pulled.c1_ss, _witnesses(an))
    if an.via == "reexpress":
        inner = _classification(an.inner)
        return Classification(inner.derived_ss, inner.c0_ss, inner.c1_s,
                              inner.c1_ss, _witnesses(an))
    family = an.point.chart.family
    if family == B_B_MP:
        return _sets_bbmp(an)
    if family == M_B_B:
        return _sets_mbb(an)
    if family == B_A_B:
        return _sets_bab(an)
    return _sets_amb(an)


def classify(point: StabilityPoint,
             budget: SearchBudget | None = None) -> Classification:
    return _classification(analyze(point, budget))


# ---------------------------------------------------------------------------
# Semistability of single catalog objects, with exact phases
# ---------------------------------------------------------------------------


def _two_level_phase(j: int, p: int, low: Phase, high: Phase) -> Phase:
    return low if j <= p else high


def _bbmp_phase(an: Analysis, obj: ExcObject) -> Phase | None:
    point = an.point
    p = point.chart.index
    phi0, phi1, q = point.phases
    central = point.central
    row, d = an.row, an.data
    k, m = obj.kind, obj.m
    if k == "Mp":
        return q
    if k == "b":
        if row in ("R1", "R2"):
            return {p: phi0, p + 1: phi1}.get(m)
        if row in ("R3", "R4", "R5"):
            return _two_level_phase(m, p, phi0, phi1)
        return arg_in_window(central.of(b(m)), d["t"], OPEN_OPEN)
    if k == "a":
        if row == "R2" and m == p:
            return d["phi_a_p"]
        if row == "R4" and m == p:
            return arg_in_window(central.of(a(p)), q, OPEN_OPEN)
        if row == "R5" and m >= p:
            return arg_in_window(central.of(a(m)), phase_add_int(q, -1), OPEN_CLOSED)
        if row == "R7" and d["N"] <= m <= d["u"]:
            return arg_in_window(central.of(a(m)), d["t"], OPEN_OPEN)
        return None
    # M
    if row == "R2" and d["m_ss"]:
        return arg_in_window(central.of(M), phase_add_int(phi0, -1), OPEN_CLOSED)
    if row == "R4":
        return arg_in_window(central.of(M), phase_add_int(phi0, -1), OPEN_OPEN)
    if row == "R5":
        return arg_in_window(central.of(M), phase_add_int(phi0, -1), OPEN_CLOSED)
    if row == "R6" and d["m_ss"]:
        return arg_in_window(central.of(M), phase_add_int(d["t"], -1), OPEN_CLOSED)
    if row == "R7":
        return phase_add_int(d["U"], -1)
    return None


def _mbb_phase(an: Analysis, obj: ExcObject) -> Phase | None:
    point = an.point
    p = point.chart.index
    phi_m, phi0, phi1 = point.phases
    central = point.central
    row, d = an.row, an.data
    k, m = obj.kind, obj.m
    if k == "M":
        return phi_m
    if k == "b":
        if row in ("R1", "R2"):
            return {p: phi0, p + 1: phi1}.get(m)
        if row in ("R3", "R4", "R5"):
            return _two_level_phase(m, p, phi0, phi1)
        return arg_in_window(central.of(b(m)), d["t"], OPEN_OPEN)
    if k == "a":
        if row == "R2" and m == p:
            return d["phi_a_p"]
        if row == "R4" and m == p:
            return arg_in_window(central.of(a(p)), phi0, OPEN_OPEN)
        if row == "R5" and m <= p:
            return arg_in_window(central.of(a(m)), phase_add_int(phi0, -1), OPEN_CLOSED)
        if row == "R7" and d["N"] <= m <= d["u"]:
            return arg_in_window(central.of(a(m)), d["t"], OPEN_OPEN)
        return None
    # M'
    if row == "R2" and d["mp_ss"]:
        return arg_in_window(central.of(MP), phase_add_int(d["s"], -1), OPEN_CLOSED)
    if row == "R4":
        return arg_in_window(central.of(MP), phi0, OPEN_OPEN)
    if row == "R5":
        return arg_in_window(central.of(MP), phase_add_int(phi0, -1), OPEN_CLOSED)
    if row == "R6" and d["mp_ss"]:
        return arg_in_window(central.of(MP), phase_add_int(d["t"], -1), OPEN_CLOSED)
    if row == "R7":
        return d["V"]
    return None


def _bab_phase(an: Analysis, obj: ExcObject) -> Phase | None:
    point = an.point
    p = point.chart.index
    phi0, phi_a, phi1 = point.phases
    central = point.central
    k, m = obj.kind, obj.m
    if k == "b":
        return {p: phi0, p + 1: phi1}.get(m)
    if k == "a":
        return phi_a if m == p else None
    if k == "M":
        if an.data["m_ss"]:
            return arg_in_window(central.of(M), phase_add_int(phi_a, -1), CLOSED_OPEN)
        return None
    if an.data["mp_ss"]:
        return arg_in_window(central.of(MP), phase_add_int(phi1, -1), CLOSED_OPEN)
    return None


def _amb_phase(an: Analysis, obj: ExcObject) -> Phase | None:
    point = an.point
    p = point.chart.index
    phi_a, phi_m, phi_b1 = point.phases
    central = point.central
    row = an.row
    k, m = obj.kind, obj.m
    if row in ("C", "CEQ", "D"):
        if k == "M":
            return phi_m
        if k == "Mp":
            return None
        if k == "a":
            if m == p:
                return phi_a
            if row == "D" and m == p + 1:
                return arg_in_window(central.of(a(p + 1)),
                                     phase_add_int(phi_b1, -1), OPEN_CLOSED)
            return None
        if m == p + 1:
            return phi_b1
        if row == "CEQ" and m == p:
            return arg_in_window(central.of(b(p)), phase_add_int(phi_m, -1),
                                 OPEN_CLOSED)
        return None
    if row == "F":
        t = an.data["t"]
        if k == "M":
            return phi_m
        if k == "Mp":
            return arg_in_window(central.of(MP), phase_add_int(t, -1), OPEN_CLOSED)
        z = central.of(a(m) if k == "a" else b(m))
        if m <= p:
            return arg_in_window(z, phase_add_int(t, -1), OPEN_CLOSED)
        return arg_in_window(z, t, OPEN_CLOSED)
    if row == "A23":
        t = an.data["t"]
        if k == "M":
            return phi_m
        if k == "Mp":
            return an.data["phi_mp"]
        z = central.of(a(m) if k == "a" else b(m))
        return arg_in_window(z, t, OPEN_OPEN)
    raise NoRowFired(row)


def _phase_direct(an: Analysis, obj: ExcObject) -> Phase | None:
    family = an.point.chart.family
    if family == B_B_MP:
        return _bbmp_phase(an, obj)
    if family == M_B_B:
        return _mbb_phase(an, obj)
    if family == B_A_B:
        return _bab_phase(an, obj)
    return _amb_phase(an, obj)


def _phase(an: Analysis, obj: ExcObject) -> Phase | None:
    if an.via == "zeta":
        return _phase(an.inner, zeta(obj))
    if an.via == "reexpress":
        return _phase(an.inner, obj)
    return _phase_direct(an, obj)


def semistable(point: StabilityPoint, obj: ExcObject,
               budget: SearchBudget | None = None) -> Phase | None:
    """Phase of the object when it is semistable at the point, else None.

    Membership is shift-invariant; the returned phase is shifted along with
    the object.
    """
    an = analyze(point, budget)
    base = _phase(an, obj.at_shift_zero())
    if base is None:
        return None
    return phase_add_int(base, obj.shift)
