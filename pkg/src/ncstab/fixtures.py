"""Hand-constructed exact fixtures covering every classification row.

Each fixture pins one row of one chart family's decision table (or one case
of the middle-chart analysis) with an exact point and the full expected
answer.  The a-side expectations are written out explicitly rather than
derived from the b-side at test time, so they exercise the conjugation path
against independent data.  Index-set shorthand: None is empty, "all" is all
of Z, ("single", m), ("block", lo, hi), ("ge", lo), ("le", hi).
"""

from __future__ import annotations

from dataclasses import dataclass

from .gaussian import gr
from .stability import ChartId, make_point
from .symbolic import IndexSet


def spec_to_indexset(spec) -> IndexSet:
    if spec is None:
        return IndexSet.none()
    if spec == "all":
        return IndexSet.all()
    tag = spec[0]
    if tag == "single":
        return IndexSet.single(spec[1])
    if tag == "block":
        return IndexSet.block(spec[1], spec[2])
    if tag == "ge":
        return IndexSet.at_least(spec[1])
    if tag == "le":
        return IndexSet.at_most(spec[1])
    raise ValueError(f"bad index-set spec {spec!r}")


@dataclass(frozen=True)
class Fixture:
    name: str
    family: str
    index: int
    charges: tuple
    sheets: tuple
    row: str                      # effective row/case expected to fire
    location: str
    alpha: object = None
    beta: object = None
    da: object = None
    db: object = None
    m: bool = False
    mp: bool = False
    c1s: frozenset = frozenset()
    c1ss: frozenset = frozenset()
    nu: tuple | None = None
    notes: str = ""

    def point(self):
        charges = tuple(gr(re, im) for re, im in self.charges)
        return make_point(ChartId(self.family, self.index), charges, self.sheets)


_B = frozenset({"B"})
_A = frozenset({"A"})
_AB = frozenset({"A", "B"})


FIXTURES: tuple[Fixture, ...] = (
    # ----- (b^0, b^1, M') ---------------------------------------------------
    Fixture("bbmp_r1", "b_b_Mp", 0, ((1, 1), (-1, -3), (-1, -5)), (0, 1, 1),
            "R1", "O(0)", db=("block", 0, 1), mp=True),
    Fixture("bbmp_r2_with_m", "b_b_Mp", 0, ((-1, 1), (2, -1), (-1, -1)), (0, 1, 1),
            "R2", "O(0)", alpha=("single", 0), beta=("single", 0),
            da=("single", 0), db=("block", 0, 1), m=True, mp=True),
    Fixture("bbmp_r2_no_m", "b_b_Mp", 0, ((-1, 1), (2, -1), (1, -1)), (0, 1, 1),
            "R2", "O(0)", alpha=("single", 0),
            da=("single", 0), db=("block", 0, 1), mp=True),
    Fixture("bbmp_r3", "b_b_Mp", 0, ((1, 1), (-2, -2), (-1, -2)), (0, 1, 1),
            "R3", "W_bbMp(0)", db="all", mp=True, c1s=_B, c1ss=_B),
    Fixture("bbmp_r4", "b_b_Mp", 0, ((1, 1), (-2, -2), (0, 1)), (0, 1, 0),
            "R4", "W_bbMp(0)", alpha=("single", 0), beta=("single", 0),
            da=("single", 0), db="all", m=True, mp=True, c1s=_B, c1ss=_B),
    Fixture("bbmp_r5", "b_b_Mp", 0, ((1, 1), (-2, -2), (-3, -3)), (0, 1, 1),
            "R5", "W_bbMp(0)", alpha=("ge", 0), beta=("ge", 0),
            da=("ge", 0), db="all", m=True, mp=True, c1s=_AB, c1ss=_B,
            notes="C1-semistable strictly larger than C1-stable"),
    Fixture("bbmp_r6_m", "b_b_Mp", 0, ((-1, 1), (-2, 1), (-2, 0)), (0, 0, 0),
            "R6", "ChB_interior", db="all", m=True, mp=True, c1s=_B, c1ss=_B),
    Fixture("bbmp_r6_no_m", "b_b_Mp", 0, ((-1, 1), (-2, 1), (-1, -5)), (0, 0, 1),
            "R6", "ChB_interior", db="all", mp=True, c1s=_B, c1ss=_B),
    Fixture("bbmp_r7", "b_b_Mp", 0, ((-1, 1), (-2, 1), (-4, 1)), (0, 0, 0),
            "R7", "ChB_interior", alpha=("block", 2, 4), beta=("block", 2, 4),
            da=("block", 2, 4), db="all", m=True, mp=True, c1s=_B, c1ss=_B,
            nu=(2, 4)),
    # ----- (M, b^0, b^1) ----------------------------------------------------
    Fixture("mbb_r1", "M_b_b", 0, ((2, 1), (-1, -2), (1, 3)), (0, 1, 2),
            "R1", "O(0)", db=("block", 0, 1), m=True),
    Fixture("mbb_r2_with_mp", "M_b_b", 0, ((1, 2), (-1, 1), (2, -1)), (0, 0, 1),
            "R2", "O(0)", alpha=("single", 0), beta=("single", 0),
            da=("single", 0), db=("block", 0, 1), m=True, mp=True),
    Fixture("mbb_r2_no_mp", "M_b_b", 0, ((2, -1), (-1, 1), (5, -2)), (-1, 0, 1),
            "R2", "O(0)", beta=("single", 0),
            da=("single", 0), db=("block", 0, 1), m=True),
    Fixture("mbb_r3", "M_b_b", 0, ((-2, -1), (-1, 1), (2, -2)), (-1, 0, 1),
            "R3", "W_Mbb(0)", db="all", m=True, c1s=_B, c1ss=_B),
    Fixture("mbb_r4", "M_b_b", 0, ((2, 1), (-1, 1), (2, -2)), (0, 0, 1),
            "R4", "W_Mbb(0)", alpha=("single", 0), beta=("single", 0),
            da=("single", 0), db="all", m=True, mp=True, c1s=_B, c1ss=_B),
    Fixture("mbb_r5", "M_b_b", 0, ((1, -1), (-1, 1), (2, -2)), (-1, 0, 1),
            "R5", "W_Mbb(0)", alpha=("le", 0), beta=("le", 0),
            da=("le", 0), db="all", m=True, mp=True, c1s=_AB, c1ss=_B),
    Fixture("mbb_r6_mp", "M_b_b", 0, ((-3, 0), (-1, 1), (-2, 1)), (-2, 0, 0),
            "R6", "ChB_interior", db="all", m=True, mp=True, c1s=_B, c1ss=_B),
    Fixture("mbb_r6_no_mp", "M_b_b", 0, ((-2, 1), (-1, 1), (-2, 1)), (-2, 0, 0),
            "R6", "ChB_interior", db="all", m=True, c1s=_B, c1ss=_B),
    Fixture("mbb_r7", "M_b_b", 0, ((1, -1), (-1, 1), (-2, 1)), (-1, 0, 0),
            "R7", "ChB_interior", alpha=("block", -2, 0), beta=("block", -2, 0),
            da=("block", -2, 0), db="all", m=True, mp=True, c1s=_B, c1ss=_B,
            nu=(-2, 0)),
    # ----- (b^0, a^0, b^1) --------------------------------------------------
    Fixture("bab_both", "b_a_b", 0, ((1, 1), (-1, 1), (-1, -2)), (0, 0, 1),
            "BAB", "O(0)", alpha=("single", 0), beta=("single", 0),
            da=("single", 0), db=("block", 0, 1), m=True, mp=True),
    Fixture("bab_m_only", "b_a_b", 0, ((1, 1), (-1, 1), (2, -1)), (0, 0, 1),
            "BAB", "O(0)", beta=("single", 0),
            da=("single", 0), db=("block", 0, 1), m=True),
    Fixture("bab_mp_only", "b_a_b", 0, ((1, 1), (-1, -2), (1, 1)), (0, 1, 2),
            "BAB", "O(0)", alpha=("single", 0),
            da=("single", 0), db=("block", 0, 1), mp=True),
    Fixture("bab_neither", "b_a_b", 0, ((1, 1), (-1, -2), (1, 3)), (0, 1, 2),
            "BAB", "O(0)", da=("single", 0), db=("block", 0, 1)),
    # ----- (a^0, M, b^1) ----------------------------------------------------
    Fixture("amb_a1", "a_M_b", 0, ((1, 1), (0, 1), (-1, 1)), (0, 0, 0),
            "R7", "ChA_interior", alpha=("block", 0, 1), beta=("block", 1, 2),
            da="all", db=("block", 1, 2), m=True, mp=True, c1s=_A, c1ss=_A,
            notes="case a.1; answered in (a^0, a^1, M)"),
    Fixture("amb_a21", "a_M_b", 0, ((0, 1), (1, 2), (-1, 1)), (0, 0, 0),
            "R7", "ChA_interior", alpha=("block", -1, 0), beta=("block", 0, 1),
            da="all", db=("block", 0, 1), m=True, mp=True, c1s=_A, c1ss=_A,
            notes="case a.2.1; descending transfer into the a-side"),
    Fixture("amb_a22", "a_M_b", 0, ((0, 1), (2, 1), (-1, 0)), (0, 0, 0),
            "R7", "ChB_interior", alpha=("block", -1, 2), beta=("block", -1, 2),
            da=("block", -1, 2), db="all", m=True, mp=True, c1s=_B, c1ss=_B,
            notes="case a.2.2; descending transfer into the b-side"),
    Fixture("amb_a23", "a_M_b", 0, ((-1, 2), (0, 1), (-1, 1)), (0, 0, 0),
            "A23", "W0_AB", alpha="all", beta="all", da="all", db="all",
            m=True, mp=True, c1s=_AB, c1ss=_AB),
    Fixture("amb_b", "a_M_b", 0, ((1, 2), (2, 1), (-2, -2)), (0, 0, 1),
            "R4", "W_Mbb(0)", alpha=("single", 0), beta=("single", 0),
            da=("single", 0), db="all", m=True, mp=True, c1s=_B, c1ss=_B,
            notes="case b; answered in (M, b^0, b^1)"),
    Fixture("amb_c", "a_M_b", 0, ((1, 1), (0, 1), (2, -2)), (0, 0, 1),
            "C", "O(0)", da=("single", 0), db=("single", 1), m=True),
    Fixture("amb_ceq", "a_M_b", 0, ((1, 1), (2, 2), (2, -2)), (0, 0, 1),
            "CEQ", "O(0)", beta=("single", 0),
            da=("single", 0), db=("block", 0, 1), m=True),
    Fixture("amb_d", "a_M_b", 0, ((1, 1), (0, 1), (0, -2)), (0, 0, 1),
            "D", "O(0)", beta=("single", 1),
            da=("block", 0, 1), db=("single", 1), m=True),
    Fixture("amb_e", "a_M_b", 0, ((-1, 2), (0, 1), (0, -3)), (0, 0, 1),
            "R7", "ChB_interior", alpha=("block", -3, 1), beta=("block", -3, 1),
            da=("block", -3, 1), db="all", m=True, mp=True, c1s=_B, c1ss=_B,
            notes="case e; descending transfer into the b-side"),
    Fixture("amb_f", "a_M_b", 0, ((0, 1), (0, 2), (0, -3)), (0, 0, 1),
            "F", "G_aMb(0)", alpha="all", beta="all", da="all", db="all",
            m=True, mp=True, c1s=_AB, c1ss=_AB),
    # ----- (a^0, a^1, M) ----------------------------------------------------
    Fixture("aam_r1", "a_a_M", 0, ((1, 1), (-1, -3), (-1, -5)), (0, 1, 1),
            "R1", "O(0)", da=("block", 0, 1), m=True),
    Fixture("aam_r2_with_mp", "a_a_M", 0, ((-1, 1), (2, -1), (-1, -1)), (0, 1, 1),
            "R2", "O(0)", alpha=("single", 0), beta=("single", 1),
            da=("block", 0, 1), db=("single", 1), m=True, mp=True),
    Fixture("aam_r2_no_mp", "a_a_M", 0, ((-1, 1), (2, -1), (1, -1)), (0, 1, 1),
            "R2", "O(0)", beta=("single", 1),
            da=("block", 0, 1), db=("single", 1), m=True),
    Fixture("aam_r3", "a_a_M", 0, ((1, 1), (-2, -2), (-1, -2)), (0, 1, 1),
            "R3", "W_aaM(0)", da="all", m=True, c1s=_A, c1ss=_A),
    Fixture("aam_r4", "a_a_M", 0, ((1, 1), (-2, -2), (0, 1)), (0, 1, 0),
            "R4", "W_aaM(0)", alpha=("single", 0), beta=("single", 1),
            da="all", db=("single", 1), m=True, mp=True, c1s=_A, c1ss=_A),
    Fixture("aam_r5", "a_a_M", 0, ((1, 1), (-2, -2), (-3, -3)), (0, 1, 1),
            "R5", "W_aaM(0)", alpha=("ge", 0), beta=("ge", 1),
            da="all", db=("ge", 1), m=True, mp=True, c1s=_AB, c1ss=_A,
            notes="C1-semistable strictly larger than C1-stable, a-side"),
    Fixture("aam_r6_mp", "a_a_M", 0, ((-1, 1), (-2, 1), (-2, 0)), (0, 0, 0),
            "R6", "ChA_interior", da="all", m=True, mp=True, c1s=_A, c1ss=_A),
    Fixture("aam_r6_no_mp", "a_a_M", 0, ((-1, 1), (-2, 1), (-1, -5)), (0, 0, 1),
            "R6", "ChA_interior", da="all", m=True, c1s=_A, c1ss=_A),
    Fixture("aam_r7", "a_a_M", 0, ((-1, 1), (-2, 1), (-4, 1)), (0, 0, 0),
            "R7", "ChA_interior", alpha=("block", 2, 4), beta=("block", 3, 5),
            da="all", db=("block", 3, 5), m=True, mp=True, c1s=_A, c1ss=_A,
            nu=(2, 4)),
    # ----- (M', a^0, a^1) ---------------------------------------------------
    Fixture("mpaa_r1", "Mp_a_a", 0, ((2, 1), (-1, -2), (1, 3)), (0, 1, 2),
            "R1", "O(0)", da=("block", 0, 1), mp=True),
    Fixture("mpaa_r2_with_m", "Mp_a_a", 0, ((1, 2), (-1, 1), (2, -1)), (0, 0, 1),
            "R2", "O(0)", alpha=("single", 0), beta=("single", 1),
            da=("block", 0, 1), db=("single", 1), m=True, mp=True),
    Fixture("mpaa_r2_no_m", "Mp_a_a", 0, ((2, -1), (-1, 1), (5, -2)), (-1, 0, 1),
            "R2", "O(0)", alpha=("single", 0),
            da=("block", 0, 1), db=("single", 1), mp=True),
    Fixture("mpaa_r3", "Mp_a_a", 0, ((-2, -1), (-1, 1), (2, -2)), (-1, 0, 1),
            "R3", "W_MpAa(0)", da="all", mp=True, c1s=_A, c1ss=_A),
    Fixture("mpaa_r4", "Mp_a_a", 0, ((2, 1), (-1, 1), (2, -2)), (0, 0, 1),
            "R4", "W_MpAa(0)", alpha=("single", 0), beta=("single", 1),
            da="all", db=("single", 1), m=True, mp=True, c1s=_A, c1ss=_A),
    Fixture("mpaa_r5", "Mp_a_a", 0, ((1, -1), (-1, 1), (2, -2)), (-1, 0, 1),
            "R5", "W_MpAa(0)", alpha=("le", 0), beta=("le", 1),
            da="all", db=("le", 1), m=True, mp=True, c1s=_AB, c1ss=_A),
    Fixture("mpaa_r6_m", "Mp_a_a", 0, ((-3, 0), (-1, 1), (-2, 1)), (-2, 0, 0),
            "R6", "ChA_interior", da="all", m=True, mp=True, c1s=_A, c1ss=_A),
    Fixture("mpaa_r6_no_m", "Mp_a_a", 0, ((-2, 1), (-1, 1), (-2, 1)), (-2, 0, 0),
            "R6", "ChA_interior", da="all", mp=True, c1s=_A, c1ss=_A),
    Fixture("mpaa_r7", "Mp_a_a", 0, ((1, -1), (-1, 1), (-2, 1)), (-1, 0, 0),
            "R7", "ChA_interior", alpha=("block", -2, 0), beta=("block", -1, 1),
            da="all", db=("block", -1, 1), m=True, mp=True, c1s=_A, c1ss=_A,
            nu=(-2, 0)),
    # ----- (a^0, b^1, a^1) --------------------------------------------------
    Fixture("aba_both", "a_b_a", 0, ((0, 1), (-1, -2), (2, -1)), (0, 1, 1),
            "BAB", "O(0)", alpha=("single", 0), beta=("single", 1),
            da=("block", 0, 1), db=("single", 1), m=True, mp=True),
    Fixture("aba_m_only", "a_b_a", 0, ((1, 1), (-1, -2), (2, -1)), (0, 1, 1),
            "BAB", "O(0)", beta=("single", 1),
            da=("block", 0, 1), db=("single", 1), m=True),
    Fixture("aba_mp_only", "a_b_a", 0, ((0, 1), (-1, -2), (1, 3)), (0, 1, 2),
            "BAB", "O(0)", alpha=("single", 0),
            da=("block", 0, 1), db=("single", 1), mp=True),
    Fixture("aba_neither", "a_b_a", 0, ((1, 1), (-1, -2), (1, 3)), (0, 1, 2),
            "BAB", "O(0)", da=("block", 0, 1), db=("single", 1)),
    # ----- (b^0, M', a^0) ---------------------------------------------------
    Fixture("bmpa_c", "b_Mp_a", 0, ((1, 1), (0, 1), (2, -2)), (0, 0, 1),
            "C", "O(0)", da=("single", 0), db=("single", 0), mp=True),
    Fixture("bmpa_a_eq", "b_Mp_a", 0, ((1, 1), (2, 2), (2, -2)), (0, 0, 1),
            "CEQ", "O(0)", alpha=("single", -1),
            da=("block", -1, 0), db=("single", 0), mp=True,
            notes="phi(b^0) = phi(M'), so alpha^{-1} is the lone stable curve"),
    Fixture("bmpa_b_eq", "b_Mp_a", 0, ((1, 1), (0, 1), (0, -2)), (0, 0, 1),
            "D", "O(0)", alpha=("single", 0),
            da=("single", 0), db=("block", 0, 1), mp=True,
            notes="phi(M')+1 = phi(a^0), so alpha^0 is the lone stable curve"),
    Fixture("bmpa_f", "b_Mp_a", 0, ((0, 1), (0, 2), (0, -3)), (0, 0, 1),
            "F", "G_bMpa(0)", alpha="all", beta="all", da="all", db="all",
            m=True, mp=True, c1s=_AB, c1ss=_AB),
    Fixture("bmpa_a23", "b_Mp_a", 0, ((-1, 2), (0, 1), (-1, 1)), (0, 0, 0),
            "A23", "W0_AB", alpha="all", beta="all", da="all", db="all",
            m=True, mp=True, c1s=_AB, c1ss=_AB),
    Fixture("bmpa_a21_mirror", "b_Mp_a", 1, ((0, 1), (1, 2), (-1, 1)), (0, 0, 0),
            "R7", "ChB_interior", alpha=("block", 0, 1), beta=("block", 0, 1),
            da=("block", 0, 1), db="all", m=True, mp=True, c1s=_B, c1ss=_B,
            notes="conjugate of the a.2.1 point one index up"),
)


def fixture_by_name(name: str) -> Fixture:
    for f in FIXTURES:
        if f.name == name:
            return f
    raise KeyError(name)
