import math

import pytest

from ncstab.angles import OPEN_OPEN, arg_in_window, phase_add_int
from ncstab.classifier import (
    SearchBudget,
    SearchBudgetExceeded,
    analyze,
    classify,
    find_N_u,
    find_transfer_index,
    semistable,
)
from ncstab.fixtures import FIXTURES, fixture_by_name, spec_to_indexset
from ncstab.gaussian import gr
from ncstab.quiver import DELTA, M, MP, a, alpha, b, beta, zeta
from ncstab.stability import (
    A_A_M,
    A_M_B,
    B_B_MP,
    ChartId,
    make_point,
    reexpress,
    zeta_point,
)
from ncstab.symbolic import CurveSet, DerivedSet, IndexSet

from fuzz import sample_points

INF = math.inf


def _expected_sets(fx):
    c0 = CurveSet(spec_to_indexset(fx.alpha), spec_to_indexset(fx.beta))
    dp = DerivedSet(spec_to_indexset(fx.da), spec_to_indexset(fx.db), fx.m, fx.mp)
    return c0, dp


@pytest.mark.parametrize("fx", FIXTURES, ids=lambda f: f.name)
def test_fixture_rows(fx):
    point = fx.point()
    got = classify(point)
    want_c0, want_dp = _expected_sets(fx)
    assert got.c0_ss == want_c0
    assert got.derived_ss == want_dp
    assert got.c1_s == fx.c1s
    assert got.c1_ss == fx.c1ss
    assert got.witnesses["row"].split(":")[-1] == fx.row
    if fx.nu is not None:
        w = got.witnesses
        while "N" not in w:
            w = w["inner"]
        assert (w["N"], w["u"]) == fx.nu


def test_find_N_u_row7_examples():
    point = fixture_by_name("bbmp_r7").point()
    assert find_N_u(point, "b_side", "tail_Mp") == (2, 4)

    # equality at the threshold: phi(M') = phi(b^1) makes N = 0
    point = make_point(ChartId(B_B_MP, 0), (gr(-1, 1), gr(-2, 1), gr(-2, 1)),
                       (0, 0, 0))
    assert find_N_u(point, "b_side", "tail_Mp") == (0, 2)

    point = fixture_by_name("aam_r7").point()
    assert find_N_u(point, "a_side", "tail_Mp") == (2, 4)

    point = fixture_by_name("mbb_r7").point()
    assert find_N_u(point, "b_side", "head_M") == (-2, 0)

    with pytest.raises(ValueError):
        find_N_u(fixture_by_name("bbmp_r1").point(), "b_side", "tail_Mp")


def test_find_N_u_large_translation():
    # N, u follow the threshold rays exactly even far from the chart anchor
    point = make_point(ChartId(B_B_MP, 0), (gr(-1, 1), gr(-2, 1), gr(-300, 1)),
                       (0, 0, 0))
    assert find_N_u(point, "b_side", "tail_Mp") == (298, 300)


def test_find_transfer_index_examples():
    point = fixture_by_name("amb_a1").point()
    assert find_transfer_index(point, A_A_M) == 0

    point = fixture_by_name("amb_a21").point()
    j = find_transfer_index(point, A_A_M)
    assert j <= 0
    reexpressed = reexpress(point, ChartId(A_A_M, j), "amb_a21")
    assert reexpressed.central == point.central

    point = fixture_by_name("amb_e").point()
    j = find_transfer_index(point, B_B_MP)
    assert j <= -3   # -3 is the largest admissible index
    reexpress(point, ChartId(B_B_MP, j), "amb_e")
    reexpress(point, ChartId(B_B_MP, -3), "amb_e")
    with pytest.raises(Exception):
        reexpress(point, ChartId(B_B_MP, -2), "amb_e")

    with pytest.raises(ValueError):
        find_transfer_index(fixture_by_name("amb_c").point(), B_B_MP)


def test_semistable_examples():
    point = fixture_by_name("bbmp_r1").point()
    assert semistable(point, M) is None
    assert semistable(point, b(0)) == point.phases[0]
    assert semistable(point, b(2)) is None

    point = fixture_by_name("bbmp_r7").point()
    assert semistable(point, a(3)) is not None
    assert semistable(point, a(5)) is None
    phase_m = semistable(point, M)
    assert phase_m is not None and -0.07 < phase_m.approx() < -0.06

    point = fixture_by_name("amb_f").point()
    phase_b5 = semistable(point, b(5))
    assert phase_b5 is not None and abs(phase_b5.approx() - 1.5) < 1e-12


def test_semistable_shift_adjusts_phase():
    point = fixture_by_name("bbmp_r7").point()
    base = semistable(point, a(3))
    shifted = semistable(point, a(3, shift=2))
    assert shifted == phase_add_int(base, 2)


def test_semistable_agrees_with_derived_set():
    for fx in FIXTURES:
        point = fx.point()
        got = classify(point)
        for obj in [M, MP] + [x for m in range(-4, 5) for x in (a(m), b(m))]:
            from ncstab.quiver import DerivedPoint

            in_set = DerivedPoint.of(obj) in got.derived_ss
            phase = semistable(point, obj)
            assert (phase is not None) == in_set, (fx.name, str(obj))


def test_semistable_phase_carries_charge_direction():
    # Z(X) = m * exp(i*pi*phi(X)) with m > 0: the reported phase direction
    # must be positively parallel to the object's charge, on every fixture
    from ncstab.gaussian import cross, dot

    for fx in FIXTURES:
        point = fx.point()
        for obj in [M, MP] + [x for m in range(-4, 5) for x in (a(m), b(m))]:
            phase = semistable(point, obj)
            if phase is None:
                continue
            z = point.charge_of(obj)
            d = phase.exp_direction()
            assert cross(d, z) == 0 and dot(d, z) > 0, (fx.name, str(obj))


def test_semistable_phases_respect_hom_order():
    # nonzero degree-0 maps force weakly increasing phases on semistables
    from ncstab.quiver import hom_profile

    for fx in FIXTURES:
        point = fx.point()
        objs = [M, MP] + [x for m in range(-3, 4) for x in (a(m), b(m))]
        present = [(o, semistable(point, o)) for o in objs]
        present = [(o, p) for o, p in present if p is not None]
        for x, px in present:
            for y, py in present:
                profile = hom_profile(x, y)
                if profile.degree == 0:
                    assert px <= py, (fx.name, str(x), str(y))
                elif profile.degree is not None:
                    # a map of degree d bounds the phase gap by d
                    assert px <= phase_add_int(py, profile.degree), \
                        (fx.name, str(x), str(y))


FUZZ_POINTS = sample_points(seed=2024, per_family=60)


def test_row_dispatch_is_total_on_fuzzed_points():
    for point in FUZZ_POINTS:
        classify(point)  # NoRowFired / MultipleRowsFired would raise


def test_c1_chain_and_cardinality_spectra():
    seen_c0 = set()
    seen_dp = set()
    for point in FUZZ_POINTS + [fx.point() for fx in FIXTURES]:
        c = classify(point)
        assert c.c1_ss <= c.c1_s <= {"A", "B"}
        n0 = c.c0_ss.cardinality()
        nd = c.derived_ss.cardinality()
        assert n0 == INF or n0 == 1 or n0 % 2 == 0
        assert nd in (3, 4, 5, INF)
        seen_c0.add(n0)
        seen_dp.add(nd)
        # finiteness equivalences
        assert (nd != INF) == (not c.c1_s) == (not c.c1_ss)
        assert (c.c1_s == {"A", "B"}) == (n0 == INF)
        if c.c1_ss == {"A", "B"}:
            assert n0 == INF and nd == INF
            assert c.c0_ss.alpha == IndexSet.all()
    assert {0, 1, 2, INF} <= seen_c0
    assert seen_dp == {3, 4, 5, INF}


def test_pointwise_consistency_curves_vs_derived():
    from ncstab.quiver import DerivedPoint

    for point in FUZZ_POINTS[:200] + [fx.point() for fx in FIXTURES]:
        c = classify(point)
        for m in range(-3, 4):
            want = (
                DerivedPoint("Mp") in c.derived_ss
                and DerivedPoint("a", m) in c.derived_ss
                and DerivedPoint("b", m + 1) in c.derived_ss
            )
            assert (alpha(m) in c.c0_ss) == want, (str(point), m)
            want = (
                DerivedPoint("M") in c.derived_ss
                and DerivedPoint("b", m) in c.derived_ss
                and DerivedPoint("a", m) in c.derived_ss
            )
            assert (beta(m) in c.c0_ss) == want, (str(point), m)
        assert ("A" in c.c1_ss) == (c.derived_ss.a == IndexSet.all())
        assert ("B" in c.c1_ss) == (c.derived_ss.b == IndexSet.all())
        assert ("A" in c.c1_s) == (c.derived_ss.a.cardinality() == INF)
        assert ("B" in c.c1_s) == (c.derived_ss.b.cardinality() == INF)


def test_zeta_equivariance_on_fuzzed_points():
    for point in FUZZ_POINTS[:300] + [fx.point() for fx in FIXTURES]:
        image = zeta_point(point)
        left = classify(image)
        right = classify(point).zeta_image()
        assert left.sets_equal(right), str(point)


def test_zeta_equivariance_of_semistable_phases():
    objs = [M, MP, a(0), a(2), b(-1), b(1)]
    for point in FUZZ_POINTS[:60]:
        image = zeta_point(point)
        for obj in objs:
            assert semistable(image, zeta(obj)) == semistable(point, obj)


def test_in_t_charts_at_most_one_stable_curve():
    for point in FUZZ_POINTS:
        if point.chart.family in (A_M_B, "b_Mp_a"):
            continue
        assert len(classify(point).c1_ss) <= 1


def test_transfer_consistency_alternate_indices():
    # a licensed transfer is valid for every small enough index; the answer
    # must not depend on which witness the search found
    for name, family, license in [("amb_a21", A_A_M, "amb_a21"),
                                  ("amb_a22", B_B_MP, "amb_a22"),
                                  ("amb_e", B_B_MP, "amb_e")]:
        point = fixture_by_name(name).point()
        base = classify(point)
        j = find_transfer_index(point, family)
        for offset in (0, 1, 3, 10):
            target = reexpress(point, ChartId(family, j - offset), license)
            assert classify(target).sets_equal(base), (name, offset)


def test_transfer_consistency_on_fuzzed_middle_points():
    checked = 0
    for point in FUZZ_POINTS:
        if point.chart.family != A_M_B:
            continue
        an = analyze(point)
        if an.via != "reexpress":
            continue
        target = an.inner.point
        assert classify(target).sets_equal(classify(point)), str(point)
        checked += 1
    assert checked >= 5


def test_presentation_independence_of_row7():
    # the same stability condition presented in (b^j, b^{j+1}, M') for any
    # admissible j must classify identically
    point = fixture_by_name("bbmp_r7").point()
    base = classify(point)
    t = arg_in_window(point.central.of_class(DELTA),
                      phase_add_int(point.phases[0], -1), OPEN_OPEN)
    for j in (1, -1, -4):
        zb = point.central.of(b(j))
        zb1 = point.central.of(b(j + 1))
        pj = arg_in_window(zb, t, OPEN_OPEN)
        pj1 = arg_in_window(zb1, t, OPEN_OPEN)
        other = make_point(ChartId(B_B_MP, j), (zb, zb1, point.charges[2]),
                           (pj.sheet, pj1.sheet, point.sheets[2]))
        assert classify(other).sets_equal(base), j


def test_search_budget_is_respected():
    point = make_point(ChartId(B_B_MP, 0), (gr(-1, 1), gr(-2, 1), gr(-300, 1)),
                       (0, 0, 0))
    with pytest.raises(SearchBudgetExceeded):
        classify(point, SearchBudget(max_index_distance=16))


def test_witnesses_record_row4_footnote():
    got = classify(fixture_by_name("bbmp_r4").point())
    assert "row4_footnote" in got.witnesses


def test_witnesses_expose_t_q_N_u():
    got = classify(fixture_by_name("bbmp_r7").point())
    w = got.witnesses
    assert w["N"] == 2 and w["u"] == 4
    assert abs(w["t"].approx()) < 1e-12
    assert "q" in w and "v" in w
