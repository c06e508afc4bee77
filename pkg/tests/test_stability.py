import random

import pytest

from ncstab.angles import OutsideWindow, phase_add_int, phase_from_charge
from ncstab.gaussian import gr
from ncstab.quiver import DELTA, M, MP, a, b
from ncstab.stability import (
    CHART_INEQUALITIES,
    A_A_M,
    A_M_B,
    B_B_MP,
    ChartId,
    ChartViolation,
    FAMILIES,
    LICENSE_AMB_A1,
    LICENSE_AMB_B,
    LICENSE_IDENTITY,
    M_B_B,
    ZETA_CHART_MAP,
    chart_catalog,
    chart_objects,
    chart_t,
    make_point,
    parse_point,
    point_json,
    reexpress,
    zeta_point,
)
from ncstab.quiver import zeta

from fuzz import random_point, sample_points

ROW7 = (ChartId(B_B_MP, 0), (gr(-1, 1), gr(-2, 1), gr(-4, 1)), (0, 0, 0))


def test_make_point_bbmp_example():
    point = make_point(*ROW7)
    approx = [p.approx() for p in point.phases]
    assert abs(approx[0] - 0.75) < 1e-9
    assert 0.85 < approx[1] < 0.86
    assert 0.92 < approx[2] < 0.93


def test_make_point_amb_equal_phases_allowed():
    point = make_point(ChartId(A_M_B, 0), (gr(0, 1), gr(0, 2), gr(0, -3)),
                       (0, 0, 1))
    assert point.phases[0] == point.phases[1]
    assert abs(point.phases[2].approx() - 1.5) < 1e-12


def test_make_point_chart_violation():
    with pytest.raises(ChartViolation) as err:
        make_point(ChartId(B_B_MP, 0), (gr(-1, 1), gr(-1, 1), gr(-4, 1)),
                   (0, 0, 0))
    assert any("b:0" in f and "b:1" in f for f in err.value.failures)


def test_charge_of_recurrences():
    point = make_point(*ROW7)
    assert point.charge_of(b(3)) == gr(-4, 1)
    assert point.charge_of(M) == gr(5, -1)
    assert point.charge_of(a(3, shift=1)) == -point.charge_of(a(3))
    z = point.central
    for m in range(-5, 5):
        assert z.of(b(m)) == z.of_class(DELTA) + z.of(b(m + 1))
        assert z.of(a(m)) == z.of_class(DELTA) + z.of(a(m + 1))
        assert z.of(a(m)) == z.of(MP) + z.of(b(m + 1))
        assert z.of(b(m)) == z.of(M) + z.of(a(m))


def test_chart_t_examples():
    point = make_point(*ROW7)
    t = chart_t(point)
    assert t.dir == gr(-1, 0) and t.sheet == -1   # value 0

    point = make_point(ChartId(B_B_MP, 0), (gr(1, 2), gr(-1, 2), gr(-4, 1)),
                       (0, 0, 0))
    t = chart_t(point)
    assert abs(t.approx()) < 1e-12

    # on the degenerate locus phi(b^1) = phi(b^0) + 1 the window is empty
    point = make_point(ChartId(B_B_MP, 0), (gr(1, 1), gr(-2, -2), gr(-3, -3)),
                       (0, 1, 1))
    with pytest.raises(OutsideWindow):
        chart_t(point)


def test_solver_matches_simples():
    # central charge solved from chart values must evaluate back exactly
    rng = random.Random(5)
    for family in FAMILIES:
        for _ in range(20):
            point = random_point(rng, family, rng.randint(-2, 2))
            if point is None:
                continue
            for obj, charge in zip(point.chart.objects(), point.charges):
                assert point.central.of(obj) == charge


def test_reexpress_identity():
    point = make_point(*ROW7)
    assert reexpress(point, point.chart, LICENSE_IDENTITY) is point


def test_reexpress_amb_case_b():
    point = make_point(ChartId(A_M_B, 0), (gr(1, 2), gr(2, 1), gr(-2, -2)),
                       (0, 0, 1))
    target = reexpress(point, ChartId(M_B_B, 0), LICENSE_AMB_B)
    assert target.chart == ChartId(M_B_B, 0)
    assert target.charges[1] == point.charge_of(b(0))
    # same stability condition: the central charges agree on all of K_0
    assert target.central == point.central
    assert target.phases[0] == point.phases[1]


def test_reexpress_amb_case_a1():
    point = make_point(ChartId(A_M_B, 0), (gr(1, 1), gr(0, 1), gr(-1, 1)),
                       (0, 0, 0))
    target = reexpress(point, ChartId(A_A_M, 0), LICENSE_AMB_A1)
    assert target.central == point.central
    assert target.charges[1] == gr(-1, 0)
    assert abs(target.phases[1].approx() - 1.0) < 1e-12


def test_zeta_point_chart_map():
    point = make_point(ChartId(A_A_M, 0), (gr(1, 1), gr(-2, -2), gr(-3, -3)),
                       (0, 1, 1))
    image = zeta_point(point)
    assert image.chart == ChartId(B_B_MP, 0)
    assert image.charges == point.charges and image.sheets == point.sheets

    point = make_point(*ROW7)
    image = zeta_point(point)
    assert image.chart == ChartId(A_A_M, -1)


def test_zeta_point_charge_transport():
    # Z_{zeta.sigma}(zeta X) = Z_sigma(X) for every catalog object
    rng = random.Random(11)
    for family in FAMILIES:
        point = random_point(rng, family, 1)
        if point is None:
            continue
        image = zeta_point(point)
        for obj in [M, MP] + [x for m in (-2, 0, 3) for x in (a(m), b(m))]:
            assert image.central.of(zeta(obj)) == point.central.of(obj)


def test_zeta_image_always_validates():
    for point in sample_points(seed=23, per_family=40):
        image = zeta_point(point)       # make_point inside revalidates
        assert image.chart.family == ZETA_CHART_MAP[point.chart.family][0]


def test_fuzzed_acceptance_iff_inequalities():
    # acceptance of make_point must coincide with direct inequality checks
    rng = random.Random(99)
    accepted = rejected = 0
    for _ in range(1500):
        family = rng.choice(FAMILIES)
        charges = []
        sheets = []
        for _ in range(3):
            while True:
                z = gr(rng.randint(-5, 5), rng.randint(-5, 5))
                if not z.is_zero():
                    break
            charges.append(z)
            sheets.append(rng.randint(-1, 1))
        try:
            phases = [phase_from_charge(z, n) for z, n in zip(charges, sheets)]
        except Exception:
            phases = None
        expect_ok = phases is not None and all(
            phases[i] < phase_add_int(phases[j], k)
            for i, j, k in CHART_INEQUALITIES[family]
        )
        try:
            make_point(ChartId(family, 0), tuple(charges), tuple(sheets))
            got_ok = True
            accepted += 1
        except Exception:
            got_ok = False
            rejected += 1
        assert got_ok == expect_ok
    assert accepted > 20 and rejected > 20


def test_point_json_roundtrip():
    point = make_point(*ROW7)
    spec = point_json(point)
    parsed, exact = parse_point(spec)
    assert exact and parsed == point


def test_parse_point_polar_marks_inexact():
    spec = {
        "chart": {"family": "b_b_Mp", "index": 0},
        "charges": [{"r": "1", "phi": "0.75"},
                    {"r": "1", "phi": "0.85"},
                    {"r": "1", "phi": "0.92"}],
        "sheets": [0, 0, 0],
    }
    point, exact = parse_point(spec)
    assert not exact
    assert point.chart.family == "b_b_Mp"


def test_chart_catalog_lists_eight_families():
    catalog = chart_catalog()
    assert len(catalog) == 8
    assert {entry["family"] for entry in catalog} == set(FAMILIES)
    for entry in catalog:
        assert len(entry["inequalities"]) == 3


def test_chart_objects_patterns():
    assert [str(o) for o in chart_objects(A_M_B, 2)] == ["a:2", "M", "b:3"]
    assert [str(o) for o in chart_objects(B_B_MP, -1)] == ["b:-1", "b:0", "M'"]
