import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ncstab.angles import (
    CLOSED_OPEN,
    OPEN_CLOSED,
    OPEN_OPEN,
    OutsideWindow,
    Phase,
    SheetMismatch,
    arg_in_window,
    canonical_direction,
    charge_from_polar,
    halfplane_side,
    phase_add_int,
    phase_compare,
    phase_from_charge,
)
from ncstab.gaussian import gr


def test_phase_from_charge_examples():
    p = phase_from_charge(gr(0, 1), 0)
    assert p.dir == gr(0, 1) and p.sheet == 0
    assert abs(p.approx() - 0.5) < 1e-12

    p = phase_from_charge(gr(-1, -1), 1)
    assert p.dir == gr(1, 1) and p.sheet == 1
    assert abs(p.approx() - 1.25) < 1e-12

    with pytest.raises(SheetMismatch):
        phase_from_charge(gr(1, 1), 1)
    with pytest.raises(SheetMismatch):
        phase_from_charge(gr(0, 0), 0)
    # positive real axis is excluded from every even sheet
    with pytest.raises(SheetMismatch):
        phase_from_charge(gr(2, 0), 0)
    assert phase_from_charge(gr(-2, 0), 0).approx() == 1.0


def test_phase_compare_examples():
    p = phase_from_charge(gr(1, 1), 0)
    q = phase_from_charge(gr(1, 2), 0)
    assert phase_compare(p, q) == -1
    assert phase_compare(phase_from_charge(gr(2, 2), 0), p) == 0
    assert phase_compare(phase_from_charge(gr(-1, -5), 1), q) == 1


def test_scaling_invariance():
    assert phase_from_charge(gr(1, 2), 0) == phase_from_charge(
        gr(Fraction(3, 7), Fraction(6, 7)), 0
    )


def test_phase_add_int_roundtrip():
    p = phase_from_charge(gr(0, 1), 0)
    assert phase_add_int(p, 1).approx() == 1.5
    assert phase_add_int(phase_add_int(p, 5), -5) == p


def test_arg_in_window_examples():
    a = phase_from_charge(gr(1, 1), 0)          # value 1/4
    r = arg_in_window(gr(0, 1), a, OPEN_OPEN)
    assert abs(r.approx() - 0.5) < 1e-12

    r = arg_in_window(gr(-1, -1), a, OPEN_CLOSED)
    assert abs(r.approx() - 1.25) < 1e-12

    with pytest.raises(OutsideWindow):
        arg_in_window(gr(-1, -1), a, OPEN_OPEN)
    with pytest.raises(OutsideWindow):
        arg_in_window(gr(2, 2), a, OPEN_OPEN)    # lands on the start
    assert arg_in_window(gr(2, 2), a, CLOSED_OPEN) == a
    with pytest.raises(OutsideWindow):
        arg_in_window(gr(1, -1), a, OPEN_OPEN)   # below the line


def test_halfplane_side():
    assert halfplane_side(gr(0, 1), gr(1, 0)) == "Plus"
    assert halfplane_side(gr(-2, 0), gr(1, 0)) == "OnLine"
    assert halfplane_side(gr(1, -1), gr(1, 1)) == "Minus"


def _valid_dir(re, im):
    return im > 0 or (im == 0 and re < 0)


@st.composite
def phases(draw):
    im = draw(st.integers(0, 9))
    re = draw(st.integers(-9, -1) if im == 0 else st.integers(-9, 9))
    sheet = draw(st.integers(-3, 3))
    return Phase(canonical_direction(gr(re, im)), sheet)


@given(phases(), phases())
def test_order_antisymmetric(p, q):
    assert phase_compare(p, q) == -phase_compare(q, p)
    if phase_compare(p, q) == 0:
        assert p == q


@settings(max_examples=300)
@given(phases(), phases(), phases())
def test_order_transitive(p, q, r):
    if p <= q and q <= r:
        assert p <= r
    ordered = sorted([p, q, r])
    assert ordered[0] <= ordered[1] <= ordered[2]


@given(phases())
def test_order_agrees_with_float_value(p):
    q = phase_add_int(p, 1)
    assert p < q


@settings(max_examples=300)
@given(phases(), st.integers(-9, 9), st.integers(-9, 9))
def test_window_result_is_inside(a, re, im):
    if re == 0 and im == 0:
        return
    w = gr(re, im)
    try:
        r = arg_in_window(w, a, OPEN_CLOSED)
    except OutsideWindow:
        return
    assert a < r
    assert r <= phase_add_int(a, 1)
    # direction parallel to w
    from ncstab.gaussian import cross, dot

    assert cross(r.exp_direction(), w) == 0 and dot(r.exp_direction(), w) > 0


def test_window_strictly_above_anchor_for_plus_halfplane():
    rng = random.Random(0)
    for _ in range(200):
        re, im = rng.randint(-9, 9), rng.randint(0, 9)
        if not _valid_dir(re, im):
            continue
        a = Phase(canonical_direction(gr(re, im)), rng.randint(-2, 2))
        wre, wim = rng.randint(-9, 9), rng.randint(-9, 9)
        w = gr(wre, wim)
        if w.is_zero():
            continue
        if halfplane_side(w, a.exp_direction()) != "Plus":
            continue
        r = arg_in_window(w, a, OPEN_OPEN)
        assert a < r < phase_add_int(a, 1)


def test_polar_converter_is_exact_nearby():
    z, sheet = charge_from_polar("2", "0.25", max_denominator=64)
    assert sheet == 0
    p = phase_from_charge(z, sheet)
    assert abs(p.approx() - 0.25) < 0.02

    z, sheet = charge_from_polar("1", "1.5")
    assert sheet == 1 and z == gr(0, -1)

    z, sheet = charge_from_polar("3", "-1.0")
    assert sheet == -2 and z == gr(-3, 0)
