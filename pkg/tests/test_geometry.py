from fractions import Fraction

import pytest

from arrangis import catalog
from arrangis.algebra import sign_re
from arrangis.geometry import (Arrangement, GeometryError, GenericityError, GenericityExhausted,
                               RealizationMismatch, certify, check_realizes, choose_projection, frame_for, intersect)


def test_ceva_points_match_the_listed_combinatorics():
    arr = catalog.ceva7()
    check_realizes(arr, catalog.ceva7_combinatorics())
    assert len(arr.combinatorics.points) == 9


def test_maclane_realizations():
    comb = catalog.maclane_combinatorics()
    for sign in (1, -1):
        check_realizes(catalog.maclane(sign), comb)
    check_realizes(catalog.maclane(1).conjugate(), comb)
    assert catalog.maclane(1).conjugate().lines == catalog.maclane(-1).lines
    plain = catalog.maclane_combinatorics(extended=False)
    check_realizes(catalog.maclane(1, extended=False), plain)
    assert len(plain.points) == 12


def test_l1_l2_meet_on_the_horizontal_direction():
    arr = catalog.maclane(1)
    p = intersect(arr.line("L1"), arr.line("L2"))
    assert [str(c) for c in p] == ["1", "0", "0"]


def test_realization_mismatch_is_reported():
    comb = catalog.ceva7_combinatorics()
    moved = Arrangement.from_rows({**{l.label: l.coeffs for l in catalog.ceva7().lines}, "L6": (1, -2, 0)})
    with pytest.raises(RealizationMismatch, match="L"):
        check_realizes(moved, comb)


def test_degenerate_input():
    with pytest.raises(GeometryError):
        Arrangement.from_rows({"A": (0, 0, 0)})
    with pytest.raises(GeometryError, match="coincide"):
        Arrangement.from_rows({"A": (1, 1, 0), "B": (2, 2, 0)})
    with pytest.raises(GeometryError, match="cyclotomic_order"):
        Arrangement.from_json({"cyclotomic_order": 0, "lines": []})


def test_json_round_trip():
    arr = catalog.maclane(1)
    assert Arrangement.from_json(arr.to_json()) == arr


@pytest.mark.parametrize("make", [catalog.ceva7, lambda: catalog.maclane(1), lambda: catalog.maclane(-1)])
def test_projection_certificate(make):
    arr = make()
    frame = choose_projection(arr, "L0", seed=0)
    certify(frame)
    assert frame.attempt < 16
    xs = [p.x for p in frame.points]
    assert all(sign_re(b - a) > 0 for a, b in zip(xs, xs[1:]))
    assert len(frame.lines) == len(arr.lines) - 1


def test_non_generic_frames_are_rejected():
    arr = catalog.maclane(1)
    with pytest.raises(GenericityError):
        frame_for(arr, "L0", ((1, 0), (0, 0), (0, 0)))       # L4 is vertical
    with pytest.raises(GenericityError, match="real part"):
        frame_for(arr, "L0", ((1, 0), (Fraction(1, 2), 0), (0, 0)))


def test_genericity_exhaustion():
    with pytest.raises(GenericityExhausted):
        choose_projection(catalog.maclane(1), "L0", seed=0, retries=0)
