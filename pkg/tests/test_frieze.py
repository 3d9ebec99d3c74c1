from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from simplicial import frieze as fz
from simplicial import ordmap
from simplicial.errors import ValidationError
from simplicial.frieze import Frieze, FriezeExhaustion, FriezeOverlap, FriezeParity
from simplicial.ordmap import OrdEndoN

D1 = Frieze(((2, 3), (4, 5), (10, 11)), ((-2, -1), (-8, -7)), (11, 9))
D2 = Frieze(((2, 3), (4, 5)), ((-4, -3), (-6, -5), (-8, -7)), (8, 10))


@st.composite
def endos(draw, max_len=12):
    n = draw(st.integers(0, max_len))
    values = sorted(draw(st.lists(st.integers(0, max_len), min_size=n, max_size=n)))
    m = max(values, default=0) + draw(st.integers(0, 3))
    return OrdEndoN(tuple(values), (n, m))


def test_d1_transversals_and_type():
    assert D1.transversals() == ((-3, 1), (-4, 6), (-5, 7), (-6, 8), (-9, 9))
    assert D1.type == (11, 9)
    assert fz.infer_type(D1) == (11, 9)


def test_unit():
    u = fz.unit()
    assert u.type == (0, 0)
    assert u.segments(3) == [(-1, 1), (-2, 2), (-3, 3)]
    assert fz.validate((), (), (4, 4)) == u
    assert fz.phi(u) == ordmap.endo_identity()


def test_validation_errors_name_points():
    with pytest.raises(FriezeParity, match="3"):
        fz.validate([(3, 4)], [], (4, 4))
    with pytest.raises(FriezeOverlap):
        fz.validate([(2, 3), (2, 3)], [], (3, 3))
    with pytest.raises(FriezeOverlap, match="5"):
        fz.validate([(4, 5)], [], (4, 4))
    with pytest.raises(FriezeExhaustion, match="point"):
        fz.validate([(2, 3)], [], (3, 3))
    with pytest.raises(ValidationError):
        Frieze.from_json({"cups": []})


def test_worked_composite():
    both = fz.compose(D1, D2)
    assert both.cups == ((2, 3), (4, 5), (6, 7), (10, 11))
    assert both.caps == ((-4, -3), (-6, -5), (-8, -7), (-10, -9))
    assert both.transversals() == ((-1, 1), (-2, 8), (-11, 9))
    assert both.type == (11, 11)
    assert fz.phi(both) == ordmap.compose_endo(fz.phi(D1), fz.phi(D2))


def test_phi_of_d1():
    f = fz.phi(D1)
    assert f.head(6) == [1, 1, 1, 2, 4, 4]
    assert f.head(9)[6:] == [5, 6, 7]
    assert fz.from_endo(f) == D1


def test_from_endo_examples():
    assert fz.from_endo(ordmap.endo_identity()) == fz.unit()
    d = fz.from_endo(OrdEndoN((1, 1), (2, 2)))
    assert d.caps == ((-2, -1),) and d.cups == ((2, 3),)
    assert d.transversals() == ((-3, 1),)
    assert fz.phi(fz.from_endo(OrdEndoN((0, 0), (2, 2)))) == OrdEndoN((0, 0), (2, 2))


def test_transversal_pairs_of_d1():
    pairs = fz.transversal_pairs(D1, 11)
    assert pairs[0].odd == (-3, 1) and pairs[0].even == (-4, 6)
    assert pairs[0].assigns == 1 and list(pairs[0].covers) == [0, 1, 2]


@settings(max_examples=200, deadline=None)
@given(endos())
def test_round_trips(f):
    d = fz.from_endo(f)
    assert fz.phi(d) == f
    assert fz.from_endo(fz.phi(d)) == d
    assert Frieze.from_json(d.to_json()) == d


@settings(max_examples=300, deadline=None)
@given(endos(), endos())
def test_phi_is_a_homomorphism(f, g):
    d1, d2 = fz.from_endo(f), fz.from_endo(g)
    assert fz.phi(fz.compose(d1, d2)) == ordmap.compose_endo(f, g)
    assert fz.compose(d1, d2) == fz.from_endo(ordmap.compose_endo(f, g))


@settings(max_examples=100, deadline=None)
@given(endos(6), endos(6), endos(6))
def test_monoid_laws(f, g, h):
    a, b, c = map(fz.from_endo, (f, g, h))
    assert fz.compose(fz.compose(a, b), c) == fz.compose(a, fz.compose(b, c))
    assert fz.compose(a, fz.unit()) == a == fz.compose(fz.unit(), a)


def test_typing_of_composites():
    for f in ordmap.enumerate_endos(3):
        for g in ordmap.enumerate_endos(3):
            d1 = fz.from_endo(OrdEndoN.extend(f))
            d2 = fz.from_endo(OrdEndoN.extend(g))
            assert d1.has_type(6, 6) and d2.has_type(6, 6)
            assert fz.compose(d1, d2).has_type(6, 6)


def test_partner():
    assert D1.partner(1) == -3 and D1.partner(-3) == 1
    assert D1.partner(12) == -10
    assert D1.partner(-2) == -1


def test_render_counts():
    def kinds(d, w):
        items = fz.render_model(d, w)
        return [sum(1 for x in items if x.kind == k) for k in ("cup", "cap", "line")]

    assert kinds(fz.unit(), 3) == [0, 0, 3]
    assert kinds(Frieze((), ((-2, -1),), (0, 2)), 4) == [0, 1, 2]
    assert kinds(D1, 12) == [3, 2, 6]
    assert kinds(D1, 13) == [3, 2, 7]


def test_render_anchors_and_window_guard():
    items = fz.render_model(fz.unit(), 1)
    assert items == [fz.Drawable("line", (20, 20), (20, 60))]
    with pytest.raises(ValidationError, match="11"):
        fz.render_model(D1, 5)
