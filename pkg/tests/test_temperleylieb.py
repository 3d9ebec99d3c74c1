from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from simplicial import frieze as fz
from simplicial import ordmap, stacking
from simplicial import presentation as pr
from simplicial import temperleylieb as tl
from simplicial.errors import IndexOutOfRange, SizeMismatch, ValidationError
from simplicial.temperleylieb import C, CupCapWord, TLDiagram, h


@st.composite
def diagrams(draw, n=None):
    n = draw(st.integers(1, 8)) if n is None else n
    rng = random.Random(draw(st.integers(0, 2**32 - 1)))
    return tl.random_diagram(rng, n, draw(st.integers(0, 2)))


def test_generators():
    d = tl.tl_generator(2, "h", 1)
    assert sorted(d.signed()) == [(-2, -1), (1, 2)]
    assert sorted(tl.tl_generator(3, "unit").signed()) == [(-3, 3), (-2, 2), (-1, 1)]
    c = tl.tl_generator(1, "c")
    assert c.signed() == [(-1, 1)] and c.circles == 1
    with pytest.raises(IndexOutOfRange):
        tl.tl_generator(3, "h", 3)


def test_compose_examples():
    hh = tl.tl_compose(tl.tl_generator(2, "h", 1), tl.tl_generator(2, "h", 1))
    assert hh.pairs == tl.tl_generator(2, "h", 1).pairs and hh.circles == 1
    assert tl.eval_word([h(1), h(2), h(1)], 3) == tl.tl_generator(3, "h", 1)
    d = tl.tl_generator(4, "h", 2)
    assert tl.tl_compose(tl.tl_unit(4), d) == d == tl.tl_compose(d, tl.tl_unit(4))
    with pytest.raises(SizeMismatch):
        tl.tl_compose(tl.tl_unit(2), tl.tl_unit(3))


def test_eval_modes():
    assert tl.eval_word([h(1), h(1)], 2).circles == 1
    j = tl.eval_word([h(1), h(1)], 2, "J")
    assert j == tl.tl_generator(2, "h", 1)
    assert tl.eval_word([], 3) == tl.tl_unit(3)
    with pytest.raises(ValidationError):
        tl.eval_word([], 3, "L")


def test_planarity_is_checked():
    with pytest.raises(ValidationError):
        TLDiagram.from_signed(2, [(-1, 2), (-2, 1)])
    with pytest.raises(ValidationError):
        TLDiagram(2, ((0, 1),))


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 8).flatmap(lambda n: st.tuples(diagrams(n), diagrams(n), diagrams(n))))
def test_compose_is_associative_and_planar(triple):
    a, b, c = triple
    left = tl.tl_compose(tl.tl_compose(a, b), c)
    right = tl.tl_compose(a, tl.tl_compose(b, c))
    assert left == right
    assert stacking.is_planar(left.signed(), left.n, left.n)
    assert tl.tl_compose(tl.tl_unit(a.n), a) == a


@given(diagrams())
def test_json_round_trip(d):
    assert TLDiagram.from_json(d.to_json()) == d


def test_embedding_examples():
    assert tl.embed_On_term(pr.Gen("p", 0), 2) == [h(3), h(2)]
    assert tl.embed_On_term(pr.Gen("q", 0), 2) == [h(1), h(2)]
    pq = tl.embed_On_term(pr.parse_term("p0.q0", 2), 2)
    assert pq == [h(3), h(2), h(1), h(2)]
    d = tl.eval_word(pq, 4)
    assert d == tl.eval_word([h(3), h(2)], 4) and d.circles == 0
    assert tl.embed_On_term(pr.Unit(), 3) == []


def test_frieze_to_tl():
    assert tl.frieze_to_tl(fz.unit(), 2) == tl.tl_unit(4)
    for letter in "pq":
        g = pr.Gen(letter, 0)
        d = fz.from_endo(ordmap.OrdEndoN.extend(pr.sigma(g, 2)))
        assert tl.frieze_to_tl(d, 2) == tl.eval_word(tl.embed_On_term(g, 2), 4)
    with pytest.raises(ValidationError):
        tl.frieze_to_tl(fz.Frieze((), ((-2, -1),), (0, 2)), 1)


@pytest.mark.parametrize("n", range(2, 5))
def test_embedding_square_and_injectivity(n):
    seen = set()
    for nf in pr.enumerate_normal_forms(n):
        t = pr.blocks_term(nf)
        d = tl.eval_word(tl.embed_On_term(t, n), 2 * n)
        assert d.circles == 0
        assert d == tl.endo_to_tl(pr.sigma(t, n))
        seen.add(d)
    assert len(seen) == len(ordmap.enumerate_endos(n))


@pytest.mark.parametrize("n", range(2, 7))
@pytest.mark.parametrize("mode", tl.MODES)
def test_verify_relations(n, mode):
    report = tl.verify_relations(n, mode)
    assert report.ok, report.to_text()
    strands = 2 * n
    assert report.counts["h2"] == [2 * (strands - 2)] * 2
    assert report.counts["hc1"][1] == strands - 1


def test_verify_report_is_deterministic():
    assert tl.verify_relations(3).to_text() == tl.verify_relations(3).to_text()
    with pytest.raises(ValidationError):
        tl.verify_relations(9)


def test_cup_cap_generators():
    assert tl.cup(2).pairs == ((-1, 1), (2, 3)) and tl.cup(2).type == (3, 1)
    assert tl.cap(1).pairs == ((-2, -1),) and tl.cap(1).type == (0, 2)
    sigma0 = fz.from_endo(ordmap.std_generator("sigma", 0))
    assert tl.eval_cupcap(CupCapWord((("cup", 2),))) == tl.GeneralDiagram.from_frieze(sigma0)
    for k in range(1, 9):
        word = CupCapWord((("cup", k), ("cap", k + 1)))
        assert tl.eval_cupcap(word) == tl.general_identity()
        loop = tl.eval_cupcap(CupCapWord((("cup", k), ("cap", k))))
        assert loop.pairs == () and loop.circles == 1
        erased = tl.eval_cupcap(CupCapWord((("cup", k), ("cap", k)), "J"))
        assert erased == tl.general_identity()


@pytest.mark.parametrize("mode", tl.MODES)
def test_cup_cap_relations(mode):
    for family, lhs, rhs in tl.cupcap_relation_instances(8, mode):
        assert tl.eval_cupcap(lhs) == tl.eval_cupcap(rhs), (family, lhs, rhs)


def test_sigma_delta_embedding():
    report = tl.verify_omega(6)
    assert report.ok, report.to_text()
    families = {name.split(":")[1] for name in report.counts}
    assert families == {"ss", "dd", "sd1", "sd2", "sd3"}


def test_tl_word_parsing():
    assert tl.parse_tl_word("h3.h2.c") == [h(3), h(2), C]
    assert tl.format_tl_word([h(1), C]) == "h1.c"
    assert tl.format_tl_word([]) == "1"
    from simplicial.errors import ParseError
    with pytest.raises(ParseError):
        tl.parse_tl_word("h3.x")
