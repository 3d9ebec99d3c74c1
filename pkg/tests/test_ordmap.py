from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from simplicial import ordmap
from simplicial.errors import IndexOutOfRange, SizeMismatch, ValidationError
from simplicial.ordmap import OrdEndoN, OrdMap

WORKED = ordmap.endo([0, 0, 0, 1, 1, 7, 9, 9, 9, 9, 9, 10, 11, 13, 14])


@st.composite
def maps(draw, n=None, m=None):
    n = draw(st.integers(0, 6)) if n is None else n
    m = draw(st.integers(1, 6)) if m is None else m
    values = sorted(draw(st.lists(st.integers(0, m - 1), min_size=n, max_size=n)))
    return OrdMap(n, m, tuple(values))


def test_compose_examples():
    assert ordmap.compose(ordmap.endo([0, 0]), ordmap.endo([1, 1])).values == (1, 1)
    f = OrdMap(2, 3, (0, 2))
    assert ordmap.compose(f, ordmap.identity(3)) == f
    assert ordmap.compose(OrdMap(2, 3, (0, 1)), OrdMap(3, 3, (0, 0, 2))) == OrdMap(2, 3, (0, 0))


def test_compose_size_mismatch_names_sizes():
    with pytest.raises(SizeMismatch, match="3 != 2"):
        ordmap.compose(OrdMap(1, 3, (0,)), ordmap.identity(2))


def test_identity_and_bad_maps():
    assert ordmap.identity(0).values == ()
    assert ordmap.identity(3).values == (0, 1, 2)
    with pytest.raises(ValidationError):
        OrdMap(2, 2, (1, 0))
    with pytest.raises(ValidationError):
        OrdMap(1, 1, (1,))


def test_monoidal_sum():
    assert ordmap.monoidal_sum(ordmap.endo([0, 0]), ordmap.endo([0])) == ordmap.endo([0, 0, 2])
    assert ordmap.monoidal_sum(OrdMap(0, 2, ()), ordmap.endo([0])) == OrdMap(1, 3, (2,))
    f = OrdMap(2, 3, (0, 2))
    assert ordmap.monoidal_sum(f, ordmap.identity(0)) == f
    assert ordmap.monoidal_sum(ordmap.identity(0), f) == f


def test_generators():
    assert ordmap.generator(2, "p", 0).values == (0, 0)
    assert ordmap.generator(2, "q", 0).values == (1, 1)
    assert ordmap.generator(4, "p", 1).values == (0, 1, 1, 3)
    with pytest.raises(IndexOutOfRange, match="0..1"):
        ordmap.generator(3, "p", 2)


def test_classify_worked_example():
    pc = ordmap.classify_points(WORKED)
    assert pc.bottom_p == {2, 3, 4, 12}
    assert pc.bottom_q == {7, 9}
    assert pc.top_p == {0, 1, 3, 9}
    assert pc.top_q == {5, 6}


def test_classify_eight_point_example():
    pc = ordmap.classify_points(ordmap.endo([2, 2, 2, 2, 2, 4, 5, 5]))
    assert pc.bottom_p == {3, 6, 7}
    assert pc.top_p == {2, 3, 6}


def test_classify_identity_and_partition():
    pc = ordmap.classify_points(ordmap.identity(5))
    assert not (pc.bottom_p or pc.top_p or pc.bottom_q or pc.top_q)
    for f in ordmap.enumerate_endos(4):
        pc = ordmap.classify_points(f)
        parts = [pc.empty_points, pc.single_points, pc.multiple_points]
        assert set().union(*parts) == set(range(4))
        assert sum(map(len, parts)) == 4


def test_classify_requires_endo():
    with pytest.raises(SizeMismatch):
        ordmap.classify_points(OrdMap(2, 3, (0, 1)))


def test_complexity_nu():
    assert ordmap.complexity_nu(ordmap.identity(4)) == (0, 0)
    assert ordmap.complexity_nu(ordmap.endo([0, 0])) == (1, 1)
    assert ordmap.complexity_nu(ordmap.endo([1, 1])) == (1, 1)
    for f in ordmap.enumerate_endos(4):
        assert (ordmap.complexity_nu(f) == (0, 0)) == (f == ordmap.identity(4))


def test_decompose_examples():
    assert ordmap.decompose(ordmap.endo([0, 0])) == [("p", 0)]
    assert ordmap.decompose(ordmap.endo([1, 1])) == [("q", 0)]
    assert ordmap.decompose(ordmap.identity(3)) == []


@pytest.mark.parametrize("n", range(7))
def test_decompose_recomposes(n):
    for f in ordmap.enumerate_endos(n):
        assert ordmap.recompose(n, ordmap.decompose(f)) == f


def test_enumerate():
    assert [f.values for f in ordmap.enumerate_endos(2)] == [(0, 0), (0, 1), (1, 1)]
    assert [len(ordmap.enumerate_endos(n)) for n in range(6)] == [1, 1, 3, 10, 35, 126]
    with pytest.raises(ValidationError):
        ordmap.enumerate_endos(11)


def test_associativity_exhaustive_small():
    endos = ordmap.enumerate_endos(3)
    for f, g, h in itertools.product(endos, repeat=3):
        assert ordmap.compose(ordmap.compose(f, g), h) == ordmap.compose(f, ordmap.compose(g, h))


@given(maps(n=4, m=4), maps(n=4, m=4), maps(n=4, m=5))
def test_associativity_random(f, g, h):
    assert ordmap.compose(ordmap.compose(f, g), h) == ordmap.compose(f, ordmap.compose(g, h))


@given(maps())
def test_json_round_trip(f):
    assert OrdMap.from_json(f.to_json()) == f


def test_block_maps_have_one_p_point():
    from simplicial import presentation as pr
    for n in range(2, 9):
        for i in range(n - 1):
            for j in range(i + 1):
                pc = ordmap.classify_points(pr.block_map(pr.P(i, j), n))
                assert (pc.bottom_p, pc.top_p) == ({i + 1}, {j})
                assert not pc.bottom_q
                qc = ordmap.classify_points(pr.block_map(pr.Q(i, j), n))
                assert not qc.bottom_p


# -- endomorphisms of N --------------------------------------------------------

def test_std_generators():
    s0 = ordmap.std_generator("sigma", 0)
    assert s0.head(5) == [0, 0, 1, 2, 3]
    assert s0.prefix == (0,)
    d0 = ordmap.std_generator("delta", 0)
    assert d0.prefix == () and d0.type == (0, 1)
    assert d0.head(3) == [1, 2, 3]
    for i in range(6):
        s = ordmap.std_generator("sigma", i)
        assert s.head(i + 3) == list(range(i + 1)) + [i, i + 1]
        ident = ordmap.endo_identity()
        assert ordmap.compose_endo(ordmap.std_generator("delta", i), s) == ident
        assert ordmap.compose_endo(ordmap.std_generator("delta", i + 1), s) == ident


def _word(*letters):
    result = ordmap.endo_identity()
    for kind, i in reversed(letters):
        result = ordmap.compose_endo(result, ordmap.std_generator(kind, i))
    return result


def test_sigma_delta_relations():
    S, D = "sigma", "delta"
    for i in range(7):
        for j in range(i, 7):
            assert _word((S, j), (S, i)) == _word((S, i), (S, j + 1))
            assert _word((D, i), (D, j)) == _word((D, j + 1), (D, i))
            assert _word((S, i), (D, j + 2)) == _word((D, j + 1), (S, i))
            assert _word((S, j + 1), (D, i)) == _word((D, i), (S, j))


def test_endo_canonical_type_and_json():
    f = OrdEndoN((0, 1, 2, 3), (4, 4))
    assert f == ordmap.endo_identity()
    g = OrdEndoN((1, 1), (2, 2))
    assert OrdEndoN.from_json(g.to_json()) == g
    assert g.head(4) == [1, 1, 2, 3]
    with pytest.raises(ValidationError):
        OrdEndoN((3,), (1, 2))
