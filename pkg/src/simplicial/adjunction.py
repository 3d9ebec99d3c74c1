"""The free adjunction generated by one object of B and none of A.

Objects of B are (GF)^n Ø and objects of A are F(GF)^n Ø; both are stored
as ``AdjObject(side, level)``.  Arrow terms are built from identities,
composition, F, G and the two transposition operators: ``PhiA f`` (counit
side, FGa1 -> a2 for f: a1 -> a2) and ``GammaC g`` (unit side,
b1 -> GFb2 for g: b1 -> b2).

The functor E sends terms to friezes indexed by (2n+1 or 2n) and S/D
pass between even-indexed friezes and order-preserving maps.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple, Union

from . import frieze as fz
from . import ordmap
from .errors import IllTyped, IndexOutOfRange, ParseError, ValidationError
from .frieze import Frieze
from .ordmap import OrdEndoN, OrdMap


class AdjObject(NamedTuple):
    side: str  # "A" or "B"
    level: int

    @property
    def index(self) -> int:
        return 2 * self.level + (1 if self.side == "A" else 0)

    def __str__(self):
        core = "GF" * self.level + "O"
        return "F" + core if self.side == "A" else core


def A(level: int) -> AdjObject:
    return AdjObject("A", level)


def B(level: int) -> AdjObject:
    return AdjObject("B", level)


EMPTY = B(0)


def _typed(node, src: AdjObject, dst: AdjObject):
    object.__setattr__(node, "src", src)
    object.__setattr__(node, "dst", dst)


def _need(t, side: str, what: str):
    if t.src.side != side:
        raise IllTyped(f"{what} needs a term of {side}, got one of {t.src.side}")


@dataclass(frozen=True)
class Id:
    obj: AdjObject
    src: AdjObject = field(init=False, compare=False, repr=False)
    dst: AdjObject = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.obj.side not in ("A", "B") or self.obj.level < 0:
            raise IllTyped(f"bad object {self.obj}")
        _typed(self, self.obj, self.obj)


@dataclass(frozen=True)
class Comp:
    """``outer ∘ inner``; inner runs first."""

    outer: "AdjTerm"
    inner: "AdjTerm"
    src: AdjObject = field(init=False, compare=False, repr=False)
    dst: AdjObject = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.inner.dst != self.outer.src:
            raise IllTyped(f"cannot compose {self.outer.src}->{self.outer.dst} "
                           f"after {self.inner.src}->{self.inner.dst}")
        _typed(self, self.inner.src, self.outer.dst)


@dataclass(frozen=True)
class F:
    body: "AdjTerm"
    src: AdjObject = field(init=False, compare=False, repr=False)
    dst: AdjObject = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        _need(self.body, "B", "F")
        _typed(self, A(self.body.src.level), A(self.body.dst.level))


@dataclass(frozen=True)
class G:
    body: "AdjTerm"
    src: AdjObject = field(init=False, compare=False, repr=False)
    dst: AdjObject = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        _need(self.body, "A", "G")
        _typed(self, B(self.body.src.level + 1), B(self.body.dst.level + 1))


@dataclass(frozen=True)
class PhiA:
    body: "AdjTerm"
    src: AdjObject = field(init=False, compare=False, repr=False)
    dst: AdjObject = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        _need(self.body, "A", "PhiA")
        _typed(self, A(self.body.src.level + 1), self.body.dst)


@dataclass(frozen=True)
class GammaC:
    body: "AdjTerm"
    src: AdjObject = field(init=False, compare=False, repr=False)
    dst: AdjObject = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        _need(self.body, "B", "GammaC")
        _typed(self, self.body.src, B(self.body.dst.level + 1))


AdjTerm = Union[Id, Comp, F, G, PhiA, GammaC]
UNARY = (F, G, PhiA, GammaC)


def phi(a: AdjObject) -> AdjTerm:
    """The counit at a, i.e. PhiA applied to the identity of a."""
    return PhiA(Id(a))


def gamma(b: AdjObject) -> AdjTerm:
    """The unit at b, i.e. GammaC applied to the identity of b."""
    return GammaC(Id(b))


def length(t: AdjTerm) -> int:
    if isinstance(t, Id):
        return 1
    if isinstance(t, Comp):
        return 1 + length(t.outer) + length(t.inner)
    return 1 + length(t.body)


def _composition_lengths(t: AdjTerm) -> int:
    if isinstance(t, Id):
        return 0
    if isinstance(t, Comp):
        return length(t) + _composition_lengths(t.outer) + _composition_lengths(t.inner)
    return _composition_lengths(t.body)


def composition_degree(t: AdjTerm) -> int:
    """Lengths of all composition subterms plus the length of the whole term."""
    return _composition_lengths(t) + length(t)


def composition_free(t: AdjTerm) -> bool:
    if isinstance(t, Comp):
        return False
    if isinstance(t, Id):
        return True
    return composition_free(t.body)


# -- composition elimination ---------------------------------------------------

def _find_identity_under_functor(t: AdjTerm) -> AdjTerm | None:
    """Rewrite the first F(1) or G(1) found, outermost first."""
    if isinstance(t, Id):
        return None
    if isinstance(t, (F, G)) and isinstance(t.body, Id):
        return Id(t.src)
    if isinstance(t, Comp):
        found = _find_identity_under_functor(t.outer)
        if found is not None:
            return Comp(found, t.inner)
        found = _find_identity_under_functor(t.inner)
        return None if found is None else Comp(t.outer, found)
    found = _find_identity_under_functor(t.body)
    return None if found is None else type(t)(found)


def _reduce_here(t: Comp) -> tuple[AdjTerm, str]:
    g, f = t.outer, t.inner
    if isinstance(f, Id):
        return g, "cat1"
    if isinstance(g, Id):
        return f, "cat1"
    if t.src.side == "A":
        if isinstance(f, PhiA):
            return PhiA(Comp(g, f.body)), "nat1"
        # f is F(g1) from here on
        if isinstance(g, F):
            return F(Comp(g.body, f.body)), "fun2"
        # g is PhiA(f2)
        if isinstance(f.body, G):
            return PhiA(Comp(g.body, f.body.body)), "nat2"
        return Comp(g.body, F(f.body.body)), "phi-gamma"
    if isinstance(g, GammaC):
        return GammaC(Comp(g.body, f)), "nat1"
    # g is G(f2) from here on
    if isinstance(f, G):
        return G(Comp(g.body, f.body)), "fun2"
    # f is GammaC(g1)
    if isinstance(g.body, F):
        return GammaC(Comp(g.body.body, f.body)), "nat2"
    return Comp(G(g.body.body), f.body), "phi-gamma"


def _rewrite_composition(t: AdjTerm) -> tuple[AdjTerm, str] | None:
    if isinstance(t, Id):
        return None
    if isinstance(t, Comp):
        if composition_free(t.outer) and composition_free(t.inner):
            return _reduce_here(t)
        for side in ("outer", "inner"):
            found = _rewrite_composition(getattr(t, side))
            if found is not None:
                new = Comp(found[0], t.inner) if side == "outer" else Comp(t.outer, found[0])
                return new, found[1]
        raise AssertionError("unreachable")
    found = _rewrite_composition(t.body)
    return None if found is None else (type(t)(found[0]), found[1])


def rewrite_once(t: AdjTerm) -> tuple[AdjTerm, str] | None:
    found = _find_identity_under_functor(t)
    if found is not None:
        return found, "fun1"
    return _rewrite_composition(t)


def elimination_trace(t: AdjTerm) -> list[tuple[str, AdjTerm]]:
    trace = []
    while (found := rewrite_once(t)) is not None:
        new, rule = found
        assert (new.src, new.dst) == (t.src, t.dst)
        assert composition_degree(new) < composition_degree(t), rule
        trace.append((rule, new))
        t = new
    return trace


def eliminate_composition_adj(t: AdjTerm) -> AdjTerm:
    trace = elimination_trace(t)
    return trace[-1][1] if trace else t


# -- normal forms and words ----------------------------------------------------

SYMBOLS = {"F": F, "G": G, "A": PhiA, "C": GammaC}
_LETTER = {F: "F", G: "G", PhiA: "A", GammaC: "C"}
# symbol -> symbols it may be applied to directly ("" is the base identity)
ADJACENT = {"F": set("GC") | {""}, "G": set("FA"), "A": set("FA"), "C": set("GC") | {""}}


class AdjWord(NamedTuple):
    """Symbols over F, G, A (PhiA) and C (GammaC), outermost first, over 1_Ø."""

    symbols: str

    def term(self) -> AdjTerm:
        t: AdjTerm = Id(EMPTY)
        for s in reversed(self.symbols):
            t = SYMBOLS[s](t)
        return t

    def __str__(self):
        return f"{self.symbols}@O"

    def well_formed(self) -> bool:
        tail = self.symbols[1:] + "\0"
        return all((nxt if nxt != "\0" else "") in ADJACENT[s] for s, nxt in zip(self.symbols, tail))

    @classmethod
    def parse(cls, text: str) -> "AdjWord":
        symbols, sep, base = text.strip().partition("@")
        if not sep or base != "O":
            raise ParseError(f"adjunction word needs the form XYZ@O, got {text!r}", len(symbols))
        bad = next((k for k, s in enumerate(symbols) if s not in SYMBOLS), None)
        if bad is not None:
            raise ParseError(f"unexpected symbol {symbols[bad]!r} in adjunction word", bad)
        word = cls(symbols)
        try:
            word.term()
        except IllTyped as exc:
            raise ParseError(f"ill-typed adjunction word: {exc}", 0) from None
        return word


def _expand(t: AdjTerm) -> str:
    if isinstance(t, Comp):
        raise IllTyped("term still contains a composition")
    if isinstance(t, Id):
        if t.obj == EMPTY:
            return ""
        if t.obj.side == "A":
            return "F" + _expand(Id(B(t.obj.level)))
        return "G" + _expand(Id(A(t.obj.level - 1)))
    return _LETTER[type(t)] + _expand(t.body)


def adj_normal_form(t: AdjTerm) -> AdjWord:
    """Eliminate compositions and unfold every identity down to 1_Ø."""
    word = AdjWord(_expand(eliminate_composition_adj(t)))
    assert word.well_formed(), word
    return word


def enumerate_normal_forms(src: AdjObject, dst: AdjObject) -> Iterator[AdjWord]:
    """All normal-form words src -> dst, built outward from 1_Ø."""
    limit = (src.index, dst.index)

    def grow(t: AdjTerm, symbols: str):
        if (t.src, t.dst) == (src, dst):
            yield AdjWord(symbols)
        for s, ctor in SYMBOLS.items():
            if (symbols[:1] or "") not in ADJACENT[s]:
                continue
            try:
                bigger = ctor(t)
            except IllTyped:
                continue
            if bigger.src.index <= limit[0] and bigger.dst.index <= limit[1]:
                yield from grow(bigger, s + symbols)

    yield from grow(Id(EMPTY), "")


# -- friezes -------------------------------------------------------------------

class IndexedFrieze(NamedTuple):
    frieze: Frieze
    index: tuple[int, int]


def functor_E(t: AdjTerm) -> IndexedFrieze:
    if isinstance(t, Id):
        k = t.obj.index
        return IndexedFrieze(fz.unit(), (k, k))
    if isinstance(t, Comp):
        lower, upper = functor_E(t.outer), functor_E(t.inner)
        d = fz.compose(upper.frieze, lower.frieze)
        index = (upper.index[0], lower.index[1])
        assert d.has_type(*index)
        return IndexedFrieze(d, index)
    d, (n, m) = functor_E(t.body)
    if isinstance(t, (F, G)):
        return IndexedFrieze(d, (n + 1, m + 1))
    if isinstance(t, PhiA):
        return IndexedFrieze(Frieze(d.cups + ((n + 1, n + 2),), d.caps, (n + 2, m)), (n + 2, m))
    return IndexedFrieze(Frieze(d.cups, d.caps + ((-(m + 2), -(m + 1)),), (n, m + 2)), (n, m + 2))


def from_frieze(d: Frieze, index: tuple[int, int]) -> AdjTerm:
    """A composition-free term whose image under E is d indexed by ``index``."""
    n, m = index
    if n % 2 != m % 2:
        raise ValidationError(f"index {index} mixes parities")
    if not d.has_type(n, m):
        raise ValidationError(f"frieze of type {d.type} cannot be indexed by {index}")
    if n + m == 0:
        return Id(EMPTY)
    if n > 0 and m > 0 and d.partner(n) == -m:
        body = from_frieze(d, (n - 1, m - 1))
        return G(body) if n % 2 == 0 else F(body)
    if n % 2 == 0:
        cap = (-m, -(m - 1))
        assert cap in d.caps, (d, index)
        rest = Frieze(d.cups, tuple(c for c in d.caps if c != cap), (n, m - 2))
        return GammaC(from_frieze(rest, (n, m - 2)))
    cup = (n - 1, n)
    assert cup in d.cups, (d, index)
    rest = Frieze(tuple(c for c in d.cups if c != cup), d.caps, (n - 2, m))
    return PhiA(from_frieze(rest, (n - 2, m)))


def functor_S(d: Frieze, index: tuple[int, int]) -> OrdMap:
    """The map n -> m read off a frieze indexed by (2n, 2m)."""
    n2, m2 = index
    if n2 % 2 or m2 % 2:
        raise ValidationError(f"S needs an even index, got {index}")
    if not d.has_type(n2, m2):
        raise ValidationError(f"frieze of type {d.type} cannot be indexed by {index}")
    f = fz.phi(d)
    return OrdMap(n2 // 2, m2 // 2, tuple(f(x) for x in range(n2 // 2)))


def functor_D(f: OrdMap) -> IndexedFrieze:
    d = fz.from_endo(OrdEndoN.extend(f))
    index = (2 * f.n, 2 * f.m)
    assert d.has_type(*index)
    return IndexedFrieze(d, index)


def to_ordmap(t: AdjTerm) -> OrdMap:
    if t.src.side != "B":
        raise IllTyped("only terms of B denote order-preserving maps")
    return functor_S(*functor_E(t))


def from_ordmap(f: OrdMap) -> AdjWord:
    return adj_normal_form(from_frieze(*functor_D(f)))


def b_generator(n: int, letter: str, i: int) -> AdjTerm:
    if letter not in ("p", "q"):
        raise IllTyped(f"unknown generator letter {letter!r}")
    if n < 2 or not 0 <= i <= n - 2:
        raise IndexOutOfRange(f"generator index {i} outside 0..{n - 2} for n={n}")
    core = "CGAF" if letter == "p" else "GAFC"
    return AdjWord("GF" * (n - i - 2) + core + "GF" * i).term()


# -- equation instances and sampling ---------------------------------------------

def random_term(rng: random.Random, src: AdjObject, size: int) -> AdjTerm:
    """A random well-typed term with the given source and about ``size`` symbols."""
    if size <= 1:
        return Id(src)
    choice = rng.random()
    if src.side == "A":
        if choice < 0.3:
            return F(random_term(rng, B(src.level), size - 1))
        if choice < 0.6 and src.level >= 1:
            return PhiA(random_term(rng, A(src.level - 1), size - 1))
    else:
        if choice < 0.3:
            return GammaC(random_term(rng, src, size - 1))
        if choice < 0.6 and src.level >= 1:
            return G(random_term(rng, A(src.level - 1), size - 1))
    split = rng.randint(1, max(1, size - 2))
    inner = random_term(rng, src, split)
    outer = random_term(rng, inner.dst, max(1, size - 1 - split))
    return Comp(outer, inner)


def random_object(rng: random.Random, max_level: int = 2) -> AdjObject:
    return AdjObject(rng.choice("AB"), rng.randint(0, max_level))


def equation_instance(rng: random.Random, family: str, size: int = 6) -> tuple[AdjTerm, AdjTerm]:
    """Both sides of a random instance of an imposed equation."""
    def term(src):
        return random_term(rng, src, rng.randint(1, size))

    if family == "cat1":
        f = term(random_object(rng))
        return (Comp(Id(f.dst), f), f) if rng.random() < 0.5 else (Comp(f, Id(f.src)), f)
    if family == "cat2":
        f1 = term(random_object(rng))
        f2 = term(f1.dst)
        f3 = term(f2.dst)
        return Comp(f3, Comp(f2, f1)), Comp(Comp(f3, f2), f1)
    if family == "fun1":
        b = random_object(rng)
        return (F(Id(b)), Id(A(b.level))) if b.side == "B" else (G(Id(b)), Id(B(b.level + 1)))
    if family == "fun2":
        side = rng.choice("AB")
        g1 = term(AdjObject("B" if side == "A" else "A", rng.randint(0, 2)))
        g2 = term(g1.dst)
        wrap = F if side == "A" else G
        return Comp(wrap(g2), wrap(g1)), wrap(Comp(g2, g1))
    if family == "nat1":
        if rng.random() < 0.5:
            f1 = term(A(rng.randint(0, 2)))
            f2 = term(f1.dst)
            return Comp(f2, PhiA(f1)), PhiA(Comp(f2, f1))
        g1 = term(B(rng.randint(0, 2)))
        g2 = term(g1.dst)
        return Comp(GammaC(g2), g1), GammaC(Comp(g2, g1))
    if family == "nat2":
        if rng.random() < 0.5:
            f1 = term(A(rng.randint(0, 2)))
            f2 = term(f1.dst)
            return Comp(PhiA(f2), F(G(f1))), PhiA(Comp(f2, f1))
        g1 = term(B(rng.randint(0, 2)))
        g2 = term(g1.dst)
        return Comp(G(F(g2)), GammaC(g1)), GammaC(Comp(g2, g1))
    if family == "phi-gamma":
        if rng.random() < 0.5:
            g = term(B(rng.randint(0, 2)))
            f = term(A(g.dst.level))
            return Comp(PhiA(f), F(GammaC(g))), Comp(f, F(g))
        while True:
            g = term(B(rng.randint(0, 2)))
            if g.dst.level >= 1:
                break
        f = term(A(g.dst.level - 1))
        return Comp(G(PhiA(f)), GammaC(g)), Comp(G(f), g)
    raise ValidationError(f"unknown equation family {family!r}")


EQUATION_FAMILIES = ("cat1", "cat2", "fun1", "fun2", "nat1", "nat2", "phi-gamma")


def triangle_instances(max_level: int = 5) -> Iterator[tuple[str, AdjTerm, AdjTerm]]:
    """phi_Fb ∘ F gamma_b = 1_Fb and G phi_a ∘ gamma_Ga = 1_Ga."""
    for level in range(max_level + 1):
        b, a = B(level), A(level)
        yield "counit", Comp(phi(A(level)), F(gamma(b))), Id(A(level))
        yield "unit", Comp(G(phi(a)), gamma(B(level + 1))), Id(B(level + 1))


def format_term(t: AdjTerm) -> str:
    if isinstance(t, Id):
        return f"1[{t.obj}]"
    if isinstance(t, Comp):
        return f"({format_term(t.outer)} . {format_term(t.inner)})"
    return f"{_LETTER[type(t)]}{format_term(t.body)}" if isinstance(t.body, Id) \
        else f"{_LETTER[type(t)]}({format_term(t.body)})"
