"""The free monad generated by one object: terms over H, M, identities and ∘.

Objects are naturals with T(n) = n+1.  ``H f : n -> m+1`` for ``f : n -> m``
and ``M f : n+1 -> m+1`` for ``f : n -> m+1``.  Every term node carries its
source and target, checked when the node is built.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import NamedTuple, Union

from . import ordmap
from .errors import IllTyped, IndexOutOfRange, ParseError
from .ordmap import OrdMap


@dataclass(frozen=True)
class Id:
    obj: int
    src: int = field(init=False, compare=False, repr=False)
    dst: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.obj < 0:
            raise IllTyped(f"negative object {self.obj}")
        object.__setattr__(self, "src", self.obj)
        object.__setattr__(self, "dst", self.obj)


@dataclass(frozen=True)
class Comp:
    """``outer ∘ inner``; inner runs first."""

    outer: "MonadTerm"
    inner: "MonadTerm"
    src: int = field(init=False, compare=False, repr=False)
    dst: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.inner.dst != self.outer.src:
            raise IllTyped(f"cannot compose {self.outer.src}->{self.outer.dst} "
                           f"after {self.inner.src}->{self.inner.dst}")
        object.__setattr__(self, "src", self.inner.src)
        object.__setattr__(self, "dst", self.outer.dst)


@dataclass(frozen=True)
class H:
    body: "MonadTerm"
    src: int = field(init=False, compare=False, repr=False)
    dst: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "src", self.body.src)
        object.__setattr__(self, "dst", self.body.dst + 1)


@dataclass(frozen=True)
class M:
    body: "MonadTerm"
    src: int = field(init=False, compare=False, repr=False)
    dst: int = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if self.body.dst < 1:
            raise IllTyped(f"M needs a target of the form T(m), got {self.body.dst}")
        object.__setattr__(self, "src", self.body.src + 1)
        object.__setattr__(self, "dst", self.body.dst)


MonadTerm = Union[Id, Comp, H, M]


def T(f: MonadTerm) -> MonadTerm:
    return M(H(f))


def eta(a: int) -> MonadTerm:
    return H(Id(a))


def mu(a: int) -> MonadTerm:
    return M(Id(a + 1))


def length(t: MonadTerm) -> int:
    if isinstance(t, Id):
        return 1
    if isinstance(t, Comp):
        return 1 + length(t.outer) + length(t.inner)
    return 1 + length(t.body)


def composition_degree(t: MonadTerm) -> int:
    """Sum of the lengths of all subterms of the form g∘f."""
    if isinstance(t, Id):
        return 0
    if isinstance(t, Comp):
        return length(t) + composition_degree(t.outer) + composition_degree(t.inner)
    return composition_degree(t.body)


def composition_free(t: MonadTerm) -> bool:
    if isinstance(t, Comp):
        return False
    if isinstance(t, Id):
        return True
    return composition_free(t.body)


# -- words ---------------------------------------------------------------------

class MonadWord(NamedTuple):
    """Symbols over {H, M}, outermost first, applied to ``Id(base)``."""

    symbols: str
    base: int

    def term(self) -> MonadTerm:
        t: MonadTerm = Id(self.base)
        for s in reversed(self.symbols):
            t = H(t) if s == "H" else M(t)
        return t

    def __str__(self):
        return f"{self.symbols}@{self.base}"

    @classmethod
    def parse(cls, text: str) -> "MonadWord":
        symbols, sep, base = text.strip().partition("@")
        if not sep or not base.isdigit():
            raise ParseError(f"monad word needs the form XYZ@n, got {text!r}", len(symbols))
        bad = next((k for k, s in enumerate(symbols) if s not in "HM"), None)
        if bad is not None:
            raise ParseError(f"unexpected symbol {symbols[bad]!r} in monad word", bad)
        word = cls(symbols, int(base))
        word.term()  # type check
        return word


def word_of(t: MonadTerm) -> MonadWord:
    symbols = []
    while not isinstance(t, Id):
        if isinstance(t, Comp):
            raise IllTyped("term still contains a composition")
        symbols.append("H" if isinstance(t, H) else "M")
        t = t.body
    return MonadWord("".join(symbols), t.obj)


# -- composition elimination ---------------------------------------------------

def _reduce_here(t: Comp) -> tuple[MonadTerm, str]:
    g, f = t.outer, t.inner
    if isinstance(f, Id):
        return g, "cat1"
    if isinstance(g, Id):
        return f, "cat1"
    if isinstance(g, H):
        return H(Comp(g.body, f)), "H"
    if isinstance(f, H):
        return Comp(g.body, f.body), "HM"
    return M(Comp(g, f.body)), "M"


def _rewrite_once(t: MonadTerm) -> tuple[MonadTerm, str] | None:
    if isinstance(t, Id):
        return None
    if isinstance(t, Comp):
        if composition_free(t.outer) and composition_free(t.inner):
            return _reduce_here(t)
        for side in ("outer", "inner"):
            found = _rewrite_once(getattr(t, side))
            if found is not None:
                new = Comp(found[0], t.inner) if side == "outer" else Comp(t.outer, found[0])
                return new, found[1]
        raise AssertionError("unreachable")
    found = _rewrite_once(t.body)
    if found is None:
        return None
    return type(t)(found[0]), found[1]


def elimination_trace(t: MonadTerm) -> list[tuple[str, MonadTerm]]:
    """Every (rule, result) pair on the way to a composition-free term."""
    trace = []
    while (found := _rewrite_once(t)) is not None:
        new, rule = found
        assert (new.src, new.dst) == (t.src, t.dst)
        trace.append((rule, new))
        t = new
    return trace


def eliminate_composition(t: MonadTerm) -> MonadWord:
    trace = elimination_trace(t)
    return word_of(trace[-1][1] if trace else t)


def monad_normal_form(t: MonadTerm) -> MonadWord:
    """Composition-free word over Id(0), unfolding Id(a+1) into MH Id(a)."""
    word = eliminate_composition(t)
    return MonadWord(word.symbols + "MH" * word.base, 0)


# -- the functor to finite ordinals --------------------------------------------

def functor_G(t: MonadTerm) -> OrdMap:
    if isinstance(t, Id):
        return ordmap.identity(t.obj)
    if isinstance(t, Comp):
        return ordmap.compose(functor_G(t.inner), functor_G(t.outer))
    inner = functor_G(t.body)
    if isinstance(t, H):
        return OrdMap(inner.n, inner.m + 1, inner.values)
    return OrdMap(inner.n + 1, inner.m, inner.values + (inner.m - 1,))


def from_ordmap(f: OrdMap) -> MonadWord:
    """The normal-form word whose image under G is f."""
    if f.n == 0:
        return MonadWord("H" * f.m, 0)
    last = f.values[-1]
    k = f.m - last
    rest = OrdMap(f.n - 1, last + 1, f.values[:-1])
    return MonadWord("H" * (k - 1) + "M" + from_ordmap(rest).symbols, 0)


def embedded_generator(n: int, letter: str, i: int) -> MonadTerm:
    if letter not in ("p", "q"):
        raise IllTyped(f"unknown generator letter {letter!r}")
    if n < 2 or not 0 <= i <= n - 2:
        raise IndexOutOfRange(f"generator index {i} outside 0..{n - 2} for n={n}")
    core = "HMMH" if letter == "p" else "MMHH"
    t = MonadWord(core, i).term()
    for _ in range(n - i - 2):
        t = T(t)
    return t


# -- sampling ------------------------------------------------------------------

def random_term(rng: random.Random, src: int, size: int) -> MonadTerm:
    """A random well-typed term with the given source and about ``size`` symbols."""
    if size <= 1:
        return Id(src)
    choice = rng.random()
    if choice < 0.3:
        return H(random_term(rng, src, size - 1))
    if choice < 0.6 and src >= 1:
        body = random_term(rng, src - 1, size - 1)
        if body.dst == 0:
            body = H(body)
        return M(body)
    split = rng.randint(1, max(1, size - 2))
    inner = random_term(rng, src, split)
    outer = random_term(rng, inner.dst, max(1, size - 1 - split))
    return Comp(outer, inner)
