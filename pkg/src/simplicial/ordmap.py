"""Order-preserving maps between finite ordinals, and of finite type on N.

An ``OrdMap`` n -> m is stored as its dense value vector.  Composition
follows function notation for the result but takes arguments in the order
they are applied: ``compose(f, g)`` is g after f.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple

from .errors import IndexOutOfRange, SizeMismatch, ValidationError

ENUMERATION_GUARD = 10


@dataclass(frozen=True)
class OrdMap:
    n: int
    m: int
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if self.n < 0 or self.m < 0:
            raise ValidationError(f"negative size in {self.n}->{self.m}")
        if len(self.values) != self.n:
            raise ValidationError(f"expected {self.n} values, got {len(self.values)}")
        for i, v in enumerate(self.values):
            if not 0 <= v < self.m:
                raise ValidationError(f"value {v} at {i} is outside 0..{self.m - 1}")
            if i and v < self.values[i - 1]:
                raise ValidationError(f"not monotone at {i}: {self.values[i - 1]} > {v}")

    def __call__(self, i: int) -> int:
        return self.values[i]

    def __str__(self):
        return f"{list(self.values)}: {self.n}->{self.m}"

    @property
    def is_endo(self) -> bool:
        return self.n == self.m

    def preimage(self, j: int) -> list[int]:
        return [i for i, v in enumerate(self.values) if v == j]

    def to_json(self) -> dict:
        return {"n": self.n, "m": self.m, "values": list(self.values)}

    @classmethod
    def from_json(cls, data: dict) -> "OrdMap":
        try:
            return cls(int(data["n"]), int(data["m"]), tuple(data["values"]))
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"bad map JSON: {exc}") from None


def endo(values: Iterable[int]) -> OrdMap:
    """Shorthand for an endomorphism given by its values."""
    values = tuple(values)
    return OrdMap(len(values), len(values), values)


def identity(n: int) -> OrdMap:
    return OrdMap(n, n, tuple(range(n)))


def compose(f: OrdMap, g: OrdMap) -> OrdMap:
    """Return g∘f (f is applied first)."""
    if f.m != g.n:
        raise SizeMismatch(f"cannot compose {f.n}->{f.m} with {g.n}->{g.m}: {f.m} != {g.n}")
    return OrdMap(f.n, g.m, tuple(g.values[v] for v in f.values))


def after(x: OrdMap, y: OrdMap) -> OrdMap:
    """Return x∘y in function notation (y is applied first)."""
    return compose(y, x)


def compose_all(maps: Iterable[OrdMap], n: int) -> OrdMap:
    """Evaluate x1∘x2∘...∘xk on n; the last map is applied first."""
    result = identity(n)
    for x in maps:
        result = after(result, x)
    return result


def monoidal_sum(f: OrdMap, g: OrdMap) -> OrdMap:
    return OrdMap(f.n + g.n, f.m + g.m, f.values + tuple(f.m + v for v in g.values))


def generator(n: int, letter: str, i: int) -> OrdMap:
    """The right-forking (``p``) or left-forking (``q``) endomorphism of n at i."""
    if letter not in ("p", "q"):
        raise ValidationError(f"unknown generator letter {letter!r}")
    if n < 2 or not 0 <= i <= n - 2:
        raise IndexOutOfRange(f"generator index {i} outside 0..{n - 2} for n={n}")
    values = list(range(n))
    if letter == "p":
        values[i + 1] = i
    else:
        values[i] = i + 1
    return OrdMap(n, n, tuple(values))


# -- points of an endomorphism ------------------------------------------------

class CriticalPair(NamedTuple):
    kind: str  # "e-m" or "m-e"
    i: int
    j: int

    @property
    def weight(self) -> int:
        return self.j - self.i


@dataclass(frozen=True)
class PointClassification:
    empty_points: frozenset[int]
    single_points: frozenset[int]
    multiple_points: frozenset[int]
    bottom_p: frozenset[int]
    top_p: frozenset[int]
    bottom_q: frozenset[int]
    top_q: frozenset[int]
    critical_pairs: tuple[CriticalPair, ...] = field(default=())


class Nu(NamedTuple):
    n1: int
    n2: int


def _require_endo(f: OrdMap):
    if not f.is_endo:
        raise SizeMismatch(f"expected an endomorphism, got {f.n}->{f.m}")


def classify_points(f: OrdMap) -> PointClassification:
    _require_endo(f)
    fibres = [f.preimage(j) for j in range(f.m)]
    empty = {j for j, fib in enumerate(fibres) if not fib}
    single = {j for j, fib in enumerate(fibres) if len(fib) == 1}
    multiple = {j for j, fib in enumerate(fibres) if len(fib) > 1}

    bottom_p = {i for i in empty if f(i) < i}
    top_p = {j for i in multiple for j in fibres[i] if i <= j < max(fibres[i])}
    bottom_q = {i for i in single | multiple if min(fibres[i]) < i}
    top_q = {min(fibres[i]) for i in bottom_q}

    pairs = []
    marked = sorted(empty | multiple)
    for a, b in zip(marked, marked[1:]):
        if a in empty and b in multiple:
            pairs.append(CriticalPair("e-m", a, b))
        elif a in multiple and b in empty:
            pairs.append(CriticalPair("m-e", a, b))

    return PointClassification(
        frozenset(empty), frozenset(single), frozenset(multiple),
        frozenset(bottom_p), frozenset(top_p), frozenset(bottom_q), frozenset(top_q),
        tuple(pairs),
    )


def complexity_nu(f: OrdMap) -> Nu:
    pc = classify_points(f)
    weights = [cp.weight for cp in pc.critical_pairs]
    return Nu(len(pc.empty_points), min(weights) if weights else 0)


def decompose(f: OrdMap) -> list[tuple[str, int]]:
    """Write f as a composite of generators, leftmost symbol applied last.

    Each step removes one generator from the left by moving a single
    preimage point, which strictly lowers the complexity pair.
    """
    _require_endo(f)
    out: list[tuple[str, int]] = []
    current = f
    nu = complexity_nu(current)
    while nu != (0, 0):
        pairs = classify_points(current).critical_pairs
        kind, i, j = min(pairs, key=lambda cp: (cp.weight, cp.i))
        values = list(current.values)
        if kind == "e-m":
            k = min(current.preimage(i + 1))
            values[k] = i
            out.append(("q", i))
        else:
            k = max(current.preimage(j - 1))
            values[k] = j
            out.append(("p", j - 1))
        current = endo(values)
        new_nu = complexity_nu(current)
        assert new_nu < nu, f"complexity did not drop: {nu} -> {new_nu}"
        nu = new_nu
    return out


def recompose(n: int, symbols: Iterable[tuple[str, int]]) -> OrdMap:
    return compose_all((generator(n, letter, i) for letter, i in symbols), n)


def enumerate_endos(n: int) -> list[OrdMap]:
    """All endomorphisms of n in lexicographic order of their value vectors."""
    if n > ENUMERATION_GUARD:
        raise ValidationError(f"enumeration is guarded at n <= {ENUMERATION_GUARD}, got {n}")
    return [OrdMap(n, n, vals) for vals in itertools.combinations_with_replacement(range(n), n)]


def enumerate_maps(n: int, m: int) -> list[OrdMap]:
    if n > ENUMERATION_GUARD or m > ENUMERATION_GUARD:
        raise ValidationError(f"enumeration is guarded at sizes <= {ENUMERATION_GUARD}")
    return [OrdMap(n, m, vals) for vals in itertools.combinations_with_replacement(range(m), n)]


# -- endomorphisms of N of finite type -----------------------------------------

@dataclass(frozen=True)
class OrdEndoN:
    """Monotone f: N -> N with f(n+k) = m+k for k >= 0, where (n, m) is the type.

    Construction canonicalizes to the least type, so ``==`` is semantic.
    """

    prefix: tuple[int, ...]
    type: tuple[int, int]

    def __post_init__(self):
        prefix = tuple(int(v) for v in self.prefix)
        n, m = (int(x) for x in self.type)
        if n < 0 or m < 0:
            raise ValidationError(f"negative type {(n, m)}")
        if len(prefix) != n:
            raise ValidationError(f"prefix length {len(prefix)} does not match type ({n},{m})")
        for i, v in enumerate(prefix):
            if v < 0 or (i and v < prefix[i - 1]):
                raise ValidationError(f"prefix not monotone at {i}")
        if prefix and prefix[-1] > m:
            raise ValidationError(f"prefix value {prefix[-1]} exceeds tail start {m}")
        while n > 0 and m > 0 and prefix[n - 1] == m - 1:
            n, m = n - 1, m - 1
            prefix = prefix[:n]
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "type", (n, m))

    def __call__(self, x: int) -> int:
        n, m = self.type
        return self.prefix[x] if x < n else m + x - n

    def head(self, k: int) -> list[int]:
        return [self(x) for x in range(k)]

    def restrict(self, n: int, m: int) -> OrdMap:
        """The finite map n -> m obtained by restricting the domain."""
        return OrdMap(n, m, tuple(self(x) for x in range(n)))

    def to_json(self) -> dict:
        return {"prefix": list(self.prefix), "type": list(self.type)}

    @classmethod
    def from_json(cls, data: dict) -> "OrdEndoN":
        try:
            return cls(tuple(data["prefix"]), tuple(data["type"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValidationError(f"bad endomorphism JSON: {exc}") from None

    @classmethod
    def extend(cls, f: OrdMap) -> "OrdEndoN":
        """Extend f: n -> m to N by continuing with m, m+1, ... after the last point."""
        return cls(f.values, (f.n, f.m))


def endo_identity() -> OrdEndoN:
    return OrdEndoN((), (0, 0))


def compose_endo(f: OrdEndoN, g: OrdEndoN) -> OrdEndoN:
    """Return g∘f."""
    n1, m1 = f.type
    n2, _ = g.type
    big = n1 + max(0, n2 - m1)
    prefix = tuple(g(f(x)) for x in range(big))
    return OrdEndoN(prefix, (big, g(f(big))))


def std_generator(kind: str, i: int) -> OrdEndoN:
    """The surjection ``sigma`` i (hits i twice) or injection ``delta`` i (misses i)."""
    if i < 0:
        raise IndexOutOfRange(f"index must be >= 0, got {i}")
    if kind == "sigma":
        return OrdEndoN(tuple(range(i + 1)), (i + 1, i))
    if kind == "delta":
        return OrdEndoN(tuple(range(i)), (i, i + 1))
    raise ValidationError(f"unknown kind {kind!r}")
