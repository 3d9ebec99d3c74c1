"""Friezes: parity-constrained planar matchings on Z∖{0} of finite type.

Positive points sit on top (the domain), negative points on the bottom.  A
cup joins 2k+2 and 2k+3 on top; a cap joins -(2k+2) and -(2k+1) below.
Everything else is a transversal, and beyond the type (n, m) the
transversals are [-(m+k), n+k].  Points 2x+1 and 2x+2 of either edge stand
for the number x, which is how a frieze encodes a monotone map of N.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import NamedTuple

from . import stacking
from .errors import ValidationError
from .ordmap import OrdEndoN

Segment = tuple[int, int]


class FriezeOverlap(ValidationError):
    pass


class FriezeParity(ValidationError):
    pass


class FriezeExhaustion(ValidationError):
    pass


def _check_forms(cups, caps):
    for a, b in cups:
        if not (a >= 2 and a % 2 == 0 and b == a + 1):
            raise FriezeParity(f"cup [{a},{b}] is not of the form [2k+2,2k+3] (point {a})")
    for a, b in caps:
        if not (b <= -1 and b % 2 == 1 and a == b - 1):
            raise FriezeParity(f"cap [{a},{b}] is not of the form [-(2k+2),-(2k+1)] (point {a})")


@dataclass(frozen=True)
class Frieze:
    """Canonical frieze: sorted cups, sorted caps and the least type.

    Building one validates the data and reconstructs the transversals by
    matching unclaimed bottom points to unclaimed top points in order.
    """

    cups: tuple[Segment, ...]
    caps: tuple[Segment, ...]
    type: tuple[int, int]

    def __post_init__(self):
        cups = [tuple(int(x) for x in c) for c in self.cups]
        caps = [tuple(int(x) for x in c) for c in self.caps]
        n, m = (int(x) for x in self.type)
        if n < 0 or m < 0:
            raise ValidationError(f"negative type {(n, m)}")
        _check_forms(cups, caps)
        if len(set(cups)) != len(cups) or len(set(caps)) != len(caps):
            dup = next(c for c in cups + caps if (cups + caps).count(c) > 1)
            raise FriezeOverlap(f"segment {list(dup)} given twice (point {dup[0]})")
        for a, b in cups:
            if b > n:
                raise FriezeOverlap(f"cup [{a},{b}] overlaps the tail transversal at point {b}")
        for a, b in caps:
            if -a > m:
                raise FriezeOverlap(f"cap [{a},{b}] overlaps the tail transversal at point {a}")
        tops = _free_points(cups, n)
        bottoms = _free_points([(-b, -a) for a, b in caps], m)
        if len(tops) != len(bottoms):
            if len(tops) > len(bottoms):
                point = tops[len(bottoms)]
            else:
                point = -bottoms[len(tops)]
            raise FriezeExhaustion(f"point {point} lies on no segment")
        transversals = [(-b, t) for b, t in zip(bottoms, tops)]
        while n > 0 and m > 0 and transversals and transversals[-1] == (-m, n):
            transversals.pop()
            n, m = n - 1, m - 1
        object.__setattr__(self, "cups", tuple(sorted(cups)))
        object.__setattr__(self, "caps", tuple(sorted(caps, reverse=True)))
        object.__setattr__(self, "type", (n, m))
        object.__setattr__(self, "_transversals", tuple(transversals))

    def transversals(self) -> tuple[Segment, ...]:
        """The specific transversals, i.e. those not in the tail."""
        return self._transversals

    def segments(self, upto: int | None = None) -> list[Segment]:
        """Every segment with top end at most ``upto`` (default: the type)."""
        n, m = self.type
        upto = n if upto is None else max(upto, n)
        return (list(self.cups) + list(self.caps) + list(self._transversals)
                + stacking.tail(n, m, upto))

    def window_segments(self, w: int) -> list[Segment]:
        """Segments lying inside [-w, w]."""
        return [s for s in self.segments(w + max(self.type) + 1)
                if abs(s[0]) <= w and abs(s[1]) <= w]

    def partner(self, point: int) -> int:
        n, m = self.type
        if point > n:
            return -(m + point - n)
        if point < -m:
            return n + (-point - m)
        for a, b in self.segments():
            if point == a:
                return b
            if point == b:
                return a
        raise AssertionError(f"point {point} unmatched")

    def has_type(self, n: int, m: int) -> bool:
        n0, m0 = self.type
        return n - n0 == m - m0 and n >= n0

    def to_json(self) -> dict:
        return {"cups": [list(c) for c in self.cups], "caps": [list(c) for c in self.caps],
                "type": list(self.type)}

    @classmethod
    def from_json(cls, data: dict) -> "Frieze":
        try:
            return cls(tuple(tuple(c) for c in data.get("cups", [])),
                       tuple(tuple(c) for c in data.get("caps", [])),
                       tuple(data["type"]))
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"bad frieze JSON: {exc}") from None

    def __str__(self):
        cups = " ".join(f"[{a},{b}]" for a, b in self.cups) or "-"
        caps = " ".join(f"[{a},{b}]" for a, b in self.caps) or "-"
        trans = " ".join(f"[{a},{b}]" for a, b in self._transversals) or "-"
        return f"cups {cups}; caps {caps}; transversals {trans}; type {self.type}"


def _free_points(arcs, limit: int) -> list[int]:
    used = {x for arc in arcs for x in arc}
    return [x for x in range(1, limit + 1) if x not in used]


def validate(cups, caps, tail_type) -> Frieze:
    return Frieze(tuple(cups), tuple(caps), tuple(tail_type))


def unit() -> Frieze:
    return Frieze((), (), (0, 0))


def infer_type(d: Frieze) -> tuple[int, int]:
    return d.type


def from_segments(segments, window: tuple[int, int]) -> Frieze:
    """Build a frieze from the segments of a window of the given type."""
    cups = [s for s in segments if s[0] > 0]
    caps = [s for s in segments if s[1] < 0]
    return Frieze(tuple(cups), tuple(caps), window)


def compose(d1: Frieze, d2: Frieze) -> Frieze:
    """Stack d2 below d1 (the composite d2∘d1)."""
    pairs, window, loops = stacking.stack(d1.segments(), d1.type, d2.segments(), d2.type)
    assert loops == 0, "a closed loop appeared while composing friezes"
    return from_segments(pairs, window)


# -- the bijection with monotone maps of N ---------------------------------------

class TransversalPair(NamedTuple):
    odd: Segment
    even: Segment

    @property
    def assigns(self) -> int:
        return (-self.odd[0] - 1) // 2

    @property
    def covers(self) -> range:
        return range((self.odd[1] - 1) // 2, (self.even[1] - 2) // 2 + 1)


def transversal_pairs(d: Frieze, upto: int) -> list[TransversalPair]:
    trans = sorted((s for s in d.segments(upto) if s[0] < 0 < s[1]), key=lambda s: s[1])
    out = []
    for odd, even in zip(trans, trans[1:]):
        if odd[1] % 2 == 1:
            assert even[0] == odd[0] - 1 and even[1] % 2 == 0, (odd, even)
            out.append(TransversalPair(odd, even))
    return out


def phi(d: Frieze) -> OrdEndoN:
    """The monotone map sending x to the number assigned by the pair covering x."""
    n, _ = d.type
    big = n // 2 + 2
    values: dict[int, int] = {}
    for pair in transversal_pairs(d, 2 * big + 4):
        for x in pair.covers:
            values[x] = pair.assigns
    prefix = tuple(values[x] for x in range(big))
    return OrdEndoN(prefix, (big, values[big]))


def from_endo(f: OrdEndoN) -> Frieze:
    """The frieze whose transversal pairs encode f."""
    n, m = f.type
    n, m = n + 1, m + 1
    fibres: dict[int, list[int]] = {}
    for x in range(n):
        fibres.setdefault(f(x), []).append(x)
    used_top: set[int] = set()
    used_bottom: set[int] = set()
    for k, xs in fibres.items():
        used_bottom.update((2 * k + 1, 2 * k + 2))
        used_top.update((2 * min(xs) + 1, 2 * max(xs) + 2))
    cups = []
    free_top = [x for x in range(1, 2 * n + 1) if x not in used_top]
    for a, b in zip(free_top[::2], free_top[1::2]):
        cups.append((a, b))
    caps = []
    free_bottom = [x for x in range(1, 2 * m + 1) if x not in used_bottom]
    for a, b in zip(free_bottom[::2], free_bottom[1::2]):
        caps.append((-b, -a))
    return Frieze(tuple(cups), tuple(caps), (2 * n, 2 * m))


# -- drawing -------------------------------------------------------------------

SPACING = 20
TOP_Y = 60
BOTTOM_Y = 20


class Drawable(NamedTuple):
    kind: str  # "cup", "cap" or "line"
    start: tuple[int, int]
    end: tuple[int, int]


def _anchor(point: int) -> tuple[int, int]:
    return (SPACING * abs(point), TOP_Y if point > 0 else BOTTOM_Y)


def render_model(d: Frieze, w: int) -> list[Drawable]:
    """Arcs and lines for the segments inside [-w, w], positives drawn on top."""
    need = max(d.type)
    if w < need:
        raise ValidationError(f"window {w} is too small; this frieze needs at least {need}")
    out = []
    for a, b in sorted(d.window_segments(w), key=lambda s: (min(abs(s[0]), abs(s[1])), s)):
        kind = "cup" if a > 0 else "cap" if b < 0 else "line"
        if kind == "cap":
            a, b = b, a
        out.append(Drawable(kind, _anchor(a), _anchor(b)))
    return out


# -- sampling ------------------------------------------------------------------

def random_frieze(rng: random.Random, max_half: int = 6) -> Frieze:
    """A random frieze built from a random monotone map with a short prefix."""
    n = rng.randint(0, max_half)
    values = sorted(rng.randint(0, max_half) for _ in range(n))
    m = max(values, default=0) + rng.randint(0, 2)
    return from_endo(OrdEndoN(tuple(values), (n, m)))
