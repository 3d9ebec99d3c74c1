"""Temperley-Lieb diagram monoids and the cup/cap calculus on Z∖{0}.

A ``TLDiagram`` on n strands is a planar perfect matching of the boundary
read as bottom 1..n then top n..1 (positions 0..2n-1), plus a count of
closed circles.  Composition ``tl_compose(d1, d2)`` puts d2 below d1, which
is d2∘d1 in function notation; an evaluated word x1∘x2∘...∘xk therefore
has xk on top.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

from . import frieze as fz
from . import ordmap, presentation, stacking
from .errors import IndexOutOfRange, SizeMismatch, ValidationError
from .ordmap import OrdEndoN
from .report import Report

MODES = ("K", "J")
VERIFY_GUARD = 8


def _check_mode(mode: str):
    if mode not in MODES:
        raise ValidationError(f"unknown mode {mode!r}; expected K or J")


@dataclass(frozen=True)
class TLDiagram:
    n: int
    pairs: tuple[tuple[int, int], ...]
    circles: int = 0

    def __post_init__(self):
        pairs = tuple(sorted(tuple(sorted(p)) for p in self.pairs))
        points = [x for p in pairs for x in p]
        if sorted(points) != list(range(2 * self.n)):
            raise ValidationError(f"not a perfect matching of {2 * self.n} boundary points")
        if not stacking.is_planar(self.signed(pairs), self.n, self.n):
            raise ValidationError("matching is not planar")
        if self.circles < 0:
            raise ValidationError("negative circle count")
        object.__setattr__(self, "pairs", pairs)

    def position(self, side: str, i: int) -> int:
        return i - 1 if side == "b" else 2 * self.n - i

    def point(self, pos: int) -> tuple[str, int]:
        return ("b", pos + 1) if pos < self.n else ("t", 2 * self.n - pos)

    def signed(self, pairs=None) -> list[tuple[int, int]]:
        """Pairs with top i as +i and bottom i as -i."""
        out = []
        for a, b in (self.pairs if pairs is None else pairs):
            ea = -(a + 1) if a < self.n else 2 * self.n - a
            eb = -(b + 1) if b < self.n else 2 * self.n - b
            out.append(tuple(sorted((ea, eb))))
        return out

    @classmethod
    def from_signed(cls, n: int, pairs: Iterable[tuple[int, int]], circles: int = 0) -> "TLDiagram":
        def pos(x):
            return -x - 1 if x < 0 else 2 * n - x
        return cls(n, tuple((pos(a), pos(b)) for a, b in pairs), circles)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "pairs": [[list(self.point(a)), list(self.point(b))] for a, b in self.pairs],
            "circles": self.circles,
        }

    @classmethod
    def from_json(cls, data: dict) -> "TLDiagram":
        try:
            n = int(data["n"])
            pairs = []
            for end1, end2 in data["pairs"]:
                pairs.append(tuple(_pos_of(n, side, int(i)) for side, i in (end1, end2)))
            return cls(n, tuple(pairs), int(data.get("circles", 0)))
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, ValidationError):
                raise
            raise ValidationError(f"bad diagram JSON: {exc}") from None


def _pos_of(n: int, side: str, i: int) -> int:
    if side not in ("t", "b") or not 1 <= i <= n:
        raise ValidationError(f"bad boundary point {side}{i} for n={n}")
    return i - 1 if side == "b" else 2 * n - i


def tl_unit(n: int) -> TLDiagram:
    return TLDiagram.from_signed(n, [(-i, i) for i in range(1, n + 1)])


def tl_generator(n: int, which: str, i: int | None = None) -> TLDiagram:
    """``which`` is "h" (needs 1 <= i <= n-1), "c" or "unit"."""
    if which == "unit":
        return tl_unit(n)
    if which == "c":
        d = tl_unit(n)
        return TLDiagram(n, d.pairs, 1)
    if which == "h":
        if i is None or not 1 <= i <= n - 1:
            raise IndexOutOfRange(f"h index {i} outside 1..{n - 1}")
        pairs = [(-x, x) for x in range(1, n + 1) if x not in (i, i + 1)]
        pairs += [(i, i + 1), (-(i + 1), -i)]
        return TLDiagram.from_signed(n, pairs)
    raise ValidationError(f"unknown generator {which!r}")


def tl_compose(d1: TLDiagram, d2: TLDiagram, mode: str = "K") -> TLDiagram:
    """Stack d2 below d1."""
    _check_mode(mode)
    if d1.n != d2.n:
        raise SizeMismatch(f"cannot stack diagrams on {d1.n} and {d2.n} strands")
    n = d1.n
    pairs, window, loops = stacking.stack(d1.signed(), (n, n), d2.signed(), (n, n))
    assert window == (n, n)
    circles = d1.circles + d2.circles + loops if mode == "K" else 0
    return TLDiagram.from_signed(n, pairs, circles)


class TLLetter(NamedTuple):
    kind: str  # "h", "c" or "1"
    index: int = 0

    def __str__(self):
        return f"h{self.index}" if self.kind == "h" else self.kind


def h(i: int) -> TLLetter:
    return TLLetter("h", i)


C = TLLetter("c")


def eval_word(word: Sequence[TLLetter], n: int, mode: str = "K") -> TLDiagram:
    """Evaluate x1∘x2∘...∘xk; the last letter is on top."""
    _check_mode(mode)
    result = tl_unit(n)
    for letter in reversed(list(word)):
        if letter.kind == "1" or (letter.kind == "c" and mode == "J"):
            continue
        g = tl_generator(n, "c" if letter.kind == "c" else "h", letter.index)
        result = tl_compose(result, g, mode)
    return result


def parse_tl_word(text: str) -> list[TLLetter]:
    from .errors import ParseError
    out = []
    pos = 0
    for part in text.split("."):
        token = part.strip()
        if token in ("c", "1"):
            out.append(TLLetter(token))
        elif token.startswith("h") and token[1:].isdigit():
            out.append(h(int(token[1:])))
        else:
            raise ParseError(f"bad Temperley-Lieb letter {token!r}", pos)
        pos += len(part) + 1
    return out


def format_tl_word(word: Sequence[TLLetter]) -> str:
    return ".".join(str(x) for x in word) if word else "1"


# -- the endomorphism monoid inside K_2n ---------------------------------------

def embed_generator(letter: str, i: int) -> list[TLLetter]:
    return [h(2 * i + 3), h(2 * i + 2)] if letter == "p" else [h(2 * i + 1), h(2 * i + 2)]


def embed_On_term(t: presentation.Term, n: int) -> list[TLLetter]:
    """Word over K_2n representing a term of O_n (generators replaced in place)."""
    if n < 2:
        raise ValidationError(f"rank must be at least 2, got {n}")
    presentation.check_term(t, n)
    out: list[TLLetter] = []
    for leaf in presentation.leaves(t):
        if isinstance(leaf, presentation.Gen):
            out.extend(embed_generator(leaf.letter, leaf.index))
    return out


def frieze_to_tl(d: fz.Frieze, n: int) -> TLDiagram:
    """Read a frieze of type (2n, 2n) as a diagram on 2n strands."""
    if not d.has_type(2 * n, 2 * n):
        raise ValidationError(f"frieze of type {d.type} is not of type ({2 * n},{2 * n})")
    return TLDiagram.from_signed(2 * n, d.segments(2 * n))


def endo_to_tl(f: ordmap.OrdMap) -> TLDiagram:
    return frieze_to_tl(fz.from_endo(OrdEndoN.extend(f)), f.n)


# -- diagrams on Z∖{0} -----------------------------------------------------------

@dataclass(frozen=True)
class GeneralDiagram:
    """Planar matching on Z∖{0} with through-strands [-(m+k), n+k] beyond type (n, m)."""

    pairs: tuple[tuple[int, int], ...]
    type: tuple[int, int]
    circles: int = 0

    def __post_init__(self):
        n, m = self.type
        pairs = sorted(tuple(sorted(p)) for p in self.pairs)
        points = sorted(x for p in pairs for x in p)
        expected = sorted(list(range(-m, 0)) + list(range(1, n + 1)))
        if points != expected:
            raise ValidationError(f"pairs do not cover the window of type {(n, m)} exactly once")
        if not stacking.is_planar(pairs, n, m):
            raise ValidationError("matching is not planar")
        while n > 0 and m > 0 and pairs and (-m, n) in pairs:
            pairs.remove((-m, n))
            n, m = n - 1, m - 1
        object.__setattr__(self, "pairs", tuple(pairs))
        object.__setattr__(self, "type", (n, m))

    @classmethod
    def from_frieze(cls, d: fz.Frieze) -> "GeneralDiagram":
        return cls(tuple(d.segments()), d.type)


def cup(k: int) -> GeneralDiagram:
    """Top arc (k, k+1); top j meets bottom j below k and bottom j-2 above k+1."""
    if k < 1:
        raise IndexOutOfRange(f"cup index must be >= 1, got {k}")
    return GeneralDiagram(tuple((-j, j) for j in range(1, k)) + ((k, k + 1),), (k + 1, k - 1))


def cap(k: int) -> GeneralDiagram:
    if k < 1:
        raise IndexOutOfRange(f"cap index must be >= 1, got {k}")
    return GeneralDiagram(tuple((-j, j) for j in range(1, k)) + ((-(k + 1), -k),), (k - 1, k + 1))


def general_identity() -> GeneralDiagram:
    return GeneralDiagram((), (0, 0))


def general_compose(d1: GeneralDiagram, d2: GeneralDiagram, mode: str = "K") -> GeneralDiagram:
    """Stack d2 below d1."""
    _check_mode(mode)
    pairs, window, loops = stacking.stack(d1.pairs, d1.type, d2.pairs, d2.type)
    circles = d1.circles + d2.circles + loops if mode == "K" else 0
    return GeneralDiagram(tuple(pairs), window, circles)


class CupCapWord(NamedTuple):
    letters: tuple[tuple[str, int], ...]  # ("cup", k) or ("cap", k)
    mode: str = "K"


def eval_cupcap(w: CupCapWord) -> GeneralDiagram:
    result = general_identity()
    for kind, k in reversed(w.letters):
        g = cup(k) if kind == "cup" else cap(k)
        result = general_compose(result, g, w.mode)
    return result


def omega_generator(kind: str, i: int) -> tuple[tuple[str, int], ...]:
    """Cup/cap letters for the surjection ``sigma`` i or the injection ``delta`` i."""
    if i < 0:
        raise IndexOutOfRange(f"index must be >= 0, got {i}")
    if kind == "sigma":
        return (("cup", 2 * i + 2),)
    if kind == "delta":
        return (("cap", 2 * i + 1),)
    raise ValidationError(f"unknown kind {kind!r}")


# -- relation checking ---------------------------------------------------------

def tl_relation_instances(strands: int) -> list[tuple[str, list[TLLetter], list[TLLetter]]]:
    out = []
    idx = range(1, strands)
    for i in idx:
        for j in idx:
            if j + 1 < i:
                out.append(("h1", [h(i), h(j)], [h(j), h(i)]))
        for d in (1, -1):
            if i + d in idx:
                out.append(("h2", [h(i), h(i + d), h(i)], [h(i)]))
        out.append(("hc1", [h(i), C], [C, h(i)]))
        out.append(("hc2", [h(i), h(i)], [C, h(i)]))
    return out


def verify_relations(n: int, mode: str = "K") -> Report:
    """Check the K_2n relations and the O_n equations under the embedding."""
    _check_mode(mode)
    if not 2 <= n <= VERIFY_GUARD:
        raise ValidationError(f"verify_relations needs 2 <= n <= {VERIFY_GUARD}, got {n}")
    report = Report(f"relations in {mode}_{2 * n} and O_{n}", {}, [])
    strands = 2 * n
    for family, lhs, rhs in tl_relation_instances(strands):
        a, b = eval_word(lhs, strands, mode), eval_word(rhs, strands, mode)
        report.record(family, a == b, f"{format_tl_word(lhs)} != {format_tl_word(rhs)}")
    for family, lhs, rhs in presentation.defining_equations(n):
        a = eval_word(embed_On_term(lhs, n), strands, mode)
        b = eval_word(embed_On_term(rhs, n), strands, mode)
        passed = a == b and a.circles == 0
        report.record(f"O:{family}", passed,
                      f"{presentation.format_term(lhs)} vs {presentation.format_term(rhs)}")
    return report


def cupcap_relation_instances(max_index: int, mode: str = "K"):
    """(family, lhs, rhs) cup/cap words for all l <= k <= max_index."""
    out = []
    rng = range(1, max_index + 1)
    for k in rng:
        for l in range(1, k + 1):
            out.append(("cup", [("cup", k), ("cup", l)], [("cup", l), ("cup", k + 2)]))
            out.append(("cap", [("cap", l), ("cap", k)], [("cap", k + 2), ("cap", l)]))
            out.append(("cup-cap1", [("cup", l), ("cap", k + 2)], [("cap", k), ("cup", l)]))
            out.append(("cup-cap2", [("cup", k + 2), ("cap", l)], [("cap", l), ("cup", k)]))
            if mode == "K":
                out.append(("circle", [("cup", k), ("cap", k)], [("cup", l), ("cap", l)]))
        out.append(("cup-cap3", [("cup", k), ("cap", k + 1)], []))
        if k >= 2:
            out.append(("cup-cap3", [("cup", k), ("cap", k - 1)], []))
        if mode == "J":
            out.append(("circle", [("cup", k), ("cap", k)], []))
    return [(f, CupCapWord(tuple(a), mode), CupCapWord(tuple(b), mode)) for f, a, b in out]


def omega_relation_instances(max_index: int):
    """The five standard relation families between sigma and delta, i <= j."""
    out = []
    for i in range(max_index + 1):
        for j in range(i, max_index + 1):
            out.append(("ss", [("sigma", j), ("sigma", i)], [("sigma", i), ("sigma", j + 1)]))
            out.append(("dd", [("delta", i), ("delta", j)], [("delta", j + 1), ("delta", i)]))
            out.append(("sd1", [("sigma", i), ("delta", j + 2)], [("delta", j + 1), ("sigma", i)]))
            out.append(("sd2", [("sigma", j + 1), ("delta", i)], [("delta", i), ("sigma", j)]))
        out.append(("sd3", [("sigma", i), ("delta", i)], []))
        out.append(("sd3", [("sigma", i), ("delta", i + 1)], []))
    return out


def omega_word_to_cupcap(word, mode: str = "K") -> CupCapWord:
    letters: list[tuple[str, int]] = []
    for kind, i in word:
        letters.extend(omega_generator(kind, i))
    return CupCapWord(tuple(letters), mode)


def omega_word_value(word) -> OrdEndoN:
    result = ordmap.endo_identity()
    for kind, i in reversed(word):
        result = ordmap.compose_endo(result, ordmap.std_generator(kind, i))
    return result


def verify_cupcap(max_index: int = 8) -> Report:
    report = Report(f"cup/cap relations up to index {max_index}", {}, [])
    for mode in MODES:
        for family, lhs, rhs in cupcap_relation_instances(max_index, mode):
            report.record(f"{mode}:{family}", eval_cupcap(lhs) == eval_cupcap(rhs), f"{lhs} != {rhs}")
    return report


def verify_omega(max_index: int = 6) -> Report:
    """sigma/delta relations both as maps of N and as cup/cap diagrams."""
    report = Report(f"sigma/delta relations up to index {max_index}", {}, [])
    for family, lhs, rhs in omega_relation_instances(max_index):
        as_maps = omega_word_value(lhs) == omega_word_value(rhs)
        report.record(f"map:{family}", as_maps, f"{lhs} vs {rhs}")
        for mode in MODES:
            a = eval_cupcap(omega_word_to_cupcap(lhs, mode))
            b = eval_cupcap(omega_word_to_cupcap(rhs, mode))
            same_frieze = a == GeneralDiagram.from_frieze(fz.from_endo(omega_word_value(lhs)))
            report.record(f"{mode}:{family}", a == b and same_frieze, f"{lhs} vs {rhs}")
    return report


# -- sampling ------------------------------------------------------------------

def random_diagram(rng: random.Random, n: int, circles: int = 0) -> TLDiagram:
    """A uniformly random noncrossing matching, drawn as a random Dyck path."""
    opens = [True] * n + [False] * n
    while True:
        rng.shuffle(opens)
        depth = 0
        for o in opens:
            depth += 1 if o else -1
            if depth < 0:
                break
        else:
            break
    stack_, pairs = [], []
    for pos, o in enumerate(opens):
        if o:
            stack_.append(pos)
        else:
            pairs.append((stack_.pop(), pos))
    return TLDiagram(n, tuple(pairs), circles)
