"""Terms of the endomorphism monoid O_n, block rewriting and the word problem.

A term is a tree of ``Unit``, ``Gen`` and ``Comp`` nodes; ``Comp(x, y)``
denotes x∘y with y applied first.  Normalization flattens a term into a
``BlockWord`` (a list whose items are ``Block`` values or the ``UNIT``
marker) and rewrites the leftmost redex until none is left.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Callable, Iterator, NamedTuple, Sequence, Union

from . import ordmap
from .errors import IndexOutOfRange, ParseError, SizeMismatch, ValidationError
from .ordmap import OrdMap


# -- terms ---------------------------------------------------------------------

@dataclass(frozen=True)
class Unit:
    pass


@dataclass(frozen=True)
class Gen:
    letter: str
    index: int


@dataclass(frozen=True)
class Comp:
    left: "Term"
    right: "Term"


Term = Union[Unit, Gen, Comp]


def compose_terms(factors: Sequence[Term]) -> Term:
    """Left-associated composite x1∘x2∘...; a single factor is returned as is."""
    if not factors:
        return Unit()
    acc = factors[0]
    for x in factors[1:]:
        acc = Comp(acc, x)
    return acc


def check_term(t: Term, n: int) -> None:
    for leaf in leaves(t):
        if isinstance(leaf, Gen):
            if leaf.letter not in ("p", "q"):
                raise ValidationError(f"unknown generator letter {leaf.letter!r}")
            if not 0 <= leaf.index <= n - 2:
                raise IndexOutOfRange(f"generator {leaf.letter}{leaf.index} outside 0..{n - 2} for n={n}")


def leaves(t: Term) -> Iterator[Term]:
    stack = [t]
    while stack:
        node = stack.pop()
        if isinstance(node, Comp):
            stack.append(node.right)
            stack.append(node.left)
        else:
            yield node


def term_size(t: Term) -> int:
    return sum(1 for _ in leaves(t))


# -- blocks --------------------------------------------------------------------

class Block(NamedTuple):
    letter: str
    i: int
    j: int

    @property
    def weight(self) -> int:
        return self.i - self.j + 2

    @property
    def singular(self) -> bool:
        return self.i == self.j

    def __str__(self):
        return f"{self.letter}[{self.i},{self.j}]"


UNIT = "1"
Item = Union[Block, str]


def P(i: int, j: int) -> Block:
    return Block("p", i, j)


def Q(i: int, j: int) -> Block:
    return Block("q", i, j)


def check_block(b: Block, n: int) -> None:
    if b.letter not in ("p", "q"):
        raise ValidationError(f"unknown block letter {b.letter!r}")
    if not 0 <= b.j <= b.i <= n - 2:
        raise IndexOutOfRange(f"block {b} needs 0 <= j <= i <= {n - 2}")


def to_blocks(t: Term) -> list[Item]:
    """Flatten a term; each generator becomes a singular block.

    A bare ``Unit`` is the empty composite.  Units inside a composition stay
    as explicit items until a unit reduction erases them.
    """
    if isinstance(t, Unit):
        return []
    out: list[Item] = []
    for leaf in leaves(t):
        if isinstance(leaf, Unit):
            out.append(UNIT)
        else:
            out.append(Block(leaf.letter, leaf.index, leaf.index))
    return out


def block_term(b: Block) -> Term:
    """p[i,j] as the chain p^i∘p^(i-1)∘...∘p^j."""
    return compose_terms([Gen(b.letter, x) for x in range(b.i, b.j - 1, -1)])


def blocks_term(blocks: Sequence[Block]) -> Term:
    return compose_terms([block_term(b) for b in blocks])


# -- redexes and block equations -----------------------------------------------

def is_redex(left: Block, right: Block) -> bool:
    if left.letter == right.letter:
        i, j = left.i, left.j
        k, l = right.i, right.j
        return k <= i or l <= j
    if left.letter == "p":
        # p[k,l] ∘ q[i,j]
        k, l = left.i, left.j
        i, j = right.i, right.j
        return j <= k + 1
    # q[i,j] ∘ p[k,l]
    i, j = left.i, left.j
    k, l = right.i, right.j
    return l <= i


class BlockEquation(NamedTuple):
    name: str
    sort: str  # rr, pq or qp
    letters: tuple[str, str]
    applies: Callable[[int, int, int, int], bool]
    rhs: Callable[[int, int, int, int], list[Block]]


# Arguments are (i, j, k, l) named as in the equations: for pp, qq and qp the
# left block carries [i,j] and the right [k,l]; for pq the left p-block
# carries [k,l] and the right q-block [i,j].
BLOCK_EQUATIONS: tuple[BlockEquation, ...] = (
    BlockEquation("Ipp", "rr", ("p", "p"), lambda i, j, k, l: k + 1 < j,
                  lambda i, j, k, l: [P(k, l), P(i, j)]),
    BlockEquation("IIpp", "rr", ("p", "p"), lambda i, j, k, l: k <= j <= k + 1,
                  lambda i, j, k, l: [P(i, l)]),
    BlockEquation("III.1pp", "rr", ("p", "p"), lambda i, j, k, l: l <= j < k <= i,
                  lambda i, j, k, l: [P(k - 1, l), P(i, j + 1)]),
    BlockEquation("III.2pp", "rr", ("p", "p"), lambda i, j, k, l: l <= j <= i < k,
                  lambda i, j, k, l: [P(i, l), P(k, j + 1)]),
    BlockEquation("III.3pp", "rr", ("p", "p"), lambda i, j, k, l: j < l <= k <= i,
                  lambda i, j, k, l: [P(k - 1, j), P(i, l)]),
    BlockEquation("Iqq", "rr", ("q", "q"), lambda i, j, k, l: k + 1 < j,
                  lambda i, j, k, l: [Q(k, l), Q(i, j)]),
    BlockEquation("IIqq", "rr", ("q", "q"), lambda i, j, k, l: j <= k + 1 and (l <= j or k <= i),
                  lambda i, j, k, l: [Q(max(i, k), min(j, l))]),
    BlockEquation("Ipq", "pq", ("p", "q"), lambda i, j, k, l: j <= k + 1 and i < l,
                  lambda i, j, k, l: [Q(i, j), P(k, l)]),
    BlockEquation("II.1pq", "pq", ("p", "q"), lambda i, j, k, l: l + 1 < j < i <= k,
                  lambda i, j, k, l: [P(j - 2, l), Q(i - 1, j), P(k, i)]),
    BlockEquation("II.1.1pq", "pq", ("p", "q"), lambda i, j, k, l: l + 1 < j == i <= k,
                  lambda i, j, k, l: [P(j - 2, l), P(k, i)]),
    BlockEquation("II.2pq", "pq", ("p", "q"), lambda i, j, k, l: l <= i and j <= l + 1 and j < i <= k,
                  lambda i, j, k, l: [Q(i - 1, j), P(k, i)]),
    BlockEquation("II.2.1pq", "pq", ("p", "q"), lambda i, j, k, l: l <= i and j <= l + 1 and j == i <= k,
                  lambda i, j, k, l: [P(k, i)]),
    BlockEquation("II.3pq", "pq", ("p", "q"), lambda i, j, k, l: l + 1 < j <= k + 1 <= i,
                  lambda i, j, k, l: [P(j - 2, l), Q(i, j)]),
    BlockEquation("II.4pq", "pq", ("p", "q"), lambda i, j, k, l: j <= l + 1 <= k + 1 <= i,
                  lambda i, j, k, l: [Q(i, j)]),
    BlockEquation("Iqp", "qp", ("q", "p"), lambda i, j, k, l: l <= i and k + 1 < j,
                  lambda i, j, k, l: [P(k, l), Q(i, j)]),
    BlockEquation("II.1qp", "qp", ("q", "p"), lambda i, j, k, l: l < j < i < k,
                  lambda i, j, k, l: [P(j - 1, l), Q(i, j + 1), P(k, i + 1)]),
    BlockEquation("II.1.1qp", "qp", ("q", "p"), lambda i, j, k, l: l < j == i < k,
                  lambda i, j, k, l: [P(j - 1, l), P(k, i + 1)]),
    BlockEquation("II.2qp", "qp", ("q", "p"), lambda i, j, k, l: j <= k + 1 and j <= l <= i < k,
                  lambda i, j, k, l: [Q(i, j), P(k, i + 1)]),
    BlockEquation("II.3qp", "qp", ("q", "p"), lambda i, j, k, l: j <= k + 1 and l < j < i and k <= i,
                  lambda i, j, k, l: [P(j - 1, l), Q(i, j + 1)]),
    BlockEquation("II.3.1qp", "qp", ("q", "p"), lambda i, j, k, l: j <= k + 1 and l < j == i and k <= i,
                  lambda i, j, k, l: [P(j - 1, l)]),
    BlockEquation("II.4qp", "qp", ("q", "p"), lambda i, j, k, l: j <= l <= k <= i,
                  lambda i, j, k, l: [Q(i, j)]),
)

EQUATIONS_BY_NAME = {eq.name: eq for eq in BLOCK_EQUATIONS}


def _roles(left: Block, right: Block) -> tuple[int, int, int, int]:
    if left.letter == "p" and right.letter == "q":
        return right.i, right.j, left.i, left.j
    return left.i, left.j, right.i, right.j


def matching_equations(left: Block, right: Block) -> list[BlockEquation]:
    """Every block equation whose side condition holds for this adjacent pair."""
    args = _roles(left, right)
    return [eq for eq in BLOCK_EQUATIONS
            if eq.letters == (left.letter, right.letter) and eq.applies(*args)]


def classify_redex(left: Block, right: Block) -> tuple[str, str] | None:
    """Return (sort, equation name) for a redex, or None for a normal pair."""
    if not is_redex(left, right):
        return None
    (eq,) = matching_equations(left, right)
    return eq.sort, eq.name


def rewrite_pair(left: Block, right: Block) -> tuple[str, list[Block]] | None:
    found = classify_redex(left, right)
    if found is None:
        return None
    eq = EQUATIONS_BY_NAME[found[1]]
    return eq.name, eq.rhs(*_roles(left, right))


def all_blocks(n: int) -> list[Block]:
    return [Block(letter, i, j) for letter in "pq" for i in range(n - 1) for j in range(i + 1)]


def check_equation_coverage(max_rank: int = 8) -> None:
    """Every redex matches exactly one block equation; non-redexes match none.

    Results of each rewrite must also be well-formed blocks of the same rank.
    """
    blocks = all_blocks(max_rank)
    for left in blocks:
        for right in blocks:
            found = matching_equations(left, right)
            if is_redex(left, right):
                if len(found) != 1:
                    names = [eq.name for eq in found]
                    raise AssertionError(f"{left}∘{right} matches {names}")
                for b in found[0].rhs(*_roles(left, right)):
                    check_block(b, max_rank)
            elif found:
                raise AssertionError(f"non-redex {left}∘{right} matches {found[0].name}")


check_equation_coverage()


# -- complexity and one-step reduction -----------------------------------------

class Mu(NamedTuple):
    m1: int
    m2: int


def complexity_mu(word: Sequence[Item]) -> Mu:
    blocks = [x for x in word if x != UNIT]
    m1 = sum(b.weight for b in blocks)
    confrontations = sum(
        1
        for a in range(len(blocks))
        for b in range(a + 1, len(blocks))
        if is_redex(blocks[a], blocks[b])
    )
    return Mu(m1, confrontations + (len(word) - len(blocks)))


class Step(NamedTuple):
    equation: str
    position: int
    word: tuple[Item, ...]


def reduce_step(word: Sequence[Item]) -> Step | None:
    """Rewrite the leftmost redex or unit; None when the word is normal."""
    for pos, item in enumerate(word):
        if item == UNIT:
            return Step("unit", pos, tuple(word[:pos]) + tuple(word[pos + 1:]))
        if pos + 1 < len(word) and word[pos + 1] != UNIT:
            rewritten = rewrite_pair(item, word[pos + 1])
            if rewritten is not None:
                name, rhs = rewritten
                return Step(name, pos, tuple(word[:pos]) + tuple(rhs) + tuple(word[pos + 2:]))
    return None


def normalize_word(word: Sequence[Item]) -> tuple[tuple[Block, ...], list[Step]]:
    trace: list[Step] = []
    current = tuple(word)
    while (step := reduce_step(current)) is not None:
        trace.append(step)
        current = step.word
    return current, trace


def normalize(t: Term, n: int) -> tuple[tuple[Block, ...], list[Step]]:
    check_term(t, n)
    return normalize_word(to_blocks(t))


def validate_normal_form(blocks: Sequence[Block]) -> bool:
    for a, b in zip(blocks, blocks[1:]):
        if a.letter == b.letter:
            ok = a.i < b.i and a.j < b.j
        elif a.letter == "p":
            ok = a.i + 1 < b.j
        else:
            ok = a.i < b.j
        if not ok:
            return False
    return True


# -- evaluation and the word problem -------------------------------------------

def block_map(b: Block, n: int) -> OrdMap:
    check_block(b, n)
    values = list(range(n))
    if b.letter == "p":
        for x in range(b.j + 1, b.i + 2):
            values[x] = x - 1
    else:
        for x in range(b.j, b.i + 1):
            values[x] = b.i + 1
    return OrdMap(n, n, tuple(values))


def sigma_word(word: Sequence[Item], n: int) -> OrdMap:
    return ordmap.compose_all(
        (block_map(b, n) for b in word if b != UNIT), n)


def sigma(t: Term, n: int) -> OrdMap:
    if isinstance(t, Unit):
        return ordmap.identity(n)
    if isinstance(t, Gen):
        return ordmap.generator(n, t.letter, t.index)
    return ordmap.after(sigma(t.left, n), sigma(t.right, n))


def normal_form_of_endo(f: OrdMap) -> tuple[Block, ...]:
    """Read the normal form off the bottom and top points of f."""
    pc = ordmap.classify_points(f)
    bottoms = sorted([(x, "p") for x in pc.bottom_p] + [(x, "q") for x in pc.bottom_q])
    tops = sorted([(x, "p") for x in pc.top_p] + [(x, "q") for x in pc.top_q])
    assert len(bottoms) == len(tops), (bottoms, tops)
    out = []
    for (bottom, kind), (top, top_kind) in zip(bottoms, tops):
        assert kind == top_kind, f"bottom {bottom} is a {kind}-point but top {top} is a {top_kind}-point"
        out.append(Block(kind, bottom - 1, top))
    return tuple(out)


def equal(x: Term, y: Term, n: int) -> bool:
    by_map = sigma(x, n) == sigma(y, n)
    by_normal_form = normalize(x, n)[0] == normalize(y, n)[0]
    assert by_map == by_normal_form, "σ and normal forms disagree"
    return by_map


def enumerate_normal_forms(n: int) -> list[tuple[Block, ...]]:
    """Every block sequence satisfying the normal-form conditions, by search."""
    blocks = all_blocks(n)
    out: list[tuple[Block, ...]] = []

    def extend(prefix: list[Block]):
        out.append(tuple(prefix))
        for b in blocks:
            if not prefix or validate_normal_form([prefix[-1], b]):
                prefix.append(b)
                extend(prefix)
                prefix.pop()

    extend([])
    return out


# -- equation instances --------------------------------------------------------

def _g(letter: str, i: int) -> Gen:
    return Gen(letter, i)


def defining_equations(n: int) -> Iterator[tuple[str, Term, Term]]:
    """Instances (family, lhs, rhs) of the generator equations over all legal indices."""
    gens = [Gen(letter, i) for letter in "pq" for i in range(n - 1)]
    for x in gens:
        yield "unit", Comp(Unit(), x), x
        yield "unit", Comp(x, Unit()), x
    for x in gens:
        for y in gens:
            for z in gens:
                yield "assoc", Comp(Comp(x, y), z), Comp(x, Comp(y, z))
    top = n - 2
    for r in "pq":
        for i in range(top + 1):
            for j in range(top + 1):
                if j + 1 < i:
                    yield f"{r}1", compose_terms([_g(r, i), _g(r, j)]), compose_terms([_g(r, j), _g(r, i)])
            yield f"{r}2", compose_terms([_g(r, i), _g(r, i)]), _g(r, i)
        for i in range(top):
            a = compose_terms([_g(r, i), _g(r, i + 1), _g(r, i)])
            b = compose_terms([_g(r, i + 1), _g(r, i), _g(r, i + 1)])
            c = (compose_terms([_g(r, i), _g(r, i + 1)]) if r == "p"
                 else compose_terms([_g(r, i + 1), _g(r, i)]))
            yield f"{r}3", a, b
            yield f"{r}3", b, c
    for i in range(top + 1):
        for j in range(top + 1):
            if j < i or i + 1 < j:
                yield "pq", compose_terms([_g("p", i), _g("q", j)]), compose_terms([_g("q", j), _g("p", i)])
        yield "pq1", compose_terms([_g("p", i), _g("q", i)]), _g("p", i)
        yield "qp1", compose_terms([_g("q", i), _g("p", i)]), _g("q", i)
    for i in range(top):
        yield "pq2", compose_terms([_g("p", i), _g("q", i + 1)]), _g("q", i + 1)
        yield "qp2", compose_terms([_g("q", i + 1), _g("p", i)]), _g("p", i)


def block_equation_instances(n: int) -> Iterator[tuple[str, tuple[Block, ...], tuple[Block, ...]]]:
    blocks = all_blocks(n)
    for left in blocks:
        for right in blocks:
            for eq in matching_equations(left, right):
                yield eq.name, (left, right), tuple(eq.rhs(*_roles(left, right)))


# -- text syntax ---------------------------------------------------------------

_ATOM = re.compile(r"\s*(?:(1)|([pq])(?:(\d+)|\[\s*(\d+)\s*,\s*(\d+)\s*\]))\s*")


def _scan(text: str) -> list[tuple[str, int, int] | None]:
    if not text.strip():
        raise ParseError("empty term", 0)
    atoms = []
    pos = 0
    while True:
        m = _ATOM.match(text, pos)
        if not m:
            raise ParseError(f"expected 1, pN or p[i,j], found {text[pos:pos + 8]!r}", pos)
        if m.group(1):
            atoms.append(None)
        elif m.group(3) is not None:
            atoms.append((m.group(2), int(m.group(3)), int(m.group(3))))
        else:
            atoms.append((m.group(2), int(m.group(4)), int(m.group(5))))
        pos = m.end()
        if pos == len(text):
            return atoms
        if text[pos] != ".":
            raise ParseError(f"expected '.', found {text[pos]!r}", pos)
        pos += 1


def parse_blocks(text: str, n: int) -> list[Item]:
    """Parse into a block word, keeping explicit units."""
    out: list[Item] = []
    for atom in _scan(text):
        if atom is None:
            out.append(UNIT)
        else:
            b = Block(*atom)
            check_block(b, n)
            out.append(b)
    return out


def parse_term(text: str, n: int) -> Term:
    factors: list[Term] = []
    for item in parse_blocks(text, n):
        if item == UNIT:
            factors.append(Unit())
        elif item.singular:
            factors.append(Gen(item.letter, item.i))
        else:
            factors.extend(Gen(item.letter, x) for x in range(item.i, item.j - 1, -1))
    return compose_terms(factors)


def format_blocks(blocks: Sequence[Item]) -> str:
    return ".".join(str(b) for b in blocks) if blocks else "1"


def format_term(t: Term) -> str:
    parts = []
    for leaf in leaves(t):
        parts.append("1" if isinstance(leaf, Unit) else f"{leaf.letter}{leaf.index}")
    return ".".join(parts)


def require_same_rank(n1: int, n2: int) -> None:
    if n1 != n2:
        raise SizeMismatch(f"terms have different ranks {n1} and {n2}")


# -- sampling ------------------------------------------------------------------

def random_term(rng: random.Random, n: int, size: int, unit_rate: float = 0.1) -> Term:
    """A random composite tree with ``size`` leaves (units mixed in when n < 2)."""
    if size <= 1:
        if n < 2 or rng.random() < unit_rate:
            return Unit()
        return Gen(rng.choice("pq"), rng.randrange(n - 1))
    split = rng.randint(1, size - 1)
    return Comp(random_term(rng, n, split, unit_rate), random_term(rng, n, size - split, unit_rate))
