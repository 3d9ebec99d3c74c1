"""Vertical stacking of planar matchings by path tracing.

A matching lives on the points of Z∖{0} inside a window: positive points are
on the top edge, negative points on the bottom edge.  Beyond the window of
type (n, m) every point is on a through-strand [-(m+k), n+k], k >= 1.
"""

from __future__ import annotations

from typing import Iterable

Pair = tuple[int, int]


def tail(n: int, m: int, upto_n: int) -> list[Pair]:
    """Through-strands [-(m+k), n+k] for n+k <= upto_n."""
    return [(-(m + k), n + k) for k in range(1, upto_n - n + 1)]


def stack(upper: Iterable[Pair], upper_type: tuple[int, int],
          lower: Iterable[Pair], lower_type: tuple[int, int]) -> tuple[list[Pair], tuple[int, int], int]:
    """Put ``lower`` below ``upper``; return (pairs, window type, closed loops).

    The bottom edge of ``upper`` is glued to the top edge of ``lower`` and both
    windows are widened to a common seam length before tracing.
    """
    n1, m1 = upper_type
    n2, m2 = lower_type
    seam = max(m1, n2)
    top = n1 + seam - m1
    bottom = m2 + seam - n2
    up = list(upper) + tail(n1, m1, top)
    lo = list(lower) + tail(n2, m2, seam)

    # nodes: ("t", x) top edge, ("s", x) seam, ("b", x) bottom edge
    above: dict[tuple[str, int], tuple[str, int]] = {}
    below: dict[tuple[str, int], tuple[str, int]] = {}
    for a, b in up:
        na = ("t", a) if a > 0 else ("s", -a)
        nb = ("t", b) if b > 0 else ("s", -b)
        above[na], above[nb] = nb, na
    for a, b in lo:
        na = ("s", a) if a > 0 else ("b", -a)
        nb = ("s", b) if b > 0 else ("b", -b)
        below[na], below[nb] = nb, na

    seen: set[tuple[str, int]] = set()
    pairs: list[Pair] = []
    starts = [("t", x) for x in range(1, top + 1)] + [("b", x) for x in range(1, bottom + 1)]
    for start in starts:
        if start in seen:
            continue
        side = above if start[0] == "t" else below
        node = start
        while True:
            nxt = side[node]
            if nxt[0] != "s":
                break
            seen.add(nxt)
            side = below if side is above else above
            node = nxt
        seen.add(start)
        seen.add(nxt)
        ends = sorted(x if kind == "t" else -x for kind, x in (start, nxt))
        pairs.append((ends[0], ends[1]))

    loops = 0
    for x in range(1, seam + 1):
        node = ("s", x)
        if node in seen:
            continue
        loops += 1
        side = above
        while True:
            seen.add(node)
            node = side[node]
            side = below if side is above else above
            if node == ("s", x):
                break
    return sorted(pairs), (top, bottom), loops


def is_planar(pairs: Iterable[Pair], n: int, m: int) -> bool:
    """Non-crossing check for a matching on top 1..n and bottom 1..m.

    The boundary is read as bottom 1..m followed by top n..1; a matching is
    planar exactly when its chords nest like balanced parentheses.
    """
    def position(x: int) -> int:
        return -x - 1 if x < 0 else m + n - x

    chords = sorted(tuple(sorted((position(a), position(b)))) for a, b in pairs)
    closing = {}
    for a, b in chords:
        closing[a] = b
        closing[b] = None
    stack_: list[int] = []
    for pos in range(n + m):
        if pos not in closing:
            return False
        if closing[pos] is not None:
            stack_.append(closing[pos])
        elif not stack_ or stack_.pop() != pos:
            return False
    return not stack_
