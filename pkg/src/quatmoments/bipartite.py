"""Bipartite twisted ribbon graphs for Wishart-type trace moments.

A product of ``m`` trace blocks with degrees j_1..j_m over matrices
``W = X* X`` expands into 2n factor slots, written +k for the plain
entry of X at position k and -k for the conjugated one (n = sum j).
Two pair partitions are fixed by the block structure: ``delta`` pairs k
with -k (the two slots of one ribbon) and ``sigma`` records which slots
are adjacent inside a trace block.  A census element is a third pair
partition ``gamma`` matching up equal variables; black vertices are the
blocks, white vertices the cycles of delta union gamma.

All statistics are computed from index classes: slot -k reads the entry
(A_k, a_k) and slot +k the entry (A_k, a_next(k)) with next cycling
inside the block; a gamma pair identifies the uppercase indices of its
slots and the lowercase indices on the sides determined by the signs.
White vertices w = uppercase classes, faces f = lowercase classes, and
chi = m + w - n + f.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .limits import BIPARTITE_EDGE_BOUND, ResourceLimitError
from .unionfind import UnionFind

WishartDegreeSeq = tuple[int, ...]
GammaPairing = tuple[tuple[int, int], ...]


def check_degrees(degrees: Sequence[int]) -> WishartDegreeSeq:
    degrees = tuple(int(j) for j in degrees)
    if any(j < 1 for j in degrees):
        raise ValueError("block degrees must be >= 1")
    return degrees


def delta_pairs(n: int) -> GammaPairing:
    """The built-in partition pairing slot k with -k."""
    return tuple((-k, k) for k in range(1, n + 1))


def sigma_pairs(degrees: Sequence[int]) -> GammaPairing:
    """The built-in partition recording adjacency inside each block:
    {k, -(k+1)} cyclically within every block."""
    degrees = check_degrees(degrees)
    pairs = []
    start = 1
    for j in degrees:
        for k in range(start, start + j):
            succ = start if k == start + j - 1 else k + 1
            pairs.append((-succ, k))
        start += j
    return tuple(sorted(pairs))


def _slot_order(n: int) -> list[int]:
    # Canonical enumeration order: -1, 1, -2, 2, ...
    out = []
    for k in range(1, n + 1):
        out.extend((-k, k))
    return out


def enumerate_gamma(degrees: Sequence[int],
                    colors: Optional[Sequence[int]] = None,
                    bound: int = BIPARTITE_EDGE_BOUND) -> Iterator[GammaPairing]:
    """All perfect matchings of the signed slots {-n..-1, 1..n}; with a
    color map t over 1..n, slots +-k carry color t(k) and only
    same-color slots match.  Uncolored count is (2n-1)!!."""
    degrees = check_degrees(degrees)
    n = sum(degrees)
    if n > bound:
        raise ResourceLimitError(
            f"edge count {n} exceeds the bipartite census bound {bound}")
    if colors is not None:
        colors = tuple(int(c) for c in colors)
        if len(colors) != n:
            raise ValueError("color map length must equal the edge count")

    def color_of(slot: int) -> int:
        return colors[abs(slot) - 1] if colors is not None else 0

    def rec(unused: tuple[int, ...]) -> Iterator[GammaPairing]:
        if not unused:
            yield ()
            return
        first = unused[0]
        rest = unused[1:]
        for idx, partner in enumerate(rest):
            if color_of(first) != color_of(partner):
                continue
            remaining = rest[:idx] + rest[idx + 1:]
            for tail in rec(remaining):
                yield ((first, partner),) + tail

    yield from rec(tuple(_slot_order(n)))


def white_cycles(gamma: GammaPairing, n: int) -> list[list[int]]:
    """Cycles of the 2-regular graph delta union gamma, as slot lists."""
    partner = {}
    for a, b in gamma:
        partner[a] = b
        partner[b] = a
    seen: set[int] = set()
    cycles = []
    for k in range(1, n + 1):
        for start in (-k, k):
            if start in seen:
                continue
            cycle = []
            slot = start
            use_delta = True
            while slot not in seen:
                seen.add(slot)
                cycle.append(slot)
                slot = -slot if use_delta else partner[slot]
                use_delta = not use_delta
            cycles.append(cycle)
    return cycles


def white_count(gamma: GammaPairing, n: int,
                colors: Optional[Sequence[int]] = None
                ) -> tuple[int, dict[int, int]]:
    """Number of white vertices, and the count per color when colored.
    Every cycle of delta union gamma is monochromatic under a valid
    coloring, so the per-color counts partition the total."""
    cycles = white_cycles(gamma, n)
    per_color: dict[int, int] = {}
    if colors is not None:
        for cycle in cycles:
            cycle_colors = {colors[abs(s) - 1] for s in cycle}
            if len(cycle_colors) != 1:
                raise ValueError("gamma does not respect the coloring")
            c = cycle_colors.pop()
            per_color[c] = per_color.get(c, 0) + 1
    return len(cycles), per_color


@dataclass(frozen=True)
class BipartiteGraph:
    degrees: WishartDegreeSeq
    gamma: GammaPairing
    colors: Optional[tuple[int, ...]]
    w: int
    w_by_color: tuple[tuple[int, int], ...]  # (color, count), sorted
    f: int
    chi: int

    @property
    def m(self) -> int:
        return len(self.degrees)

    @property
    def e(self) -> int:
        return sum(self.degrees)

    def components(self) -> list[list[int]]:
        """Black vertices grouped by connectivity through white vertices."""
        block_of = _block_table(self.degrees)
        uf = UnionFind(len(self.degrees))
        for a, b in self.gamma:
            uf.union(block_of[abs(a)], block_of[abs(b)])
        return uf.classes()


def _block_table(degrees: WishartDegreeSeq) -> dict[int, int]:
    block_of = {}
    k = 1
    for b, j in enumerate(degrees):
        for _ in range(j):
            block_of[k] = b
            k += 1
    return block_of


def _lowercase_next(degrees: WishartDegreeSeq) -> list[int]:
    """next[k-1] is the lowercase slot read by +k (0-based)."""
    nxt = []
    start = 0
    for j in degrees:
        for r in range(j):
            nxt.append(start + (r + 1) % j)
        start += j
    return nxt


def bipartite_stats(degrees: Sequence[int], gamma: GammaPairing,
                    colors: Optional[Sequence[int]] = None) -> BipartiteGraph:
    """Derived statistics (w, per-color w, f, chi) of one census element."""
    degrees = check_degrees(degrees)
    n = sum(degrees)
    m = len(degrees)
    nxt = _lowercase_next(degrees)
    upper = UnionFind(n)
    lower = UnionFind(n)

    def lower_slot(slot: int) -> int:
        k = abs(slot)
        return nxt[k - 1] if slot > 0 else k - 1

    for a, b in gamma:
        upper.union(abs(a) - 1, abs(b) - 1)
        lower.union(lower_slot(a), lower_slot(b))
    w = upper.class_count()
    f = lower.class_count()
    chi = m + w - n + f

    per_color: dict[int, int] = {}
    if colors is not None:
        colors = tuple(int(c) for c in colors)
        for members in upper.classes():
            class_colors = {colors[k] for k in members}
            if len(class_colors) != 1:
                raise ValueError("gamma does not respect the coloring")
            c = class_colors.pop()
            per_color[c] = per_color.get(c, 0) + 1
    return BipartiteGraph(degrees, tuple(gamma), colors, w,
                          tuple(sorted(per_color.items())), f, chi)


def enumerate_bipartite_graphs(degrees: Sequence[int],
                               colors: Optional[Sequence[int]] = None,
                               bound: int = BIPARTITE_EDGE_BOUND
                               ) -> Iterator[BipartiteGraph]:
    for gamma in enumerate_gamma(degrees, colors, bound):
        yield bipartite_stats(degrees, gamma, colors)


def gamma_word_expression(degrees: Sequence[int], gamma: GammaPairing):
    """The conjugate-alternating word product a census element encodes,
    plus the pairing of its factor positions induced by gamma.

    Block b of degree j contributes the word (conj Z, Z) repeated j
    times; slot -k sits at position 2(k-1), slot +k at 2(k-1)+1, and a
    gamma pair identifies the variables at its two slots.  The reduction
    value of that pairing must equal 4^(n-m) (-2)^chi of the bipartite
    graph; the test suite checks this exhaustively at small sizes.
    """
    from .wick import MomentExpr, VarRef

    degrees = check_degrees(degrees)
    var_of: dict[int, int] = {}
    for pid, (a, b) in enumerate(gamma, start=1):
        var_of[a] = pid
        var_of[b] = pid

    def position(slot: int) -> int:
        k = abs(slot)
        return 2 * (k - 1) + (1 if slot > 0 else 0)

    words = []
    k = 1
    for j in degrees:
        word = []
        for _ in range(j):
            word.append(VarRef(var_of[-k], conjugated=True))
            word.append(VarRef(var_of[k]))
            k += 1
        words.append(tuple(word))
    pairing = tuple(sorted(
        (min(position(a), position(b)), max(position(a), position(b)))
        for a, b in gamma))
    return MomentExpr(tuple(words)), pairing
