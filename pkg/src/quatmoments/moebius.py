"""Twisted ribbon graphs on labeled vertices and their census.

A graph is a perfect matching of the ``2n`` half-edges hanging off ``m``
vertices of prescribed degrees, plus a twist flag per edge.  Half-edges
are numbered 0..2n-1, consecutively around each vertex in rotation
order.

Faces are defined through index classes: the corner before half-edge
``p`` of a degree-``d`` vertex carries an index slot, half-edge ``p``
spans the slot pair (row, col) = (corner p, corner p+1 mod d), an
untwisted edge identifies row/col crosswise and a twisted edge
identifies row with row and col with col.  The number of classes is the
face count; the Euler characteristic is v - e + f.  An independent
boundary-walk face counter (following ribbon sides through vertex
corners, twists exchanging sides) is provided as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence

from .limits import WIGNER_DEGREE_BOUND, ResourceLimitError
from .unionfind import UnionFind
from .wick import MomentExpr, Pairing, VarRef, _check_pairing

DegreeSeq = tuple[int, ...]
ColorMap = tuple[int, ...]
Matching = tuple[tuple[int, int], ...]
Twists = tuple[bool, ...]


def check_degrees(degrees: Sequence[int]) -> DegreeSeq:
    degrees = tuple(int(j) for j in degrees)
    if any(j < 1 for j in degrees):
        raise ValueError("vertex degrees must be >= 1")
    return degrees


def half_edge_layout(degrees: DegreeSeq) -> tuple[list[int], list[int], list[int]]:
    """Per half-edge: vertex index, local position, vertex start offset."""
    vertex_of, local_pos, offset_of = [], [], []
    offset = 0
    for v, d in enumerate(degrees):
        for p in range(d):
            vertex_of.append(v)
            local_pos.append(p)
            offset_of.append(offset)
        offset += d
    return vertex_of, local_pos, offset_of


def _face_union(degrees: DegreeSeq, matching: Matching, twists: Twists) -> UnionFind:
    # Corner c at a vertex with start offset o and degree d is the index
    # slot shared by half-edges o+c-1 (as col) and o+c (as row).
    vertex_of, local_pos, offset_of = half_edge_layout(degrees)
    total = sum(degrees)
    uf = UnionFind(total)
    for (p, q), twist in zip(matching, twists):
        op, dp = offset_of[p], degrees[vertex_of[p]]
        oq, dq = offset_of[q], degrees[vertex_of[q]]
        row_p = p
        col_p = op + (local_pos[p] + 1) % dp
        row_q = q
        col_q = oq + (local_pos[q] + 1) % dq
        if twist:
            uf.union(row_p, row_q)
            uf.union(col_p, col_q)
        else:
            uf.union(row_p, col_q)
            uf.union(col_p, row_q)
    return uf


def face_count(degrees: DegreeSeq, matching: Matching, twists: Twists) -> int:
    return _face_union(degrees, matching, twists).class_count()


@dataclass(frozen=True)
class MoebiusGraph:
    degrees: DegreeSeq
    matching: Matching
    twists: Twists
    colors: Optional[ColorMap] = None

    @property
    def v(self) -> int:
        return len(self.degrees)

    @property
    def e(self) -> int:
        return len(self.matching)

    @property
    def f(self) -> int:
        return face_count(self.degrees, self.matching, self.twists)

    @property
    def chi(self) -> int:
        return self.v - self.e + self.f

    def index_classes(self) -> list[list[int]]:
        """Partition of the index slots whose class count is ``f``."""
        return _face_union(self.degrees, self.matching, self.twists).classes()

    def components(self) -> list[list[int]]:
        """Partition of the vertices into connected components."""
        vertex_of, _, _ = half_edge_layout(self.degrees)
        uf = UnionFind(self.v)
        for p, q in self.matching:
            uf.union(vertex_of[p], vertex_of[q])
        return uf.classes()

    def component_stats(self) -> list[tuple[int, int, int, int]]:
        """Per component (v, e, f, chi); chi sums to the global one."""
        vertex_of, _, offset_of = half_edge_layout(self.degrees)
        comps = self.components()
        comp_of_vertex = {}
        for idx, members in enumerate(comps):
            for v in members:
                comp_of_vertex[v] = idx
        uf = _face_union(self.degrees, self.matching, self.twists)
        face_comp: dict[int, int] = {}
        for slot, label in enumerate(uf.labels()):
            face_comp[label] = comp_of_vertex[vertex_of[slot]]
        out = []
        for idx, members in enumerate(comps):
            v = len(members)
            e = sum(1 for p, q in self.matching
                    if comp_of_vertex[vertex_of[p]] == idx)
            f = sum(1 for c in face_comp.values() if c == idx)
            out.append((v, e, f, v - e + f))
        return out


@lru_cache(maxsize=None)
def _twist_table(n_edges: int) -> tuple[Twists, ...]:
    """All twist assignments for n edges, as a binary counter."""
    return tuple(
        tuple(bool((code >> i) & 1) for i in range(n_edges))
        for code in range(1 << n_edges))


def iter_matchings(items: Sequence[int],
                   colors: Optional[Sequence[int]] = None) -> Iterator[Matching]:
    """Perfect matchings of ``items`` in canonical order (lowest unmatched
    element paired first); matched elements must agree in color."""
    items = tuple(items)
    if len(items) % 2:
        return

    def rec(unused: tuple[int, ...]) -> Iterator[Matching]:
        if not unused:
            yield ()
            return
        first = unused[0]
        rest = unused[1:]
        for idx, partner in enumerate(rest):
            if colors is not None and colors[first] != colors[partner]:
                continue
            remaining = rest[:idx] + rest[idx + 1:]
            for tail in rec(remaining):
                yield ((first, partner),) + tail

    yield from rec(items)


def enumerate_graphs(degrees: Sequence[int],
                     colors: Optional[Sequence[int]] = None,
                     bound: int = WIGNER_DEGREE_BOUND) -> Iterator[MoebiusGraph]:
    """Census of all (matching, twist assignment) pairs for the given
    vertex degrees; with a color map only same-color half-edges match.

    Uncolored census size is (2n-1)!! * 2^n.  Matchings come in
    lexicographic order, twist flags count up in binary.
    """
    degrees = check_degrees(degrees)
    total = sum(degrees)
    if total > bound:
        raise ResourceLimitError(
            f"total degree {total} exceeds census bound {bound}")
    if colors is not None:
        colors = tuple(int(c) for c in colors)
        if len(colors) != total:
            raise ValueError("color map length must equal the total degree")
    if total % 2:
        return
    n_edges = total // 2
    for matching in iter_matchings(range(total), colors):
        for twists in _twist_table(n_edges):
            yield MoebiusGraph(degrees, matching, twists, colors)


def graphs_from_words(expr: MomentExpr, pairing: Pairing) -> MoebiusGraph:
    """The one graph describing a pairing of a word product: vertices are
    the words, the matching is the pairing, and an edge is twisted
    exactly when the matched factors carry equal conjugation flags."""
    variables = _check_pairing(expr, pairing)
    for word in expr.words:
        if not word:
            raise ValueError("words must be nonempty")
        for factor in word:
            if not isinstance(factor, VarRef) or factor.is_real:
                raise ValueError(
                    "graphs_from_words requires quaternion variables only")
    degrees = tuple(len(w) for w in expr.words)
    matching = tuple(sorted((min(a, b), max(a, b)) for a, b in pairing))
    twists = tuple(variables[a].conjugated == variables[b].conjugated
                   for a, b in matching)
    return MoebiusGraph(degrees, matching, twists)


# ---------------------------------------------------------------------------
# Independent face counter: walk the ribbon boundary.
# ---------------------------------------------------------------------------


def boundary_walk_faces(graph: MoebiusGraph) -> tuple[int, list[int]]:
    """Face count by tracing boundary cycles of the thickened graph.

    Each half-edge gets two side points (clockwise / counterclockwise of
    the stub); boundary arcs run along vertex corners between adjacent
    stubs and along ribbon sides, with a twist exchanging sides.  Returns
    the number of cycles and, per index slot, the cycle its corner arc
    lies on, so the partition can be compared with the index classes.
    """
    degrees = graph.degrees
    vertex_of, local_pos, offset_of = half_edge_layout(degrees)
    total = sum(degrees)

    def cw(h: int) -> int:
        return 2 * h

    def ccw(h: int) -> int:
        return 2 * h + 1

    arc_disk = [0] * (2 * total)
    arc_ribbon = [0] * (2 * total)
    corner_arc: list[tuple[int, int]] = [(0, 0)] * total
    offset = 0
    for d in degrees:
        for p in range(d):
            h = offset + p
            h_next = offset + (p + 1) % d
            a, b = ccw(h), cw(h_next)
            arc_disk[a] = b
            arc_disk[b] = a
            # This disk arc crosses the corner shared by stubs p, p+1,
            # i.e. the col slot of half-edge h.
            corner_arc[offset + (p + 1) % d] = (a, b)
        offset += d
    for (p, q), twist in zip(graph.matching, graph.twists):
        if twist:
            pairs = ((cw(p), cw(q)), (ccw(p), ccw(q)))
        else:
            pairs = ((cw(p), ccw(q)), (ccw(p), cw(q)))
        for a, b in pairs:
            arc_ribbon[a] = b
            arc_ribbon[b] = a

    # Every point lies on one disk arc and one ribbon arc, so the
    # boundary cycles are the alternating disk/ribbon walks.
    cycle_of = [-1] * (2 * total)
    cycles = 0
    for start in range(2 * total):
        if cycle_of[start] != -1:
            continue
        point = start
        use_disk = True
        while cycle_of[point] == -1:
            cycle_of[point] = cycles
            point = arc_disk[point] if use_disk else arc_ribbon[point]
            use_disk = not use_disk
        cycles += 1
    slot_cycle = [cycle_of[corner_arc[slot][0]] for slot in range(total)]
    return cycles, slot_cycle
