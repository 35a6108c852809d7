"""Exhaustive cross-validation of the three moment evaluation routes.

For every product of real-part blocks over quaternion Gaussian
variables, up to a position bound, three independently implemented
values must coincide exactly:

* the brute-force component expansion,
* the sum of rule-based single-pairing reductions,
* the graph sum 4^(n-m) * sum of (-2)^chi,

and each single-pairing reduction must equal 4^(n-m) (-2)^chi of the
one graph its pairing induces.

Expressions are enumerated up to the symmetries that provably preserve
the moment: block order (real factors commute), cyclic rotation inside
a block, renaming variables, and swapping a variable with its
conjugate.  Those symmetries are themselves exercised by randomized
tests elsewhere; here each orbit is checked once through a canonical
representative.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from itertools import permutations, product
from typing import Iterator

from .combinat import partitions, restricted_growth_strings
from .engine import word_moment_via_graphs
from .moebius import graphs_from_words
from .quaternion import Quat
from .wick import (MomentExpr, enumerate_wick_pairings, isserlis_moment,
                   wick_reduce, zvar)

# Blocks as tuples of ints (variable id << 1 | conjugated bit); the
# compact encoding keeps the orbit dedup affordable.
BlockKey = tuple[int, ...]
ExprKey = tuple[BlockKey, ...]

_VARIANT_CAP = 384


def _normalize(blocks: ExprKey) -> ExprKey:
    """Relabel ids in first-appearance order and conjugate-flip each id
    so that its first occurrence is plain."""
    relabel: dict[int, int] = {}
    flip: dict[int, int] = {}
    out = []
    for block in blocks:
        nb = []
        for item in block:
            vid = item >> 1
            conj = item & 1
            new = relabel.get(vid)
            if new is None:
                relabel[vid] = new = len(relabel) + 1
                flip[vid] = conj
            nb.append((new << 1) | (conj ^ flip[vid]))
        out.append(tuple(nb))
    return tuple(out)


@lru_cache(maxsize=65536)
def _block_profile(block: BlockKey) -> tuple[BlockKey, tuple[BlockKey, ...]]:
    """Intrinsic (relabeling-invariant) canonical pattern of one block,
    and the rotations that achieve it."""
    rotations = [block[r:] + block[:r] for r in range(len(block))]
    patterns = [_normalize((rot,))[0] for rot in rotations]
    best = min(patterns)
    keep = tuple(rot for rot, pat in zip(rotations, patterns) if pat == best)
    return best, keep


@lru_cache(maxsize=65536)
def _is_rotation_minimal(block: BlockKey) -> bool:
    """Whether the block, as laid out, realizes its intrinsic pattern.
    Every orbit has a representative whose blocks all do, so candidates
    failing this are skipped before the full canonical search."""
    return _normalize((block,))[0] == _block_profile(block)[0]


def _distinct_permutations(items: list) -> Iterator[tuple]:
    """Permutations of a multiset without repeating equal arrangements."""
    counts = Counter(items)
    keys = sorted(counts)
    total = len(items)

    def rec(prefix: list) -> Iterator[tuple]:
        if len(prefix) == total:
            yield tuple(prefix)
            return
        for key in keys:
            if counts[key]:
                counts[key] -= 1
                prefix.append(key)
                yield from rec(prefix)
                prefix.pop()
                counts[key] += 1

    yield from rec([])


def canonical_key(blocks: ExprKey) -> ExprKey:
    """A deterministic orbit representative under block permutation and
    per-block rotation (composed with the relabeling normalisation).

    Only rotations realizing a block's intrinsic minimal pattern and
    permutations of blocks with equal intrinsic pattern are explored;
    both restrictions are themselves relabeling-invariant, so the result
    is constant on orbits.  Past a variant cap a deterministic
    non-minimal form is returned, which only means some (cheap) orbits
    are checked more than once.
    """
    profiles = [_block_profile(b) for b in blocks]
    iso = [(-len(b), profiles[i][0]) for i, b in enumerate(blocks)]
    order = sorted(range(len(blocks)), key=lambda i: iso[i])
    groups: list[list[int]] = []
    for i in order:
        if groups and iso[groups[-1][-1]] == iso[i]:
            groups[-1].append(i)
        else:
            groups.append([i])

    # Interchangeable blocks only matter through their raw content, so
    # permutations are taken over content multisets.  Count before
    # materializing anything.
    variants = 1
    group_contents = []
    for g in groups:
        contents = [blocks[i] for i in g]
        group_contents.append(contents)
        count = factorial(len(contents))
        for mult in Counter(contents).values():
            count //= factorial(mult)
        variants *= count
    for i, _ in enumerate(blocks):
        variants *= len(profiles[i][1])

    if variants > _VARIANT_CAP:
        fixed = tuple(profiles[i][1][0] for i in order)
        return _normalize(fixed)

    group_seqs = [list(_distinct_permutations(c)) for c in group_contents]

    rotation_options = {b: _block_profile(b)[1] for b in blocks}
    best: list[BlockKey] | None = None
    for chosen in product(*group_seqs):
        ordering = [b for seq in chosen for b in seq]
        for rots in product(*(rotation_options[b] for b in ordering)):
            # Incremental normalisation with early abort against best.
            relabel: dict[int, int] = {}
            flip: dict[int, int] = {}
            out: list[BlockKey] = []
            verdict = 0  # 0 equal so far, 1 strictly smaller, -1 larger
            for bi, block in enumerate(rots):
                nb = []
                for item in block:
                    vid = item >> 1
                    conj = item & 1
                    new = relabel.get(vid)
                    if new is None:
                        relabel[vid] = new = len(relabel) + 1
                        flip[vid] = conj
                    nb.append((new << 1) | (conj ^ flip[vid]))
                nbt = tuple(nb)
                out.append(nbt)
                if best is not None and verdict == 0:
                    if nbt > best[bi]:
                        verdict = -1
                        break
                    if nbt < best[bi]:
                        verdict = 1
            if verdict >= 0 and (best is None or verdict == 1):
                best = out
    return tuple(best)  # type: ignore[arg-type]


def _even_rgs(length: int, max_ids: int) -> Iterator[tuple[int, ...]]:
    for rgs in restricted_growth_strings(length, max_ids):
        if all(c % 2 == 0 for c in Counter(rgs).values()):
            yield rgs


def canonical_re_exprs(max_positions: int,
                       max_ids: int = 3) -> Iterator[MomentExpr]:
    """One representative per orbit of real-part block products with an
    even number of occurrences of every variable."""
    seen: set[ExprKey] = set()
    for total in range(2, max_positions + 1, 2):
        for sizes in partitions(total):
            for rgs in _even_rgs(total, max_ids):
                first_pos = {}
                for pos, vid in enumerate(rgs):
                    first_pos.setdefault(vid, pos)
                free = [pos for pos in range(total)
                        if first_pos[rgs[pos]] != pos]
                for bits in product((0, 1), repeat=len(free)):
                    conj = [0] * total
                    for pos, bit in zip(free, bits):
                        conj[pos] = bit
                    blocks = []
                    start = 0
                    for j in sizes:
                        blocks.append(tuple(
                            ((rgs[p] + 1) << 1) | conj[p]
                            for p in range(start, start + j)))
                        start += j
                    if not all(_is_rotation_minimal(b) for b in blocks):
                        continue
                    key = canonical_key(tuple(blocks))
                    if key in seen:
                        continue
                    seen.add(key)
                    yield MomentExpr(tuple(
                        tuple(zvar(item >> 1, bool(item & 1))
                              for item in block)
                        for block in key))


def odd_count_exprs(max_positions: int,
                    max_ids: int = 3) -> Iterator[MomentExpr]:
    """Expressions in which some variable occurs an odd number of times;
    their moment is zero on every route."""
    for total in range(1, max_positions + 1):
        for sizes in partitions(total):
            for rgs in restricted_growth_strings(total, max_ids):
                if all(c % 2 == 0 for c in Counter(rgs).values()):
                    continue
                blocks = []
                start = 0
                for j in sizes:
                    blocks.append(tuple(zvar(rgs[p] + 1)
                                        for p in range(start, start + j)))
                    start += j
                yield MomentExpr(tuple(blocks))


@dataclass
class SelfTestReport:
    max_positions: int
    max_ids: int
    exprs_checked: int = 0
    pairings_checked: int = 0
    zero_exprs_checked: int = 0
    elapsed_seconds: float = 0.0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json_dict(self) -> dict:
        return {
            "max_positions": self.max_positions,
            "max_ids": self.max_ids,
            "exprs_checked": self.exprs_checked,
            "pairings_checked": self.pairings_checked,
            "zero_exprs_checked": self.zero_exprs_checked,
            "elapsed_seconds": round(self.elapsed_seconds, 3),
            "ok": self.ok,
            "failures": self.failures[:50],
        }


def _describe(expr: MomentExpr) -> str:
    blocks = []
    for word in expr.words:
        blocks.append("".join(
            f"Z{f.var_id}'" if f.conjugated else f"Z{f.var_id}"
            for f in word))
    return "Re(" + ")Re(".join(blocks) + ")"


def run_selftest(max_positions: int = 8, max_ids: int = 3) -> SelfTestReport:
    """Run the full equivalence sweep and return a report."""
    report = SelfTestReport(max_positions, max_ids)
    start = time.perf_counter()
    for expr in canonical_re_exprs(max_positions, max_ids):
        m = len(expr.words)
        oracle = isserlis_moment(expr)
        if not oracle.is_real():
            report.failures.append(
                f"{_describe(expr)}: oracle value not real: {oracle}")
        reduced_sum = 0
        for pairing in enumerate_wick_pairings(expr):
            report.pairings_checked += 1
            value = wick_reduce(expr, pairing)
            graph = graphs_from_words(expr, pairing)
            expected = (Fraction(4) ** (graph.e - m)
                        * Fraction(-2) ** graph.chi)
            if value != expected:
                report.failures.append(
                    f"{_describe(expr)} pairing {pairing}: reduction "
                    f"{value} != graph weight {expected}")
            reduced_sum += value
        graph_sum = word_moment_via_graphs(expr)
        if not (oracle.re() == reduced_sum == graph_sum):
            report.failures.append(
                f"{_describe(expr)}: oracle {oracle.re()}, pairing sum "
                f"{reduced_sum}, graph sum {graph_sum}")
        report.exprs_checked += 1

    for expr in odd_count_exprs(min(max_positions, 5), max_ids):
        value = isserlis_moment(expr)
        pairings = list(enumerate_wick_pairings(expr))
        if value != Quat(0) or pairings:
            report.failures.append(
                f"{_describe(expr)}: odd-count expression not trivially zero")
        report.zero_exprs_checked += 1

    report.elapsed_seconds = time.perf_counter() - start
    return report
