"""Trace moments at concrete matrix sizes by direct entrywise expansion.

These routines expand a product of traces into matrix entries, evaluate
each summand with the brute-force component-expansion oracle from
:mod:`quatmoments.wick`, and add up over all index assignments.  They
never touch the graph censuses, so they serve as an independent check
of the census-based polynomials; exact polynomial interpolation over a
few sizes recovers the full polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

from .wick import MomentExpr, VarRef, isserlis_moment


class _VarIds:
    """Stable variable ids for matrix entries."""

    def __init__(self):
        self._table: dict = {}

    def get(self, key) -> int:
        if key not in self._table:
            self._table[key] = len(self._table) + 1
        return self._table[key]


def _blocks_from_degrees(deg: Sequence[int],
                         colors: Optional[Sequence[int]]) -> list[list[int]]:
    """Color of each factor, grouped into trace blocks."""
    total = sum(deg)
    if colors is None:
        colors = [1] * total
    colors = list(colors)
    if len(colors) != total:
        raise ValueError("color map length must match the total degree")
    blocks = []
    pos = 0
    for j in deg:
        blocks.append(colors[pos:pos + j])
        pos += j
    return blocks


def _wigner_entry(ids: _VarIds, color: int, row: int, col: int,
                  quaternionic: bool) -> VarRef:
    # Self-adjoint matrix entry: independent variable per unordered index
    # pair, conjugated below the diagonal, real of variance 2 on it.
    if row == col:
        return VarRef(ids.get(("d", color, row)), real_variance=2)
    key = ("o", color, min(row, col), max(row, col))
    if quaternionic:
        return VarRef(ids.get(key), conjugated=row > col)
    return VarRef(ids.get(key), real_variance=1)


def wigner_trace_moment(deg: Sequence[int], n_dim: int,
                        colors: Optional[Sequence[int]] = None,
                        quaternionic: bool = False):
    """E(prod of Re tr of matrix-entry products) at size ``n_dim``,
    summed over all index assignments; exact integer."""
    blocks = _blocks_from_degrees(deg, colors)
    total = sum(deg)
    value = 0
    for indices in product(range(n_dim), repeat=total):
        ids = _VarIds()
        words = []
        pos = 0
        for block in blocks:
            word = []
            for offset, color in enumerate(block):
                row = indices[pos + offset]
                col = indices[pos + (offset + 1) % len(block)]
                word.append(_wigner_entry(ids, color, row, col, quaternionic))
            words.append(tuple(word))
            pos += len(block)
        value += isserlis_moment(MomentExpr(tuple(words))).re()
    return value


def wishart_trace_moment(deg: Sequence[int], m_dim: int, n_dim: int,
                         colors: Optional[Sequence[int]] = None,
                         quaternionic: bool = False):
    """E(prod of Re tr of W powers) with W = X* X expanded into entries
    of the rectangular factor X, at concrete sizes; exact integer."""
    blocks = _blocks_from_degrees(deg, colors)
    total = sum(deg)
    value = 0
    for lower in product(range(n_dim), repeat=total):
        for upper in product(range(m_dim), repeat=total):
            ids = _VarIds()
            words = []
            pos = 0
            for block in blocks:
                word = []
                for offset, color in enumerate(block):
                    a = lower[pos + offset]
                    a_next = lower[pos + (offset + 1) % len(block)]
                    big = upper[pos + offset]
                    key = (color, big, a)
                    key_next = (color, big, a_next)
                    if quaternionic:
                        word.append(VarRef(ids.get(key), conjugated=True))
                        word.append(VarRef(ids.get(key_next)))
                    else:
                        word.append(VarRef(ids.get(key), real_variance=1))
                        word.append(VarRef(ids.get(key_next), real_variance=1))
                words.append(tuple(word))
                pos += len(block)
            value += isserlis_moment(MomentExpr(tuple(words))).re()
    return value


def interpolate_integer_polynomial(points: Sequence[tuple[int, int]]) -> list[int]:
    """Coefficients [c0, c1, ...] of the unique polynomial of degree
    < len(points) through the given (x, y) points; exact, and expected
    to come out integral."""
    coeffs = [Fraction(0)] * len(points)
    for xi, yi in points:
        # Lagrange basis polynomial for xi, accumulated coefficientwise.
        basis = [Fraction(1)]
        denom = Fraction(1)
        for xj, _ in points:
            if xj == xi:
                continue
            denom *= xi - xj
            new = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                new[k] += c * (-xj)
                new[k + 1] += c
            basis = new
        for k, c in enumerate(basis):
            coeffs[k] += c * yi / denom
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise AssertionError("interpolation produced a non-integer")
        out.append(int(c))
    while out and out[-1] == 0:
        out.pop()
    return out
