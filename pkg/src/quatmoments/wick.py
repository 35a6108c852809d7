"""Symbolic moments of products of quaternion Gaussian random variables.

Expressions are products of real-part blocks ``E(Re(w_1) ... Re(w_m))``
whose factors are independent standard quaternion Gaussians (optionally
conjugated), real Gaussians of declared variance, or quaternion constants.

Two independent evaluation routes are provided:

* :func:`isserlis_moment` expands every quaternion Gaussian into four
  unit-variance real components, multiplies everything out over the
  quaternion basis and applies the classical real pairing formula.  It is
  the brute-force oracle.
* :func:`wick_reduce` evaluates the contribution of a single pairing by
  repeatedly eliminating one matched pair, using four rewrite rules that
  either split a block in two (matched pair inside one block, opposite
  conjugation), flip and conjugate a segment (same block, equal
  conjugation), or merge two blocks (matched pair across blocks).

:func:`full_moment` sums pairing contributions and must agree with the
oracle; the test suite checks that equivalence exhaustively on small
expressions.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Optional, Union

from .combinat import double_factorial
from .limits import EXPANSION_POSITION_BOUND, ResourceLimitError
from .quaternion import MUL_IDX, MUL_SIGN, Quat


@dataclass(frozen=True)
class VarRef:
    """One occurrence of an independent Gaussian variable.

    ``real_variance`` is ``None`` for a standard quaternion Gaussian
    (four independent unit-variance real components) and a positive
    number for a real Gaussian of that variance.  Real factors have no
    meaningful conjugate, so the flag is normalised away.
    """

    var_id: int
    conjugated: bool = False
    real_variance: Optional[Union[int, Fraction]] = None

    def __post_init__(self):
        if self.var_id <= 0:
            raise ValueError("var_id must be positive")
        if self.real_variance is not None:
            if self.real_variance <= 0:
                raise ValueError("real variance must be positive")
            object.__setattr__(self, "conjugated", False)

    @property
    def is_real(self) -> bool:
        return self.real_variance is not None


@dataclass(frozen=True)
class Const:
    """A fixed quaternion factor."""

    value: Quat


Factor = Union[VarRef, Const]
Word = tuple[Factor, ...]
# A pairing is a tuple of (position, position) pairs indexing the
# variable occurrences of an expression in reading order.
Pairing = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class MomentExpr:
    """E( Re(w_1) * Re(w_2) * ... * Re(w_m) ), or E(w_1) when ``bare``.

    The empty expression has value 1.
    """

    words: tuple[Word, ...]
    bare: bool = False

    def __post_init__(self):
        if self.bare and len(self.words) != 1:
            raise ValueError("a bare expression must consist of one word")

    def variables(self) -> list[VarRef]:
        """Variable occurrences in reading order (constants skipped)."""
        return [f for w in self.words for f in w if isinstance(f, VarRef)]

    def is_const_free(self) -> bool:
        return all(isinstance(f, VarRef) for w in self.words for f in w)


def zvar(var_id: int, conjugated: bool = False) -> VarRef:
    """Standard quaternion Gaussian factor."""
    return VarRef(var_id, conjugated)


def real_gaussian(var_id: int, variance: Union[int, Fraction] = 1) -> VarRef:
    return VarRef(var_id, real_variance=variance)


def const(value: Quat) -> Const:
    return Const(value)


def re_words(*words) -> MomentExpr:
    return MomentExpr(tuple(tuple(w) for w in words))


def bare_word(word) -> MomentExpr:
    return MomentExpr((tuple(word),), bare=True)


def _variance_table(expr: MomentExpr) -> dict[int, Optional[Union[int, Fraction]]]:
    """var_id -> real variance (or None for quaternion); rejects an id
    that is used with two different kinds."""
    table: dict[int, Optional[Union[int, Fraction]]] = {}
    for v in expr.variables():
        if v.var_id in table:
            if table[v.var_id] != v.real_variance:
                raise ValueError(
                    f"variable {v.var_id} used with inconsistent kinds")
        else:
            table[v.var_id] = v.real_variance
    return table


def enumerate_wick_pairings(expr: MomentExpr) -> Iterator[Pairing]:
    """All perfect matchings of the variable positions in which matched
    positions refer to the same variable.

    Yields nothing when some variable occurs an odd number of times.
    Enumeration is canonical: the lowest unmatched position is always
    paired first, with partners in increasing position order.
    """
    variables = expr.variables()
    _variance_table(expr)
    counts = Counter(v.var_id for v in variables)
    if any(c % 2 for c in counts.values()):
        return
    n = len(variables)

    def rec(unused: tuple[int, ...]) -> Iterator[Pairing]:
        if not unused:
            yield ()
            return
        first = unused[0]
        rest = unused[1:]
        for idx, partner in enumerate(rest):
            if variables[partner].var_id != variables[first].var_id:
                continue
            remaining = rest[:idx] + rest[idx + 1:]
            for tail in rec(remaining):
                yield ((first, partner),) + tail

    yield from rec(tuple(range(n)))


def _check_pairing(expr: MomentExpr, pairing: Pairing) -> list[VarRef]:
    variables = expr.variables()
    seen: set[int] = set()
    for a, b in pairing:
        for p in (a, b):
            if p < 0 or p >= len(variables):
                raise ValueError(f"pairing position {p} out of range")
            if p in seen:
                raise ValueError(f"pairing reuses position {p}")
            seen.add(p)
        va, vb = variables[a], variables[b]
        if va.var_id != vb.var_id or va.real_variance != vb.real_variance:
            raise ValueError(f"pairing matches distinct variables at {a}, {b}")
    if len(seen) != len(variables):
        raise ValueError("pairing does not cover all variable positions")
    return variables


# ---------------------------------------------------------------------------
# Brute-force oracle: expansion into real Gaussian components.
# ---------------------------------------------------------------------------

# A monomial is a sorted tuple of (var_id, component) with multiplicity;
# component 0..3 indexes the quaternion basis coordinate the real
# Gaussian component sits on (real factors always use component 0).
Monomial = tuple[tuple[int, int], ...]


def _expansion_size(word: Word) -> int:
    size = 1
    for f in word:
        if isinstance(f, VarRef) and not f.is_real:
            size *= 4
    return size


@lru_cache(maxsize=65536)
def _expand_word(word: Word) -> tuple[dict, ...]:
    """Expand a word into four dicts monomial -> coefficient, one per
    quaternion basis coordinate of the product."""
    states: dict[tuple[int, Monomial], Union[int, Fraction]] = {(0, ()): 1}
    for f in word:
        new: dict[tuple[int, Monomial], Union[int, Fraction]] = {}
        if isinstance(f, Const):
            comps = f.value.coords()
            for (b, mono), coeff in states.items():
                idx = MUL_IDX[b]
                sgn = MUL_SIGN[b]
                for c in range(4):
                    if comps[c] == 0:
                        continue
                    key = (idx[c], mono)
                    new[key] = new.get(key, 0) + coeff * sgn[c] * comps[c]
        elif f.is_real:
            for (b, mono), coeff in states.items():
                key = (b, _mono_insert(mono, (f.var_id, 0)))
                new[key] = new.get(key, 0) + coeff
        else:
            for (b, mono), coeff in states.items():
                idx = MUL_IDX[b]
                sgn = MUL_SIGN[b]
                for c in range(4):
                    s = sgn[c]
                    if f.conjugated and c > 0:
                        s = -s
                    key = (idx[c], _mono_insert(mono, (f.var_id, c)))
                    new[key] = new.get(key, 0) + coeff * s
        states = new
    out: tuple[dict, ...] = ({}, {}, {}, {})
    for (b, mono), coeff in states.items():
        if coeff:
            out[b][mono] = coeff
    return out


def _mono_insert(mono: Monomial, item: tuple[int, int]) -> Monomial:
    out = list(mono)
    out.append(item)
    out.sort()
    return tuple(out)


def _mono_merge(a: Monomial, b: Monomial) -> Monomial:
    return tuple(sorted(a + b))


def _mono_expectation(mono: Monomial, variances) -> Union[int, Fraction]:
    value: Union[int, Fraction] = 1
    for (vid, _comp), count in Counter(mono).items():
        if count % 2:
            return 0
        value *= double_factorial(count - 1)
        var = variances[vid]
        if var is not None and var != 1:
            value *= var ** (count // 2)
    return value


def isserlis_moment(expr: MomentExpr,
                    bound: int = EXPANSION_POSITION_BOUND) -> Quat:
    """Exact moment by full component expansion (the oracle route)."""
    variables = expr.variables()
    if len(variables) > bound:
        raise ResourceLimitError(
            f"{len(variables)} Gaussian positions exceed the expansion "
            f"bound {bound}")
    variances = _variance_table(expr)

    if expr.bare:
        per_basis = _expand_word(expr.words[0])
        coords = []
        for b in range(4):
            total: Union[int, Fraction] = 0
            for mono, coeff in per_basis[b].items():
                e = _mono_expectation(mono, variances)
                if e:
                    total += coeff * e
            coords.append(total)
        return Quat(*coords)

    acc: dict[Monomial, Union[int, Fraction]] = {(): 1}
    for word in expr.words:
        block = _expand_word(word)[0]  # real part of the block
        new: dict[Monomial, Union[int, Fraction]] = {}
        for m1, c1 in acc.items():
            for m2, c2 in block.items():
                key = _mono_merge(m1, m2)
                new[key] = new.get(key, 0) + c1 * c2
        acc = new
    total = 0
    for mono, coeff in acc.items():
        e = _mono_expectation(mono, variances)
        if e:
            total += coeff * e
    return Quat(total)


# ---------------------------------------------------------------------------
# Rule-based reduction of a single pairing.
# ---------------------------------------------------------------------------


def wick_reduce(expr: MomentExpr, pairing: Pairing) -> int:
    """Exact contribution of one pairing of a constant-free expression
    whose factors are all quaternion Gaussians.

    Matched pairs are treated as independent; the value is obtained by
    eliminating one pair at a time:

    * pair inside one block, opposite conjugation: split the block in two
      and multiply by 4;
    * pair inside one block, equal conjugation: reverse and conjugate the
      enclosed segment and multiply by -2;
    * pair across two blocks: rotate both blocks so the matched factors
      lead (real parts are cyclic) and merge, reversing and conjugating
      the first remainder when the conjugation flags agree.
    """
    variables = _check_pairing(expr, pairing)
    if not expr.is_const_free():
        raise ValueError("wick_reduce requires a constant-free expression")
    if any(v.is_real for v in variables):
        raise ValueError("wick_reduce requires quaternion factors only")

    partner_of: dict[int, int] = {}
    for a, b in pairing:
        partner_of[a] = b
        partner_of[b] = a

    # Blocks hold (pair position id, conjugated); only pairing structure
    # and conjugation matter from here on.
    blocks: list[list[tuple[int, bool]]] = []
    pos = 0
    for word in expr.words:
        block = []
        for factor in word:
            block.append((pos, factor.conjugated))
            pos += 1
        blocks.append(block)

    def rev_conj(segment: list[tuple[int, bool]]) -> list[tuple[int, bool]]:
        return [(p, not c) for p, c in reversed(segment)]

    value = 1
    while blocks:
        block = blocks[0]
        if not block:
            blocks.pop(0)
            continue
        lead, lead_conj = block[0]
        partner = partner_of[lead]
        inside = next((i for i in range(1, len(block))
                       if block[i][0] == partner), None)
        if inside is not None:
            _, partner_conj = block[inside]
            u = block[1:inside]
            v = block[inside + 1:]
            if partner_conj != lead_conj:
                value *= 4
                blocks[0:1] = [u, v]
            else:
                value *= -2
                blocks[0] = rev_conj(u) + v
        else:
            for b in range(1, len(blocks)):
                k = next((i for i in range(len(blocks[b]))
                          if blocks[b][i][0] == partner), None)
                if k is not None:
                    break
            other = blocks.pop(b)
            other = other[k:] + other[:k]
            _, partner_conj = other[0]
            u = block[1:]
            v = other[1:]
            if partner_conj != lead_conj:
                blocks[0] = u + v
            else:
                blocks[0] = rev_conj(u) + v
    return value


def _repaint_by_pairing(expr: MomentExpr, pairing: Pairing) -> MomentExpr:
    """Replace matched occurrences by a fresh variable per pair, making
    the pairing the only one the repainted expression admits."""
    variables = expr.variables()
    fresh: dict[int, int] = {}
    for pid, (a, b) in enumerate(pairing, start=1):
        fresh[a] = pid
        fresh[b] = pid
    words = []
    pos = 0
    for word in expr.words:
        out = []
        for factor in word:
            if isinstance(factor, VarRef):
                out.append(VarRef(fresh[pos], factor.conjugated,
                                  factor.real_variance))
                pos += 1
            else:
                out.append(factor)
        words.append(tuple(out))
    return MomentExpr(tuple(words), bare=expr.bare)


def full_moment(expr: MomentExpr,
                bound: int = EXPANSION_POSITION_BOUND) -> Quat:
    """Exact moment as the sum of pairing contributions.

    Constant-free all-quaternion expressions go through the fast
    rule-based reduction; everything else evaluates each pairing through
    the component expansion restricted to that pairing.
    """
    variables = expr.variables()
    if len(variables) > bound:
        raise ResourceLimitError(
            f"{len(variables)} Gaussian positions exceed the expansion "
            f"bound {bound}")
    fast = expr.is_const_free() and not any(v.is_real for v in variables)
    total: Quat = Quat(0)
    for pairing in enumerate_wick_pairings(expr):
        if fast:
            total = total + Quat(wick_reduce(expr, pairing))
        else:
            total = total + isserlis_moment(_repaint_by_pairing(expr, pairing),
                                            bound=bound)
    return total
