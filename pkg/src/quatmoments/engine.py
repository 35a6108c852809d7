"""Exact moment polynomials of the four Gaussian matrix ensembles.

Every moment is a weighted census sum.  For trace products over
symmetric (real) or self-adjoint (quaternionic) Wigner matrices the
census runs over twisted ribbon graphs with both twist states per edge;
the weight is N^f for the real ensemble and 4^(n-m) (-2)^chi N^f for
the quaternionic one (chi = m - n + f).  For Wishart matrices the
census runs over the bipartite pairings, weighted by prod_c M_c^(w_c)
N^f, times 4^(n-m) (-2)^chi in the quaternionic case
(chi = m + w - n + f).

The quaternionic polynomial always equals (-2)^(n-m) times the real one
with every dimension variable scaled by -2; :func:`duality_check`
verifies that coefficientwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import bipartite, moebius
from .limits import BIPARTITE_EDGE_BOUND, WIGNER_DEGREE_BOUND
from .polynomial import MomentPoly
from .wick import MomentExpr, enumerate_wick_pairings


def _num_colors(colors: Optional[Sequence[int]]) -> int:
    if colors is None:
        return 1
    colors = tuple(colors)
    if any(c < 1 for c in colors):
        raise ValueError("colors are numbered from 1")
    return max(colors)


# ---------------------------------------------------------------------------
# Wigner ensembles (GOE / GSE).
# ---------------------------------------------------------------------------


def wigner_moment_polys(deg: Sequence[int],
                        colors: Optional[Sequence[int]] = None,
                        bound: int = WIGNER_DEGREE_BOUND
                        ) -> tuple[MomentPoly, MomentPoly]:
    """(real, quaternionic) trace-moment polynomials from one census pass.

    The weight of a graph depends only on its face count, so the census
    is reduced to a face-count histogram before weighting.
    """
    deg = moebius.check_degrees(deg)
    total = sum(deg)
    m = len(deg)
    if total % 2:
        return MomentPoly.zero(), MomentPoly.zero()
    n = total // 2
    histogram: dict[int, int] = {}
    for graph in moebius.enumerate_graphs(deg, colors, bound):
        f = graph.f
        histogram[f] = histogram.get(f, 0) + 1

    goe_terms: dict = {}
    gse_terms: dict = {}
    scale = Fraction(4) ** (n - m)
    for f, count in histogram.items():
        chi = m - n + f
        goe_terms[(f, ())] = Fraction(count)
        gse_terms[(f, ())] = count * scale * Fraction(-2) ** chi
    return MomentPoly(goe_terms, 0), MomentPoly(gse_terms, 0)


def goe_moment_poly(deg: Sequence[int],
                    colors: Optional[Sequence[int]] = None,
                    bound: int = WIGNER_DEGREE_BOUND) -> MomentPoly:
    """E(tr Z^j1 ... tr Z^jm) for the real symmetric Gaussian ensemble
    (unit off-diagonal variance, diagonal variance 2), as a polynomial
    in N."""
    return wigner_moment_polys(deg, colors, bound)[0]


def gse_moment_poly(deg: Sequence[int],
                    colors: Optional[Sequence[int]] = None,
                    bound: int = WIGNER_DEGREE_BOUND) -> MomentPoly:
    """E(Re tr Z^j1 ... Re tr Z^jm) for the self-adjoint quaternion
    Gaussian ensemble, as a polynomial in N."""
    return wigner_moment_polys(deg, colors, bound)[1]


# ---------------------------------------------------------------------------
# Wishart ensembles.
# ---------------------------------------------------------------------------


def wishart_moment_polys(deg: Sequence[int],
                         colors: Optional[Sequence[int]] = None,
                         bound: int = BIPARTITE_EDGE_BOUND
                         ) -> tuple[MomentPoly, MomentPoly]:
    """(real, quaternionic) Wishart trace-moment polynomials from one
    bipartite census pass."""
    deg = bipartite.check_degrees(deg)
    n = sum(deg)
    m = len(deg)
    s = _num_colors(colors)
    histogram: dict[tuple[tuple[int, ...], int], int] = {}
    for graph in bipartite.enumerate_bipartite_graphs(deg, colors, bound):
        if colors is None:
            w_exps = (graph.w,)
        else:
            counts = dict(graph.w_by_color)
            w_exps = tuple(counts.get(c, 0) for c in range(1, s + 1))
        key = (w_exps, graph.f)
        histogram[key] = histogram.get(key, 0) + 1

    real_terms: dict = {}
    quat_terms: dict = {}
    scale = Fraction(4) ** (n - m)
    for (w_exps, f), count in histogram.items():
        w = sum(w_exps)
        chi = m + w - n + f
        key = (f, w_exps)
        real_terms[key] = real_terms.get(key, Fraction(0)) + count
        quat_terms[key] = (quat_terms.get(key, Fraction(0))
                           + count * scale * Fraction(-2) ** chi)
    return MomentPoly(real_terms, s), MomentPoly(quat_terms, s)


def wishart_real_poly(deg: Sequence[int],
                      colors: Optional[Sequence[int]] = None,
                      bound: int = BIPARTITE_EDGE_BOUND) -> MomentPoly:
    """E(tr W^j1 ... tr W^jm) for real Wishart matrices W = X^T X."""
    return wishart_moment_polys(deg, colors, bound)[0]


def wishart_quat_poly(deg: Sequence[int],
                      colors: Optional[Sequence[int]] = None,
                      bound: int = BIPARTITE_EDGE_BOUND) -> MomentPoly:
    """E(Re tr W^j1 ... Re tr W^jm) for quaternionic Wishart W = X* X."""
    return wishart_moment_polys(deg, colors, bound)[1]


# ---------------------------------------------------------------------------
# Word moments through graphs, and the duality transform.
# ---------------------------------------------------------------------------


def word_moment_via_graphs(expr: MomentExpr) -> int:
    """Moment of a constant-free quaternion word product as the graph
    sum 4^(n-m) * sum (-2)^chi over the pairing-induced graphs."""
    m = len(expr.words)
    total = Fraction(0)
    for pairing in enumerate_wick_pairings(expr):
        graph = moebius.graphs_from_words(expr, pairing)
        chi = graph.chi
        exponent = 2 * (graph.e - m) + chi
        if exponent >= 0:
            total += -(1 << exponent) if chi % 2 else (1 << exponent)
        else:
            total += Fraction(4) ** (graph.e - m) * Fraction(-2) ** chi
    if total.denominator != 1:
        raise AssertionError(f"graph sum is not an integer: {total}")
    return int(total)


def dual_transform(poly: MomentPoly, n: int, m: int) -> MomentPoly:
    """(-2)^(n-m) times the polynomial with N and every M_c scaled by -2.

    This carries the real-ensemble moment polynomial onto the
    quaternionic one (n = number of edges/pairs, m = number of
    trace blocks)."""
    scale = Fraction(-2) ** (n - m)
    terms = {}
    for (n_exp, m_exps), coeff in poly.terms.items():
        terms[(n_exp, m_exps)] = scale * coeff * Fraction(-2) ** (n_exp + sum(m_exps))
    return MomentPoly(terms, poly.num_colors)


@dataclass(frozen=True)
class DualityReport:
    kind: str
    deg: tuple[int, ...]
    colors: Optional[tuple[int, ...]]
    real_poly: MomentPoly
    quat_poly: MomentPoly
    dual_of_real: MomentPoly
    ok: bool

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "deg": list(self.deg),
            "colors": list(self.colors) if self.colors is not None else None,
            "real": self.real_poly.to_json_dict(),
            "quaternionic": self.quat_poly.to_json_dict(),
            "dual_of_real": self.dual_of_real.to_json_dict(),
            "ok": self.ok,
        }


def duality_check(deg: Sequence[int],
                  colors: Optional[Sequence[int]] = None,
                  kind: str = "wigner",
                  wigner_bound: int = WIGNER_DEGREE_BOUND,
                  wishart_bound: int = BIPARTITE_EDGE_BOUND) -> DualityReport:
    """Verify coefficientwise that the quaternionic moment polynomial is
    the dual transform of the real one, for one degree sequence."""
    deg = tuple(int(j) for j in deg)
    m = len(deg)
    if kind == "wigner":
        real, quat = wigner_moment_polys(deg, colors, wigner_bound)
        n = sum(deg) // 2
    elif kind == "wishart":
        real, quat = wishart_moment_polys(deg, colors, wishart_bound)
        n = sum(deg)
    else:
        raise ValueError(f"unknown duality kind {kind!r}")
    dual = dual_transform(real, n, m)
    colors_t = tuple(colors) if colors is not None else None
    return DualityReport(kind, deg, colors_t, real, quat, dual, dual == quat)
