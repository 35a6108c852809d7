"""Multivariate polynomials with exact integer coefficients.

Variables are the matrix dimension N and, for Wishart-type moments, one
rectangular dimension per color (named M for a single color, M1..Ms
otherwise).  Monomial keys are (N exponent, tuple of M exponents);
canonical form drops zero coefficients, equality is coefficientwise.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

MonomialKey = tuple[int, tuple[int, ...]]


class MomentPoly:
    def __init__(self, terms: Mapping[MonomialKey, int] | None = None,
                 num_colors: int = 0):
        self.num_colors = num_colors
        clean: dict[MonomialKey, int] = {}
        for (n_exp, m_exps), coeff in (terms or {}).items():
            m_exps = tuple(m_exps)
            if len(m_exps) != num_colors:
                raise ValueError("monomial arity does not match num_colors")
            if coeff == 0:
                continue
            if isinstance(coeff, Fraction):
                if coeff.denominator != 1:
                    raise ValueError(f"non-integer coefficient {coeff}")
                coeff = int(coeff)
            clean[(n_exp, m_exps)] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, num_colors: int = 0) -> "MomentPoly":
        return cls({}, num_colors)

    @classmethod
    def monomial(cls, coeff: int, n_exp: int,
                 m_exps: Sequence[int] = ()) -> "MomentPoly":
        return cls({(n_exp, tuple(m_exps)): coeff}, len(tuple(m_exps)))

    @classmethod
    def from_univariate(cls, coeffs: Sequence[int]) -> "MomentPoly":
        """Polynomial in N alone from the coefficient list [c0, c1, ...]."""
        return cls({(e, ()): c for e, c in enumerate(coeffs) if c != 0}, 0)

    def variable_names(self) -> list[str]:
        if self.num_colors == 0:
            return ["N"]
        if self.num_colors == 1:
            return ["N", "M"]
        return ["N"] + [f"M{c}" for c in range(1, self.num_colors + 1)]

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (isinstance(other, MomentPoly)
                and self.num_colors == other.num_colors
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.num_colors, tuple(sorted(self.terms.items()))))

    def __add__(self, other: "MomentPoly") -> "MomentPoly":
        if self.num_colors != other.num_colors:
            raise ValueError("mixed variable sets")
        terms = dict(self.terms)
        for key, coeff in other.terms.items():
            terms[key] = terms.get(key, 0) + coeff
        return MomentPoly(terms, self.num_colors)

    def __neg__(self) -> "MomentPoly":
        return MomentPoly({k: -c for k, c in self.terms.items()},
                          self.num_colors)

    def __sub__(self, other: "MomentPoly") -> "MomentPoly":
        return self + (-other)

    def scale(self, factor: int) -> "MomentPoly":
        if factor == 0:
            return MomentPoly.zero(self.num_colors)
        return MomentPoly({k: factor * c for k, c in self.terms.items()},
                          self.num_colors)

    def evaluate(self, n_value, m_values: Sequence = ()):
        m_values = tuple(m_values)
        if len(m_values) != self.num_colors:
            raise ValueError("wrong number of M values")
        total = 0
        for (n_exp, m_exps), coeff in self.terms.items():
            term = coeff * n_value ** n_exp
            for m, e in zip(m_values, m_exps):
                term *= m ** e
            total += term
        return total

    def substitute_scaled(self, factor: int) -> "MomentPoly":
        """Scale every variable by ``factor`` (N -> factor*N and every
        M_c -> factor*M_c)."""
        terms: dict[MonomialKey, int] = {}
        for (n_exp, m_exps), coeff in self.terms.items():
            scale = factor ** (n_exp + sum(m_exps))
            key = (n_exp, m_exps)
            terms[key] = terms.get(key, 0) + coeff * scale
        return MomentPoly(terms, self.num_colors)

    def sorted_terms(self) -> list[tuple[MonomialKey, int]]:
        def order(item):
            (n_exp, m_exps), _ = item
            return (-(n_exp + sum(m_exps)), tuple(-e for e in m_exps), -n_exp)

        return sorted(self.terms.items(), key=order)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = self.variable_names()
        pieces = []
        for (n_exp, m_exps), coeff in self.sorted_terms():
            # M factors first, N last: reads as 16*M^2*N.
            factors = []
            for name, e in zip(names[1:], m_exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            if n_exp == 1:
                factors.append("N")
            elif n_exp > 1:
                factors.append(f"N^{n_exp}")
            mono = "*".join(factors)
            if not mono:
                piece = str(abs(coeff))
            elif abs(coeff) == 1:
                piece = mono
            else:
                piece = f"{abs(coeff)}*{mono}"
            sign = "-" if coeff < 0 else "+"
            pieces.append((sign, piece))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, piece in pieces[1:]:
            out += f" {sign} {piece}"
        return out

    __repr__ = __str__

    def lambda_str(self) -> str:
        """Rescaled display with every M_c replaced by lam_c * N; the
        aspect-ratio form is derived here and never stored."""
        if not self.terms:
            return "0"
        if self.num_colors == 1:
            lam_names = ["lam"]
        else:
            lam_names = [f"lam{c}" for c in range(1, self.num_colors + 1)]
        pieces = []
        for (n_exp, m_exps), coeff in self.sorted_terms():
            factors = []
            for name, e in zip(lam_names, m_exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            total_n = n_exp + sum(m_exps)
            if total_n == 1:
                factors.append("N")
            elif total_n > 1:
                factors.append(f"N^{total_n}")
            mono = "*".join(factors)
            if not mono:
                piece = str(abs(coeff))
            elif abs(coeff) == 1:
                piece = mono
            else:
                piece = f"{abs(coeff)}*{mono}"
            pieces.append(("-" if coeff < 0 else "+", piece))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, piece in pieces[1:]:
            out += f" {sign} {piece}"
        return out

    def to_json_dict(self) -> dict:
        names = self.variable_names()
        terms = []
        for (n_exp, m_exps), coeff in self.sorted_terms():
            exps = {"N": n_exp}
            for name, e in zip(names[1:], m_exps):
                exps[name] = e
            terms.append({"coeff": coeff, "exponents": exps})
        return {"variables": names, "terms": terms, "pretty": str(self)}


def accumulate(terms: dict[MonomialKey, Fraction], key: MonomialKey,
               coeff: Fraction) -> None:
    terms[key] = terms.get(key, Fraction(0)) + coeff


def build_poly(terms: Mapping[MonomialKey, Fraction],
               num_colors: int) -> MomentPoly:
    """Finalize a Fraction-valued accumulator; coefficients must come out
    integral (enumeration weights may be fractional term by term)."""
    return MomentPoly(dict(terms), num_colors)
