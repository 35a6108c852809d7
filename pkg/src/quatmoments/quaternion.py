"""Quaternion arithmetic over a generic scalar field.

The same ``Quat`` class serves two roles: with int/Fraction coordinates it
is the exact algebra underlying all combinatorial identities in this
package, with float coordinates it backs the Monte Carlo samplers.  The
2x2 complex matrix representation is provided for validation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction, float]

# Basis products e_a * e_b for the basis (1, i, j, k):
# MUL_IDX[a][b] is the index of the resulting basis element,
# MUL_SIGN[a][b] its sign.  Encodes i^2 = j^2 = k^2 = ijk = -1.
MUL_IDX = (
    (0, 1, 2, 3),
    (1, 0, 3, 2),
    (2, 3, 0, 1),
    (3, 2, 1, 0),
)
MUL_SIGN = (
    (1, 1, 1, 1),
    (1, -1, 1, -1),
    (1, -1, -1, 1),
    (1, 1, -1, -1),
)


@dataclass(frozen=True)
class Quat:
    """Quaternion x0 + x1*i + x2*j + x3*k."""

    x0: Scalar
    x1: Scalar = 0
    x2: Scalar = 0
    x3: Scalar = 0

    def coords(self) -> tuple[Scalar, Scalar, Scalar, Scalar]:
        return (self.x0, self.x1, self.x2, self.x3)

    def __add__(self, other: "Quat") -> "Quat":
        other = _promote(other)
        return Quat(self.x0 + other.x0, self.x1 + other.x1,
                    self.x2 + other.x2, self.x3 + other.x3)

    __radd__ = __add__

    def __sub__(self, other: "Quat") -> "Quat":
        other = _promote(other)
        return Quat(self.x0 - other.x0, self.x1 - other.x1,
                    self.x2 - other.x2, self.x3 - other.x3)

    def __neg__(self) -> "Quat":
        return Quat(-self.x0, -self.x1, -self.x2, -self.x3)

    def __mul__(self, other) -> "Quat":
        if not isinstance(other, Quat):
            return Quat(self.x0 * other, self.x1 * other,
                        self.x2 * other, self.x3 * other)
        a = self.coords()
        b = other.coords()
        out = [0, 0, 0, 0]
        for p in range(4):
            ap = a[p]
            if not ap:
                continue
            idx = MUL_IDX[p]
            sgn = MUL_SIGN[p]
            for q in range(4):
                bq = b[q]
                if bq:
                    out[idx[q]] += sgn[q] * ap * bq
        return Quat(*out)

    def __rmul__(self, other) -> "Quat":
        # scalar * quaternion; quaternion * quaternion goes through __mul__
        return Quat(other * self.x0, other * self.x1,
                    other * self.x2, other * self.x3)

    def conj(self) -> "Quat":
        return Quat(self.x0, -self.x1, -self.x2, -self.x3)

    def re(self) -> Scalar:
        """Real part, equal to (q + conj(q)) / 2."""
        return self.x0

    def norm_sq(self) -> Scalar:
        """q * conj(q); always a nonnegative real."""
        return (self.x0 * self.x0 + self.x1 * self.x1
                + self.x2 * self.x2 + self.x3 * self.x3)

    def is_real(self) -> bool:
        return self.x1 == 0 and self.x2 == 0 and self.x3 == 0

    def to_matrix_rep(self) -> "MatrixRep":
        """2x2 complex matrix representation.

        The map is an algebra homomorphism with trace(rep(q)) = 2 * re(q).
        Complex entries are kept as (real, imag) pairs so the representation
        stays exact for exact scalars.
        """
        x0, x1, x2, x3 = self.coords()
        return MatrixRep((
            ((x0, x1), (x2, x3)),
            ((-x2, x3), (x0, -x1)),
        ))

    def __str__(self) -> str:
        parts = []
        for c, name in zip(self.coords(), ("", "i", "j", "k")):
            if c == 0:
                continue
            parts.append(f"{c}{name}" if name else f"{c}")
        return " + ".join(parts).replace("+ -", "- ") if parts else "0"


ZERO = Quat(0)
ONE = Quat(1)
I = Quat(0, 1)
J = Quat(0, 0, 1)
K = Quat(0, 0, 0, 1)
BASIS = (ONE, I, J, K)


def _promote(value) -> Quat:
    if isinstance(value, Quat):
        return value
    return Quat(value)


Complex2 = tuple[Scalar, Scalar]


def _cmul(a: Complex2, b: Complex2) -> Complex2:
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


def _cadd(a: Complex2, b: Complex2) -> Complex2:
    return (a[0] + b[0], a[1] + b[1])


@dataclass(frozen=True)
class MatrixRep:
    """2x2 complex matrix with entries stored as exact (real, imag) pairs."""

    entries: tuple[tuple[Complex2, Complex2], tuple[Complex2, Complex2]]

    def __mul__(self, other: "MatrixRep") -> "MatrixRep":
        a, b = self.entries, other.entries
        rows = []
        for i in range(2):
            row = []
            for j in range(2):
                row.append(_cadd(_cmul(a[i][0], b[0][j]), _cmul(a[i][1], b[1][j])))
            rows.append(tuple(row))
        return MatrixRep(tuple(rows))

    def trace(self) -> Complex2:
        return _cadd(self.entries[0][0], self.entries[1][1])
