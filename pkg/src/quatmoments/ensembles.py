"""Monte Carlo samplers for the four Gaussian matrix ensembles.

Quaternion-valued matrices are stored as float arrays with a trailing
axis of length 4 (coordinates on the basis 1, i, j, k), batched over
leading axes.  Sampling is counter-based: sample indices are split into
fixed-size chunks and chunk ``c`` of a run with seed ``s`` draws from a
Philox stream keyed by (s, c), so a run is reproducible bit for bit
regardless of how chunks are distributed over workers.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

import numpy as np

from .limits import MC_WORK_BOUND, ResourceLimitError
from .quaternion import MUL_IDX, MUL_SIGN, Quat

CHUNK = 8192

# Structure tensor of the quaternion algebra: T[a, b, c] = sign of e_c
# in e_a * e_b.
_STRUCTURE = np.zeros((4, 4, 4))
for _a in range(4):
    for _b in range(4):
        _STRUCTURE[_a, _b, MUL_IDX[_a][_b]] = MUL_SIGN[_a][_b]


def quat_matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix product of quaternion matrices (..., r, k, 4) x (..., k, c, 4),
    preserving the noncommutative factor order."""
    return np.einsum("abc,...ika,...kjb->...ijc", _STRUCTURE, a, b,
                     optimize=True)


def quat_adjoint(a: np.ndarray) -> np.ndarray:
    """Conjugate transpose: out[i, j] = conj(a[j, i])."""
    out = np.swapaxes(a, -3, -2).copy()
    out[..., 1:] = -out[..., 1:]
    return out


def quat_conj(a: np.ndarray) -> np.ndarray:
    out = a.copy()
    out[..., 1:] = -out[..., 1:]
    return out


def re_trace(a: np.ndarray) -> np.ndarray:
    """Real part of the trace of a square quaternion matrix (batched)."""
    return np.trace(a[..., 0], axis1=-2, axis2=-1)


def trace_components(a: np.ndarray) -> np.ndarray:
    """All four components of the trace, shape (..., 4)."""
    return np.trace(a, axis1=-3, axis2=-2)


def quat_entry(a: np.ndarray, i: int, j: int) -> Quat:
    """One entry of an unbatched quaternion matrix as a Quat."""
    return Quat(*(float(x) for x in a[i, j]))


def sample_gse(n: int, rng: np.random.Generator,
               size: tuple[int, ...] = ()) -> np.ndarray:
    """Self-adjoint quaternion Gaussian matrices: off-diagonal entries
    have four unit-variance components, diagonal entries are real with
    variance 2, and Z[j, i] = conj(Z[i, j]) exactly."""
    draws = rng.standard_normal(size + (n, n, 4))
    upper = np.triu(np.ones((n, n)), k=1)
    z = draws * upper[..., None]
    z = z + quat_adjoint(z)
    diag = math.sqrt(2.0) * rng.standard_normal(size + (n,))
    idx = np.arange(n)
    z[..., idx, idx, 0] = diag
    return z


def sample_goe(n: int, rng: np.random.Generator,
               size: tuple[int, ...] = ()) -> np.ndarray:
    """Real symmetric Gaussian matrices: off-diagonal variance 1,
    diagonal variance 2."""
    draws = rng.standard_normal(size + (n, n))
    upper = np.triu(np.ones((n, n)), k=1)
    z = draws * upper
    z = z + np.swapaxes(z, -2, -1)
    diag = math.sqrt(2.0) * rng.standard_normal(size + (n,))
    idx = np.arange(n)
    z[..., idx, idx] = diag
    return z


def sample_wishart_quat(m: int, n: int, rng: np.random.Generator,
                        size: tuple[int, ...] = ()) -> np.ndarray:
    """W = X* X with X an m x n matrix of standard quaternion Gaussians."""
    x = rng.standard_normal(size + (m, n, 4))
    return quat_matmul(quat_adjoint(x), x)


def sample_wishart_real(m: int, n: int, rng: np.random.Generator,
                        size: tuple[int, ...] = ()) -> np.ndarray:
    """W = X^T X with X an m x n matrix of unit-variance real Gaussians."""
    x = rng.standard_normal(size + (m, n))
    return np.einsum("...mi,...mj->...ij", x, x)


def mixed_trace_product(matrices: Mapping[int, np.ndarray],
                        blocks: Sequence[Sequence[int]]) -> np.ndarray:
    """prod over blocks of Re tr(product of the block's matrices in
    order).  ``matrices`` maps a color to a batched square matrix;
    quaternion (trailing axis 4) and real matrices both work."""
    result = None
    for block in blocks:
        if not block:
            raise ValueError("empty trace block")
        prod = matrices[block[0]]
        quaternionic = prod.shape[-1] == 4 and prod.ndim >= 3
        for color in block[1:]:
            nxt = matrices[color]
            if prod.shape[-2 - quaternionic] != nxt.shape[-2 - quaternionic]:
                raise ValueError("dimension mismatch in trace block")
            prod = quat_matmul(prod, nxt) if quaternionic else prod @ nxt
        tr = re_trace(prod) if quaternionic else np.trace(prod, axis1=-2,
                                                          axis2=-1)
        result = tr if result is None else result * tr
    if result is None:
        raise ValueError("at least one trace block is required")
    return result


@dataclass(frozen=True)
class EnsembleSpec:
    """A Monte Carlo target: which ensemble, degree sequence, coloring
    and dimensions."""

    kind: str  # gse | goe | wishart-quat | wishart-real
    deg: tuple[int, ...]
    n_dim: int
    m_dim: Optional[int] = None
    colors: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        if self.kind not in ("gse", "goe", "wishart-quat", "wishart-real"):
            raise ValueError(f"unknown ensemble kind {self.kind!r}")
        if any(j < 1 for j in self.deg):
            raise ValueError("degrees must be >= 1")
        if self.n_dim < 1:
            raise ValueError("N must be >= 1")
        if self.kind.startswith("wishart"):
            if self.m_dim is None or self.m_dim < 1:
                raise ValueError("Wishart ensembles need M >= 1")
        if self.colors is not None and len(self.colors) != sum(self.deg):
            raise ValueError("color map length must match the total degree")

    def num_colors(self) -> int:
        return max(self.colors) if self.colors is not None else 1

    def blocks(self) -> list[list[int]]:
        colors = self.colors or tuple([1] * sum(self.deg))
        blocks = []
        pos = 0
        for j in self.deg:
            blocks.append(list(colors[pos:pos + j]))
            pos += j
        return blocks


@dataclass(frozen=True)
class MCEstimate:
    mean: float
    stderr: float
    samples: int
    seed: int

    def to_json_dict(self) -> dict:
        return {"mean": self.mean, "stderr": self.stderr,
                "samples": self.samples, "seed": self.seed}


def _chunk_generator(seed: int, chunk_index: int) -> np.random.Generator:
    key = np.array([seed & 0xFFFFFFFFFFFFFFFF, chunk_index], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def _sample_matrices(spec: EnsembleSpec, rng: np.random.Generator,
                     count: int) -> dict[int, np.ndarray]:
    matrices = {}
    for color in range(1, spec.num_colors() + 1):
        if spec.kind == "gse":
            matrices[color] = sample_gse(spec.n_dim, rng, (count,))
        elif spec.kind == "goe":
            matrices[color] = sample_goe(spec.n_dim, rng, (count,))
        elif spec.kind == "wishart-quat":
            matrices[color] = sample_wishart_quat(spec.m_dim, spec.n_dim,
                                                  rng, (count,))
        else:
            matrices[color] = sample_wishart_real(spec.m_dim, spec.n_dim,
                                                  rng, (count,))
    return matrices


def _chunk_sums(spec: EnsembleSpec, seed: int, chunk_index: int,
                count: int) -> tuple[float, float]:
    rng = _chunk_generator(seed, chunk_index)
    matrices = _sample_matrices(spec, rng, count)
    values = mixed_trace_product(matrices, spec.blocks())
    return float(np.sum(values)), float(np.sum(values * values))


def mc_moment(spec: EnsembleSpec, samples: int, seed: int,
              threads: int = 1,
              work_bound: int = MC_WORK_BOUND) -> MCEstimate:
    """Streaming Monte Carlo estimate of the trace-product moment.

    Deterministic for a fixed (seed, samples) pair: chunk c always draws
    from the Philox stream keyed (seed, c) and partial sums are merged
    in chunk order whatever the thread count.
    """
    if samples < 2:
        raise ValueError("need at least two samples")
    work = samples * spec.n_dim ** 2 * sum(spec.deg) * spec.num_colors()
    if work > work_bound:
        raise ResourceLimitError(
            f"requested run needs ~{work:.2g} units, bound is {work_bound:.2g}")

    chunks = [(i, min(CHUNK, samples - i * CHUNK))
              for i in range((samples + CHUNK - 1) // CHUNK)]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            sums = list(pool.map(
                lambda ic: _chunk_sums(spec, seed, ic[0], ic[1]), chunks))
    else:
        sums = [_chunk_sums(spec, seed, i, c) for i, c in chunks]

    total = 0.0
    total_sq = 0.0
    for s, s2 in sums:
        total += s
        total_sq += s2
    mean = total / samples
    variance = max(total_sq - samples * mean * mean, 0.0) / (samples - 1)
    stderr = math.sqrt(variance / samples)
    return MCEstimate(mean=mean, stderr=stderr, samples=samples, seed=seed)
