"""Independent sector estimates used to cross-check the Kharitonov sector.

* :func:`vertex_sector` solves every endpoint-combination polynomial.
* :func:`sample_sector` solves uniformly sampled members of the family.
* :func:`conjecture_experiment` compares both with the certified sector.

Sampling is reproducible across platforms and worker counts.  Samples are
generated in fixed blocks of ``BLOCK_SIZE``; inside block ``k`` the interval
component ``(n, part)`` (``part`` 0 = real, 1 = imaginary) draws from its own
PCG64 stream seeded by ``SeedSequence(seed, spawn_key=(k, n, part))``.  A value
is ``lo + (hi - lo) * u`` with ``u`` from ``Generator.random``.  Degenerate
components are never drawn.  The stream of a sample therefore depends only
on its index, and a run with ``count`` samples is a prefix of any larger run
with the same seed.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .angles import Sector
from .exceptions import NotHurwitz, NotHurwitzVertex, ValidationError
from .kharitonov import DEFAULT_MAX_VERTICES, IntervalPolynomial, vertex_array
from .polyroot import PointPolynomial, roots_batch, sector_margins_batch
from .sector import DEFAULT_TOL, kharitonov_brackets, sector_from_brackets

__all__ = [
    "SectorReport",
    "ConjectureReport",
    "vertex_sector",
    "sample_sector",
    "sample_block",
    "conjecture_experiment",
    "BLOCK_SIZE",
]

BLOCK_SIZE = 65536
MAX_REPORTED_COUNTEREXAMPLES = 10


@dataclass(frozen=True)
class SectorReport:
    """Smallest sector holding the roots of a finite set of polynomials."""

    sector: Sector
    attaining_left: PointPolynomial
    attaining_right: PointPolynomial
    count: int
    left_index: int = 0
    right_index: int = 0
    unstable: int = 0
    first_unstable: Optional[PointPolynomial] = None
    seed: Optional[int] = None


@dataclass(frozen=True)
class ConjectureReport:
    kharitonov: Sector
    brackets: dict
    vertex: SectorReport
    sampled: SectorReport
    chain: dict
    counterexamples: int
    examples: tuple = field(default=())

    @property
    def chain_holds(self) -> bool:
        return all(self.chain.values())


def _margins(coeffs: np.ndarray):
    z, _, _ = roots_batch(coeffs)
    return sector_margins_batch(z)


def vertex_sector(P: IntervalPolynomial, max_vertices: int = DEFAULT_MAX_VERTICES) -> SectorReport:
    """Sector spanned by the roots of all vertex polynomials of ``P``.

    Ties are resolved in favour of the earliest vertex in enumeration order.

    Raises
    ------
    NotHurwitzVertex
        If some vertex has a root with nonnegative real part.
    TooManyVertices
    """
    V = vertex_array(P, max_vertices)
    alpha, beta = _margins(V)
    bad = np.flatnonzero(np.isnan(alpha))
    if bad.size:
        v = PointPolynomial(tuple(V[bad[0]]))
        raise NotHurwitzVertex(f"vertex polynomial {v} is not Hurwitz", coeffs=v.coeffs)
    i, j = int(np.argmin(alpha)), int(np.argmin(beta))
    return SectorReport(
        Sector(float(alpha[i]), float(beta[j])),
        PointPolynomial(tuple(V[i])),
        PointPolynomial(tuple(V[j])),
        len(V),
        i,
        j,
    )


def sample_block(P: IntervalPolynomial, seed: int, block: int, size: int) -> np.ndarray:
    """Member polynomials ``block * BLOCK_SIZE ...`` of the sample stream, shape (size, N+1)."""
    ends = P.endpoints()
    vals = np.broadcast_to(ends[:, :, 0], (size,) + ends.shape[:2]).copy()
    for n in range(P.degree + 1):
        for part in (0, 1):
            lo, hi = ends[n, part]
            if lo == hi:
                continue
            ss = np.random.SeedSequence(seed, spawn_key=(block, n, part))
            u = np.random.Generator(np.random.PCG64(ss)).random(size)
            vals[:, n, part] = lo + (hi - lo) * u
    return vals[:, :, 0] + 1j * vals[:, :, 1]


def _blocks(count, block_size):
    nblocks = -(-count // block_size)
    return [(k, min(block_size, count - k * block_size)) for k in range(nblocks)]


def _iter_samples(P, count, seed, n_jobs, block_size):
    """Yield ``(offset, coeffs, alpha, beta)`` per block in index order."""

    def work(item):
        k, size = item
        C = sample_block(P, seed, k, size)
        a, b = _margins(C)
        return k * block_size, C, a, b

    blocks = _blocks(count, block_size)
    if n_jobs == 1:
        yield from map(work, blocks)
    else:
        with ThreadPoolExecutor(max_workers=n_jobs) as pool:
            yield from pool.map(work, blocks)


class _Running:
    """Order-independent minimum of margins with earliest-index tie breaking."""

    def __init__(self):
        self.alpha = (math.inf, -1, None)
        self.beta = (math.inf, -1, None)
        self.unstable = 0
        self.first_unstable = None

    def update(self, offset, C, a, b):
        bad = np.isnan(a)
        if bad.any():
            self.unstable += int(bad.sum())
            if self.first_unstable is None:
                self.first_unstable = PointPolynomial(tuple(C[np.flatnonzero(bad)[0]]))
        if (~bad).any():
            i = int(np.nanargmin(a))
            j = int(np.nanargmin(b))
            if a[i] < self.alpha[0]:
                self.alpha = (float(a[i]), offset + i, C[i])
            if b[j] < self.beta[0]:
                self.beta = (float(b[j]), offset + j, C[j])


def sample_sector(
    P: IntervalPolynomial,
    count: int,
    seed: int = 0,
    n_jobs: int = 1,
    block_size: int = BLOCK_SIZE,
) -> SectorReport:
    """Sector spanned by the roots of ``count`` uniformly sampled members of ``P``.

    Samples with a root in the closed right half-plane are excluded from the
    sector and counted in ``unstable``; any such sample disproves that the
    family is Hurwitz.

    Raises
    ------
    NotHurwitz
        If no sampled member is Hurwitz.
    NonConvergence
        With the offending sample attached.
    """
    if count < 1:
        raise ValidationError("sample count must be at least 1")
    acc = _Running()
    for offset, C, a, b in _iter_samples(P, count, seed, n_jobs, block_size):
        acc.update(offset, C, a, b)
    return _report_from(acc, count, seed)


def _report_from(acc, count, seed):
    if acc.alpha[1] < 0:
        raise NotHurwitz("no sampled member is Hurwitz", coeffs=acc.first_unstable.coeffs)
    return SectorReport(
        Sector(acc.alpha[0], acc.beta[0]),
        PointPolynomial(tuple(acc.alpha[2])),
        PointPolynomial(tuple(acc.beta[2])),
        count,
        acc.alpha[1],
        acc.beta[1],
        acc.unstable,
        acc.first_unstable,
        seed,
    )


def conjecture_experiment(
    P: IntervalPolynomial,
    count: int,
    seed: int = 0,
    tol: float = DEFAULT_TOL,
    n_jobs: int = 1,
    max_vertices: int = DEFAULT_MAX_VERTICES,
    block_size: int = BLOCK_SIZE,
) -> ConjectureReport:
    """Compare the Kharitonov, vertex and sampled sectors of ``P``.

    The chain ``K ⊇ V ⊇ S`` is checked as margin inequalities.  Sampled
    members whose roots leave the vertex sector are counted as
    counterexamples to the conjecture that vertices attain the minimal
    containing sector; they are reported, not raised.
    """
    brackets = kharitonov_brackets(P, tol)
    K = sector_from_brackets(brackets)
    V = vertex_sector(P, max_vertices)

    acc = _Running()
    escapes = 0
    examples = []
    for offset, C, a, b in _iter_samples(P, count, seed, n_jobs, block_size):
        acc.update(offset, C, a, b)
        with np.errstate(invalid="ignore"):
            out = (a < V.sector.alpha) | (b < V.sector.beta)
        escapes += int(out.sum())
        for i in np.flatnonzero(out)[: max(0, MAX_REPORTED_COUNTEREXAMPLES - len(examples))]:
            examples.append((offset + int(i), PointPolynomial(tuple(C[i]))))
    S = _report_from(acc, count, seed)

    chain = {
        "alpha_K<=alpha_V": K.alpha <= V.sector.alpha,
        "beta_K<=beta_V": K.beta <= V.sector.beta,
        "alpha_V<=alpha_S": V.sector.alpha <= S.sector.alpha,
        "beta_V<=beta_S": V.sector.beta <= S.sector.beta,
    }
    return ConjectureReport(K, brackets, V, S, chain, escapes, tuple(examples))
