"""Equitable partitions, quotient matrices and the interlacing bound on the B_1 cubic."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .spectral import EPS, full_spectrum, phi_b1_cubic

EQUITABLE_TOL = 1e-12


@dataclass(frozen=True)
class Partition:
    """Ordered blocks of vertex indices covering ``range(n)``."""

    blocks: tuple[tuple[int, ...], ...]
    n: int

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for b in self.blocks:
            if not b:
                raise ValueError("partition blocks must be nonempty")
            for v in b:
                if not 0 <= v < self.n:
                    raise ValueError(f"vertex {v} out of range [0, {self.n})")
                if v in seen:
                    raise ValueError(f"vertex {v} appears in two blocks")
                seen.add(v)
        if len(seen) != self.n:
            raise ValueError("partition does not cover every vertex")

    @classmethod
    def of(cls, blocks: Sequence[Sequence[int]], n: int | None = None) -> Partition:
        blocks = tuple(tuple(sorted(b)) for b in blocks)
        if n is None:
            n = sum(len(b) for b in blocks)
        return cls(blocks, n)

    @classmethod
    def singletons(cls, n: int) -> Partition:
        return cls(tuple((v,) for v in range(n)), n)

    def __len__(self) -> int:
        return len(self.blocks)


def gs2_partition(n: int, s: int) -> Partition:
    """(sK_1, K_{n-2s}, K_s) blocks of ``family_gs2(n, s)`` in its canonical labeling."""
    return Partition.of([range(n - s, n), range(s, n - s), range(s)], n)


def _block_row_sums(m: np.ndarray, p: Partition) -> list[list[np.ndarray]]:
    m = np.asarray(m, dtype=float)
    if m.shape != (p.n, p.n):
        raise ValueError(f"matrix of shape {m.shape} does not match partition of {p.n} vertices")
    return [[m[np.ix_(bi, bj)].sum(axis=1) for bj in p.blocks] for bi in p.blocks]


def is_equitable(m: np.ndarray, p: Partition, tol: float = EQUITABLE_TOL) -> bool:
    """True iff each block M_ij has all row sums equal (to within ``tol``)."""
    return all(
        float(np.ptp(rs)) <= tol for row in _block_row_sums(m, p) for rs in row
    )


def quotient_matrix(m: np.ndarray, p: Partition) -> np.ndarray:
    """Matrix of average block row sums b_ij = sum(M_ij) / |V_i|."""
    sums = _block_row_sums(m, p)
    return np.array([[rs.mean() for rs in row] for row in sums])


@dataclass(frozen=True)
class QuotientCheck:
    quotient_eigenvalues: np.ndarray
    matrix_eigenvalues: np.ndarray
    matched: tuple[int, ...]
    max_deviation: float
    radius_gap: float
    passed: bool


def match_submultiset(sub: np.ndarray, full: np.ndarray, tol: float) -> list[int] | None:
    """Greedily match each value of ``sub`` to a distinct value of ``full`` within ``tol``.

    Both are scanned in decreasing order; returns the matched indices into
    ``full`` or ``None`` when some value has no partner.
    """
    sub = np.sort(np.asarray(sub))[::-1]
    order = np.argsort(np.asarray(full))[::-1]
    full_sorted = np.asarray(full)[order]
    out: list[int] = []
    j = 0
    for x in sub:
        while j < len(full_sorted) and full_sorted[j] > x + tol:
            j += 1
        if j == len(full_sorted) or abs(full_sorted[j] - x) > tol:
            return None
        out.append(int(order[j]))
        j += 1
    return out


def quotient_spectrum_check(m: np.ndarray, p: Partition, tol: float = EPS) -> QuotientCheck:
    """Confirm every eigenvalue of the quotient is an eigenvalue of ``m``.

    Also compares the two spectral radii, which coincide for nonnegative ``m``.
    """
    if not is_equitable(m, p):
        raise ValueError("partition is not equitable")
    q = quotient_matrix(m, p)
    # quotient of a symmetric matrix is similar to a symmetric one, so eigenvalues are real
    qe = np.sort(np.linalg.eigvals(q).real)[::-1]
    me = full_spectrum(m).eigenvalues
    matched = match_submultiset(qe, me, tol)
    if matched is None:
        dev = float("inf")
    else:
        dev = float(max(abs(me[j] - x) for j, x in zip(matched, qe)))
    gap = float(abs(qe[0] - me[0]))
    ok = matched is not None and (gap <= tol or not np.all(np.asarray(m) >= 0))
    return QuotientCheck(qe, me, tuple(matched or ()), dev, gap, ok)


def interlacing_bound_check(n: int, s: int, alpha: float, tol: float = EPS) -> bool:
    """Second root of the B_1 cubic is at most n + (alpha-2)s - 1, itself below n - 2."""
    if s < 2 or 2 * s > n - 1:
        raise ValueError(f"interlacing bound applies to 2 <= s <= (n-1)/2, got n={n}, s={s}")
    eta2 = phi_b1_cubic(n, s, alpha).roots()[1]
    diag = n + (alpha - 2) * s - 1
    return bool(eta2 <= diag + tol and diag < n - 2)
