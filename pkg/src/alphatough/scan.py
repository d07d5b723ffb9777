"""Exhaustive verification of the 1-tough theorem over small labeled graphs.

Labeled graphs on ``n`` vertices are indexed by edge masks: bit ``k`` of the
index is the ``k``-th pair in graph6 order ``(0,1), (0,2), (1,2), (0,3), ...``.
Connectivity and spectral radii are computed in numpy batches; exact
toughness is evaluated only for graphs meeting the spectral hypothesis,
which is where a counterexample would have to live.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .formats import emit_graph6
from .graph import Graph
from .spectral import EPS
from .theorems import (
    PreconditionError,
    check_theorem_1_1,
    check_theorem_1_2,
    f_alpha,
    is_extremal_1tough,
    theorem11_threshold,
)
from .toughness import is_t_tough

CHUNK = 1 << 16


def graph6_pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for j in range(1, n) for i in range(j)]


def graph_from_index(n: int, index: int) -> Graph:
    pairs = graph6_pairs(n)
    return Graph.from_edges(n, (p for k, p in enumerate(pairs) if index >> k & 1))


@dataclass
class ScanRecord:
    index: int
    graph6: str
    rho: float
    margin: float
    conclusion_holds: bool
    is_extremal: bool


@dataclass
class ScanReport:
    n: int | None
    alpha: float
    graphs_seen: int = 0
    connected: int = 0
    hypothesis_true: int = 0
    extremal: int = 0
    max_extremal_margin: float = 0.0
    inconsistencies: list[ScanRecord] = field(default_factory=list)
    hypothesis_graphs: list[ScanRecord] = field(default_factory=list)
    rejected: list[tuple[int, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.inconsistencies and not self.rejected

    def merge(self, other: ScanReport) -> None:
        self.graphs_seen += other.graphs_seen
        self.connected += other.connected
        self.hypothesis_true += other.hypothesis_true
        self.extremal += other.extremal
        self.max_extremal_margin = max(self.max_extremal_margin, other.max_extremal_margin)
        self.inconsistencies += other.inconsistencies
        self.hypothesis_graphs += other.hypothesis_graphs
        self.rejected += other.rejected

    def summary(self) -> str:
        return f"{len(self.inconsistencies)} inconsistencies / {self.connected} connected graphs"


def _adjacency_batch(n: int, indices: np.ndarray) -> np.ndarray:
    pairs = graph6_pairs(n)
    bits = (indices[:, None] >> np.arange(len(pairs), dtype=np.int64)) & 1
    a = np.zeros((len(indices), n, n))
    rows = np.array([p[0] for p in pairs])
    cols = np.array([p[1] for p in pairs])
    a[:, rows, cols] = bits
    a[:, cols, rows] = bits
    return a


def connected_mask(a: np.ndarray) -> np.ndarray:
    """Per-graph connectivity for a stack of adjacency matrices."""
    n = a.shape[-1]
    reach = (a + np.eye(n)) > 0
    steps = max(1, int(np.ceil(np.log2(max(n - 1, 1)))))
    for _ in range(steps):
        r = reach.astype(np.float32)
        reach = (r @ r) > 0
    return reach[:, 0, :].all(axis=1)


def _scan_chunk(args: tuple[int, float, float, int, int]) -> ScanReport:
    n, alpha, eps, start, stop = args
    report = ScanReport(n, alpha)
    idx = np.arange(start, stop, dtype=np.int64)
    report.graphs_seen = len(idx)
    a = _adjacency_batch(n, idx)
    conn = connected_mask(a)
    idx, a = idx[conn], a[conn]
    report.connected = len(idx)
    if not len(idx):
        return report
    deg = a.sum(axis=2)
    m = (1 - alpha) * a
    m[:, np.arange(n), np.arange(n)] = alpha * deg
    rho = np.linalg.eigvalsh(m)[:, -1]
    theta = theorem11_threshold(n, alpha)
    margin = rho - theta
    for k in np.flatnonzero(margin >= -eps):
        g = graph_from_index(n, int(idx[k]))
        rec = ScanRecord(
            int(idx[k]),
            emit_graph6(g).decode(),
            float(rho[k]),
            float(margin[k]),
            is_t_tough(g, 1),
            is_extremal_1tough(g),
        )
        report.hypothesis_true += 1
        report.hypothesis_graphs.append(rec)
        if rec.is_extremal:
            report.extremal += 1
            report.max_extremal_margin = max(report.max_extremal_margin, abs(rec.margin))
        if not (rec.conclusion_holds or rec.is_extremal):
            report.inconsistencies.append(rec)
    return report


def exhaustive_scan_theorem_1_1(
    n: int, alpha: float, jobs: int = 1, eps: float = EPS, chunk: int = CHUNK
) -> ScanReport:
    """Check every connected labeled graph on ``n`` vertices (6 <= n <= 8)."""
    if not 6 <= n <= 8:
        raise PreconditionError("built-in enumeration supports 6 <= n <= 8")
    if n < f_alpha(alpha):
        raise PreconditionError(f"n={n} is below f(alpha)={f_alpha(alpha)}")
    total = 1 << (n * (n - 1) // 2)
    tasks = [(n, float(alpha), eps, s, min(s + chunk, total)) for s in range(0, total, chunk)]
    report = ScanReport(n, float(alpha))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_scan_chunk, tasks))
    else:
        parts = [_scan_chunk(t) for t in tasks]
    for p in parts:  # tasks are in index order, so merged lists stay sorted
        report.merge(p)
    return report


def scan_graph_stream(
    graphs: Iterable[Graph], alpha: float, theorem: str = "1.1", t: int = 1, eps: float = EPS
) -> ScanReport:
    """Verdicts for an externally supplied list of graphs, e.g. a graph6 file."""
    if theorem not in ("1.1", "1.2"):
        raise ValueError(f"unknown theorem {theorem!r}")
    report = ScanReport(None, float(alpha))
    for i, g in enumerate(graphs):
        report.graphs_seen += 1
        try:
            if theorem == "1.1":
                v = check_theorem_1_1(g, alpha, eps, lazy=True)
            else:
                v = check_theorem_1_2(g, alpha, t, eps, lazy=True)
        except PreconditionError as exc:
            report.rejected.append((i, str(exc)))
            continue
        report.connected += 1
        if not v.hypothesis_holds:
            continue
        rec = ScanRecord(i, emit_graph6(g).decode(), v.rho, v.hypothesis_margin,
                         v.conclusion_holds, v.is_extremal)
        report.hypothesis_true += 1
        report.hypothesis_graphs.append(rec)
        if v.is_extremal:
            report.extremal += 1
            report.max_extremal_margin = max(report.max_extremal_margin, abs(v.hypothesis_margin))
        if not v.consistent:
            report.inconsistencies.append(rec)
    return report
