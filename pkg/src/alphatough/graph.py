"""Simple undirected graphs and the constructions used throughout the package.

Vertices are dense integers ``0..n-1``. Every constructor fixes a canonical
labeling: ``join(G1, G2)`` and ``disjoint_union(G1, G2)`` place the vertices of
``G1`` first and shift those of ``G2`` by ``G1.n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

import numpy as np


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph stored as a tuple of neighbor sets."""

    adj: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        n = len(self.adj)
        for u, nbrs in enumerate(self.adj):
            if u in nbrs:
                raise ValueError(f"self-loop at vertex {u}")
            for v in nbrs:
                if not 0 <= v < n:
                    raise ValueError(f"neighbor {v} of {u} out of range [0, {n})")
                if u not in self.adj[v]:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        n = int(n)
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)  # numpy integers would leak into the bitmasks
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(tuple(frozenset(s) for s in nbrs))

    @classmethod
    def from_adjacency_matrix(cls, a) -> Graph:
        a = np.asarray(a)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency matrix must be square")
        n = a.shape[0]
        return cls.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n) if a[i, j]))

    @property
    def n(self) -> int:
        return len(self.adj)

    @cached_property
    def m(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def __len__(self) -> int:
        return self.n

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(s) for s in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as ``(u, v)`` with ``u < v``, sorted."""
        for u in range(self.n):
            for v in sorted(self.adj[u]):
                if u < v:
                    yield (u, v)

    def neighbors(self, v: int) -> list[int]:
        return sorted(self.adj[v])

    @cached_property
    def neighbor_masks(self) -> tuple[int, ...]:
        """Neighborhoods as integer bitsets (bit ``v`` set iff ``v`` adjacent)."""
        return tuple(sum(1 << v for v in s) for s in self.adj)

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1.0
        return a

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def is_connected(self) -> bool:
        return self.n > 0 and components_after_removal(self, ()) == 1

    def add_edge(self, u: int, v: int) -> Graph:
        return Graph.from_edges(self.n, [*self.edges(), (u, v)])

    def remove_edge(self, u: int, v: int) -> Graph:
        if not self.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge")
        drop = {(u, v), (v, u)}
        return Graph.from_edges(self.n, (e for e in self.edges() if e not in drop))

    def remove_vertices(self, s: Iterable[int]) -> Graph:
        """Induced subgraph on the remaining vertices, relabeled in increasing order."""
        removed = set(s)
        keep = [v for v in range(self.n) if v not in removed]
        index = {v: i for i, v in enumerate(keep)}
        return Graph.from_edges(
            len(keep),
            ((index[u], index[v]) for u, v in self.edges() if u in index and v in index),
        )

    def relabel(self, perm: Iterable[int]) -> Graph:
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        perm = list(perm)
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of range(n)")
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _check_vertex_set(g: Graph, s: Iterable[int]) -> frozenset[int]:
    s = frozenset(s)
    for v in s:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} not in graph of order {g.n}")
    return s


def complete(n: int) -> Graph:
    """The complete graph K_n; ``complete(1)`` is the trivial graph."""
    if n < 1:
        raise ValueError("complete(n) requires n >= 1")
    return Graph(tuple(frozenset(v for v in range(n) if v != u) for u in range(n)))


def edgeless(n: int) -> Graph:
    """n isolated vertices, written nK_1."""
    if n < 1:
        raise ValueError("edgeless(n) requires n >= 1")
    return Graph(tuple(frozenset() for _ in range(n)))


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle requires n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def star(leaves: int) -> Graph:
    """K_{1,leaves} with the center at vertex 0."""
    return join(complete(1), edgeless(leaves))


def complete_bipartite(a: int, b: int) -> Graph:
    return join(edgeless(a), edgeless(b))


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    off = g1.n
    return Graph(g1.adj + tuple(frozenset(v + off for v in s) for s in g2.adj))


def join(g1: Graph, g2: Graph) -> Graph:
    n1, n2 = g1.n, g2.n
    left = tuple(s | frozenset(range(n1, n1 + n2)) for s in g1.adj)
    right = tuple(frozenset(v + n1 for v in s) | frozenset(range(n1)) for s in g2.adj)
    return Graph(left + right)


def union_all(graphs: Iterable[Graph]) -> Graph:
    out = Graph(())
    for g in graphs:
        out = disjoint_union(out, g)
    return out


def clique_join(s: int, parts: Iterable[int]) -> Graph:
    """K_s joined with the disjoint union of cliques of the given orders."""
    body = union_all(complete(p) for p in parts)
    return join(complete(s), body) if s > 0 else body


def family_gs2(n: int, s: int) -> Graph:
    """K_s ∨ (K_{n-2s} ∪ sK_1).

    Labeling: the K_s block is ``[0, s)``, the K_{n-2s} block ``[s, n-s)``
    and the isolated-vertex block ``[n-s, n)``.
    """
    if s < 1 or 2 * s > n - 1:
        raise ValueError(f"family_gs2 requires 1 <= s <= (n-1)/2, got n={n}, s={s}")
    return join(complete(s), disjoint_union(complete(n - 2 * s), edgeless(s)))


def family_g2(n: int, t: int, c: int) -> Graph:
    """K_{tc-1} ∨ (K_{n-(t+1)c+2} ∪ (c-1)K_1), blocks labeled in that order."""
    if t < 1 or c < 2:
        raise ValueError(f"family_g2 requires t >= 1 and c >= 2, got t={t}, c={c}")
    if n < (t + 1) * c - 1:
        raise ValueError(f"family_g2 requires n >= (t+1)c-1 = {(t + 1) * c - 1}, got n={n}")
    return join(complete(t * c - 1), disjoint_union(complete(n - (t + 1) * c + 2), edgeless(c - 1)))


def g3_independent_size(n: int, t: int) -> int:
    """ceil((n+2)/(t+1)), the size of the independent block of G_3."""
    return -(-(n + 2) // (t + 1))


def family_g3(n: int, t: int) -> Graph:
    """K_{n-q} ∨ qK_1 with q = ceil((n+2)/(t+1))."""
    if t < 1:
        raise ValueError("family_g3 requires t >= 1")
    q = g3_independent_size(n, t)
    if n < q + 1:
        raise ValueError(f"family_g3 requires n >= ceil((n+2)/(t+1)) + 1 = {q + 1}, got n={n}")
    return join(complete(n - q), edgeless(q))


def components_after_removal(g: Graph, s: Iterable[int] = ()) -> int:
    """Number of connected components of G - S (0 when S = V(G))."""
    s = _check_vertex_set(g, s)
    masks = g.neighbor_masks
    remaining = ((1 << g.n) - 1) & ~sum(1 << v for v in s)
    return count_components(masks, remaining)


def count_components(masks: tuple[int, ...], remaining: int) -> int:
    """Components of the subgraph induced by the bitset ``remaining``."""
    count = 0
    while remaining:
        low = remaining & -remaining
        frontier = low
        seen = low
        while frontier:
            nxt = 0
            while frontier:
                b = frontier & -frontier
                nxt |= masks[b.bit_length() - 1]
                frontier ^= b
            nxt &= remaining & ~seen
            seen |= nxt
            frontier = nxt
        remaining &= ~seen
        count += 1
    return count


def edge_count_g2(n: int, t: int, c: int) -> int:
    """Closed form e(G_2) = ((n-c+1)(n-c) + 2(tc-1)(c-1)) / 2."""
    return ((n - c + 1) * (n - c) + 2 * (t * c - 1) * (c - 1)) // 2


def edge_count_g3(n: int, t: int) -> int:
    q = g3_independent_size(n, t)
    return (n - q) * (n + q - 1) // 2
