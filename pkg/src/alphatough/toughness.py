"""Exact toughness by size-ordered cut-set enumeration.

For a non-complete connected graph the toughness is the minimum of
``|S| / c(G - S)`` over vertex sets ``S`` leaving at least two components.
Sets are visited by increasing size and, within a size, in lexicographic
order, so the first minimizer met is the canonical witness (smallest ``|S|``,
then lexicographically smallest). A size ``k`` can leave at most
``min(n - k, indep(G))`` components, which bounds how far the search must go.

Exact search is exponential; graphs up to about 24 vertices are practical
unless the bound cuts the search short (dense graphs).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from numbers import Rational

from .graph import Graph, count_components

DEFAULT_CAP = 22


@dataclass(frozen=True)
class Toughness:
    """Exact toughness; ``value`` is ``math.inf`` for complete graphs."""

    value: Fraction | float
    witness: frozenset[int] | None
    components: int | None

    @property
    def is_infinite(self) -> bool:
        return self.witness is None

    def __str__(self) -> str:
        if self.is_infinite:
            return "infinite"
        return f"{self.value.numerator}/{self.value.denominator}"


def independence_number(g: Graph) -> int:
    """Largest independent set size (branching on a maximum-degree vertex)."""
    masks = g.neighbor_masks

    def solve(cand: int) -> int:
        best = 0
        while cand:
            # vertices of degree <= 1 inside cand can always be taken
            pick = -1
            top, top_deg = -1, -1
            c = cand
            while c:
                b = c & -c
                v = b.bit_length() - 1
                d = (masks[v] & cand).bit_count()
                if d <= 1:
                    pick = v
                    break
                if d > top_deg:
                    top, top_deg = v, d
                c ^= b
            if pick >= 0:
                best += 1
                cand &= ~(masks[pick] | (1 << pick))
                continue
            with_top = 1 + solve(cand & ~(masks[top] | (1 << top)))
            without = solve(cand & ~(1 << top))
            return best + max(with_top, without)
        return best

    return solve((1 << g.n) - 1)


def toughness(g: Graph) -> Toughness:
    """Exact toughness with canonical witness.

    Disconnected graphs get ``0`` with the empty witness; complete graphs get
    ``inf`` and no witness.
    """
    n = g.n
    if n == 0:
        raise ValueError("toughness of the empty graph is undefined")
    if g.is_complete():
        return Toughness(math.inf, None, None)
    masks = g.neighbor_masks
    full = (1 << n) - 1
    c0 = count_components(masks, full)
    if c0 >= 2:
        return Toughness(Fraction(0), frozenset(), c0)
    indep = independence_number(g)
    best_k, best_c, best_s = None, None, None
    for k in range(1, n - 1):
        cap = min(n - k, indep)
        # best achievable at size k is k/cap; stop once it cannot beat best_k/best_c
        if best_k is not None and k * best_c >= best_k * cap:
            break
        for s in combinations(range(n), k):
            rem = full
            for v in s:
                rem &= ~(1 << v)
            c = count_components(masks, rem)
            if c >= 2 and (best_k is None or k * best_c < best_k * c):
                best_k, best_c, best_s = k, c, s
                if c == cap:
                    break
    return Toughness(Fraction(best_k, best_c), frozenset(best_s), best_c)


def toughness_bruteforce(g: Graph) -> Toughness:
    """Plain enumeration of all 2^n vertex subsets; the reference for :func:`toughness`."""
    n = g.n
    if g.is_complete():
        return Toughness(math.inf, None, None)
    best = None
    for mask in range(1 << n):
        s = tuple(v for v in range(n) if mask >> v & 1)
        c = _components_plain(g, set(s))
        if c < 2:
            continue
        key = (Fraction(len(s), c), len(s), s)
        if best is None or key < best[0]:
            best = (key, c)
    (value, _, s), c = best
    return Toughness(value, frozenset(s), c)


def _components_plain(g: Graph, removed: set[int]) -> int:
    seen = set(removed)
    count = 0
    for r in range(g.n):
        if r in seen:
            continue
        count += 1
        stack = [r]
        seen.add(r)
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
    return count


def worst_cut(g: Graph) -> tuple[frozenset[int], int]:
    """Canonical minimizing set ``S`` and ``c(G - S)``."""
    if not g.is_connected():
        raise ValueError("worst_cut requires a connected graph")
    t = toughness(g)
    if t.is_infinite:
        raise ValueError("complete graphs have no disconnecting set")
    return t.witness, t.components


def is_t_tough(g: Graph, t: Rational | int) -> bool:
    """True iff ``|S| >= t * c(G - S)`` for every ``S`` with ``c(G - S) >= 2``.

    Stops at the first violating set, so non-tough verdicts on large graphs
    are cheap when a small violating set exists.
    """
    t = Fraction(t)
    if t < 0:
        raise ValueError("t must be nonnegative")
    if g.is_complete() or t == 0:
        return True
    n = g.n
    masks = g.neighbor_masks
    full = (1 << n) - 1
    if count_components(masks, full) >= 2:
        return False
    indep = independence_number(g)
    for k in range(1, n - 1):
        cap = min(n - k, indep)
        if k >= t * cap:
            break
        for s in combinations(range(n), k):
            rem = full
            for v in s:
                rem &= ~(1 << v)
            c = count_components(masks, rem)
            if c >= 2 and k < t * c:
                return False
    return True
