"""Hypotheses, conclusions and extremal graphs of the two toughness statements.

The 1-tough statement (``check_theorem_1_1``; alpha in [0, 1), n >= f(alpha)):
a connected graph with rho_alpha(G) >= rho_alpha(K_1 ∨ (K_{n-2} ∪ K_1)) is
1-tough unless it is that graph. The t-tough statement (``check_theorem_1_2``;
alpha in [1/2, 3/4), integer t >= 1, n large): a connected graph with
rho_alpha(G) >= rho_alpha(K_{2t-1} ∨ (K_{n-2t} ∪ K_1)) is t-tough unless it is
that graph.

Range checks on alpha are done in exact rational arithmetic. Floats are read
through their shortest decimal representation, so ``0.8`` means 4/5 and the
order bound 4/(1 - 0.8) is exactly 20.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Real
from typing import Sequence

from .graph import Graph, clique_join, family_g2
from .spectral import EPS, largest_root, spectral_radius, theorem11_cubic
from .toughness import is_t_tough


class PreconditionError(ValueError):
    """A graph or parameter lies outside a theorem's stated range."""


def as_fraction(x: Real | str) -> Fraction:
    """Exact value of a number or a ``"p/q"`` / decimal string."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(repr(x))
    return Fraction(str(x).strip())


def f_alpha(alpha: Real | str) -> Fraction:
    """Minimum order for the 1-tough statement: 6 on [0, 2/3], 4/(1 - alpha) on (2/3, 1)."""
    a = as_fraction(alpha)
    if not 0 <= a < 1:
        raise ValueError(f"f(alpha) is defined for alpha in [0, 1), got {alpha}")
    if a <= Fraction(2, 3):
        return Fraction(6)
    return 4 / (1 - a)


def theorem11_min_order(alpha: Real | str) -> int:
    return math.ceil(f_alpha(alpha))


def theorem12_n_min(t: int, alpha: Real | str) -> Fraction:
    """max{5t^2 + 10t + 1, (12t(1 - alpha) - 2 alpha + 1) / (3 - 4 alpha)}."""
    a = as_fraction(alpha)
    if not Fraction(1, 2) <= a < Fraction(3, 4):
        raise ValueError(f"the t-tough statement needs alpha in [1/2, 3/4), got {alpha}")
    if not isinstance(t, int) or t < 1:
        raise ValueError(f"t must be a positive integer, got {t!r}")
    return max(Fraction(5 * t * t + 10 * t + 1), (12 * t * (1 - a) - 2 * a + 1) / (3 - 4 * a))


def theorem12_min_order(t: int, alpha: Real | str) -> int:
    return math.ceil(theorem12_n_min(t, alpha))


def theorem11_threshold(n: int, alpha: float) -> float:
    """theta(n) = rho_alpha(K_1 ∨ (K_{n-2} ∪ K_1)), the largest root of theorem11_cubic."""
    return largest_root(theorem11_cubic(n, alpha), bracket_hint=float(n))


def is_extremal_1tough(g: Graph) -> bool:
    """Is ``g`` (any labeling of) K_1 ∨ (K_{n-2} ∪ K_1)?"""
    n = g.n
    if n < 4:
        raise ValueError("recognition defined for n >= 4")
    deg = g.degrees()
    for u in range(n):
        if deg[u] != 1:
            continue
        (v,) = g.adj[u]
        if deg[v] != n - 1:
            continue
        # each other vertex must see everything except u
        if all(deg[w] == n - 2 for w in range(n) if w not in (u, v)):
            return True
    return False


def is_extremal_ttough(g: Graph, t: int) -> bool:
    """Is ``g`` (any labeling of) K_{2t-1} ∨ (K_{n-2t} ∪ K_1)?"""
    n = g.n
    if n < 2 * t + 2:
        raise ValueError(f"recognition defined for n >= 2t + 2 = {2 * t + 2}")
    deg = g.degrees()
    low = [u for u in range(n) if deg[u] == 2 * t - 1]
    if len(low) != 1:
        return False
    u = low[0]
    hub = g.adj[u]
    if any(deg[v] != n - 1 for v in hub):
        return False
    rest = [v for v in range(n) if v != u and v not in hub]
    return all(deg[v] == n - 2 for v in rest)


@dataclass(frozen=True)
class TheoremVerdict:
    """Outcome of one theorem check; ``hypothesis_margin`` is rho - threshold.

    ``conclusion_holds`` is ``None`` when the check was run lazily and the
    hypothesis failed, since the conclusion is then irrelevant.
    """

    hypothesis_holds: bool
    hypothesis_margin: float
    conclusion_holds: bool | None
    is_extremal: bool
    rho: float
    threshold: float

    @property
    def consistent(self) -> bool:
        return not self.hypothesis_holds or self.conclusion_holds or self.is_extremal


def check_theorem_1_1(g: Graph, alpha: float, eps: float = EPS, lazy: bool = False) -> TheoremVerdict:
    a = as_fraction(alpha)
    if not 0 <= a < 1:
        raise PreconditionError(f"alpha must lie in [0, 1), got {alpha}")
    if g.n < f_alpha(a):
        raise PreconditionError(f"needs n >= f(alpha) = {f_alpha(a)}, got n={g.n}")
    if not g.is_connected():
        raise PreconditionError("graph must be connected")
    rho = spectral_radius(g, float(alpha))
    theta = theorem11_threshold(g.n, float(alpha))
    margin = rho - theta
    hyp = margin >= -eps
    tough = is_t_tough(g, 1) if hyp or not lazy else None
    return TheoremVerdict(hyp, margin, tough, is_extremal_1tough(g), rho, theta)


def check_theorem_1_2(
    g: Graph, alpha: float, t: int, eps: float = EPS, lazy: bool = False
) -> TheoremVerdict:
    try:
        n_min = theorem12_n_min(t, alpha)
    except ValueError as exc:
        raise PreconditionError(str(exc)) from None
    if g.n < n_min:
        raise PreconditionError(f"needs n >= {n_min}, got n={g.n}")
    if not g.is_connected():
        raise PreconditionError("graph must be connected")
    rho = spectral_radius(g, float(alpha))
    threshold = spectral_radius(family_g2(g.n, t, 2), float(alpha))
    margin = rho - threshold
    hyp = margin >= -eps
    tough = is_t_tough(g, t) if hyp or not lazy else None
    return TheoremVerdict(hyp, margin, tough, is_extremal_ttough(g, t), rho, threshold)


def lemma23_ordering_check(s: int, parts: Sequence[int], alpha: float, eps: float = EPS) -> bool:
    """rho(K_s ∨ (K_{n_1} ∪ ... ∪ K_{n_t})) <= rho(K_s ∨ (K_{n-s-t+1} ∪ (t-1)K_1)).

    Returns True iff the inequality holds within ``eps`` and equality (within
    ``eps``) occurs exactly when ``parts`` is already (n-s-t+1, 1, ..., 1).
    """
    parts = list(parts)
    if s < 1 or not parts or any(p < 1 for p in parts):
        raise ValueError("need s >= 1 and positive parts")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError("parts must be nonincreasing")
    k = len(parts)
    n = sum(parts) + s
    top = n - s - k + 1
    if parts[0] > top:
        raise ValueError("largest part exceeds n - s - t + 1")
    extremal = [top] + [1] * (k - 1)
    a = float(alpha)
    diff = spectral_radius(clique_join(s, extremal), a) - spectral_radius(clique_join(s, parts), a)
    if diff < -eps:
        return False
    return (abs(diff) <= eps) == (parts == extremal)
