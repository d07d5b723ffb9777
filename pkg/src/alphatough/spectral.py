"""A_alpha matrices, dense spectra, and the cubic characteristic polynomials.

The A_alpha matrix of a graph is ``alpha * D + (1 - alpha) * A``. It is
nonnegative and symmetric, so its largest eigenvalue is the Perron root,
written rho_alpha(G).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph

#: Default tolerance for "rho(G) >= rho(H)" comparisons.
EPS = 1e-8


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not 0.0 <= alpha <= 1.0:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    return alpha


def a_alpha_matrix(g: Graph, alpha: float) -> np.ndarray:
    """Assemble A_alpha(G) as a dense, exactly symmetric array."""
    alpha = _check_alpha(alpha)
    if g.n == 0:
        raise ValueError("A_alpha of the empty graph is undefined")
    m = (1.0 - alpha) * g.adjacency_matrix()
    m[np.diag_indices(g.n)] = alpha * np.asarray(g.degrees(), dtype=float)
    return m


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in nonincreasing order."""

    eigenvalues: np.ndarray

    @property
    def rho(self) -> float:
        return float(self.eigenvalues[0])

    def __len__(self) -> int:
        return len(self.eigenvalues)


def full_spectrum(m: np.ndarray) -> Spectrum:
    """All eigenvalues of a real symmetric matrix, largest first.

    Backed by LAPACK's symmetric solver (Householder tridiagonalization
    followed by an implicit-shift/divide-and-conquer iteration).
    """
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("matrix must be square")
    if not np.array_equal(m, m.T):
        raise ValueError("matrix must be exactly symmetric")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return Spectrum(np.linalg.eigvalsh(m)[::-1].copy())


def spectral_radius(g: Graph, alpha: float) -> float:
    """rho_alpha(G), the largest eigenvalue of A_alpha(G)."""
    return full_spectrum(a_alpha_matrix(g, alpha)).rho


def alpha_edge_bound(n: int, m: int, alpha: float) -> float:
    """Upper bound 2m(1-alpha)/(n-1) + alpha*n - 1 (graphs without isolated vertices)."""
    if n < 2:
        raise ValueError("bound needs n >= 2")
    return 2 * m * (1 - alpha) / (n - 1) + alpha * n - 1


@dataclass(frozen=True)
class Cubic:
    """Monic cubic x^3 + c2 x^2 + c1 x + c0."""

    c2: float
    c1: float
    c0: float

    @property
    def coefficients(self) -> tuple[float, float, float, float]:
        return (1.0, self.c2, self.c1, self.c0)

    def __call__(self, x: float) -> float:
        return ((x + self.c2) * x + self.c1) * x + self.c0

    def derivative(self, x: float) -> float:
        return (3 * x + 2 * self.c2) * x + self.c1

    def critical_points(self) -> tuple[float, ...]:
        """Real zeros of the derivative, increasing."""
        disc = self.c2 * self.c2 - 3 * self.c1
        if disc < 0:
            return ()
        r = math.sqrt(disc)
        return ((-self.c2 - r) / 3, (-self.c2 + r) / 3)

    def roots(self) -> np.ndarray:
        """All three roots, real parts, in nonincreasing order, each Newton-polished."""
        raw = np.roots(self.coefficients)
        out = []
        for z in raw:
            x = float(z.real)
            for _ in range(3):
                d = self.derivative(x)
                if d == 0:
                    break
                step = self(x) / d
                if not math.isfinite(step) or abs(step) > 1e-6 * max(1.0, abs(x)):
                    break
                x -= step
            out.append(x)
        return np.array(sorted(out, reverse=True))


def theorem11_cubic(n: int, alpha: float) -> Cubic:
    """Cubic whose largest root is rho_alpha(K_1 ∨ (K_{n-2} ∪ K_1))."""
    if n < 3:
        raise ValueError("theorem11_cubic requires n >= 3")
    a = float(alpha)
    return Cubic(
        c2=-((a + 1) * n + a - 3),
        c1=a * n * n + (a * a - a - 1) * n - 2 * a + 1,
        c0=-a * a * n * n + (3 * a * a - a + 1) * n - 4 * a * a + 5 * a - 3,
    )


def phi_b1_cubic(n: int, s: int, alpha: float) -> Cubic:
    """Characteristic polynomial of the 3x3 quotient of A_alpha(K_s ∨ (K_{n-2s} ∪ sK_1))."""
    if s < 1 or 2 * s > n - 1:
        raise ValueError(f"phi_b1_cubic requires 1 <= s <= (n-1)/2, got n={n}, s={s}")
    a = float(alpha)
    return Cubic(
        c2=-((a + 1) * n + (a - 1) * s - 2),
        c1=a * n * n + (a * a * s - a - 1) * n - s * s - (2 * a - 1) * s + 1,
        c0=(
            -a * a * s * n * n
            + (2 * a * a - 2 * a + 1) * s * s * n
            + (a * a + a) * s * n
            - (3 * a * a - 5 * a + 2) * s**3
            - (a * a - a + 1) * s * s
            - a * s
        ),
    )


def largest_root(c: Cubic, bracket_hint: float = 1.0, tol: float = 1e-12) -> float:
    """Largest real root of a monic cubic by bracketing, bisection and a Newton polish.

    The bracket is built on the rightmost monotone branch: to the right of the
    larger critical point when the cubic is nonpositive there, otherwise to the
    left of the smaller one (the only real root then lies there).
    """
    crit = c.critical_points()
    if crit and c(crit[1]) <= 0:
        lo = crit[1]
        if c(lo) == 0:
            return lo
        hi = max(bracket_hint, lo + 1.0)
        while c(hi) <= 0:
            hi = lo + 2 * (hi - lo)
            if not math.isfinite(hi):
                raise ArithmeticError("no real root located in expanded bracket")
    else:
        hi = crit[0] if crit else max(bracket_hint, 1.0)
        if crit and c(hi) == 0:
            return hi
        width = max(1.0, abs(bracket_hint))
        # when there are no critical points hi may sit below the root
        while c(hi) <= 0:
            hi += width
            width *= 2
            if not math.isfinite(hi):
                raise ArithmeticError("no real root located in expanded bracket")
        lo, width = hi - 1.0, 1.0
        while c(lo) > 0:
            width *= 2
            lo = hi - width
            if not math.isfinite(lo):
                raise ArithmeticError("no real root located in expanded bracket")
    # invariant: c(lo) <= 0 < c(hi), c increasing on [lo, hi]
    while hi - lo > 0.25 * tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if c(mid) <= 0:
            lo = mid
        else:
            hi = mid
    x = 0.5 * (lo + hi)
    d = c.derivative(x)
    if d > 0:
        y = x - c(x) / d
        if lo <= y <= hi:
            x = y
    return x
