"""Numerical audits of the inequality chains behind the two toughness theorems.

Each audit evaluates the closed-form polynomials used in the argument at
concrete parameters, compares them with values computed independently from
constructed graphs (dense eigensolves, edge counts), and records one
:class:`AuditCheck` per link of the chain.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .graph import edge_count_g2, family_g2, family_g3, family_gs2, g3_independent_size
from .spectral import EPS, alpha_edge_bound, phi_b1_cubic, spectral_radius
from .theorems import (
    PreconditionError,
    as_fraction,
    f_alpha,
    theorem11_threshold,
    theorem12_n_min,
)


@dataclass(frozen=True)
class AuditCheck:
    """One comparison ``lhs <relation> rhs``.

    ``margin`` is positive when the relation holds with room to spare; for
    identities it is ``-|lhs - rhs|``.
    """

    name: str
    lhs: float
    relation: str
    rhs: float
    tol: float

    @property
    def margin(self) -> float:
        if self.relation in (">", ">="):
            return self.lhs - self.rhs
        if self.relation in ("<", "<="):
            return self.rhs - self.lhs
        return 0.0 - abs(self.lhs - self.rhs)

    @property
    def passed(self) -> bool:
        if self.relation == "=":
            return abs(self.lhs - self.rhs) <= self.tol * max(1.0, abs(self.lhs), abs(self.rhs))
        return self.margin >= -self.tol


@dataclass
class AuditReport:
    audit: str
    params: dict
    checks: list[AuditCheck] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, lhs: float, relation: str, rhs: float, tol: float) -> None:
        self.checks.append(AuditCheck(name, float(lhs), relation, float(rhs), tol))

    def failures(self) -> list[AuditCheck]:
        return [c for c in self.checks if not c.passed]


# --- polynomials from the 1-tough argument -------------------------------------


def difference_quadratic(x: float, n: int, s: int, a: float) -> float:
    """h(x): the quadratic with phi_B1(x) - phi(x) = (s - 1) h(x) at roots of phi."""
    return (
        (1 - a) * x * x
        + (a * a * n - 2 * a - s) * x
        - a * a * n * n
        + (2 * a * a - 2 * a + 1) * s * n
        + (3 * a * a - a + 1) * n
        - (3 * a * a - 5 * a + 2) * s * s
        - (4 * a * a - 6 * a + 3) * s
        - 4 * a * a
        + 5 * a
        - 3
    )


def difference_lower_bound(x: float, s: int, a: float) -> float:
    """p(x, s), equal to h(n - 2) once x = n."""
    return (
        (1 - a) * x * x
        + ((2 * a * a - 2 * a) * s + a * a + a - 3) * x
        - (3 * a * a - 5 * a + 2) * s * s
        - (4 * a * a - 6 * a + 1) * s
        - 4 * a * a
        + 5 * a
        + 1
    )


def phi_b1_at_n_minus_2(s: float, n: int, a: float) -> float:
    """Phi(s, n), the B_1 cubic evaluated at n - 2, as a cubic in s."""
    return (
        (3 * a - 2) * (1 - a) * s**3
        + ((2 * a * a - 2 * a) * n - a * a + a + 1) * s * s
        + ((1 - a) * n * n - (a * a - 3 * a + 3) * n - a + 2) * s
        + (a - 1) * n * n
        - (2 * a - 3) * n
        - 2
    )


def audit_claim1_section3(n: int, s: int, alpha: float, tol: float = EPS) -> AuditReport:
    """Audit the argument that K_s ∨ (K_{n-2s} ∪ sK_1), s >= 2, loses to s = 1."""
    if n < f_alpha(alpha):
        raise PreconditionError(f"needs n >= f(alpha) = {f_alpha(alpha)}, got n={n}")
    if s < 2 or 2 * s > n - 1:
        raise PreconditionError(f"needs 2 <= s <= (n-1)/2, got n={n}, s={s}")
    a = float(alpha)
    rep = AuditReport("claim1", {"n": n, "s": s, "alpha": a})
    phi_b1 = phi_b1_cubic(n, s, a)
    theta = theorem11_threshold(n, a)
    h_theta = difference_quadratic(theta, n, s, a)

    rep.add("phi_b1(theta) = (s-1) h(theta)", phi_b1(theta), "=", (s - 1) * h_theta, tol)
    rep.add("theta > n-2", theta, ">", n - 2, tol)
    eta2 = phi_b1.roots()[1]
    diag = n + (a - 2) * s - 1
    rep.add("eta2 <= n+(alpha-2)s-1", eta2, "<=", diag, tol)
    rep.add("n+(alpha-2)s-1 < n-2", diag, "<", n - 2, tol)
    rep.add("h(n-2) = p(n,s)", difference_quadratic(n - 2, n, s, a), "=",
            difference_lower_bound(n, s, a), tol)
    if as_fraction(alpha) <= Fraction(2, 3):
        p = difference_lower_bound(n, s, a)
        rep.add("p(n,s) > 0", p, ">", 0.0, tol)
        rep.add("h(theta) > p(n,s)", h_theta, ">", p, tol)
    else:
        rep.add("Phi(2,n) > 0", phi_b1_at_n_minus_2(2, n, a), ">", 0.0, tol)
        rep.add("Phi((n-1)/2,n) > 0", phi_b1_at_n_minus_2((n - 1) / 2, n, a), ">", 0.0, tol)
        rep.add("phi_b1(n-2) > 0", phi_b1(n - 2), ">", 0.0, tol)
    rho = spectral_radius(family_gs2(n, s), a)
    rep.add("rho(G_s^2) < theta", rho, "<", theta, tol)
    rep.add("phi_b1(n-2) = Phi(s,n)", phi_b1(n - 2), "=", phi_b1_at_n_minus_2(s, n, a), tol)
    return rep


# --- polynomials from the t-tough argument -------------------------------------


def g2_edge_quadratic(c: float, n: int, t: int) -> float:
    """(2t+1)c^2 - (2n+2t+3)c + n^2 + n + 2, which equals 2e(G_2)."""
    return (2 * t + 1) * c * c - (2 * n + 2 * t + 3) * c + n * n + n + 2


def g3_bound_numerator(n: int, t: int, a: float) -> float:
    """psi(n); the edge bound for G_3 is n - 2 + psi(n) / ((t+1)^2 (n-1))."""
    return (
        -(1 - a) * n * n
        + ((2 - a) * t * t + (4 - 2 * a) * t + 3 * a - 2) * n
        - t * t
        - 2 * t
        - 5
        + 4 * a
    )


def audit_theorem12_chain(n: int, t: int, alpha: float, c: int, tol: float = EPS) -> AuditReport:
    """Audit the bounds that push every non-t-tough competitor below n - 2."""
    try:
        n_min = theorem12_n_min(t, alpha)
    except ValueError as exc:
        raise PreconditionError(str(exc)) from None
    if n < n_min:
        raise PreconditionError(f"needs n >= {n_min}, got n={n}")
    if not 3 <= c <= Fraction(n + 1, t + 1):
        raise PreconditionError(f"needs 3 <= c <= (n+1)/(t+1), got c={c}")
    a = float(alpha)
    rep = AuditReport("t12", {"n": n, "t": t, "alpha": a, "c": c})
    g2 = family_g2(n, t, c)
    two_e = 2 * g2.m
    rep.add("2e(G_2) = (n-c+1)(n-c)+2(tc-1)(c-1)", two_e, "=", 2 * edge_count_g2(n, t, c), tol)
    rep.add("2e(G_2) = edge quadratic(c)", two_e, "=", g2_edge_quadratic(c, n, t), tol)
    cmax = (n + 1) / (t + 1)
    drop = g2_edge_quadratic(3, n, t) - g2_edge_quadratic(cmax, n, t)
    rep.add("quadratic(3) - quadratic((n+1)/(t+1)) > 0", drop, ">", 0.0, tol)
    rep.add("quadratic(3) - quadratic(cmax) closed form", drop, "=",
            (n - 3 * t - 2) * (n - 4 * t * t - 6 * t - 1) / (t + 1) ** 2, tol)
    rep.add("quadratic(c) <= quadratic(3)", g2_edge_quadratic(c, n, t), "<=",
            g2_edge_quadratic(3, n, t), tol)
    rho2 = spectral_radius(g2, a)
    bound2 = alpha_edge_bound(n, g2.m, a)
    rep.add("rho(G_2) <= edge bound", rho2, "<=", bound2, tol)
    rep.add("edge bound at c=3 <= n-2",
            (1 - a) * g2_edge_quadratic(3, n, t) / (n - 1) + a * n - 1, "<=", n - 2, tol)
    rep.add("rho(G_2) <= n-2", rho2, "<=", n - 2, tol)
    rho_ext = spectral_radius(family_g2(n, t, 2), a)
    rep.add("rho(K_{2t-1} v (K_{n-2t} u K_1)) > n-2", rho_ext, ">", n - 2, tol)
    psi = g3_bound_numerator(n, t, a)
    rep.add("psi(n) < 0", psi, "<", 0.0, tol)
    g3 = family_g3(n, t)
    q = g3_independent_size(n, t)
    rep.add("2e(G_3) = (n-q)(n+q-1)", 2 * g3.m, "=", (n - q) * (n + q - 1), tol)
    rho3 = spectral_radius(g3, a)
    rep.add("rho(G_3) < n-2+psi/((t+1)^2(n-1))", rho3, "<",
            n - 2 + psi / ((t + 1) ** 2 * (n - 1)), tol)
    rep.add("rho(G_3) < n-2", rho3, "<", n - 2, tol)
    return rep


def audit_theorem12_all_c(n: int, t: int, alpha: float, tol: float = EPS) -> list[AuditReport]:
    """Audit every admissible c, from 3 to floor((n+1)/(t+1))."""
    return [audit_theorem12_chain(n, t, alpha, c, tol) for c in range(3, (n + 1) // (t + 1) + 1)]


def audit_claim1_all_s(n: int, alpha: float, tol: float = EPS) -> list[AuditReport]:
    return [audit_claim1_section3(n, s, alpha, tol) for s in range(2, (n - 1) // 2 + 1)]
