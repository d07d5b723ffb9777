import sympy as sp
import pytest

from alphatough import PreconditionError, audit_claim1_section3, audit_theorem12_chain, f_alpha
from alphatough.audit import (
    AuditCheck,
    audit_claim1_all_s,
    audit_theorem12_all_c,
    difference_lower_bound,
    difference_quadratic,
    g2_edge_quadratic,
    g3_bound_numerator,
    phi_b1_at_n_minus_2,
)
from alphatough.spectral import phi_b1_cubic, theorem11_cubic

X, N, S, A = sp.symbols("x n s a")


def sym_cubic(c):
    return X**3 + c[1] * X**2 + c[2] * X + c[3]


def test_difference_quadratic_symbolic():
    # at a root of the s = 1 cubic, phi_B1 equals (s - 1) h
    phi = sp.expand(
        (X - A * S) * (X - (N + (A - 2) * S - 1)) * (X - (A * N - A * S + S - 1))
        - (1 - A) ** 2 * S * S * (X - (N + (A - 2) * S - 1))
        - (1 - A) ** 2 * S * (N - 2 * S) * (X - A * S)
    )
    phi1 = phi.subs(S, 1)
    h = difference_quadratic(X, N, S, A)
    assert sp.expand(sp.rem(sp.expand(phi - phi1 - (S - 1) * h), sp.expand(phi1), X)) == 0
    assert sp.expand(h.subs(X, N - 2) - difference_lower_bound(N, S, A)) == 0
    assert sp.expand(phi.subs(X, N - 2) - phi_b1_at_n_minus_2(S, N, A)) == 0


@pytest.mark.parametrize("n,s,a", [(9, 2, 0.5), (12, 5, 0.3), (20, 4, 0.8)])
def test_closed_form_cubics_agree_with_symbolic(n, s, a):
    phi = sp.expand(
        (X - A * S) * (X - (N + (A - 2) * S - 1)) * (X - (A * N - A * S + S - 1))
        - (1 - A) ** 2 * S * S * (X - (N + (A - 2) * S - 1))
        - (1 - A) ** 2 * S * (N - 2 * S) * (X - A * S)
    )
    coeffs = sp.Poly(phi.subs({N: n, S: s, A: sp.nsimplify(a)}), X).all_coeffs()
    assert [float(c) for c in coeffs] == pytest.approx(list(phi_b1_cubic(n, s, a).coefficients), abs=1e-9)
    coeffs1 = sp.Poly(phi.subs({N: n, S: 1, A: sp.nsimplify(a)}), X).all_coeffs()
    assert [float(c) for c in coeffs1] == pytest.approx(list(theorem11_cubic(n, a).coefficients), abs=1e-9)


def test_g2_quadratic_symbolic():
    c, t = sp.symbols("c t")
    assert sp.expand((N - c + 1) * (N - c) + 2 * (t * c - 1) * (c - 1) - g2_edge_quadratic(c, N, t)) == 0
    drop = g2_edge_quadratic(3, N, t) - g2_edge_quadratic((N + 1) / (t + 1), N, t)
    assert sp.simplify(drop - (N - 3 * t - 2) * (N - 4 * t * t - 6 * t - 1) / (t + 1) ** 2) == 0


@pytest.mark.parametrize("n,s,a", [(9, 2, 0.5), (20, 3, 0), (20, 4, 0.8)])
def test_clique_family_audit_examples(n, s, a):
    rep = audit_claim1_section3(n, s, a)
    assert rep.passed, rep.failures()
    names = [c.name for c in rep.checks]
    assert "rho(G_s^2) < theta" in names
    assert ("p(n,s) > 0" in names) == (a <= 2 / 3)
    assert ("Phi(2,n) > 0" in names) == (a > 2 / 3)


def test_clique_family_audit_strict_margin_grid():
    for a in (0, 0.25, 0.5, 2 / 3, 0.7, 0.8):
        n0 = max(7, int(-(-f_alpha(a) // 1)))
        for n in range(n0, n0 + 12):
            for rep in audit_claim1_all_s(n, a):
                assert rep.passed, (rep.params, rep.failures())
                (d,) = [c for c in rep.checks if c.name == "rho(G_s^2) < theta"]
                assert d.margin > 1e-6


def test_clique_family_audit_preconditions():
    with pytest.raises(PreconditionError):
        audit_claim1_section3(9, 1, 0.5)
    with pytest.raises(PreconditionError):
        audit_claim1_section3(9, 5, 0.5)
    with pytest.raises(PreconditionError):
        audit_claim1_section3(19, 4, 0.8)


@pytest.mark.parametrize("n,t,a,c", [(16, 1, 0.5, 3), (41, 2, 0.6, 3), (16, 1, 0.5, 5)])
def test_t12_examples(n, t, a, c):
    rep = audit_theorem12_chain(n, t, a, c)
    assert rep.passed, rep.failures()


def test_t12_all_c_and_grid():
    for t in (1, 2):
        for a in (0.5, 0.6, 0.7, 0.74):
            from alphatough import theorem12_min_order

            n0 = theorem12_min_order(t, a)
            for n in (n0, n0 + 1, n0 + 7):
                reps = audit_theorem12_all_c(n, t, a)
                assert len(reps) == (n + 1) // (t + 1) - 2
                assert all(r.passed for r in reps)


def test_t12_preconditions():
    with pytest.raises(PreconditionError):
        audit_theorem12_chain(15, 1, 0.5, 3)
    with pytest.raises(PreconditionError):
        audit_theorem12_chain(16, 1, 0.5, 2)
    with pytest.raises(PreconditionError):
        audit_theorem12_chain(16, 1, 0.5, 9)
    with pytest.raises(PreconditionError):
        audit_theorem12_chain(16, 1, 0.8, 3)


def test_psi_negative_on_grid():
    for t in (1, 2, 3):
        for a in (0.5, 0.55, 0.6, 0.65, 0.7, 0.74):
            from alphatough import theorem12_min_order

            for n in range(theorem12_min_order(t, a), 200):
                assert g3_bound_numerator(n, t, a) < 0


def test_check_margins():
    assert AuditCheck("x", 1.0, ">", 0.5, 1e-8).margin == 0.5
    assert AuditCheck("x", 1.0, "<", 0.5, 1e-8).margin == -0.5
    assert not AuditCheck("x", 1.0, "<", 0.5, 1e-8).passed
    eq = AuditCheck("x", 1.0, "=", 1.0, 1e-8)
    assert eq.passed and str(eq.margin) == "0.0"
    assert not AuditCheck("x", 1.0, "=", 1.1, 1e-8).passed
