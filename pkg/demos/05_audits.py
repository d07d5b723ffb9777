"""Walk through the inequality chains behind the two toughness conditions."""
from alphatough import audit_claim1_section3, audit_theorem12_chain

print("== PROOF-CHAIN AUDITS ==================================")


def show(rep):
    print(f"   {rep.audit} {rep.params}: {'all pass' if rep.passed else 'FAILURES'}")
    for c in rep.checks:
        print(f"     {'ok ' if c.passed else 'BAD'} {c.name:40s} margin={c.margin:+.3e}")


print("1. larger cliques in K_s v (K_{n-2s} u sK_1) lower the radius")
show(audit_claim1_section3(9, 2, 0.5))

print("2. the same above alpha = 2/3, where a different polynomial does the work")
show(audit_claim1_section3(20, 4, 0.8))

print("3. competitors for t = 1 with c = 3 components")
show(audit_theorem12_chain(16, 1, 0.5, 3))
