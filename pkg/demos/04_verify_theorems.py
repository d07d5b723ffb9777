"""Spectral conditions for toughness: individual verdicts and an exhaustive scan."""
import time

from alphatough import (
    check_theorem_1_1,
    check_theorem_1_2,
    complete,
    cycle,
    exhaustive_scan_theorem_1_1,
    family_g2,
    family_gs2,
    theorem11_threshold,
)

print("== SPECTRAL TOUGHNESS CONDITIONS =======================")

print("1. the threshold for n = 8 at alpha = 1/2:", theorem11_threshold(8, 0.5))

print("2. verdicts for three graphs on 8 vertices")
for name, g in [("K_1 v (K_6 u K_1)", family_gs2(8, 1)), ("K_8", complete(8)), ("C_8", cycle(8))]:
    v = check_theorem_1_1(g, 0.5)
    print(f"   {name:18s} margin={v.hypothesis_margin:+.3e} hyp={v.hypothesis_holds!s:5s} "
          f"1-tough={v.conclusion_holds!s:5s} extremal={v.is_extremal!s:5s} consistent={v.consistent}")

print("3. the t = 2 extremal graph on 41 vertices at alpha = 0.6")
v = check_theorem_1_2(family_g2(41, 2, 2), 0.6, 2, lazy=True)
print("   margin:", v.hypothesis_margin, " extremal:", v.is_extremal, " consistent:", v.consistent)

print("4. every connected labeled graph on 6 vertices")
start = time.perf_counter()
rep = exhaustive_scan_theorem_1_1(6, 0.5)
print("  ", rep.summary(), f"({time.perf_counter() - start:.2f}s)")
print("   meeting the spectral condition:", rep.hypothesis_true, " extremal copies:", rep.extremal)
