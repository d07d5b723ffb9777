"""Exact toughness with witnesses, and how it reacts to adding edges."""
from fractions import Fraction

from alphatough import complete, complete_bipartite, cycle, family_g2, family_gs2, is_t_tough, toughness

print("== EXACT TOUGHNESS =====================================")

print("1. a few textbook values")
for name, g in [("C_6", cycle(6)), ("K_{2,4}", complete_bipartite(2, 4)), ("K_5", complete(5))]:
    t = toughness(g)
    print(f"   {name:8s} t = {t}  witness = {sorted(t.witness) if t.witness else None}")

print("2. the pendant-vertex graph K_1 v (K_{n-2} u K_1) is only 1/2-tough")
for n in (6, 9, 12):
    t = toughness(family_gs2(n, 1))
    print(f"   n={n:2d}: t = {t}, removing {sorted(t.witness)} leaves {t.components} pieces")

print("3. t-tough predicates stop at the first violating set")
g = family_g2(41, 2, 2)
print("   K_3 v (K_37 u K_1) is 2-tough?", is_t_tough(g, 2))
print("   ...but 3/2-tough?", is_t_tough(g, Fraction(3, 2)))

print("4. adding an edge never lowers toughness")
g = cycle(7)
print("   C_7:", toughness(g), " C_7 + chord:", toughness(g.add_edge(0, 3)))
