"""Reading and writing graph6 and edge lists."""
from alphatough import emit_edge_list, emit_graph6, family_g3, parse_edge_list, parse_graph6

print("== GRAPH I/O ===========================================")

print("1. decode a graph6 string")
g = parse_graph6("D?{")
print("   n =", g.n, " edges =", list(g.edges()))

print("2. round trip a larger construction")
h = family_g3(16, 1)
code = emit_graph6(h)
print("   graph6:", code.decode())
print("   identical after decoding:", parse_graph6(code) == h)

print("3. edge-list text")
text = emit_edge_list(g)
print(text, end="")
print("   parsed back:", parse_edge_list(text) == g)
