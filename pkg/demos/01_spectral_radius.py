"""A_alpha matrices and their spectral radii on a few small graphs."""
import numpy as np

from alphatough import a_alpha_matrix, alpha_edge_bound, complete, cycle, family_gs2, spectral_radius, star

print("== A_alpha SPECTRAL RADIUS ==============================")

print("1. the matrix itself, for the star K_{1,3} at alpha = 1/2")
print(a_alpha_matrix(star(3), 0.5))

print("2. alpha = 0 is the adjacency matrix; the star has radius sqrt(3)")
print("   rho_0(K_{1,3}) =", spectral_radius(star(3), 0), " sqrt(3) =", np.sqrt(3))

print("3. complete graphs sit at n - 1 for every alpha")
for a in (0, 0.5, 1):
    print(f"   alpha={a}: rho(K_7) = {spectral_radius(complete(7), a):.12f}")

print("4. the edge-count bound versus the actual radius")
for g, name in [(cycle(8), "C_8"), (family_gs2(8, 1), "K_1 v (K_6 u K_1)"), (complete(8), "K_8")]:
    rho = spectral_radius(g, 0.6)
    bound = alpha_edge_bound(g.n, g.m, 0.6)
    print(f"   {name:18s} rho={rho:.6f} bound={bound:.6f} slack={bound - rho:.2e}")
