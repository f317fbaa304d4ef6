"""
Universal tournaments
=====================

The smallest tournament containing every n-vertex tournament, compared with
Moon's bounds. Tournaments are enumerated one per isomorphism class.
"""

from orichrom import chi_o_plus, complete, moon_bounds, universal_tournament_size
from orichrom.solvers import tournament_classes, universal_tournament

for n in range(1, 8):
    print(f"{len(tournament_classes(n)):4d} tournaments on {n} vertices")

for n in range(1, 5):
    eps = universal_tournament_size(n)
    b = moon_bounds(n)
    print(f"epsilon({n}) = {eps}  bounds {b.lower_real:.4f} .. {float(b.upper):g}")

print("a 4-universal tournament:", sorted(universal_tournament(4).arcs))

# A tournament target for all orientations of K_n is exactly an n-universal tournament.
print("chi_o_plus(K3) =", chi_o_plus(complete(3), 5))
