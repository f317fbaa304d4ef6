"""
Products of oriented paths
==========================

Explicit colourings of grids built from directed paths, and what the exact
solver says about them.
"""

from orichrom import (
    c3_cartesian_path_hom,
    chi_o_oriented,
    circulant_tournament,
    directed_cycle,
    directed_path,
    is_oriented_clique,
    orientations,
    path,
    product_oriented,
    t7_strong_grid_hom,
    verify_homomorphism,
)

# Strong grid: 2j + i (mod 7) is a homomorphism into the circulant tournament
# with connection set {1, 2, 3}, for every size of grid.
t7 = circulant_tournament(7, {1, 2, 3})
grid = product_oriented("strong", directed_path(3), directed_path(3))
print("2j+i mod 7 verifies:", verify_homomorphism(grid, t7, t7_strong_grid_hom(3, 3)))

# The exact solver finds fewer colours are enough for the 3 x 3 strong grid:
# (i + j) mod 5 works, into the circulant tournament on Z_5 with set {1, 2}.
print("chi_o of the 3x3 strong grid:", chi_o_oriented(grid))
five = [(i + j) % 5 for i in range(3) for j in range(3)]
print("(i+j) mod 5 verifies:", verify_homomorphism(grid, circulant_tournament(5, {1, 2}), five))
for k in (4, 6, 8):
    big = product_oriented("strong", directed_path(k), directed_path(k))
    print(f"  {k}x{k} strong grid with (i+j) mod 5:",
          verify_homomorphism(big, circulant_tournament(5, {1, 2}), [(i + j) % 5 for i in range(k) for j in range(k)]))

# The lexicographic product of two directed 3-paths is an oriented clique on 9 vertices.
lex = product_oriented("lexicographic", directed_path(3), directed_path(3))
print("lexicographic: clique", is_oriented_clique(lex), "chi_o", chi_o_oriented(lex))

# Cartesian grids of arbitrarily oriented paths always map to the directed triangle.
c3 = directed_cycle(3)
ok = all(
    verify_homomorphism(product_oriented("cartesian", p, q), c3, c3_cartesian_path_hom(p, q))
    for p in orientations(path(5))
    for q in orientations(path(4))
)
print("every oriented 5x4 Cartesian grid maps to C3:", ok)
