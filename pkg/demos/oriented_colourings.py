"""
Oriented colourings of small graphs
===================================

An oriented colouring of an oriented graph is a homomorphism into some
oriented graph on the colours. Different orientations of one undirected
graph can need different numbers of colours, and a single target that
receives all of them at once may need even more.
"""

from orichrom import (
    chi_o_oriented,
    chi_o_plus,
    chi_o_undirected,
    cycle,
    directed_cycle,
    directed_path,
    find_oriented_coloring,
    is_oriented_clique,
    orientations,
    path,
    verify_oriented_coloring,
)
from orichrom.solvers import upper_oriented_chromatic

# The triangle has 8 orientations. Each is a tournament and therefore an
# oriented clique, so each vertex needs its own colour.
triangle = cycle(3)
for d in orientations(triangle):
    print(sorted(d.arcs), "chi_o =", chi_o_oriented(d), "clique:", is_oriented_clique(d))
print("chi_o(C3) =", chi_o_undirected(triangle))

# Each orientation fits in 3 colours, but the cyclic and the transitive
# triangles need non-isomorphic targets. One target for both needs 4 vertices.
k, target = upper_oriented_chromatic(triangle, 5)
print("chi_o_plus(C3) =", k, "with target arcs", sorted(target.arcs))

# Colourings can be checked directly: all arcs between two colour classes
# must point the same way.
c5 = directed_cycle(5)
print("4 colours for the directed 5-cycle:", find_oriented_coloring(c5, 4))
print("5 colours:", find_oriented_coloring(c5, 5))
print("(0,1,0) on a directed 3-path valid?", verify_oriented_coloring(directed_path(3), [0, 1, 0]))

# Paths need 3 colours and one 3-vertex target (the directed triangle) serves them all.
print("chi_o_plus(P5) =", chi_o_plus(path(5), 4))
