"""
Complete bipartite graphs
=========================

Every orientation of K_{m,n} maps into one target on m + 2**m vertices.
Vertex a_i stands for x_i and vertex b_S stands for the y-vertices whose
in-neighbourhood is exactly S. A matching orientation shows this is tight
when n >= 2**m.
"""

from orichrom import (
    bipartite_hom,
    bipartite_target,
    bipartite_tight_orientation,
    chi_o_undirected,
    complete_bipartite,
    is_oriented_clique,
    orientations,
    verify_homomorphism,
    write_dot,
)

target = bipartite_target(2)
print(write_dot(target.graph, target.labels))

# Map every orientation of K_{2,3} and show where the y-vertices land.
g = complete_bipartite(2, 3)
for d in list(orientations(g))[:4]:
    m = bipartite_hom(d, 2)
    assert verify_homomorphism(d, target.graph, m)
    print(sorted(d.arcs), "->", target.label_of(m))

# One orientation realises every subset S, and that orientation is an oriented clique.
tight = bipartite_tight_orientation(2, 4)
print("tight orientation is a clique:", is_oriented_clique(tight))

for m, n in [(1, 3), (2, 2), (2, 4), (3, 4)]:
    print(f"chi_o(K_{m},{n}) = {chi_o_undirected(complete_bipartite(m, n))}, m + min(n, 2^m) = {m + min(n, 2**m)}")
