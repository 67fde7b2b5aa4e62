"""Rooted simple outerplanar maps as glued dissections, and the bijection phi.

A map is drawn from coordinates, turned into a rotation system and walked
around its outer face. Each new biconnected component contributes a block
colored by its dissection.
"""

from collections import Counter

from schroeder import numbers as nb
from schroeder.maps import RotationSystem, canonical_serialize, enum_maps, phi, phi_inv

# a square with one diagonal, an edge hanging from it and a triangle on top
coords = [(-1, -1), (1, -1), (1, 1), (-1, 1), (1, -3), (-1.6, 2.6), (-3, 1)]
edges = [(0, 1), (1, 2), (2, 3), (3, 0), (2, 0), (1, 4), (3, 5), (5, 6), (6, 3)]
rs = RotationSystem.from_embedding(coords, edges, root=(0, 1))
q = phi(rs)
print("outer walk:", [v for v, _ in rs.outer_walk()])
print("phi:", q)
m = phi_inv(q)
print("components (dissection, merge point):", [(str(d), a) for d, a in m.components])
print("canonical form:", canonical_serialize(m).decode())
print("same map:", canonical_serialize(m) == canonical_serialize(rs))

print("\nall maps on three vertices (n = 2):")
for m in enum_maps(2):
    print(" ", canonical_serialize(m).decode())

print("\n n  maps  by components k = 1..n")
for n in range(1, 6):
    by_k = Counter(len(m.components) for m in enum_maps(n))
    row = [by_k[k] for k in range(1, n + 1)]
    assert row == [nb.maps_with_components(n, k) for k in range(1, n + 1)]
    print(f"{n:>2} {sum(row):>5}  {row}")
print("one component per edge (planted trees):", [nb.maps_with_components(n, n) for n in range(1, 9)])
